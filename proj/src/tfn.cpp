#include "fdea/tfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fdea {

namespace {

std::string triple_str(double lo, double mid, double hi) {
    return "(" + std::to_string(lo) + ", " + std::to_string(mid) + ", " +
           std::to_string(hi) + ")";
}

void require_positive(const TFN& a, const char* op) {
    if (!a.is_positive())
        throw std::domain_error(std::string(op) +
                                " requires positive operands, got " +
                                triple_str(a.lo, a.mid, a.hi));
}

}  // namespace

TFN::TFN(double lo_, double mid_, double hi_) : lo(lo_), mid(mid_), hi(hi_) {
    if (!(std::isfinite(lo) && std::isfinite(mid) && std::isfinite(hi)))
        throw std::invalid_argument("TFN components must be finite, got " +
                                    triple_str(lo, mid, hi));
    if (!(lo <= mid && mid <= hi))
        throw std::invalid_argument("TFN ordering violated (need lo <= mid <= hi): " +
                                    triple_str(lo, mid, hi));
}

TFN add(const TFN& a, const TFN& b) {
    return TFN(a.lo + b.lo, a.mid + b.mid, a.hi + b.hi);
}

TFN sub(const TFN& a, const TFN& b) {
    return TFN(a.lo - b.hi, a.mid - b.mid, a.hi - b.lo);
}

TFN mul(const TFN& a, const TFN& b) {
    require_positive(a, "mul");
    require_positive(b, "mul");
    return TFN(a.lo * b.lo, a.mid * b.mid, a.hi * b.hi);
}

TFN div(const TFN& a, const TFN& b) {
    require_positive(a, "div");
    require_positive(b, "div");
    return TFN(a.lo / b.hi, a.mid / b.mid, a.hi / b.lo);
}

double membership(const TFN& a, double w) {
    if (w == a.mid) return 1.0;
    if (w <= a.lo || w >= a.hi) return 0.0;
    if (w < a.mid) return (w - a.lo) / (a.mid - a.lo);
    return (a.hi - w) / (a.hi - a.mid);
}

Interval alpha_cut(const TFN& a, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::out_of_range("alpha must lie in [0, 1], got " +
                                std::to_string(alpha));
    return Interval{a.lo + alpha * (a.mid - a.lo), a.hi - alpha * (a.hi - a.mid)};
}

TFN from_observations(const std::vector<double>& samples) {
    if (samples.empty())
        throw std::invalid_argument("from_observations: empty sample list");
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    double mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                  static_cast<double>(samples.size());
    // Guard against rounding pushing the mean a hair outside [min, max].
    mean = std::clamp(mean, *mn, *mx);
    return TFN(*mn, mean, *mx);
}

}  // namespace fdea
