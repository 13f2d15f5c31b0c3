#pragma once

#include <vector>

namespace fdea {

/// Closed interval [lower, upper].
struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Triangular fuzzy number (lo, mid, hi) with piecewise-linear membership
/// peaking at mid. Immutable after construction; construction validates
/// lo <= mid <= hi and finiteness (throws std::invalid_argument).
struct TFN {
    double lo  = 0.0;
    double mid = 0.0;
    double hi  = 0.0;

    TFN() = default;
    TFN(double lo_, double mid_, double hi_);

    static TFN crisp(double v) { return TFN(v, v, v); }

    bool is_crisp() const { return lo == mid && mid == hi; }
    bool is_nonnegative() const { return lo >= 0.0; }
    bool is_positive() const { return lo > 0.0; }
    /// Strictly fuzzy = the support has nonzero width.
    bool is_strictly_fuzzy() const { return lo < hi; }

    bool operator==(const TFN&) const = default;
};

/// Componentwise sum.
TFN add(const TFN& a, const TFN& b);
/// (a.lo - b.hi, a.mid - b.mid, a.hi - b.lo); note a - a is not crisp zero.
TFN sub(const TFN& a, const TFN& b);
/// Componentwise product approximation; both operands must be positive
/// (throws std::domain_error otherwise).
TFN mul(const TFN& a, const TFN& b);
/// (a.lo / b.hi, a.mid / b.mid, a.hi / b.lo) approximation; both operands
/// must be positive (throws std::domain_error otherwise).
TFN div(const TFN& a, const TFN& b);

inline TFN operator+(const TFN& a, const TFN& b) { return add(a, b); }
inline TFN operator-(const TFN& a, const TFN& b) { return sub(a, b); }
inline TFN operator*(const TFN& a, const TFN& b) { return mul(a, b); }
inline TFN operator/(const TFN& a, const TFN& b) { return div(a, b); }

/// Membership grade of w: linear ramp up on [lo, mid], down on [mid, hi],
/// exactly 1 at mid, 0 outside the open support. When a side is degenerate
/// the other branch alone defines the function (limit behaviour).
double membership(const TFN& a, double w);

/// Alpha-cut [lo + a*(mid-lo), hi - a*(hi-mid)] for alpha in [0, 1]
/// (throws std::out_of_range otherwise). alpha = 0 returns the closed
/// support, alpha = 1 the modal point.
Interval alpha_cut(const TFN& a, double alpha);

/// Fuzzify raw observations as (min, arithmetic mean, max).
/// Throws std::invalid_argument on an empty sample list.
TFN from_observations(const std::vector<double>& samples);

}  // namespace fdea
