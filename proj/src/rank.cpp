#include "fdea/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fdea {

const char* to_string(OptimisticClass c) {
    return c == OptimisticClass::efficient ? "optimistic-efficient" : "optimistic-non-efficient";
}

const char* to_string(PessimisticClass c) {
    return c == PessimisticClass::inefficient ? "pessimistic-inefficient"
                                              : "pessimistic-non-inefficient";
}

Classification classify(double optimistic, double pessimistic, double tol) {
    if (!(optimistic > 0.0) || optimistic > 1.0 + tol)
        throw std::domain_error("optimistic efficiency outside (0, 1]: " +
                                std::to_string(optimistic));
    if (pessimistic < 1.0 - tol)
        throw std::domain_error("pessimistic efficiency below 1: " +
                                std::to_string(pessimistic));
    Classification c;
    c.optimistic = std::fabs(optimistic - 1.0) <= tol ? OptimisticClass::efficient
                                                      : OptimisticClass::non_efficient;
    c.pessimistic = std::fabs(pessimistic - 1.0) <= tol ? PessimisticClass::inefficient
                                                        : PessimisticClass::non_inefficient;
    return c;
}

double geometric(double optimistic, double pessimistic) {
    if (!(optimistic > 0.0) || !(pessimistic > 0.0))
        throw std::domain_error("geometric average requires positive scores");
    return std::sqrt(optimistic * pessimistic);
}

std::vector<RankedScore> rank_dmus(const std::vector<std::pair<std::string, double>>& scores) {
    if (scores.empty()) throw std::invalid_argument("rank_dmus: no scores");
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a].second > scores[b].second;
    });
    std::vector<RankedScore> out;
    out.reserve(scores.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& [id, score] = scores[order[pos]];
        RankedScore r;
        r.id = id;
        r.score = score;
        // Competition rank: 1 + number of strictly better scores.
        int better = 0;
        for (const auto& other : scores)
            if (other.second > score) ++better;
        r.rank = better + 1;
        int equal = 0;
        for (const auto& other : scores)
            if (other.second == score) ++equal;
        r.tied = equal > 1;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b) {
    if (ranks_a.empty() || ranks_a.size() != ranks_b.size())
        throw std::invalid_argument("spearman: lists must be nonempty and equal-length");
    const auto ra = average_ranks(ranks_a);
    const auto rb = average_ranks(ranks_b);
    const double n = static_cast<double>(ra.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0)
        throw std::domain_error("spearman undefined for a constant rank list");
    return cov / std::sqrt(va * vb);
}

}  // namespace fdea
