#include "czoo/rank_compare.hpp"

#include <cmath>

#include "czoo/error.hpp"

namespace czoo {

double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw_usage("bad-param", "kendall tau inputs differ in length");
    const std::size_t n = x.size();
    if (n < 2) throw_usage("comparison-underflow", "kendall tau needs at least two entries");
    double concordant = 0.0, discordant = 0.0;
    double ties_x = 0.0, ties_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dx = x[i] - x[j];
            double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;  // joint tie: excluded from all counts
            if (dx == 0.0) {
                ties_x += 1.0;
            } else if (dy == 0.0) {
                ties_y += 1.0;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                concordant += 1.0;
            } else {
                discordant += 1.0;
            }
        }
    }
    double pairs_x = concordant + discordant + ties_y;  // pairs untied in x
    double pairs_y = concordant + discordant + ties_x;  // pairs untied in y
    double denom = std::sqrt(pairs_x * pairs_y);
    if (denom == 0.0) {
        throw_usage("comparison-degenerate",
                    "kendall tau undefined: one ranking is constant");
    }
    return (concordant - discordant) / denom;
}

RankComparison compare_rankings(const ScoreVector& a, const ScoreVector& b) {
    if (a.size() != b.size())
        throw_usage("bad-param", "rankings computed on different graphs");
    std::vector<double> x, y;
    x.reserve(a.size());
    y.reserve(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.defined(i) && b.defined(i)) {
            x.push_back(a.values[i]);
            y.push_back(b.values[i]);
        }
    }
    if (x.size() < 2)
        throw_usage("comparison-underflow",
                    "fewer than two entries are defined for both measures");
    RankComparison rc;
    rc.measure_a = a.measure;
    rc.measure_b = b.measure;
    rc.n = x.size();
    rc.tau = kendall_tau_b(x, y);
    return rc;
}

}  // namespace czoo
