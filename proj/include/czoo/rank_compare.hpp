#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "czoo/scores.hpp"

namespace czoo {

struct RankComparison {
    std::string measure_a;
    std::string measure_b;
    double tau = 0.0;      // Kendall tau-b in [-1, 1]
    std::size_t n = 0;     // common defined entries
};

// Kendall tau-b (tie-corrected) over two equal-length series.
double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y);

// Tau over entries defined in both score vectors; errors when fewer than two
// common entries exist.
RankComparison compare_rankings(const ScoreVector& a, const ScoreVector& b);

}  // namespace czoo
