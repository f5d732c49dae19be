#include "czoo/communicability.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace czoo {

namespace {

constexpr std::size_t kDenseGuard = 5000;

void require_dense_ok(const Graph& g, const char* measure) {
    if (g.directed())
        throw_requirement("requires-undirected",
                          std::string(measure) + " expects an undirected graph");
    if (g.node_count() > kDenseGuard)
        throw_requirement("graph-too-large",
                          std::string(measure) + " uses a dense eigendecomposition and is "
                          "capped at 5000 nodes; use a truncated walk series for larger graphs");
}

// Weighted scores c(i) = sum_k f(lambda_k) v_k(i)^2.
ScoreVector spectral_diag(const Graph& g, const char* name, double (*f)(double)) {
    const auto& spec = adjacency_spectrum(g);
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros(name, n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = f(spec.eigenvalues[k]);
        const auto& v = spec.eigenvectors[k];
        for (std::size_t i = 0; i < n; ++i) sv.values[i] += v[i] * v[i] * w;
    }
    return sv;
}

}  // namespace

const SpectrumCache& adjacency_spectrum(const Graph& g) {
    return g.cached<SpectrumCache>([&] {
        const auto n = static_cast<Eigen::Index>(g.node_count());
        // Walk counting uses the 0/1 adjacency matrix; weights do not enter
        // the closed-walk formulas.
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (const auto& e : g.edges()) {
            a(e.source, e.target) = 1.0;
            a(e.target, e.source) = 1.0;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
        if (solver.info() != Eigen::Success)
            throw_convergence("eigensolver-failed", "adjacency eigendecomposition failed");
        SpectrumCache cache;
        cache.eigenvalues.resize(static_cast<std::size_t>(n));
        cache.eigenvectors.resize(static_cast<std::size_t>(n));
        // Eigen returns ascending order; store descending.
        for (Eigen::Index k = 0; k < n; ++k) {
            Eigen::Index src = n - 1 - k;
            cache.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(src);
            auto& v = cache.eigenvectors[static_cast<std::size_t>(k)];
            v.resize(static_cast<std::size_t>(n));
            for (Eigen::Index i = 0; i < n; ++i)
                v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, src);
        }
        return cache;
    });
}

ScoreVector subgraph_centrality(const Graph& g) {
    require_dense_ok(g, "subgraph centrality");
    return spectral_diag(g, "subgraph", [](double l) { return std::exp(l); });
}

ScoreVector odd_subgraph(const Graph& g) {
    require_dense_ok(g, "odd subgraph centrality");
    return spectral_diag(g, "odd-subgraph", [](double l) { return std::sinh(l); });
}

ScoreVector even_subgraph(const Graph& g) {
    require_dense_ok(g, "even subgraph centrality");
    return spectral_diag(g, "even-subgraph", [](double l) { return std::cosh(l); });
}

ScoreVector total_communicability(const Graph& g) {
    require_dense_ok(g, "total communicability");
    const auto& spec = adjacency_spectrum(g);
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("total-communicability", n);
    // Row sums of e^A: sum_k e^{lambda_k} v_k(i) (sum_j v_k(j)).
    for (std::size_t k = 0; k < n; ++k) {
        double colsum = 0.0;
        for (double x : spec.eigenvectors[k]) colsum += x;
        double w = std::exp(spec.eigenvalues[k]) * colsum;
        for (std::size_t i = 0; i < n; ++i) sv.values[i] += spec.eigenvectors[k][i] * w;
    }
    return sv;
}

ScoreVector resolvent_centrality(const Graph& g, std::optional<double> s) {
    require_dense_ok(g, "resolvent centrality");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("resolvent", n);
    if (n == 0) return sv;
    const auto& spec = adjacency_spectrum(g);
    double lambda_max = spec.eigenvalues.front();
    double penalty = s.value_or(n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.5);
    if (!(penalty > 0.0) || (lambda_max > 0.0 && penalty >= 1.0 / lambda_max)) {
        throw_usage("s-out-of-range",
                    "resolvent penalty s must lie in (0, 1/lambda_max); got s = " +
                        std::to_string(penalty) + " with lambda_max = " +
                        std::to_string(lambda_max));
    }
    for (std::size_t k = 0; k < n; ++k) {
        double w = 1.0 / (1.0 - penalty * spec.eigenvalues[k]);
        const auto& v = spec.eigenvectors[k];
        for (std::size_t i = 0; i < n; ++i) sv.values[i] += v[i] * v[i] * w;
    }
    sv.extras["s"] = penalty;
    return sv;
}

std::pair<double, ScoreVector> bipartivity(const Graph& g) {
    require_dense_ok(g, "bipartivity");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("bipartivity", n);
    if (n == 0) return {1.0, sv};
    const auto& spec = adjacency_spectrum(g);
    double even_total = 0.0, all_total = 0.0;
    std::vector<double> even(n, 0.0), all(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double lc = std::cosh(spec.eigenvalues[k]);
        double le = std::exp(spec.eigenvalues[k]);
        even_total += lc;
        all_total += le;
        const auto& v = spec.eigenvectors[k];
        for (std::size_t i = 0; i < n; ++i) {
            even[i] += v[i] * v[i] * lc;
            all[i] += v[i] * v[i] * le;
        }
    }
    for (std::size_t i = 0; i < n; ++i) sv.values[i] = even[i] / all[i];
    double global = even_total / all_total;
    sv.extras["global"] = global;
    return {global, sv};
}

}  // namespace czoo
