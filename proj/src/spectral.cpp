#include "czoo/spectral.hpp"

#include <cmath>
#include <numeric>

namespace czoo {

namespace {

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

double l2_norm(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

void scale(std::vector<double>& v, double s) {
    for (double& x : v) x *= s;
}

// y = A x using out-edges (y_i = sum_j a_ij x_j), unweighted entries.
void adjacency_apply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sum += x[static_cast<std::size_t>(nb.node)];
        y[i] = sum;
    }
}

// y = A^T x (y_i = sum_j a_ji x_j).
void adjacency_apply_transposed(const Graph& g, const std::vector<double>& x,
                                std::vector<double>& y) {
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
            sum += x[static_cast<std::size_t>(nb.node)];
        y[i] = sum;
    }
}

struct PowerResult {
    std::vector<double> vector;  // unit L2
    double value = 0.0;          // dominant eigenvalue estimate for A
};

// Power iteration on A + I/2 with uniform positive start.
PowerResult shifted_power_iteration(const Graph& g, const IterationConfig& cfg) {
    const std::size_t n = g.node_count();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    double lambda_shifted = 0.5;
    for (long it = 0; it < cfg.max_iterations; ++it) {
        adjacency_apply(g, x, y);
        for (std::size_t i = 0; i < n; ++i) y[i] += 0.5 * x[i];
        double norm = l2_norm(y);
        if (norm == 0.0) return {x, -0.5};  // only possible if A = -I/2; not reachable here
        scale(y, 1.0 / norm);
        lambda_shifted = norm;
        double change = l1_diff(x, y);
        x.swap(y);
        if (change < cfg.tolerance) break;
    }
    return {std::move(x), lambda_shifted - 0.5};
}

}  // namespace

double spectral_radius_estimate(const Graph& g, const IterationConfig& cfg) {
    if (g.node_count() == 0 || g.edge_count() == 0) return 0.0;
    return shifted_power_iteration(g, cfg).value;
}

ScoreVector eigenvector_centrality(const Graph& g, const IterationConfig& cfg) {
    if (g.directed())
        throw_requirement("requires-undirected", "eigenvector centrality expects an undirected graph");
    if (!g.connected())
        throw_requirement("requires-connected",
                          "eigenvector centrality needs a connected graph for a unique "
                          "dominant eigenvector");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("eigenvector", n);
    if (n == 0) return sv;
    auto pr = shifted_power_iteration(g, cfg);
    // The Perron vector of a connected graph is positive; flip sign if the
    // iteration converged to the negative orientation (it cannot, starting
    // uniform, but keep the result canonical).
    double total = std::accumulate(pr.vector.begin(), pr.vector.end(), 0.0);
    if (total < 0.0) scale(pr.vector, -1.0);
    // Residual acceptance: ||Ax - lambda x||_2 <= 1e-10 lambda.
    std::vector<double> ax(n, 0.0);
    adjacency_apply(g, pr.vector, ax);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ax[i] - pr.value * pr.vector[i];
        res += r * r;
    }
    res = std::sqrt(res);
    if (pr.value > 0.0 && res > 1e-10 * pr.value) {
        throw_convergence("no-convergence",
                          "power iteration residual " + std::to_string(res) +
                              " exceeds tolerance after max iterations");
    }
    sv.values = std::move(pr.vector);
    sv.extras["lambda-max"] = pr.value;
    return sv;
}

ScoreVector katz(const Graph& g, double alpha, double exogenous, const IterationConfig& cfg) {
    const std::size_t n = g.node_count();
    const bool alpha_mode = exogenous != 0.0;
    auto sv = ScoreVector::zeros(alpha_mode ? "alpha-centrality" : "katz", n);
    if (n == 0) return sv;
    if (!(alpha > 0.0)) throw_usage("bad-param", "katz requires alpha > 0");
    double lambda = spectral_radius_estimate(g, cfg);
    if (lambda > 0.0 && alpha >= 1.0 / lambda) {
        throw_usage("katz-divergent", "alpha " + std::to_string(alpha) +
                                          " is not below 1/lambda_max = " +
                                          std::to_string(1.0 / lambda));
    }
    // b = alpha A 1 for the walk series, or beta 1 in exogenous mode.
    std::vector<double> b(n, 0.0);
    if (alpha_mode) {
        b.assign(n, exogenous);
    } else {
        std::vector<double> ones(n, 1.0);
        adjacency_apply(g, ones, b);
        scale(b, alpha);
    }
    std::vector<double> x = b;
    std::vector<double> ax(n, 0.0);
    for (long it = 0; it < cfg.max_iterations; ++it) {
        adjacency_apply(g, x, ax);
        for (std::size_t i = 0; i < n; ++i) ax[i] = alpha * ax[i] + b[i];
        double change = l1_diff(ax, x);
        x.swap(ax);
        if (change < cfg.tolerance) {
            sv.values = std::move(x);
            return sv;
        }
    }
    throw_convergence("no-convergence", "katz fixed point did not converge");
}

ScoreVector pagerank(const Graph& g, double alpha, const IterationConfig& cfg) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw_usage("bad-param", "pagerank requires 0 <= alpha < 1");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("pagerank", n);
    if (n == 0) return sv;
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (long it = 0; it < cfg.max_iterations; ++it) {
        double dangling = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.out_degree(static_cast<node_id>(j)) == 0) dangling += x[j];
        double base = (1.0 - alpha) / static_cast<double>(n) +
                      alpha * dangling / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(i))) {
                auto j = static_cast<std::size_t>(nb.node);
                sum += x[j] / static_cast<double>(g.out_degree(nb.node));
            }
            next[i] = alpha * sum + base;
        }
        double change = l1_diff(next, x);
        x.swap(next);
        if (change < cfg.tolerance) break;
    }
    sv.values = std::move(x);
    return sv;
}

std::pair<ScoreVector, ScoreVector> hits(const Graph& g, const IterationConfig& cfg) {
    const std::size_t n = g.node_count();
    auto hub = ScoreVector::zeros("hits-hub", n);
    auto authority = ScoreVector::zeros("hits-authority", n);
    if (n == 0) return {hub, authority};
    if (g.edge_count() == 0) {
        hub.warn("graph has no links; hub and authority scores are all zero");
        authority.warn("graph has no links; hub and authority scores are all zero");
        return {hub, authority};
    }
    std::vector<double> h(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> a(n, 0.0), tmp(n, 0.0);
    for (long it = 0; it < cfg.max_iterations; ++it) {
        adjacency_apply_transposed(g, h, tmp);  // a = A^T h
        double na = l2_norm(tmp);
        if (na > 0.0) scale(tmp, 1.0 / na);
        double change_a = l1_diff(tmp, a);
        a.swap(tmp);
        adjacency_apply(g, a, tmp);  // h = A a
        double nh = l2_norm(tmp);
        if (nh > 0.0) scale(tmp, 1.0 / nh);
        double change_h = l1_diff(tmp, h);
        h.swap(tmp);
        if (change_a + change_h < cfg.tolerance) break;
    }
    hub.values = std::move(h);
    authority.values = std::move(a);
    return {std::move(hub), std::move(authority)};
}

ScoreVector leaderrank(const Graph& g, const IterationConfig& cfg) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("leaderrank", n);
    if (n == 0) return sv;
    // Ground node index n, linked both ways with every node; walk follows
    // out-edges with uniform splitting. The update runs in lazy form
    // s <- (s + P^T s)/2, which has the same fixed point and converges even
    // when the augmented chain is periodic.
    std::vector<double> s(n + 1, 1.0);
    s[n] = 0.0;
    std::vector<double> next(n + 1, 0.0);
    auto out_deg = [&](std::size_t j) -> double {
        if (j == n) return static_cast<double>(n);
        return static_cast<double>(g.out_degree(static_cast<node_id>(j))) + 1.0;
    };
    bool converged = false;
    for (long it = 0; it < cfg.max_iterations && !converged; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = s[n] / out_deg(n);  // vote from the ground node
            for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
                sum += s[static_cast<std::size_t>(nb.node)] / out_deg(static_cast<std::size_t>(nb.node));
            next[i] = sum;
        }
        double ground = 0.0;
        for (std::size_t j = 0; j < n; ++j) ground += s[j] / out_deg(j);
        next[n] = ground;
        for (std::size_t i = 0; i <= n; ++i) next[i] = 0.5 * (next[i] + s[i]);
        converged = l1_diff(next, s) < cfg.tolerance;
        s.swap(next);
    }
    if (!converged)
        throw_convergence("no-convergence", "leaderrank iteration did not reach steady state");
    for (std::size_t i = 0; i < n; ++i) sv.values[i] = s[i] + s[n] / static_cast<double>(n);
    return sv;
}

ScoreVector hubbell_general(const std::vector<double>& w_row_major, std::size_t n,
                            const std::vector<double>& exogenous, const IterationConfig& cfg) {
    if (w_row_major.size() != n * n || exogenous.size() != n)
        throw_usage("bad-param", "hubbell matrix/vector dimensions do not match");
    ScoreVector sv = ScoreVector::zeros("hubbell", n);
    if (n == 0) return sv;
    std::vector<double> x = exogenous;
    std::vector<double> next(n, 0.0);
    for (long it = 0; it < cfg.max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = exogenous[i];
            const double* row = w_row_major.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) sum += row[j] * x[j];
            next[i] = sum;
        }
        double change = l1_diff(next, x);
        double magnitude = 0.0;
        for (double v : next) magnitude = std::max(magnitude, std::abs(v));
        x.swap(next);
        if (magnitude > 1e150)
            throw_convergence("hubbell-divergent",
                              "hubbell iteration diverged; spectral radius of W is >= 1");
        if (change < cfg.tolerance) {
            sv.values = std::move(x);
            return sv;
        }
    }
    throw_convergence("hubbell-divergent",
                      "hubbell iteration did not converge; spectral radius of W is likely >= 1");
}

ScoreVector hubbell(const Graph& g, std::optional<double> w_scale, double exogenous,
                    const IterationConfig& cfg) {
    const std::size_t n = g.node_count();
    if (n == 0) return ScoreVector::zeros("hubbell", n);
    double scale_value = w_scale.value_or(n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.0);
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            w[i * n + static_cast<std::size_t>(nb.node)] = scale_value * nb.weight;
    std::vector<double> e(n, exogenous);
    auto sv = hubbell_general(w, n, e, cfg);
    return sv;
}

}  // namespace czoo
