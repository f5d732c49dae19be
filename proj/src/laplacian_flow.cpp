#include "czoo/laplacian_flow.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "czoo/parallel.hpp"

namespace czoo {

namespace {

void require_connected_undirected(const Graph& g, const char* measure) {
    if (g.directed())
        throw_requirement("requires-undirected", std::string(measure) +
                                                     " expects an undirected graph");
    if (!g.connected())
        throw_requirement("requires-connected", std::string(measure) +
                                                    " expects a connected graph");
}

double conductance(double cost) { return 1.0 / cost; }

// Columns of the grounded-Laplacian inverse (ground = node 0): M = L~^(-1)
// extended with zero row/column at the ground. Potentials from solves against
// this matrix are defined up to the grounding; resistance differences are
// exact.
struct GroundedInverse {
    Eigen::MatrixXd m;  // n x n, row/col 0 are zero
};

const GroundedInverse& grounded_inverse(const Graph& g) {
    return g.cached<GroundedInverse>([&] {
        const auto n = static_cast<Eigen::Index>(g.node_count());
        Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
        for (const auto& e : g.edges()) {
            double c = conductance(e.weight);
            lap(e.source, e.source) += c;
            lap(e.target, e.target) += c;
            lap(e.source, e.target) -= c;
            lap(e.target, e.source) -= c;
        }
        GroundedInverse inv;
        inv.m = Eigen::MatrixXd::Zero(n, n);
        if (n <= 1) return inv;
        Eigen::MatrixXd reduced = lap.bottomRightCorner(n - 1, n - 1);
        Eigen::LDLT<Eigen::MatrixXd> solver(reduced);
        if (solver.info() != Eigen::Success)
            throw_convergence("solver-failed", "grounded Laplacian factorization failed");
        Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n - 1, n - 1);
        inv.m.bottomRightCorner(n - 1, n - 1) = solver.solve(identity);
        return inv;
    });
}

}  // namespace

std::vector<std::vector<double>> effective_resistance_matrix(const Graph& g) {
    require_connected_undirected(g, "effective resistance");
    const std::size_t n = g.node_count();
    const auto& inv = grounded_inverse(g).m;
    std::vector<std::vector<double>> omega(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ii = static_cast<Eigen::Index>(i);
            auto jj = static_cast<Eigen::Index>(j);
            double r = inv(ii, ii) + inv(jj, jj) - 2.0 * inv(ii, jj);
            omega[i][j] = omega[j][i] = r;
        }
    return omega;
}

ScoreVector current_flow_closeness(const Graph& g) {
    require_connected_undirected(g, "current-flow closeness");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("current-flow-closeness", n);
    if (n == 1) {
        sv.warn("single-node graph; current-flow closeness set to 0");
        return sv;
    }
    auto omega = effective_resistance_matrix(g);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += omega[i][j];
        sv.values[i] = static_cast<double>(n - 1) / sum;
    }
    return sv;
}

ScoreVector current_flow_betweenness(const Graph& g) {
    require_connected_undirected(g, "current-flow betweenness");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("current-flow-betweenness", n);
    if (n <= 1) return sv;
    const auto& inv = grounded_inverse(g).m;

    // Unordered pairs, doubled at the end: on an undirected circuit the
    // (s,t) and (t,s) flows coincide.
    std::size_t pair_count = n * (n - 1) / 2;
    auto flows = parallel_accumulate(pair_count, n, [&](std::size_t pair_idx, std::vector<double>& acc) {
        // Decode the pair index into s < t.
        std::size_t s = 0, offset = pair_idx;
        while (offset >= n - 1 - s) {
            offset -= n - 1 - s;
            ++s;
        }
        std::size_t t = s + 1 + offset;
        auto si = static_cast<Eigen::Index>(s);
        auto ti = static_cast<Eigen::Index>(t);
        // Potentials for a unit current injected at s, extracted at t.
        for (const auto& e : g.edges()) {
            double phi_u = inv(e.source, si) - inv(e.source, ti);
            double phi_v = inv(e.target, si) - inv(e.target, ti);
            double current = (phi_u - phi_v) * conductance(e.weight);
            acc[static_cast<std::size_t>(e.source)] += 0.5 * std::abs(current);
            acc[static_cast<std::size_t>(e.target)] += 0.5 * std::abs(current);
        }
        // Interior formula counts endpoints at half their unit throughflow;
        // top them up to 1 each.
        acc[s] += 0.5;
        acc[t] += 0.5;
    });
    double norm = static_cast<double>(n) * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) sv.values[i] = 2.0 * flows[i] / norm;
    return sv;
}

ScoreVector markov_centrality(const Graph& g) {
    if (!g.connected())
        throw_requirement("requires-connected",
                          "markov centrality needs an irreducible chain (connected graph)");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("markov-centrality", n);
    if (n == 1) {
        sv.warn("single-node graph; markov centrality set to 0");
        return sv;
    }
    // Random-walk transition matrix with conductance-proportional steps.
    const auto size = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
    for (std::size_t u = 0; u < n; ++u) {
        double total = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(u)))
            total += conductance(nb.weight);
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(u)))
            p(static_cast<Eigen::Index>(u), nb.node) = conductance(nb.weight) / total;
    }
    // m_ji for all j by one absorbing solve per target i.
    parallel_for(n, [&](std::size_t i) {
        Eigen::Index m = size - 1;
        Eigen::MatrixXd a(m, m);
        for (Eigen::Index r = 0, rr = 0; r < size; ++r) {
            if (r == static_cast<Eigen::Index>(i)) continue;
            for (Eigen::Index c = 0, cc = 0; c < size; ++c) {
                if (c == static_cast<Eigen::Index>(i)) continue;
                a(rr, cc) = (r == c ? 1.0 : 0.0) - p(r, c);
                ++cc;
            }
            ++rr;
        }
        Eigen::VectorXd mfpt = a.partialPivLu().solve(Eigen::VectorXd::Ones(m));
        double sum = mfpt.sum();
        sv.values[i] = static_cast<double>(n - 1) / sum;
    });
    return sv;
}

}  // namespace czoo
