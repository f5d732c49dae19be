#include "support/naive.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace naive {

namespace {

std::size_t n_of(const Graph& g) { return g.node_count(); }

Eigen::MatrixXd adjacency(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.source, e.target) = 1.0;
        if (!g.directed()) a(e.target, e.source) = 1.0;
    }
    return a;
}

Eigen::MatrixXd laplacian_conductance(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        double c = 1.0 / e.weight;
        l(e.source, e.source) += c;
        l(e.target, e.target) += c;
        l(e.source, e.target) -= c;
        l(e.target, e.source) -= c;
    }
    return l;
}

// Moore-Penrose pseudoinverse of the Laplacian via eigendecomposition.
Eigen::MatrixXd laplacian_pinv(const Graph& g) {
    Eigen::MatrixXd l = laplacian_conductance(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    Eigen::VectorXd vals = es.eigenvalues();
    Eigen::MatrixXd vecs = es.eigenvectors();
    Eigen::VectorXd inv = vals;
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        inv(i) = std::abs(vals(i)) > 1e-10 ? 1.0 / vals(i) : 0.0;
    return vecs * inv.asDiagonal() * vecs.transpose();
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& e : g.edges()) {
        auto u = static_cast<std::size_t>(e.source), v = static_cast<std::size_t>(e.target);
        d[u][v] = std::min(d[u][v], e.weight);
        if (!g.directed()) d[v][u] = std::min(d[v][u], e.weight);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

namespace {

void enumerate_paths_rec(const Graph& g, const std::vector<std::vector<double>>& d, node_id cur,
                         node_id t, std::vector<node_id>& prefix,
                         std::vector<std::vector<node_id>>& out) {
    if (cur == t) {
        out.push_back(prefix);
        return;
    }
    auto ci = static_cast<std::size_t>(cur);
    auto ti = static_cast<std::size_t>(t);
    for (const czoo::Neighbor& nb : g.out_neighbors(cur)) {
        auto ui = static_cast<std::size_t>(nb.node);
        double via = nb.weight + d[ui][ti];
        if (std::isfinite(d[ui][ti]) &&
            std::abs(via - d[ci][ti]) <= 1e-12 * std::max(1.0, std::abs(d[ci][ti]))) {
            prefix.push_back(nb.node);
            enumerate_paths_rec(g, d, nb.node, t, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<node_id>> enumerate_shortest_paths(const Graph& g, node_id s, node_id t) {
    auto d = floyd_warshall(g);
    std::vector<std::vector<node_id>> out;
    if (!std::isfinite(d[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) || s == t)
        return out;
    std::vector<node_id> prefix{s};
    enumerate_paths_rec(g, d, s, t, prefix, out);
    return out;
}

namespace {

// Shared scaffold for the enumeration-based betweenness family. Calls
// visit(path, j, k, sigma_jk) for every shortest path of every ordered pair.
template <class Visit>
void for_all_geodesics(const Graph& g, const Visit& visit) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k || !std::isfinite(d[j][k])) continue;
            std::vector<std::vector<node_id>> paths;
            std::vector<node_id> prefix{static_cast<node_id>(j)};
            enumerate_paths_rec(g, d, static_cast<node_id>(j), static_cast<node_id>(k), prefix,
                                paths);
            for (const auto& path : paths)
                visit(path, static_cast<node_id>(j), static_cast<node_id>(k),
                      static_cast<double>(paths.size()), d[j][k]);
        }
    }
}

}  // namespace

std::vector<double> betweenness(const Graph& g) {
    std::vector<double> c(n_of(g), 0.0);
    for_all_geodesics(g, [&](const std::vector<node_id>& path, node_id j, node_id k, double sigma,
                             double) {
        for (std::size_t p = 1; p + 1 < path.size(); ++p)
            c[static_cast<std::size_t>(path[p])] += 1.0 / sigma;
        (void)j;
        (void)k;
    });
    return c;
}

std::vector<double> stress(const Graph& g) {
    std::vector<double> c(n_of(g), 0.0);
    for_all_geodesics(g, [&](const std::vector<node_id>& path, node_id, node_id, double, double) {
        for (std::size_t p = 1; p + 1 < path.size(); ++p)
            c[static_cast<std::size_t>(path[p])] += 1.0;
    });
    return c;
}

std::vector<double> k_betweenness(const Graph& g, int k) {
    std::vector<double> c(n_of(g), 0.0);
    for_all_geodesics(g, [&](const std::vector<node_id>& path, node_id, node_id, double sigma,
                             double dist) {
        if (dist > static_cast<double>(k)) return;
        for (std::size_t p = 1; p + 1 < path.size(); ++p)
            c[static_cast<std::size_t>(path[p])] += 1.0 / sigma;
    });
    return c;
}

std::vector<double> length_scaled_betweenness(const Graph& g) {
    std::vector<double> c(n_of(g), 0.0);
    for_all_geodesics(g, [&](const std::vector<node_id>& path, node_id, node_id, double sigma,
                             double dist) {
        for (std::size_t p = 1; p + 1 < path.size(); ++p)
            c[static_cast<std::size_t>(path[p])] += 1.0 / (sigma * dist);
    });
    return c;
}

std::vector<double> endpoint_betweenness(const Graph& g) {
    std::vector<double> c(n_of(g), 0.0);
    for_all_geodesics(g, [&](const std::vector<node_id>& path, node_id, node_id, double sigma,
                             double) {
        for (node_id v : path) c[static_cast<std::size_t>(v)] += 1.0 / sigma;
    });
    return c;
}

std::vector<double> closeness(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += d[i][j];
        c[i] = sum > 0.0 ? static_cast<double>(n - 1) / sum : 0.0;
    }
    return c;
}

std::vector<double> harmonic(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && std::isfinite(d[i][j])) c[i] += 1.0 / d[i][j];
    return c;
}

std::vector<double> gravity_model(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !std::isfinite(d[i][j])) continue;
            c[i] += static_cast<double>(g.degree(static_cast<node_id>(i))) *
                    static_cast<double>(g.degree(static_cast<node_id>(j))) / (d[i][j] * d[i][j]);
        }
    return c;
}

std::vector<double> eigenvector(const Graph& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g));
    Eigen::VectorXd v = es.eigenvectors().col(es.eigenvectors().cols() - 1);
    if (v.sum() < 0.0) v = -v;
    v.normalize();
    return to_std(v);
}

std::vector<double> katz(const Graph& g, double alpha) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd a = adjacency(g);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd x = (Eigen::MatrixXd::Identity(n, n) - alpha * a).lu().solve(ones);
    return to_std(x - ones);
}

std::vector<double> pagerank(const Graph& g, double alpha) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);  // m(i, j) = P(j -> i)
    for (Eigen::Index j = 0; j < n; ++j) {
        auto out = g.out_neighbors(static_cast<node_id>(j));
        if (out.empty()) {
            for (Eigen::Index i = 0; i < n; ++i) m(i, j) = 1.0 / static_cast<double>(n);
        } else {
            for (const czoo::Neighbor& nb : out) m(nb.node, j) = 1.0 / static_cast<double>(out.size());
        }
    }
    Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - alpha) / static_cast<double>(n));
    Eigen::VectorXd x = (Eigen::MatrixXd::Identity(n, n) - alpha * m).lu().solve(b);
    return to_std(x);
}

namespace {

std::vector<double> principal_nonneg(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::Index last = es.eigenvectors().cols() - 1;
    if (es.eigenvalues()(last) <= 1e-12) return std::vector<double>(static_cast<std::size_t>(m.rows()), 0.0);
    Eigen::VectorXd v = es.eigenvectors().col(last);
    if (v.sum() < 0.0) v = -v;
    v.normalize();
    return to_std(v);
}

}  // namespace

std::vector<double> hits_hub(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    return principal_nonneg(a * a.transpose());
}

std::vector<double> hits_authority(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    return principal_nonneg(a.transpose() * a);
}

std::vector<double> leaderrank(const Graph& g) {
    const std::size_t n = n_of(g);
    const auto m = static_cast<Eigen::Index>(n + 1);
    // Augmented transition matrix; ground node = index n.
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t j = 0; j < n; ++j) {
        double deg = static_cast<double>(g.out_degree(static_cast<node_id>(j))) + 1.0;
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(j)))
            p(static_cast<Eigen::Index>(j), nb.node) = 1.0 / deg;
        p(static_cast<Eigen::Index>(j), m - 1) = 1.0 / deg;
    }
    for (std::size_t i = 0; i < n; ++i) p(m - 1, static_cast<Eigen::Index>(i)) = 1.0 / static_cast<double>(n);
    // Solve s = P^T s with total mass n (one equation replaced by the
    // normalization).
    Eigen::MatrixXd a = p.transpose() - Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    a.row(m - 1) = Eigen::RowVectorXd::Ones(m);
    b(m - 1) = static_cast<double>(n);
    Eigen::VectorXd s = a.fullPivLu().solve(b);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) c[i] = s(static_cast<Eigen::Index>(i)) + s(m - 1) / static_cast<double>(n);
    return c;
}

std::vector<double> hubbell(const Graph& g, double w_scale, double e) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (const auto& edge : g.edges()) {
        w(edge.source, edge.target) = w_scale * edge.weight;
        if (!g.directed()) w(edge.target, edge.source) = w_scale * edge.weight;
    }
    Eigen::VectorXd ev = Eigen::VectorXd::Constant(n, e);
    Eigen::VectorXd x = (Eigen::MatrixXd::Identity(n, n) - w).lu().solve(ev);
    return to_std(x);
}

std::vector<std::vector<double>> expm_taylor(const Graph& g, int terms) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= terms; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    std::vector<std::vector<double>> out(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum(i, j);
    return out;
}

namespace {

Eigen::MatrixXd expm_dense(Eigen::MatrixXd a) {
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    a /= std::pow(2.0, squarings);
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 20; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace

std::vector<std::vector<double>> expm_adjacency(const Graph& g) {
    Eigen::MatrixXd e = expm_dense(adjacency(g));
    const auto n = e.rows();
    std::vector<std::vector<double>> out(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e(i, j);
    return out;
}

std::vector<double> subgraph(const Graph& g) {
    auto e = expm_adjacency(g);
    std::vector<double> c(n_of(g));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = e[i][i];
    return c;
}

std::vector<double> odd_subgraph(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd ep = expm_dense(a);
    Eigen::MatrixXd em = expm_dense(-a);
    std::vector<double> c(n_of(g));
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto ii = static_cast<Eigen::Index>(i);
        c[i] = 0.5 * (ep(ii, ii) - em(ii, ii));
    }
    return c;
}

std::vector<double> even_subgraph(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd ep = expm_dense(a);
    Eigen::MatrixXd em = expm_dense(-a);
    std::vector<double> c(n_of(g));
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto ii = static_cast<Eigen::Index>(i);
        c[i] = 0.5 * (ep(ii, ii) + em(ii, ii));
    }
    return c;
}

std::vector<double> total_communicability(const Graph& g) {
    auto e = expm_adjacency(g);
    std::vector<double> c(n_of(g), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) c[i] += e[i][j];
    return c;
}

std::vector<double> resolvent(const Graph& g, double s) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(n, n) - s * adjacency(g)).inverse();
    std::vector<double> c(n_of(g));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    return c;
}

double bipartivity_global(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd ep = expm_dense(a);
    Eigen::MatrixXd em = expm_dense(-a);
    return (0.5 * (ep + em)).trace() / ep.trace();
}

std::vector<double> bipartivity_nodes(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd ep = expm_dense(a);
    Eigen::MatrixXd em = expm_dense(-a);
    std::vector<double> c(n_of(g));
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto ii = static_cast<Eigen::Index>(i);
        c[i] = 0.5 * (ep(ii, ii) + em(ii, ii)) / ep(ii, ii);
    }
    return c;
}

namespace {

// Does node `target` survive repeated deletion of nodes with degree < k?
bool survives_core(const Graph& g, node_id target, int k) {
    const std::size_t n = n_of(g);
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) degree[i] = static_cast<int>(g.degree(static_cast<node_id>(i)));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || degree[i] >= k) continue;
            alive[i] = 0;
            changed = true;
            for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
                if (alive[static_cast<std::size_t>(nb.node)]) --degree[static_cast<std::size_t>(nb.node)];
        }
    }
    return alive[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

std::vector<int> kshell_cores(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<int> core(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int k = 0;
        while (survives_core(g, static_cast<node_id>(i), k + 1)) ++k;
        core[i] = k;
    }
    return core;
}

std::pair<std::vector<int>, std::vector<int>> kshell_peel_shuffled(const Graph& g, unsigned seed) {
    const std::size_t n = n_of(g);
    std::mt19937 rng(seed);
    std::vector<std::size_t> visit(n);
    for (std::size_t i = 0; i < n; ++i) visit[i] = i;
    std::shuffle(visit.begin(), visit.end(), rng);

    std::vector<int> core(n, 0), layer(n, 0);
    std::vector<int> degree(n, 0);
    std::vector<char> removed(n, 0);
    for (std::size_t i = 0; i < n; ++i) degree[i] = static_cast<int>(g.degree(static_cast<node_id>(i)));
    std::size_t remaining = n;
    int k = 0, round = 0;
    while (remaining > 0) {
        int min_deg = INT32_MAX;
        for (std::size_t i : visit)
            if (!removed[i]) min_deg = std::min(min_deg, degree[i]);
        if (min_deg > k) k = min_deg;
        for (;;) {
            std::vector<std::size_t> batch;
            for (std::size_t i : visit)
                if (!removed[i] && degree[i] <= k) batch.push_back(i);
            if (batch.empty()) break;
            std::shuffle(batch.begin(), batch.end(), rng);
            ++round;
            for (std::size_t i : batch) {
                removed[i] = 1;
                core[i] = k;
                layer[i] = round;
                --remaining;
            }
            for (std::size_t i : batch)
                for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
                    if (!removed[static_cast<std::size_t>(nb.node)])
                        --degree[static_cast<std::size_t>(nb.node)];
        }
    }
    return {core, layer};
}

std::vector<int> ktruss_node(const Graph& g) {
    const std::size_t n = n_of(g);
    const auto& edges = g.edges();
    std::vector<int> best(n, 0);
    // For each k, compute the maximal k-truss by fixed-point deletion from
    // the full edge set and mark member nodes.
    for (int k = 2;; ++k) {
        std::vector<char> in(edges.size(), 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (!in[e]) continue;
                int triangles = 0;
                for (std::size_t f = 0; f < edges.size(); ++f) {
                    if (f == e || !in[f]) continue;
                    // Count common node w adjacent to both endpoints using a
                    // third in-truss edge.
                    node_id u = edges[e].source, v = edges[e].target;
                    node_id a = edges[f].source, b = edges[f].target;
                    node_id w = -1;
                    if (a == u) w = b;
                    else if (b == u) w = a;
                    else continue;
                    // Need the closing edge (v, w) also in the truss.
                    for (std::size_t h = 0; h < edges.size(); ++h) {
                        if (!in[h] || h == e || h == f) continue;
                        if ((edges[h].source == v && edges[h].target == w) ||
                            (edges[h].source == w && edges[h].target == v)) {
                            ++triangles;
                            break;
                        }
                    }
                }
                if (triangles < k - 2) {
                    in[e] = 0;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!in[e]) continue;
            any = true;
            best[static_cast<std::size_t>(edges[e].source)] = k;
            best[static_cast<std::size_t>(edges[e].target)] = k;
        }
        if (!any) break;
    }
    return best;
}

std::vector<int> lobby(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        for (int k = 1; k <= static_cast<int>(n); ++k) {
            int count = 0;
            for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
                if (static_cast<int>(g.degree(nb.node)) >= k) ++count;
            if (count >= k) best = k;
        }
        c[i] = best;
    }
    return c;
}

namespace {

Graph drop_node(const Graph& g, node_id gone) {
    std::vector<czoo::Graph::Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.source == gone || e.target == gone) continue;
        auto shift = [gone](node_id v) { return v > gone ? v - 1 : v; };
        edges.push_back({shift(e.source), shift(e.target), e.weight});
    }
    return Graph(g.node_count() - 1, std::move(edges), g.directed());
}

double sum_squares_of_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    return es.eigenvalues().array().square().sum();
}

Eigen::MatrixXd laplacian_weighted(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        l(e.source, e.source) += e.weight;
        l(e.target, e.target) += e.weight;
        l(e.source, e.target) -= e.weight;
        l(e.target, e.source) -= e.weight;
    }
    return l;
}

Eigen::MatrixXd signless_laplacian(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        q(e.source, e.source) += 1.0;
        q(e.target, e.target) += 1.0;
        q(e.source, e.target) += 1.0;
        q(e.target, e.source) += 1.0;
    }
    return q;
}

}  // namespace

double laplacian_energy_eigen(const Graph& g) {
    return sum_squares_of_eigenvalues(laplacian_weighted(g));
}

double quasi_laplacian_energy_eigen(const Graph& g) {
    return sum_squares_of_eigenvalues(signless_laplacian(g));
}

std::vector<double> quasi_laplacian_removal(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, 0.0);
    double base = quasi_laplacian_energy_eigen(g);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = base - quasi_laplacian_energy_eigen(drop_node(g, static_cast<node_id>(i)));
    return c;
}

std::vector<double> laplacian_centrality(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, 0.0);
    double base = laplacian_energy_eigen(g);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = (base - laplacian_energy_eigen(drop_node(g, static_cast<node_id>(i)))) / base;
    return c;
}

std::vector<std::optional<double>> closeness_vitality(const Graph& g) {
    const std::size_t n = n_of(g);
    auto wiener = [](const Graph& h) -> std::optional<double> {
        auto d = floyd_warshall(h);
        double total = 0.0;
        for (std::size_t i = 0; i < h.node_count(); ++i)
            for (std::size_t j = 0; j < h.node_count(); ++j) {
                if (i == j) continue;
                if (!std::isfinite(d[i][j])) return std::nullopt;
                total += d[i][j];
            }
        return total;
    };
    double base = *wiener(g);
    std::vector<std::optional<double>> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto w = wiener(drop_node(g, static_cast<node_id>(i)));
        if (w)
            c[i] = base - *w;
        else
            c[i] = std::nullopt;
    }
    return c;
}

std::vector<double> efficiency_centrality(const Graph& g) {
    auto eff = [](const Graph& h) {
        const std::size_t m = h.node_count();
        if (m <= 1) return 0.0;
        auto d = floyd_warshall(h);
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && std::isfinite(d[i][j])) sum += 1.0 / d[i][j];
        return sum / (static_cast<double>(m) * static_cast<double>(m - 1));
    };
    const std::size_t n = n_of(g);
    double base = eff(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = (base - eff(drop_node(g, static_cast<node_id>(i)))) / base;
    return c;
}

std::vector<bool> articulation_points(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<bool> cut(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        Graph rest = drop_node(g, static_cast<node_id>(i));
        cut[i] = rest.node_count() > 1 && !rest.connected();
    }
    return cut;
}

std::vector<std::vector<double>> effective_resistance(const Graph& g) {
    const std::size_t n = n_of(g);
    Eigen::MatrixXd pinv = laplacian_pinv(g);
    std::vector<std::vector<double>> omega(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto a = static_cast<Eigen::Index>(i), b = static_cast<Eigen::Index>(j);
            omega[i][j] = pinv(a, a) + pinv(b, b) - 2.0 * pinv(a, b);
        }
    return omega;
}

std::vector<double> current_flow_closeness(const Graph& g) {
    const std::size_t n = n_of(g);
    auto omega = effective_resistance(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += omega[i][j];
        c[i] = static_cast<double>(n - 1) / sum;
    }
    return c;
}

std::vector<double> current_flow_betweenness(const Graph& g) {
    const std::size_t n = n_of(g);
    Eigen::MatrixXd pinv = laplacian_pinv(g);
    std::vector<double> through(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            for (const auto& e : g.edges()) {
                auto si = static_cast<Eigen::Index>(s), ti = static_cast<Eigen::Index>(t);
                double phi_u = pinv(e.source, si) - pinv(e.source, ti);
                double phi_v = pinv(e.target, si) - pinv(e.target, ti);
                double current = (phi_u - phi_v) / e.weight;
                through[static_cast<std::size_t>(e.source)] += 0.5 * std::abs(current);
                through[static_cast<std::size_t>(e.target)] += 0.5 * std::abs(current);
            }
            through[s] += 0.5;
            through[t] += 0.5;
        }
    }
    std::vector<double> c(n, 0.0);
    double norm = static_cast<double>(n) * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = through[i] / norm;
    return c;
}

std::vector<double> markov_centrality(const Graph& g) {
    const std::size_t n = n_of(g);
    const auto m = static_cast<Eigen::Index>(n);
    // Conductance-weighted walk, stationary distribution, fundamental matrix.
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd strength = Eigen::VectorXd::Zero(m);
    for (std::size_t u = 0; u < n; ++u) {
        double total = 0.0;
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(u)))
            total += 1.0 / nb.weight;
        strength(static_cast<Eigen::Index>(u)) = total;
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(u)))
            p(static_cast<Eigen::Index>(u), nb.node) = (1.0 / nb.weight) / total;
    }
    Eigen::VectorXd pi = strength / strength.sum();
    Eigen::MatrixXd z =
        (Eigen::MatrixXd::Identity(m, m) - p + Eigen::VectorXd::Ones(m) * pi.transpose())
            .inverse();
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto ii = static_cast<Eigen::Index>(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sum += (z(ii, ii) - z(static_cast<Eigen::Index>(j), ii)) / pi(ii);
        }
        c[i] = static_cast<double>(n - 1) / sum;
    }
    return c;
}

std::vector<double> clustering(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto nbrs = g.neighbors(static_cast<node_id>(i));
        if (nbrs.size() <= 1) continue;
        double links = 0.0;
        for (const czoo::Neighbor& a : nbrs)
            for (const czoo::Neighbor& b : nbrs)
                if (a.node != b.node && g.has_edge(a.node, b.node)) links += 1.0;
        c[i] = links / (static_cast<double>(nbrs.size()) * static_cast<double>(nbrs.size() - 1));
    }
    return c;
}

std::vector<double> localrank(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> nn(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (j != k && (d[k][j] == 1.0 || d[k][j] == 2.0)) nn[k] += 1.0;
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const czoo::Neighbor& jb : g.out_neighbors(static_cast<node_id>(i)))
            for (const czoo::Neighbor& kb : g.out_neighbors(jb.node))
                c[i] += nn[static_cast<std::size_t>(kb.node)];
    return c;
}

std::vector<double> clusterrank(const Graph& g) {
    const std::size_t n = n_of(g);
    auto cc = clustering(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sum += static_cast<double>(g.degree(nb.node)) + 1.0;
        c[i] = std::pow(10.0, -cc[i]) * sum;
    }
    return c;
}

std::vector<double> leverage(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < n; ++i) {
        double di = static_cast<double>(g.degree(static_cast<node_id>(i)));
        if (di == 0.0) continue;
        double sum = 0.0;
        for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i))) {
            double dj = static_cast<double>(g.degree(nb.node));
            sum += (di - dj) / (di + dj);
        }
        c[i] = sum / di;
    }
    return c;
}

std::vector<double> neighborhood_connectivity(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double di = static_cast<double>(g.degree(static_cast<node_id>(i)));
        if (di == 0.0) continue;
        double sum = 0.0;
        for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
            sum += static_cast<double>(g.degree(nb.node));
        c[i] = sum / di;
    }
    return c;
}

std::vector<double> burt_constraint(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < n; ++i) {
        auto nbrs = g.neighbors(static_cast<node_id>(i));
        if (nbrs.empty()) continue;
        double total = 0.0;
        for (const czoo::Neighbor& j : nbrs) {
            double term = 1.0 / static_cast<double>(nbrs.size());
            for (const czoo::Neighbor& k : nbrs) {
                if (k.node == j.node || !g.has_edge(k.node, j.node)) continue;
                term += (1.0 / static_cast<double>(nbrs.size())) *
                        (1.0 / static_cast<double>(g.degree(k.node)));
            }
            total += term * term;
        }
        c[i] = total;
    }
    return c;
}

std::vector<double> effective_size(const Graph& g) {
    const std::size_t n = n_of(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto nbrs = g.neighbors(static_cast<node_id>(i));
        if (nbrs.empty()) continue;
        double total = 0.0;
        for (const czoo::Neighbor& j : nbrs) {
            double red = 0.0;
            for (const czoo::Neighbor& k : nbrs) {
                if (k.node == j.node) continue;
                if (g.has_edge(j.node, k.node)) red += 1.0 / static_cast<double>(nbrs.size());
            }
            total += 1.0 - red;
        }
        c[i] = total;
    }
    return c;
}

std::vector<double> redundancy(const Graph& g) {
    auto cc = clustering(g);
    std::vector<double> c(n_of(g), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        double d = static_cast<double>(g.degree(static_cast<node_id>(i)));
        c[i] = d <= 1.0 ? 0.0 : cc[i] * (d - 1.0);
    }
    return c;
}

std::vector<double> degree(const Graph& g) {
    std::vector<double> c(n_of(g), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    return c;
}

std::vector<double> degree_mass(const Graph& g, int m) {
    const auto n = static_cast<Eigen::Index>(n_of(g));
    Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
    for (int k = 1; k <= m + 1; ++k) {
        power = power * a;
        total += power * Eigen::VectorXd::Ones(n);
    }
    return to_std(total);
}

std::vector<double> eccentricity(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double ecc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) ecc = std::max(ecc, d[i][j]);
        c[i] = ecc > 0.0 ? 1.0 / ecc : 0.0;
    }
    return c;
}

std::vector<double> lin_index(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double reach = 0.0, sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !std::isfinite(d[i][j])) continue;
            reach += 1.0;
            sum += d[i][j];
        }
        c[i] = reach == 0.0 ? 1.0 : reach * reach / sum;
    }
    return c;
}

std::vector<double> decay(const Graph& g, double delta) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && std::isfinite(d[i][j])) c[i] += std::pow(delta, d[i][j]);
    return c;
}

std::vector<double> radiality(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    double diam = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::isfinite(d[i][j])) diam = std::max(diam, d[i][j]);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += diam + 1.0 - d[i][j];
        c[i] = sum / static_cast<double>(n - 1);
    }
    return c;
}

std::vector<double> delta_closeness(const Graph& g, double delta) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && std::isfinite(d[i][j])) sum += std::pow(d[i][j], -delta);
        c[i] = sum / static_cast<double>(n - 1);
    }
    return c;
}

std::vector<double> p_means(const Graph& g, double p) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p == 0.0) {
            double prod = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) prod *= d[i][j];
            c[i] = std::pow(prod, -1.0 / static_cast<double>(n - 1));
        } else {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += std::pow(d[i][j], p);
            c[i] = std::pow(sum / static_cast<double>(n - 1), -1.0 / p);
        }
    }
    return c;
}

std::vector<double> m_reach(const Graph& g, int m) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && d[i][j] <= static_cast<double>(m)) c[i] += 1.0;
    return c;
}

std::vector<double> local_reaching(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    if (n <= 1) return c;
    for (std::size_t i = 0; i < n; ++i) {
        double reach = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && std::isfinite(d[i][j])) reach += 1.0;
        c[i] = reach / static_cast<double>(n - 1);
    }
    return c;
}

std::vector<double> geodesic_kpath(const Graph& g, int k) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !std::isfinite(d[i][j]) || d[i][j] > static_cast<double>(k)) continue;
            std::vector<std::vector<node_id>> paths;
            std::vector<node_id> prefix{static_cast<node_id>(i)};
            enumerate_paths_rec(g, d, static_cast<node_id>(i), static_cast<node_id>(j), prefix,
                                paths);
            c[i] += static_cast<double>(paths.size());
        }
    }
    return c;
}

std::vector<double> local_gravity(const Graph& g, int radius) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !std::isfinite(d[i][j]) || d[i][j] > static_cast<double>(radius))
                continue;
            c[i] += static_cast<double>(g.degree(static_cast<node_id>(i))) *
                    static_cast<double>(g.degree(static_cast<node_id>(j))) / (d[i][j] * d[i][j]);
        }
    return c;
}

std::vector<double> gravity_centrality(const Graph& g, int radius) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    auto cores = kshell_cores(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !std::isfinite(d[i][j]) || d[i][j] > static_cast<double>(radius))
                continue;
            c[i] += static_cast<double>(cores[i]) * static_cast<double>(cores[j]) /
                    (d[i][j] * d[i][j]);
        }
    return c;
}

std::vector<double> mixed_gravitational(const Graph& g) {
    const std::size_t n = n_of(g);
    auto d = floyd_warshall(g);
    auto cores = kshell_cores(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(i))) {
            auto j = static_cast<std::size_t>(nb.node);
            c[i] += static_cast<double>(cores[i]) * static_cast<double>(g.degree(nb.node)) /
                    (d[i][j] * d[i][j]);
        }
    return c;
}

std::vector<double> ink(const Graph& g, double alpha) {
    const std::size_t n = n_of(g);
    auto cores = kshell_cores(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            c[i] += std::pow(static_cast<double>(cores[static_cast<std::size_t>(nb.node)]), alpha);
    return c;
}

std::vector<double> extended_coreness(const Graph& g) {
    const std::size_t n = n_of(g);
    auto base = ink(g, 1.0);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const czoo::Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            c[i] += base[static_cast<std::size_t>(nb.node)];
    return c;
}

std::vector<double> local_h_index(const Graph& g) {
    const std::size_t n = n_of(g);
    auto h = lobby(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = static_cast<double>(h[i]);
        for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
            sum += static_cast<double>(h[static_cast<std::size_t>(nb.node)]);
        c[i] = sum;
    }
    return c;
}

namespace {

std::size_t pick_best(const std::vector<double>& score, const std::vector<bool>& done) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < score.size(); ++i) {
        if (done[i]) continue;
        if (best == SIZE_MAX || score[i] > score[best]) best = i;
    }
    return best;
}

}  // namespace

std::vector<node_id> voterank_order(const Graph& g, int k) {
    const std::size_t n = n_of(g);
    std::size_t want = k == 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(k), n);
    double f = g.edge_count() == 0
                   ? 0.0
                   : 1.0 / (2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n));
    std::vector<double> ability(n, 1.0);
    std::vector<bool> done(n, false);
    std::vector<node_id> order;
    for (std::size_t round = 0; round < want; ++round) {
        std::vector<double> score(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (const czoo::Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
                score[i] += ability[static_cast<std::size_t>(nb.node)];
        std::size_t win = pick_best(score, done);
        done[win] = true;
        order.push_back(static_cast<node_id>(win));
        ability[win] = 0.0;
        for (const czoo::Neighbor& nb : g.in_neighbors(static_cast<node_id>(win)))
            ability[static_cast<std::size_t>(nb.node)] =
                std::max(0.0, ability[static_cast<std::size_t>(nb.node)] - f);
    }
    return order;
}

std::vector<node_id> wvoterank_order(const Graph& g, int k) {
    const std::size_t n = n_of(g);
    std::size_t want = k == 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(k), n);
    double f = g.edge_count() == 0
                   ? 0.0
                   : 1.0 / (2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n));
    std::vector<double> ability(n, 1.0);
    std::vector<bool> done(n, false);
    std::vector<node_id> order;
    for (std::size_t round = 0; round < want; ++round) {
        std::vector<double> score(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double votes = 0.0;
            for (const czoo::Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
                votes += nb.weight * ability[static_cast<std::size_t>(nb.node)];
            score[i] = std::sqrt(static_cast<double>(g.degree(static_cast<node_id>(i))) * votes);
        }
        std::size_t win = pick_best(score, done);
        done[win] = true;
        order.push_back(static_cast<node_id>(win));
        ability[win] = 0.0;
        for (const czoo::Neighbor& nb : g.in_neighbors(static_cast<node_id>(win)))
            ability[static_cast<std::size_t>(nb.node)] =
                std::max(0.0, ability[static_cast<std::size_t>(nb.node)] - f);
    }
    return order;
}

std::vector<node_id> degree_discount_order(const Graph& g, int k, double p) {
    const std::size_t n = n_of(g);
    std::size_t want = k == 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(k), n);
    std::vector<double> dd(n, 0.0), t(n, 0.0);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    std::vector<node_id> order;
    for (std::size_t round = 0; round < want; ++round) {
        std::size_t win = pick_best(dd, done);
        done[win] = true;
        order.push_back(static_cast<node_id>(win));
        for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(win))) {
            auto j = static_cast<std::size_t>(nb.node);
            if (done[j]) continue;
            t[j] += 1.0;
            double d = static_cast<double>(g.degree(nb.node));
            dd[j] = d - 2.0 * t[j] - (d - t[j]) * t[j] * p;
        }
    }
    return order;
}

std::vector<node_id> single_discount_order(const Graph& g, int k) {
    const std::size_t n = n_of(g);
    std::size_t want = k == 0 ? n : std::min<std::size_t>(static_cast<std::size_t>(k), n);
    std::vector<double> deg(n, 0.0);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    std::vector<node_id> order;
    for (std::size_t round = 0; round < want; ++round) {
        std::size_t win = pick_best(deg, done);
        done[win] = true;
        order.push_back(static_cast<node_id>(win));
        for (const czoo::Neighbor& nb : g.neighbors(static_cast<node_id>(win)))
            if (!done[static_cast<std::size_t>(nb.node)]) deg[static_cast<std::size_t>(nb.node)] -= 1.0;
    }
    return order;
}

double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double cd = 0.0;  // concordant minus discordant
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double sx = (x[i] < x[j]) ? -1.0 : (x[i] > x[j] ? 1.0 : 0.0);
            double sy = (y[i] < y[j]) ? -1.0 : (y[i] > y[j] ? 1.0 : 0.0);
            cd += sx * sy;
        }
    auto tie_pairs = [](const std::vector<double>& v) {
        double t = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j]) t += 1.0;
        return t;
    };
    double n0 = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    double n1 = tie_pairs(x);
    double n2 = tie_pairs(y);
    return cd / std::sqrt((n0 - n1) * (n0 - n2));
}

}  // namespace naive
