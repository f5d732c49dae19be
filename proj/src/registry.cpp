#include "czoo/registry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "czoo/betweenness.hpp"
#include "czoo/communicability.hpp"
#include "czoo/decomposition.hpp"
#include "czoo/distance_measures.hpp"
#include "czoo/graph_measures.hpp"
#include "czoo/gravity.hpp"
#include "czoo/laplacian_flow.hpp"
#include "czoo/local_structure.hpp"
#include "czoo/seed_selection.hpp"
#include "czoo/spectral.hpp"
#include "czoo/vitality.hpp"

namespace czoo {

namespace {

double parse_real(const std::string& name, const std::string& text) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw_usage("bad-param", "parameter \"" + name + "\" expects a real number, got \"" +
                                     text + "\"");
    }
}

long parse_int(const std::string& name, const std::string& text) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw_usage("bad-param",
                    "parameter \"" + name + "\" expects an integer, got \"" + text + "\"");
    return v;
}

bool parse_bool(const std::string& name, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw_usage("bad-param",
                "parameter \"" + name + "\" expects a boolean, got \"" + text + "\"");
}

}  // namespace

double ParamValues::get_real(const std::string& name, double fallback) const {
    auto it = raw_.find(name);
    return it == raw_.end() ? fallback : parse_real(name, it->second);
}

long ParamValues::get_int(const std::string& name, long fallback) const {
    auto it = raw_.find(name);
    return it == raw_.end() ? fallback : parse_int(name, it->second);
}

bool ParamValues::get_bool(const std::string& name, bool fallback) const {
    auto it = raw_.find(name);
    return it == raw_.end() ? fallback : parse_bool(name, it->second);
}

std::string ParamValues::get_text(const std::string& name, const std::string& fallback) const {
    auto it = raw_.find(name);
    return it == raw_.end() ? fallback : it->second;
}

ParamValues parse_param_list(const std::string& comma_separated) {
    ParamValues pv;
    std::size_t start = 0;
    while (start < comma_separated.size()) {
        auto end = comma_separated.find(',', start);
        if (end == std::string::npos) end = comma_separated.size();
        std::string item = comma_separated.substr(start, end - start);
        if (!item.empty()) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw_usage("bad-param", "parameter \"" + item + "\" is not of the form k=v");
            pv.set(item.substr(0, eq), item.substr(eq + 1));
        }
        start = end + 1;
    }
    return pv;
}

namespace {

IterationConfig iteration_config(const ParamValues& p) {
    IterationConfig cfg;
    cfg.tolerance = p.get_real("tolerance", cfg.tolerance);
    cfg.max_iterations = p.get_int("max-iterations", cfg.max_iterations);
    if (!(cfg.tolerance > 0.0)) throw_usage("bad-param", "tolerance must be > 0");
    if (cfg.max_iterations < 1) throw_usage("bad-param", "max-iterations must be >= 1");
    return cfg;
}

BetweennessOptions betweenness_options(const ParamValues& p) {
    BetweennessOptions opt;
    opt.normalize = p.get_bool("normalize", false);
    opt.halve = p.get_bool("halve-undirected", false);
    return opt;
}

const std::vector<ParamSpec> kIterParams = {
    {"tolerance", param_type::real, "1e-12", "L1 change per sweep that stops the iteration"},
    {"max-iterations", param_type::integer, "100000", "iteration cap before a convergence error"},
};

std::vector<ParamSpec> with_iter_params(std::vector<ParamSpec> specs) {
    specs.insert(specs.end(), kIterParams.begin(), kIterParams.end());
    return specs;
}

const std::vector<ParamSpec> kBetweennessParams = {
    {"normalize", param_type::boolean, "false", "divide by (N-1)(N-2)"},
    {"halve-undirected", param_type::boolean, "false",
     "divide by 2 for unordered-pair interoperability"},
};

std::vector<ParamSpec> with_betweenness_params(std::vector<ParamSpec> specs) {
    specs.insert(specs.end(), kBetweennessParams.begin(), kBetweennessParams.end());
    return specs;
}

// Effective parameters: user-supplied values with descriptor defaults filled in.
void record_params(MeasureResult& result, const MeasureDescriptor& d, const ParamValues& p) {
    std::map<std::string, std::string> effective;
    for (const ParamSpec& spec : d.params)
        effective[spec.name] = p.has(spec.name) ? p.raw().at(spec.name) : spec.default_value;
    std::visit([&](auto& r) { r.params = std::move(effective); }, result);
}

std::vector<MeasureDescriptor> build_registry() {
    std::vector<MeasureDescriptor> reg;
    auto add = [&](MeasureDescriptor d) { reg.push_back(std::move(d)); };

    // --- degree family -----------------------------------------------------
    add({"degree",
         "Degree centrality",
         {"degree-centrality"},
         result_kind::scores,
         {},
         {{"mode", param_type::text, "total", "total | in | out (directed graphs)"},
          {"weighted", param_type::boolean, "false", "sum link weights instead of counts"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             auto mode_text = p.get_text("mode", "total");
             degree_mode mode;
             if (mode_text == "total") mode = degree_mode::total;
             else if (mode_text == "in") mode = degree_mode::in;
             else if (mode_text == "out") mode = degree_mode::out;
             else throw_usage("bad-param", "degree mode must be total, in, or out");
             return degree_centrality(g, mode, p.get_bool("weighted", false));
         }});
    add({"degree-mass",
         "Degree mass",
         {},
         result_kind::scores,
         {},
         {{"m", param_type::integer, "1", "neighborhood order; 0 reduces to degree"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return degree_mass(g, static_cast<int>(p.get_int("m", 1)));
         }});
    add({"clustering-coefficient",
         "Local clustering coefficient",
         {"local-clustering", "clustering"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return clustering_coefficient(g);
         }});

    // --- distance family ----------------------------------------------------
    add({"closeness",
         "Closeness centrality",
         {},
         result_kind::scores,
         {.connected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return closeness(g); }});
    add({"harmonic",
         "Harmonic centrality",
         {"latora-closeness", "nodal-efficiency", "reciprocal-closeness"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return harmonic(g); }});
    add({"eccentricity",
         "Eccentricity centrality",
         {"harary"},
         result_kind::scores,
         {.connected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return eccentricity_centrality(g);
         }});
    add({"lin-index",
         "Lin's index",
         {"lin"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return lin_index(g); }});
    add({"decay",
         "Decay centrality",
         {},
         result_kind::scores,
         {},
         {{"delta", param_type::real, "0.5", "decay factor in (0, 1)"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return decay(g, p.get_real("delta", 0.5));
         }});
    add({"radiality",
         "Radiality centrality",
         {"integration"},
         result_kind::scores,
         {.connected = true, .undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return radiality(g); }});
    add({"delta-closeness",
         "Delta-closeness centrality",
         {},
         result_kind::scores,
         {},
         {{"delta", param_type::real, "1", "distance exponent; 1 matches the harmonic ranking"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return delta_closeness(g, p.get_real("delta", 1.0));
         }});
    add({"p-means",
         "p-means centrality",
         {},
         result_kind::scores,
         {.connected = true},
         {{"p", param_type::real, "1", "power-mean exponent; 0 is the geometric mean"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return p_means(g, p.get_real("p", 1.0));
         }});
    add({"m-reach",
         "m-reach centrality",
         {"m-step-reach"},
         result_kind::scores,
         {},
         {{"m", param_type::integer, "2", "reach horizon in hops"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return m_reach(g, static_cast<int>(p.get_int("m", 2)));
         }});
    add({"local-reaching",
         "Local reaching centrality",
         {},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return local_reaching(g); }});
    add({"geodesic-k-path",
         "Geodesic k-path centrality",
         {},
         result_kind::scores,
         {.unit_weights = true},
         {{"k", param_type::integer, "3", "maximum geodesic length counted"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return geodesic_kpath(g, static_cast<int>(p.get_int("k", 3)));
         }});

    // --- betweenness family --------------------------------------------------
    add({"betweenness",
         "Betweenness centrality",
         {"freeman-betweenness", "sociometric-betweenness"},
         result_kind::scores,
         {},
         with_betweenness_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return betweenness(g, betweenness_options(p));
         }});
    add({"stress",
         "Stress centrality",
         {},
         result_kind::scores,
         {},
         with_betweenness_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return stress(g, betweenness_options(p));
         }});
    add({"k-betweenness",
         "k-betweenness centrality",
         {"bounded-distance-betweenness", "range-limited-betweenness"},
         result_kind::scores,
         {.unit_weights = true},
         with_betweenness_params({{"k", param_type::integer, "3", "maximum pair distance counted"}}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return k_betweenness(g, static_cast<int>(p.get_int("k", 3)), betweenness_options(p));
         }});
    add({"length-scaled-betweenness",
         "Length-scaled betweenness centrality",
         {"distance-scaled-betweenness", "lsbc"},
         result_kind::scores,
         {},
         with_betweenness_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return length_scaled_betweenness(g, betweenness_options(p));
         }});
    add({"endpoint-betweenness",
         "Endpoint betweenness centrality",
         {"epbc"},
         result_kind::scores,
         {},
         with_betweenness_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return endpoint_betweenness(g, betweenness_options(p));
         }});

    // --- spectral family ------------------------------------------------------
    add({"eigenvector",
         "Eigenvector centrality",
         {"principal-eigenvector"},
         result_kind::scores,
         {.connected = true, .undirected = true},
         with_iter_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return eigenvector_centrality(g, iteration_config(p));
         }});
    add({"katz",
         "Katz centrality",
         {"katz-prestige"},
         result_kind::scores,
         {},
         with_iter_params({{"alpha", param_type::real, "0.1", "attenuation, below 1/lambda_max"},
                           {"beta", param_type::real, "0",
                            "exogenous offset; nonzero switches to alpha-centrality"}}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return katz(g, p.get_real("alpha", 0.1), p.get_real("beta", 0.0),
                         iteration_config(p));
         }});
    add({"alpha-centrality",
         "Alpha centrality",
         {"bonacich-alpha"},
         result_kind::scores,
         {},
         with_iter_params({{"alpha", param_type::real, "0.1", "attenuation, below 1/lambda_max"},
                           {"beta", param_type::real, "1", "exogenous contribution"}}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             double beta = p.get_real("beta", 1.0);
             if (beta == 0.0) throw_usage("bad-param", "alpha-centrality requires beta != 0");
             return katz(g, p.get_real("alpha", 0.1), beta, iteration_config(p));
         }});
    add({"pagerank",
         "PageRank",
         {},
         result_kind::scores,
         {},
         with_iter_params({{"alpha", param_type::real, "0.85", "damping factor in [0, 1)"}}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return pagerank(g, p.get_real("alpha", 0.85), iteration_config(p));
         }});
    add({"hits-hub",
         "HITS hub score",
         {},
         result_kind::scores,
         {},
         with_iter_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return hits(g, iteration_config(p)).first;
         }});
    add({"hits-authority",
         "HITS authority score",
         {},
         result_kind::scores,
         {},
         with_iter_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return hits(g, iteration_config(p)).second;
         }});
    add({"leaderrank",
         "LeaderRank",
         {},
         result_kind::scores,
         {},
         with_iter_params({}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return leaderrank(g, iteration_config(p));
         }});
    add({"hubbell",
         "Hubbell centrality",
         {},
         result_kind::scores,
         {},
         with_iter_params(
             {{"w-scale", param_type::real, "1/(n-1)", "scale of W = w-scale * A"},
              {"e", param_type::real, "1", "uniform exogenous contribution"}}),
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             std::optional<double> w_scale;
             if (p.has("w-scale")) w_scale = p.get_real("w-scale", 0.0);
             return hubbell(g, w_scale, p.get_real("e", 1.0), iteration_config(p));
         }});

    // --- communicability family -----------------------------------------------
    add({"subgraph",
         "Subgraph centrality",
         {"communicability-centrality"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return subgraph_centrality(g);
         }});
    add({"odd-subgraph",
         "Odd subgraph centrality",
         {},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return odd_subgraph(g); }});
    add({"even-subgraph",
         "Even subgraph centrality",
         {},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return even_subgraph(g); }});
    add({"total-communicability",
         "Total communicability centrality",
         {"tcc"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return total_communicability(g);
         }});
    add({"resolvent",
         "Resolvent centrality",
         {"f-centrality"},
         result_kind::scores,
         {.undirected = true},
         {{"s", param_type::real, "1/(n-1)", "walk penalty in (0, 1/lambda_max)"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             std::optional<double> s;
             if (p.has("s")) s = p.get_real("s", 0.0);
             return resolvent_centrality(g, s);
         }});
    add({"bipartivity",
         "Bipartivity index",
         {},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return bipartivity(g).second;
         }});

    // --- decomposition family ----------------------------------------------
    add({"k-shell",
         "k-shell centrality",
         {"coreness", "k-core", "onion"},
         result_kind::decomposition,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return kshell(g); }});
    add({"mdd",
         "Mixed degree decomposition",
         {"m-shell"},
         result_kind::decomposition,
         {.undirected = true},
         {{"lambda", param_type::real, "0.7", "exhausted-degree weight in [0, 1]"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return mixed_degree_decomposition(g, p.get_real("lambda", 0.7));
         }});
    add({"k-truss",
         "k-truss index",
         {"truss"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return ktruss_index(g); }});
    add({"lobby",
         "Lobby index",
         {"l-index", "h-index"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return lobby(g); }});
    add({"local-h-index",
         "Local H-index",
         {"lh-index"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return local_h_index(g); }});
    add({"ink",
         "Improved neighbors' k-core",
         {"neighborhood-coreness", "ink-score"},
         result_kind::scores,
         {.undirected = true},
         {{"alpha", param_type::real, "1", "neighbor-core exponent"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return ink(g, p.get_real("alpha", 1.0));
         }});
    add({"extended-coreness",
         "Extended neighborhood coreness",
         {"extended-neighborhood-coreness"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return extended_coreness(g);
         }});

    // --- gravity family -------------------------------------------------------
    add({"gravity-model",
         "Gravity model",
         {"inverse-square-law"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return gravity_model(g); }});
    add({"local-gravity",
         "Local gravity model",
         {},
         result_kind::scores,
         {},
         {{"radius", param_type::integer, "3", "hop truncation radius"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return local_gravity(g, static_cast<int>(p.get_int("radius", 3)));
         }});
    add({"gravity-centrality",
         "Gravity centrality",
         {"gravity-k-shell"},
         result_kind::scores,
         {.undirected = true},
         {{"radius", param_type::integer, "3", "hop truncation radius"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return gravity_centrality(g, static_cast<int>(p.get_int("radius", 3)));
         }});
    add({"mixed-gravitational",
         "Mixed gravitational centrality",
         {"mgc", "improved-gravitational"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return mixed_gravitational(g);
         }});

    // --- seed selection --------------------------------------------------------
    const ParamSpec seed_k{"k", param_type::integer, "0",
                           "seeds to select; 0 selects every node"};
    add({"voterank",
         "VoteRank centrality",
         {},
         result_kind::seedset,
         {},
         {seed_k},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return voterank(g, static_cast<int>(p.get_int("k", 0)));
         }});
    add({"wvoterank",
         "WVoteRank centrality",
         {},
         result_kind::seedset,
         {},
         {seed_k},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return wvoterank(g, static_cast<int>(p.get_int("k", 0)));
         }});
    add({"degree-discount",
         "DegreeDiscountIC",
         {"degree-discount-ic"},
         result_kind::seedset,
         {},
         {seed_k, {"p", param_type::real, "0.01", "propagation probability"}},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return degree_discount(g, static_cast<int>(p.get_int("k", 0)),
                                    p.get_real("p", 0.01));
         }});
    add({"single-discount",
         "SingleDiscount",
         {},
         result_kind::seedset,
         {},
         {seed_k},
         [](const Graph& g, const ParamValues& p) -> MeasureResult {
             return single_discount(g, static_cast<int>(p.get_int("k", 0)));
         }});

    // --- vitality family -------------------------------------------------------
    add({"laplacian-centrality",
         "Laplacian centrality",
         {"laplacian"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return laplacian_centrality(g);
         }});
    add({"quasi-laplacian",
         "Quasi-Laplacian centrality",
         {"qc"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return quasi_laplacian(g); }});
    add({"closeness-vitality",
         "Closeness vitality",
         {},
         result_kind::scores,
         {.connected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return closeness_vitality(g);
         }});
    add({"efficiency-centrality",
         "Efficiency centrality",
         {"effc"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return efficiency_centrality(g);
         }});

    // --- electrical / markov family ---------------------------------------------
    add({"current-flow-closeness",
         "Current-flow closeness centrality",
         {"information-centrality", "electrical-closeness"},
         result_kind::scores,
         {.connected = true, .undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return current_flow_closeness(g);
         }});
    add({"current-flow-betweenness",
         "Current-flow betweenness centrality",
         {"random-walk-betweenness"},
         result_kind::scores,
         {.connected = true, .undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return current_flow_betweenness(g);
         }});
    add({"markov-centrality",
         "Markov centrality",
         {"random-walk-closeness"},
         result_kind::scores,
         {.connected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return markov_centrality(g);
         }});

    // --- local structure family ---------------------------------------------------
    add({"localrank",
         "LocalRank centrality",
         {"semi-local-centrality", "local-centrality"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return localrank(g); }});
    add({"clusterrank",
         "ClusterRank centrality",
         {},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return clusterrank(g); }});
    add({"leverage",
         "Leverage centrality",
         {},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return leverage(g); }});
    add({"neighborhood-connectivity",
         "Neighborhood connectivity",
         {"average-neighbor-degree"},
         result_kind::scores,
         {},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult {
             return neighborhood_connectivity(g);
         }});
    add({"burt-constraint",
         "Burt's constraint",
         {"network-constraint"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return burt_constraint(g); }});
    add({"effective-size",
         "Effective size",
         {"es", "borgatti-effective-size"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return effective_size(g); }});
    add({"redundancy",
         "Redundancy measure",
         {"local-average-connectivity"},
         result_kind::scores,
         {.undirected = true},
         {},
         [](const Graph& g, const ParamValues&) -> MeasureResult { return redundancy(g); }});

    std::sort(reg.begin(), reg.end(),
              [](const MeasureDescriptor& a, const MeasureDescriptor& b) { return a.name < b.name; });
    return reg;
}

const std::unordered_map<std::string, std::size_t>& name_index() {
    static const auto index = [] {
        std::unordered_map<std::string, std::size_t> map;
        const auto& reg = all_measures();
        for (std::size_t i = 0; i < reg.size(); ++i) {
            auto insert = [&](const std::string& key) {
                if (!map.emplace(key, i).second)
                    throw std::logic_error("duplicate measure name or alias: " + key);
            };
            insert(reg[i].name);
            for (const auto& alias : reg[i].aliases) insert(alias);
        }
        return map;
    }();
    return index;
}

void check_requirements(const Graph& g, const MeasureDescriptor& d) {
    if (d.requirements.undirected && g.directed())
        throw_requirement("requires-undirected",
                          d.name + " expects an undirected graph");
    if (d.requirements.unit_weights && !g.unit_weights())
        throw_requirement("requires-unit-weights", d.name + " expects a unit-weight graph");
    if (d.requirements.connected && !g.connected()) {
        std::string witness;
        if (g.node_count() > 0) {
            auto seen = std::vector<char>(g.node_count(), 0);
            std::vector<node_id> stack{0};
            seen[0] = 1;
            while (!stack.empty()) {
                node_id u = stack.back();
                stack.pop_back();
                for (const Neighbor& nb : g.out_neighbors(u))
                    if (!seen[static_cast<std::size_t>(nb.node)]) {
                        seen[static_cast<std::size_t>(nb.node)] = 1;
                        stack.push_back(nb.node);
                    }
            }
            for (std::size_t v = 0; v < g.node_count(); ++v)
                if (!seen[v]) {
                    witness = ": \"" + g.label(0) + "\" and \"" +
                              g.label(static_cast<node_id>(v)) + "\" are in different components";
                    break;
                }
            if (witness.empty()) witness = ": not strongly connected";
        }
        throw_requirement("requires-connected", d.name + " expects a connected graph" + witness);
    }
}

void check_params(const MeasureDescriptor& d, const ParamValues& p) {
    for (const auto& [name, value] : p.raw()) {
        bool known = std::any_of(d.params.begin(), d.params.end(),
                                 [&](const ParamSpec& s) { return s.name == name; });
        if (!known)
            throw_usage("unknown-param",
                        d.name + " does not take a parameter named \"" + name + "\"");
        (void)value;
    }
}

}  // namespace

const std::vector<MeasureDescriptor>& all_measures() {
    static const std::vector<MeasureDescriptor> registry = build_registry();
    return registry;
}

const MeasureDescriptor* find_measure(const std::string& name_or_alias) {
    const auto& index = name_index();
    auto it = index.find(name_or_alias);
    if (it == index.end()) return nullptr;
    return &all_measures()[it->second];
}

MeasureResult compute_measure(const Graph& g, const std::string& name_or_alias,
                              const ParamValues& params) {
    const MeasureDescriptor* d = find_measure(name_or_alias);
    if (!d) throw_usage("unknown-measure", "no measure named \"" + name_or_alias + "\"");
    check_params(*d, params);
    check_requirements(g, *d);
    MeasureResult result = d->compute(g, params);
    record_params(result, *d, params);
    return result;
}

RankComparison compare_measures(const Graph& g, const std::string& measure_a,
                                const ParamValues& params_a, const std::string& measure_b,
                                const ParamValues& params_b) {
    const MeasureDescriptor* da = find_measure(measure_a);
    const MeasureDescriptor* db = find_measure(measure_b);
    if (!da) throw_usage("unknown-measure", "no measure named \"" + measure_a + "\"");
    if (!db) throw_usage("unknown-measure", "no measure named \"" + measure_b + "\"");
    if (da->kind != result_kind::scores || db->kind != result_kind::scores)
        throw_usage("not-score-kind", "compare needs two score-producing measures");
    auto ra = compute_measure(g, measure_a, params_a);
    auto rb = compute_measure(g, measure_b, params_b);
    return compare_rankings(std::get<ScoreVector>(ra), std::get<ScoreVector>(rb));
}

}  // namespace czoo
