#include "czoo.h"

#include <cstring>
#include <string>

#include "czoo/edge_list.hpp"
#include "czoo/registry.hpp"
#include "czoo/serialize.hpp"

using namespace czoo;

struct czoo_graph_s {
    Graph graph;
    std::vector<std::string> warnings;
};

struct czoo_result_s {
    MeasureResult result;
};

namespace {

thread_local std::string g_error_message;
thread_local std::string g_error_reason;

czoo_status set_error(const error& e) {
    g_error_message = e.what();
    g_error_reason = e.reason();
    return static_cast<czoo_status>(static_cast<int>(e.code()));
}

czoo_status set_error_generic(const std::exception& e) {
    g_error_message = e.what();
    g_error_reason = "internal-error";
    return CZOO_ERR_USAGE;
}

template <class Fn>
czoo_status guarded(Fn&& fn) {
    try {
        fn();
        return CZOO_OK;
    } catch (const error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error_generic(e);
    }
}

LoadOptions convert(const czoo_load_options* options) {
    LoadOptions o;
    if (options) {
        o.directed = options->directed != 0;
        o.weighted = options->weighted != 0;
        o.invert_weights = options->invert_weights != 0;
        o.strict_loops = options->strict_loops != 0;
    }
    return o;
}

const std::vector<std::string>* result_warnings(const czoo_result* r) {
    return std::visit([](const auto& v) { return &v.warnings; }, r->result);
}

// Registry string accessors return pointers into these per-thread scratch
// slots; each is valid until the same accessor is called again.
thread_local std::string g_scratch_aliases;
thread_local std::string g_scratch_requirements;
thread_local std::string g_scratch_params;

}  // namespace

extern "C" {

const char* czoo_version(void) { return "0.1.0"; }

const char* czoo_last_error_message(void) { return g_error_message.c_str(); }
const char* czoo_last_error_reason(void) { return g_error_reason.c_str(); }

czoo_status czoo_graph_load(const char* path, const czoo_load_options* options,
                            czoo_graph** out) {
    if (!path || !out) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        auto loaded = load_edge_list(path, convert(options));
        *out = new czoo_graph_s{std::move(loaded.graph), std::move(loaded.warnings)};
    });
}

czoo_status czoo_graph_parse(const char* edge_list_text, const czoo_load_options* options,
                             czoo_graph** out) {
    if (!edge_list_text || !out) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        auto loaded = parse_edge_list(edge_list_text, convert(options));
        *out = new czoo_graph_s{std::move(loaded.graph), std::move(loaded.warnings)};
    });
}

void czoo_graph_free(czoo_graph* graph) { delete graph; }

int64_t czoo_graph_node_count(const czoo_graph* graph) {
    return graph ? static_cast<int64_t>(graph->graph.node_count()) : 0;
}

int64_t czoo_graph_edge_count(const czoo_graph* graph) {
    return graph ? static_cast<int64_t>(graph->graph.edge_count()) : 0;
}

int czoo_graph_directed(const czoo_graph* graph) {
    return graph && graph->graph.directed() ? 1 : 0;
}

const char* czoo_graph_label(const czoo_graph* graph, int64_t node) {
    if (!graph || !graph->graph.valid_node(node)) return nullptr;
    return graph->graph.label(node).c_str();
}

int czoo_graph_warning_count(const czoo_graph* graph) {
    return graph ? static_cast<int>(graph->warnings.size()) : 0;
}

const char* czoo_graph_warning(const czoo_graph* graph, int index) {
    if (!graph || index < 0 || static_cast<std::size_t>(index) >= graph->warnings.size())
        return nullptr;
    return graph->warnings[static_cast<std::size_t>(index)].c_str();
}

int64_t czoo_measure_count(void) { return static_cast<int64_t>(all_measures().size()); }

static const MeasureDescriptor* descriptor_at(int64_t index) {
    const auto& reg = all_measures();
    if (index < 0 || static_cast<std::size_t>(index) >= reg.size()) return nullptr;
    return &reg[static_cast<std::size_t>(index)];
}

const char* czoo_measure_name(int64_t index) {
    const auto* d = descriptor_at(index);
    return d ? d->name.c_str() : nullptr;
}

const char* czoo_measure_title(int64_t index) {
    const auto* d = descriptor_at(index);
    return d ? d->title.c_str() : nullptr;
}

int czoo_measure_kind(int64_t index) {
    const auto* d = descriptor_at(index);
    return d ? static_cast<int>(d->kind) : -1;
}

const char* czoo_measure_aliases(int64_t index) {
    const auto* d = descriptor_at(index);
    if (!d) return nullptr;
    g_scratch_aliases.clear();
    for (const auto& alias : d->aliases) {
        if (!g_scratch_aliases.empty()) g_scratch_aliases += ',';
        g_scratch_aliases += alias;
    }
    return g_scratch_aliases.c_str();
}

const char* czoo_measure_requirements(int64_t index) {
    const auto* d = descriptor_at(index);
    if (!d) return nullptr;
    g_scratch_requirements.clear();
    auto append = [&](const char* token) {
        if (!g_scratch_requirements.empty()) g_scratch_requirements += ',';
        g_scratch_requirements += token;
    };
    if (d->requirements.connected) append("connected");
    if (d->requirements.undirected) append("undirected");
    if (d->requirements.unit_weights) append("unit-weights");
    return g_scratch_requirements.c_str();
}

const char* czoo_measure_params(int64_t index) {
    const auto* d = descriptor_at(index);
    if (!d) return nullptr;
    g_scratch_params.clear();
    for (const auto& spec : d->params) {
        if (!g_scratch_params.empty()) g_scratch_params += '\n';
        const char* type = "real";
        switch (spec.type) {
            case param_type::integer: type = "int"; break;
            case param_type::real: type = "real"; break;
            case param_type::boolean: type = "bool"; break;
            case param_type::text: type = "text"; break;
        }
        g_scratch_params += spec.name + ":" + type + ":" + spec.default_value + ":" +
                            spec.description;
    }
    return g_scratch_params.c_str();
}

int64_t czoo_measure_find(const char* name_or_alias) {
    if (!name_or_alias) return -1;
    const MeasureDescriptor* d = find_measure(name_or_alias);
    if (!d) return -1;
    const auto& reg = all_measures();
    return d - reg.data();
}

czoo_status czoo_compute(const czoo_graph* graph, const char* measure, const char* params,
                         czoo_result** out) {
    if (!graph || !measure || !out) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        ParamValues pv = parse_param_list(params ? params : "");
        auto result = compute_measure(graph->graph, measure, pv);
        *out = new czoo_result_s{std::move(result)};
    });
}

int czoo_result_kind_of(const czoo_result* result) {
    return result ? static_cast<int>(kind_of(result->result)) : -1;
}

int64_t czoo_result_size(const czoo_result* result) {
    if (!result) return 0;
    return std::visit([](const auto& r) { return static_cast<int64_t>(r.size()); },
                      result->result);
}

double czoo_result_value(const czoo_result* result, int64_t i) {
    if (!result || i < 0 || i >= czoo_result_size(result)) return 0.0;
    auto idx = static_cast<std::size_t>(i);
    if (const auto* sv = std::get_if<ScoreVector>(&result->result)) return sv->values[idx];
    if (const auto* ss = std::get_if<SeedSet>(&result->result)) return ss->scores[idx];
    return std::get<Decomposition>(result->result).core[idx];
}

int czoo_result_state(const czoo_result* result, int64_t i) {
    if (!result || i < 0 || i >= czoo_result_size(result)) return CZOO_ENTRY_UNDEFINED;
    if (const auto* sv = std::get_if<ScoreVector>(&result->result))
        return static_cast<int>(sv->state(static_cast<std::size_t>(i)));
    return CZOO_ENTRY_DEFINED;
}

int64_t czoo_result_node(const czoo_result* result, int64_t i) {
    if (!result || i < 0 || i >= czoo_result_size(result)) return -1;
    if (const auto* ss = std::get_if<SeedSet>(&result->result))
        return ss->nodes[static_cast<std::size_t>(i)];
    return i;
}

int64_t czoo_result_layer(const czoo_result* result, int64_t i) {
    if (!result || i < 0 || i >= czoo_result_size(result)) return 0;
    if (const auto* d = std::get_if<Decomposition>(&result->result))
        return d->layer[static_cast<std::size_t>(i)];
    return 0;
}

int czoo_result_warning_count(const czoo_result* result) {
    return result ? static_cast<int>(result_warnings(result)->size()) : 0;
}

const char* czoo_result_warning(const czoo_result* result, int index) {
    if (!result) return nullptr;
    const auto* w = result_warnings(result);
    if (index < 0 || static_cast<std::size_t>(index) >= w->size()) return nullptr;
    return (*w)[static_cast<std::size_t>(index)].c_str();
}

czoo_status czoo_result_render(const czoo_result* result, const czoo_graph* graph,
                               czoo_format format, char** out) {
    if (!result || !graph || !out) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        std::string text = serialize(result->result, graph->graph,
                                     format == CZOO_FORMAT_JSON ? output_format::json
                                                                : output_format::csv);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

czoo_status czoo_result_write(const czoo_result* result, const czoo_graph* graph,
                              const char* path, czoo_format format) {
    if (!result || !graph || !path) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        std::string text = serialize(result->result, graph->graph,
                                     format == CZOO_FORMAT_JSON ? output_format::json
                                                                : output_format::csv);
        write_file(path, text);
    });
}

void czoo_result_free(czoo_result* result) { delete result; }

void czoo_string_free(char* text) { delete[] text; }

czoo_status czoo_compare(const czoo_graph* graph, const char* measure_a, const char* params_a,
                         const char* measure_b, const char* params_b, double* tau_out,
                         int64_t* n_out) {
    if (!graph || !measure_a || !measure_b || !tau_out) {
        g_error_message = "null argument";
        g_error_reason = "bad-argument";
        return CZOO_ERR_USAGE;
    }
    return guarded([&] {
        auto rc = compare_measures(graph->graph, measure_a,
                                   parse_param_list(params_a ? params_a : ""), measure_b,
                                   parse_param_list(params_b ? params_b : ""));
        *tau_out = rc.tau;
        if (n_out) *n_out = static_cast<int64_t>(rc.n);
    });
}

}  // extern "C"
