// czoo command-line tool. Links the C API only.
//
// Exit codes: 0 ok, 1 usage, 2 requirement violation, 3 convergence failure,
// 4 I/O. Errors go to stderr as "czoo: <reason-token>: <message>".

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "czoo.h"

namespace {

struct GraphDeleter {
    void operator()(czoo_graph* g) const { czoo_graph_free(g); }
};
struct ResultDeleter {
    void operator()(czoo_result* r) const { czoo_result_free(r); }
};
using GraphPtr = std::unique_ptr<czoo_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<czoo_result, ResultDeleter>;

int report_error(czoo_status status) {
    std::fprintf(stderr, "czoo: %s: %s\n", czoo_last_error_reason(), czoo_last_error_message());
    return static_cast<int>(status);
}

std::string join_params(const std::vector<std::string>& params) {
    std::string out;
    for (const auto& p : params) {
        if (!out.empty()) out += ',';
        out += p;
    }
    return out;
}

GraphPtr load_graph(const std::string& path, const czoo_load_options& options, int& exit_code) {
    czoo_graph* raw = nullptr;
    czoo_status status = czoo_graph_load(path.c_str(), &options, &raw);
    if (status != CZOO_OK) {
        exit_code = report_error(status);
        return nullptr;
    }
    GraphPtr graph(raw);
    for (int i = 0; i < czoo_graph_warning_count(graph.get()); ++i)
        std::fprintf(stderr, "czoo: warning: %s\n", czoo_graph_warning(graph.get(), i));
    return graph;
}

int run_compute(const std::string& input, const std::string& measure,
                std::vector<std::string> params, const czoo_load_options& options,
                bool normalize, bool halve, const std::string& output,
                const std::string& format) {
    if (normalize) params.push_back("normalize=true");
    if (halve) params.push_back("halve-undirected=true");

    int exit_code = 0;
    GraphPtr graph = load_graph(input, options, exit_code);
    if (!graph) return exit_code;

    czoo_result* raw = nullptr;
    czoo_status status =
        czoo_compute(graph.get(), measure.c_str(), join_params(params).c_str(), &raw);
    if (status != CZOO_OK) return report_error(status);
    ResultPtr result(raw);
    for (int i = 0; i < czoo_result_warning_count(result.get()); ++i)
        std::fprintf(stderr, "czoo: warning: %s\n", czoo_result_warning(result.get(), i));

    czoo_format fmt = format == "json" ? CZOO_FORMAT_JSON : CZOO_FORMAT_CSV;
    if (output.empty() || output == "-") {
        char* text = nullptr;
        status = czoo_result_render(result.get(), graph.get(), fmt, &text);
        if (status != CZOO_OK) return report_error(status);
        std::fputs(text, stdout);
        czoo_string_free(text);
    } else {
        status = czoo_result_write(result.get(), graph.get(), output.c_str(), fmt);
        if (status != CZOO_OK) return report_error(status);
    }
    return 0;
}

int run_list() {
    for (int64_t i = 0; i < czoo_measure_count(); ++i) {
        const char* kind = "score";
        switch (czoo_measure_kind(i)) {
            case CZOO_RESULT_SEEDSET: kind = "seedset"; break;
            case CZOO_RESULT_DECOMPOSITION: kind = "decomposition"; break;
            default: break;
        }
        std::printf("%s  [%s]  %s\n", czoo_measure_name(i), kind, czoo_measure_title(i));
        const char* aliases = czoo_measure_aliases(i);
        if (aliases && aliases[0]) std::printf("    aliases: %s\n", aliases);
        const char* reqs = czoo_measure_requirements(i);
        if (reqs && reqs[0]) std::printf("    requires: %s\n", reqs);
        std::string params = czoo_measure_params(i);
        std::size_t start = 0;
        while (start < params.size()) {
            auto end = params.find('\n', start);
            if (end == std::string::npos) end = params.size();
            std::string line = params.substr(start, end - start);
            // name:type:default:description
            auto p1 = line.find(':');
            auto p2 = line.find(':', p1 + 1);
            auto p3 = line.find(':', p2 + 1);
            std::printf("    --param %s=<%s>  (default %s) %s\n",
                        line.substr(0, p1).c_str(), line.substr(p1 + 1, p2 - p1 - 1).c_str(),
                        line.substr(p2 + 1, p3 - p2 - 1).c_str(), line.substr(p3 + 1).c_str());
            start = end + 1;
        }
    }
    return 0;
}

int run_compare(const std::string& input, const std::string& measure_a,
                const std::string& measure_b, const std::vector<std::string>& params_a,
                const std::vector<std::string>& params_b, const czoo_load_options& options) {
    int exit_code = 0;
    GraphPtr graph = load_graph(input, options, exit_code);
    if (!graph) return exit_code;
    double tau = 0.0;
    int64_t n = 0;
    czoo_status status =
        czoo_compare(graph.get(), measure_a.c_str(), join_params(params_a).c_str(),
                     measure_b.c_str(), join_params(params_b).c_str(), &tau, &n);
    if (status != CZOO_OK) return report_error(status);
    std::printf("measure_a,measure_b,kendall_tau_b,n\n%s,%s,%.6f,%" PRId64 "\n",
                measure_a.c_str(), measure_b.c_str(), tau, n);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"czoo — node centrality toolkit"};
    app.require_subcommand(1);

    czoo_load_options options{0, 0, 0, 0};
    std::string input, output, format = "csv", measure;
    std::vector<std::string> params;

    auto add_load_flags = [&](CLI::App* cmd) {
        cmd->add_flag_function("--directed", [&](int64_t) { options.directed = 1; },
                               "treat the edge list as directed");
        cmd->add_flag_function("--weighted", [&](int64_t) { options.weighted = 1; },
                               "read the third column as edge weight");
        cmd->add_flag_function("--invert-weights", [&](int64_t) { options.invert_weights = 1; },
                               "weights are strengths; store 1/w as cost");
        cmd->add_flag_function("--strict", [&](int64_t) { options.strict_loops = 1; },
                               "reject files containing self-loops");
    };

    auto* compute = app.add_subcommand("compute", "compute a measure over a graph");
    compute->add_option("-i,--input", input, "edge-list file")->required();
    compute->add_option("-m,--measure", measure, "measure name or alias")->required();
    compute->add_option("--param", params, "measure parameter k=v (repeatable)");
    bool normalize = false, halve = false;
    compute->add_flag("--normalize", normalize, "divide betweenness scores by (N-1)(N-2)");
    compute->add_flag("--halve-undirected", halve,
                      "halve betweenness scores for unordered-pair interoperability");
    compute->add_option("-o,--output", output, "output path (default stdout)");
    compute->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_load_flags(compute);

    auto* list = app.add_subcommand("list", "list all registered measures");

    auto* cmp = app.add_subcommand("compare", "Kendall tau-b between two measures");
    std::string measure_a, measure_b;
    std::vector<std::string> params_a, params_b;
    cmp->add_option("-i,--input", input, "edge-list file")->required();
    cmp->add_option("-a,--measure-a", measure_a, "first measure")->required();
    cmp->add_option("-b,--measure-b", measure_b, "second measure")->required();
    cmp->add_option("--param-a", params_a, "parameter for the first measure (repeatable)");
    cmp->add_option("--param-b", params_b, "parameter for the second measure (repeatable)");
    add_load_flags(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1
    }

    if (compute->parsed())
        return run_compute(input, measure, params, options, normalize, halve, output, format);
    if (list->parsed()) return run_list();
    if (cmp->parsed())
        return run_compare(input, measure_a, measure_b, params_a, params_b, options);
    return 1;
}
