#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "czoo/graph.hpp"
#include "czoo/rank_compare.hpp"
#include "czoo/scores.hpp"

namespace czoo {

enum class param_type { integer, real, boolean, text };

struct ParamSpec {
    std::string name;
    param_type type = param_type::real;
    std::string default_value;  // textual default, shown in listings
    std::string description;
};

// Graph preconditions checked before dispatch.
struct Requirements {
    bool connected = false;
    bool undirected = false;
    bool unit_weights = false;
};

// Parsed parameter bag with descriptor-driven defaults.
class ParamValues {
public:
    void set(const std::string& name, const std::string& value) { raw_[name] = value; }
    bool has(const std::string& name) const { return raw_.count(name) > 0; }

    double get_real(const std::string& name, double fallback) const;
    long get_int(const std::string& name, long fallback) const;
    bool get_bool(const std::string& name, bool fallback) const;
    std::string get_text(const std::string& name, const std::string& fallback) const;

    const std::map<std::string, std::string>& raw() const { return raw_; }

private:
    std::map<std::string, std::string> raw_;
};

struct MeasureDescriptor {
    std::string name;                  // canonical kebab-case name
    std::string title;                 // human-readable measure title
    std::vector<std::string> aliases;  // alternative names from the literature
    result_kind kind = result_kind::scores;
    Requirements requirements;
    std::vector<ParamSpec> params;
    std::function<MeasureResult(const Graph&, const ParamValues&)> compute;
};

// All registered measures sorted by canonical name.
const std::vector<MeasureDescriptor>& all_measures();

// Resolve a canonical name or alias; null when unknown.
const MeasureDescriptor* find_measure(const std::string& name_or_alias);

// Check requirements, validate parameters, run. Unknown parameter names and
// requirement violations raise typed errors before any computation.
MeasureResult compute_measure(const Graph& g, const std::string& name_or_alias,
                              const ParamValues& params);

// Kendall tau-b between two score-kind measures over commonly defined nodes.
RankComparison compare_measures(const Graph& g, const std::string& measure_a,
                                const ParamValues& params_a, const std::string& measure_b,
                                const ParamValues& params_b);

// Parse "k=2,p=0.01" pair lists (used by the C API and CLI plumbing).
ParamValues parse_param_list(const std::string& comma_separated);

}  // namespace czoo
