#pragma once

#include <string>

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

enum class output_format { csv, json };

// CSV layouts (header + rows, labels in input first-appearance order):
//   scores:        node,score          (6-decimal values)
//   seed sets:     rank,node,score
//   decomposition: node,core,layer
// Undefined entries serialize as "undefined"; the disconnecting-removal
// sentinel as "disconnects". JSON keeps full precision and echoes the
// parameters.
std::string to_csv(const MeasureResult& result, const Graph& g);
std::string to_json(const MeasureResult& result, const Graph& g);

std::string serialize(const MeasureResult& result, const Graph& g, output_format format);

void write_file(const std::string& path, const std::string& contents);

}  // namespace czoo
