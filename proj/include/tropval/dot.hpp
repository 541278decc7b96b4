#pragma once

#include <string>
#include <vector>

namespace tropval {

/// Minimal DOT digraph writer with stable node ids: nodes and edges are
/// emitted in the order given, one per line.
struct DotGraph {
  std::string name = "g";
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string to_string() const;
};

}  // namespace tropval
