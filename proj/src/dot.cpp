#include "tropval/dot.hpp"

#include <sstream>

namespace tropval {

std::string DotGraph::to_string() const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& n : nodes) os << "  \"" << n << "\";\n";
  for (const auto& [a, b] : edges) os << "  \"" << a << "\" -> \"" << b << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tropval
