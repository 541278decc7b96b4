#include "tropval/report.hpp"

#include <sstream>

namespace tropval {

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << l.name << (l.pass ? " PASS" : " FAIL");
    if (!l.witness.empty()) os << " (" << l.witness << ")";
    os << "\n";
  }
  os << (exhaustive ? "mode exhaustive" : "mode sampled") << "\n";
  return os.str();
}

void Report::require(const std::string& context) const {
  for (const auto& l : lines)
    if (!l.pass)
      throw std::logic_error(context + ": check '" + l.name + "' failed" +
                             (l.witness.empty() ? "" : " [" + l.witness + "]"));
}

}  // namespace tropval
