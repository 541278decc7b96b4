#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tropval {

/// Thrown when an input violates an operation's stated precondition.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown for malformed input documents (bad table shape, syntax errors).
/// Distinct from mathematical check failures, which are reported as values.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

/// Outcome of a batch of named checks. `exhaustive` records whether every
/// case was scanned or only a deterministic sample.
struct Report {
  std::vector<CheckLine> lines;
  bool exhaustive = true;

  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string witness = "") {
    lines.push_back({std::move(name), pass, std::move(witness)});
  }
  void merge(const Report& o, const std::string& prefix = "") {
    for (const auto& l : o.lines) lines.push_back({prefix + l.name, l.pass, l.witness});
    exhaustive = exhaustive && o.exhaustive;
  }
  const CheckLine* find(const std::string& name) const {
    for (const auto& l : lines)
      if (l.name == name) return &l;
    return nullptr;
  }
  std::string to_string() const;
  /// Throws std::logic_error naming the first failed line; used where a
  /// construction is specified to assert its own theorem clauses.
  void require(const std::string& context) const;
};

}  // namespace tropval
