#pragma once

#include "tropval/carrier.hpp"

#include <string_view>

namespace tropval {

/// Parses a carrier document. Either the line-oriented semiring table format
///
///   semiring <name>
///   elements <e0> <e1> ...
///   zero <name>
///   one <name>
///   add
///   <n rows of n element names>
///   mul
///   <n rows of n element names>
///
/// with `#` comments, or a keyword document selecting a built-in carrier:
/// `carrier maxplus_z`, `carrier maxplus_n`, `carrier ratfunc`.
/// Syntax errors carry line/column positions.
CarrierPtr parse_carrier(std::string_view text);

/// Canonical serialization; parse(serialize(s)) reproduces s bit-exactly.
std::string serialize(const FiniteSemiring& s);

/// Parses `subset <name> of <semiring-name> : <e_i> <e_j> ...` against the
/// given finite carrier. Returns the member indices.
std::vector<int> parse_subset_line(std::string_view text, const FiniteSemiring& s,
                                   std::string* subset_name = nullptr);

/// Parses `partition of <carrier>: {e_i e_j ...} {e_k ...} ...`.
std::vector<std::vector<int>> parse_partition(std::string_view text, const FiniteSemiring& s);

}  // namespace tropval
