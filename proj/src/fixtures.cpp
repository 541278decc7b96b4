#include "tropval/fixtures.hpp"

#include "tropval/format.hpp"

namespace tropval {
namespace fixtures {

namespace {
// fixtures are shared singletons so pointer-identity checks (shared sources,
// connected maps) hold across call sites
FiniteSemiringPtr parse_fs(const char* doc) {
  return std::static_pointer_cast<const FiniteSemiring>(parse_carrier(doc));
}
}  // namespace

FiniteSemiringPtr boolean() {
  static const char* doc =
      "semiring bool\n"
      "elements 0 1\n"
      "zero 0\n"
      "one 1\n"
      "add\n"
      "0 1\n"
      "1 1\n"
      "mul\n"
      "0 0\n"
      "0 1\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

FiniteSemiringPtr nil3() {
  static const char* doc =
      "semiring nil3\n"
      "elements 0 eps 1\n"
      "zero 0\n"
      "one 1\n"
      "add\n"
      "0 eps 1\n"
      "eps eps 1\n"
      "1 1 1\n"
      "mul\n"
      "0 0 0\n"
      "0 0 eps\n"
      "0 eps 1\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

FiniteSemiringPtr chain3() {
  static const char* doc =
      "semiring chain3\n"
      "elements 0 1 b\n"
      "zero 0\n"
      "one 1\n"
      "add\n"
      "0 1 b\n"
      "1 1 b\n"
      "b b b\n"
      "mul\n"
      "0 0 0\n"
      "0 1 b\n"
      "0 b b\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

FiniteSemiringPtr m4() {
  static const char* doc =
      "semiring m4\n"
      "elements 0 a 1 b\n"
      "zero 0\n"
      "one 1\n"
      "add\n"
      "0 a 1 b\n"
      "a a 1 b\n"
      "1 1 1 b\n"
      "b b b b\n"
      "mul\n"
      "0 0 0 0\n"
      "0 a a a\n"
      "0 a 1 b\n"
      "0 a b b\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

FiniteSemiringPtr bad_add3() {
  static const char* doc =
      "semiring badadd3\n"
      "elements 0 a 1\n"
      "zero 0\n"
      "one 1\n"
      "add\n"
      "0 a 1\n"
      "a 1 1\n"
      "1 1 1\n"
      "mul\n"
      "0 0 0\n"
      "0 a a\n"
      "0 a 1\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

FiniteSemiringPtr bool2() {
  static const char* doc =
      "semiring bool2\n"
      "elements 00 01 10 11\n"
      "zero 00\n"
      "one 11\n"
      "add\n"
      "00 01 10 11\n"
      "01 01 11 11\n"
      "10 11 10 11\n"
      "11 11 11 11\n"
      "mul\n"
      "00 00 00 00\n"
      "00 01 00 01\n"
      "00 00 10 10\n"
      "00 01 10 11\n";
  static FiniteSemiringPtr cached = parse_fs(doc);
  return cached;
}

}  // namespace fixtures
}  // namespace tropval
