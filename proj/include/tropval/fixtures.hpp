#pragma once

#include "tropval/carrier.hpp"

namespace tropval {
namespace fixtures {

/// The Boolean semiring {0, 1} with 1 + 1 = 1.
FiniteSemiringPtr boolean();
/// {0, eps, 1} with eps^2 = 0 along the chain 0 < eps < 1.
FiniteSemiringPtr nil3();
/// {0, 1, b} with b^2 = b along the chain 0 < 1 < b.
FiniteSemiringPtr chain3();
/// {0, a, 1, b} with a^2 = a, ab = a, b^2 = b along the chain 0 < a < 1 < b.
FiniteSemiringPtr m4();
/// {0, a, 1} with a + a = 1 injected: passes shape checks, fails the axioms.
FiniteSemiringPtr bad_add3();
/// The product lattice B x B: join as addition, meet as multiplication.
FiniteSemiringPtr bool2();

}  // namespace fixtures
}  // namespace tropval
