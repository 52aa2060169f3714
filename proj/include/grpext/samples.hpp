#pragma once

#include "grpext/group.hpp"

namespace grpext::samples {

FiniteGroup trivial();
FiniteGroup cyclic(int n);
FiniteGroup klein_four();
FiniteGroup dihedral(int n);  // order 2n, n >= 1
FiniteGroup quaternion8();
FiniteGroup symmetric(int n);  // n <= 5
FiniteGroup alternating4();

// Transformations aX+b over F5 under composition; order 20. Element (a,b)
// with a in 1..4, b in 0..4 has input index (a-1)*5 + b before identity
// relabeling.
FiniteGroup frobenius20();
// Index-2-subgroup elements {a = +-1} of frobenius20(), in frobenius20()'s
// element numbering. The subgroup is isomorphic to the dihedral group D5.
std::vector<int> frobenius20_half_subgroup(const FiniteGroup& f20);

}  // namespace grpext::samples
