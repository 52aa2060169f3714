#pragma once

#include <optional>

#include "grpext/kernel.hpp"

namespace grpext {

// A short exact sequence 1 -> G -> E -> Q -> 1 given by an injective
// homomorphism iota with image equal to the kernel of the surjection pi.
struct Extension {
    GroupPtr E;
    GroupPtr G;
    GroupPtr Q;
    std::vector<int> iota;  // G -> E
    std::vector<int> pi;    // E -> Q
};

Extension make_extension(GroupPtr E, GroupPtr G, GroupPtr Q, std::vector<int> iota,
                         std::vector<int> pi);

// E = G x Q with (x,s)(y,t) = (x f_s(y) g_st, st), relabeled so the identity
// sits at index 0.
Extension cocycle_to_extension(const Kernel& k, const TwoCocycle& c,
                               const Limits& lim = default_limits());

// The kernel an extension induces: kappa_s is the outer class of conjugation
// by any preimage of s.
Kernel induced_kernel(const Extension& ext, const Limits& lim = default_limits());

// Cocycle from the section through least preimages (identity over the
// identity). k must be the induced kernel of ext (same G, Q, kappa classes).
TwoCocycle extension_to_cocycle(const Kernel& k, const Extension& ext);

// Equivalence over fixed G and Q: an isomorphism E_a -> E_b commuting with
// iota and pi. Requires a.G == b.G and a.Q == b.Q elementwise.
bool extensions_equivalent(const Extension& a, const Extension& b,
                           const Limits& lim = default_limits());

// A homomorphic section of pi.
struct Splitting {
    std::vector<int> section;  // Q -> E
};

enum class SplitStrategy { Brute, Reduce };

// Brute searches sections directly over preimage fibers; Reduce peels a
// characteristic subgroup of G, splits the quotient extension in every
// possible way, and recurses into the pulled-back subextensions.
std::optional<Splitting> find_splitting(const Extension& ext,
                                        SplitStrategy strategy = SplitStrategy::Reduce,
                                        const Limits& lim = default_limits());

std::vector<Splitting> find_all_splittings(const Extension& ext,
                                           const Limits& lim = default_limits());

// The subextension over a subgroup of Q: pi^-1(S) as an extension of S by G.
Extension restrict(const Extension& ext, const SubgroupGroup& S);

// Torsor action on the extension side: B an extension of Q by the center of
// E's kernel (as a group in its own right, embedded via zeta: Z -> G), E an
// extension of Q by G. Returns (B x_Q E) / D with D the antidiagonal copy of
// Z, an extension of Q by G again.
Extension fiber_product_action(const Extension& B, const std::vector<int>& zeta,
                               const Extension& E, const Limits& lim = default_limits());

}  // namespace grpext
