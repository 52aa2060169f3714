#pragma once

#include <cstdint>
#include <optional>

#include "grpext/cohomology.hpp"
#include "grpext/group.hpp"

namespace grpext {

// Kernel (G, kappa): a homomorphism kappa from Q to the outer automorphism
// group of G, given by one representing automorphism per element of Q.
struct Kernel {
    GroupPtr G;
    GroupPtr Q;
    AutGroup aut;                  // Aut(G)
    std::vector<AutTable> kappa;   // per element of Q, a representative of its outer class
    SubgroupGroup Z;               // center of G as its own group
};

// Validates each table is an automorphism, kappa is constant on nothing it
// shouldn't be, and s -> [kappa_s] is a homomorphism into Out(G) sending the
// identity to the inner class. Throws NotOuterHomomorphism on failure.
Kernel make_kernel(GroupPtr G, GroupPtr Q, std::vector<AutTable> kappa,
                   const Limits& lim = default_limits());

// Center of G as a Q-module; the action is kappa restricted to the center
// (well defined: inner automorphisms fix the center pointwise).
QModule center_module(const Kernel& k);

// A 2-cocycle (f, g): f[s] an automorphism of G in the class kappa_s with
// f[1] = id, and g[s][t] in G, normalized (g with an identity argument is 1),
// satisfying
//   f_s o f_t = int(g_st) o f_st
//   f_s(g_tu) * g_s,tu = g_st * g_st,u
struct TwoCocycle {
    std::vector<AutTable> f;
    std::vector<std::vector<int>> g;
};

bool is_cocycle(const Kernel& k, const TwoCocycle& c);
void validate_cocycle(const Kernel& k, const TwoCocycle& c);  // throws Validation with a reason

// The obstruction 3-cochain over center_module(k) computed from seeded
// choices of lifts f_s and of g with the right inner part. Its class in
// H^3(Q, Z(G)) does not depend on the seed.
Cochain obstruction(const Kernel& k, std::uint64_t seed = 0);
bool obstruction_vanishes(const Kernel& k, std::uint64_t seed = 0,
                          const Limits& lim = default_limits());

// A 2-cocycle built from seeded lift choices, when one exists (exactly when
// the obstruction class vanishes).
std::optional<TwoCocycle> find_cocycle(const Kernel& k, std::uint64_t seed = 0,
                                       const Limits& lim = default_limits());

// Action of a central 2-cochain: z * (f, g) = (f, z g).
TwoCocycle act(const Kernel& k, const Cochain& z, const TwoCocycle& c);

// Equivalence via h: Q -> G with f'_s = int(h_s) o f_s and
// g'_st = h_s * f_s(h_t) * g_st * h_st^-1.
bool cocycles_equivalent(const Kernel& k, const TwoCocycle& a, const TwoCocycle& b,
                         const Limits& lim = default_limits());

// Neutral classes are the ones containing a cocycle with g identically 1.
bool is_neutral(const Kernel& k, const TwoCocycle& c, const Limits& lim = default_limits());

// All classes of H^2(Q, (G, kappa)) as a torsor under H^2(Q, Z(G)):
// classes[i] = h2z.reps[i] acting on a common base cocycle. Empty classes
// means the set is empty (nonvanishing obstruction).
struct H2Set {
    QModule zmod;
    CohomologyGroup h2z;
    std::vector<TwoCocycle> classes;
};
H2Set enumerate_h2(const Kernel& k, const Limits& lim = default_limits());

// Index of the class of c in h (by equivalence testing), -1 if absent.
int h2_class_index(const Kernel& k, const H2Set& h, const TwoCocycle& c,
                   const Limits& lim = default_limits());

// Brute-force H^2 over all central corrections of one lift choice; the
// independent oracle for the linear path. Returns pairwise inequivalent
// cocycles (every class exactly once).
std::vector<TwoCocycle> enumerate_h2_brute(const Kernel& k, const Limits& lim = default_limits());

}  // namespace grpext
