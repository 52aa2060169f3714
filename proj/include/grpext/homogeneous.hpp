#pragma once

#include <cstdint>
#include <optional>

#include "grpext/extension.hpp"

namespace grpext {

// A transitive right G-set with a compatible Q-action: s(x.g) = s(x).s(g),
// where Q acts on G through `form`.
struct GSpace {
    GroupPtr G;
    GroupPtr Q;
    std::vector<AutTable> form;           // Q -> Aut(G), a homomorphism
    int nx = 0;                           // |X|
    std::vector<std::vector<int>> gact;   // gact[g][x] = x.g
    std::vector<std::vector<int>> qact;   // qact[s][x] = s(x)

    int xg(int x, int g) const { return gact[g][x]; }
    int sx(int s, int x) const { return qact[s][x]; }
};

GSpace make_gspace(GroupPtr G, GroupPtr Q, std::vector<AutTable> form, int nx,
                   std::vector<std::vector<int>> gact, std::vector<std::vector<int>> qact);

bool is_free(const GSpace& S);  // torsor = free (and transitive) G-action

// The regular torsor twisted by a 1-cocycle c (c(st) = c(s) s(c(t))):
// X = G, x.g by right multiplication, s*x = c(s) s(x).
GSpace twisted_torsor(GroupPtr G, GroupPtr Q, std::vector<AutTable> form, std::vector<int> c);

// Stabilizer kernel at a base point: H = Stab(x0), a[s] a choice with
// s(x0) = x0.a_s (least for seed 0), f_s = int(a_s) o form_s restricted to H.
struct StabilizerData {
    SubgroupGroup H;
    std::vector<int> a;
    Kernel kernel;
    TwoCocycle cocycle;  // (f, g_st = a_s s(a_t) a_st^-1)
};

StabilizerData stabilizer_kernel(const GSpace& S, int x0, std::uint64_t seed = 0,
                                 const Limits& lim = default_limits());

// E_{X,x0} = {(g,s) in G x| Q : s(x0) = x0.g} as an extension of Q by H.
Extension class_alpha(const GSpace& S, int x0, const Limits& lim = default_limits());

// A torsor with an equivariant map onto X, found by brute force over
// 1-cocycle twists and images of the identity point.
struct Domination {
    GSpace torsor;
    std::vector<int> map;  // torsor point (= element of G) -> point of X
};

std::optional<Domination> dominated_by_torsor(const GSpace& S,
                                              const Limits& lim = default_limits());

// Whether neutrality of the stabilizer class agrees with the existence of a
// dominating torsor, both computed independently.
bool verify_51(const GSpace& S, const Limits& lim = default_limits());

}  // namespace grpext
