#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpext/abelian.hpp"
#include "grpext/group.hpp"

namespace grpext {

// Finite Q-module: abelian M with Q acting by automorphisms.
struct QModule {
    GroupPtr Q;
    AbelianCoords M;  // holds the group pointer and its cyclic decomposition
    std::vector<AutTable> action;

    int q() const { return Q->n; }
    int m() const { return M.M->n; }
    int act(int s, int x) const { return action[s][x]; }
};

QModule make_qmodule(GroupPtr Q, GroupPtr M, std::vector<AutTable> action);
QModule trivial_qmodule(GroupPtr Q, GroupPtr M);

// Normalized n-cochain Q^n -> M: values stored on tuples of non-identity
// arguments only ((q-1)^n entries); any identity argument evaluates to 0.
struct Cochain {
    int degree = 0;
    std::vector<int> values;

    bool is_zero() const;
    bool operator==(const Cochain& o) const = default;
};

std::size_t cochain_entries(int q, int n);
Cochain zero_cochain(int q, int n);
int cochain_eval(const Cochain& c, int q, const std::vector<int>& args);
Cochain cochain_add(const QModule& mod, const Cochain& a, const Cochain& b);
Cochain cochain_sub(const QModule& mod, const Cochain& a, const Cochain& b);

Cochain coboundary(const QModule& mod, const Cochain& c);
bool is_cocycle(const QModule& mod, const Cochain& c);
bool is_coboundary(const QModule& mod, const Cochain& c, const Limits& lim = default_limits());
// A cochain w with dw = c, when one exists.
std::optional<Cochain> coboundary_preimage(const QModule& mod, const Cochain& c,
                                           const Limits& lim = default_limits());
bool cohomologous(const QModule& mod, const Cochain& a, const Cochain& b,
                  const Limits& lim = default_limits());
// Lexicographically least member of the class of c, in the coordinate
// order of the module's cyclic decomposition.
Cochain canonical_cocycle(const QModule& mod, const Cochain& c, const Limits& lim = default_limits());

// H^n(Q, M) as a finite abelian group of canonical class representatives.
struct CohomologyGroup {
    int degree = 0;
    std::vector<Cochain> reps;            // reps[0] is the zero class
    std::vector<std::vector<int>> table;  // class addition
    std::vector<int> negatives;

    int order() const { return static_cast<int>(reps.size()); }
    int add(int i, int j) const { return table[i][j]; }
    int neg(int i) const { return negatives[i]; }
};

CohomologyGroup cohomology(const QModule& mod, int n, const Limits& lim = default_limits());
// Independent oracle: full enumeration of cochains. Small inputs only.
CohomologyGroup cohomology_enumerate(const QModule& mod, int n, const Limits& lim = default_limits());
// Index of c's class within h's representative list (-1 if absent).
int class_index(const QModule& mod, const CohomologyGroup& h, const Cochain& c,
                const Limits& lim = default_limits());

// Two-term complex A -> B in degrees -1 and 0, rho Q-equivariant.
struct TwoTermComplex {
    QModule A;
    QModule B;
    std::vector<int> rho;  // element map A.M -> B.M
};

TwoTermComplex make_two_term(QModule A, QModule B, std::vector<int> rho);

// Hypercohomology class group of the total complex; a degree-i class is
// represented by a pair (b, a) with b in C^i(B), a in C^{i+1}(A) and
// differential D(b, a) = (db + rho a, -da).
struct HyperGroup {
    int degree = 0;
    std::vector<std::pair<Cochain, Cochain>> reps;
    std::vector<std::vector<int>> table;

    int order() const { return static_cast<int>(reps.size()); }
};

HyperGroup hypercohomology(const TwoTermComplex& cx, int i, const Limits& lim = default_limits());
int hyper_class_index(const TwoTermComplex& cx, const HyperGroup& h, const Cochain& b,
                      const Cochain& a, const Limits& lim = default_limits());

// Exactness of the long exact sequence induced by
// 0 -> (1->B) -> (A->B) -> (A->1) -> 0, checked at every junction from
// H^0(B) through HH^2.
struct LesReport {
    bool pass = true;
    std::string first_failure;
};
LesReport les_check(const TwoTermComplex& cx, const Limits& lim = default_limits());

// Restriction of a cochain along a subgroup inclusion of Q.
QModule restrict_module(const QModule& mod, const SubgroupGroup& S);
Cochain restrict_cochain(const QModule& mod, const SubgroupGroup& S, const Cochain& c);

}  // namespace grpext
