#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpext/error.hpp"

namespace grpext {

// Finite group by dense multiplication table. Element 0 is always the
// identity; ingestion relabels if the input table has the identity
// elsewhere. Immutable after construction.
struct FiniteGroup {
    int n = 1;
    std::vector<int> mul;  // n*n, row-major: mul[a*n+b] = a*b
    std::vector<int> inv;  // two-sided inverses
    std::vector<std::string> labels;  // optional, size n or empty

    int order() const { return n; }
    int prod(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int conj(int a, int x) const { return prod(prod(x, a), inv[x]); }  // x a x^-1
    int order_of(int a) const;
    bool is_abelian() const;
    std::string label(int a) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table (identity, associativity, inverses), relabels so the
// identity sits at index 0, and records the relabeling old->new.
struct BuiltGroup {
    FiniteGroup group;
    std::vector<int> old_to_new;
};
BuiltGroup build_group_relabeled(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels = {});
FiniteGroup build_group(const std::vector<std::vector<int>>& table,
                        std::vector<std::string> labels = {});

// Group generated by permutations of {0..degree-1}; elements become the
// permutations themselves, multiplied by composition (left acts first).
FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    const Limits& lim = default_limits());

struct GroupMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image;  // size source->n

    int operator()(int x) const { return image[x]; }
};

// Throws NotHomomorphism unless image respects products and identity.
void validate_hom(const GroupMap& m);
bool is_hom(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& image);

// --- automorphisms (tables are self-maps of one group) ---

using AutTable = std::vector<int>;

AutTable aut_identity(int n);
AutTable aut_compose(const AutTable& a, const AutTable& b);  // (a o b)(x) = a(b(x))
AutTable aut_invert(const AutTable& a);
AutTable inner_aut(const FiniteGroup& G, int x);  // int(x): y -> x y x^-1
bool is_automorphism(const FiniteGroup& G, const AutTable& t);

// Aut(G) with the Int(G) subgroup and Out(G) coset structure. autos[0] is
// the identity; the list is sorted lexicographically and closed under
// composition and inverse.
struct AutGroup {
    GroupPtr G;
    std::vector<AutTable> autos;
    std::vector<int> inner_of;      // element x -> index of int(x)
    std::vector<char> is_inner;     // per auto index
    std::vector<int> coset_rep;     // per auto index -> canonical auto index of its Int-coset
    std::vector<int> outer_reps;    // distinct coset reps, sorted

    int index_of(const AutTable& t) const;                        // -1 if absent
    int coset_of_table(const AutTable& t) const;                  // canonical rep index
    bool same_coset(const AutTable& a, const AutTable& b) const;  // a b^-1 inner
    bool table_is_inner(const AutTable& t) const;
    std::size_t inner_order() const;
    std::size_t outer_order() const { return outer_reps.size(); }

    // Aut(G) as an abstract group; element i is autos[i].
    FiniteGroup as_group(const Limits& lim = default_limits()) const;
    FiniteGroup outer_group(const Limits& lim = default_limits()) const;
};

AutGroup automorphism_group(GroupPtr G, const Limits& lim = default_limits());

// Outer class of an automorphism: equality modulo Int(G).
struct OuterClass {
    const AutGroup* aut = nullptr;
    int rep = 0;  // canonical auto index

    bool operator==(const OuterClass& o) const { return aut == o.aut && rep == o.rep; }
};

// --- subgroup machinery ---

std::vector<int> closure(const FiniteGroup& G, std::vector<int> seed);
std::vector<int> generating_set(const FiniteGroup& G);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems);
bool is_normal(const FiniteGroup& G, const std::vector<int>& elems);

// The subgroup on `elems` (sorted ascending, must contain 0) as its own
// group; to_parent maps new indices back into G.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // size G.n, -1 outside
};
SubgroupGroup subgroup_group(const FiniteGroup& G, std::vector<int> elems);

struct Quotient {
    FiniteGroup group;          // cosets ordered by least representative
    std::vector<int> proj;      // G element -> coset index
    std::vector<int> coset_rep; // coset index -> least element of the coset
};
Quotient quotient(const FiniteGroup& G, const std::vector<int>& normal_subgroup);

std::vector<int> center(const FiniteGroup& G);
std::vector<int> involutions(const FiniteGroup& G);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);
std::vector<int> derived_subgroup(const FiniteGroup& G);
// Product of the minimal normal subgroups.
std::vector<int> socle(const FiniteGroup& G);
// Proper nontrivial characteristic subgroup in preference order
// center > derived > socle; nullopt when none of the three is proper
// nontrivial.
std::optional<std::vector<int>> characteristic_subgroup(const FiniteGroup& G);

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
// G x| Q with (g,s)(h,t) = (g * s(h), st); action[s] is an automorphism
// table of G and must define a homomorphism Q -> Aut(G).
// Pair (g,s) has index g*Q.n + s.
FiniteGroup semidirect_product(const FiniteGroup& G, const FiniteGroup& Q,
                               const std::vector<AutTable>& action);

bool isomorphic_brute(const FiniteGroup& A, const FiniteGroup& B,
                      const Limits& lim = default_limits());

}  // namespace grpext
