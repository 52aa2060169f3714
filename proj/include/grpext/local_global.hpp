#pragma once

#include <optional>

#include "grpext/extension.hpp"

namespace grpext {

// Conjugacy classes of involutions of Q; each class is sorted ascending, so
// the canonical representative is the least element.
struct OrderingSpace {
    GroupPtr Q;
    std::vector<std::vector<int>> classes;

    int count() const { return static_cast<int>(classes.size()); }
    int rep(int xi) const { return classes[xi].front(); }
};

OrderingSpace orderings(GroupPtr Q);

// Local status of an extension at one ordering class: the involutions of E
// over the canonical representative, and whether any exist.
struct LocalStatus {
    bool neutral = false;
    std::vector<int> lifts;
};

LocalStatus localize(const Extension& X, const OrderingSpace& os, int xi);

// tau maps every involution of Q to an involution of E above it (-1 on
// non-involutions), built by lifting one representative per class and
// transporting it along conjugation. `compatible` records whether
// x tau(t) x^-1 and tau(pi(x) t pi(x)^-1) are conjugate under iota(G) for
// every pair; the construction does not guarantee it over finite Q.
struct InvSection {
    std::vector<int> tau;
    bool compatible = false;
};

// Throws NotLocallySplit when some ordering class has no lift.
InvSection inv_section(const Extension& X, const Limits& lim = default_limits());

// A splitting whose section maps every involution t to a conjugate of
// tau(t) under iota(G), when one exists among all splittings.
std::optional<Splitting> compatible_splitting(const Extension& X, const InvSection& tau,
                                              const Limits& lim = default_limits());

// The kernel and cocycle restricted to the subgroup generated by one
// involution of Q (order 2).
Kernel restrict_kernel(const Kernel& k, const SubgroupGroup& S,
                       const Limits& lim = default_limits());
TwoCocycle restrict_cocycle(const TwoCocycle& c, const SubgroupGroup& S);

// Per H^2 class: local neutrality at each ordering, global neutrality, and
// whether "locally neutral everywhere implies globally neutral" held.
struct ClassLocalReport {
    std::vector<char> locally_neutral;
    bool globally_neutral = false;
    bool verdict = false;
};

struct LocalReport {
    OrderingSpace os;
    std::vector<ClassLocalReport> classes;  // aligned with enumerate_h2(L).classes
};

LocalReport report(const Kernel& L, const Limits& lim = default_limits());

// Assignments of a local class to every ordering (sections of the local-
// class sheaf), plus which are hit by global classes under restriction.
struct SheafSections {
    std::vector<int> local_counts;           // local H^2 size per ordering
    std::vector<std::vector<int>> sections;  // every assignment, lexicographic
    std::vector<int> image;                  // global class -> section index
    std::vector<char> hit;                   // per section
};

SheafSections sheaf_sections(const Kernel& L, const Limits& lim = default_limits());

}  // namespace grpext
