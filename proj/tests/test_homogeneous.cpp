#include <memory>

#include "doctest.h"
#include "grpext/homogeneous.hpp"
#include "grpext/samples.hpp"

using namespace grpext;

namespace {

GroupPtr cyclic(int n) { return std::make_shared<const FiniteGroup>(samples::cyclic(n)); }
GroupPtr klein_four() { return std::make_shared<const FiniteGroup>(samples::klein_four()); }
GroupPtr sym3() { return std::make_shared<const FiniteGroup>(samples::symmetric(3)); }

std::vector<AutTable> trivial_form(const FiniteGroup& G, const FiniteGroup& Q) {
    return std::vector<AutTable>(Q.n, aut_identity(G.n));
}

GSpace regular_torsor(GroupPtr G, GroupPtr Q, std::vector<AutTable> form) {
    std::vector<int> c(form.size(), 0);
    return twisted_torsor(std::move(G), std::move(Q), std::move(form), std::move(c));
}

GSpace one_point(GroupPtr G, GroupPtr Q, std::vector<AutTable> form) {
    std::vector<std::vector<int>> gact(G->n, std::vector<int>(1, 0));
    std::vector<std::vector<int>> qact(Q->n, std::vector<int>(1, 0));
    return make_gspace(std::move(G), std::move(Q), std::move(form), 1, std::move(gact),
                       std::move(qact));
}

// Right coset space H\G with Q acting through `qcos` (point permutations).
GSpace coset_space(GroupPtr G, GroupPtr Q, std::vector<AutTable> form,
                   const std::vector<int>& subgroup, std::vector<std::vector<int>> qcos) {
    std::vector<int> coset_of(G->n, -1), reps;
    for (int g = 0; g < G->n; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : subgroup) coset_of[G->prod(h, g)] = c;
    }
    int nx = static_cast<int>(reps.size());
    std::vector<std::vector<int>> gact(G->n, std::vector<int>(nx));
    for (int g = 0; g < G->n; ++g)
        for (int x = 0; x < nx; ++x) gact[g][x] = coset_of[G->prod(reps[x], g)];
    return make_gspace(std::move(G), std::move(Q), std::move(form), nx, std::move(gact),
                       std::move(qcos));
}

}  // namespace

TEST_CASE("regular torsor: trivial stabilizer, neutral, self-dominating") {
    auto G = sym3();
    auto Q = cyclic(2);
    auto form = trivial_form(*G, *Q);
    auto S = regular_torsor(G, Q, form);
    CHECK(is_free(S));
    CHECK(S.nx == 6);

    auto sd = stabilizer_kernel(S, 0);
    CHECK(sd.H.group.n == 1);
    CHECK(is_neutral(sd.kernel, sd.cocycle));

    auto dom = dominated_by_torsor(S);
    REQUIRE(dom.has_value());
    // the equivariant map of torsors is a bijection
    std::vector<char> seen(S.nx, 0);
    for (int v : dom->map) seen[v] = 1;
    for (char c : seen) CHECK(c == 1);
    CHECK(verify_51(S));
}

TEST_CASE("one-point space: stabilizer is all of G, class splits") {
    auto G = cyclic(4);
    auto Q = cyclic(2);
    std::vector<AutTable> form{aut_identity(4), G->inv};
    auto S = one_point(G, Q, form);
    CHECK(!is_free(S));

    auto sd = stabilizer_kernel(S, 0);
    CHECK(sd.H.group.n == 4);
    for (int s = 0; s < 2; ++s) CHECK(sd.a[s] == 0);
    CHECK(is_neutral(sd.kernel, sd.cocycle));

    auto ext = class_alpha(S, 0);
    CHECK(ext.E->n == 8);
    CHECK(find_splitting(ext).has_value());
    CHECK(dominated_by_torsor(S).has_value());
    CHECK(verify_51(S));
}

TEST_CASE("coset space of a transposition subgroup in S3") {
    auto G = sym3();
    auto Q = cyclic(2);
    std::vector<int> sub{0};
    for (int g = 1; g < 6; ++g)
        if (G->order_of(g) == 2) {
            sub = {0, g};
            break;
        }
    std::vector<std::vector<int>> qcos(2, {0, 1, 2});  // Q acts trivially on the 3 cosets
    auto S = coset_space(G, Q, trivial_form(*G, *Q), sub, qcos);
    CHECK(S.nx == 3);

    auto sd = stabilizer_kernel(S, 0);
    CHECK(sd.H.group.n == 2);
    CHECK(is_neutral(sd.kernel, sd.cocycle));

    auto ext = class_alpha(S, 0);
    CHECK(ext.E->n == 4);
    CHECK(find_splitting(ext).has_value());
    CHECK(verify_51(S));
}

TEST_CASE("non-neutral coset space is not dominated by any torsor") {
    // G = Z/4 acting on Z/2 by reduction, Q = Z/2 shifting the two points.
    auto G = cyclic(4);
    auto Q = cyclic(2);
    std::vector<std::vector<int>> gact(4, std::vector<int>(2));
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 2; ++x) gact[g][x] = (x + g) % 2;
    std::vector<std::vector<int>> qact{{0, 1}, {1, 0}};
    auto S = make_gspace(G, Q, trivial_form(*G, *Q), 2, gact, qact);

    auto sd = stabilizer_kernel(S, 0);
    CHECK(sd.H.group.n == 2);
    CHECK(sd.cocycle.g[1][1] != 0);  // the section defect hits the order-2 element
    CHECK(!is_neutral(sd.kernel, sd.cocycle));

    auto ext = class_alpha(S, 0);
    CHECK(ext.E->n == 4);
    CHECK(isomorphic_brute(*ext.E, samples::cyclic(4)));
    CHECK(!find_splitting(ext).has_value());

    CHECK(!dominated_by_torsor(S).has_value());
    CHECK(verify_51(S));
}

TEST_CASE("twisted torsors over an inversion form") {
    auto G = cyclic(3);
    auto Q = cyclic(2);
    std::vector<AutTable> form{aut_identity(3), G->inv};
    for (int c1 = 0; c1 < 3; ++c1) {
        auto S = twisted_torsor(G, Q, form, {0, c1});
        CHECK(is_free(S));
        auto sd = stabilizer_kernel(S, 0);
        CHECK(sd.H.group.n == 1);
        CHECK(dominated_by_torsor(S).has_value());
        CHECK(verify_51(S));
    }
}

TEST_CASE("stabilizer class is independent of the section seed") {
    auto G = sym3();
    auto Q = cyclic(2);
    std::vector<int> sub{0};
    for (int g = 1; g < 6; ++g)
        if (G->order_of(g) == 2) {
            sub = {0, g};
            break;
        }
    auto S = coset_space(G, Q, trivial_form(*G, *Q), sub, {{0, 1, 2}, {0, 1, 2}});
    auto base = stabilizer_kernel(S, 0, 0);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto other = stabilizer_kernel(S, 0, seed);
        validate_cocycle(base.kernel, other.cocycle);
        CHECK(cocycles_equivalent(base.kernel, base.cocycle, other.cocycle));
    }
}

TEST_CASE("stabilizer class is independent of the base point") {
    auto G = cyclic(4);
    auto Q = cyclic(2);
    std::vector<std::vector<int>> gact(4, std::vector<int>(2));
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 2; ++x) gact[g][x] = (x + g) % 2;
    auto S = make_gspace(G, Q, trivial_form(*G, *Q), 2, gact, {{0, 1}, {1, 0}});
    bool n0 = false, first = true;
    for (int x0 = 0; x0 < S.nx; ++x0) {
        auto sd = stabilizer_kernel(S, x0);
        bool n = is_neutral(sd.kernel, sd.cocycle);
        if (first) {
            n0 = n;
            first = false;
        }
        CHECK(n == n0);
        auto ext = class_alpha(S, x0);
        CHECK(isomorphic_brute(*ext.E, *class_alpha(S, 0).E));
    }
}

TEST_CASE("extension of the stabilizer matches the section-defect cocycle") {
    auto G = cyclic(4);
    auto Q = cyclic(2);
    std::vector<std::vector<int>> gact(4, std::vector<int>(2));
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 2; ++x) gact[g][x] = (x + g) % 2;
    auto S = make_gspace(G, Q, trivial_form(*G, *Q), 2, gact, {{0, 1}, {1, 0}});

    auto sd = stabilizer_kernel(S, 0);
    auto ext = class_alpha(S, 0);
    auto c = extension_to_cocycle(sd.kernel, ext);
    CHECK(cocycles_equivalent(sd.kernel, sd.cocycle, c));

    // and the cocycle rebuilds an equivalent extension
    auto rebuilt = cocycle_to_extension(sd.kernel, sd.cocycle);
    CHECK(extensions_equivalent(rebuilt, cocycle_to_extension(sd.kernel, c)));
}

TEST_CASE("neutrality agrees with torsor domination across a batch") {
    std::vector<GSpace> batch;
    auto z2 = cyclic(2);
    auto z3 = cyclic(3);
    auto z4 = cyclic(4);
    auto v4 = klein_four();
    auto s3 = sym3();

    batch.push_back(regular_torsor(s3, z2, trivial_form(*s3, *z2)));
    batch.push_back(regular_torsor(v4, z3, trivial_form(*v4, *z3)));
    batch.push_back(one_point(z4, z2, {aut_identity(4), z4->inv}));
    batch.push_back(one_point(s3, z2, trivial_form(*s3, *z2)));
    for (int c1 = 0; c1 < 3; ++c1)
        batch.push_back(twisted_torsor(z3, z2, {aut_identity(3), z3->inv}, {0, c1}));
    {
        std::vector<std::vector<int>> gact(4, std::vector<int>(2));
        for (int g = 0; g < 4; ++g)
            for (int x = 0; x < 2; ++x) gact[g][x] = (x + g) % 2;
        batch.push_back(make_gspace(z4, z2, trivial_form(*z4, *z2), 2, gact, {{0, 1}, {1, 0}}));
        batch.push_back(make_gspace(z4, z2, trivial_form(*z4, *z2), 2, gact, {{0, 1}, {0, 1}}));
    }
    {
        std::vector<int> sub{0};
        for (int g = 1; g < 6; ++g)
            if (s3->order_of(g) == 2) {
                sub = {0, g};
                break;
            }
        batch.push_back(coset_space(s3, z2, trivial_form(*s3, *z2), sub, {{0, 1, 2}, {0, 1, 2}}));
    }
    CHECK(batch.size() >= 10);
    for (const auto& S : batch) CHECK(verify_51(S));
}

TEST_CASE("space validation rejects broken data") {
    auto G = cyclic(2);
    auto Q = cyclic(2);
    auto form = trivial_form(*G, *Q);

    // not a permutation
    CHECK_THROWS_AS(make_gspace(G, Q, form, 2, {{0, 1}, {0, 0}}, {{0, 1}, {0, 1}}), Error);
    // identity moves a point
    CHECK_THROWS_AS(make_gspace(G, Q, form, 2, {{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}), Error);
    // not transitive
    CHECK_THROWS_AS(make_gspace(G, Q, form, 2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}), Error);

    // incompatible actions: Q = Z/2 inverts Z/4 but fixes every coset point
    auto Z4 = cyclic(4);
    std::vector<std::vector<int>> gact(4, std::vector<int>(4));
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 4; ++x) gact[g][x] = (x + g) % 4;
    std::vector<std::vector<int>> qact{{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK_THROWS_AS(make_gspace(Z4, Q, {aut_identity(4), Z4->inv}, 4, gact, qact), Error);

    // malformed twist
    auto z3 = cyclic(3);
    CHECK_THROWS_AS(twisted_torsor(z3, Q, trivial_form(*z3, *Q), {1, 0}), Error);
}
