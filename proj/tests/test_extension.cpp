#include <doctest.h>

#include <memory>

#include "grpext/extension.hpp"
#include "grpext/samples.hpp"

using namespace grpext;

namespace {

GroupPtr ptr(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Kernel inversion_kernel() {
    auto G = ptr(samples::cyclic(4));
    auto Q = ptr(samples::cyclic(2));
    return make_kernel(G, Q, {aut_identity(4), G->inv});
}

}  // namespace

TEST_CASE("dictionary round trips both ways") {
    auto k = inversion_kernel();
    auto h = enumerate_h2(k);
    REQUIRE(h.classes.size() == 2);
    for (const auto& c : h.classes) {
        auto ext = cocycle_to_extension(k, c);
        CHECK(ext.E->n == 8);
        auto back = extension_to_cocycle(k, ext);
        CHECK(is_cocycle(k, back));
        CHECK(cocycles_equivalent(k, c, back));
        auto rebuilt = cocycle_to_extension(k, back);
        CHECK(extensions_equivalent(ext, rebuilt));
    }
    // inequivalent classes give inequivalent extensions
    CHECK(!extensions_equivalent(cocycle_to_extension(k, h.classes[0]),
                                 cocycle_to_extension(k, h.classes[1])));
}

TEST_CASE("extensions of Z/2 by Z/4 with inversion are D4 and Q8") {
    auto k = inversion_kernel();
    auto h = enumerate_h2(k);
    REQUIRE(h.classes.size() == 2);
    auto d4 = semidirect_product(*k.G, *k.Q, {aut_identity(4), k.G->inv});
    auto q8 = samples::quaternion8();
    int d4_hits = 0, q8_hits = 0;
    for (const auto& c : h.classes) {
        auto ext = cocycle_to_extension(k, c);
        bool is_d4 = isomorphic_brute(*ext.E, d4);
        bool is_q8 = isomorphic_brute(*ext.E, q8);
        CHECK(is_d4 != is_q8);
        d4_hits += is_d4;
        q8_hits += is_q8;
        // splitting iff dihedral, and brute agrees with reduce
        auto brute = find_splitting(ext, SplitStrategy::Brute);
        auto reduce = find_splitting(ext, SplitStrategy::Reduce);
        CHECK(brute.has_value() == is_d4);
        CHECK(reduce.has_value() == is_d4);
        CHECK(is_neutral(k, c) == is_d4);
    }
    CHECK(d4_hits == 1);
    CHECK(q8_hits == 1);
}

TEST_CASE("induced kernel matches the one the extension came from") {
    auto k = inversion_kernel();
    auto h = enumerate_h2(k);
    auto ext = cocycle_to_extension(k, h.classes[0]);
    auto ki = induced_kernel(ext);
    for (int s = 0; s < k.Q->n; ++s) CHECK(k.aut.same_coset(k.kappa[s], ki.kappa[s]));
}

TEST_CASE("frobenius group over its dihedral subgroup does not split") {
    auto f20 = ptr(samples::frobenius20());
    auto sub = samples::frobenius20_half_subgroup(*f20);
    auto D = subgroup_group(*f20, sub);
    auto quo = quotient(*f20, sub);
    std::vector<int> iota(D.group.n), pi(f20->n);
    for (int x = 0; x < D.group.n; ++x) iota[x] = D.to_parent[x];
    for (int e = 0; e < f20->n; ++e) pi[e] = quo.proj[e];
    auto ext = make_extension(f20, ptr(std::move(D.group)),
                              ptr(std::move(quo.group)), iota, pi);
    CHECK(!find_splitting(ext, SplitStrategy::Brute).has_value());
    CHECK(!find_splitting(ext, SplitStrategy::Reduce).has_value());
}

TEST_CASE("all splittings of elementary cases") {
    auto Z2 = ptr(samples::cyclic(2));
    // V4 as Z/2 x Z/2: two sections
    auto k = make_kernel(Z2, Z2, {aut_identity(2), aut_identity(2)});
    auto h = enumerate_h2(k);
    REQUIRE(h.classes.size() == 2);
    int split_counts[2] = {0, 0};
    for (std::size_t i = 0; i < 2; ++i) {
        auto ext = cocycle_to_extension(k, h.classes[i]);
        split_counts[i] = static_cast<int>(find_all_splittings(ext).size());
    }
    // one class is V4 (two complements), the other Z/4 (none)
    std::sort(split_counts, split_counts + 2);
    CHECK(split_counts[0] == 0);
    CHECK(split_counts[1] == 2);
}

TEST_CASE("reduce strategy matches brute on a batch of extensions") {
    std::vector<Kernel> kernels;
    auto Z2 = ptr(samples::cyclic(2));
    auto V4 = ptr(samples::klein_four());
    auto Z4 = ptr(samples::cyclic(4));
    auto Q8 = ptr(samples::quaternion8());
    auto D4 = ptr(samples::dihedral(4));
    kernels.push_back(make_kernel(Z4, Z2, {aut_identity(4), Z4->inv}));
    kernels.push_back(make_kernel(Z4, V4, std::vector<AutTable>(4, aut_identity(4))));
    kernels.push_back(make_kernel(Q8, Z2, {aut_identity(8), aut_identity(8)}));
    {
        auto aut = automorphism_group(D4);
        AutTable outer;
        for (const auto& a : aut.autos)
            if (!aut.table_is_inner(a) && aut.table_is_inner(aut_compose(a, a))) {
                outer = a;
                break;
            }
        REQUIRE(!outer.empty());
        kernels.push_back(make_kernel(D4, Z2, {aut_identity(8), outer}));
    }
    int checked = 0;
    for (const auto& k : kernels)
        for (const auto& c : enumerate_h2(k).classes) {
            auto ext = cocycle_to_extension(k, c);
            auto brute = find_splitting(ext, SplitStrategy::Brute);
            auto reduce = find_splitting(ext, SplitStrategy::Reduce);
            CHECK(brute.has_value() == reduce.has_value());
            if (reduce) {
                // a claimed splitting must actually be one
                const auto& s = reduce->section;
                for (int a = 0; a < k.Q->n; ++a) {
                    CHECK(ext.pi[s[a]] == a);
                    for (int b = 0; b < k.Q->n; ++b)
                        CHECK(ext.E->prod(s[a], s[b]) == s[k.Q->prod(a, b)]);
                }
            }
            ++checked;
        }
    CHECK(checked >= 8);
}

TEST_CASE("fiber product realizes the torsor action") {
    auto k = inversion_kernel();
    auto zmod = center_module(k);
    auto h = enumerate_h2(k);
    auto base = h.classes[0];
    auto E0 = cocycle_to_extension(k, base);

    auto Zg = std::make_shared<const FiniteGroup>(k.Z.group);
    auto kz = make_kernel(Zg, k.Q, zmod.action);
    for (const auto& z : h.h2z.reps) {
        TwoCocycle cz;
        cz.f = zmod.action;
        cz.f[0] = aut_identity(Zg->n);
        cz.g.assign(k.Q->n, std::vector<int>(k.Q->n, 0));
        for (int s = 1; s < k.Q->n; ++s)
            for (int t = 1; t < k.Q->n; ++t) cz.g[s][t] = cochain_eval(z, k.Q->n, {s, t});
        auto B = cocycle_to_extension(kz, cz);
        auto moved = fiber_product_action(B, k.Z.to_parent, E0);
        CHECK(extensions_equivalent(moved, cocycle_to_extension(k, act(k, z, base))));
    }
}

TEST_CASE("restriction to a subgroup of Q") {
    auto Z2 = ptr(samples::cyclic(2));
    auto V4 = ptr(samples::klein_four());
    auto k = make_kernel(Z2, V4, std::vector<AutTable>(4, aut_identity(2)));
    auto ext = cocycle_to_extension(k, enumerate_h2(k).classes[0]);
    auto S = subgroup_group(*V4, {0, 1});
    auto res = restrict(ext, S);
    CHECK(res.E->n == 4);
    CHECK(res.Q->n == 2);
    CHECK_NOTHROW(induced_kernel(res));
}

TEST_CASE("make_extension rejects broken data") {
    auto Z2 = ptr(samples::cyclic(2));
    auto V4 = ptr(samples::klein_four());
    // wrong sizes
    CHECK_THROWS_AS(make_extension(V4, Z2, V4, {0, 1}, {0, 1, 2, 3}), Error);
    // pi not a homomorphism
    CHECK_THROWS_AS(make_extension(V4, Z2, Z2, {0, 1}, {0, 1, 1, 1}), Error);
    // iota image differs from kernel of pi
    CHECK_THROWS_AS(make_extension(V4, Z2, Z2, {0, 1}, {0, 1, 0, 1}), Error);
}
