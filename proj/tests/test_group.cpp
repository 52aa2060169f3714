#include <algorithm>
#include <memory>

#include "doctest.h"
#include "grpext/group.hpp"
#include "grpext/samples.hpp"

using namespace grpext;

namespace {
GroupPtr ptr(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
}  // namespace

TEST_CASE("build_group basics") {
    auto t = samples::trivial();
    CHECK(t.n == 1);

    auto z2 = samples::cyclic(2);
    CHECK(z2.n == 2);
    CHECK(z2.prod(1, 1) == 0);

    // identity not at index 0 gets relabeled
    auto g = build_group({{1, 0}, {0, 1}});
    CHECK(g.prod(0, 0) == 0);
    CHECK(g.prod(1, 1) == 0);

    CHECK_THROWS_WITH_AS(build_group({{1, 1}, {1, 1}}), doctest::Contains("identity"), Error);
    CHECK_THROWS_WITH_AS(build_group({{0, 1}, {1, 1}}), doctest::Contains("inverse"), Error);
    // non-associative latin-like table
    CHECK_THROWS_AS(build_group({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), Error);
}

TEST_CASE("frobenius20 structure") {
    auto f20 = samples::frobenius20();
    CHECK(f20.n == 20);
    auto inv = involutions(f20);
    CHECK(inv.size() == 5);
    auto half = samples::frobenius20_half_subgroup(f20);
    CHECK(half.size() == 10);
    CHECK(is_subgroup(f20, half));
    CHECK(is_normal(f20, half));
    // all involutions lie in the index-2 subgroup
    for (int x : inv) CHECK(std::binary_search(half.begin(), half.end(), x));
    auto q = quotient(f20, half);
    CHECK(q.group.n == 2);

    auto d5 = subgroup_group(f20, half).group;
    CHECK(isomorphic_brute(d5, samples::dihedral(5)));
}

TEST_CASE("automorphism groups") {
    auto z2 = ptr(samples::cyclic(2));
    CHECK(automorphism_group(z2).autos.size() == 1);

    auto s3 = ptr(samples::symmetric(3));
    auto a3 = automorphism_group(s3);
    CHECK(a3.autos.size() == 6);
    CHECK(a3.inner_order() == 6);
    CHECK(a3.outer_order() == 1);

    auto d5 = ptr(samples::dihedral(5));
    auto a5 = automorphism_group(d5);
    CHECK(a5.autos.size() == 20);
    CHECK(a5.inner_order() == 10);
    CHECK(a5.outer_order() == 2);
    CHECK(a5.as_group().n == 20);
    CHECK(a5.outer_group().n == 2);

    // Aut output is closed and contains every int(x)
    for (int x = 0; x < d5->n; ++x) CHECK(a5.index_of(inner_aut(*d5, x)) >= 0);
    for (const auto& a : a5.autos)
        for (const auto& b : a5.autos) CHECK(a5.index_of(aut_compose(a, b)) >= 0);
}

TEST_CASE("center, involutions, conjugacy classes") {
    auto q8 = samples::quaternion8();
    CHECK(center(q8).size() == 2);
    CHECK(involutions(q8).size() == 1);

    auto d5 = samples::dihedral(5);
    CHECK(center(d5).size() == 1);

    auto z3 = samples::cyclic(3);
    CHECK(involutions(z3).empty());

    auto cls = conjugacy_classes(samples::symmetric(3));
    std::vector<std::size_t> sizes;
    for (auto& c : cls) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    auto d5cls = conjugacy_classes(d5);
    bool has5 = false;
    for (auto& c : d5cls) has5 = has5 || c.size() == 5;
    CHECK(has5);
}

TEST_CASE("quotient and subgroup") {
    auto z4 = samples::cyclic(4);
    auto q = quotient(z4, {0, 2});
    CHECK(q.group.n == 2);
    CHECK(q.proj[1] == 1);

    auto full = quotient(z4, {0, 1, 2, 3});
    CHECK(full.group.n == 1);

    auto s3 = samples::symmetric(3);
    // subgroup generated by a transposition is not normal
    auto t = involutions(s3)[0];
    CHECK_THROWS_AS(quotient(s3, closure(s3, {t})), Error);

    // projection is a surjective hom with kernel N
    auto a4 = samples::alternating4();
    auto v4 = socle(a4);
    CHECK(v4.size() == 4);
    auto qa = quotient(a4, v4);
    CHECK(qa.group.n == 3);
    int ker = 0;
    for (int x = 0; x < a4.n; ++x) ker += qa.proj[x] == 0;
    CHECK(ker == 4);
}

TEST_CASE("|Int| * |Z| = |G| across fixtures") {
    for (auto g : {samples::cyclic(6), samples::dihedral(4), samples::quaternion8(),
                   samples::symmetric(3), samples::frobenius20()}) {
        auto gp = ptr(std::move(g));
        auto a = automorphism_group(gp);
        CHECK(a.inner_order() * center(*gp).size() == static_cast<std::size_t>(gp->n));
    }
}

TEST_CASE("involutions invariant under automorphisms") {
    auto d4 = ptr(samples::dihedral(4));
    auto a = automorphism_group(d4);
    auto inv = involutions(*d4);
    for (const auto& t : a.autos) {
        std::vector<int> img;
        for (int x : inv) img.push_back(t[x]);
        std::sort(img.begin(), img.end());
        CHECK(img == inv);
    }
}

TEST_CASE("characteristic subgroup preference") {
    auto q8 = samples::quaternion8();
    auto c = characteristic_subgroup(q8);
    REQUIRE(c.has_value());
    CHECK(*c == center(q8));  // center is proper nontrivial

    auto d5 = samples::dihedral(5);
    auto cd = characteristic_subgroup(d5);
    REQUIRE(cd.has_value());
    CHECK(cd->size() == 5);  // trivial center, derived subgroup is the rotation group

    CHECK_FALSE(characteristic_subgroup(samples::cyclic(3)).has_value());
    CHECK_FALSE(characteristic_subgroup(samples::klein_four()).has_value());
}

TEST_CASE("products") {
    auto z2 = samples::cyclic(2);
    auto z4 = samples::cyclic(4);
    auto v = direct_product(z2, z2);
    CHECK(isomorphic_brute(v, samples::klein_four()));

    // Z/4 x| Z/2 by inversion is D4
    AutTable invn(4);
    for (int i = 0; i < 4; ++i) invn[i] = z4.inv[i];
    auto sd = semidirect_product(z4, z2, {aut_identity(4), invn});
    CHECK(isomorphic_brute(sd, samples::dihedral(4)));
}

TEST_CASE("group from permutations") {
    auto s3 = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.n == 6);
    CHECK(isomorphic_brute(s3, samples::symmetric(3)));
}
