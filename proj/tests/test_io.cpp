#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "grpext/io.hpp"
#include "grpext/samples.hpp"

using namespace grpext;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = GRPEXT_FIXTURES_DIR;

fs::path tmp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("group files load from tables and permutations") {
    auto z4 = load_group(kFixtures / "groups" / "z4.json");
    CHECK(z4->n == 4);
    CHECK(z4->prod(1, 3) == 0);

    auto f20 = load_group(kFixtures / "groups" / "f20.json");
    CHECK(f20->n == 20);
    CHECK(isomorphic_brute(*f20, samples::frobenius20()));

    auto p = tmp_file("grpext_perm_group.json",
                      R"({"permutations": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}})");
    auto s3 = load_group(p);
    CHECK(s3->n == 6);
    CHECK(isomorphic_brute(*s3, samples::symmetric(3)));
}

TEST_CASE("kernel files load and validate") {
    auto k = load_kernel(kFixtures / "corpus" / "kernel_02_z4_inv.json");
    CHECK(k.G->n == 4);
    CHECK(k.Q->n == 2);
    CHECK(k.kappa[1] == AutTable(k.G->inv));

    auto d5 = load_kernel(kFixtures / "corpus" / "kernel_15_d5_outer.json");
    CHECK(d5.G->n == 10);
    CHECK(!d5.aut.table_is_inner(d5.kappa[1]));
}

TEST_CASE("extension files load both representations") {
    auto q8 = load_extension(kFixtures / "corpus" / "ext_q8_over_z4.json");
    CHECK(q8.E->n == 8);
    CHECK(isomorphic_brute(*q8.E, samples::quaternion8()));

    auto f20 = load_extension(kFixtures / "corpus" / "ext_f20_over_d5.json");
    CHECK(f20.E->n == 20);
    CHECK(f20.G->n == 10);
    CHECK(!find_splitting(f20).has_value());
}

TEST_CASE("gspace, module and complex files load") {
    auto S = load_gspace(kFixtures / "corpus" / "gspace_01_torsor_s3.json");
    CHECK(S.nx == 6);
    CHECK(is_free(S));

    auto mod = load_module(kFixtures / "corpus" / "module_z2_z4_inv.json");
    CHECK(mod.q() == 2);
    CHECK(mod.act(1, 1) == 3);

    auto cx = load_complex(kFixtures / "corpus" / "complex_incl.json");
    CHECK(cx.rho == std::vector<int>{0, 2});
}

TEST_CASE("file kinds are inferred from keys") {
    CHECK(file_kind(kFixtures / "groups" / "z4.json") == "group");
    CHECK(file_kind(kFixtures / "corpus" / "kernel_02_z4_inv.json") == "kernel");
    CHECK(file_kind(kFixtures / "corpus" / "ext_q8_over_z4.json") == "extension");
    CHECK(file_kind(kFixtures / "corpus" / "gspace_01_torsor_s3.json") == "gspace");
    CHECK(file_kind(kFixtures / "corpus" / "module_z2_z2.json") == "module");
    CHECK(file_kind(kFixtures / "corpus" / "complex_identity.json") == "complex");
}

TEST_CASE("corrupted cocycle data is rejected at load") {
    CHECK_THROWS_AS(load_extension(kFixtures / "negative" / "corrupt_cocycle.json"), Error);
}

TEST_CASE("parse errors carry the Parse code") {
    auto bad = tmp_file("grpext_bad.json", "{ not json");
    try {
        load_group(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Parse);
    }
    auto nothing = tmp_file("grpext_empty_obj.json", "{}");
    CHECK_THROWS_AS(file_kind(nothing), Error);
    CHECK_THROWS_AS(load_group(kFixtures / "no_such_file.json"), Error);
}
