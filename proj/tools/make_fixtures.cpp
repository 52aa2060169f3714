// Regenerates the fixture corpus under fixtures/. Usage: make-fixtures DIR
#include <filesystem>
#include <fstream>
#include <iostream>
#include <cmath>
#include <map>

#include "grpext/extension.hpp"
#include "grpext/homogeneous.hpp"
#include "grpext/samples.hpp"
#include "json.hpp"

using namespace grpext;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void save(const json& j, const fs::path& p) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p);
    out << j.dump(1) << "\n";
    std::cout << "wrote " << p.string() << "\n";
}

json group_json(const FiniteGroup& G) {
    std::vector<std::vector<int>> rows(G.n, std::vector<int>(G.n));
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) rows[a][b] = G.prod(a, b);
    return json{{"table", rows}};
}

// First automorphism matching a predicate, searched in canonical order.
template <class Pred>
AutTable find_aut(const AutGroup& aut, Pred pred) {
    for (const auto& t : aut.autos)
        if (pred(t)) return t;
    throw std::runtime_error("no automorphism matches");
}

int aut_order(const FiniteGroup& G, const AutTable& t) {
    AutTable p = t;
    int k = 1;
    while (p != aut_identity(G.n)) {
        p = aut_compose(p, t);
        ++k;
    }
    return k;
}

json kernel_json(const std::string& gref, const std::string& qref,
                 const std::vector<AutTable>& kappa) {
    return json{{"G", gref}, {"Q", qref}, {"kappa", kappa}};
}

json gspace_json(const std::string& gref, const std::string& qref, const GSpace& S) {
    return json{{"G", gref},    {"Q", qref},    {"form", S.form},
                {"points", S.nx}, {"gact", S.gact}, {"qact", S.qact}};
}

}  // namespace

int main(int argc, char** argv) {
    fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("fixtures");
    fs::path groups = root / "groups";
    fs::path corpus = root / "corpus";

    std::map<std::string, FiniteGroup> g;
    g["z1"] = samples::trivial();
    g["z2"] = samples::cyclic(2);
    g["z3"] = samples::cyclic(3);
    g["z4"] = samples::cyclic(4);
    g["z5"] = samples::cyclic(5);
    g["z7"] = samples::cyclic(7);
    g["z8"] = samples::cyclic(8);
    g["z9"] = samples::cyclic(9);
    g["z16"] = samples::cyclic(16);
    g["v4"] = samples::klein_four();
    g["z2xz4"] = direct_product(samples::cyclic(2), samples::cyclic(4));
    g["d4"] = samples::dihedral(4);
    g["d5"] = samples::dihedral(5);
    g["d6"] = samples::dihedral(6);
    g["q8"] = samples::quaternion8();
    g["s3"] = samples::symmetric(3);
    g["a4"] = samples::alternating4();
    g["f20"] = samples::frobenius20();
    {
        auto half = samples::frobenius20_half_subgroup(g["f20"]);
        g["f20_half"] = subgroup_group(g["f20"], half).group;
    }
    for (const auto& [name, grp] : g) save(group_json(grp), groups / (name + ".json"));

    auto ref = [](const std::string& name) { return "../groups/" + name + ".json"; };
    auto ptr = [&](const std::string& name) {
        return std::make_shared<const FiniteGroup>(g.at(name));
    };

    auto id_of = [&](const std::string& name) { return aut_identity(g.at(name).n); };
    auto inv_of = [&](const std::string& name) { return AutTable(g.at(name).inv); };

    std::map<std::string, AutGroup> auts;
    for (const char* name : {"v4", "z5", "z7", "d4", "d5", "d6", "q8", "a4"})
        auts.emplace(name, automorphism_group(ptr(name)));

    int kn = 0;
    auto kfile = [&](const std::string& tag) {
        ++kn;
        char buf[16];
        std::snprintf(buf, sizeof buf, "%02d", kn);
        return corpus / ("kernel_" + std::string(buf) + "_" + tag + ".json");
    };

    save(kernel_json(ref("z1"), ref("z2"), {{0}, {0}}), kfile("trivial"));
    save(kernel_json(ref("z4"), ref("z2"), {id_of("z4"), inv_of("z4")}), kfile("z4_inv"));
    save(kernel_json(ref("z4"), ref("z2"), {id_of("z4"), id_of("z4")}), kfile("z4_triv"));
    save(kernel_json(ref("z8"), ref("z2"), {id_of("z8"), inv_of("z8")}), kfile("z8_inv"));
    save(kernel_json(ref("z3"), ref("z2"), {id_of("z3"), inv_of("z3")}), kfile("z3_inv"));
    save(kernel_json(ref("z9"), ref("z2"), {id_of("z9"), inv_of("z9")}), kfile("z9_inv"));
    save(kernel_json(ref("z16"), ref("z2"), {id_of("z16"), inv_of("z16")}), kfile("z16_inv"));

    {
        // Aut(Z/5) is cyclic of order 4: one generator drives a faithful Z/4 action
        auto a = find_aut(auts.at("z5"), [&](const AutTable& t) { return aut_order(g["z5"], t) == 4; });
        save(kernel_json(ref("z5"), ref("z4"),
                         {id_of("z5"), a, aut_compose(a, a), aut_compose(a, aut_compose(a, a))}),
             kfile("z5_full"));
    }
    {
        auto a = find_aut(auts.at("z7"), [&](const AutTable& t) { return aut_order(g["z7"], t) == 3; });
        save(kernel_json(ref("z7"), ref("z3"), {id_of("z7"), a, aut_compose(a, a)}),
             kfile("z7_ord3"));
    }
    {
        auto a = find_aut(auts.at("v4"), [&](const AutTable& t) { return aut_order(g["v4"], t) == 2; });
        save(kernel_json(ref("v4"), ref("z2"), {id_of("v4"), a}), kfile("v4_swap"));
        auto b = find_aut(auts.at("v4"), [&](const AutTable& t) { return aut_order(g["v4"], t) == 3; });
        save(kernel_json(ref("v4"), ref("z3"), {id_of("v4"), b, aut_compose(b, b)}),
             kfile("v4_cyc3"));
    }
    save(kernel_json(ref("z2xz4"), ref("z2"), {id_of("z2xz4"), inv_of("z2xz4")}),
         kfile("z2xz4_inv"));

    auto outer_involution = [&](const std::string& name) {
        const auto& A = auts.at(name);
        return find_aut(A, [&](const AutTable& t) {
            return !A.table_is_inner(t) && A.table_is_inner(aut_compose(t, t));
        });
    };
    save(kernel_json(ref("d4"), ref("z2"), {id_of("d4"), outer_involution("d4")}),
         kfile("d4_outer"));
    save(kernel_json(ref("d4"), ref("z2"), {id_of("d4"), id_of("d4")}), kfile("d4_triv"));
    save(kernel_json(ref("d5"), ref("z2"), {id_of("d5"), outer_involution("d5")}),
         kfile("d5_outer"));
    save(kernel_json(ref("d6"), ref("z2"), {id_of("d6"), outer_involution("d6")}),
         kfile("d6_outer"));
    save(kernel_json(ref("q8"), ref("z2"), {id_of("q8"), outer_involution("q8")}),
         kfile("q8_outer2"));
    {
        const auto& A = auts.at("q8");
        auto a = find_aut(A, [&](const AutTable& t) {
            return !A.table_is_inner(t) && A.table_is_inner(aut_compose(t, aut_compose(t, t)));
        });
        save(kernel_json(ref("q8"), ref("z3"), {id_of("q8"), a, aut_compose(a, a)}),
             kfile("q8_outer3"));
    }
    save(kernel_json(ref("s3"), ref("z2"), {id_of("s3"), id_of("s3")}), kfile("s3_triv"));
    save(kernel_json(ref("a4"), ref("z2"), {id_of("a4"), outer_involution("a4")}),
         kfile("a4_outer"));
    {
        // Q = V4 acting on Z/4: one factor inverts, the other is passive
        const auto& v4 = g["v4"];
        std::vector<AutTable> kappa(4, id_of("z4"));
        int a = 1, b = 2;
        kappa[a] = inv_of("z4");
        kappa[v4.prod(a, b)] = inv_of("z4");
        save(kernel_json(ref("z4"), ref("v4"), kappa), kfile("z4_klein"));
    }
    {
        // Q = Z/8 acting on Z/4 through its parity quotient
        std::vector<AutTable> kappa(8);
        for (int s = 0; s < 8; ++s) kappa[s] = s % 2 ? inv_of("z4") : id_of("z4");
        save(kernel_json(ref("z4"), ref("z8"), kappa), kfile("z4_q8quot"));
    }

    // search small kernels whose obstruction class does not vanish
    int found = 0;
    for (const char* gname : {"d4", "q8", "d6"}) {
        const auto& A = auts.at(gname);
        auto G = ptr(gname);
        auto out = A.outer_group();
        for (const char* qname : {"z2", "z4", "v4"}) {
            auto Q = ptr(qname);
            double space = std::pow(static_cast<double>(out.n), Q->n);
            if (space > 3e6) continue;
            std::vector<int> m(Q->n, 0);
            for (long long code = 0;; ++code) {
                long long c = code;
                for (int s = 0; s < Q->n; ++s) {
                    m[s] = static_cast<int>(c % out.n);
                    c /= out.n;
                }
                if (c > 0) break;
                bool hom = m[0] == 0;
                for (int s = 0; hom && s < Q->n; ++s)
                    for (int t = 0; hom && t < Q->n; ++t)
                        if (out.prod(m[s], m[t]) != m[Q->prod(s, t)]) hom = false;
                bool nontrivial = false;
                for (int v : m) nontrivial |= v != 0;
                if (!hom || !nontrivial) continue;
                std::vector<AutTable> kappa(Q->n);
                for (int s = 0; s < Q->n; ++s) kappa[s] = A.autos[A.outer_reps[m[s]]];
                auto k = make_kernel(G, Q, kappa);
                if (!obstruction_vanishes(k)) {
                    save(kernel_json(ref(gname), ref(qname), kappa),
                         kfile(std::string(gname) + "_" + qname + "_obstructed"));
                    ++found;
                    break;
                }
            }
            if (found >= 2) break;
        }
        if (found >= 2) break;
    }

    // extensions
    save(json{{"from_cocycle",
               {{"kernel", "kernel_02_z4_inv.json"},
                {"f", json::array({id_of("z4"), inv_of("z4")})},
                {"g", {{0, 0}, {0, 2}}}}}},
         corpus / "ext_q8_over_z4.json");
    save(json{{"from_cocycle",
               {{"kernel", "kernel_02_z4_inv.json"},
                {"f", json::array({id_of("z4"), inv_of("z4")})},
                {"g", {{0, 0}, {0, 0}}}}}},
         corpus / "ext_d4_over_z4.json");
    save(json{{"E", ref("z4")},
              {"G", ref("z2")},
              {"Q", ref("z2")},
              {"iota", {0, 2}},
              {"pi", {0, 1, 0, 1}}},
         corpus / "ext_z4_over_z2.json");
    {
        const auto& f20 = g["f20"];
        auto half = samples::frobenius20_half_subgroup(f20);
        auto H = subgroup_group(f20, half);
        auto quo = quotient(f20, half);
        save(json{{"E", ref("f20")},
                  {"G", ref("f20_half")},
                  {"Q", ref("z2")},
                  {"iota", H.to_parent},
                  {"pi", quo.proj}},
             corpus / "ext_f20_over_d5.json");
    }
    {
        auto E = direct_product(g["s3"], g["z2"]);
        std::vector<int> iota(6), pi(12);
        for (int x = 0; x < 6; ++x) iota[x] = x * 2;
        for (int e = 0; e < 12; ++e) pi[e] = e % 2;
        save(json{{"E", group_json(E)},
                  {"G", ref("s3")},
                  {"Q", ref("z2")},
                  {"iota", iota},
                  {"pi", pi}},
             corpus / "ext_s3xz2.json");
    }

    // negative control: g[1][1] is not central, so the cocycle identities fail
    save(json{{"from_cocycle",
               {{"kernel",
                 json{{"G", "../groups/z4.json"},
                      {"Q", "../groups/z2.json"},
                      {"kappa", json::array({id_of("z4"), inv_of("z4")})}}},
                {"f", json::array({id_of("z4"), inv_of("z4")})},
                {"g", {{0, 0}, {0, 1}}}}}},
         root / "negative" / "corrupt_cocycle.json");

    // gspaces
    int gsn = 0;
    auto gsfile = [&](const std::string& tag) {
        ++gsn;
        char buf[16];
        std::snprintf(buf, sizeof buf, "%02d", gsn);
        return corpus / ("gspace_" + std::string(buf) + "_" + tag + ".json");
    };
    auto trivial_form = [&](const std::string& gn, const std::string& qn) {
        return std::vector<AutTable>(g.at(qn).n, aut_identity(g.at(gn).n));
    };

    save(gspace_json(ref("s3"), ref("z2"),
                     twisted_torsor(ptr("s3"), ptr("z2"), trivial_form("s3", "z2"), {0, 0})),
         gsfile("torsor_s3"));
    save(gspace_json(ref("v4"), ref("z3"),
                     twisted_torsor(ptr("v4"), ptr("z3"), trivial_form("v4", "z3"), {0, 0, 0})),
         gsfile("torsor_v4"));
    {
        const auto& A = auts.at("d4");
        auto a = find_aut(A, [&](const AutTable& t) {
            return !A.table_is_inner(t) && aut_compose(t, t) == aut_identity(g["d4"].n);
        });
        save(gspace_json(ref("d4"), ref("z2"),
                         twisted_torsor(ptr("d4"), ptr("z2"), {id_of("d4"), a}, {0, 0})),
             gsfile("torsor_d4_outer"));
    }
    for (int c1 = 0; c1 < 3; ++c1)
        save(gspace_json(ref("z3"), ref("z2"),
                         twisted_torsor(ptr("z3"), ptr("z2"), {id_of("z3"), inv_of("z3")},
                                        {0, c1})),
             gsfile("twist_z3_" + std::to_string(c1)));
    {
        std::vector<std::vector<int>> gact(4, std::vector<int>(1, 0)), qact(2, {0});
        save(gspace_json(ref("z4"), ref("z2"),
                         make_gspace(ptr("z4"), ptr("z2"), {id_of("z4"), inv_of("z4")}, 1, gact,
                                     qact)),
             gsfile("point_z4"));
    }
    {
        std::vector<std::vector<int>> gact(6, std::vector<int>(1, 0)), qact(2, {0});
        save(gspace_json(ref("s3"), ref("z2"),
                         make_gspace(ptr("s3"), ptr("z2"), trivial_form("s3", "z2"), 1, gact,
                                     qact)),
             gsfile("point_s3"));
    }
    {
        std::vector<std::vector<int>> gact(4, std::vector<int>(2));
        for (int x = 0; x < 4; ++x)
            for (int p = 0; p < 2; ++p) gact[x][p] = (p + x) % 2;
        save(gspace_json(ref("z4"), ref("z2"),
                         make_gspace(ptr("z4"), ptr("z2"), trivial_form("z4", "z2"), 2, gact,
                                     {{0, 1}, {1, 0}})),
             gsfile("z4_mod2_swap"));
        save(gspace_json(ref("z4"), ref("z2"),
                         make_gspace(ptr("z4"), ptr("z2"), trivial_form("z4", "z2"), 2, gact,
                                     {{0, 1}, {0, 1}})),
             gsfile("z4_mod2_fix"));
    }
    {
        const auto& s3 = g["s3"];
        int t = 0;
        for (int x = 1; x < 6; ++x)
            if (s3.order_of(x) == 2) {
                t = x;
                break;
            }
        std::vector<int> coset_of(6, -1), reps;
        for (int x = 0; x < 6; ++x) {
            if (coset_of[x] >= 0) continue;
            int c = static_cast<int>(reps.size());
            reps.push_back(x);
            coset_of[x] = c;
            coset_of[s3.prod(t, x)] = c;
        }
        std::vector<std::vector<int>> gact(6, std::vector<int>(3));
        for (int x = 0; x < 6; ++x)
            for (int p = 0; p < 3; ++p) gact[x][p] = coset_of[s3.prod(reps[p], x)];
        save(gspace_json(ref("s3"), ref("z2"),
                         make_gspace(ptr("s3"), ptr("z2"), trivial_form("s3", "z2"), 3, gact,
                                     {{0, 1, 2}, {0, 1, 2}})),
             gsfile("s3_cosets"));
    }

    // modules and complexes
    save(json{{"Q", ref("z2")}, {"M", ref("z2")}}, corpus / "module_z2_z2.json");
    save(json{{"Q", ref("v4")}, {"M", ref("z2")}}, corpus / "module_v4_z2.json");
    save(json{{"Q", ref("z2")}, {"M", ref("z4")}, {"action", json::array({id_of("z4"), inv_of("z4")})}},
         corpus / "module_z2_z4_inv.json");
    save(json{{"Q", ref("z3")}, {"M", ref("z3")}}, corpus / "module_z3_z3.json");
    save(json{{"A", "module_z2_z2.json"},
              {"B", "module_z2_z2.json"},
              {"rho", {0, 1}}},
         corpus / "complex_identity.json");
    save(json{{"A", "module_z2_z2.json"},
              {"B", "module_z2_z2.json"},
              {"rho", {0, 0}}},
         corpus / "complex_zero.json");
    save(json{{"A", "module_z2_z2.json"},
              {"B", "module_z2_z4_inv.json"},
              {"rho", {0, 2}}},
         corpus / "complex_incl.json");

    std::cout << "kernels: " << kn << ", gspaces: " << gsn << "\n";
    return 0;
}
