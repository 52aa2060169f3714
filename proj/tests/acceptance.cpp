// Acceptance suite: one pass/fail line per criterion, exit = failure count.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "grpext/io.hpp"
#include "grpext/samples.hpp"

using namespace grpext;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = GRPEXT_FIXTURES_DIR;
const std::string kCli = GRPEXT_CLI_PATH;

std::vector<fs::path> glob(const std::string& prefix) {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(kFixtures / "corpus"))
        if (e.path().filename().string().rfind(prefix, 0) == 0) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& out) {
    std::string cmd = "\"" + kCli + "\" " + args + " --out \"" + out.string() + "\"";
    return std::system(cmd.c_str());
}

// The central coefficient cocycle data of a kernel, reused across criteria.
struct CentralData {
    Kernel kz;
    std::vector<int> zeta;
};

CentralData central_data(const Kernel& k, const QModule& zmod) {
    auto Zg = std::make_shared<const FiniteGroup>(k.Z.group);
    return {make_kernel(Zg, k.Q, zmod.action), k.Z.to_parent};
}

TwoCocycle central_cocycle(const Kernel& k, const QModule& zmod, const Cochain& z) {
    TwoCocycle c;
    c.f = zmod.action;
    c.g.assign(k.Q->n, std::vector<int>(k.Q->n, 0));
    for (int s = 0; s < k.Q->n; ++s)
        for (int t = 0; t < k.Q->n; ++t) c.g[s][t] = cochain_eval(z, k.Q->n, {s, t});
    return c;
}

bool criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto ext = load_extension(kFixtures / "corpus" / "ext_f20_over_d5.json");
    if (find_splitting(ext, SplitStrategy::Brute).has_value()) return false;
    if (find_splitting(ext, SplitStrategy::Reduce).has_value()) return false;

    std::vector<char> in_g(ext.E->n, 0);
    for (int x : ext.iota) in_g[x] = 1;
    for (int e : involutions(*ext.E))
        if (!in_g[e]) return false;
    auto os = orderings(ext.Q);
    if (os.count() != 1 || localize(ext, os, 0).neutral) return false;

    auto k = load_kernel(kFixtures / "corpus" / "kernel_15_d5_outer.json");
    for (const auto& a : k.aut.autos)
        if (k.aut.same_coset(a, k.kappa[1]) && aut_compose(a, a) == aut_identity(k.G->n))
            return false;  // the outer class must not contain an involution

    fs::path out = fs::temp_directory_path() / "grpext_acc_h2.txt";
    if (run_cli("h2 " + (kFixtures / "corpus" / "kernel_15_d5_outer.json").string(), out) != 0)
        return false;
    std::string rep = read_file(out);
    if (rep.find("h2 classes=1") == std::string::npos) return false;
    if (rep.find("class index=0 neutral=false") == std::string::npos) return false;

    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count() < 1000;
}

bool criterion2() {
    auto kernels = glob("kernel_");
    if (kernels.size() < 20) return false;
    for (const auto& file : kernels) {
        auto k = load_kernel(file);
        auto zmod = center_module(k);
        Cochain first = obstruction(k, 0);
        bool vanishes = is_coboundary(zmod, first);
        for (std::uint64_t seed = 1; seed < 5; ++seed)
            if (!cohomologous(zmod, first, obstruction(k, seed))) return false;
        if (vanishes != !enumerate_h2(k).classes.empty()) return false;
    }
    return true;
}

bool criterion3() {
    for (const auto& file : glob("kernel_")) {
        auto k = load_kernel(file);
        auto h = enumerate_h2(k);
        if (h.classes.empty()) continue;
        const int n = static_cast<int>(h.classes.size());
        if (n != h.h2z.order()) return false;
        auto cd = central_data(k, h.zmod);
        std::vector<Extension> exts;
        for (const auto& c : h.classes) exts.push_back(cocycle_to_extension(k, c));
        for (int j = 0; j < n; ++j) {
            std::vector<char> hitc(n, 0);
            auto B = cocycle_to_extension(cd.kz, central_cocycle(k, h.zmod, h.h2z.reps[j]));
            for (int i = 0; i < n; ++i) {
                auto moved = act(k, h.h2z.reps[j], h.classes[i]);
                int idx = h2_class_index(k, h, moved);
                if (idx < 0 || hitc[idx]) return false;  // not a permutation
                hitc[idx] = 1;
                if (j == 0 && idx != i) return false;       // identity acts trivially
                if (j != 0 && idx == i) return false;       // freeness
                auto fibered = fiber_product_action(B, cd.zeta, exts[i]);
                if (!extensions_equivalent(fibered, exts[idx])) return false;
            }
        }
        // transitivity: the permutations {maps_j} cover every (i, target) pair
        for (int i = 0; i < n; ++i) {
            std::vector<char> targets(n, 0);
            for (int j = 0; j < n; ++j)
                targets[h2_class_index(k, h, act(k, h.h2z.reps[j], h.classes[i]))] = 1;
            for (char t : targets)
                if (!t) return false;
        }
    }
    return true;
}

bool criterion4() {
    for (const auto& file : glob("kernel_")) {
        auto k = load_kernel(file);
        auto h = enumerate_h2(k);
        for (const auto& c : h.classes) {
            auto ext = cocycle_to_extension(k, c);
            if (!cocycles_equivalent(k, c, extension_to_cocycle(k, ext))) return false;
        }
    }
    for (const auto& file : glob("ext_")) {
        auto ext = load_extension(file);
        auto k = induced_kernel(ext);
        auto c = extension_to_cocycle(k, ext);
        if (!extensions_equivalent(ext, cocycle_to_extension(k, c))) return false;
    }
    return true;
}

bool criterion5() {
    for (const auto& file : glob("kernel_")) {
        auto k = load_kernel(file);
        if (!k.G->is_abelian()) continue;
        auto mod = make_qmodule(k.Q, k.G, k.kappa);
        auto h2m = cohomology(mod, 2);
        auto h = enumerate_h2(k);
        if (static_cast<int>(h.classes.size()) != h2m.order()) return false;
        for (const auto& c : h.classes) {
            Cochain z = zero_cochain(k.Q->n, 2);
            for (int s = 1; s < k.Q->n; ++s)
                for (int t = 1; t < k.Q->n; ++t)
                    z.values[static_cast<std::size_t>(s - 1) * (k.Q->n - 1) + (t - 1)] =
                        c.g[s][t];
            if (class_index(mod, h2m, z) < 0) return false;
            if (is_neutral(k, c) != is_coboundary(mod, z)) return false;
        }
    }
    auto z2 = std::make_shared<const FiniteGroup>(samples::cyclic(2));
    auto mod = trivial_qmodule(z2, z2);
    return cohomology_enumerate(mod, 2).order() == 2 && cohomology_enumerate(mod, 3).order() == 2;
}

bool complex_degeneracies(const QModule& A, const QModule& B) {
    GroupPtr one = std::make_shared<const FiniteGroup>(samples::trivial());
    auto tmod = trivial_qmodule(A.Q, one);
    auto b_only = make_two_term(tmod, B, std::vector<int>{0});
    auto a_only = make_two_term(A, tmod, std::vector<int>(A.m(), 0));
    for (int i = 1; i <= 2; ++i)
        if (hypercohomology(b_only, i).order() != cohomology(B, i).order()) return false;
    for (int i = 0; i <= 1; ++i)
        if (hypercohomology(a_only, i).order() != cohomology(A, i + 1).order()) return false;
    std::vector<int> ident(A.m());
    for (int i = 0; i < A.m(); ++i) ident[i] = i;
    auto same = make_two_term(A, A, ident);
    for (int i = 0; i <= 2; ++i)
        if (hypercohomology(same, i).order() != 1) return false;
    return true;
}

bool criterion6() {
    for (const auto& file : glob("module_")) {
        auto mod = load_module(file);
        if (!complex_degeneracies(mod, mod)) return false;
    }
    for (const auto& file : glob("complex_")) {
        auto cx = load_complex(file);
        if (!complex_degeneracies(cx.A, cx.B)) return false;
        if (!les_check(cx).pass) return false;
    }
    return true;
}

bool locally_constant(const Extension& ext) {
    for (const auto& cls : orderings(ext.Q).classes) {
        int flag = -1;
        for (int t : cls) {
            bool any = false;
            for (int e = 0; e < ext.E->n && !any; ++e)
                any = ext.pi[e] == t && ext.E->prod(e, e) == 0;
            if (flag < 0)
                flag = any;
            else if (flag != static_cast<int>(any))
                return false;
        }
    }
    return true;
}

std::vector<Extension> corpus_extensions() {
    std::vector<Extension> out;
    for (const auto& file : glob("ext_")) out.push_back(load_extension(file));
    for (const auto& file : glob("kernel_")) {
        auto k = load_kernel(file);
        for (const auto& c : enumerate_h2(k).classes) out.push_back(cocycle_to_extension(k, c));
    }
    return out;
}

bool criterion7() {
    for (const auto& ext : corpus_extensions())
        if (!locally_constant(ext)) return false;
    return true;
}

bool criterion8() {
    auto files = glob("gspace_");
    if (files.size() < 10) return false;
    for (const auto& file : files)
        if (!verify_51(load_gspace(file))) return false;
    return true;
}

bool criterion9() {
    for (const auto& ext : corpus_extensions()) {
        auto brute = find_splitting(ext, SplitStrategy::Brute);
        auto reduce = find_splitting(ext, SplitStrategy::Reduce);
        if (brute.has_value() != reduce.has_value()) return false;
        for (const auto& s : {brute, reduce}) {
            if (!s) continue;
            for (int q = 0; q < ext.Q->n; ++q)
                if (ext.pi[s->section[q]] != q) return false;
            for (int a = 0; a < ext.Q->n; ++a)
                for (int b = 0; b < ext.Q->n; ++b)
                    if (ext.E->prod(s->section[a], s->section[b]) !=
                        s->section[ext.Q->prod(a, b)])
                        return false;
        }
    }
    return true;
}

bool criterion10() {
    fs::path a = fs::temp_directory_path() / "grpext_acc_corpus_w1.txt";
    fs::path b = fs::temp_directory_path() / "grpext_acc_corpus_w4.txt";
    std::string dir = (kFixtures / "corpus").string();
    if (run_cli("corpus " + dir + " --seed 7 --workers 1", a) != 0) return false;
    if (run_cli("corpus " + dir + " --seed 7 --workers 4", b) != 0) return false;
    std::string ra = read_file(a), rb = read_file(b);
    return !ra.empty() && ra == rb;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"1 order-20 Frobenius extension: non-split, no local involutions, |H2|=1 non-neutral",
         criterion1},
        {"2 H2 nonempty iff obstruction vanishes, stable under 5 lift seeds", criterion2},
        {"3 center H2 acts freely and transitively; fiber product matches", criterion3},
        {"4 cocycle/extension dictionary round trips", criterion4},
        {"5 abelian kernels match ordinary cohomology; |H2|=|H3|=2 for Z/2 on Z/2", criterion5},
        {"6 hypercohomology degeneracies and long-exact-sequence checks", criterion6},
        {"7 local neutrality constant on conjugacy classes of involutions", criterion7},
        {"8 neutrality iff torsor domination on all homogeneous-space fixtures", criterion8},
        {"9 brute and reduce splitting strategies agree with verified sections", criterion9},
        {"10 corpus reports byte-identical across worker counts", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "criterion " << c.name << ": FAIL (" << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << "criterion " << c.name << (ok ? ": PASS" : ": FAIL") << "\n";
        failures += ok ? 0 : 1;
    }
    return failures;
}
