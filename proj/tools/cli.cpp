#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "grpext/io.hpp"
#include "grpext/report.hpp"
#include "grpext/samples.hpp"

using namespace grpext;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeLimit = 3;

struct Config {
    Limits lim;
    int workers = 1;
    std::uint64_t seed = 0;
    std::string format = "structured";
    std::string out;
};

void emit(const Config& cfg, const Report& rep) {
    std::string body = cfg.format == "text" ? render_text(rep) : render_structured(rep);
    if (cfg.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) fail(Errc::Parse, "cannot write " + cfg.out);
        f << body;
    }
}

Report base_report(const Config& cfg, const std::string& command, const std::string& input) {
    Report rep;
    rep.put_header("command", command);
    rep.put_header("input", input);
    rep.put_header("seed", std::to_string(cfg.seed));
    return rep;
}

int cmd_group_info(const Config& cfg, const std::string& file) {
    auto G = load_group(file, cfg.lim);
    auto aut = automorphism_group(G, cfg.lim);
    Report rep = base_report(cfg, "group-info", fs::path(file).filename().string());
    auto& r = rep.add("group");
    r.put("order", static_cast<long long>(G->n));
    r.put("abelian", G->is_abelian());
    r.put("center", static_cast<long long>(center(*G).size()));
    r.put("involutions", involutions(*G));
    std::vector<int> sizes;
    for (const auto& c : conjugacy_classes(*G)) sizes.push_back(static_cast<int>(c.size()));
    r.put("conjugacy_class_sizes", sizes);
    rep.add("automorphisms")
        .put("aut", static_cast<long long>(aut.autos.size()))
        .put("inn", static_cast<long long>(aut.inner_order()))
        .put("out", static_cast<long long>(aut.outer_order()));
    emit(cfg, rep);
    return kExitOk;
}

int cmd_obstruction(const Config& cfg, const std::string& file) {
    auto k = load_kernel(file, cfg.lim);
    auto zmod = center_module(k);
    Report rep = base_report(cfg, "obstruction", fs::path(file).filename().string());
    Cochain first = obstruction(k, cfg.seed);
    bool consistent = true;
    for (int i = 0; i < 5; ++i) {
        std::uint64_t seed = cfg.seed + i;
        Cochain z = obstruction(k, seed);
        bool same = cohomologous(zmod, first, z, cfg.lim);
        consistent = consistent && same;
        rep.add("obstruction")
            .put("seed", static_cast<long long>(seed))
            .put("vanishes", is_coboundary(zmod, z, cfg.lim))
            .put("matches_first", same);
    }
    rep.add("summary").put("class_independent_of_choices", consistent);
    emit(cfg, rep);
    return consistent ? kExitOk : kExitCheckFailed;
}

int cmd_h2(const Config& cfg, const std::string& file) {
    auto k = load_kernel(file, cfg.lim);
    auto h = enumerate_h2(k, cfg.lim);
    Report rep = base_report(cfg, "h2", fs::path(file).filename().string());
    rep.add("kernel")
        .put("g_order", static_cast<long long>(k.G->n))
        .put("q_order", static_cast<long long>(k.Q->n))
        .put("center", static_cast<long long>(k.Z.group.n));
    rep.add("obstruction").put("vanishes", obstruction_vanishes(k, cfg.seed, cfg.lim));
    rep.add("h2")
        .put("classes", static_cast<long long>(h.classes.size()))
        .put("h2_center", static_cast<long long>(h.h2z.order()));
    for (std::size_t i = 0; i < h.classes.size(); ++i)
        rep.add("class")
            .put("index", static_cast<long long>(i))
            .put("neutral", is_neutral(k, h.classes[i], cfg.lim));
    for (int j = 0; j < h.h2z.order(); ++j) {
        std::vector<int> maps;
        for (const auto& c : h.classes)
            maps.push_back(h2_class_index(k, h, act(k, h.h2z.reps[j], c), cfg.lim));
        rep.add("torsor_action").put("zeta", static_cast<long long>(j)).put("maps", maps);
    }
    emit(cfg, rep);
    return kExitOk;
}

int cmd_local_global(const Config& cfg, const std::string& file) {
    auto k = load_kernel(file, cfg.lim);
    auto lr = report(k, cfg.lim);
    Report rep = base_report(cfg, "local-global", fs::path(file).filename().string());
    std::vector<int> reps, sizes;
    for (const auto& c : lr.os.classes) {
        reps.push_back(c.front());
        sizes.push_back(static_cast<int>(c.size()));
    }
    rep.add("orderings")
        .put("count", static_cast<long long>(lr.os.count()))
        .put("representatives", reps)
        .put("class_sizes", sizes);
    bool all_verdicts = true;
    for (std::size_t i = 0; i < lr.classes.size(); ++i) {
        const auto& c = lr.classes[i];
        std::vector<int> local(c.locally_neutral.begin(), c.locally_neutral.end());
        rep.add("class")
            .put("index", static_cast<long long>(i))
            .put("locally_neutral", local)
            .put("globally_neutral", c.globally_neutral)
            .put("local_global_held", c.verdict);
        all_verdicts = all_verdicts && c.verdict;
    }
    auto sh = sheaf_sections(k, cfg.lim);
    int hits = 0;
    for (char h : sh.hit) hits += h;
    rep.add("sheaf")
        .put("local_class_counts", sh.local_counts)
        .put("sections", static_cast<long long>(sh.sections.size()))
        .put("sections_hit", static_cast<long long>(hits))
        .put("global_to_section", sh.image);
    emit(cfg, rep);
    return all_verdicts ? kExitOk : kExitCheckFailed;
}

int cmd_homogeneous(const Config& cfg, const std::string& file) {
    auto S = load_gspace(file, cfg.lim);
    auto sd = stabilizer_kernel(S, 0, cfg.seed, cfg.lim);
    bool neutral = is_neutral(sd.kernel, sd.cocycle, cfg.lim);
    auto dom = dominated_by_torsor(S, cfg.lim);
    Report rep = base_report(cfg, "homogeneous", fs::path(file).filename().string());
    rep.add("gspace")
        .put("g_order", static_cast<long long>(S.G->n))
        .put("q_order", static_cast<long long>(S.Q->n))
        .put("points", static_cast<long long>(S.nx))
        .put("torsor", is_free(S));
    rep.add("stabilizer")
        .put("order", static_cast<long long>(sd.H.group.n))
        .put("translations", sd.a);
    rep.add("class")
        .put("extension_order", static_cast<long long>(class_alpha(S, 0, cfg.lim).E->n))
        .put("neutral", neutral);
    rep.add("domination").put("found", dom.has_value());
    bool agree = neutral == dom.has_value();
    rep.add("verdict").put("neutral_iff_dominated", agree);
    emit(cfg, rep);
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_cohomology(const Config& cfg, const std::string& file, int degree) {
    auto mod = load_module(file, cfg.lim);
    auto h = cohomology(mod, degree, cfg.lim);
    Report rep = base_report(cfg, "cohomology", fs::path(file).filename().string());
    rep.add("module")
        .put("q_order", static_cast<long long>(mod.q()))
        .put("m_order", static_cast<long long>(mod.m()));
    rep.add("cohomology")
        .put("degree", static_cast<long long>(degree))
        .put("order", static_cast<long long>(h.order()));
    for (int i = 0; i < h.order(); ++i)
        rep.add("class").put("index", static_cast<long long>(i)).put("values", h.reps[i].values);
    emit(cfg, rep);
    return kExitOk;
}

int cmd_hyper(const Config& cfg, const std::string& file, int degree) {
    auto cx = load_complex(file, cfg.lim);
    auto h = hypercohomology(cx, degree, cfg.lim);
    auto les = les_check(cx, cfg.lim);
    Report rep = base_report(cfg, "hyper", fs::path(file).filename().string());
    rep.add("hyper")
        .put("degree", static_cast<long long>(degree))
        .put("order", static_cast<long long>(h.order()));
    auto& r = rep.add("les");
    r.put("pass", les.pass);
    if (!les.pass) r.put("first_failure", les.first_failure);
    emit(cfg, rep);
    return les.pass ? kExitOk : kExitCheckFailed;
}

// --- corpus checks ---

void check(Record& r, const std::string& name, bool ok, bool& all) {
    r.put(name, ok);
    all = all && ok;
}

// Involutions of E over t, per conjugacy class member: the local-neutrality
// flag must be constant on each class.
bool locally_constant(const Extension& ext) {
    auto os = orderings(ext.Q);
    for (const auto& cls : os.classes) {
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

bool corpus_group(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto G = load_group(file, cfg.lim);
    auto aut = automorphism_group(G, cfg.lim);
    check(r, "inn_times_center_is_order",
          aut.inner_order() * center(*G).size() == static_cast<std::size_t>(G->n), ok);
    auto inv = involutions(*G);
    bool stable = true;
    for (const auto& t : aut.autos) {
        auto img = inv;
        for (int& x : img) x = t[x];
        std::sort(img.begin(), img.end());
        stable = stable && img == inv;
    }
    check(r, "involutions_aut_stable", stable, ok);
    return ok;
}

bool corpus_kernel(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto k = load_kernel(file, cfg.lim);
    auto zmod = center_module(k);
    auto h = enumerate_h2(k, cfg.lim);
    bool vanishes = obstruction_vanishes(k, cfg.seed, cfg.lim);
    check(r, "nonempty_iff_obstruction_vanishes", vanishes == !h.classes.empty(), ok);
    Cochain first = obstruction(k, cfg.seed);
    bool seeds_agree = true;
    for (int i = 1; i < 5; ++i)
        seeds_agree =
            seeds_agree && cohomologous(zmod, first, obstruction(k, cfg.seed + i), cfg.lim);
    check(r, "obstruction_seed_independent", seeds_agree, ok);
    if (!h.classes.empty()) {
        check(r, "torsor_size", static_cast<int>(h.classes.size()) == h.h2z.order(), ok);
        auto ext = cocycle_to_extension(k, h.classes[0], cfg.lim);
        auto back = extension_to_cocycle(k, ext);
        check(r, "cocycle_round_trip", cocycles_equivalent(k, h.classes[0], back, cfg.lim), ok);
        bool neutral = is_neutral(k, h.classes[0], cfg.lim);
        check(r, "neutral_iff_splits", neutral == find_splitting(ext).has_value(), ok);
        check(r, "locally_constant", locally_constant(ext), ok);
    }
    return ok;
}

bool corpus_extension(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto ext = load_extension(file, cfg.lim);
    auto brute = find_splitting(ext, SplitStrategy::Brute, cfg.lim);
    auto reduce = find_splitting(ext, SplitStrategy::Reduce, cfg.lim);
    check(r, "strategies_agree", brute.has_value() == reduce.has_value(), ok);
    auto k = induced_kernel(ext, cfg.lim);
    auto c = extension_to_cocycle(k, ext);
    auto rebuilt = cocycle_to_extension(k, c, cfg.lim);
    check(r, "extension_round_trip", extensions_equivalent(ext, rebuilt, cfg.lim), ok);
    check(r, "neutral_iff_splits",
          is_neutral(k, c, cfg.lim) == brute.has_value(), ok);
    check(r, "locally_constant", locally_constant(ext), ok);
    return ok;
}

bool corpus_gspace(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto S = load_gspace(file, cfg.lim);
    check(r, "neutral_iff_dominated", verify_51(S, cfg.lim), ok);
    return ok;
}

bool corpus_module(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto mod = load_module(file, cfg.lim);
    bool dd = true;
    for (int n = 1; n <= 2 && dd; ++n) {
        std::size_t entries = cochain_entries(mod.q(), n);
        for (std::size_t e = 0; e < entries && dd; ++e)
            for (int v = 1; v < mod.m() && dd; ++v) {
                Cochain c = zero_cochain(mod.q(), n);
                c.values[e] = v;
                dd = coboundary(mod, coboundary(mod, c)).is_zero();
            }
    }
    check(r, "dd_zero", dd, ok);
    bool paths = true;
    for (int n = 1; n <= 2 && paths; ++n)
        paths = cohomology(mod, n, cfg.lim).order() ==
                cohomology_enumerate(mod, n, cfg.lim).order();
    check(r, "linear_matches_enumeration", paths, ok);
    return ok;
}

bool corpus_complex(const fs::path& file, const Config& cfg, Record& r) {
    bool ok = true;
    auto cx = load_complex(file, cfg.lim);
    check(r, "les_exact", les_check(cx, cfg.lim).pass, ok);
    GroupPtr one = std::make_shared<const FiniteGroup>(samples::trivial());
    auto tmod = trivial_qmodule(cx.A.Q, one);
    auto b_only = make_two_term(tmod, cx.B, std::vector<int>{0});
    auto a_only = make_two_term(cx.A, tmod, std::vector<int>(cx.A.m(), 0));
    bool degen = true;
    for (int i = 1; i <= 2; ++i)
        degen = degen &&
                hypercohomology(b_only, i, cfg.lim).order() == cohomology(cx.B, i, cfg.lim).order();
    for (int i = 0; i <= 1; ++i)
        degen = degen && hypercohomology(a_only, i, cfg.lim).order() ==
                             cohomology(cx.A, i + 1, cfg.lim).order();
    check(r, "degenerate_shapes", degen, ok);
    std::vector<int> ident(cx.A.m());
    for (int i = 0; i < cx.A.m(); ++i) ident[i] = i;
    auto same = make_two_term(cx.A, cx.A, ident);
    bool acyclic = true;
    for (int i = 0; i <= 2; ++i) acyclic = acyclic && hypercohomology(same, i, cfg.lim).order() == 1;
    check(r, "identity_acyclic", acyclic, ok);
    return ok;
}

int cmd_corpus(const Config& cfg, const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<Record> results(files.size());
    std::vector<char> passed(files.size(), 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            Record& r = results[i];
            r.kind = "check";
            r.put("file", fs::relative(files[i], dir).generic_string());
            try {
                std::string kind = file_kind(files[i]);
                r.put("type", kind);
                bool ok = true;
                if (kind == "group")
                    ok = corpus_group(files[i], cfg, r);
                else if (kind == "kernel")
                    ok = corpus_kernel(files[i], cfg, r);
                else if (kind == "extension")
                    ok = corpus_extension(files[i], cfg, r);
                else if (kind == "gspace")
                    ok = corpus_gspace(files[i], cfg, r);
                else if (kind == "module")
                    ok = corpus_module(files[i], cfg, r);
                else if (kind == "complex")
                    ok = corpus_complex(files[i], cfg, r);
                r.put("pass", ok);
                passed[i] = ok;
            } catch (const Error& e) {
                r.put("error", std::string(e.what()));
                r.put("pass", false);
                passed[i] = 0;
            }
        }
    };
    int n = std::max(1, cfg.workers);
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Report rep = base_report(cfg, "corpus", dir);
    int failures = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        rep.records.push_back(std::move(results[i]));
        failures += passed[i] ? 0 : 1;
    }
    rep.add("summary")
        .put("files", static_cast<long long>(files.size()))
        .put("failures", static_cast<long long>(failures));
    emit(cfg, rep);
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model computations for non-abelian H2 of group kernels"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--max-order", cfg.lim.max_group_order, "largest group order accepted");
    app.add_option("--max-nodes", cfg.lim.max_search_nodes, "search node budget");
    app.add_option("--workers", cfg.workers, "worker threads for corpus runs");
    app.add_option("--seed", cfg.seed, "seed for randomized choice-independence checks");
    app.add_option("--format", cfg.format, "output format: structured | text")
        ->check(CLI::IsMember({"structured", "text"}));
    app.add_option("--out", cfg.out, "write the report to this file instead of stdout");

    std::string file;
    int degree = 2;
    auto* gi = app.add_subcommand("group-info", "order, center, Aut/Inn/Out, involutions");
    gi->add_option("file", file)->required();
    auto* h2 = app.add_subcommand("h2", "H2 classes, neutrality, torsor action");
    h2->add_option("file", file)->required();
    auto* ob = app.add_subcommand("obstruction", "obstruction class under 5 lift seeds");
    ob->add_option("file", file)->required();
    auto* lg = app.add_subcommand("local-global", "per-ordering localization report");
    lg->add_option("file", file)->required();
    auto* ho = app.add_subcommand("homogeneous", "stabilizer kernel and domination check");
    ho->add_option("file", file)->required();
    auto* co = app.add_subcommand("cohomology", "H^n of a finite module");
    co->add_option("file", file)->required();
    co->add_option("--degree", degree, "degree (1..3)");
    auto* hy = app.add_subcommand("hyper", "hypercohomology of a two-term complex");
    hy->add_option("file", file)->required();
    hy->add_option("--degree", degree, "degree (0..2)")->default_val(1);
    auto* cp = app.add_subcommand("corpus", "run the invariant suites over a fixture directory");
    cp->add_option("dir", file)->required();

    for (auto* sub : {gi, h2, ob, lg, ho, co, hy, cp}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gi->parsed()) return cmd_group_info(cfg, file);
        if (h2->parsed()) return cmd_h2(cfg, file);
        if (ob->parsed()) return cmd_obstruction(cfg, file);
        if (lg->parsed()) return cmd_local_global(cfg, file);
        if (ho->parsed()) return cmd_homogeneous(cfg, file);
        if (co->parsed()) return cmd_cohomology(cfg, file, degree);
        if (hy->parsed()) return cmd_hyper(cfg, file, degree);
        if (cp->parsed()) return cmd_corpus(cfg, file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::SizeLimitExceeded ? kExitSizeLimit : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
