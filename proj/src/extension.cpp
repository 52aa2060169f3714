#include "grpext/extension.hpp"

#include <algorithm>
#include <map>

namespace grpext {

namespace {

std::vector<int> inverse_injection(const std::vector<int>& map, int target_n) {
    std::vector<int> inv(target_n, -1);
    for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace

Extension make_extension(GroupPtr E, GroupPtr G, GroupPtr Q, std::vector<int> iota,
                         std::vector<int> pi) {
    if (E->n != G->n * Q->n) fail(Errc::Validation, "|E| != |G| * |Q|");
    validate_hom({G, E, iota});
    validate_hom({E, Q, pi});
    std::vector<char> in_image(E->n, 0);
    for (int x = 0; x < G->n; ++x) {
        if (in_image[iota[x]]) fail(Errc::Validation, "iota is not injective");
        in_image[iota[x]] = 1;
    }
    std::vector<char> hit(Q->n, 0);
    for (int e = 0; e < E->n; ++e) {
        hit[pi[e]] = 1;
        if (in_image[e] != (pi[e] == 0))
            fail(Errc::Validation, "image of iota differs from the kernel of pi");
    }
    for (int s = 0; s < Q->n; ++s)
        if (!hit[s]) fail(Errc::Validation, "pi is not surjective");
    return {std::move(E), std::move(G), std::move(Q), std::move(iota), std::move(pi)};
}

Extension cocycle_to_extension(const Kernel& k, const TwoCocycle& c, const Limits& lim) {
    validate_cocycle(k, c);
    const FiniteGroup& G = *k.G;
    const FiniteGroup& Q = *k.Q;
    const int n = G.n * Q.n;
    if (static_cast<std::size_t>(n) * n > lim.max_table_cells)
        fail(Errc::SizeLimitExceeded, "extension table exceeds cell cap");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < G.n; ++x)
        for (int s = 0; s < Q.n; ++s)
            for (int y = 0; y < G.n; ++y)
                for (int t = 0; t < Q.n; ++t)
                    table[x * Q.n + s][y * Q.n + t] =
                        G.prod(G.prod(x, c.f[s][y]), c.g[s][t]) * Q.n + Q.prod(s, t);
    auto built = build_group_relabeled(table);
    std::vector<int> iota(G.n), pi(n);
    for (int x = 0; x < G.n; ++x) iota[x] = built.old_to_new[x * Q.n];
    for (int x = 0; x < G.n; ++x)
        for (int s = 0; s < Q.n; ++s) pi[built.old_to_new[x * Q.n + s]] = s;
    return make_extension(std::make_shared<const FiniteGroup>(std::move(built.group)), k.G, k.Q,
                          std::move(iota), std::move(pi));
}

namespace {

// least preimage per element of Q; the identity lifts to the identity
std::vector<int> least_section(const Extension& ext) {
    std::vector<int> z(ext.Q->n, -1);
    for (int e = 0; e < ext.E->n; ++e)
        if (z[ext.pi[e]] < 0) z[ext.pi[e]] = e;
    return z;
}

AutTable conj_on_kernel(const Extension& ext, const std::vector<int>& iota_inv, int e) {
    const FiniteGroup& E = *ext.E;
    AutTable t(ext.G->n);
    for (int x = 0; x < ext.G->n; ++x) {
        int img = iota_inv[E.prod(e, E.prod(ext.iota[x], E.inv[e]))];
        if (img < 0) fail(Errc::Internal, "conjugation leaves the kernel");
        t[x] = img;
    }
    return t;
}

}  // namespace

Kernel induced_kernel(const Extension& ext, const Limits& lim) {
    auto iota_inv = inverse_injection(ext.iota, ext.E->n);
    auto z = least_section(ext);
    std::vector<AutTable> kappa(ext.Q->n);
    for (int s = 0; s < ext.Q->n; ++s) kappa[s] = conj_on_kernel(ext, iota_inv, z[s]);
    return make_kernel(ext.G, ext.Q, std::move(kappa), lim);
}

TwoCocycle extension_to_cocycle(const Kernel& k, const Extension& ext) {
    const FiniteGroup& E = *ext.E;
    const FiniteGroup& Q = *ext.Q;
    auto iota_inv = inverse_injection(ext.iota, E.n);
    auto z = least_section(ext);
    TwoCocycle c;
    c.f.resize(Q.n);
    c.g.assign(Q.n, std::vector<int>(Q.n));
    for (int s = 0; s < Q.n; ++s) c.f[s] = conj_on_kernel(ext, iota_inv, z[s]);
    for (int s = 0; s < Q.n; ++s)
        for (int t = 0; t < Q.n; ++t) {
            int g = iota_inv[E.prod(E.prod(z[s], z[t]), E.inv[z[Q.prod(s, t)]])];
            if (g < 0) fail(Errc::Internal, "section defect leaves the kernel");
            c.g[s][t] = g;
        }
    validate_cocycle(k, c);
    return c;
}

bool extensions_equivalent(const Extension& a, const Extension& b, const Limits& lim) {
    if (a.G->mul != b.G->mul || a.Q->mul != b.Q->mul)
        fail(Errc::Validation, "extensions compare over fixed G and Q");
    auto ka = induced_kernel(a, lim);
    auto kb = induced_kernel(b, lim);
    for (int s = 0; s < a.Q->n; ++s)
        if (!ka.aut.same_coset(ka.kappa[s], kb.kappa[s])) return false;
    auto ca = extension_to_cocycle(ka, a);
    auto cb = extension_to_cocycle(ka, b);
    return cocycles_equivalent(ka, ca, cb, lim);
}

namespace {

struct SectionSearch {
    const Extension& ext;
    long long budget;
    bool collect_all = false;

    std::vector<int> sigma;
    std::vector<Splitting> found;

    bool propagate(std::vector<int>& trail) {
        const FiniteGroup& Q = *ext.Q;
        const FiniteGroup& E = *ext.E;
        for (bool changed = true; changed;) {
            changed = false;
            for (int s = 0; s < Q.n; ++s) {
                if (sigma[s] < 0) continue;
                for (int t = 0; t < Q.n; ++t) {
                    if (sigma[t] < 0) continue;
                    int st = Q.prod(s, t);
                    int v = E.prod(sigma[s], sigma[t]);
                    if (sigma[st] < 0) {
                        if (ext.pi[v] != st) return false;
                        sigma[st] = v;
                        trail.push_back(st);
                        changed = true;
                    } else if (sigma[st] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool search(const std::vector<int>& gens, std::size_t gi) {
        if (--budget < 0) fail(Errc::SizeLimitExceeded, "section search exceeded node budget");
        while (gi < gens.size() && sigma[gens[gi]] >= 0) ++gi;
        if (gi == gens.size()) {
            for (int s = 0; s < ext.Q->n; ++s)
                if (sigma[s] < 0) fail(Errc::Internal, "generators do not span Q");
            found.push_back(Splitting{sigma});
            return !collect_all;
        }
        int s = gens[gi];
        for (int e = 0; e < ext.E->n; ++e) {
            if (ext.pi[e] != s) continue;
            std::vector<int> trail{s};
            sigma[s] = e;
            if (propagate(trail) && search(gens, gi + 1)) return true;
            for (int u : trail) sigma[u] = -1;
        }
        return false;
    }

    void run() {
        sigma.assign(ext.Q->n, -1);
        sigma[0] = 0;
        std::vector<int> trail;
        if (!propagate(trail)) return;
        search(generating_set(*ext.Q), 0);
    }
};

std::optional<Splitting> split_reduce(const Extension& ext, const Limits& lim);

std::optional<Splitting> split_brute(const Extension& ext, const Limits& lim) {
    SectionSearch ss{ext, static_cast<long long>(lim.max_search_nodes)};
    ss.run();
    if (ss.found.empty()) return std::nullopt;
    return ss.found.front();
}

std::optional<Splitting> split_reduce(const Extension& ext, const Limits& lim) {
    if (ext.G->n == 1) {
        // pi is an isomorphism; its inverse is the section
        std::vector<int> sigma(ext.Q->n);
        for (int e = 0; e < ext.E->n; ++e) sigma[ext.pi[e]] = e;
        return Splitting{sigma};
    }
    auto N = characteristic_subgroup(*ext.G);
    if (!N) return split_brute(ext, lim);

    std::vector<int> iotaN;
    for (int x : *N) iotaN.push_back(ext.iota[x]);
    std::sort(iotaN.begin(), iotaN.end());
    auto QE = quotient(*ext.E, iotaN);
    auto QG = quotient(*ext.G, *N);

    std::vector<int> iota_bar(QG.group.n), pi_bar(QE.group.n);
    for (int g = 0; g < QG.group.n; ++g) iota_bar[g] = QE.proj[ext.iota[QG.coset_rep[g]]];
    for (int e = 0; e < QE.group.n; ++e) pi_bar[e] = ext.pi[QE.coset_rep[e]];
    auto bar = make_extension(std::make_shared<const FiniteGroup>(QE.group),
                              std::make_shared<const FiniteGroup>(QG.group), ext.Q,
                              std::move(iota_bar), std::move(pi_bar));

    auto Ng = subgroup_group(*ext.G, *N);
    auto Ngp = std::make_shared<const FiniteGroup>(Ng.group);
    // a splitting of ext projects onto some splitting of bar, with image
    // inside that splitting's pullback; enumerating them all is exhaustive
    for (const auto& sbar : find_all_splittings(bar, lim)) {
        std::vector<char> in_image(QE.group.n, 0);
        for (int s = 0; s < ext.Q->n; ++s) in_image[sbar.section[s]] = 1;
        std::vector<int> elems;
        for (int e = 0; e < ext.E->n; ++e)
            if (in_image[QE.proj[e]]) elems.push_back(e);
        auto S = subgroup_group(*ext.E, elems);

        std::vector<int> iota_S(Ng.group.n), pi_S(S.group.n);
        for (int x = 0; x < Ng.group.n; ++x) iota_S[x] = S.from_parent[ext.iota[Ng.to_parent[x]]];
        for (int e = 0; e < S.group.n; ++e) pi_S[e] = ext.pi[S.to_parent[e]];
        auto sub = make_extension(std::make_shared<const FiniteGroup>(S.group), Ngp, ext.Q,
                                  std::move(iota_S), std::move(pi_S));
        if (auto tau = split_reduce(sub, lim)) {
            std::vector<int> sigma(ext.Q->n);
            for (int s = 0; s < ext.Q->n; ++s) sigma[s] = S.to_parent[tau->section[s]];
            return Splitting{sigma};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Splitting> find_splitting(const Extension& ext, SplitStrategy strategy,
                                        const Limits& lim) {
    return strategy == SplitStrategy::Brute ? split_brute(ext, lim) : split_reduce(ext, lim);
}

std::vector<Splitting> find_all_splittings(const Extension& ext, const Limits& lim) {
    SectionSearch ss{ext, static_cast<long long>(lim.max_search_nodes), true};
    ss.run();
    return ss.found;
}

Extension restrict(const Extension& ext, const SubgroupGroup& S) {
    std::vector<int> elems;
    for (int e = 0; e < ext.E->n; ++e)
        if (S.from_parent[ext.pi[e]] >= 0) elems.push_back(e);
    auto Esub = subgroup_group(*ext.E, elems);
    std::vector<int> iota(ext.G->n), pi(Esub.group.n);
    for (int x = 0; x < ext.G->n; ++x) iota[x] = Esub.from_parent[ext.iota[x]];
    for (int e = 0; e < Esub.group.n; ++e) pi[e] = S.from_parent[ext.pi[Esub.to_parent[e]]];
    return make_extension(std::make_shared<const FiniteGroup>(Esub.group), ext.G,
                          std::make_shared<const FiniteGroup>(S.group), std::move(iota),
                          std::move(pi));
}

Extension fiber_product_action(const Extension& B, const std::vector<int>& zeta,
                               const Extension& E, const Limits& lim) {
    if (B.Q->mul != E.Q->mul) fail(Errc::Validation, "fiber product needs a common Q");
    const FiniteGroup& Z = *B.G;
    const FiniteGroup& G = *E.G;
    validate_hom({B.G, E.G, zeta});
    auto zcenter = center(G);
    for (int z = 0; z < Z.n; ++z) {
        if (!std::binary_search(zcenter.begin(), zcenter.end(), zeta[z]))
            fail(Errc::Validation, "zeta must land in the center");
        if (z != 0 && zeta[z] == 0) fail(Errc::Validation, "zeta must be injective");
    }

    // F = fiber product over Q, as a subgroup of the pair space
    std::vector<std::pair<int, int>> elems;
    std::map<std::pair<int, int>, int> index;
    for (int b = 0; b < B.E->n; ++b)
        for (int e = 0; e < E.E->n; ++e)
            if (B.pi[b] == E.pi[e]) {
                index[{b, e}] = static_cast<int>(elems.size());
                elems.emplace_back(b, e);
            }
    const int fn = static_cast<int>(elems.size());
    if (static_cast<std::size_t>(fn) * fn > lim.max_table_cells)
        fail(Errc::SizeLimitExceeded, "fiber product table exceeds cell cap");
    std::vector<std::vector<int>> table(fn, std::vector<int>(fn));
    for (int i = 0; i < fn; ++i)
        for (int j = 0; j < fn; ++j)
            table[i][j] = index.at(
                {B.E->prod(elems[i].first, elems[j].first), E.E->prod(elems[i].second, elems[j].second)});
    auto F = build_group(table);  // identity (0,0) is already index 0

    std::vector<int> D;
    for (int z = 0; z < Z.n; ++z) D.push_back(index.at({B.iota[z], E.E->inv[E.iota[zeta[z]]]}));
    std::sort(D.begin(), D.end());
    if (!is_normal(F, D)) fail(Errc::NotCompatible, "antidiagonal center is not normal");
    auto quo = quotient(F, D);

    std::vector<int> iota(G.n), pi(quo.group.n);
    for (int x = 0; x < G.n; ++x) iota[x] = quo.proj[index.at({0, E.iota[x]})];
    for (int c = 0; c < quo.group.n; ++c) pi[c] = B.pi[elems[quo.coset_rep[c]].first];
    return make_extension(std::make_shared<const FiniteGroup>(quo.group), E.G, E.Q, std::move(iota),
                          std::move(pi));
}

}  // namespace grpext
