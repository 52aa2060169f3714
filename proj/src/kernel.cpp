#include "grpext/kernel.hpp"

#include <algorithm>
#include <random>

namespace grpext {

namespace {

// all x with int(x) = a, empty when a is not inner
std::vector<int> inner_preimages(const FiniteGroup& G, const AutTable& a) {
    std::vector<int> out;
    for (int x = 0; x < G.n; ++x)
        if (inner_aut(G, x) == a) out.push_back(x);
    return out;
}

std::size_t pair_index(int q, int s, int t) {
    return static_cast<std::size_t>(s - 1) * (q - 1) + (t - 1);
}

std::size_t triple_index(int q, int s, int t, int u) {
    return (static_cast<std::size_t>(s - 1) * (q - 1) + (t - 1)) * (q - 1) + (u - 1);
}

}  // namespace

Kernel make_kernel(GroupPtr G, GroupPtr Q, std::vector<AutTable> kappa, const Limits& lim) {
    if (static_cast<int>(kappa.size()) != Q->n) fail(Errc::Validation, "kappa size != |Q|");
    for (const auto& t : kappa)
        if (!is_automorphism(*G, t)) fail(Errc::Validation, "kappa value is not an automorphism");
    Kernel k;
    k.G = G;
    k.Q = Q;
    k.aut = automorphism_group(G, lim);
    if (!k.aut.table_is_inner(kappa[0]))
        fail(Errc::NotOuterHomomorphism, "kappa does not send the identity to the inner class");
    for (int s = 0; s < Q->n; ++s)
        for (int t = 0; t < Q->n; ++t)
            if (!k.aut.same_coset(aut_compose(kappa[s], kappa[t]), kappa[Q->prod(s, t)]))
                fail(Errc::NotOuterHomomorphism, "kappa is not a homomorphism into Out(G)");
    k.kappa = std::move(kappa);
    k.Z = subgroup_group(*G, center(*G));
    return k;
}

QModule center_module(const Kernel& k) {
    const int zn = k.Z.group.n;
    std::vector<AutTable> act(k.Q->n);
    for (int s = 0; s < k.Q->n; ++s) {
        act[s].resize(zn);
        for (int z = 0; z < zn; ++z) {
            int img = k.Z.from_parent[k.kappa[s][k.Z.to_parent[z]]];
            if (img < 0) fail(Errc::Internal, "automorphism does not preserve the center");
            act[s][z] = img;
        }
    }
    // the inner representative on the identity may differ from id pointwise
    // outside the center, but on the center every choice acts the same
    act[0] = aut_identity(zn);
    return make_qmodule(k.Q, std::make_shared<const FiniteGroup>(k.Z.group), std::move(act));
}

namespace {

struct Lift {
    std::vector<AutTable> f;
    std::vector<std::vector<int>> g;
};

Lift choose_lift(const Kernel& k, std::uint64_t seed) {
    const FiniteGroup& G = *k.G;
    const FiniteGroup& Q = *k.Q;
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<int>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };

    Lift L;
    L.f.resize(Q.n);
    L.f[0] = aut_identity(G.n);
    for (int s = 1; s < Q.n; ++s) {
        int r = seed == 0 ? 0 : std::uniform_int_distribution<int>(0, G.n - 1)(rng);
        L.f[s] = aut_compose(inner_aut(G, r), k.kappa[s]);
    }
    L.g.assign(Q.n, std::vector<int>(Q.n, 0));
    for (int s = 1; s < Q.n; ++s)
        for (int t = 1; t < Q.n; ++t) {
            AutTable target =
                aut_compose(aut_compose(L.f[s], L.f[t]), aut_invert(L.f[Q.prod(s, t)]));
            auto cands = inner_preimages(G, target);
            if (cands.empty()) fail(Errc::Internal, "cocycle lift target is not inner");
            L.g[s][t] = seed == 0 ? cands.front() : pick(cands);
        }
    return L;
}

Cochain obstruction_of(const Kernel& k, const Lift& L) {
    const FiniteGroup& G = *k.G;
    const FiniteGroup& Q = *k.Q;
    const int q = Q.n;
    Cochain z = zero_cochain(q, 3);
    for (int s = 1; s < q; ++s)
        for (int t = 1; t < q; ++t)
            for (int u = 1; u < q; ++u) {
                int lhs = G.prod(L.f[s][L.g[t][u]], L.g[s][Q.prod(t, u)]);
                int rhs = G.prod(L.g[s][t], L.g[Q.prod(s, t)][u]);
                int v = G.prod(lhs, G.inv[rhs]);
                int zi = k.Z.from_parent[v];
                if (zi < 0) fail(Errc::Internal, "obstruction value is not central");
                z.values[triple_index(q, s, t, u)] = zi;
            }
    return z;
}

}  // namespace

Cochain obstruction(const Kernel& k, std::uint64_t seed) {
    return obstruction_of(k, choose_lift(k, seed));
}

bool obstruction_vanishes(const Kernel& k, std::uint64_t seed, const Limits& lim) {
    auto zmod = center_module(k);
    return is_coboundary(zmod, obstruction_of(k, choose_lift(k, seed)), lim);
}

bool is_cocycle(const Kernel& k, const TwoCocycle& c) {
    try {
        validate_cocycle(k, c);
        return true;
    } catch (const Error&) {
        return false;
    }
}

void validate_cocycle(const Kernel& k, const TwoCocycle& c) {
    const FiniteGroup& G = *k.G;
    const FiniteGroup& Q = *k.Q;
    const int q = Q.n;
    if (static_cast<int>(c.f.size()) != q || static_cast<int>(c.g.size()) != q)
        fail(Errc::Validation, "cocycle component sizes do not match |Q|");
    if (c.f[0] != aut_identity(G.n)) fail(Errc::Validation, "f at the identity is not id");
    for (int s = 0; s < q; ++s) {
        if (static_cast<int>(c.g[s].size()) != q)
            fail(Errc::Validation, "cocycle component sizes do not match |Q|");
        if (!is_automorphism(G, c.f[s])) fail(Errc::Validation, "f value is not an automorphism");
        if (!k.aut.same_coset(c.f[s], k.kappa[s]))
            fail(Errc::Validation, "f value lies outside its kappa class");
        if (c.g[s][0] != 0 || c.g[0][s] != 0) fail(Errc::Validation, "g is not normalized");
    }
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t) {
            if (aut_compose(c.f[s], c.f[t]) !=
                aut_compose(inner_aut(G, c.g[s][t]), c.f[Q.prod(s, t)]))
                fail(Errc::Validation, "f_s f_t != int(g_st) f_st");
            for (int u = 0; u < q; ++u)
                if (G.prod(c.f[s][c.g[t][u]], c.g[s][Q.prod(t, u)]) !=
                    G.prod(c.g[s][t], c.g[Q.prod(s, t)][u]))
                    fail(Errc::Validation, "2-cocycle identity fails");
        }
}

std::optional<TwoCocycle> find_cocycle(const Kernel& k, std::uint64_t seed, const Limits& lim) {
    auto zmod = center_module(k);
    auto L = choose_lift(k, seed);
    Cochain z0 = obstruction_of(k, L);
    Cochain minus = z0;
    for (auto& v : minus.values) v = k.Z.group.inv[v];
    auto w = coboundary_preimage(zmod, minus, lim);
    if (!w) return std::nullopt;
    TwoCocycle c{L.f, L.g};
    const int q = k.Q->n;
    for (int s = 1; s < q; ++s)
        for (int t = 1; t < q; ++t)
            c.g[s][t] =
                k.G->prod(k.Z.to_parent[w->values[pair_index(q, s, t)]], c.g[s][t]);
    validate_cocycle(k, c);
    return c;
}

TwoCocycle act(const Kernel& k, const Cochain& z, const TwoCocycle& c) {
    if (z.degree != 2) fail(Errc::Validation, "torsor action needs a 2-cochain");
    TwoCocycle out = c;
    const int q = k.Q->n;
    for (int s = 1; s < q; ++s)
        for (int t = 1; t < q; ++t)
            out.g[s][t] = k.G->prod(k.Z.to_parent[z.values[pair_index(q, s, t)]], c.g[s][t]);
    return out;
}

namespace {

// Search for h: Q -> G with h_1 = 1, h_s in allowed[s], and
// h_st = adjust[s][t]^-1 * h_s * f_s(h_t) * g_st  (the equivalence recursion:
// adjust = target g', g/f = source cocycle data).
struct TransferSearch {
    const FiniteGroup& G;
    const FiniteGroup& Q;
    const std::vector<AutTable>& f;
    const std::vector<std::vector<int>>& g;
    const std::vector<std::vector<int>>& target;
    const std::vector<std::vector<char>>& allowed;
    long long budget;

    std::vector<int> h;

    bool propagate(std::vector<int>& trail) {
        for (bool changed = true; changed;) {
            changed = false;
            for (int s = 0; s < Q.n; ++s) {
                if (h[s] < 0) continue;
                for (int t = 0; t < Q.n; ++t) {
                    if (h[t] < 0) continue;
                    int st = Q.prod(s, t);
                    int v = G.prod(G.inv[target[s][t]], G.prod(h[s], G.prod(f[s][h[t]], g[s][t])));
                    if (h[st] < 0) {
                        if (!allowed[st][v]) return false;
                        h[st] = v;
                        trail.push_back(st);
                        changed = true;
                    } else if (h[st] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool search(const std::vector<int>& gens, std::size_t gi) {
        if (--budget < 0) fail(Errc::SizeLimitExceeded, "equivalence search exceeded node budget");
        while (gi < gens.size() && h[gens[gi]] >= 0) ++gi;
        if (gi == gens.size()) {
            for (int s = 0; s < Q.n; ++s)
                if (h[s] < 0) fail(Errc::Internal, "generators do not span Q");
            return true;
        }
        int s = gens[gi];
        for (int x = 0; x < G.n; ++x) {
            if (!allowed[s][x]) continue;
            std::vector<int> trail{s};
            h[s] = x;
            if (propagate(trail) && search(gens, gi + 1)) return true;
            for (int u : trail) h[u] = -1;
        }
        return false;
    }

    bool run() {
        h.assign(Q.n, -1);
        if (!allowed[0][0]) return false;
        h[0] = 0;
        std::vector<int> trail;
        if (!propagate(trail)) return false;
        return search(generating_set(Q), 0);
    }
};

}  // namespace

bool cocycles_equivalent(const Kernel& k, const TwoCocycle& a, const TwoCocycle& b,
                         const Limits& lim) {
    const FiniteGroup& G = *k.G;
    const int q = k.Q->n;
    std::vector<std::vector<char>> allowed(q, std::vector<char>(G.n, 0));
    for (int s = 0; s < q; ++s) {
        auto cands = inner_preimages(G, aut_compose(b.f[s], aut_invert(a.f[s])));
        if (cands.empty()) return false;
        for (int x : cands) allowed[s][x] = 1;
    }
    TransferSearch ts{G, *k.Q, a.f, a.g, b.g, allowed, static_cast<long long>(lim.max_search_nodes), {}};
    return ts.run();
}

bool is_neutral(const Kernel& k, const TwoCocycle& c, const Limits& lim) {
    const FiniteGroup& G = *k.G;
    const int q = k.Q->n;
    std::vector<std::vector<char>> allowed(q, std::vector<char>(G.n, 1));
    std::vector<std::vector<int>> ones(q, std::vector<int>(q, 0));
    TransferSearch ts{G, *k.Q, c.f, c.g, ones, allowed, static_cast<long long>(lim.max_search_nodes), {}};
    return ts.run();
}

H2Set enumerate_h2(const Kernel& k, const Limits& lim) {
    H2Set h{center_module(k), {}, {}};
    h.h2z = cohomology(h.zmod, 2, lim);
    auto base = find_cocycle(k, 0, lim);
    if (!base) return h;
    for (const auto& rep : h.h2z.reps) h.classes.push_back(act(k, rep, *base));
    return h;
}

int h2_class_index(const Kernel& k, const H2Set& h, const TwoCocycle& c, const Limits& lim) {
    for (std::size_t i = 0; i < h.classes.size(); ++i)
        if (cocycles_equivalent(k, h.classes[i], c, lim)) return static_cast<int>(i);
    return -1;
}

std::vector<TwoCocycle> enumerate_h2_brute(const Kernel& k, const Limits& lim) {
    const FiniteGroup& G = *k.G;
    const int q = k.Q->n;
    const int zn = k.Z.group.n;
    auto L = choose_lift(k, 0);

    const std::size_t cells = static_cast<std::size_t>(q - 1) * (q - 1);
    double space = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        space *= zn;
        if (space > static_cast<double>(lim.max_cochain_space))
            fail(Errc::SizeLimitExceeded, "central correction space exceeds cap");
    }

    std::vector<TwoCocycle> reps;
    std::vector<int> zvals(cells, 0);
    for (;;) {
        TwoCocycle c{L.f, L.g};
        for (int s = 1; s < q; ++s)
            for (int t = 1; t < q; ++t)
                c.g[s][t] = G.prod(k.Z.to_parent[zvals[pair_index(q, s, t)]], L.g[s][t]);
        if (is_cocycle(k, c)) {
            bool fresh = true;
            for (const auto& r : reps)
                if (cocycles_equivalent(k, r, c, lim)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(std::move(c));
        }
        int i = static_cast<int>(cells) - 1;
        while (i >= 0 && zvals[i] + 1 == zn) zvals[i--] = 0;
        if (i < 0) break;
        ++zvals[i];
    }
    return reps;
}

}  // namespace grpext
