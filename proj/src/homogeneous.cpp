#include "grpext/homogeneous.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace grpext {

GSpace make_gspace(GroupPtr G, GroupPtr Q, std::vector<AutTable> form, int nx,
                   std::vector<std::vector<int>> gact, std::vector<std::vector<int>> qact) {
    if (nx <= 0) fail(Errc::Validation, "empty point set");
    if (static_cast<int>(form.size()) != Q->n) fail(Errc::Validation, "form size != |Q|");
    for (const auto& t : form)
        if (!is_automorphism(*G, t)) fail(Errc::Validation, "form value is not an automorphism");
    for (int s = 0; s < Q->n; ++s)
        for (int t = 0; t < Q->n; ++t)
            if (aut_compose(form[s], form[t]) != form[Q->prod(s, t)])
                fail(Errc::NotHomomorphism, "form is not a homomorphism");

    if (static_cast<int>(gact.size()) != G->n || static_cast<int>(qact.size()) != Q->n)
        fail(Errc::Validation, "action table sizes do not match group orders");
    auto check_tables = [&](const std::vector<std::vector<int>>& tabs) {
        for (const auto& row : tabs) {
            if (static_cast<int>(row.size()) != nx) fail(Errc::Validation, "action row size != |X|");
            std::vector<char> seen(nx, 0);
            for (int v : row) {
                if (v < 0 || v >= nx || seen[v]) fail(Errc::Validation, "action row is not a permutation");
                seen[v] = 1;
            }
        }
    };
    check_tables(gact);
    check_tables(qact);

    GSpace S{std::move(G), std::move(Q), std::move(form), nx, std::move(gact), std::move(qact)};
    for (int x = 0; x < nx; ++x) {
        if (S.xg(x, 0) != x) fail(Errc::Validation, "identity of G moves a point");
        for (int g = 0; g < S.G->n; ++g)
            for (int h = 0; h < S.G->n; ++h)
                if (S.xg(S.xg(x, g), h) != S.xg(x, S.G->prod(g, h)))
                    fail(Errc::Validation, "right action law fails");
    }
    for (int x = 0; x < nx; ++x) {
        if (S.sx(0, x) != x) fail(Errc::Validation, "identity of Q moves a point");
        for (int s = 0; s < S.Q->n; ++s)
            for (int t = 0; t < S.Q->n; ++t)
                if (S.sx(s, S.sx(t, x)) != S.sx(S.Q->prod(s, t), x))
                    fail(Errc::Validation, "Q action law fails");
    }
    // transitivity from point 0
    std::vector<char> reach(nx, 0);
    int reached = 0;
    for (int g = 0; g < S.G->n; ++g)
        if (!reach[S.xg(0, g)]) {
            reach[S.xg(0, g)] = 1;
            ++reached;
        }
    if (reached != nx) fail(Errc::NotTransitive, "G does not act transitively");
    for (int s = 0; s < S.Q->n; ++s)
        for (int x = 0; x < nx; ++x)
            for (int g = 0; g < S.G->n; ++g)
                if (S.sx(s, S.xg(x, g)) != S.xg(S.sx(s, x), S.form[s][g]))
                    fail(Errc::NotCompatible, "Q and G actions are incompatible");
    return S;
}

bool is_free(const GSpace& S) {
    for (int x = 0; x < S.nx; ++x)
        for (int g = 1; g < S.G->n; ++g)
            if (S.xg(x, g) == x) return false;
    return true;
}

GSpace twisted_torsor(GroupPtr G, GroupPtr Q, std::vector<AutTable> form, std::vector<int> c) {
    const int n = G->n;
    if (static_cast<int>(c.size()) != Q->n || c[0] != 0)
        fail(Errc::Validation, "twist must be a normalized map on Q");
    for (int s = 0; s < Q->n; ++s)
        for (int t = 0; t < Q->n; ++t)
            if (c[Q->prod(s, t)] != G->prod(c[s], form[s][c[t]]))
                fail(Errc::Validation, "twist is not a 1-cocycle");
    std::vector<std::vector<int>> gact(n, std::vector<int>(n)), qact(Q->n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) gact[g][x] = G->prod(x, g);
    for (int s = 0; s < Q->n; ++s)
        for (int x = 0; x < n; ++x) qact[s][x] = G->prod(c[s], form[s][x]);
    return make_gspace(std::move(G), std::move(Q), std::move(form), n, std::move(gact),
                       std::move(qact));
}

StabilizerData stabilizer_kernel(const GSpace& S, int x0, std::uint64_t seed, const Limits& lim) {
    const FiniteGroup& G = *S.G;
    const FiniteGroup& Q = *S.Q;
    if (x0 < 0 || x0 >= S.nx) fail(Errc::Validation, "base point out of range");

    std::vector<int> stab;
    for (int g = 0; g < G.n; ++g)
        if (S.xg(x0, g) == x0) stab.push_back(g);

    StabilizerData out;
    out.H = subgroup_group(G, stab);
    std::mt19937_64 rng(seed);
    out.a.assign(Q.n, -1);
    out.a[0] = 0;
    for (int s = 1; s < Q.n; ++s) {
        std::vector<int> cands;
        for (int g = 0; g < G.n; ++g)
            if (S.xg(x0, g) == S.sx(s, x0)) cands.push_back(g);
        if (cands.empty()) fail(Errc::NotTransitive, "no translation to the moved base point");
        out.a[s] = seed == 0 ? cands.front()
                             : cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    }

    const int hn = out.H.group.n;
    std::vector<AutTable> f(Q.n);
    for (int s = 0; s < Q.n; ++s) {
        f[s].resize(hn);
        for (int i = 0; i < hn; ++i) {
            int img = G.prod(out.a[s], G.prod(S.form[s][out.H.to_parent[i]], G.inv[out.a[s]]));
            int hi = out.H.from_parent[img];
            if (hi < 0) fail(Errc::Internal, "twisted form does not preserve the stabilizer");
            f[s][i] = hi;
        }
    }
    out.kernel =
        make_kernel(std::make_shared<const FiniteGroup>(out.H.group), S.Q, f, lim);

    out.cocycle.f = std::move(f);
    out.cocycle.g.assign(Q.n, std::vector<int>(Q.n));
    for (int s = 0; s < Q.n; ++s)
        for (int t = 0; t < Q.n; ++t) {
            int v = G.prod(out.a[s], G.prod(S.form[s][out.a[t]], G.inv[out.a[Q.prod(s, t)]]));
            int hi = out.H.from_parent[v];
            if (hi < 0) fail(Errc::Internal, "section defect leaves the stabilizer");
            out.cocycle.g[s][t] = hi;
        }
    validate_cocycle(out.kernel, out.cocycle);
    return out;
}

Extension class_alpha(const GSpace& S, int x0, const Limits& lim) {
    const FiniteGroup& G = *S.G;
    const FiniteGroup& Q = *S.Q;
    auto sd = stabilizer_kernel(S, x0, 0, lim);
    auto full = semidirect_product(G, Q, S.form);
    std::vector<int> elems;
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < Q.n; ++s)
            if (S.sx(s, x0) == S.xg(x0, g)) elems.push_back(g * Q.n + s);
    auto E = subgroup_group(full, elems);
    const int hn = sd.H.group.n;
    std::vector<int> iota(hn), pi(E.group.n);
    for (int i = 0; i < hn; ++i) iota[i] = E.from_parent[sd.H.to_parent[i] * Q.n];
    for (int e = 0; e < E.group.n; ++e) pi[e] = E.to_parent[e] % Q.n;
    return make_extension(std::make_shared<const FiniteGroup>(E.group),
                          std::make_shared<const FiniteGroup>(sd.H.group), S.Q, std::move(iota),
                          std::move(pi));
}

std::optional<Domination> dominated_by_torsor(const GSpace& S, const Limits& lim) {
    const FiniteGroup& G = *S.G;
    const FiniteGroup& Q = *S.Q;
    // enumerate 1-cocycles c: Q -> G over generator values with propagation
    std::vector<int> gens = generating_set(Q);
    std::vector<int> c(Q.n, -1);
    c[0] = 0;
    long long budget = static_cast<long long>(lim.max_search_nodes);

    auto propagate = [&](std::vector<int>& trail) {
        for (bool changed = true; changed;) {
            changed = false;
            for (int s = 0; s < Q.n; ++s) {
                if (c[s] < 0) continue;
                for (int t = 0; t < Q.n; ++t) {
                    if (c[t] < 0) continue;
                    int st = Q.prod(s, t);
                    int v = G.prod(c[s], S.form[s][c[t]]);
                    if (c[st] < 0) {
                        c[st] = v;
                        trail.push_back(st);
                        changed = true;
                    } else if (c[st] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    std::optional<Domination> result;
    auto try_complete = [&]() {
        // search an equivariant map: the image y of the identity point must
        // satisfy y.c(s) = s(y) for every s
        for (int y = 0; y < S.nx; ++y) {
            bool ok = true;
            for (int s = 1; s < Q.n && ok; ++s)
                if (S.xg(y, c[s]) != S.sx(s, y)) ok = false;
            if (!ok) continue;
            Domination d;
            d.torsor = twisted_torsor(S.G, S.Q, S.form, c);
            d.map.resize(G.n);
            for (int g = 0; g < G.n; ++g) d.map[g] = S.xg(y, g);
            result = std::move(d);
            return true;
        }
        return false;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t gi) -> bool {
        if (--budget < 0) fail(Errc::SizeLimitExceeded, "torsor search exceeded node budget");
        while (gi < gens.size() && c[gens[gi]] >= 0) ++gi;
        if (gi == gens.size()) return try_complete();
        int s = gens[gi];
        for (int g = 0; g < G.n; ++g) {
            std::vector<int> trail{s};
            c[s] = g;
            if (propagate(trail) && search(gi + 1)) return true;
            for (int u : trail) c[u] = -1;
        }
        return false;
    };

    std::vector<int> trail;
    propagate(trail);
    search(0);
    return result;
}

bool verify_51(const GSpace& S, const Limits& lim) {
    auto sd = stabilizer_kernel(S, 0, 0, lim);
    bool neutral = is_neutral(sd.kernel, sd.cocycle, lim);
    bool dominated = dominated_by_torsor(S, lim).has_value();
    return neutral == dominated;
}

}  // namespace grpext
