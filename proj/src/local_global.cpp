#include "grpext/local_global.hpp"

#include <algorithm>

namespace grpext {

OrderingSpace orderings(GroupPtr Q) {
    OrderingSpace os;
    os.Q = Q;
    std::vector<char> inv(Q->n, 0);
    for (int t : involutions(*Q)) inv[t] = 1;
    for (const auto& cls : conjugacy_classes(*Q))
        if (inv[cls.front()]) os.classes.push_back(cls);
    return os;
}

namespace {

std::vector<int> involutions_over(const Extension& X, int t) {
    std::vector<int> out;
    for (int e = 0; e < X.E->n; ++e)
        if (X.pi[e] == t && e != 0 && X.E->prod(e, e) == 0) out.push_back(e);
    return out;
}

bool conjugate_under_kernel(const Extension& X, int a, int b) {
    const FiniteGroup& E = *X.E;
    for (int x = 0; x < X.G->n; ++x) {
        int g = X.iota[x];
        if (E.prod(g, E.prod(a, E.inv[g])) == b) return true;
    }
    return false;
}

}  // namespace

LocalStatus localize(const Extension& X, const OrderingSpace& os, int xi) {
    LocalStatus st;
    st.lifts = involutions_over(X, os.rep(xi));
    st.neutral = !st.lifts.empty();
    return st;
}

InvSection inv_section(const Extension& X, const Limits& lim) {
    const FiniteGroup& Q = *X.Q;
    const FiniteGroup& E = *X.E;
    auto os = orderings(X.Q);
    std::vector<int> rho(Q.n, -1);  // least preimages
    for (int e = 0; e < E.n; ++e)
        if (rho[X.pi[e]] < 0) rho[X.pi[e]] = e;

    InvSection sec;
    sec.tau.assign(Q.n, -1);
    for (int xi = 0; xi < os.count(); ++xi) {
        int t0 = os.rep(xi);
        auto lifts = involutions_over(X, t0);
        if (lifts.empty()) fail(Errc::NotLocallySplit, "no involution above an ordering representative");
        sec.tau[t0] = lifts.front();
        for (int u : os.classes[xi]) {
            if (u == t0) continue;
            for (int s = 0; s < Q.n; ++s)
                if (Q.prod(s, Q.prod(t0, Q.inv[s])) == u) {
                    sec.tau[u] = E.prod(rho[s], E.prod(sec.tau[t0], E.inv[rho[s]]));
                    break;
                }
        }
    }

    sec.compatible = true;
    for (int t = 0; t < Q.n && sec.compatible; ++t) {
        if (sec.tau[t] < 0) continue;
        for (int x = 0; x < E.n; ++x) {
            int u = Q.prod(X.pi[x], Q.prod(t, Q.inv[X.pi[x]]));
            int moved = E.prod(x, E.prod(sec.tau[t], E.inv[x]));
            if (!conjugate_under_kernel(X, moved, sec.tau[u])) {
                sec.compatible = false;
                break;
            }
        }
    }
    (void)lim;
    return sec;
}

std::optional<Splitting> compatible_splitting(const Extension& X, const InvSection& tau,
                                              const Limits& lim) {
    for (const auto& sp : find_all_splittings(X, lim)) {
        bool ok = true;
        for (int t = 0; t < X.Q->n && ok; ++t)
            if (tau.tau[t] >= 0 && !conjugate_under_kernel(X, sp.section[t], tau.tau[t])) ok = false;
        if (ok) return sp;
    }
    return std::nullopt;
}

Kernel restrict_kernel(const Kernel& k, const SubgroupGroup& S, const Limits& lim) {
    std::vector<AutTable> kappa(S.group.n);
    for (int s = 0; s < S.group.n; ++s) kappa[s] = k.kappa[S.to_parent[s]];
    return make_kernel(k.G, std::make_shared<const FiniteGroup>(S.group), std::move(kappa), lim);
}

TwoCocycle restrict_cocycle(const TwoCocycle& c, const SubgroupGroup& S) {
    TwoCocycle out;
    out.f.resize(S.group.n);
    out.g.assign(S.group.n, std::vector<int>(S.group.n));
    for (int s = 0; s < S.group.n; ++s) {
        out.f[s] = c.f[S.to_parent[s]];
        for (int t = 0; t < S.group.n; ++t) out.g[s][t] = c.g[S.to_parent[s]][S.to_parent[t]];
    }
    return out;
}

LocalReport report(const Kernel& L, const Limits& lim) {
    LocalReport rep;
    rep.os = orderings(L.Q);
    auto h = enumerate_h2(L, lim);
    for (const auto& c : h.classes) {
        ClassLocalReport cr;
        auto ext = cocycle_to_extension(L, c, lim);
        bool all_local = true;
        for (int xi = 0; xi < rep.os.count(); ++xi) {
            bool loc = localize(ext, rep.os, xi).neutral;
            cr.locally_neutral.push_back(loc);
            all_local = all_local && loc;
        }
        cr.globally_neutral = is_neutral(L, c, lim);
        cr.verdict = !all_local || cr.globally_neutral;
        rep.classes.push_back(std::move(cr));
    }
    return rep;
}

SheafSections sheaf_sections(const Kernel& L, const Limits& lim) {
    SheafSections out;
    auto os = orderings(L.Q);
    auto h = enumerate_h2(L, lim);

    std::vector<Kernel> local_kernels;
    std::vector<H2Set> local_sets;
    std::vector<SubgroupGroup> subs;
    for (int xi = 0; xi < os.count(); ++xi) {
        subs.push_back(subgroup_group(*L.Q, closure(*L.Q, {os.rep(xi)})));
        local_kernels.push_back(restrict_kernel(L, subs.back(), lim));
        local_sets.push_back(enumerate_h2(local_kernels.back(), lim));
        out.local_counts.push_back(static_cast<int>(local_sets.back().classes.size()));
    }

    double total = 1;
    for (int n : out.local_counts) {
        total *= std::max(n, 1);
        if (total > static_cast<double>(lim.max_cochain_space))
            fail(Errc::SizeLimitExceeded, "sheaf section space exceeds cap");
    }
    if (std::find(out.local_counts.begin(), out.local_counts.end(), 0) != out.local_counts.end()) {
        // some ordering has no local classes at all, so there are no sections
        out.hit.clear();
        return out;
    }
    std::vector<int> tup(os.count(), 0);
    for (;;) {
        out.sections.push_back(tup);
        int i = os.count() - 1;
        while (i >= 0 && tup[i] + 1 == out.local_counts[i]) tup[i--] = 0;
        if (i < 0) break;
        ++tup[i];
    }

    out.hit.assign(out.sections.size(), 0);
    for (const auto& c : h.classes) {
        std::vector<int> img(os.count());
        for (int xi = 0; xi < os.count(); ++xi) {
            int li = h2_class_index(local_kernels[xi], local_sets[xi],
                                    restrict_cocycle(c, subs[xi]), lim);
            if (li < 0) fail(Errc::Internal, "restricted class missing from local set");
            img[xi] = li;
        }
        auto it = std::find(out.sections.begin(), out.sections.end(), img);
        out.image.push_back(static_cast<int>(it - out.sections.begin()));
        out.hit[out.image.back()] = 1;
    }
    return out;
}

}  // namespace grpext
