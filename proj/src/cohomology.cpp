#include "grpext/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace grpext {

QModule make_qmodule(GroupPtr Q, GroupPtr M, std::vector<AutTable> action) {
    if (static_cast<int>(action.size()) != Q->n) fail(Errc::Validation, "action size != |Q|");
    for (const auto& t : action)
        if (!is_automorphism(*M, t)) fail(Errc::Validation, "action value is not an automorphism of M");
    for (int s = 0; s < Q->n; ++s)
        for (int t = 0; t < Q->n; ++t)
            if (aut_compose(action[s], action[t]) != action[Q->prod(s, t)])
                fail(Errc::NotHomomorphism, "module action is not a homomorphism");
    QModule mod;
    mod.Q = std::move(Q);
    mod.M = abelian_coords(std::move(M));
    mod.action = std::move(action);
    return mod;
}

QModule trivial_qmodule(GroupPtr Q, GroupPtr M) {
    std::vector<AutTable> act(Q->n, aut_identity(M->n));
    return make_qmodule(std::move(Q), std::move(M), std::move(act));
}

std::size_t cochain_entries(int q, int n) {
    std::size_t e = 1;
    for (int i = 0; i < n; ++i) e *= static_cast<std::size_t>(q - 1);
    return e;
}

Cochain zero_cochain(int q, int n) { return {n, std::vector<int>(cochain_entries(q, n), 0)}; }

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

namespace {

std::size_t tuple_index(int q, const std::vector<int>& args) {
    std::size_t idx = 0;
    for (int a : args) idx = idx * (q - 1) + static_cast<std::size_t>(a - 1);
    return idx;
}

std::vector<int> tuple_decode(int q, int n, std::size_t idx) {
    std::vector<int> args(n);
    for (int i = n - 1; i >= 0; --i) {
        args[i] = static_cast<int>(idx % (q - 1)) + 1;
        idx /= (q - 1);
    }
    return args;
}

}  // namespace

int cochain_eval(const Cochain& c, int q, const std::vector<int>& args) {
    for (int a : args)
        if (a == 0) return 0;
    return c.values[tuple_index(q, args)];
}

Cochain cochain_add(const QModule& mod, const Cochain& a, const Cochain& b) {
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = mod.M.M->prod(a.values[i], b.values[i]);
    return out;
}

Cochain cochain_sub(const QModule& mod, const Cochain& a, const Cochain& b) {
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = mod.M.M->prod(a.values[i], mod.M.M->inv[b.values[i]]);
    return out;
}

Cochain coboundary(const QModule& mod, const Cochain& c) {
    const int q = mod.q();
    const int n = c.degree;
    const FiniteGroup& M = *mod.M.M;
    const FiniteGroup& Q = *mod.Q;
    Cochain out = zero_cochain(q, n + 1);
    const std::size_t total = cochain_entries(q, n + 1);
    std::vector<int> sub(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto args = tuple_decode(q, n + 1, idx);
        // s0 . c(s1..sn)
        std::copy(args.begin() + 1, args.end(), sub.begin());
        int v = mod.act(args[0], cochain_eval(c, q, sub));
        // alternating inner terms
        for (int i = 1; i <= n; ++i) {
            for (int j = 0, k = 0; j <= n; ++j) {
                if (j == i) continue;
                sub[k++] = (j == i - 1) ? Q.prod(args[i - 1], args[i]) : args[j];
            }
            int t = cochain_eval(c, q, sub);
            v = (i % 2) ? M.prod(v, M.inv[t]) : M.prod(v, t);
        }
        std::copy(args.begin(), args.end() - 1, sub.begin());
        int t = cochain_eval(c, q, sub);
        v = ((n + 1) % 2) ? M.prod(v, M.inv[t]) : M.prod(v, t);
        out.values[idx] = v;
    }
    return out;
}

bool is_cocycle(const QModule& mod, const Cochain& c) { return coboundary(mod, c).is_zero(); }

namespace {

std::vector<long long> scaled_coords(const QModule& mod, const Cochain& c, long long L) {
    const int r = mod.M.rank();
    std::vector<long long> v(c.values.size() * r);
    for (std::size_t e = 0; e < c.values.size(); ++e) {
        const auto& co = mod.M.coords[c.values[e]];
        for (int i = 0; i < r; ++i) v[e * r + i] = (L / mod.M.orders[i]) * co[i] % L;
    }
    return v;
}

Cochain unscale_coords(const QModule& mod, const std::vector<long long>& v, int degree, long long L) {
    const int r = mod.M.rank();
    Cochain c = zero_cochain(mod.q(), degree);
    std::vector<long long> co(r);
    for (std::size_t e = 0; e < c.values.size(); ++e) {
        for (int i = 0; i < r; ++i) {
            long long s = L / mod.M.orders[i];
            if (v[e * r + i] % s != 0) fail(Errc::Internal, "scaled coordinate outside module lattice");
            co[i] = v[e * r + i] / s;
        }
        c.values[e] = mod.M.from_coords(co);
    }
    return c;
}

// Matrix of d^n : C^n -> C^(n+1) on scaled coordinates (columns indexed by
// unscaled unit cochains, rows by scaled target coordinates).
IntMatrix diff_matrix(const QModule& mod, int n, long long L, const Limits& lim) {
    const int q = mod.q();
    const int r = mod.M.rank();
    IntMatrix A;
    A.cols = static_cast<int>(cochain_entries(q, n)) * r;
    A.rows = static_cast<int>(cochain_entries(q, n + 1)) * r;
    if (static_cast<std::size_t>(A.cols) * A.rows > lim.max_table_cells)
        fail(Errc::SizeLimitExceeded, "coboundary matrix exceeds cell cap");
    A.a.assign(static_cast<std::size_t>(A.cols) * A.rows, 0);
    Cochain unit = zero_cochain(q, n);
    for (std::size_t e = 0; e < unit.values.size(); ++e) {
        for (int k = 0; k < r; ++k) {
            unit.values[e] = mod.M.basis[k];
            auto col = scaled_coords(mod, coboundary(mod, unit), L);
            int j = static_cast<int>(e) * r + k;
            for (int i = 0; i < A.rows; ++i) A.at(i, j) = col[i];
            unit.values[e] = 0;
        }
    }
    return A;
}

std::vector<long long> term_moduli(const QModule& mod, int n) {
    std::vector<long long> m;
    m.reserve(cochain_entries(mod.q(), n) * mod.M.rank());
    for (std::size_t e = 0; e < cochain_entries(mod.q(), n); ++e)
        for (long long d : mod.M.orders) m.push_back(d);
    return m;
}

// Kernel generators of d_out in scaled coordinates.
std::vector<std::vector<long long>> kernel_scaled(const IntMatrix& d_out,
                                                  const std::vector<long long>& moduli, long long L) {
    auto raw = kernel_mod(d_out, L);
    for (auto& x : raw)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = (L / moduli[j]) * (x[j] % moduli[j]) % L;
    return raw;
}

struct ScaledClassGroup {
    long long L = 1;
    HowellBasis boundaries{1, 0};
    std::vector<std::vector<long long>> reps;
    std::map<std::vector<long long>, int> index;
    std::vector<std::vector<int>> table;
    std::vector<int> negatives;

    std::vector<long long> canon(const std::vector<long long>& v) const { return boundaries.reduce(v); }
    int find(const std::vector<long long>& v) const {
        auto it = index.find(canon(v));
        return it == index.end() ? -1 : it->second;
    }
};

ScaledClassGroup class_group(long long L, const std::vector<long long>& moduli, const IntMatrix& d_out,
                             const IntMatrix& d_in, const Limits& lim) {
    ScaledClassGroup g;
    g.L = L;
    const int dim = static_cast<int>(moduli.size());
    g.boundaries = HowellBasis(L, dim);
    std::vector<long long> col(dim);
    for (int j = 0; j < d_in.cols; ++j) {
        for (int i = 0; i < dim; ++i) col[i] = d_in.at(i, j);
        g.boundaries.add(col);
    }
    auto gens = kernel_scaled(d_out, moduli, L);

    auto zero = g.canon(std::vector<long long>(dim, 0));
    g.reps.push_back(zero);
    g.index[zero] = 0;
    for (std::size_t i = 0; i < g.reps.size(); ++i) {
        for (const auto& gen : gens) {
            std::vector<long long> s(dim);
            for (int k = 0; k < dim; ++k) s[k] = (g.reps[i][k] + gen[k]) % L;
            auto c = g.canon(s);
            if (g.index.emplace(c, static_cast<int>(g.reps.size())).second) {
                g.reps.push_back(c);
                if (g.reps.size() > 1u << 16)
                    fail(Errc::SizeLimitExceeded, "cohomology class count exceeds cap");
            }
        }
    }

    std::sort(g.reps.begin(), g.reps.end());
    g.index.clear();
    for (std::size_t i = 0; i < g.reps.size(); ++i) g.index[g.reps[i]] = static_cast<int>(i);

    const int h = static_cast<int>(g.reps.size());
    g.table.assign(h, std::vector<int>(h));
    g.negatives.assign(h, -1);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            std::vector<long long> s(dim);
            for (int k = 0; k < dim; ++k) s[k] = (g.reps[i][k] + g.reps[j][k]) % L;
            int c = g.find(s);
            if (c < 0) fail(Errc::Internal, "class group not closed under addition");
            g.table[i][j] = c;
            if (c == 0) g.negatives[i] = j;
        }
    return g;
}

}  // namespace

bool is_coboundary(const QModule& mod, const Cochain& c, const Limits& lim) {
    if (c.degree == 0) return c.is_zero();
    long long L = mod.M.exponent;
    auto A = diff_matrix(mod, c.degree - 1, L, lim);
    return solve_mod(A, scaled_coords(mod, c, L), L).has_value();
}

std::optional<Cochain> coboundary_preimage(const QModule& mod, const Cochain& c, const Limits& lim) {
    if (c.degree == 0) {
        if (c.is_zero()) return zero_cochain(mod.q(), 0);
        return std::nullopt;
    }
    long long L = mod.M.exponent;
    auto A = diff_matrix(mod, c.degree - 1, L, lim);
    auto x = solve_mod(A, scaled_coords(mod, c, L), L);
    if (!x) return std::nullopt;
    // solve_mod variables are unscaled basis coefficients
    Cochain w = zero_cochain(mod.q(), c.degree - 1);
    const int r = mod.M.rank();
    std::vector<long long> co(r);
    for (std::size_t e = 0; e < w.values.size(); ++e) {
        for (int i = 0; i < r; ++i) co[i] = (*x)[e * r + i];
        w.values[e] = mod.M.from_coords(co);
    }
    return w;
}

bool cohomologous(const QModule& mod, const Cochain& a, const Cochain& b, const Limits& lim) {
    return is_coboundary(mod, cochain_sub(mod, a, b), lim);
}

Cochain canonical_cocycle(const QModule& mod, const Cochain& c, const Limits& lim) {
    long long L = mod.M.exponent;
    auto moduli = term_moduli(mod, c.degree);
    HowellBasis B(L, static_cast<int>(moduli.size()));
    if (c.degree > 0) {
        auto A = diff_matrix(mod, c.degree - 1, L, lim);
        std::vector<long long> col(A.rows);
        for (int j = 0; j < A.cols; ++j) {
            for (int i = 0; i < A.rows; ++i) col[i] = A.at(i, j);
            B.add(col);
        }
    }
    return unscale_coords(mod, B.reduce(scaled_coords(mod, c, L)), c.degree, L);
}

CohomologyGroup cohomology(const QModule& mod, int n, const Limits& lim) {
    long long L = mod.M.exponent;
    auto d_out = diff_matrix(mod, n, L, lim);
    IntMatrix d_in;
    d_in.rows = d_out.cols;
    d_in.cols = 0;
    if (n > 0) d_in = diff_matrix(mod, n - 1, L, lim);
    auto g = class_group(L, term_moduli(mod, n), d_out, d_in, lim);
    CohomologyGroup h;
    h.degree = n;
    for (const auto& r : g.reps) h.reps.push_back(unscale_coords(mod, r, n, L));
    h.table = g.table;
    h.negatives = g.negatives;
    return h;
}

int class_index(const QModule& mod, const CohomologyGroup& h, const Cochain& c, const Limits& lim) {
    auto canon = canonical_cocycle(mod, c, lim);
    for (std::size_t i = 0; i < h.reps.size(); ++i)
        if (h.reps[i] == canon) return static_cast<int>(i);
    return -1;
}

CohomologyGroup cohomology_enumerate(const QModule& mod, int n, const Limits& lim) {
    const int q = mod.q();
    const int m = mod.m();
    const std::size_t entries = cochain_entries(q, n);
    double space = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        space *= m;
        if (space > static_cast<double>(lim.max_cochain_space))
            fail(Errc::SizeLimitExceeded, "cochain enumeration space exceeds cap");
    }
    if (n > 0) {
        double below = 1;
        for (std::size_t i = 0; i < cochain_entries(q, n - 1); ++i) {
            below *= m;
            if (below > static_cast<double>(lim.max_cochain_space))
                fail(Errc::SizeLimitExceeded, "coboundary enumeration space exceeds cap");
        }
    }

    auto enumerate = [&](int deg, auto&& fn) {
        Cochain c = zero_cochain(q, deg);
        for (;;) {
            fn(c);
            int i = static_cast<int>(c.values.size()) - 1;
            while (i >= 0 && c.values[i] + 1 == m) c.values[i--] = 0;
            if (i < 0) break;
            ++c.values[i];
        }
    };

    std::set<std::vector<int>> boundaries;
    if (n == 0)
        boundaries.insert(zero_cochain(q, 0).values);
    else
        enumerate(n - 1, [&](const Cochain& w) { boundaries.insert(coboundary(mod, w).values); });

    long long L = mod.M.exponent;
    std::vector<Cochain> cocycles;
    enumerate(n, [&](const Cochain& c) {
        if (is_cocycle(mod, c)) cocycles.push_back(c);
    });
    std::sort(cocycles.begin(), cocycles.end(), [&](const Cochain& a, const Cochain& b) {
        return scaled_coords(mod, a, L) < scaled_coords(mod, b, L);
    });

    const FiniteGroup& M = *mod.M.M;
    auto diff_is_boundary = [&](const Cochain& a, const Cochain& b) {
        std::vector<int> d(a.values.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = M.prod(a.values[i], M.inv[b.values[i]]);
        return boundaries.count(d) > 0;
    };

    CohomologyGroup h;
    h.degree = n;
    for (const auto& z : cocycles) {
        bool fresh = true;
        for (const auto& r : h.reps)
            if (diff_is_boundary(z, r)) {
                fresh = false;
                break;
            }
        if (fresh) h.reps.push_back(z);  // scaled-lex order makes the first member canonical
    }
    const int hn = static_cast<int>(h.reps.size());
    auto find_class = [&](const Cochain& z) {
        for (int i = 0; i < hn; ++i)
            if (diff_is_boundary(z, h.reps[i])) return i;
        return -1;
    };
    h.table.assign(hn, std::vector<int>(hn));
    h.negatives.assign(hn, -1);
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < hn; ++j) {
            int c = find_class(cochain_add(mod, h.reps[i], h.reps[j]));
            if (c < 0) fail(Errc::Internal, "enumeration classes not closed");
            h.table[i][j] = c;
            if (c == 0) h.negatives[i] = j;
        }
    return h;
}

// --- two-term complexes ---

TwoTermComplex make_two_term(QModule A, QModule B, std::vector<int> rho) {
    if (A.Q->n != B.Q->n) fail(Errc::Validation, "complex terms over different Q");
    GroupMap m{A.M.M, B.M.M, rho};
    validate_hom(m);
    for (int s = 0; s < A.q(); ++s)
        for (int x = 0; x < A.m(); ++x)
            if (rho[A.act(s, x)] != B.act(s, rho[x]))
                fail(Errc::Validation, "rho is not Q-equivariant");
    return {std::move(A), std::move(B), std::move(rho)};
}

namespace {

struct HyperCtx {
    const TwoTermComplex& cx;
    long long L;
    Limits lim;

    int q() const { return cx.B.q(); }
    std::size_t nb(int i) const { return i >= 0 ? cochain_entries(q(), i) : 0; }
    std::size_t na(int i) const { return i + 1 >= 0 ? cochain_entries(q(), i + 1) : 0; }
    int rb() const { return cx.B.M.rank(); }
    int ra() const { return cx.A.M.rank(); }
    int dim(int i) const { return static_cast<int>(nb(i)) * rb() + static_cast<int>(na(i)) * ra(); }

    std::vector<long long> moduli(int i) const {
        std::vector<long long> m;
        for (std::size_t e = 0; e < nb(i); ++e)
            for (long long d : cx.B.M.orders) m.push_back(d);
        for (std::size_t e = 0; e < na(i); ++e)
            for (long long d : cx.A.M.orders) m.push_back(d);
        return m;
    }

    std::vector<long long> pack(const Cochain& b, const Cochain& a) const {
        auto vb = scaled_coords(cx.B, b, L);
        auto va = scaled_coords(cx.A, a, L);
        vb.insert(vb.end(), va.begin(), va.end());
        return vb;
    }

    std::pair<Cochain, Cochain> unpack(const std::vector<long long>& v, int i) const {
        std::size_t splitAt = nb(i) * rb();
        std::vector<long long> vb(v.begin(), v.begin() + splitAt), va(v.begin() + splitAt, v.end());
        return {unscale_coords(cx.B, vb, std::max(i, 0), L), unscale_coords(cx.A, va, i + 1, L)};
    }

    // D_i : T^i -> T^(i+1), D(b, a) = (db + rho a, -da)
    IntMatrix diff(int i) const {
        IntMatrix D;
        D.cols = dim(i);
        D.rows = dim(i + 1);
        D.a.assign(static_cast<std::size_t>(D.cols) * D.rows, 0);
        const std::size_t b_rows = nb(i + 1) * rb();
        if (nb(i) > 0) {
            auto dB = diff_matrix(cx.B, i, L, lim);
            for (int r = 0; r < dB.rows; ++r)
                for (int c = 0; c < dB.cols; ++c) D.at(r, c) = dB.at(r, c);
        }
        {
            // rho block: C^(i+1)(A) -> C^(i+1)(B), and -d_A block below it
            auto dA = diff_matrix(cx.A, i + 1, L, lim);
            const int a_col0 = static_cast<int>(nb(i)) * rb();
            for (std::size_t e = 0; e < na(i); ++e)
                for (int k = 0; k < ra(); ++k) {
                    Cochain unit = zero_cochain(q(), i + 1);
                    unit.values[e] = cx.A.M.basis[k];
                    Cochain img = unit;
                    for (auto& v : img.values) v = cx.rho[v];
                    auto col = scaled_coords(cx.B, img, L);
                    int j = a_col0 + static_cast<int>(e) * ra() + k;
                    for (std::size_t r = 0; r < col.size(); ++r) D.at(static_cast<int>(r), j) = col[r];
                    for (int r = 0; r < dA.rows; ++r)
                        D.at(static_cast<int>(b_rows) + r, j) =
                            (L - dA.at(r, static_cast<int>(e) * ra() + k)) % L;
                }
        }
        return D;
    }
};

ScaledClassGroup hyper_class_group(const HyperCtx& ctx, int i, const Limits& lim) {
    auto d_out = ctx.diff(i);
    IntMatrix d_in;
    if (ctx.dim(i - 1) > 0)
        d_in = ctx.diff(i - 1);
    else {
        d_in.rows = ctx.dim(i);
        d_in.cols = 0;
    }
    return class_group(ctx.L, ctx.moduli(i), d_out, d_in, lim);
}

}  // namespace

HyperGroup hypercohomology(const TwoTermComplex& cx, int i, const Limits& lim) {
    HyperCtx ctx{cx, lcm_ll(cx.A.M.exponent, cx.B.M.exponent), lim};
    auto g = hyper_class_group(ctx, i, lim);
    HyperGroup h;
    h.degree = i;
    for (const auto& r : g.reps) h.reps.push_back(ctx.unpack(r, i));
    h.table = g.table;
    return h;
}

int hyper_class_index(const TwoTermComplex& cx, const HyperGroup& h, const Cochain& b, const Cochain& a,
                      const Limits& lim) {
    HyperCtx ctx{cx, lcm_ll(cx.A.M.exponent, cx.B.M.exponent), lim};
    auto g = hyper_class_group(ctx, h.degree, lim);
    // rebuild index over the stored reps (same construction, same order)
    auto canon = g.canon(ctx.pack(b, a));
    for (std::size_t i = 0; i < h.reps.size(); ++i)
        if (g.canon(ctx.pack(h.reps[i].first, h.reps[i].second)) == canon) return static_cast<int>(i);
    return -1;
}

LesReport les_check(const TwoTermComplex& cx, const Limits& lim) {
    HyperCtx ctx{cx, lcm_ll(cx.A.M.exponent, cx.B.M.exponent), lim};
    LesReport rep;
    auto fail_at = [&](const std::string& where) {
        rep.pass = false;
        rep.first_failure = where;
    };

    // groups
    std::vector<CohomologyGroup> HB, HA;
    for (int n = 0; n <= 2; ++n) HB.push_back(cohomology(cx.B, n, lim));
    for (int n = 0; n <= 2; ++n) HA.push_back(cohomology(cx.A, n, lim));
    std::vector<HyperGroup> HH;
    std::vector<ScaledClassGroup> HHg;
    for (int i = 0; i <= 2; ++i) {
        HHg.push_back(hyper_class_group(ctx, i, lim));
        HyperGroup h;
        h.degree = i;
        for (const auto& r : HHg.back().reps) h.reps.push_back(ctx.unpack(r, i));
        HH.push_back(std::move(h));
    }

    auto hh_index = [&](int i, const Cochain& b, const Cochain& a) {
        int c = HHg[i].find(ctx.pack(b, a));
        if (c < 0) fail(Errc::Internal, "hyper class lookup failed");
        return c;
    };
    auto ha_index = [&](int n, const Cochain& a) { return class_index(cx.A, HA[n], a, lim); };
    auto hb_index = [&](int n, const Cochain& b) { return class_index(cx.B, HB[n], b, lim); };
    auto rho_push = [&](const Cochain& a) {
        Cochain out = a;
        for (auto& v : out.values) v = cx.rho[v];
        return out;
    };

    // junction checks: image of incoming == kernel of outgoing
    auto check = [&](const std::string& name, const std::vector<int>& image,
                     const std::vector<int>& kernel) {
        if (rep.pass) {
            std::set<int> im(image.begin(), image.end()), ke(kernel.begin(), kernel.end());
            if (im != ke) fail_at(name);
        }
    };

    for (int i = 0; i <= 2 && rep.pass; ++i) {
        // alpha_i : H^i(B) -> HH^i, b -> (b, 0)
        std::vector<int> im_alpha, ker_alpha;
        for (int c = 0; c < HB[i].order(); ++c) {
            int img = hh_index(i, HB[i].reps[c], zero_cochain(ctx.q(), i + 1));
            im_alpha.push_back(img);
            if (img == 0) ker_alpha.push_back(c);
        }
        // beta_i : HH^i -> H^(i+1)(A), (b, a) -> a
        std::vector<int> im_beta, ker_beta;
        for (int c = 0; c < HH[i].order(); ++c) {
            const Cochain& a = HH[i].reps[c].second;
            if (i + 1 <= 2) {
                int img = ha_index(i + 1, a);
                if (img < 0) fail(Errc::Internal, "beta image not a class");
                im_beta.push_back(img);
                if (img == 0) ker_beta.push_back(c);
            } else {
                if (is_coboundary(cx.A, a, lim)) ker_beta.push_back(c);
            }
        }
        check("exactness at HH^" + std::to_string(i), im_alpha, ker_beta);

        if (i + 1 <= 2 && rep.pass) {
            // delta : H^(i+1)(A) -> H^(i+1)(B), a -> rho a
            std::vector<int> im_delta, ker_delta;
            for (int c = 0; c < HA[i + 1].order(); ++c) {
                int img = hb_index(i + 1, rho_push(HA[i + 1].reps[c]));
                if (img < 0) fail(Errc::Internal, "delta image not a class");
                im_delta.push_back(img);
                if (img == 0) ker_delta.push_back(c);
            }
            check("exactness at H^" + std::to_string(i + 1) + "(A)", im_beta, ker_delta);

            // next alpha's kernel
            std::vector<int> ker_alpha_next;
            for (int c = 0; c < HB[i + 1].order(); ++c)
                if (hh_index(i + 1, HB[i + 1].reps[c], zero_cochain(ctx.q(), i + 2)) == 0)
                    ker_alpha_next.push_back(c);
            check("exactness at H^" + std::to_string(i + 1) + "(B)", im_delta, ker_alpha_next);
        }
    }
    return rep;
}

QModule restrict_module(const QModule& mod, const SubgroupGroup& S) {
    std::vector<AutTable> act(S.group.n);
    for (int s = 0; s < S.group.n; ++s) act[s] = mod.action[S.to_parent[s]];
    return make_qmodule(std::make_shared<const FiniteGroup>(S.group), mod.M.M, std::move(act));
}

Cochain restrict_cochain(const QModule& mod, const SubgroupGroup& S, const Cochain& c) {
    const int qs = S.group.n;
    Cochain out = zero_cochain(qs, c.degree);
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        auto args = tuple_decode(qs, c.degree, idx);
        for (auto& a : args) a = S.to_parent[a];
        out.values[idx] = cochain_eval(c, mod.q(), args);
    }
    return out;
}

}  // namespace grpext
