#include "grpext/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace grpext {

int FiniteGroup::order_of(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = prod(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (prod(a, b) != prod(b, a)) return false;
    return true;
}

std::string FiniteGroup::label(int a) const {
    if (!labels.empty()) return labels[a];
    return std::to_string(a);
}

BuiltGroup build_group_relabeled(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(Errc::Parse, "empty multiplication table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            fail(Errc::Parse, "table row " + std::to_string(i) + " is not of length " + std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                fail(Errc::Parse, "table entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }

    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e < 0) fail(Errc::NoIdentity, "no two-sided identity element");

    // Relabel so the identity is 0, preserving the relative input order.
    std::vector<int> old_to_new(n), new_to_old(n);
    {
        int next = 1;
        for (int i = 0; i < n; ++i) old_to_new[i] = (i == e) ? 0 : next++;
        for (int i = 0; i < n; ++i) new_to_old[old_to_new[i]] = i;
    }

    FiniteGroup G;
    G.n = n;
    G.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            G.mul[static_cast<std::size_t>(a) * n + b] = old_to_new[table[new_to_old[a]][new_to_old[b]]];
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n) fail(Errc::Parse, "label count does not match order");
        G.labels.resize(n);
        for (int i = 0; i < n; ++i) G.labels[old_to_new[i]] = labels[i];
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.prod(G.prod(a, b), c) != G.prod(a, G.prod(b, c)))
                    fail(Errc::NotAssociative,
                         "associativity fails at triple (" + std::to_string(new_to_old[a]) + "," +
                             std::to_string(new_to_old[b]) + "," + std::to_string(new_to_old[c]) + ")");

    G.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (G.prod(a, b) == 0 && G.prod(b, a) == 0) {
                G.inv[a] = b;
                break;
            }
        if (G.inv[a] < 0)
            fail(Errc::NoInverse, "element " + std::to_string(new_to_old[a]) + " has no two-sided inverse");
    }
    return {std::move(G), std::move(old_to_new)};
}

FiniteGroup build_group(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
    return build_group_relabeled(table, std::move(labels)).group;
}

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    const Limits& lim) {
    if (degree <= 0) fail(Errc::Parse, "permutation degree must be positive");
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) fail(Errc::Parse, "generator length does not match degree");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v]) fail(Errc::Parse, "generator is not a permutation");
            seen[v] = 1;
        }
    }

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators) {
            std::vector<int> p(degree);
            for (int x = 0; x < degree; ++x) p[x] = g[elems[i][x]];
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(p));
                if (elems.size() > lim.max_group_order)
                    fail(Errc::SizeLimitExceeded, "permutation group exceeds max order");
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> p(degree);
            for (int x = 0; x < degree; ++x) p[x] = elems[b][elems[a][x]];
            table[a][b] = index.at(p);
        }
    return build_group(table);
}

bool is_hom(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != src.n) return false;
    for (int v : image)
        if (v < 0 || v >= dst.n) return false;
    if (image[0] != 0) return false;
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (image[src.prod(a, b)] != dst.prod(image[a], image[b])) return false;
    return true;
}

void validate_hom(const GroupMap& m) {
    if (!is_hom(*m.source, *m.target, m.image))
        fail(Errc::NotHomomorphism, "map does not respect products");
}

AutTable aut_identity(int n) {
    AutTable t(n);
    std::iota(t.begin(), t.end(), 0);
    return t;
}

AutTable aut_compose(const AutTable& a, const AutTable& b) {
    AutTable t(a.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = a[b[x]];
    return t;
}

AutTable aut_invert(const AutTable& a) {
    AutTable t(a.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[a[x]] = static_cast<int>(x);
    return t;
}

AutTable inner_aut(const FiniteGroup& G, int x) {
    AutTable t(G.n);
    for (int y = 0; y < G.n; ++y) t[y] = G.conj(y, x);
    return t;
}

bool is_automorphism(const FiniteGroup& G, const AutTable& t) {
    if (static_cast<int>(t.size()) != G.n) return false;
    std::vector<char> seen(G.n, 0);
    for (int v : t) {
        if (v < 0 || v >= G.n || seen[v]) return false;
        seen[v] = 1;
    }
    return is_hom(G, G, t);
}

std::vector<int> closure(const FiniteGroup& G, std::vector<int> seed) {
    std::vector<char> in(G.n, 0);
    std::vector<int> out;
    in[0] = 1;
    out.push_back(0);
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            out.push_back(s);
        }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) {
            int p = G.prod(out[i], out[j]);
            if (!in[p]) {
                in[p] = 1;
                out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> sub = closure(G, {});
    while (static_cast<int>(sub.size()) < G.n) {
        int pick = -1;
        for (int x = 0; x < G.n; ++x)
            if (!std::binary_search(sub.begin(), sub.end(), x)) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        sub = closure(G, gens);
    }
    return gens;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<char> in(G.n, 0);
    for (int e : elems) {
        if (e < 0 || e >= G.n) return false;
        in[e] = 1;
    }
    if (!in[0]) return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[G.prod(a, b)]) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<char> in(G.n, 0);
    for (int e : elems) in[e] = 1;
    for (int x = 0; x < G.n; ++x)
        for (int a : elems)
            if (!in[G.conj(a, x)]) return false;
    return true;
}

SubgroupGroup subgroup_group(const FiniteGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subgroup(G, elems)) fail(Errc::Validation, "element set is not a subgroup");
    SubgroupGroup out;
    out.to_parent = elems;
    out.from_parent.assign(G.n, -1);
    const int m = static_cast<int>(elems.size());
    for (int i = 0; i < m; ++i) out.from_parent[elems[i]] = i;
    out.group.n = m;
    out.group.mul.resize(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            out.group.mul[static_cast<std::size_t>(a) * m + b] = out.from_parent[G.prod(elems[a], elems[b])];
    out.group.inv.resize(m);
    for (int a = 0; a < m; ++a) out.group.inv[a] = out.from_parent[G.inv[elems[a]]];
    if (!G.labels.empty()) {
        out.group.labels.resize(m);
        for (int a = 0; a < m; ++a) out.group.labels[a] = G.labels[elems[a]];
    }
    return out;
}

Quotient quotient(const FiniteGroup& G, const std::vector<int>& N) {
    if (!is_subgroup(G, N)) fail(Errc::Validation, "N is not a subgroup");
    if (!is_normal(G, N)) fail(Errc::NotNormal, "N is not normal in G");
    std::vector<int> coset_of(G.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < G.n; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);  // x is the least member: smaller ones are already assigned
        for (int h : N) coset_of[G.prod(x, h)] = c;
    }
    const int m = static_cast<int>(reps.size());
    Quotient q;
    q.proj = coset_of;
    q.coset_rep = reps;
    q.group.n = m;
    q.group.mul.resize(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            q.group.mul[static_cast<std::size_t>(a) * m + b] = coset_of[G.prod(reps[a], reps[b])];
    q.group.inv.resize(m);
    for (int a = 0; a < m; ++a) q.group.inv[a] = coset_of[G.inv[reps[a]]];
    return q;
}

std::vector<int> center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int a = 0; a < G.n; ++a) {
        bool c = true;
        for (int b = 0; b < G.n && c; ++b) c = G.prod(a, b) == G.prod(b, a);
        if (c) z.push_back(a);
    }
    return z;
}

std::vector<int> involutions(const FiniteGroup& G) {
    std::vector<int> out;
    for (int a = 1; a < G.n; ++a)
        if (G.prod(a, a) == 0) out.push_back(a);
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    std::vector<char> seen(G.n, 0);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < G.n; ++a) {
        if (seen[a]) continue;
        std::set<int> cls;
        for (int x = 0; x < G.n; ++x) cls.insert(G.conj(a, x));
        std::vector<int> v(cls.begin(), cls.end());
        for (int e : v) seen[e] = 1;
        classes.push_back(std::move(v));
    }
    return classes;
}

std::vector<int> derived_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            comms.push_back(G.prod(G.prod(a, b), G.inv[G.prod(b, a)]));
    return closure(G, comms);
}

std::vector<int> socle(const FiniteGroup& G) {
    // Minimal normal subgroups are normal closures of single elements.
    std::vector<std::vector<int>> ncl;
    for (int x = 1; x < G.n; ++x) {
        std::vector<int> orbit;
        for (int g = 0; g < G.n; ++g) orbit.push_back(G.conj(x, g));
        ncl.push_back(closure(G, orbit));
    }
    std::sort(ncl.begin(), ncl.end());
    ncl.erase(std::unique(ncl.begin(), ncl.end()), ncl.end());
    std::vector<int> gens;
    for (const auto& a : ncl) {
        bool minimal = true;
        for (const auto& b : ncl)
            if (b.size() > 1 && b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end())) {
                minimal = false;
                break;
            }
        if (minimal)
            for (int e : a) gens.push_back(e);
    }
    return closure(G, gens);
}

std::optional<std::vector<int>> characteristic_subgroup(const FiniteGroup& G) {
    auto proper = [&](const std::vector<int>& s) {
        return s.size() > 1 && static_cast<int>(s.size()) < G.n;
    };
    if (auto z = center(G); proper(z)) return z;
    if (auto d = derived_subgroup(G); proper(d)) return d;
    if (auto s = socle(G); proper(s)) return s;
    return std::nullopt;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int n = A.n * B.n;
    FiniteGroup G;
    G.n = n;
    G.mul.resize(static_cast<std::size_t>(n) * n);
    auto idx = [&](int a, int b) { return a * B.n + b; };
    for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1)
            for (int a2 = 0; a2 < A.n; ++a2)
                for (int b2 = 0; b2 < B.n; ++b2)
                    G.mul[static_cast<std::size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
                        idx(A.prod(a1, a2), B.prod(b1, b2));
    G.inv.resize(n);
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < B.n; ++b) G.inv[idx(a, b)] = idx(A.inv[a], B.inv[b]);
    return G;
}

FiniteGroup semidirect_product(const FiniteGroup& G, const FiniteGroup& Q,
                               const std::vector<AutTable>& action) {
    if (static_cast<int>(action.size()) != Q.n) fail(Errc::Validation, "action size mismatch");
    for (const auto& t : action)
        if (!is_automorphism(G, t)) fail(Errc::Validation, "action value is not an automorphism");
    for (int s = 0; s < Q.n; ++s)
        for (int t = 0; t < Q.n; ++t)
            if (aut_compose(action[s], action[t]) != action[Q.prod(s, t)])
                fail(Errc::NotHomomorphism, "action is not a homomorphism Q -> Aut(G)");
    const int n = G.n * Q.n;
    FiniteGroup E;
    E.n = n;
    E.mul.resize(static_cast<std::size_t>(n) * n);
    auto idx = [&](int g, int s) { return g * Q.n + s; };
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < Q.n; ++s)
            for (int h = 0; h < G.n; ++h)
                for (int t = 0; t < Q.n; ++t)
                    E.mul[static_cast<std::size_t>(idx(g, s)) * n + idx(h, t)] =
                        idx(G.prod(g, action[s][h]), Q.prod(s, t));
    E.inv.resize(n);
    for (int g = 0; g < G.n; ++g)
        for (int s = 0; s < Q.n; ++s) {
            int si = Q.inv[s];
            E.inv[idx(g, s)] = idx(action[si][G.inv[g]], si);
        }
    return E;
}

namespace {

// Backtracking over generator images; propagates the partial map through
// the subgroup generated by the assigned generators and prunes on conflict.
struct HomSearch {
    const FiniteGroup& G;
    const FiniteGroup& H;
    const std::vector<int>& gens;
    std::vector<std::vector<int>> candidates;  // per generator
    std::vector<int> phi;                      // partial map, -1 unknown
    std::vector<std::vector<AutTable>>* sink;  // unused when callback set
    std::size_t nodes = 0;
    std::size_t node_cap;

    HomSearch(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gs, std::size_t cap)
        : G(g), H(h), gens(gs), node_cap(cap) {}

    // Extends phi by closing under products of defined elements. Returns
    // false on conflict; records touched indices for rollback.
    bool propagate(std::vector<int>& touched) {
        std::vector<int> defined;
        for (int x = 0; x < G.n; ++x)
            if (phi[x] >= 0) defined.push_back(x);
        for (std::size_t i = 0; i < defined.size(); ++i)
            for (std::size_t j = 0; j < defined.size(); ++j) {
                int p = G.prod(defined[i], defined[j]);
                int v = H.prod(phi[defined[i]], phi[defined[j]]);
                if (phi[p] < 0) {
                    phi[p] = v;
                    touched.push_back(p);
                    defined.push_back(p);
                } else if (phi[p] != v) {
                    return false;
                }
            }
        return true;
    }

    template <typename Fn>
    bool search(std::size_t k, Fn&& accept) {
        if (k == gens.size()) {
            // fully determined since gens generate G
            for (int x = 0; x < G.n; ++x)
                if (phi[x] < 0) return false;
            for (int a = 0; a < G.n; ++a)
                for (int b = 0; b < G.n; ++b)
                    if (phi[G.prod(a, b)] != H.prod(phi[a], phi[b])) return false;
            return accept(phi);
        }
        for (int img : candidates[k]) {
            if (++nodes > node_cap) fail(Errc::SizeLimitExceeded, "homomorphism search exceeded node cap");
            std::vector<int> touched;
            bool ok = true;
            if (phi[gens[k]] >= 0)
                ok = phi[gens[k]] == img;
            else {
                phi[gens[k]] = img;
                touched.push_back(gens[k]);
                ok = propagate(touched);
            }
            if (ok && search(k + 1, accept)) return true;
            for (int t : touched) phi[t] = -1;
        }
        return false;
    }
};

}  // namespace

AutGroup automorphism_group(GroupPtr Gp, const Limits& lim) {
    const FiniteGroup& G = *Gp;
    auto gens = generating_set(G);

    std::vector<std::vector<int>> cands(gens.size());
    std::size_t space = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int ord = G.order_of(gens[k]);
        for (int x = 1; x < G.n; ++x)
            if (G.order_of(x) == ord) cands[k].push_back(x);
        space *= std::max<std::size_t>(cands[k].size(), 1);
        if (space > lim.max_search_nodes)
            fail(Errc::SizeLimitExceeded, "automorphism image-search space exceeds cap");
    }

    std::set<AutTable> found;
    if (gens.empty()) {
        found.insert(aut_identity(G.n));
    } else {
        HomSearch hs(G, G, gens, lim.max_search_nodes);
        hs.candidates = cands;
        hs.phi.assign(G.n, -1);
        hs.phi[0] = 0;
        hs.search(0, [&](const std::vector<int>& phi) {
            std::vector<char> seen(G.n, 0);
            bool bij = true;
            for (int v : phi) {
                if (seen[v]) {
                    bij = false;
                    break;
                }
                seen[v] = 1;
            }
            if (bij) found.insert(phi);
            return false;  // keep enumerating
        });
    }

    AutGroup A;
    A.G = Gp;
    A.autos.assign(found.begin(), found.end());  // set order = lex order; identity is lex-least
    std::map<AutTable, int> index;
    for (std::size_t i = 0; i < A.autos.size(); ++i) index[A.autos[i]] = static_cast<int>(i);

    A.inner_of.resize(G.n);
    A.is_inner.assign(A.autos.size(), 0);
    for (int x = 0; x < G.n; ++x) {
        auto it = index.find(inner_aut(G, x));
        if (it == index.end()) fail(Errc::Internal, "inner automorphism missing from Aut search");
        A.inner_of[x] = it->second;
        A.is_inner[it->second] = 1;
    }

    A.coset_rep.assign(A.autos.size(), -1);
    for (std::size_t i = 0; i < A.autos.size(); ++i) {
        if (A.coset_rep[i] >= 0) continue;
        int rep = static_cast<int>(i);  // lex order: first unassigned is the least of its coset
        for (int x = 0; x < G.n; ++x) {
            int j = index.at(aut_compose(A.autos[A.inner_of[x]], A.autos[i]));
            if (A.coset_rep[j] < 0) A.coset_rep[j] = rep;
        }
        A.outer_reps.push_back(rep);
    }
    return A;
}

int AutGroup::index_of(const AutTable& t) const {
    auto it = std::lower_bound(autos.begin(), autos.end(), t);
    if (it == autos.end() || *it != t) return -1;
    return static_cast<int>(it - autos.begin());
}

bool AutGroup::table_is_inner(const AutTable& t) const {
    int i = index_of(t);
    return i >= 0 && is_inner[i];
}

int AutGroup::coset_of_table(const AutTable& t) const {
    int i = index_of(t);
    if (i < 0) fail(Errc::Validation, "table is not an automorphism of G");
    return coset_rep[i];
}

bool AutGroup::same_coset(const AutTable& a, const AutTable& b) const {
    return table_is_inner(aut_compose(a, aut_invert(b)));
}

std::size_t AutGroup::inner_order() const {
    std::size_t c = 0;
    for (char f : is_inner) c += f;
    return c;
}

FiniteGroup AutGroup::as_group(const Limits& lim) const {
    const std::size_t m = autos.size();
    if (m * m > lim.max_table_cells) fail(Errc::SizeLimitExceeded, "Aut(G) table too large");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i][j] = index_of(aut_compose(autos[i], autos[j]));
    return build_group(table);
}

FiniteGroup AutGroup::outer_group(const Limits& lim) const {
    const std::size_t m = outer_reps.size();
    if (m * m > lim.max_table_cells) fail(Errc::SizeLimitExceeded, "Out(G) table too large");
    std::vector<int> pos(autos.size(), -1);
    for (std::size_t i = 0; i < m; ++i) pos[outer_reps[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = pos[coset_of_table(aut_compose(autos[outer_reps[i]], autos[outer_reps[j]]))];
    return build_group(table);
}

bool isomorphic_brute(const FiniteGroup& A, const FiniteGroup& B, const Limits& lim) {
    if (A.n != B.n) return false;
    auto gens = generating_set(A);
    if (gens.empty()) return true;
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int ord = A.order_of(gens[k]);
        for (int x = 1; x < B.n; ++x)
            if (B.order_of(x) == ord) cands[k].push_back(x);
        if (cands[k].empty()) return false;
    }
    HomSearch hs(A, B, gens, lim.max_search_nodes);
    hs.candidates = cands;
    hs.phi.assign(A.n, -1);
    hs.phi[0] = 0;
    return hs.search(0, [&](const std::vector<int>& phi) {
        std::vector<char> seen(B.n, 0);
        for (int v : phi) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    });
}

}  // namespace grpext
