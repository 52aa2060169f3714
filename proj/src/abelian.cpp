#include "grpext/abelian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace grpext {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

namespace {

// true if <x> meets the subgroup only at the identity
bool cyclic_meets_trivially(const FiniteGroup& M, int x, const std::vector<char>& in_sub) {
    int p = M.prod(x, 0);
    while (p != 0) {
        if (in_sub[p]) return false;
        p = M.prod(p, x);
    }
    return true;
}

bool find_basis(const FiniteGroup& M, std::vector<char>& in_sub, int covered, std::vector<int>& basis,
                const std::vector<int>& by_order) {
    if (covered == M.n) return true;
    for (int x : by_order) {
        if (in_sub[x] || !cyclic_meets_trivially(M, x, in_sub)) continue;
        // extend subgroup by x
        std::vector<int> added;
        std::vector<int> members;
        for (int m = 0; m < M.n; ++m)
            if (in_sub[m]) members.push_back(m);
        for (int m : members) {
            int p = M.prod(m, x);
            while (p != m) {
                if (!in_sub[p]) {
                    in_sub[p] = 1;
                    added.push_back(p);
                }
                p = M.prod(p, x);
            }
        }
        basis.push_back(x);
        if (find_basis(M, in_sub, covered + static_cast<int>(added.size()), basis, by_order)) return true;
        basis.pop_back();
        for (int p : added) in_sub[p] = 0;
    }
    return false;
}

}  // namespace

AbelianCoords abelian_coords(GroupPtr Mp) {
    const FiniteGroup& M = *Mp;
    if (!M.is_abelian()) fail(Errc::Validation, "module group is not abelian");

    AbelianCoords ac;
    ac.M = Mp;
    if (M.n > 1) {
        std::vector<int> by_order(M.n - 1);
        std::iota(by_order.begin(), by_order.end(), 1);
        std::stable_sort(by_order.begin(), by_order.end(),
                         [&](int a, int b) { return M.order_of(a) > M.order_of(b); });
        std::vector<char> in_sub(M.n, 0);
        in_sub[0] = 1;
        if (!find_basis(M, in_sub, 1, ac.basis, by_order))
            fail(Errc::Internal, "no cyclic decomposition found for abelian group");
    }
    for (int b : ac.basis) {
        ac.orders.push_back(M.order_of(b));
        ac.exponent = lcm_ll(ac.exponent, ac.orders.back());
    }

    // coords by mixed-radix enumeration
    const int r = ac.rank();
    ac.coords.assign(M.n, {});
    std::vector<int> tup(r, 0);
    for (;;) {
        int e = 0;
        for (int i = 0; i < r; ++i) {
            int p = 0;
            for (int k = 0; k < tup[i]; ++k) p = M.prod(p, ac.basis[i]);
            e = M.prod(e, p);
        }
        ac.coords[e] = tup;
        int i = r - 1;
        while (i >= 0 && tup[i] + 1 == ac.orders[i]) tup[i--] = 0;
        if (i < 0) break;
        ++tup[i];
    }
    return ac;
}

int AbelianCoords::from_coords(const std::vector<long long>& c) const {
    const FiniteGroup& M = *this->M;
    int e = 0;
    for (int i = 0; i < rank(); ++i) {
        long long k = ((c[i] % orders[i]) + orders[i]) % orders[i];
        int p = 0;
        for (long long j = 0; j < k; ++j) p = M.prod(p, basis[i]);
        e = M.prod(e, p);
    }
    return e;
}

// --- Howell engine ---

namespace {

long long mod_pos(long long x, long long L) { return ((x % L) + L) % L; }

// u*a + v*b = g
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return a;
    }
    long long u1, v1;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

// unit u mod L with u*a == gcd(a, L) (mod L); L is small, brute force
long long unit_scaling(long long a, long long L) {
    long long g = std::gcd(a, L);
    for (long long u = 1; u < L; ++u)
        if (std::gcd(u, L) == 1 && (u * a) % L == g) return u;
    return 1;  // a == g already (covers L == 1)
}

}  // namespace

HowellBasis::HowellBasis(long long L, int dim, int shadow)
    : L_(L), dim_(dim), shadow_(shadow), pivot_row_(dim + shadow, -1) {}

void HowellBasis::add(std::vector<long long> v) {
    std::deque<std::vector<long long>> work;
    for (auto& x : v) x = mod_pos(x, L_);
    work.push_back(std::move(v));
    while (!work.empty()) {
        std::vector<long long> w = std::move(work.front());
        work.pop_front();
        int p = 0;
        const int len = dim_ + shadow_;
        while (p < len && w[p] == 0) ++p;
        while (p < len) {
            int ri = pivot_row_[p];
            if (ri < 0) {
                long long u = unit_scaling(w[p], L_);
                for (auto& x : w) x = (x * u) % L_;
                long long lead = w[p];
                pivot_row_[p] = static_cast<int>(rows_.size());
                rows_.push_back(w);
                pivots_.push_back(p);
                if (lead != 0 && L_ / lead > 1) {
                    std::vector<long long> ann(len);
                    for (int i = 0; i < len; ++i) ann[i] = (w[i] * (L_ / lead)) % L_;
                    work.push_back(std::move(ann));
                }
                break;
            }
            std::vector<long long>& row = rows_[ri];
            long long g = row[p], b = w[p], u, t;
            long long d = ext_gcd(g, b, u, t);
            if (d != g) {
                std::vector<long long> nr(len), nw(len);
                // [[u, t], [-b/d, g/d]] has determinant 1, so the span is kept
                for (int i = 0; i < len; ++i) {
                    nr[i] = mod_pos(u * row[i] + t * w[i], L_);
                    nw[i] = mod_pos((g / d) * w[i] - (b / d) * row[i], L_);
                }
                row = std::move(nr);
                w = std::move(nw);
                if (L_ / d > 1) {
                    std::vector<long long> ann(len);
                    for (int i = 0; i < len; ++i) ann[i] = (row[i] * (L_ / d)) % L_;
                    work.push_back(std::move(ann));
                }
            } else {
                long long c = b / g;
                for (int i = 0; i < len; ++i) w[i] = mod_pos(w[i] - c * row[i], L_);
            }
            while (p < len && w[p] == 0) ++p;
        }
    }
}

std::vector<long long> HowellBasis::reduce(std::vector<long long> v) const {
    for (auto& x : v) x = mod_pos(x, L_);
    for (int p = 0; p < dim_; ++p) {
        int ri = pivot_row_[p];
        if (ri < 0 || v[p] == 0) continue;
        const std::vector<long long>& row = rows_[ri];
        long long c = v[p] / row[p];
        if (c == 0) continue;
        for (int i = p; i < dim_ + shadow_; ++i) v[i] = mod_pos(v[i] - c * row[i], L_);
    }
    return v;
}

bool HowellBasis::contains(const std::vector<long long>& v) const {
    auto r = reduce(v);
    for (int i = 0; i < dim_; ++i)
        if (r[i] != 0) return false;
    return true;
}

std::vector<std::vector<long long>> HowellBasis::zero_primary_shadows() const {
    std::vector<std::vector<long long>> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (pivots_[r] >= dim_)
            out.emplace_back(rows_[r].begin() + dim_, rows_[r].end());
    return out;
}

std::optional<std::vector<long long>> HowellBasis::solve(const std::vector<long long>& b) const {
    std::vector<long long> v(dim_ + shadow_, 0);
    for (int i = 0; i < dim_ && i < static_cast<int>(b.size()); ++i) v[i] = mod_pos(b[i], L_);
    auto r = reduce(std::move(v));
    for (int i = 0; i < dim_; ++i)
        if (r[i] != 0) return std::nullopt;
    std::vector<long long> x(shadow_);
    for (int i = 0; i < shadow_; ++i) x[i] = mod_pos(-r[dim_ + i], L_);
    return x;
}

std::optional<std::vector<long long>> solve_mod(const IntMatrix& A, const std::vector<long long>& b,
                                                long long L) {
    HowellBasis h(L, A.rows, A.cols);
    std::vector<long long> col(A.rows + A.cols);
    for (int j = 0; j < A.cols; ++j) {
        std::fill(col.begin(), col.end(), 0);
        for (int i = 0; i < A.rows; ++i) col[i] = A.at(i, j);
        col[A.rows + j] = 1;
        h.add(col);
    }
    return h.solve(b);
}

std::vector<std::vector<long long>> kernel_mod(const IntMatrix& A, long long L) {
    HowellBasis h(L, A.rows, A.cols);
    std::vector<long long> col(A.rows + A.cols);
    for (int j = 0; j < A.cols; ++j) {
        std::fill(col.begin(), col.end(), 0);
        for (int i = 0; i < A.rows; ++i) col[i] = A.at(i, j);
        col[A.rows + j] = 1;
        h.add(col);
    }
    // L * e_j is in the kernel of the variable space but maps to 0; the
    // shadow rows of the echelon cover everything else.
    return h.zero_primary_shadows();
}

}  // namespace grpext
