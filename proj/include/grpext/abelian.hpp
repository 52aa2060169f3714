#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grpext/group.hpp"

namespace grpext {

// Cyclic decomposition of a finite abelian group: basis elements b_i of
// orders d_i with M = <b_1> x ... x <b_r>. Coordinates of every element
// are precomputed.
struct AbelianCoords {
    GroupPtr M;
    std::vector<int> basis;
    std::vector<long long> orders;
    long long exponent = 1;  // lcm of the orders
    std::vector<std::vector<int>> coords;  // per element, length r

    int rank() const { return static_cast<int>(basis.size()); }
    int from_coords(const std::vector<long long>& c) const;
};

AbelianCoords abelian_coords(GroupPtr M);

// --- linear algebra over Z/L ---
//
// Generators are kept in an echelon form mod L (Howell-style): one row per
// pivot position, leading entries dividing L, and annihilator multiples
// folded back in so that span membership and coset reduction are exact.
class HowellBasis {
public:
    HowellBasis(long long L, int dim, int shadow = 0);

    void add(std::vector<long long> v);  // length dim + shadow

    // Canonical coset representative of v (length dim + shadow) reducing
    // only against rows whose pivot lies in the primary dim coordinates.
    std::vector<long long> reduce(std::vector<long long> v) const;
    bool contains(const std::vector<long long>& v) const;

    // Rows whose primary part is zero; their shadow parts generate all
    // shadow combinations mapping to zero (used for kernels).
    std::vector<std::vector<long long>> zero_primary_shadows() const;

    // Solve: if (b | 0) reduces to zero primary part, returns x with
    // A x = b where the added generators were columns (A_j | e_j).
    std::optional<std::vector<long long>> solve(const std::vector<long long>& b) const;

    long long modulus() const { return L_; }
    int primary_dim() const { return dim_; }

private:
    long long L_;
    int dim_;
    int shadow_;
    std::vector<int> pivot_row_;                 // per position, row index or -1
    std::vector<std::vector<long long>> rows_;   // echelon rows, full length
    std::vector<int> pivots_;                    // per row

    void insert(std::vector<long long> v);
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Solve A x = b (mod L); x taken in [0, L).
std::optional<std::vector<long long>> solve_mod(const IntMatrix& A, const std::vector<long long>& b,
                                                long long L);
// Generators of { x : A x = 0 (mod L) }.
std::vector<std::vector<long long>> kernel_mod(const IntMatrix& A, long long L);

long long lcm_ll(long long a, long long b);

}  // namespace grpext
