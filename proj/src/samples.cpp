#include "grpext/samples.hpp"

#include <numeric>

namespace grpext::samples {

FiniteGroup trivial() { return build_group({{0}}); }

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return build_group(t);
}

FiniteGroup klein_four() {
    return build_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

FiniteGroup dihedral(int n) {
    // 2n permutations of an n-gon; rotation r and reflection s
    std::vector<int> r(n), s(n);
    for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    if (n == 1) return cyclic(2);
    if (n == 2) return klein_four();
    return group_from_permutations(n, {r, s});
}

FiniteGroup quaternion8() {
    // 1, -1, i, -i, j, -j, k, -k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // base products on {1, i, j, k} = {0, 2, 4, 6} with sign
    auto base = [&](int a, int b, int& sign) -> int {
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int i = a / 2, j = b / 2;
        sign = sgn[i][j];
        return prod[i][j] * 2;
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sign;
            int p = base(a, b, sign);
            if (a & 1) sign = -sign;
            if (b & 1) sign = -sign;
            t[a][b] = sign == 1 ? p : neg(p);
        }
    return build_group(t);
}

FiniteGroup symmetric(int n) {
    if (n <= 1) return trivial();
    std::vector<int> swap01(n), cyc(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    swap01[0] = 1;
    swap01[1] = 0;
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return group_from_permutations(n, {swap01, cyc});
}

FiniteGroup alternating4() {
    return group_from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}});
}

FiniteGroup frobenius20() {
    std::vector<std::vector<int>> t(20, std::vector<int>(20));
    auto idx = [](int a, int b) { return (a - 1) * 5 + b; };
    for (int a = 1; a <= 4; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = 0; d < 5; ++d)
                    // (aX+b) o (cX+d) = acX + ad + b
                    t[idx(a, b)][idx(c, d)] = idx((a * c) % 5, (a * d + b) % 5);
    std::vector<std::string> labels(20);
    for (int a = 1; a <= 4; ++a)
        for (int b = 0; b < 5; ++b) labels[idx(a, b)] = std::to_string(a) + "X+" + std::to_string(b);
    return build_group(t, labels);
}

std::vector<int> frobenius20_half_subgroup(const FiniteGroup& f20) {
    std::vector<int> out;
    for (int x = 0; x < f20.n; ++x) {
        const std::string& l = f20.labels[x];
        if (l[0] == '1' || l[0] == '4') out.push_back(x);
    }
    return out;
}

}  // namespace grpext::samples
