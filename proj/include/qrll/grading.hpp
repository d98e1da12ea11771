#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qrll {

// Degree in G = Z2 x Z2: first slot carries the coefficient-superalgebra parity,
// second slot the auxiliary matrix-leg parity.
struct gdegree {
    int coeff_par = 0;
    int matrix_par = 0;

    friend gdegree operator+(gdegree a, gdegree b) {
        return {(a.coeff_par + b.coeff_par) & 1, (a.matrix_par + b.matrix_par) & 1};
    }
    friend bool operator==(gdegree a, gdegree b) {
        return a.coeff_par == b.coeff_par && a.matrix_par == b.matrix_par;
    }
    friend bool operator<(gdegree a, gdegree b) {
        if (a.coeff_par != b.coeff_par) return a.coeff_par < b.coeff_par;
        return a.matrix_par < b.matrix_par;
    }
};

enum class braiding : uint8_t { standard, twisted, custom };

// Bicharacter on Z2 x Z2, valued in {+1, -1}.
// standard: (-1)^{(g1+g2)(h1+h2)}; twisted: (-1)^{g1 h1 + g2 h2}.
struct bicharacter {
    braiding kind = braiding::standard;
    std::function<int(gdegree, gdegree)> rule;

    static bicharacter standard() { return {braiding::standard, {}}; }
    static bicharacter twisted() { return {braiding::twisted, {}}; }
    static bicharacter custom(std::function<int(gdegree, gdegree)> fn) {
        return {braiding::custom, std::move(fn)};
    }

    int sign(gdegree x, gdegree y) const {
        switch (kind) {
            case braiding::standard:
                return ((x.coeff_par + x.matrix_par) & (y.coeff_par + y.matrix_par) & 1) ? -1 : 1;
            case braiding::twisted:
                return (((x.coeff_par & y.coeff_par) ^ (x.matrix_par & y.matrix_par)) & 1) ? -1 : 1;
            case braiding::custom:
                return rule(x, y);
        }
        return 1;
    }
};

inline int koszul_sign(gdegree x, gdegree y, const bicharacter &b) { return b.sign(x, y); }

// Sign of the braiding isomorphism tau^sigma on homogeneous factors of the given
// degrees; sigma[i] is the target slot (0-based) of the factor starting at slot i.
// Equals the product of b(d_i, d_j) over inverted pairs i < j, sigma[i] > sigma[j].
inline int perm_sign(std::span<const gdegree> degrees, std::span<const int> sigma,
                     const bicharacter &b) {
    size_t n = degrees.size();
    if (sigma.size() != n) throw std::invalid_argument("perm_sign: length mismatch");
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
            throw std::invalid_argument("perm_sign: not a permutation");
        seen[v] = true;
    }
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (sigma[i] > sigma[j]) sign *= b.sign(degrees[i], degrees[j]);
    return sign;
}

// The normalized 2-cocycle zeta(i,j) = (-1)^{ij} on Z2; self-inverse.
inline int cocycle_sign(int x_par, int y_par) { return (x_par & y_par & 1) ? -1 : 1; }

// Checks the normalized 2-cocycle condition on all Z2 triples.
inline bool cocycle_condition_holds() {
    for (int g = 0; g < 2; ++g) {
        if (cocycle_sign(g, 0) != 1 || cocycle_sign(0, g) != 1) return false;
        for (int g1 = 0; g1 < 2; ++g1)
            for (int g2 = 0; g2 < 2; ++g2) {
                int lhs = cocycle_sign(g1, g2) * cocycle_sign(g, (g1 + g2) & 1);
                int rhs = cocycle_sign(g, g1) * cocycle_sign((g + g1) & 1, g2);
                if (lhs != rhs) return false;
            }
    }
    return true;
}

}  // namespace qrll
