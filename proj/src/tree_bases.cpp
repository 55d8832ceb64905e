#include "steiner/tree_bases.hpp"

#include <stdexcept>

namespace steiner {

RatMat p_matrix(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("p_matrix: requires n >= 2");
    RatMat p(n - 1, n);
    for (const EdgeCut& cut : edge_cuts(t)) {
        for (int i = 0; i < n; ++i) p.at(cut.edge_index - 1, i) = cut.a_centered[i];
    }
    return p;
}

RatMat p_prime_matrix(const Tree& t) {
    int n = t.n();
    RatMat p = p_matrix(t);
    RatMat pp(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j) pp.at(i, j) = p.at(i, j);
    for (int j = 0; j < n; ++j) pp.at(n - 1, j) = 1;
    return pp;
}

RatMat p_prime_inverse(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("p_prime_inverse: requires n >= 2");
    RatMat x(n, n);
    for (int j = 1; j < n; ++j) {
        x.at(j - 1, j - 1) = -1;
        x.at(t.parent(j) - 1, j - 1) += 1;
    }
    Rat inv_n(1, n);
    inv_n.canonicalize();
    for (int i = 0; i < n; ++i) x.at(i, n - 1) = inv_n;
    return x;
}

RatMat zeta_matrix(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("zeta_matrix: requires n >= 2");
    RatMat z(n, n);
    for (int y = 1; y <= n; ++y) {
        // walk from y up to the root, marking ancestors-or-self
        int x = y;
        z.at(x - 1, y - 1) = 1;
        while (x != n) {
            x = t.parent(x);
            z.at(x - 1, y - 1) = 1;
        }
    }
    return z;
}

RatMat mobius_matrix(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("mobius_matrix: requires n >= 2");
    RatMat m = RatMat::identity(n);
    for (int y = 1; y < n; ++y) m.at(t.parent(y) - 1, y - 1) = -1;
    return m;
}

RatMat reflection_matrix(int n) {
    if (n < 1) throw std::invalid_argument("reflection_matrix: requires n >= 1");
    Rat two_over_n(2, n);
    two_over_n.canonicalize();
    RatMat a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = two_over_n;
        a.at(i, i) -= 1;
    }
    return a;
}

}  // namespace steiner
