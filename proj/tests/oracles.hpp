#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's computation paths.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "steiner/matrix.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner::oracle {

// Steiner distance by exhaustive enumeration of vertex subsets: the minimal
// connected superset W of the support induces a subtree with |W| - 1 edges.
// Exponential; intended for n <= 10.
inline int brute_force_steiner(const Tree& t, const std::vector<int>& verts) {
    int n = t.n();
    unsigned support = 0;
    for (int v : verts) support |= 1u << (v - 1);
    if (support == 0) throw std::invalid_argument("empty support");

    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : t.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int best = n;  // any spanning subtree has <= n-1 edges
    for (unsigned w = 0; w < (1u << n); ++w) {
        if ((w & support) != support) continue;
        // connectivity of the induced subgraph
        int start = -1, size = 0;
        for (int v = 1; v <= n; ++v)
            if (w & (1u << (v - 1))) {
                if (start < 0) start = v;
                size++;
            }
        std::vector<int> stack{start};
        unsigned seen = 1u << (start - 1);
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                unsigned bit = 1u << (u - 1);
                if ((w & bit) && !(seen & bit)) {
                    seen |= bit;
                    reached++;
                    stack.push_back(u);
                }
            }
        }
        if (reached == size) best = std::min(best, size - 1);
    }
    return best;
}

// Pairwise tree distance through a naive parent-climbing LCA.
inline int lca_pair_distance(const Tree& t, int u, int v) {
    int a = u, b = v;
    while (a != b) {
        if (t.depth(a) >= t.depth(b)) a = (a == t.n()) ? a : t.parent(a);
        if (t.depth(b) > t.depth(a)) b = (b == t.n()) ? b : t.parent(b);
        if (a == b) break;
        if (t.depth(a) == t.depth(b) && a != b) {
            a = t.parent(a);
            b = t.parent(b);
        }
    }
    return t.depth(u) + t.depth(v) - 2 * t.depth(a);
}

// Determinant by Laplace expansion; O(n!) but independent of Bareiss.
inline Rat laplace_det(const RatMat& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat sum = 0;
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        RatMat sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        Rat term = m.at(0, c) * laplace_det(sub);
        if (c % 2) sum -= term; else sum += term;
    }
    return sum;
}

}  // namespace steiner::oracle
