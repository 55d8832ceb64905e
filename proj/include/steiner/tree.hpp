#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Labeled tree on vertices 1..n, rooted at vertex n. Edge e_j (j = 1..n-1)
// joins vertex j to parent(j), so edges are in canonical bijection with
// {1..n-1}. Immutable after construction.
class Tree {
public:
    // Builds and validates; throws std::invalid_argument on disconnected,
    // cyclic, or mislabeled input, naming the offending vertex/edge.
    explicit Tree(std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // parent(j) for j in 1..n-1; parent(n) is undefined (throws).
    int parent(int v) const;
    // edge-distance to the root n
    int depth(int v) const { check_vertex(v); return depth_[v]; }
    const std::vector<int>& children(int v) const { check_vertex(v); return children_[v]; }
    // vertices ordered root-first (every vertex appears after its parent)
    const std::vector<int>& preorder() const { return preorder_; }
    // |{v : j is an ancestor-or-self of v}|
    int subtree_size(int v) const { check_vertex(v); return subtree_size_[v]; }
    bool in_subtree(int ancestor, int v) const;

    std::string to_text() const;  // one "u v" line per edge

private:
    void check_vertex(int v) const;

    int n_ = 1;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> parent_;        // 1-based; parent_[n] = 0
    std::vector<int> depth_;         // 1-based
    std::vector<std::vector<int>> children_;
    std::vector<int> preorder_;
    std::vector<int> subtree_size_;
    std::vector<int> tin_, tout_;    // Euler intervals for subtree tests
};

// Per-edge bipartition of T - e_j. A is always the component containing the
// root n; B is the subtree at j.
struct EdgeCut {
    int edge_index = 0;          // j; the cut edge is {j, parent(j)}
    std::vector<int> side_a;     // root-side vertices, ascending
    std::vector<int> side_b;
    RatVec a_vec;                // 0/1 indicator of A, length n
    RatVec a_centered;           // a_vec - (|A|/n) * ones; sums to 0 exactly
};

Tree build_tree(const std::vector<std::pair<int, int>>& edges);

// Uniform random labeled tree via Prufer decode; deterministic given seed.
Tree random_tree(int n, uint64_t seed);

// Built-in shapes used by invariance sweeps. All are rooted at n by the
// global convention; labels are chosen so the shape is what the name says.
Tree path_tree(int n);
Tree star_tree(int n);         // center n
Tree caterpillar_tree(int n);  // spine of ceil(n/2) vertices, legs alternating
Tree broom_tree(int n);        // path of floor(n/2) with a star at the far end

// Steiner distance of the multiset: edge count of the minimal subtree
// spanning its support. Computed as the number of edge cuts separating the
// support. Throws on empty input or out-of-range vertices.
int steiner_distance(const Tree& t, const std::vector<int>& vertices);

// One EdgeCut per j = 1..n-1. Requires n >= 2.
std::vector<EdgeCut> edge_cuts(const Tree& t);

// Text formats: one edge per line "u v", blank lines ignored, n inferred.
Tree parse_tree_text(std::istream& in);
Tree parse_tree_text(const std::string& text);
// Prufer input: single line of n-2 integers (empty means n = 2).
Tree parse_prufer(const std::string& line);
Tree prufer_decode(const std::vector<int>& seq);

}  // namespace steiner
