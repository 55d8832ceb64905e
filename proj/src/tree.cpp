#include "steiner/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace steiner {

namespace {

[[noreturn]] void bad_input(const std::string& msg) {
    throw std::invalid_argument("invalid tree: " + msg);
}

}  // namespace

Tree::Tree(std::vector<std::pair<int, int>> edges) : edges_(std::move(edges)) {
    int maxv = 1;
    for (const auto& [u, v] : edges_) {
        if (u < 1 || v < 1) {
            bad_input("vertex label " + std::to_string(std::min(u, v)) +
                      " out of range (labels are 1-based)");
        }
        maxv = std::max({maxv, u, v});
    }
    n_ = edges_.empty() ? 1 : maxv;

    std::vector<std::pair<int, int>> sorted_edges;
    sorted_edges.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        if (u == v) bad_input("self-loop at vertex " + std::to_string(u));
        sorted_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(sorted_edges.begin(), sorted_edges.end());
    auto dup = std::adjacent_find(sorted_edges.begin(), sorted_edges.end());
    if (dup != sorted_edges.end()) {
        bad_input("duplicate edge {" + std::to_string(dup->first) + "," +
                  std::to_string(dup->second) + "} (would form a cycle)");
    }
    if (static_cast<int>(edges_.size()) != n_ - 1) {
        bad_input("expected " + std::to_string(n_ - 1) + " edges for n=" +
                  std::to_string(n_) + ", got " + std::to_string(edges_.size()));
    }

    std::vector<std::vector<int>> adj(n_ + 1);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    parent_.assign(n_ + 1, 0);
    depth_.assign(n_ + 1, -1);
    children_.assign(n_ + 1, {});
    preorder_.clear();
    preorder_.reserve(n_);

    // BFS from the root n; with exactly n-1 edges, revisiting a vertex means
    // a cycle, and an unvisited vertex means a disconnected component.
    std::vector<int> queue{n_};
    depth_[n_] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        preorder_.push_back(v);
        for (int w : adj[v]) {
            if (w == parent_[v] && depth_[w] == depth_[v] - 1) continue;
            if (depth_[w] >= 0) {
                bad_input("cycle through edge {" + std::to_string(v) + "," +
                          std::to_string(w) + "}");
            }
            depth_[w] = depth_[v] + 1;
            parent_[w] = v;
            children_[v].push_back(w);
            queue.push_back(w);
        }
    }
    for (int v = 1; v <= n_; ++v) {
        if (depth_[v] < 0) {
            bad_input("vertex " + std::to_string(v) + " not connected to vertex " +
                      std::to_string(n_));
        }
    }

    subtree_size_.assign(n_ + 1, 1);
    tin_.assign(n_ + 1, 0);
    tout_.assign(n_ + 1, 0);
    for (size_t i = 0; i < preorder_.size(); ++i) tin_[preorder_[i]] = static_cast<int>(i);
    // children appear after parents in preorder, so accumulate in reverse
    for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
        int v = *it;
        tout_[v] = tin_[v];
        for (int c : children_[v]) {
            subtree_size_[v] += subtree_size_[c];
            tout_[v] = std::max(tout_[v], tout_[c]);
        }
    }
}

void Tree::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." +
                                std::to_string(n_));
    }
}

int Tree::parent(int v) const {
    check_vertex(v);
    if (v == n_) throw std::out_of_range("root has no parent");
    return parent_[v];
}

bool Tree::in_subtree(int ancestor, int v) const {
    check_vertex(ancestor);
    check_vertex(v);
    return tin_[ancestor] <= tin_[v] && tin_[v] <= tout_[ancestor];
}

std::string Tree::to_text() const {
    std::ostringstream os;
    for (const auto& [u, v] : edges_) os << u << " " << v << "\n";
    return os.str();
}

Tree build_tree(const std::vector<std::pair<int, int>>& edges) { return Tree(edges); }

Tree prufer_decode(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    for (int s : seq) {
        if (s < 1 || s > n) {
            throw std::invalid_argument("prufer symbol " + std::to_string(s) +
                                        " out of range 1.." + std::to_string(n));
        }
    }
    std::vector<int> degree(n + 1, 1);
    for (int s : seq) degree[s]++;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // classic decode: repeatedly join the smallest leaf to the next symbol
    int ptr = 1;
    while (degree[ptr] != 1) ptr++;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ptr++;
            while (degree[ptr] != 1) ptr++;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n);
    return Tree(edges);
}

Tree random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Tree({});
    if (n == 2) return Tree({{1, 2}});
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(gen);
    return prufer_decode(seq);
}

Tree path_tree(int n) {
    if (n < 1) throw std::invalid_argument("path_tree: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Tree(edges);
}

Tree star_tree(int n) {
    if (n < 1) throw std::invalid_argument("star_tree: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, n);
    return Tree(edges);
}

Tree caterpillar_tree(int n) {
    if (n < 1) throw std::invalid_argument("caterpillar_tree: n must be >= 1");
    // spine s_1..s_m labeled n-m+1..n, legs attached round-robin
    int m = (n + 1) / 2;
    int first_spine = n - m + 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = first_spine; v < n; ++v) edges.emplace_back(v, v + 1);
    for (int leg = 1; leg <= n - m; ++leg) {
        edges.emplace_back(leg, first_spine + (leg - 1) % m);
    }
    return Tree(edges);
}

Tree broom_tree(int n) {
    if (n < 1) throw std::invalid_argument("broom_tree: n must be >= 1");
    // handle n, n-1, ..., n-h+1, bristles 1..n-h on the far handle end
    int h = std::max(1, n / 2);
    std::vector<std::pair<int, int>> edges;
    for (int v = n - h + 1; v < n; ++v) edges.emplace_back(v, v + 1);
    for (int b = 1; b <= n - h; ++b) edges.emplace_back(b, n - h + 1);
    return Tree(edges);
}

int steiner_distance(const Tree& t, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("steiner_distance: empty multiset");
    int n = t.n();
    std::vector<char> in_support(n + 1, 0);
    int support = 0;
    for (int v : vertices) {
        if (v < 1 || v > n) {
            throw std::out_of_range("steiner_distance: vertex " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
        }
        if (!in_support[v]) {
            in_support[v] = 1;
            support++;
        }
    }
    // count[j] = distinct support vertices in the subtree at j; the edge
    // {j, parent(j)} lies in the Steiner tree iff the cut separates the
    // support, i.e. 0 < count[j] < support.
    std::vector<int> count(n + 1, 0);
    const auto& order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        count[v] = in_support[v] ? 1 : 0;
        for (int c : t.children(v)) count[v] += count[c];
    }
    int dist = 0;
    for (int j = 1; j < n; ++j) {
        if (count[j] > 0 && count[j] < support) dist++;
    }
    return dist;
}

std::vector<EdgeCut> edge_cuts(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("edge_cuts: requires n >= 2");
    std::vector<EdgeCut> cuts(n - 1);
    for (int j = 1; j < n; ++j) {
        EdgeCut& cut = cuts[j - 1];
        cut.edge_index = j;
        cut.a_vec = zero_vec(n);
        for (int v = 1; v <= n; ++v) {
            if (t.in_subtree(j, v)) {
                cut.side_b.push_back(v);
            } else {
                cut.side_a.push_back(v);
                cut.a_vec[v - 1] = 1;
            }
        }
        Rat share(static_cast<long>(cut.side_a.size()), static_cast<long>(n));
        share.canonicalize();
        cut.a_centered.resize(n);
        for (int i = 0; i < n; ++i) cut.a_centered[i] = cut.a_vec[i] - share;
    }
    return cuts;
}

Tree parse_tree_text(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) {
            throw std::invalid_argument("tree file line " + std::to_string(lineno) +
                                        ": expected 'u v'");
        }
        std::string rest;
        if (ls >> rest) {
            throw std::invalid_argument("tree file line " + std::to_string(lineno) +
                                        ": trailing token '" + rest + "'");
        }
        edges.emplace_back(u, v);
    }
    return Tree(edges);
}

Tree parse_tree_text(const std::string& text) {
    std::istringstream is(text);
    return parse_tree_text(is);
}

Tree parse_prufer(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> seq;
    int s;
    while (is >> s) seq.push_back(s);
    return prufer_decode(seq);
}

}  // namespace steiner
