#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "chromatic/errors.hpp"

namespace chromatic {

// Simple undirected graph on vertices 0..n-1.  Edges are stored as a
// sorted, duplicate-free list of pairs (u, v) with u < v, so iteration
// order is deterministic.  Values are immutable after construction.
class graph {
public:
    using edge = std::pair<int, int>;

    graph() = default;

    graph(int n, std::vector<edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u == v) throw std::invalid_argument("graph: self-loop");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), edge{u, v});
    }

    bool operator==(const graph&) const = default;

private:
    int n_ = 0;
    std::vector<edge> edges_;
};

// O_n: n vertices, no edges.  n = 0 gives the graph with no vertices.
inline graph make_empty(int n) { return graph(n, {}); }

// K_n: complete graph.
inline graph make_complete(int n) {
    std::vector<graph::edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return graph(n, std::move(e));
}

// Star on n vertices: vertex 0 adjacent to 1..n-1.  The universal
// vertex plays the role of the distinguished minimum element when stars
// model min-separated partition restrictions.
inline graph make_star(int n) {
    std::vector<graph::edge> e;
    for (int v = 1; v < n; ++v) e.push_back({0, v});
    return graph(n, std::move(e));
}

// Complete multipartite graph K_{r_1,...,r_p}: vertices split into parts
// of the given sizes, adjacent iff they lie in different parts.
inline graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete multipartite: no parts");
    for (int r : parts)
        if (r < 1) throw std::invalid_argument("complete multipartite: part size < 1");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    std::vector<graph::edge> e;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) e.push_back({u, w});
    return graph(n, std::move(e));
}

// Disjoint union; the second operand's labels are shifted by g1.order().
inline graph disjoint_union(const graph& g1, const graph& g2) {
    int shift = g1.order();
    std::vector<graph::edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.push_back({u + shift, v + shift});
    return graph(g1.order() + g2.order(), std::move(e));
}

// Connected components, each relabeled to 0..k-1 preserving the relative
// order of the original labels.  Components are ordered by their smallest
// original vertex.
inline std::vector<graph> connected_components(const graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        stack.push_back(s);
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(ncomp);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
    std::vector<int> pos(n);
    for (int c = 0; c < ncomp; ++c)
        for (std::size_t i = 0; i < members[c].size(); ++i) pos[members[c][i]] = static_cast<int>(i);
    std::vector<std::vector<graph::edge>> comp_edges(ncomp);
    for (auto [u, v] : g.edges()) comp_edges[comp[u]].push_back({pos[u], pos[v]});
    std::vector<graph> out;
    out.reserve(ncomp);
    for (int c = 0; c < ncomp; ++c)
        out.emplace_back(static_cast<int>(members[c].size()), std::move(comp_edges[c]));
    return out;
}

} // namespace chromatic
