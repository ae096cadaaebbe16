#pragma once

#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic {

// Brute-force ground truth for everything else in the library: set
// partitions of [n] = {1,...,n} are enumerated as restricted-growth
// strings and filtered by a restriction predicate.  Deliberately free of
// clever counting so it stays an independent oracle.

inline constexpr int oracle_ground_set_cap = 12;
inline constexpr int oracle_color_cap = 8;

enum class restriction_mode {
    distinct_within, // elements of each R_i pairwise in distinct blocks
    cross_distinct,  // no block mixes elements of R_i and R_j, i != j
    min_separated,   // min(R_i) never shares a block with the rest of R_i
};

// A restriction on partitions of [n]: disjoint subsets R_1,...,R_p of
// {1,...,n} plus the mode saying how each R_i constrains blocks.
struct restriction_spec {
    int n = 0;
    std::vector<std::vector<int>> blocks; // 1-based element labels
    restriction_mode mode = restriction_mode::distinct_within;
};

namespace detail {

// Pairwise conflicts: partitions are counted by assigning elements
// 0..n-1 to blocks in restricted-growth order, rejecting any block that
// already contains a conflicting element.  All three restriction modes
// and the independent-set condition reduce to such conflicts.
inline Integer count_partitions_with_conflicts(int n, const std::vector<std::vector<int>>& conflict,
                                               int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;

    std::vector<std::vector<int>> block_members(n);
    Integer total = 0;

    auto recurse = [&](auto&& self, int elem, int used) -> void {
        if (elem == n) {
            if (used == k) ++total;
            return;
        }
        if (used > k || used + (n - elem) < k) return;
        for (int b = 0; b < used; ++b) {
            bool ok = true;
            for (int other : block_members[b])
                for (int c : conflict[elem])
                    if (c == other) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            block_members[b].push_back(elem);
            self(self, elem + 1, used);
            block_members[b].pop_back();
        }
        block_members[used].push_back(elem);
        self(self, elem + 1, used + 1);
        block_members[used].pop_back();
    };
    recurse(recurse, 0, 0);
    return total;
}

inline void validate_spec(const restriction_spec& spec) {
    if (spec.n < 0) throw std::invalid_argument("restriction_spec: negative n");
    if (spec.n > oracle_ground_set_cap)
        throw cap_exceeded("partition oracle: n > " + std::to_string(oracle_ground_set_cap));
    std::vector<bool> seen(spec.n + 1, false);
    for (const auto& block : spec.blocks)
        for (int x : block) {
            if (x < 1 || x > spec.n)
                throw std::invalid_argument("restriction_spec: element out of [1..n]");
            if (seen[x]) throw std::invalid_argument("restriction_spec: blocks not disjoint");
            seen[x] = true;
        }
}

} // namespace detail

// Number of partitions of [n] into exactly k nonempty subsets obeying
// the restriction.  Exhaustive enumeration; exact.
inline Integer count_restricted_partitions(const restriction_spec& spec, int k) {
    detail::validate_spec(spec);
    std::vector<std::vector<int>> conflict(spec.n);
    auto add_conflict = [&](int a, int b) { // 1-based inputs
        conflict[a - 1].push_back(b - 1);
        conflict[b - 1].push_back(a - 1);
    };
    switch (spec.mode) {
        case restriction_mode::distinct_within:
            for (const auto& r : spec.blocks)
                for (std::size_t i = 0; i < r.size(); ++i)
                    for (std::size_t j = i + 1; j < r.size(); ++j) add_conflict(r[i], r[j]);
            break;
        case restriction_mode::cross_distinct:
            for (std::size_t a = 0; a < spec.blocks.size(); ++a)
                for (std::size_t b = a + 1; b < spec.blocks.size(); ++b)
                    for (int x : spec.blocks[a])
                        for (int y : spec.blocks[b]) add_conflict(x, y);
            break;
        case restriction_mode::min_separated:
            for (const auto& r : spec.blocks) {
                if (r.empty()) continue;
                int m = r[0];
                for (int x : r) m = std::min(m, x);
                for (int x : r)
                    if (x != m) add_conflict(m, x);
            }
            break;
    }
    return detail::count_partitions_with_conflicts(spec.n, conflict, k);
}

// Number of partitions of V(g) into exactly k independent sets = alpha_k(g).
inline Integer count_independent_partitions(const graph& g, int k) {
    if (g.order() > oracle_ground_set_cap)
        throw cap_exceeded("partition oracle: graph order > " +
                           std::to_string(oracle_ground_set_cap));
    std::vector<std::vector<int>> conflict(g.order());
    for (auto [u, v] : g.edges()) {
        conflict[u].push_back(v);
        conflict[v].push_back(u);
    }
    return detail::count_partitions_with_conflicts(g.order(), conflict, k);
}

// Number of proper colorings of g with colors {1..lambda}, counted by
// exhaustive backtracking over color assignments.
inline Integer count_proper_colorings(const graph& g, int lambda) {
    if (g.order() > oracle_ground_set_cap)
        throw cap_exceeded("partition oracle: graph order > " +
                           std::to_string(oracle_ground_set_cap));
    if (lambda > oracle_color_cap)
        throw cap_exceeded("partition oracle: lambda > " + std::to_string(oracle_color_cap));
    if (lambda < 0) throw std::invalid_argument("count_proper_colorings: negative lambda");
    int n = g.order();
    std::vector<std::vector<int>> earlier_neighbors(n);
    for (auto [u, v] : g.edges()) earlier_neighbors[v].push_back(u); // u < v by normalization
    std::vector<int> color(n, 0);
    Integer total = 0;
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (int c = 1; c <= lambda; ++c) {
            bool ok = true;
            for (int u : earlier_neighbors[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[v] = c;
                self(self, v + 1);
            }
        }
        color[v] = 0;
    };
    recurse(recurse, 0);
    return total;
}

} // namespace chromatic
