#pragma once

#include "chromatic/graph.hpp"
#include "chromatic/polynomial.hpp"

namespace chromatic {

inline constexpr int default_vertex_cap = 15;

namespace detail {

inline graph delete_edge(const graph& g, graph::edge e) {
    std::vector<graph::edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (auto d : g.edges())
        if (d != e) edges.push_back(d);
    return graph(g.order(), std::move(edges));
}

// Contract e = (u, v), u < v: v is merged into u, labels above v shift
// down by one, parallel edges collapse via graph normalization.
inline graph contract_edge(const graph& g, graph::edge e) {
    auto [u, v] = e;
    auto relabel = [&](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    std::vector<graph::edge> edges;
    for (auto [a, b] : g.edges()) {
        int x = relabel(a), y = relabel(b);
        if (x != y) edges.push_back({x, y});
    }
    return graph(g.order() - 1, std::move(edges));
}

inline int_poly chromatic_poly_impl(const graph& g);

// g is connected here.  Edgeless, complete and tree components have
// closed forms; everything else falls back to deletion-contraction on
// the first edge in sorted order.
inline int_poly connected_chromatic_poly(const graph& g) {
    int n = g.order();
    std::size_t m = g.edge_count();
    if (m == 0) return int_poly::monomial(n); // single vertex (or empty)
    if (m == static_cast<std::size_t>(n) * (n - 1) / 2) return falling_factorial_poly(n);
    if (m == static_cast<std::size_t>(n) - 1) {
        // connected with n-1 edges: a tree, P = x(x-1)^{n-1}
        int_poly edge_factor{Integer(-1), Integer(1)};
        return int_poly::monomial(1) * edge_factor.pow(n - 1);
    }
    graph::edge e = g.edges().front();
    return chromatic_poly_impl(delete_edge(g, e)) - chromatic_poly_impl(contract_edge(g, e));
}

inline int_poly chromatic_poly_impl(const graph& g) {
    int_poly r = int_poly::constant(1);
    for (const graph& comp : connected_components(g)) r *= connected_chromatic_poly(comp);
    return r;
}

} // namespace detail

// Exact chromatic polynomial P(g, x).  The vertex cap keeps the
// exponential deletion-contraction recursion at desk scale.
inline int_poly chromatic_poly(const graph& g, int vertex_cap = default_vertex_cap) {
    if (g.order() > vertex_cap)
        throw cap_exceeded("chromatic_poly: " + std::to_string(g.order()) + " vertices exceeds cap " +
                           std::to_string(vertex_cap));
    return detail::chromatic_poly_impl(g);
}

// alpha_k(g): number of partitions of V(g) into k independent sets,
// read off as the falling-factorial coefficients of P(g, x).
inline falling_factorial_form alpha_coeffs(const graph& g, int vertex_cap = default_vertex_cap) {
    return to_falling_factorial(chromatic_poly(g, vertex_cap));
}

// Smallest k with alpha_k > 0; 0 for the graph with no vertices.
inline int chromatic_number(const graph& g, int vertex_cap = default_vertex_cap) {
    if (g.order() == 0) return 0;
    falling_factorial_form alpha = alpha_coeffs(g, vertex_cap);
    for (int k = 0; k <= alpha.max_index(); ++k)
        if (alpha.coeff(k) != 0) return k;
    return 0; // unreachable: alpha_n = 1 for n >= 1
}

// Finite-difference route to alpha_k(g):
//   alpha_k(g) = (1/k!) * sum_{j=0}^{k} (-1)^{k-j} C(k,j) P(g, j).
// The division by k! is exact; a remainder would be a bug.
inline Integer alpha_via_finite_difference(const graph& g, int k,
                                           int vertex_cap = default_vertex_cap) {
    if (k < 0) return 0;
    int_poly p = chromatic_poly(g, vertex_cap);
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
        Integer term = binomial(k, j) * p(Integer(j));
        if ((k - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return exact_div(sum, factorial(k));
}

struct chromatic_result {
    int_poly poly;
    falling_factorial_form alpha;
    int chromatic_number = 0;
};

inline chromatic_result analyze(const graph& g, int vertex_cap = default_vertex_cap) {
    chromatic_result r;
    r.poly = chromatic_poly(g, vertex_cap);
    r.alpha = to_falling_factorial(r.poly);
    if (g.order() > 0) {
        for (int k = 0; k <= r.alpha.max_index(); ++k)
            if (r.alpha.coeff(k) != 0) {
                r.chromatic_number = k;
                break;
            }
    }
    return r;
}

} // namespace chromatic
