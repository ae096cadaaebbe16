#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "chromatic/chromatic.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/numeric.hpp"
#include "chromatic/polynomial.hpp"

namespace chromatic {

// Two-index table T(n, k) for 0 <= k <= n <= n_max, together with the
// family name and parameter vector that generated it.  Immutable once
// built; entries outside 0 <= k <= n read as zero.
template <typename T>
class triangle_table {
public:
    triangle_table(std::string family, std::vector<int> r_vec, std::vector<std::vector<T>> rows)
        : family_(std::move(family)), r_vec_(std::move(r_vec)), rows_(std::move(rows)) {
        for (std::size_t n = 0; n < rows_.size(); ++n)
            if (rows_[n].size() != n + 1)
                throw std::invalid_argument("triangle_table: row " + std::to_string(n) +
                                            " must have " + std::to_string(n + 1) + " entries");
    }

    const std::string& family() const { return family_; }
    const std::vector<int>& r_vec() const { return r_vec_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    T at(int n, int k) const {
        if (n < 0) return T(0);
        if (n > n_max())
            throw std::out_of_range("triangle_table: row " + std::to_string(n) + " beyond n_max " +
                                    std::to_string(n_max()));
        if (k < 0 || k > n) return T(0);
        return rows_[n][k];
    }

    const std::vector<T>& row(int n) const { return rows_.at(n); }

    polynomial<T> row_polynomial(int n) const { return polynomial<T>(rows_.at(n)); }

    bool operator==(const triangle_table&) const = default;

private:
    std::string family_;
    std::vector<int> r_vec_;
    std::vector<std::vector<T>> rows_; // rows_[n] has n+1 entries
};

namespace detail {

inline std::vector<int> drop_zero_parts(const std::vector<int>& r) {
    std::vector<int> out;
    for (int x : r) {
        if (x < 0) throw std::invalid_argument("restriction sizes must be nonnegative");
        if (x > 0) out.push_back(x);
    }
    return out;
}

// Rows grown upward from a seed row by the triangular recurrence
// T(n, k) = T(n-1, k-1) + k T(n-1, k), shared by every family here.
inline std::vector<std::vector<Integer>> grow_by_classical_recurrence(
    std::vector<std::vector<Integer>> rows, int n_max) {
    for (int n = static_cast<int>(rows.size()); n <= n_max; ++n) {
        std::vector<Integer> row(n + 1);
        const auto& prev = rows[n - 1];
        for (int k = 0; k <= n; ++k) {
            Integer v = 0;
            if (k >= 1 && k - 1 <= n - 1) v += prev[k - 1];
            if (k <= n - 1) v += Integer(k) * prev[k];
            row[k] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Zero rows for n < base order, the alpha vector of `base` at its order,
// then the classical recurrence upward.  Realizes the graph/number
// duality: entry (n, k) counts restricted partitions whose restriction
// is encoded by `base` plus n - order(base) free elements.
inline triangle_table<Integer> alpha_seeded_table(std::string family, std::vector<int> r_key,
                                                  const graph& base, int n_max) {
    int n0 = base.order();
    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n < std::min(n0, n_max + 1); ++n)
        rows.emplace_back(n + 1, Integer(0));
    if (n_max >= n0) {
        falling_factorial_form alpha = alpha_coeffs(base, std::max(default_vertex_cap, n0));
        std::vector<Integer> row(n0 + 1);
        for (int k = 0; k <= n0; ++k) row[k] = alpha.coeff(k);
        rows.push_back(std::move(row));
        rows = grow_by_classical_recurrence(std::move(rows), n_max);
    }
    return triangle_table<Integer>(std::move(family), std::move(r_key), std::move(rows));
}

} // namespace detail

// Classical Stirling triangle {n brace k}, {n,k} = k{n-1,k} + {n-1,k-1}.
inline triangle_table<Integer> classical_table(int n_max) {
    std::vector<std::vector<Integer>> rows{{Integer(1)}};
    rows = detail::grow_by_classical_recurrence(std::move(rows), n_max);
    return triangle_table<Integer>("classical", {}, std::move(rows));
}

// Broder's r-Stirling triangle: {r brace r}_r = 1, zero for n < r or
// k < r, same triangular recurrence above row r.
inline triangle_table<Integer> r_stirling_table(int r, int n_max) {
    if (r < 0) throw std::invalid_argument("r_stirling_table: negative r");
    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n < std::min(r, n_max + 1); ++n) rows.emplace_back(n + 1, Integer(0));
    if (n_max >= r) {
        std::vector<Integer> base(r + 1, Integer(0));
        base[r] = 1;
        rows.push_back(std::move(base));
        rows = detail::grow_by_classical_recurrence(std::move(rows), n_max);
    }
    return triangle_table<Integer>("r", {r}, std::move(rows));
}

// (r_1,...,r_p)-Stirling: partitions of [n] with the elements of each
// R_i in pairwise distinct blocks.  Seeded by alpha of K_{r_1} u ... u K_{r_p}.
inline triangle_table<Integer> multi_r_table(const std::vector<int>& r, int n_max) {
    std::vector<int> parts = detail::drop_zero_parts(r);
    graph base;
    for (int ri : parts) base = disjoint_union(base, make_complete(ri));
    return detail::alpha_seeded_table("multi", r, base, n_max);
}

// K(r_1,...,r_p)-Stirling: partitions of [n] where no block mixes
// elements of two different R_i.  Seeded by alpha of the complete
// multipartite graph K_{r_1,...,r_p}.
inline triangle_table<Integer> k_family_table(const std::vector<int>& r, int n_max) {
    std::vector<int> parts = detail::drop_zero_parts(r);
    graph base = parts.empty() ? graph() : make_complete_multipartite(parts);
    return detail::alpha_seeded_table("k", r, base, n_max);
}

// T(r_1,...,r_p)-Stirling: partitions of [n] where min(R_i) shares no
// block with the rest of R_i.  Seeded by alpha of the star forest
// T_{r_1} u ... u T_{r_p}.
inline triangle_table<Integer> t_family_table(const std::vector<int>& r, int n_max) {
    std::vector<int> parts = detail::drop_zero_parts(r);
    graph base;
    for (int ri : parts) base = disjoint_union(base, make_star(ri));
    return detail::alpha_seeded_table("t", r, base, n_max);
}

namespace detail {

// Entry lookup through a process-wide cache of generated tables; tables
// are regenerated (never mutated) when a larger n is requested.
template <typename Key, typename Build>
inline Integer cached_entry(std::map<Key, triangle_table<Integer>>& cache, std::mutex& mu,
                            const Key& key, int n, int k, Build&& build) {
    std::scoped_lock lock(mu);
    auto it = cache.find(key);
    if (it == cache.end() || n > it->second.n_max()) {
        int target = std::max({n, 16, it == cache.end() ? 0 : 2 * it->second.n_max()});
        it = cache.insert_or_assign(key, build(target)).first;
    }
    return it->second.at(n, k);
}

} // namespace detail

inline Integer stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::map<int, triangle_table<Integer>> cache;
    return detail::cached_entry(cache, mu, 0, n, k, [](int m) { return classical_table(m); });
}

inline Integer r_stirling2(int n, int k, int r) {
    if (r < 0) throw std::invalid_argument("r_stirling2: negative r");
    if (n < 0 || k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::map<int, triangle_table<Integer>> cache;
    return detail::cached_entry(cache, mu, r, n, k, [&](int m) { return r_stirling_table(r, m); });
}

inline Integer multi_r_stirling(int n, int k, const std::vector<int>& r) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::map<std::vector<int>, triangle_table<Integer>> cache;
    return detail::cached_entry(cache, mu, r, n, k, [&](int m) { return multi_r_table(r, m); });
}

inline Integer k_stirling(int n, int k, const std::vector<int>& r) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::map<std::vector<int>, triangle_table<Integer>> cache;
    return detail::cached_entry(cache, mu, r, n, k, [&](int m) { return k_family_table(r, m); });
}

inline Integer t_stirling(int n, int k, const std::vector<int>& r) {
    if (n < 0 || k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::map<std::vector<int>, triangle_table<Integer>> cache;
    return detail::cached_entry(cache, mu, r, n, k, [&](int m) { return t_family_table(r, m); });
}

// Finite-difference closed form for the multi family:
//   {n brace k}_r = (1/(k-rp)!) sum_j (-1)^{k-rp-j} C(k-rp, j)
//                   (j+rp)_{r_1} ... (j+rp)_{r_{p-1}} (j+rp)^{n-|r|},
// where rp = max r_i.  An independent second route to the table values.
inline Integer multi_r_stirling_fd(int n, int k, const std::vector<int>& r) {
    std::vector<int> parts = detail::drop_zero_parts(r);
    std::sort(parts.begin(), parts.end());
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    int rp = parts.empty() ? 0 : parts.back();
    if (n < total || k < rp || k > n) return 0;
    int o = n - total;  // free elements
    int kk = k - rp;    // block count above the forced rp blocks
    Integer sum = 0;
    for (int j = 0; j <= kk; ++j) {
        Integer term = binomial(kk, j);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            term *= falling_power(Integer(j + rp), parts[i]);
        term *= int_pow(Integer(j + rp), o);
        if ((kk - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return exact_div(sum, factorial(kk));
}

// Finite-difference closed form for the T family:
//   {n brace k}_T = (1/k!) sum_j (-1)^{k-j} C(k,j) j^{n-|r|+p} (j-1)^{|r|-p}.
inline Integer t_stirling_fd(int n, int k, const std::vector<int>& r) {
    std::vector<int> parts = detail::drop_zero_parts(r);
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    int p = static_cast<int>(parts.size());
    if (n < total || k < 0 || k > n) return 0;
    int o = n - total;
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
        Integer term = binomial(k, j) * int_pow(Integer(j), o + p) * int_pow(Integer(j - 1), total - p);
        if ((k - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return exact_div(sum, factorial(k));
}

// Classical Bell polynomial B_n(x) = sum_k {n brace k} x^k.
inline int_poly bell_polynomial(int n) {
    int_poly b = int_poly::constant(1);
    for (int i = 1; i <= n; ++i) b = int_poly::monomial(1) * (b + b.derivative());
    return b;
}

// Generating polynomials B(x; K_{n,r}) of the K family:
//   polys[0] = B_{r_1}(x) ... B_{r_p}(x),
//   polys[n] = x (polys[n-1] + polys[n-1]'),
// so the coefficient of x^k in polys[n] is {n+|r| brace k}_K.
inline std::vector<int_poly> bell_sequence(const std::vector<int>& r, int n_max) {
    if (n_max < 0) throw std::invalid_argument("bell_sequence: negative n_max");
    int_poly base = int_poly::constant(1);
    for (int ri : detail::drop_zero_parts(r)) base *= bell_polynomial(ri);
    std::vector<int_poly> polys{base};
    for (int n = 1; n <= n_max; ++n)
        polys.push_back(int_poly::monomial(1) * (polys.back() + polys.back().derivative()));
    return polys;
}

// Triangular recurrence with affine coefficients,
//   T(n,k) = (a1 n + a2 k + a3) T(n-1,k) + (b1 n + b2 k + b3) T(n-1,k-1),
// T(0,0) = seed > 0, zero outside 0 <= k <= n.  The framework behind the
// U/V/W triangles and the log-concavity/PF/q-log-convexity certificates.
struct recurrence_spec {
    Rational a1, a2, a3;
    Rational b1, b2, b3;
    Rational seed = 1;
};

inline triangle_table<Rational> generate_triangle(const recurrence_spec& spec, int n_max,
                                                  std::string family = "custom",
                                                  std::vector<int> r_vec = {}) {
    if (spec.seed <= 0) throw std::invalid_argument("generate_triangle: seed must be positive");
    if (n_max < 0) throw std::invalid_argument("generate_triangle: negative n_max");
    std::vector<std::vector<Rational>> rows{{spec.seed}};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Rational> row(n + 1);
        const auto& prev = rows[n - 1];
        for (int k = 0; k <= n; ++k) {
            Rational v = 0;
            if (k <= n - 1) v += (spec.a1 * n + spec.a2 * k + spec.a3) * prev[k];
            if (k >= 1) v += (spec.b1 * n + spec.b2 * k + spec.b3) * prev[k - 1];
            if (v < 0)
                throw negative_entry("generate_triangle: negative entry at (" + std::to_string(n) +
                                     "," + std::to_string(k) + ")");
            row[k] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return triangle_table<Rational>(std::move(family), std::move(r_vec), std::move(rows));
}

inline triangle_table<Integer> to_integer_table(const triangle_table<Rational>& t) {
    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n <= t.n_max(); ++n) {
        std::vector<Integer> row(n + 1);
        for (int k = 0; k <= n; ++k) {
            const Rational& v = t.at(n, k);
            if (boost::multiprecision::denominator(v) != 1)
                throw nondivisible("to_integer_table: non-integer entry at (" + std::to_string(n) +
                                   "," + std::to_string(k) + ")");
            row[k] = boost::multiprecision::numerator(v);
        }
        rows.push_back(std::move(row));
    }
    return triangle_table<Integer>(t.family(), t.r_vec(), std::move(rows));
}

// U(n,k) = T(n-1,k-1) + (k+h) T(n-1,k): alpha_{k+h}(O_n u K_h) shifted.
inline recurrence_spec u_recurrence(int h) {
    return {Rational(0), Rational(1), Rational(h), Rational(0), Rational(0), Rational(1)};
}
// V(n,k) = T(n-1,k-1) + (k+h-1) T(n-1,k); needs h >= 1 to stay nonnegative.
inline recurrence_spec v_recurrence(int h) {
    return {Rational(0), Rational(1), Rational(h - 1), Rational(0), Rational(0), Rational(1)};
}
// W(n,k) = T(n-1,k-1) + (k-n+h+1) T(n-1,k): alpha_{k+h}(K_n u K_h) shifted.
inline recurrence_spec w_recurrence(int h) {
    return {Rational(-1), Rational(1), Rational(h + 1), Rational(0), Rational(0), Rational(1)};
}

inline triangle_table<Integer> u_triangle(int h, int n_max) {
    return to_integer_table(generate_triangle(u_recurrence(h), n_max, "u", {h}));
}
inline triangle_table<Integer> v_triangle(int h, int n_max) {
    return to_integer_table(generate_triangle(v_recurrence(h), n_max, "v", {h}));
}
inline triangle_table<Integer> w_triangle(int h, int n_max) {
    return to_integer_table(generate_triangle(w_recurrence(h), n_max, "w", {h}));
}

} // namespace chromatic
