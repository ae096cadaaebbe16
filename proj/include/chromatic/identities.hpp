#pragma once

#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chromatic/chromatic.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/stirling.hpp"

namespace chromatic {

// Uniform random graph on n labeled vertices, each edge present with
// probability 1/2.
inline graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<graph::edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) e.push_back({u, v});
    return graph(n, std::move(e));
}

// Parameter ranges for the identity catalog.  The defaults are the desk
// ranges every identity is expected to pass on.
struct identity_options {
    int n_max = 8;         // ground-set bound for the Stirling families
    int r_sum_max = 5;     // bound on |r| = r_1 + ... + r_p
    int p_max = 3;         // bound on the number of restriction sets
    int theorem_n_max = 5; // n bound for the alpha recurrences (I1-I3)
    int h_max = 5;         // vertex bound for the random graphs H
    int graphs = 20;       // number of random H per alpha recurrence
    std::uint64_t seed = 1;
    bool quick = false;

    identity_options effective() const {
        identity_options o = *this;
        if (quick) {
            o.n_max = std::min(o.n_max, 6);
            o.r_sum_max = std::min(o.r_sum_max, 4);
            o.theorem_n_max = std::min(o.theorem_n_max, 4);
            o.h_max = std::min(o.h_max, 4);
            o.graphs = std::min(o.graphs, 5);
        }
        return o;
    }
};

struct verification_report {
    std::string identity;
    std::string scope;
    long long instances = 0;
    bool pass = true;
    std::string counterexample;
};

namespace detail {

struct check_runner {
    verification_report rep;

    template <typename F>
    void require(bool ok, F&& describe) {
        ++rep.instances;
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.counterexample = describe();
        }
    }

    void require_eq(const Integer& lhs, const Integer& rhs, const std::string& where) {
        require(lhs == rhs, [&] {
            std::ostringstream os;
            os << where << ": lhs=" << lhs << " rhs=" << rhs;
            return os.str();
        });
    }
};

// Nondecreasing restriction vectors (r_1 <= ... <= r_p, r_i >= 1) with
// |r| <= sum_max and p <= p_max, optionally with the empty vector.
inline std::vector<std::vector<int>> sorted_r_vectors(int sum_max, int p_max, bool include_empty) {
    std::vector<std::vector<int>> out;
    if (include_empty) out.push_back({});
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_v, int sum) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == p_max) return;
        for (int v = min_v; sum + v <= sum_max; ++v) {
            cur.push_back(v);
            self(self, v, sum + v);
            cur.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

inline int vec_sum(const std::vector<int>& r) {
    int s = 0;
    for (int x : r) s += x;
    return s;
}

inline std::string vec_str(const std::vector<int>& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

// Deterministic small graphs plus seeded random ones; the H pool for
// the alpha recurrences.
inline std::vector<graph> theorem_h_pool(const identity_options& opt) {
    std::vector<graph> hs{graph(),          make_complete(1), make_empty(2),
                          make_complete(2), make_star(3),     make_complete(3)};
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> size(0, opt.h_max);
    for (int i = 0; i < opt.graphs; ++i) hs.push_back(random_graph(size(rng), rng));
    return hs;
}

inline std::string h_label(const graph& h, std::size_t index) {
    return "H#" + std::to_string(index) + "(order=" + std::to_string(h.order()) +
           ",edges=" + std::to_string(h.edge_count()) + ")";
}

// alpha vectors of F_m u H for m = 0..m_max, where F_m is produced by a
// family constructor (empty / complete / star).
template <typename MakeF>
inline std::vector<falling_factorial_form> alpha_family(const graph& h, int m_max, MakeF&& make) {
    std::vector<falling_factorial_form> out;
    for (int m = 0; m <= m_max; ++m)
        out.push_back(alpha_coeffs(disjoint_union(make(m), h), default_vertex_cap + h.order()));
    return out;
}

} // namespace detail

// I1: alpha_k(O_n u H) = sum_j {s+j brace k}_j alpha_j(O_{n-s} u H) for
// 0 <= s <= n, plus the support window alpha_k = 0 off [chi(H), n+h].
inline verification_report check_alpha_recurrence_empty(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I1";
    c.rep.scope = "n<=" + std::to_string(opt.theorem_n_max) + ", 0<=s<=n, " +
                  std::to_string(opt.graphs) + " random H with <=" + std::to_string(opt.h_max) +
                  " vertices";
    auto pool = detail::theorem_h_pool(opt);
    for (std::size_t hi = 0; hi < pool.size(); ++hi) {
        const graph& H = pool[hi];
        int h = H.order();
        int chi_h = H.order() == 0 ? 0 : chromatic_number(H);
        auto alpha = detail::alpha_family(H, opt.theorem_n_max, make_empty);
        for (int n = 0; n <= opt.theorem_n_max; ++n) {
            for (int k = 0; k <= n + h + 2; ++k)
                if (k < chi_h || k > n + h)
                    c.require_eq(alpha[n].coeff(k), 0,
                                 detail::h_label(H, hi) + " support n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            for (int s = 0; s <= n; ++s)
                for (int k = 0; k <= n + h; ++k) {
                    Integer rhs = 0;
                    for (int j = 0; j <= k; ++j)
                        rhs += r_stirling2(s + j, k, j) * alpha[n - s].coeff(j);
                    c.require_eq(alpha[n].coeff(k), rhs,
                                 detail::h_label(H, hi) + " n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " k=" + std::to_string(k));
                }
        }
    }
    return c.rep;
}

// I2: alpha_k(T_n u H) = sum_j {s+j-1 brace k-1}_{j-1} alpha_j(T_{n-s} u H).
// The underlying factorization P(T_n u H) = (x-1)^s P(T_{n-s} u H) needs
// a surviving star core, so s ranges over [0, n-1] for n >= 1.
inline verification_report check_alpha_recurrence_star(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I2";
    c.rep.scope = "n<=" + std::to_string(opt.theorem_n_max) + ", 0<=s<=max(n-1,0), " +
                  std::to_string(opt.graphs) + " random H with <=" + std::to_string(opt.h_max) +
                  " vertices";
    auto pool = detail::theorem_h_pool(opt);
    for (std::size_t hi = 0; hi < pool.size(); ++hi) {
        const graph& H = pool[hi];
        int h = H.order();
        int chi_h = H.order() == 0 ? 0 : chromatic_number(H);
        auto alpha = detail::alpha_family(H, opt.theorem_n_max, make_star);
        for (int n = 0; n <= opt.theorem_n_max; ++n) {
            if (n + h == 0) continue; // nothing to check on the empty graph
            int chi_star = n >= 2 ? 2 : n; // chi(T_n): 2 - [n=1] - 2[n=0]
            for (int k = 0; k <= n + h + 2; ++k)
                if (k < std::max(chi_star, chi_h) || k > n + h)
                    c.require_eq(alpha[n].coeff(k), 0,
                                 detail::h_label(H, hi) + " support n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            int s_hi = std::max(n - 1, 0);
            for (int s = 0; s <= s_hi; ++s)
                for (int k = 0; k <= n + h; ++k) {
                    Integer rhs = 0;
                    for (int j = std::max(k - s, 1); j <= k; ++j)
                        rhs += r_stirling2(s + j - 1, k - 1, j - 1) * alpha[n - s].coeff(j);
                    c.require_eq(alpha[n].coeff(k), rhs,
                                 detail::h_label(H, hi) + " n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " k=" + std::to_string(k));
                }
        }
    }
    return c.rep;
}

// I3: alpha_k(K_n u H) = sum_j C(s,k-j)(j+s-n)_{s+j-k} alpha_j(K_{n-s} u H)
// for 0 <= s <= n, plus the support window [max(n, chi(H)), n+h].
inline verification_report check_alpha_recurrence_complete(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I3";
    c.rep.scope = "n<=" + std::to_string(opt.theorem_n_max) + ", 0<=s<=n, " +
                  std::to_string(opt.graphs) + " random H with <=" + std::to_string(opt.h_max) +
                  " vertices";
    auto pool = detail::theorem_h_pool(opt);
    for (std::size_t hi = 0; hi < pool.size(); ++hi) {
        const graph& H = pool[hi];
        int h = H.order();
        int chi_h = H.order() == 0 ? 0 : chromatic_number(H);
        auto alpha = detail::alpha_family(H, opt.theorem_n_max, make_complete);
        for (int n = 0; n <= opt.theorem_n_max; ++n) {
            for (int k = 0; k <= n + h + 2; ++k)
                if (k < std::max(n, chi_h) || k > n + h)
                    c.require_eq(alpha[n].coeff(k), 0,
                                 detail::h_label(H, hi) + " support n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            for (int s = 0; s <= n; ++s)
                for (int k = 0; k <= n + h; ++k) {
                    Integer rhs = 0;
                    for (int j = 0; j <= k; ++j)
                        rhs += binomial(s, k - j) * falling_power(Integer(j + s - n), s + j - k) *
                               alpha[n - s].coeff(j);
                    c.require_eq(alpha[n].coeff(k), rhs,
                                 detail::h_label(H, hi) + " n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " k=" + std::to_string(k));
                }
        }
    }
    return c.rep;
}

// I4: {n brace k}_r = sum_j {s+j brace k}_j {n-s brace j}_r for
// 0 <= s <= n - |r|, plus the support claims of the multi family.
inline verification_report check_multi_shift_identity(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I4";
    c.rep.scope = "n<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, true)) {
        int total = detail::vec_sum(r);
        int support_k = std::max(r.empty() ? 1 : r.back(), 1);
        for (int n = 0; n < total && n <= opt.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                c.require_eq(multi_r_stirling(n, k, r), 0,
                             "r=" + detail::vec_str(r) + " below-support n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
        for (int n = std::max(total, 1); n <= opt.n_max; ++n)
            for (int k = 0; k < support_k; ++k)
                c.require_eq(multi_r_stirling(n, k, r), 0,
                             "r=" + detail::vec_str(r) + " low-k n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
        for (int n = total; n <= opt.n_max; ++n)
            for (int s = 0; s <= n - total; ++s)
                for (int k = 0; k <= n; ++k) {
                    Integer rhs = 0;
                    for (int j = 0; j <= k; ++j)
                        rhs += r_stirling2(s + j, k, j) * multi_r_stirling(n - s, j, r);
                    c.require_eq(multi_r_stirling(n, k, r), rhs,
                                 "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " k=" + std::to_string(k));
                }
    }
    return c.rep;
}

// I5: {n brace k}_r = {n-1 brace k-1}_{r-e_i} + (k+1-r_i){n-1 brace k}_{r-e_i}.
inline verification_report check_multi_reduction_identity(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I5";
    c.rep.scope = "n<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max) + ", every i";
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, false)) {
        int total = detail::vec_sum(r);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::vector<int> red = r;
            --red[i];
            for (int n = total; n <= opt.n_max; ++n)
                for (int k = 0; k <= n; ++k) {
                    Integer rhs = multi_r_stirling(n - 1, k - 1, red) +
                                  Integer(k + 1 - r[i]) * multi_r_stirling(n - 1, k, red);
                    c.require_eq(multi_r_stirling(n, k, r), rhs,
                                 "r=" + detail::vec_str(r) + " i=" + std::to_string(i + 1) +
                                     " n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
        }
    }
    return c.rep;
}

// I6: {n brace k}_r = r {n-1 brace k}_r + {n brace k}_{r+1} for n >= r+1.
inline verification_report check_r_shift_identity(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I6";
    c.rep.scope = "r<=" + std::to_string(opt.r_sum_max - 1) + ", n<=" + std::to_string(opt.n_max);
    for (int r = 0; r < opt.r_sum_max; ++r)
        for (int n = r + 1; n <= opt.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                c.require_eq(r_stirling2(n, k, r),
                             Integer(r) * r_stirling2(n - 1, k, r) + r_stirling2(n, k, r + 1),
                             "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
    return c.rep;
}

// I7: K-family version of the shift identity, lower support k >= p.
inline verification_report check_k_shift_identity(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I7";
    c.rep.scope = "n<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, true)) {
        int total = detail::vec_sum(r);
        int p = static_cast<int>(r.size());
        for (int n = 0; n < total && n <= opt.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                c.require_eq(k_stirling(n, k, r), 0,
                             "r=" + detail::vec_str(r) + " below-support n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
        for (int n = std::max(total, 1); n <= opt.n_max; ++n)
            for (int k = 0; k < p; ++k)
                c.require_eq(k_stirling(n, k, r), 0,
                             "r=" + detail::vec_str(r) + " low-k n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
        for (int n = total; n <= opt.n_max; ++n)
            for (int s = 0; s <= n - total; ++s)
                for (int k = 0; k <= n; ++k) {
                    Integer rhs = 0;
                    for (int j = 0; j <= k; ++j)
                        rhs += r_stirling2(s + j, k, j) * k_stirling(n - s, j, r);
                    c.require_eq(k_stirling(n, k, r), rhs,
                                 "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " k=" + std::to_string(k));
                }
    }
    return c.rep;
}

// I8: (z+rp)_{r_1} ... (z+rp)_{r_{p-1}} (z+rp)^n expands over the basis
// {(z)_k} with coefficients {n+|r| brace k+rp}_r.
inline verification_report check_multi_basis_expansion(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I8";
    c.rep.scope = "n+|r|<=" + std::to_string(opt.n_max + 2) + ", |r|<=" +
                  std::to_string(opt.r_sum_max) + ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, false)) {
        int total = detail::vec_sum(r);
        int rp = r.back();
        for (int n = 0; n + total <= opt.n_max + 2; ++n) {
            int_poly lhs = int_poly::constant(1);
            for (std::size_t i = 0; i + 1 < r.size(); ++i)
                for (int t = 0; t < r[i]; ++t) lhs *= int_poly{Integer(rp - t), Integer(1)};
            lhs *= int_poly{Integer(rp), Integer(1)}.pow(n);
            falling_factorial_form ff = to_falling_factorial(lhs);
            int expect_deg = n + total - rp;
            c.require(ff.max_index() == expect_deg, [&] {
                return "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                       ": basis range " + std::to_string(ff.max_index()) + " != " +
                       std::to_string(expect_deg);
            });
            for (int k = 0; k <= expect_deg; ++k)
                c.require_eq(ff.coeff(k), multi_r_stirling(n + total, k + rp, r),
                             "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
        }
    }
    return c.rep;
}

// I9: z^{n+p}(z-1)^{|r|-p} = sum_k {n+|r| brace k}_T (z)_k, and the
// T family collapses to the single star of size |r|-p+1.
inline verification_report check_t_basis_expansion(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I9";
    c.rep.scope = "n+|r|<=" + std::to_string(opt.n_max + 2) + ", |r|<=" +
                  std::to_string(opt.r_sum_max) + ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, false)) {
        int total = detail::vec_sum(r);
        int p = static_cast<int>(r.size());
        std::vector<int> collapsed{total - p + 1};
        for (int n = 0; n + total <= opt.n_max + 2; ++n) {
            int_poly lhs = int_poly::monomial(n + p) * int_poly{Integer(-1), Integer(1)}.pow(total - p);
            falling_factorial_form ff = to_falling_factorial(lhs);
            for (int k = 0; k <= n + total; ++k) {
                c.require_eq(ff.coeff(k), t_stirling(n + total, k, r),
                             "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
                c.require_eq(t_stirling(n + total, k, r), t_stirling(n + total, k, collapsed),
                             "collapse r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
            }
        }
    }
    return c.rep;
}

// I10: the finite-difference closed form of the multi family agrees
// with the recurrence-built table.
inline verification_report check_multi_finite_difference(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I10";
    c.rep.scope = "n<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, true)) {
        int total = detail::vec_sum(r);
        for (int n = total; n <= opt.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                c.require_eq(multi_r_stirling_fd(n, k, r), multi_r_stirling(n, k, r),
                             "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
    }
    return c.rep;
}

// I11: the multi/K/T families are invariant under permutations of r.
inline verification_report check_permutation_invariance(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I11";
    c.rep.scope = "|r|<=" + std::to_string(opt.r_sum_max) + ", p<=" + std::to_string(opt.p_max) +
                  ", all permutations";
    using builder = triangle_table<Integer> (*)(const std::vector<int>&, int);
    std::pair<const char*, builder> families[] = {
        {"multi", multi_r_table}, {"k", k_family_table}, {"t", t_family_table}};
    for (const auto& base : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, false)) {
        if (base.size() < 2) continue;
        int n_top = detail::vec_sum(base) + 3;
        for (auto [name, build] : families) {
            triangle_table<Integer> reference = build(base, n_top);
            std::vector<int> perm = base;
            while (std::next_permutation(perm.begin(), perm.end())) {
                triangle_table<Integer> other = build(perm, n_top);
                for (int n = 0; n <= n_top; ++n)
                    for (int k = 0; k <= n; ++k)
                        c.require_eq(reference.at(n, k), other.at(n, k),
                                     std::string(name) + " r=" + detail::vec_str(base) + " vs " +
                                         detail::vec_str(perm) + " n=" + std::to_string(n) +
                                         " k=" + std::to_string(k));
            }
        }
    }
    return c.rep;
}

// I12: {m brace k}_{T(r)} = (k-1){m-1 brace k}_{T(r-e_i)} + {m-1 brace k-1}_{T(r-e_i)}
// for r_i >= 2 (removing a leaf from the i-th star).
inline verification_report check_t_reduction_identity(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I12";
    c.rep.scope = "m<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max) + ", i with r_i>=2";
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, false)) {
        int total = detail::vec_sum(r);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 2) continue;
            std::vector<int> red = r;
            --red[i];
            for (int m = total; m <= opt.n_max; ++m)
                for (int k = 0; k <= m; ++k) {
                    Integer rhs = Integer(k - 1) * t_stirling(m - 1, k, red) +
                                  t_stirling(m - 1, k - 1, red);
                    c.require_eq(t_stirling(m, k, r), rhs,
                                 "r=" + detail::vec_str(r) + " i=" + std::to_string(i + 1) +
                                     " m=" + std::to_string(m) + " k=" + std::to_string(k));
                }
        }
    }
    return c.rep;
}

// I13: coefficients of the Bell-style generating polynomials equal the
// K-family entries.
inline verification_report check_bell_coefficients(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I13";
    c.rep.scope = "n<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, true)) {
        int total = detail::vec_sum(r);
        int nb = std::max(opt.n_max - total, 2);
        auto polys = bell_sequence(r, nb);
        for (int n = 0; n <= nb; ++n)
            for (int k = 0; k <= n + total; ++k)
                c.require_eq(polys[n].coeff(k), k_stirling(n + total, k, r),
                             "r=" + detail::vec_str(r) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
    }
    return c.rep;
}

// I14: the finite-difference closed form of the T family agrees with
// the recurrence-built table.
inline verification_report check_t_finite_difference(const identity_options& options) {
    identity_options opt = options.effective();
    detail::check_runner c;
    c.rep.identity = "I14";
    c.rep.scope = "m<=" + std::to_string(opt.n_max) + ", |r|<=" + std::to_string(opt.r_sum_max) +
                  ", p<=" + std::to_string(opt.p_max);
    for (const auto& r : detail::sorted_r_vectors(opt.r_sum_max, opt.p_max, true)) {
        int total = detail::vec_sum(r);
        for (int m = total; m <= opt.n_max; ++m)
            for (int k = 0; k <= m; ++k)
                c.require_eq(t_stirling_fd(m, k, r), t_stirling(m, k, r),
                             "r=" + detail::vec_str(r) + " m=" + std::to_string(m) +
                                 " k=" + std::to_string(k));
    }
    return c.rep;
}

inline const std::vector<std::pair<std::string, std::string>>& identity_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"I1", "alpha recurrence for O_n u H over all shifts s"},
        {"I2", "alpha recurrence for T_n u H over shifts with a surviving star core"},
        {"I3", "alpha recurrence for K_n u H over all shifts s"},
        {"I4", "multi-family shift identity and triangular recurrence"},
        {"I5", "multi-family reduction identity r -> r - e_i"},
        {"I6", "r-Stirling cross identity {n,k}_r = r{n-1,k}_r + {n,k}_{r+1}"},
        {"I7", "K-family shift identity and triangular recurrence"},
        {"I8", "falling-factorial expansion of (z+rp)_{r_1}...(z+rp)^n"},
        {"I9", "falling-factorial expansion of z^{n+p}(z-1)^{|r|-p} and star collapse"},
        {"I10", "multi-family finite-difference closed form vs table"},
        {"I11", "permutation invariance of the multi/K/T families"},
        {"I12", "T-family reduction identity r -> r - e_i"},
        {"I13", "Bell-style generating polynomials vs K-family entries"},
        {"I14", "T-family finite-difference closed form vs table"},
    };
    return catalog;
}

inline verification_report verify_identity(std::string_view id, const identity_options& opt = {}) {
    if (id == "I1") return check_alpha_recurrence_empty(opt);
    if (id == "I2") return check_alpha_recurrence_star(opt);
    if (id == "I3") return check_alpha_recurrence_complete(opt);
    if (id == "I4") return check_multi_shift_identity(opt);
    if (id == "I5") return check_multi_reduction_identity(opt);
    if (id == "I6") return check_r_shift_identity(opt);
    if (id == "I7") return check_k_shift_identity(opt);
    if (id == "I8") return check_multi_basis_expansion(opt);
    if (id == "I9") return check_t_basis_expansion(opt);
    if (id == "I10") return check_multi_finite_difference(opt);
    if (id == "I11") return check_permutation_invariance(opt);
    if (id == "I12") return check_t_reduction_identity(opt);
    if (id == "I13") return check_bell_coefficients(opt);
    if (id == "I14") return check_t_finite_difference(opt);
    throw unknown_identity("unknown identity id: " + std::string(id));
}

} // namespace chromatic
