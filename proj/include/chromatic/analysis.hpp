#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "chromatic/numeric.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/stirling.hpp"

namespace chromatic {

enum class sequence_property {
    log_concave,
    pf_up_to_order,
    q_log_convex,
    newton,
    real_roots_nonpositive,
};

inline std::string to_string(sequence_property p) {
    switch (p) {
        case sequence_property::log_concave: return "log_concave";
        case sequence_property::pf_up_to_order: return "pf_up_to_order";
        case sequence_property::q_log_convex: return "q_log_convex";
        case sequence_property::newton: return "newton";
        case sequence_property::real_roots_nonpositive: return "real_roots_nonpositive";
    }
    return "?";
}

// Outcome of a sequence/polynomial property check.  witness is nonempty
// exactly when holds is false and pins down a re-checkable counterexample.
struct sequence_verdict {
    sequence_property property;
    int order = 0; // minor-order bound for pf_up_to_order
    bool holds = true;
    std::string witness;
};

// u_{i-1} u_{i+1} <= u_i^2 at every interior index.
inline sequence_verdict is_log_concave(const std::vector<Integer>& u) {
    for (const Integer& x : u)
        if (x < 0) throw negative_input("is_log_concave: negative entry");
    sequence_verdict v{sequence_property::log_concave};
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        if (u[i - 1] * u[i + 1] > u[i] * u[i]) {
            v.holds = false;
            std::ostringstream os;
            os << "i=" << i << ": u[i-1]*u[i+1] = " << u[i - 1] * u[i + 1] << " > u[i]^2 = "
               << u[i] * u[i];
            v.witness = os.str();
            break;
        }
    }
    return v;
}

// Fraction-free (Bareiss) determinant of a d x d integer matrix held in
// row-major order.  Exact; the matrix is consumed.
inline Integer bareiss_determinant(std::vector<Integer>& m, int d) {
    if (d == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (int c = 0; c + 1 < d; ++c) {
        int pivot = -1;
        for (int i = c; i < d; ++i)
            if (m[i * d + c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = c; j < d; ++j) std::swap(m[pivot * d + j], m[c * d + j]);
            sign = -sign;
        }
        for (int i = c + 1; i < d; ++i)
            for (int j = c + 1; j < d; ++j)
                m[i * d + j] = (m[i * d + j] * m[c * d + c] - m[i * d + c] * m[c * d + j]) / prev;
        prev = m[c * d + c];
    }
    return sign > 0 ? m[d * d - 1] : -m[d * d - 1];
}

// Bounded Polya-frequency certificate: embeds u into the square Toeplitz
// truncation A[i][j] = u_{i-j} of side len+pad and verifies that every
// minor of order <= d has nonnegative determinant.
inline sequence_verdict is_pf_up_to_order(const std::vector<Integer>& u, int d = 4, int pad = 2) {
    if (d < 1) throw std::invalid_argument("is_pf_up_to_order: order must be >= 1");
    if (pad < 0) throw std::invalid_argument("is_pf_up_to_order: negative pad");
    sequence_verdict verdict{sequence_property::pf_up_to_order, d};
    int len = static_cast<int>(u.size());
    int m = len + pad;
    auto entry = [&](int i, int j) -> Integer {
        int t = i - j;
        return (t >= 0 && t < len) ? u[t] : Integer(0);
    };
    std::vector<int> rows, cols;
    std::vector<Integer> sub;
    for (int ord = 1; ord <= std::min(d, m); ++ord) {
        rows.resize(ord);
        cols.resize(ord);
        sub.assign(ord * ord, Integer(0));
        std::iota(rows.begin(), rows.end(), 0);
        auto next_combo = [m, ord](std::vector<int>& idx) {
            int i = ord - 1;
            while (i >= 0 && idx[i] == m - ord + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < ord; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        do {
            std::iota(cols.begin(), cols.end(), 0);
            do {
                // whole first row (or last row) outside the band: minor is 0
                if (rows[0] < cols[0]) continue;
                if (rows[ord - 1] - cols[ord - 1] >= len) continue;
                for (int i = 0; i < ord; ++i)
                    for (int j = 0; j < ord; ++j) sub[i * ord + j] = entry(rows[i], cols[j]);
                Integer det = bareiss_determinant(sub, ord);
                if (det < 0) {
                    verdict.holds = false;
                    std::ostringstream os;
                    os << "order=" << ord << " rows={";
                    for (int i = 0; i < ord; ++i) os << (i ? "," : "") << rows[i];
                    os << "} cols={";
                    for (int j = 0; j < ord; ++j) os << (j ? "," : "") << cols[j];
                    os << "} det=" << det;
                    verdict.witness = os.str();
                    return verdict;
                }
            } while (next_combo(cols));
        } while (next_combo(rows));
    }
    return verdict;
}

// Coefficientwise q-log-convexity of a polynomial sequence:
// P_{n-1} P_{n+1} - P_n^2 >= 0 for every interior n (flipped reverses
// the difference).
inline sequence_verdict is_q_log_convex(const std::vector<int_poly>& ps, bool flipped = false) {
    if (ps.size() < 3) throw std::invalid_argument("is_q_log_convex: need at least 3 polynomials");
    sequence_verdict v{sequence_property::q_log_convex};
    for (std::size_t n = 1; n + 1 < ps.size(); ++n) {
        int_poly diff = ps[n - 1] * ps[n + 1] - ps[n] * ps[n];
        if (flipped) diff = -diff;
        for (int j = 0; j <= diff.degree(); ++j)
            if (diff.coeff(j) < 0) {
                v.holds = false;
                std::ostringstream os;
                os << "n=" << n << ": coefficient of q^" << j << " in "
                   << (flipped ? "P_n^2 - P_{n-1}P_{n+1}" : "P_{n-1}P_{n+1} - P_n^2") << " is "
                   << diff.coeff(j);
                v.witness = os.str();
                return v;
            }
    }
    return v;
}

// Newton's inequalities for the coefficient sequence of a degree-m
// polynomial: a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(m-k)), checked
// by exact cross-multiplication.
inline sequence_verdict newton_inequalities(const std::vector<Integer>& a) {
    for (const Integer& x : a)
        if (x < 0) throw negative_input("newton_inequalities: negative entry");
    sequence_verdict v{sequence_property::newton};
    long long m = static_cast<long long>(a.size()) - 1;
    for (long long k = 1; k < m; ++k) {
        Integer lhs = a[k] * a[k] * Integer(k) * Integer(m - k);
        Integer rhs = a[k - 1] * a[k + 1] * Integer(k + 1) * Integer(m - k + 1);
        if (lhs < rhs) {
            v.holds = false;
            std::ostringstream os;
            os << "k=" << k << ": a_k^2*k*(m-k) = " << lhs << " < a_{k-1}a_{k+1}(k+1)(m-k+1) = "
               << rhs;
            v.witness = os.str();
            break;
        }
    }
    return v;
}

namespace detail {

// polynomial remainder over the rationals
inline rat_poly poly_rem(const rat_poly& a, const rat_poly& b) {
    rat_poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational f = r.coeff(r.degree()) / b.coeff(b.degree());
        int shift = r.degree() - b.degree();
        r -= rat_poly::monomial(shift, f) * b;
    }
    return r;
}

inline rat_poly poly_gcd(rat_poly a, rat_poly b) {
    while (!b.is_zero()) {
        rat_poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational lead = a.coeff(a.degree());
        rat_poly monic;
        for (int i = 0; i <= a.degree(); ++i)
            monic += rat_poly::monomial(i, a.coeff(i) / lead);
        return monic;
    }
    return a;
}

inline rat_poly poly_div_exact(const rat_poly& a, const rat_poly& b) {
    rat_poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational f = r.coeff(r.degree()) / b.coeff(b.degree());
        int shift = r.degree() - b.degree();
        rat_poly t = rat_poly::monomial(shift, f);
        q += t;
        r -= t * b;
    }
    return q;
}

inline int sign_of(const Rational& x) { return x == 0 ? 0 : x < 0 ? -1 : 1; }

inline int sign_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace detail

// Sturm-count check that every root of p is real and <= 0.  The x = 0
// roots are factored out, the rest is made squarefree, and the number of
// distinct real roots in (-inf, 0) is compared against the squarefree
// degree.
inline sequence_verdict count_real_roots_nonpositive(const int_poly& p) {
    if (p.is_zero())
        throw std::invalid_argument("count_real_roots_nonpositive: zero polynomial");
    sequence_verdict v{sequence_property::real_roots_nonpositive};

    int low = 0;
    while (p.coeff(low) == 0) ++low; // multiplicity of the root at 0
    rat_poly q;
    for (int i = low; i <= p.degree(); ++i)
        q += rat_poly::monomial(i - low, Rational(p.coeff(i)));
    if (q.degree() == 0) return v; // p = c x^low, all roots at 0

    rat_poly sf = detail::poly_div_exact(q, detail::poly_gcd(q, q.derivative()));
    int target = sf.degree();

    std::vector<rat_poly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        rat_poly r = detail::poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();

    std::vector<int> at_minus_inf, at_zero;
    for (const rat_poly& f : chain) {
        int lead = detail::sign_of(f.coeff(f.degree()));
        at_minus_inf.push_back(f.degree() % 2 == 0 ? lead : -lead);
        at_zero.push_back(detail::sign_of(f.coeff(0)));
    }
    int roots = detail::sign_variations(at_minus_inf) - detail::sign_variations(at_zero);

    if (roots != target) {
        v.holds = false;
        std::ostringstream os;
        os << "only " << roots << " of " << target
           << " distinct non-zero roots are real and negative";
        v.witness = os.str();
    }
    return v;
}

// The sufficient conditions on a triangular recurrence under which its
// rows are log-concave, Polya-frequency, and its row polynomials
// q-log-convex.  Sufficient only: a false condition refutes nothing.
struct condition_certificate {
    std::vector<std::pair<std::string, bool>> lc_conditions;
    std::vector<std::pair<std::string, bool>> pf_conditions;
    std::vector<std::pair<std::string, bool>> qlc_conditions;
    bool lc_applicable = false;
    bool pf_applicable = false;
    bool qlc_applicable = false;
};

inline condition_certificate certify_recurrence_conditions(const recurrence_spec& s,
                                                           int n_max = 20) {
    condition_certificate c;
    auto add = [](auto& list, std::string text, bool ok) { list.emplace_back(std::move(text), ok); };
    add(c.lc_conditions, "a1 >= 0", s.a1 >= 0);
    add(c.lc_conditions, "a1 + a2 >= 0", s.a1 + s.a2 >= 0);
    add(c.lc_conditions, "a1 + a3 >= 0", s.a1 + s.a3 >= 0);
    add(c.lc_conditions, "b1 >= 0", s.b1 >= 0);
    add(c.lc_conditions, "b1 + b2 >= 0", s.b1 + s.b2 >= 0);
    add(c.lc_conditions, "b1 + b2 + b3 >= 0", s.b1 + s.b2 + s.b3 >= 0);
    add(c.pf_conditions, "a2*b1 >= a1*b2", s.a2 * s.b1 >= s.a1 * s.b2);
    add(c.pf_conditions, "a2*(b1+b2+b3) >= (a1+a3)*b2",
        s.a2 * (s.b1 + s.b2 + s.b3) >= (s.a1 + s.a3) * s.b2);
    bool window_ok = true;
    for (int n = 1; n <= n_max && window_ok; ++n)
        for (int k = 1; k <= n; ++k)
            if ((s.a2 * s.b1 - s.a1 * s.b2) * n + s.a2 * s.b2 * k + s.a2 * s.b3 - s.a3 * s.b2 < 0) {
                window_ok = false;
                break;
            }
    add(c.qlc_conditions,
        "(a2*b1 - a1*b2)n + a2*b2*k + a2*b3 - a3*b2 >= 0 for 0 < k <= n <= " + std::to_string(n_max),
        window_ok);
    auto all = [](const auto& list) {
        for (const auto& [text, ok] : list)
            if (!ok) return false;
        return true;
    };
    c.lc_applicable = all(c.lc_conditions);
    c.pf_applicable = c.lc_applicable && all(c.pf_conditions);
    c.qlc_applicable = c.pf_applicable && window_ok;
    return c;
}

} // namespace chromatic
