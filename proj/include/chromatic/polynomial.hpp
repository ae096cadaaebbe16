#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "chromatic/numeric.hpp"

namespace chromatic {

// Dense univariate polynomial with exact coefficients, index i holding
// the coefficient of x^i.  Always normalized: no stored trailing zeros,
// the zero polynomial is the empty vector.
template <typename T>
class polynomial {
public:
    polynomial() = default;
    polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static polynomial monomial(int deg, T coeff = T(1)) {
        std::vector<T> c(deg + 1);
        c[deg] = std::move(coeff);
        return polynomial(std::move(c));
    }
    static polynomial constant(T v) { return polynomial{std::move(v)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[i];
    }

    polynomial& operator+=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    polynomial& operator-=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }
    polynomial& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return polynomial(std::move(c));
    }
    friend polynomial operator*(polynomial a, const T& s) { return a *= s; }
    polynomial operator-() const {
        polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    // Horner evaluation.
    T operator()(const T& x) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return polynomial(std::move(d));
    }

    polynomial pow(int e) const {
        polynomial r = constant(T(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    bool operator==(const polynomial&) const = default;

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
};

using int_poly = polynomial<Integer>;
using rat_poly = polynomial<Rational>;

// (x)_k = x(x-1)...(x-k+1) expanded in the monomial basis; (x)_0 = 1.
inline int_poly falling_factorial_poly(int k) {
    int_poly r = int_poly::constant(1);
    for (int i = 0; i < k; ++i) r *= int_poly{Integer(-i), Integer(1)};
    return r;
}

// Exact coefficients over the falling-factorial basis {(x)_k}; index k
// holds the coefficient of (x)_k.  Normalized like polynomial<>.
class falling_factorial_form {
public:
    falling_factorial_form() = default;
    falling_factorial_form(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
    explicit falling_factorial_form(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int max_index() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[k];
    }

    bool operator==(const falling_factorial_form&) const = default;

private:
    std::vector<Integer> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Change of basis x^i -> (x)_k by repeated synthetic division:
// p(x) = a_0 + x(a_1 + (x-1)(a_2 + (x-2)(...))), so a_j is the remainder
// of the j-th quotient under division by (x - j).  Stays in integers.
inline falling_factorial_form to_falling_factorial(const int_poly& p) {
    std::vector<Integer> q(p.coeffs());
    std::vector<Integer> alpha;
    Integer point = 0;
    while (!q.empty()) {
        // synthetic division of q by (x - point): b_{i-1} = q_i + point*b_i
        Integer carry = 0;
        for (std::size_t i = q.size(); i-- > 0;) {
            Integer tmp = q[i] + point * carry;
            q[i] = carry;
            carry = tmp;
        }
        alpha.push_back(carry); // remainder = q(point); q now holds the quotient
        while (!q.empty() && q.back() == 0) q.pop_back();
        ++point;
    }
    return falling_factorial_form(std::move(alpha));
}

inline int_poly from_falling_factorial(const falling_factorial_form& f) {
    int_poly r;
    int_poly basis = int_poly::constant(1);
    for (int k = 0; k <= f.max_index(); ++k) {
        if (k > 0) basis *= int_poly{Integer(-(k - 1)), Integer(1)};
        r += basis * f.coeff(k);
    }
    return r;
}

namespace detail {

inline void render_term(std::ostream& os, bool first, const Integer& c, const std::string& sym,
                        bool star) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (sym.empty()) {
        os << a.str();
    } else if (a == 1) {
        os << sym;
    } else {
        os << a.str() << (star ? "*" : "") << sym;
    }
}

} // namespace detail

// Monomial rendering, descending powers: "l^4 - l^3", "3l^2 + 1", "0".
inline std::string to_string(const int_poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Integer c = p.coeff(i);
        if (c == 0) continue;
        std::string sym = i == 0 ? "" : i == 1 ? "l" : "l^" + std::to_string(i);
        detail::render_term(os, first, c, sym, false);
        first = false;
    }
    return os.str();
}

// Falling-factorial rendering, ascending index: "4*ff(2) + 5*ff(3) + ff(4)".
inline std::string to_string(const falling_factorial_form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= f.max_index(); ++k) {
        Integer c = f.coeff(k);
        if (c == 0) continue;
        std::string sym = k == 0 ? "" : "ff(" + std::to_string(k) + ")";
        detail::render_term(os, first, c, sym, true);
        first = false;
    }
    return os.str();
}

} // namespace chromatic
