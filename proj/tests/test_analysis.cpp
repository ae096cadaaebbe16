#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromatic/analysis.hpp"
#include "chromatic/stirling.hpp"

using namespace chromatic;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    return std::vector<Integer>(v.begin(), v.end());
}

std::vector<int_poly> row_polys(const triangle_table<Integer>& t, int n_max) {
    std::vector<int_poly> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(t.row_polynomial(n));
    return out;
}

} // namespace

TEST_CASE("log-concavity") {
    CHECK(is_log_concave(ints({1, 3, 3, 1})).holds);
    sequence_verdict v = is_log_concave(ints({1, 1, 2}));
    CHECK(!v.holds);
    CHECK(v.witness.find("i=1") != std::string::npos);
    CHECK(is_log_concave(ints({1, 15, 25, 10, 1})).holds);
    CHECK(is_log_concave(ints({})).holds);
    CHECK(is_log_concave(ints({5})).holds);
    // an internal zero with positive neighbors fails
    CHECK(!is_log_concave(ints({1, 0, 1})).holds);
    // leading zeros are harmless
    CHECK(is_log_concave(ints({0, 0, 1, 4, 4, 1})).holds);
    CHECK_THROWS_AS(is_log_concave(ints({1, -1, 1})), negative_input);
}

TEST_CASE("Bareiss determinants") {
    std::vector<Integer> m = {Integer(2)};
    CHECK(bareiss_determinant(m, 1) == 2);
    m = {1, 2, 3, 4};
    CHECK(bareiss_determinant(m, 2) == -2);
    m = {0, 1, 1, 0};
    CHECK(bareiss_determinant(m, 2) == -1);
    m = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(bareiss_determinant(m, 3) == 0);
    m = {2, 0, 0, 0, 3, 0, 0, 0, 4};
    CHECK(bareiss_determinant(m, 3) == 24);
    // needs a row swap
    m = {0, 0, 1, 0, 2, 0, 3, 0, 0};
    CHECK(bareiss_determinant(m, 3) == -6);
    Integer big = int_pow(Integer(10), 20);
    m = {big, 1, 1, big};
    CHECK(bareiss_determinant(m, 2) == big * big - 1);
}

TEST_CASE("bounded PF certificates") {
    CHECK(is_pf_up_to_order(ints({1, 2, 1}), 3).holds);
    sequence_verdict v = is_pf_up_to_order(ints({1, 0, 1}), 2);
    CHECK(!v.holds);
    CHECK(v.order == 2);
    CHECK(v.witness.find("order=2") != std::string::npos);
    // rows of the u triangle are PF
    triangle_table<Integer> u = u_triangle(2, 6);
    CHECK(is_pf_up_to_order(u.row(6), 4).holds);
    // a negative entry fails as a 1x1 minor
    CHECK(!is_pf_up_to_order({Integer(1), Integer(-2)}, 1).holds);
    // binomial rows are PF at any tested order
    CHECK(is_pf_up_to_order(ints({1, 4, 6, 4, 1}), 5, 3).holds);
}

TEST_CASE("PF order monotonicity") {
    std::vector<std::vector<Integer>> rows = {
        u_triangle(1, 7).row(7),
        w_triangle(2, 6).row(6),
        ints({1, 5, 9, 7, 2}),
        ints({0, 2, 5, 4, 1}),
    };
    for (const auto& row : rows) {
        bool prev = true;
        for (int d = 4; d >= 1; --d) {
            bool now = is_pf_up_to_order(row, d).holds;
            if (prev) CHECK(now); // PF(d) implies PF(d') for d' < d
            prev = now;
        }
    }
}

TEST_CASE("PF order 2 agrees with log-concavity on positive sequences") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> val(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Integer> u(3 + rng() % 5);
        for (auto& x : u) x = val(rng);
        CHECK(is_pf_up_to_order(u, 2).holds == is_log_concave(u).holds);
    }
}

TEST_CASE("q-log-convexity") {
    std::vector<int_poly> good = {int_poly{1}, int_poly{1, 1}, int_poly{1, 3, 1}};
    CHECK(is_q_log_convex(good).holds); // P0 P2 - P1^2 = q
    std::vector<int_poly> bad = {int_poly{1}, int_poly{0, 1}, int_poly{1}};
    sequence_verdict v = is_q_log_convex(bad);
    CHECK(!v.holds); // 1 - q^2 has a negative coefficient
    CHECK(v.witness.find("q^2") != std::string::npos);
    std::vector<int_poly> constant = {int_poly{3}, int_poly{3}, int_poly{3}};
    CHECK(is_q_log_convex(constant).holds);
    // (1, q, 1) has a negative coefficient in both directions
    CHECK(!is_q_log_convex(bad, true).holds);
    // strictly log-concave sequences hold only under the flip
    std::vector<int_poly> concave = {int_poly{1}, int_poly{1, 1}, int_poly{1, 2}};
    CHECK(!is_q_log_convex(concave).holds);
    CHECK(is_q_log_convex(concave, true).holds);
    CHECK(!is_q_log_convex(good, true).holds);
    CHECK_THROWS_AS(is_q_log_convex({int_poly{1}, int_poly{1}}), std::invalid_argument);
}

TEST_CASE("Newton inequalities") {
    CHECK(newton_inequalities(ints({1, 4, 6, 4, 1})).holds); // (1+x)^4, equality
    CHECK(!newton_inequalities(ints({1, 1, 1})).holds);      // x^2+x+1, complex roots
    CHECK(newton_inequalities(ints({0, 1, 3, 1})).holds);    // B_3 coefficients
    CHECK(newton_inequalities(ints({2, 3})).holds);          // nothing to check
    CHECK_THROWS_AS(newton_inequalities(ints({-1, 2})), negative_input);
}

TEST_CASE("real nonpositive root counting") {
    CHECK(count_real_roots_nonpositive(int_poly{1, 3, 1}).holds);  // x^2+3x+1
    CHECK(!count_real_roots_nonpositive(int_poly{1, 0, 1}).holds); // x^2+1
    CHECK(count_real_roots_nonpositive(int_poly{0, 0, 0, 1}).holds); // x^3
    CHECK(count_real_roots_nonpositive(int_poly{2}).holds);          // constant
    // repeated roots: (x+1)^2 (x+2) = x^3 + 4x^2 + 5x + 2
    CHECK(count_real_roots_nonpositive(int_poly{2, 5, 4, 1}).holds);
    // a positive root: (x-1)(x+1) = x^2 - 1
    CHECK(!count_real_roots_nonpositive(int_poly{-1, 0, 1}).holds);
    // x(x+3)
    CHECK(count_real_roots_nonpositive(int_poly{0, 3, 1}).holds);
    CHECK_THROWS_AS(count_real_roots_nonpositive(int_poly{}), std::invalid_argument);
}

TEST_CASE("real-rootedness implies Newton on the Bell sequence") {
    for (const auto& r : std::vector<std::vector<int>>{{2, 2}, {1, 3}, {2}}) {
        auto polys = bell_sequence(r, 5);
        for (const auto& p : polys) {
            if (!count_real_roots_nonpositive(p).holds) continue;
            std::vector<Integer> coeffs;
            for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i));
            CHECK(newton_inequalities(coeffs).holds);
        }
    }
}

TEST_CASE("recurrence condition certificates") {
    condition_certificate u2 = certify_recurrence_conditions(u_recurrence(2));
    CHECK(u2.lc_applicable);
    CHECK(u2.pf_applicable);
    CHECK(u2.qlc_applicable);
    for (const auto& [text, ok] : u2.lc_conditions) CHECK(ok);

    condition_certificate v1 = certify_recurrence_conditions(v_recurrence(1));
    CHECK(v1.lc_applicable);
    CHECK(v1.pf_applicable);
    CHECK(v1.qlc_applicable);

    condition_certificate w2 = certify_recurrence_conditions(w_recurrence(2));
    CHECK(!w2.lc_applicable); // a1 = -1 breaks the first condition
    CHECK(!w2.pf_applicable);
    bool found_a1 = false;
    for (const auto& [text, ok] : w2.lc_conditions)
        if (text == "a1 >= 0") {
            found_a1 = true;
            CHECK(!ok);
        }
    CHECK(found_a1);
}

TEST_CASE("proposition suite rows at small scale") {
    for (int h = 0; h <= 3; ++h) {
        triangle_table<Integer> u = u_triangle(h, 8);
        triangle_table<Integer> w = w_triangle(h, 8);
        for (int n = 0; n <= 8; ++n) {
            CHECK(is_log_concave(u.row(n)).holds);
            CHECK(is_pf_up_to_order(u.row(n), 3).holds);
            CHECK(is_pf_up_to_order(w.row(n), 3).holds);
        }
        CHECK(is_q_log_convex(row_polys(u, 6)).holds);
    }
    for (int h = 1; h <= 3; ++h) {
        triangle_table<Integer> v = v_triangle(h, 8);
        for (int n = 0; n <= 8; ++n) {
            CHECK(is_log_concave(v.row(n)).holds);
            CHECK(is_pf_up_to_order(v.row(n), 3).holds);
        }
        CHECK(is_q_log_convex(row_polys(v, 6)).holds);
    }
}

TEST_CASE("K-family rows are log-concave") {
    for (const auto& r : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {1, 1, 2}, {4}}) {
        triangle_table<Integer> t = k_family_table(r, 8);
        for (int n = 0; n <= 8; ++n) CHECK(is_log_concave(t.row(n)).holds);
    }
}

TEST_CASE("Bell-style polynomials have real nonpositive roots") {
    for (const auto& r : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {1, 2}}) {
        auto polys = bell_sequence(r, 5);
        for (const auto& p : polys) CHECK(count_real_roots_nonpositive(p).holds);
    }
}

TEST_CASE("single-restriction shifted rows are q-log-convex") {
    // P_n(q) = sum_k {n+r brace k+r}_r q^k for one restriction set; the
    // complete-graph seed makes the u-recurrence apply.
    for (int r = 0; r <= 3; ++r) {
        std::vector<int_poly> polys;
        for (int n = 0; n <= 7; ++n) {
            std::vector<Integer> c;
            for (int k = 0; k <= n; ++k) c.push_back(r_stirling2(n + r, k + r, r));
            polys.push_back(int_poly(std::move(c)));
        }
        CHECK(is_q_log_convex(polys).holds);
    }
    // same for a single star: {n+r brace k+r}_{T(r)} with r = 2 has the
    // complete graph K_2 as its seed
    std::vector<int_poly> tpolys;
    for (int n = 0; n <= 7; ++n) {
        std::vector<Integer> c;
        for (int k = 0; k <= n; ++k) c.push_back(t_stirling(n + 2, k + 2, {2}));
        tpolys.push_back(int_poly(std::move(c)));
    }
    CHECK(is_q_log_convex(tpolys).holds);
}
