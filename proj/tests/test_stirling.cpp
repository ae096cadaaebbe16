#include <catch2/catch_amalgamated.hpp>

#include "chromatic/chromatic.hpp"
#include "chromatic/partition_oracle.hpp"
#include "chromatic/stirling.hpp"

using namespace chromatic;

namespace {

// Oracle-side restriction matching a family table's r vector.
Integer oracle_count(const std::string& family, const std::vector<int>& r, int n, int k) {
    restriction_spec s;
    s.n = n;
    int next = 1;
    for (int ri : r) {
        std::vector<int> block;
        for (int j = 0; j < ri; ++j) block.push_back(next++);
        s.blocks.push_back(block);
    }
    if (family == "multi") s.mode = restriction_mode::distinct_within;
    if (family == "k") s.mode = restriction_mode::cross_distinct;
    if (family == "t") s.mode = restriction_mode::min_separated;
    return count_restricted_partitions(s, k);
}

} // namespace

TEST_CASE("classical Stirling values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 6) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
    triangle_table<Integer> t = classical_table(5);
    CHECK(t.row(5) == std::vector<Integer>{0, 1, 15, 25, 10, 1});
}

TEST_CASE("r-Stirling values") {
    CHECK(r_stirling2(2, 2, 2) == 1);
    CHECK(r_stirling2(3, 3, 3) == 1);
    CHECK(r_stirling2(5, 2, 2) == 8);  // {n+r brace r}_r = r^n with n=3
    CHECK(r_stirling2(4, 2, 2) == 4);
    CHECK(r_stirling2(1, 1, 2) == 0);  // below support
    CHECK(r_stirling2(5, 1, 2) == 0);
    CHECK(r_stirling2(4, 2, 0) == stirling2(4, 2));
    CHECK_THROWS_AS(r_stirling2(3, 2, -1), std::invalid_argument);
}

TEST_CASE("multi-restricted values") {
    CHECK(multi_r_stirling(5, 3, {2, 2}) == 14);
    CHECK(multi_r_stirling(4, 2, {2, 2}) == 2);
    CHECK(multi_r_stirling(7, 3, {2, 3}) == 54); // 3^2 * (3)_2
    CHECK(multi_r_stirling(3, 2, {2, 2}) == 0);  // below support
    CHECK(multi_r_stirling(6, 1, {2, 2}) == 0);  // k below max(r)
    // single restriction reduces to the r-Stirling numbers
    for (int r = 0; r <= 4; ++r)
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(multi_r_stirling(n, k, {r}) == r_stirling2(n, k, r));
    // zero and one sized restrictions are vacuous
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(multi_r_stirling(n, k, {}) == stirling2(n, k));
            if (n >= 3) CHECK(multi_r_stirling(n, k, {1, 1, 1}) == stirling2(n, k));
            if (n >= 3) CHECK(multi_r_stirling(n, k, {0, 1, 2}) == r_stirling2(n, k, 2));
        }
}

TEST_CASE("K-family values") {
    CHECK(k_stirling(5, 2, {2, 3}) == 1);      // {|r| brace p}_K = 1
    CHECK(k_stirling(5, 3, {2, 3}) == 4);      // 2^1 + 2^2 - 2
    CHECK(k_stirling(4, 2, {1, 1}) == 4);      // reduces to {4 brace 2}_2
    CHECK(k_stirling(6, 2, {2, 4}) == 1);
    CHECK(k_stirling(6, 3, {2, 4}) == 2 + 8 - 2);
    CHECK(k_stirling(4, 1, {2, 2}) == 0);      // k < p
    CHECK(k_stirling(3, 2, {2, 2}) == 0);      // n < |r|
    // p = 1 degenerates to the classical numbers
    for (int n = 3; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(k_stirling(n, k, {3}) == stirling2(n, k));
}

TEST_CASE("T-family values") {
    // all sizes 1: classical
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t_stirling(n, k, {1, 1}) == stirling2(n, k));
    // initial values 2^{n+p-1} and 3^{n+p-1} 2^{|r|-p-1} - 2^{n+p-1}
    CHECK(t_stirling(5, 2, {2, 2}) == 4);
    CHECK(t_stirling(5, 3, {2, 2}) == 14);
    CHECK(t_stirling(6, 2, {2, 3}) == 4);
    CHECK(t_stirling(4, 2, {3}) == 2);         // 2^{n+p-1} at n = p = 1
    CHECK(t_stirling(4, 3, {2}) == 9 - 4);     // 3^n - 2^n at n = 2
    CHECK(t_stirling(2, 1, {2}) == 0);         // min-separated pair can't share
    CHECK(t_stirling(2, 2, {2}) == 1);
}

TEST_CASE("family tables agree with the partition oracle") {
    struct fixture {
        std::string family;
        std::vector<int> r;
    };
    std::vector<fixture> fixtures = {
        {"multi", {}},   {"multi", {2}},    {"multi", {3}},    {"multi", {2, 2}},
        {"multi", {2, 3}}, {"multi", {1, 2, 2}}, {"k", {2, 2}}, {"k", {2, 3}},
        {"k", {1, 1, 2}}, {"k", {4}},       {"t", {2}},        {"t", {2, 2}},
        {"t", {3, 2}},   {"t", {1, 2, 2}},  {"t", {4}},
    };
    for (const auto& f : fixtures) {
        triangle_table<Integer> table = f.family == "multi" ? multi_r_table(f.r, 9)
                                        : f.family == "k"   ? k_family_table(f.r, 9)
                                                            : t_family_table(f.r, 9);
        int total = 0;
        for (int x : f.r) total += x;
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) {
                INFO(f.family << " r size " << f.r.size() << " n=" << n << " k=" << k);
                if (n < total)
                    CHECK(table.at(n, k) == 0); // the restriction does not fit in [n]
                else
                    CHECK(table.at(n, k) == oracle_count(f.family, f.r, n, k));
            }
    }
}

TEST_CASE("graph/number duality") {
    // multi <-> union of complete graphs, k <-> complete multipartite,
    // t <-> star forest, each padded with isolated vertices.
    std::vector<std::vector<int>> rs = {{2}, {2, 2}, {2, 3}, {1, 2}};
    for (const auto& r : rs) {
        int total = 0;
        graph complete_union, star_forest;
        for (int ri : r) {
            total += ri;
            complete_union = disjoint_union(complete_union, make_complete(ri));
            star_forest = disjoint_union(star_forest, make_star(ri));
        }
        graph multipartite = make_complete_multipartite(r);
        for (int n = 0; n <= 4; ++n) {
            auto a_multi = alpha_coeffs(disjoint_union(complete_union, make_empty(n)));
            auto a_k = alpha_coeffs(disjoint_union(multipartite, make_empty(n)));
            auto a_t = alpha_coeffs(disjoint_union(star_forest, make_empty(n)));
            for (int k = 0; k <= n + total; ++k) {
                CHECK(multi_r_stirling(n + total, k, r) == a_multi.coeff(k));
                CHECK(k_stirling(n + total, k, r) == a_k.coeff(k));
                CHECK(t_stirling(n + total, k, r) == a_t.coeff(k));
            }
        }
    }
}

TEST_CASE("finite-difference closed forms") {
    for (int n = 5; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(multi_r_stirling_fd(n, k, {2, 3}) == multi_r_stirling(n, k, {2, 3}));
            CHECK(t_stirling_fd(n, k, {2, 3}) == t_stirling(n, k, {2, 3}));
        }
    CHECK(multi_r_stirling_fd(7, 3, {2, 3}) == 54);
    CHECK(t_stirling_fd(5, 2, {2, 2}) == 4);
}

TEST_CASE("Bell polynomials") {
    CHECK(bell_polynomial(0) == int_poly{1});
    CHECK(bell_polynomial(1) == int_poly{0, 1});
    CHECK(bell_polynomial(3) == int_poly{0, 1, 3, 1});

    auto single = bell_sequence({3}, 0);
    CHECK(single[0] == int_poly{0, 1, 3, 1});

    // with r = (1): values at 1 are the Bell numbers B_{n+1}
    auto seq = bell_sequence({1}, 5);
    Integer bell[] = {1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 5; ++n) CHECK(seq[n](Integer(1)) == bell[n]);

    // coefficients match the K family
    for (const auto& r : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {1, 1}}) {
        int total = 0;
        for (int x : r) total += x;
        auto polys = bell_sequence(r, 4);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n + total; ++k)
                CHECK(polys[n].coeff(k) == k_stirling(n + total, k, r));
    }
}

TEST_CASE("custom triangles from recurrence specs") {
    // U with h = 0 is the classical triangle
    triangle_table<Integer> u0 = u_triangle(0, 8);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(u0.at(n, k) == stirling2(n, k));

    // U with h = 2, row 1 matches alpha of O_1 u K_2
    triangle_table<Integer> u2 = u_triangle(2, 6);
    CHECK(u2.at(1, 0) == 2);
    CHECK(u2.at(1, 1) == 1);
    auto alpha = alpha_coeffs(disjoint_union(make_empty(1), make_complete(2)));
    CHECK(u2.at(1, 0) == alpha.coeff(2));
    CHECK(u2.at(1, 1) == alpha.coeff(3));

    // U rows are the h-shifted h-Stirling rows: alpha_{k+h}(O_n u K_h)
    for (int h = 0; h <= 3; ++h) {
        triangle_table<Integer> u = u_triangle(h, 7);
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k) CHECK(u.at(n, k) == r_stirling2(n + h, k + h, h));
    }

    // W rows match alpha_{k+h}(K_n u K_h)
    for (int h = 0; h <= 3; ++h) {
        triangle_table<Integer> w = w_triangle(h, 6);
        for (int n = 0; n <= 6; ++n) {
            auto a = alpha_coeffs(disjoint_union(make_complete(n), make_complete(h)));
            for (int k = 0; k <= n; ++k) CHECK(w.at(n, k) == a.coeff(k + h));
        }
    }

    // V triangle with parameter h equals U with h-1
    for (int h = 1; h <= 3; ++h) {
        triangle_table<Integer> v = v_triangle(h, 6);
        triangle_table<Integer> u = u_triangle(h - 1, 6);
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) CHECK(v.at(n, k) == u.at(n, k));
    }

    // beyond-support entries are zero
    triangle_table<Integer> w2 = w_triangle(2, 6);
    CHECK(w2.at(6, 1) == 0); // alpha_3(K_6 u K_2) = 0 below chi = 6
}

TEST_CASE("custom triangle error paths") {
    CHECK_THROWS_AS(v_triangle(0, 3), negative_entry);
    recurrence_spec bad{Rational(-1), Rational(0), Rational(0),
                        Rational(0),  Rational(0), Rational(1)};
    CHECK_THROWS_AS(generate_triangle(bad, 2), negative_entry);
    recurrence_spec zero_seed = u_recurrence(1);
    zero_seed.seed = 0;
    CHECK_THROWS_AS(generate_triangle(zero_seed, 2), std::invalid_argument);
    // rational specs stay rational; integer conversion rejects them
    recurrence_spec halves = u_recurrence(1);
    halves.seed = Rational(1, 2);
    CHECK_THROWS_AS(to_integer_table(generate_triangle(halves, 2)), nondivisible);
}

TEST_CASE("table access rules") {
    triangle_table<Integer> t = classical_table(4);
    CHECK(t.at(-1, 0) == 0);
    CHECK(t.at(3, -1) == 0);
    CHECK(t.at(3, 4) == 0);
    CHECK_THROWS_AS(t.at(5, 1), std::out_of_range);
    CHECK(t.n_max() == 4);
    CHECK(t.family() == "classical");
}
