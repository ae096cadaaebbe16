// Command-line front end: chromatic polynomials, restricted Stirling
// triangles, identity verification and sequence property checks.
//
// Exit codes: 0 success / property holds, 1 identity or property failure,
// 2 usage or parse error, 3 size cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromatic/all.hpp"

namespace {

using namespace chromatic;

struct common_opts {
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, common_opts& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

void emit(const common_opts& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot write " + c.out);
        f << text;
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw parse_error("bad integer list entry: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<Integer> to_integers(const std::vector<int>& v) {
    return std::vector<Integer>(v.begin(), v.end());
}

triangle_table<Integer> build_family_table(const std::string& family, const std::vector<int>& r,
                                           int h, int n_max) {
    if (family == "classical") return classical_table(n_max);
    if (family == "r") {
        if (r.size() != 1) throw parse_error("family 'r' needs --r with exactly one value");
        return r_stirling_table(r[0], n_max);
    }
    if (family == "multi") return multi_r_table(r, n_max);
    if (family == "k") return k_family_table(r, n_max);
    if (family == "t") return t_family_table(r, n_max);
    if (family == "u") return u_triangle(h, n_max);
    if (family == "v") return v_triangle(h, n_max);
    if (family == "w") return w_triangle(h, n_max);
    throw parse_error("unknown family: " + family);
}

std::string table_text(const triangle_table<Integer>& t) {
    std::ostringstream os;
    for (int n = 0; n <= t.n_max(); ++n) {
        os << n << ": ";
        for (int k = 0; k <= n; ++k) os << (k ? "," : "") << t.at(n, k);
        os << '\n';
    }
    return os.str();
}

std::string table_csv(const triangle_table<Integer>& t) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (int n = 0; n <= t.n_max(); ++n)
        for (int k = 0; k <= n; ++k) os << n << ',' << k << ',' << t.at(n, k) << '\n';
    return os.str();
}

int cmd_poly(const std::string& spec, const common_opts& c, int cap, bool alpha_only) {
    graph g = parse_graph_spec(spec);
    chromatic_result res = analyze(g, cap);
    std::ostringstream os;
    if (c.format == "json") {
        json j;
        if (!alpha_only) j["poly"] = poly_to_json(res.poly);
        j["alpha"] = ff_to_json(res.alpha);
        j["chi"] = res.chromatic_number;
        os << j.dump() << '\n';
    } else if (c.format == "csv") {
        os << "k,alpha\n";
        for (int k = 0; k <= res.alpha.max_index(); ++k)
            os << k << ',' << res.alpha.coeff(k) << '\n';
    } else if (alpha_only) {
        os << "alpha: " << to_string(res.alpha) << "; chi=" << res.chromatic_number << '\n';
    } else {
        os << to_string(res.poly) << "; ff: " << to_string(res.alpha)
           << "; chi=" << res.chromatic_number << '\n';
    }
    emit(c, os.str());
    return 0;
}

int cmd_stirling(const std::string& family, int rows, const std::vector<int>& r, int h,
                 const std::string& cache_dir, const common_opts& c) {
    triangle_table<Integer> t = [&] {
        if (cache_dir.empty()) return build_family_table(family, r, h, rows);
        std::vector<int> key = (family == "u" || family == "v" || family == "w")
                                   ? std::vector<int>{h}
                                   : r;
        return load_or_generate(cache_dir, family, key, rows,
                                [&] { return build_family_table(family, r, h, rows); });
    }();
    if (c.format == "json")
        emit(c, table_to_json(t).dump() + "\n");
    else if (c.format == "csv")
        emit(c, table_csv(t));
    else
        emit(c, table_text(t));
    return 0;
}

int cmd_bell(const std::vector<int>& r, int n_max, const common_opts& c) {
    auto polys = bell_sequence(r, n_max);
    std::ostringstream os;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& p : polys) arr.push_back(poly_to_json(p));
        os << arr.dump() << '\n';
    } else if (c.format == "csv") {
        os << "n,k,value\n";
        for (std::size_t n = 0; n < polys.size(); ++n)
            for (int k = 0; k <= polys[n].degree(); ++k)
                os << n << ',' << k << ',' << polys[n].coeff(k) << '\n';
    } else {
        for (std::size_t n = 0; n < polys.size(); ++n)
            os << "n=" << n << ": " << to_string(polys[n]) << '\n';
    }
    emit(c, os.str());
    return 0;
}

int cmd_verify(const std::string& id, const identity_options& opt, const common_opts& c) {
    std::vector<verification_report> reports;
    if (id == "all") {
        for (const auto& [name, desc] : identity_catalog()) reports.push_back(verify_identity(name, opt));
    } else {
        reports.push_back(verify_identity(id, opt));
    }
    std::ostringstream os;
    bool all_pass = true;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            all_pass = all_pass && r.pass;
        }
        os << arr.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            os << (r.pass ? "PASS " : "FAIL ") << r.identity << " [" << r.scope << "] instances="
               << r.instances;
            if (!r.pass) os << " counterexample: " << r.counterexample;
            os << '\n';
        }
    }
    emit(c, os.str());
    return all_pass ? 0 : 1;
}

struct check_source {
    std::string inline_list;
    std::string family;
    std::vector<int> r;
    int h = 0;
    int row = -1;
    int n_max = 8;
    int bell_index = -1;
    bool use_bell = false;
};

std::vector<Integer> source_sequence(const check_source& s) {
    if (!s.inline_list.empty()) return to_integers(parse_int_list(s.inline_list));
    if (s.use_bell) {
        if (s.bell_index < 0) throw parse_error("--bell source needs --n");
        auto polys = bell_sequence(s.r, s.bell_index);
        std::vector<Integer> seq;
        for (int k = 0; k <= polys[s.bell_index].degree(); ++k)
            seq.push_back(polys[s.bell_index].coeff(k));
        return seq;
    }
    if (!s.family.empty()) {
        if (s.row < 0) throw parse_error("family source needs --row");
        return build_family_table(s.family, s.r, s.h, s.row).row(s.row);
    }
    throw parse_error("no sequence source: use --inline, --family or --bell");
}

std::vector<int_poly> source_polys(const check_source& s) {
    if (s.use_bell) return bell_sequence(s.r, s.n_max);
    if (s.family.empty()) throw parse_error("qlc needs --family or --bell");
    if (s.family == "u" || s.family == "v" || s.family == "w") {
        triangle_table<Integer> t = build_family_table(s.family, s.r, s.h, s.n_max);
        std::vector<int_poly> polys;
        for (int n = 0; n <= s.n_max; ++n) polys.push_back(t.row_polynomial(n));
        return polys;
    }
    // multi/k/t: the shifted row polynomials P_n(q) = sum_k T(n+|r|, k+|r|) q^k
    int shift = 0;
    for (int x : s.r) shift += x;
    triangle_table<Integer> t = build_family_table(s.family, s.r, s.h, s.n_max + shift);
    std::vector<int_poly> polys;
    for (int n = 0; n <= s.n_max; ++n) {
        std::vector<Integer> coeffs;
        for (int k = 0; k <= n; ++k) coeffs.push_back(t.at(n + shift, k + shift));
        polys.push_back(int_poly(std::move(coeffs)));
    }
    return polys;
}

int_poly source_poly(const check_source& s) {
    if (!s.inline_list.empty()) return int_poly(to_integers(parse_int_list(s.inline_list)));
    if (s.use_bell) {
        if (s.bell_index < 0) throw parse_error("--bell source needs --n");
        return bell_sequence(s.r, s.bell_index)[s.bell_index];
    }
    if (!s.family.empty()) {
        if (s.row < 0) throw parse_error("family source needs --row");
        return int_poly(build_family_table(s.family, s.r, s.h, s.row).row(s.row));
    }
    throw parse_error("no polynomial source: use --inline, --family or --bell");
}

int cmd_check(const std::string& property, const check_source& src, int order, int pad, bool flip,
              const common_opts& c) {
    sequence_verdict v;
    if (property == "lc")
        v = is_log_concave(source_sequence(src));
    else if (property == "pf")
        v = is_pf_up_to_order(source_sequence(src), order, pad);
    else if (property == "newton")
        v = newton_inequalities(source_sequence(src));
    else if (property == "qlc")
        v = is_q_log_convex(source_polys(src), flip);
    else if (property == "realroots")
        v = count_real_roots_nonpositive(source_poly(src));
    else
        throw parse_error("unknown property: " + property);
    std::ostringstream os;
    if (c.format == "json") {
        os << verdict_to_json(v).dump() << '\n';
    } else {
        os << (v.holds ? "PASS " : "FAIL ") << to_string(v.property);
        if (v.property == sequence_property::pf_up_to_order) os << "(order " << v.order << ")";
        if (!v.holds) os << " witness: " << v.witness;
        os << '\n';
    }
    emit(c, os.str());
    return v.holds ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic polynomials and restricted Stirling families"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    common_opts poly_common, alpha_common, stirling_common, bell_common, verify_common,
        check_common;

    // poly / alpha
    std::string poly_spec, alpha_spec;
    int cap = default_vertex_cap;
    auto* poly_cmd = app.add_subcommand("poly", "chromatic polynomial of a graph spec");
    poly_cmd->add_option("spec", poly_spec, "graph spec, e.g. \"K(3)+O(2)\"")->required();
    poly_cmd->add_option("--cap-vertices", cap, "vertex cap")->capture_default_str();
    add_common(poly_cmd, poly_common);

    auto* alpha_cmd = app.add_subcommand("alpha", "independent-partition counts alpha_k");
    alpha_cmd->add_option("spec", alpha_spec, "graph spec")->required();
    alpha_cmd->add_option("--cap-vertices", cap, "vertex cap");
    add_common(alpha_cmd, alpha_common);

    // stirling
    std::string family;
    int rows = 8;
    std::string r_list, cache_dir;
    int h_param = 0;
    auto* stirling_cmd = app.add_subcommand("stirling", "generate a Stirling triangle");
    stirling_cmd->add_option("family", family, "classical|r|multi|k|t|u|v|w")->required();
    stirling_cmd->add_option("--rows,rows", rows, "highest row n");
    stirling_cmd->add_option("--r", r_list, "restriction sizes, e.g. 2,3");
    stirling_cmd->add_option("--h", h_param, "h parameter for the u/v/w triangles");
    stirling_cmd->add_option("--cache", cache_dir, "directory for the JSON table cache");
    add_common(stirling_cmd, stirling_common);

    // bell
    std::string bell_r;
    int bell_nmax = 6;
    auto* bell_cmd = app.add_subcommand("bell", "Bell-style generating polynomials of the K family");
    bell_cmd->add_option("--r", bell_r, "restriction sizes, e.g. 2,2");
    bell_cmd->add_option("--nmax", bell_nmax, "last index n")->capture_default_str();
    add_common(bell_cmd, bell_common);

    // verify
    std::string identity_id;
    identity_options iopt;
    auto* verify_cmd = app.add_subcommand("verify", "verify an identity from the catalog");
    verify_cmd->add_option("id", identity_id, "I1..I14 or 'all'")->required();
    verify_cmd->add_option("--nmax", iopt.n_max, "ground-set bound")->capture_default_str();
    verify_cmd->add_option("--rsum", iopt.r_sum_max, "bound on |r|")->capture_default_str();
    verify_cmd->add_option("--pmax", iopt.p_max, "bound on p")->capture_default_str();
    verify_cmd->add_option("--tnmax", iopt.theorem_n_max, "n bound for alpha recurrences")
        ->capture_default_str();
    verify_cmd->add_option("--hmax", iopt.h_max, "vertex bound for random H")->capture_default_str();
    verify_cmd->add_option("--graphs", iopt.graphs, "number of random H")->capture_default_str();
    verify_cmd->add_option("--seed", iopt.seed, "random seed")->capture_default_str();
    verify_cmd->add_flag("--quick", iopt.quick, "reduced ranges");
    add_common(verify_cmd, verify_common);

    // check
    std::string property;
    check_source src;
    std::string check_r;
    int order = 4, pad = 2;
    bool flip = false;
    auto* check_cmd = app.add_subcommand("check", "check a sequence/polynomial property");
    check_cmd->add_option("property", property, "lc|pf|qlc|newton|realroots")->required();
    check_cmd->add_option("--inline", src.inline_list, "inline integer list, e.g. 1,3,3,1");
    check_cmd->add_option("--family", src.family, "triangle family source");
    check_cmd->add_option("--r", check_r, "restriction sizes for the family/bell source");
    check_cmd->add_option("--h", src.h, "h parameter for u/v/w sources");
    check_cmd->add_option("--row", src.row, "table row for lc/pf/newton/realroots");
    check_cmd->add_option("--nmax", src.n_max, "last polynomial index for qlc")
        ->capture_default_str();
    check_cmd->add_flag("--bell", src.use_bell, "use the Bell-style polynomials as source");
    check_cmd->add_option("--n", src.bell_index, "index into the Bell sequence");
    check_cmd->add_option("--order", order, "PF minor order bound")->capture_default_str();
    check_cmd->add_option("--pad", pad, "PF Toeplitz padding")->capture_default_str();
    check_cmd->add_flag("--flip", flip, "flip the q-log-convexity difference");
    add_common(check_cmd, check_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly_cmd->parsed()) return cmd_poly(poly_spec, poly_common, cap, false);
        if (alpha_cmd->parsed()) return cmd_poly(alpha_spec, alpha_common, cap, true);
        if (stirling_cmd->parsed())
            return cmd_stirling(family, rows, parse_int_list(r_list), h_param, cache_dir,
                                stirling_common);
        if (bell_cmd->parsed()) return cmd_bell(parse_int_list(bell_r), bell_nmax, bell_common);
        if (verify_cmd->parsed()) return cmd_verify(identity_id, iopt, verify_common);
        if (check_cmd->parsed()) {
            src.r = parse_int_list(check_r);
            return cmd_check(property, src, order, pad, flip, check_common);
        }
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const unknown_identity& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
