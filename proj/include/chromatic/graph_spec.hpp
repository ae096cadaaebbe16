#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "chromatic/graph.hpp"

namespace chromatic {

// Parser for the graph-spec mini-language:
//
//   spec     := term ("+" term)*
//   term     := "O(" INT ")" | "K(" INT ")" | "T(" INT ")"
//             | "KM(" INT ("," INT)+ ")"
//             | "E(" INT ";" edgelist ")"
//   edgelist := INT "-" INT ("," INT "-" INT)*
//
// "+" is disjoint union, T is the star representative, KM the complete
// multipartite graph, E an explicit edge list on INT vertices.
// Whitespace is ignored everywhere.
namespace detail {

class spec_parser {
public:
    explicit spec_parser(std::string_view s) : s_(s) {}

    graph parse() {
        graph g = term();
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            g = disjoint_union(g, term());
            skip_ws();
        }
        if (pos_ != s_.size()) fail("trailing input");
        return g;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("graph spec: " + why + " at position " + std::to_string(pos_) +
                          " in \"" + std::string(s_) + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) fail("integer too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    graph term() {
        char c = peek();
        ++pos_;
        switch (c) {
            case 'O': {
                expect('(');
                int n = integer();
                expect(')');
                return make_empty(n);
            }
            case 'T': {
                expect('(');
                int n = integer();
                expect(')');
                return make_star(n);
            }
            case 'K': {
                if (pos_ < s_.size() && s_[pos_] == 'M') {
                    ++pos_;
                    expect('(');
                    std::vector<int> parts{integer()};
                    expect(',');
                    parts.push_back(integer());
                    while (peek() == ',') {
                        ++pos_;
                        parts.push_back(integer());
                    }
                    expect(')');
                    for (int r : parts)
                        if (r < 1) fail("multipartite part size must be >= 1");
                    return make_complete_multipartite(parts);
                }
                expect('(');
                int n = integer();
                expect(')');
                return make_complete(n);
            }
            case 'E': {
                expect('(');
                int n = integer();
                expect(';');
                std::vector<graph::edge> edges;
                while (true) {
                    int u = integer();
                    expect('-');
                    int v = integer();
                    if (u == v) fail("self-loop in edge list");
                    if (u >= n || v >= n) fail("edge endpoint out of range");
                    edges.push_back({u, v});
                    if (peek() != ',') break;
                    ++pos_;
                }
                expect(')');
                return graph(n, std::move(edges));
            }
            default:
                fail("expected O, K, T, KM or E");
        }
    }
};

} // namespace detail

inline graph parse_graph_spec(std::string_view spec) { return detail::spec_parser(spec).parse(); }

} // namespace chromatic
