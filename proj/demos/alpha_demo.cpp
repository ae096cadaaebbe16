// Prints the chromatic polynomial and independent-partition counts of a
// few small graphs, then the start of the (2,3)-restricted triangle.

#include <iostream>

#include "chromatic/chromatic.hpp"
#include "chromatic/graph_spec.hpp"
#include "chromatic/stirling.hpp"

int main() {
    using namespace chromatic;

    for (const char* spec : {"K(4)", "T(5)", "K(2)+O(2)", "E(4;0-1,1-2,2-3,3-0)"}) {
        chromatic_result res = analyze(parse_graph_spec(spec));
        std::cout << spec << ":\n  P = " << to_string(res.poly)
                  << "\n  alpha = " << to_string(res.alpha) << "\n  chi = " << res.chromatic_number
                  << "\n";
    }

    std::cout << "\n(2,3)-restricted Stirling triangle up to n = 8:\n";
    triangle_table<Integer> t = multi_r_table({2, 3}, 8);
    for (int n = 5; n <= 8; ++n) {
        std::cout << "  n=" << n << ":";
        for (int k = 0; k <= n; ++k) std::cout << ' ' << t.at(n, k);
        std::cout << '\n';
    }
    return 0;
}
