// Checks log-concavity and a bounded Polya-frequency certificate for
// rows of the u/v/w triangles.

#include <iostream>

#include "chromatic/analysis.hpp"
#include "chromatic/stirling.hpp"

int main() {
    using namespace chromatic;

    for (int h = 0; h <= 2; ++h) {
        triangle_table<Integer> u = u_triangle(h, 8);
        for (int n = 6; n <= 8; ++n) {
            sequence_verdict lc = is_log_concave(u.row(n));
            sequence_verdict pf = is_pf_up_to_order(u.row(n), 4, 2);
            std::cout << "u(h=" << h << ") row " << n << ": lc=" << (lc.holds ? "yes" : "no")
                      << " pf<=4=" << (pf.holds ? "yes" : "no") << '\n';
        }
    }

    condition_certificate cert = certify_recurrence_conditions(u_recurrence(2));
    std::cout << "\nu(h=2) sufficient conditions: lc=" << cert.lc_applicable
              << " pf=" << cert.pf_applicable << " qlc=" << cert.qlc_applicable << '\n';
    return 0;
}
