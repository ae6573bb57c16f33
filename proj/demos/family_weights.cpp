// Prints the genus bookkeeping and triple-point-number value for a small
// grid of family parameters.

#include <iostream>

#include "quandleforge/movie.hpp"

int main() {
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2; ++m) {
            qf::FamilyParams p;
            p.k = k;
            p.m = m;
            p.g.assign(static_cast<std::size_t>(k), 1);
            p.gprime.assign(static_cast<std::size_t>(m), 2);
            qf::FamilyReport r = qf::family_report(p);
            std::cout << "k=" << k << " m=" << m << "  components=" << r.rows.size()
                      << "  triples=" << r.triple_count
                      << "  weight=" << qf::to_display_string(r.theta_weight) << "  t(F)=" << r.t
                      << "\n";
        }
    return 0;
}
