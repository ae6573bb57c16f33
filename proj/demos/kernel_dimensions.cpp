// Enumerates the good involutions of a few small quandles and prints the
// dimension of the symmetric 3-cocycle kernel over Z_2 and Z_3 for each
// symmetric pairing.

#include <iostream>

#include "quandleforge/cocycle_space.hpp"
#include "quandleforge/quandle.hpp"

int main() {
    struct Entry {
        const char* name;
        qf::Quandle quandle;
    };
    const Entry entries[] = {
        {"P3", qf::make_p3()},
        {"T2", qf::trivial_quandle(2)},
        {"T3", qf::trivial_quandle(3)},
        {"R3", qf::dihedral_quandle(3)},
        {"R4", qf::dihedral_quandle(4)},
    };

    for (const Entry& e : entries) {
        auto involutions = qf::enumerate_good_involutions(e.quandle);
        std::cout << e.name << ": " << involutions.size() << " good involution"
                  << (involutions.size() == 1 ? "" : "s") << "\n";
        for (const auto& rho : involutions) {
            qf::SymmetricQuandle sq{e.quandle, rho};
            std::cout << "  rho=[";
            for (std::size_t i = 0; i < rho.perm().size(); ++i)
                std::cout << (i ? "," : "") << rho.perm()[i];
            std::cout << "]  dim Z_2 kernel = " << qf::cocycle_kernel_basis(sq, 2).dimension()
                      << ", dim Z_3 kernel = " << qf::cocycle_kernel_basis(sq, 3).dimension()
                      << "\n";
        }
    }
    return 0;
}
