// Prints the type-D Eulerian triangle and the descent-class table rows.

#include <cstdio>

#include "coxeuler/descent_tables.hpp"
#include "coxeuler/recurrences.hpp"

int main() {
    using namespace coxeuler;

    std::printf("Eulerian polynomials, type D (recurrence ladder):\n");
    EulerianLadder ladder = build_ladder(Family::D, 10);
    for (int n = 0; n <= 10; ++n)
        std::printf("  D_%-2d  %s\n", n, ladder.rows[static_cast<size_t>(n)].to_string().c_str());

    std::printf("\nDescent-class polynomials (exhaustive, ranks 2-6):\n");
    for (int n = 2; n <= 6; ++n) {
        SubTableRow row = brute_force_sub_row(n);
        std::printf("  rank %d\n", n);
        std::printf("    sub1    %s\n", row.p1.to_string().c_str());
        std::printf("    sub01   %s\n", row.p01.to_string().c_str());
        std::printf("    subge2  %s\n", row.pge2.to_string().c_str());
        std::printf("    sub0ge2 %s\n", row.p0ge2.to_string().c_str());
    }
    return 0;
}
