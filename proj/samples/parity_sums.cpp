// Prints B(n-1) next to the even and odd parity sums H_e(n), H_o(n), and the
// same values read off their exponential generating functions.

#include <cstdlib>
#include <iostream>

#include "fubini/generating_functions.hpp"
#include "fubini/sequences.hpp"

int main(int argc, char** argv) {
    const std::size_t n_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;

    const auto he = fubini::to_sequence(fubini::gf_He(n_max));
    const auto ho = fubini::to_sequence(fubini::gf_Ho(n_max));

    std::cout << "n  B(n-1)  H_e(n)  H_o(n)  egf H_e  egf H_o\n";
    for (std::size_t n = 2; n <= n_max; ++n) {
        std::cout << n << "  " << fubini::ordered_bell(n - 1) << "  " << fubini::h_even(n) << "  "
                  << fubini::h_odd(n) << "  " << he[n] << "  " << ho[n] << '\n';
    }
}
