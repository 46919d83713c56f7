// Writes one period of sine and cosine as a two-column CSV (the input used
// by `gmset signs`) and prints the split inner product of the pair.
//
//   demo_sincos_signs [samples] > sincos.csv

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <vector>

#include "gmset/gmset.hpp"

int main(int argc, char** argv)
{
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1000;
    if (n == 0) {
        std::cerr << "samples must be positive\n";
        return 2;
    }
    const double dx = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> f(n), g(n);
    std::cout << "f,g\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * dx;
        f[i] = std::sin(t);
        g[i] = std::cos(t);
        std::cout << gmset::io::format_double(f[i]) << ',' << gmset::io::format_double(g[i]) << '\n';
    }
    const auto split = gmset::split_inner(gmset::Signal(f, dx), gmset::Signal(g, dx));
    std::cerr << "same_sign=" << split.same_sign << " opposite_sign=" << split.opposite_sign
              << " inner=" << split.total() << '\n';
    return 0;
}
