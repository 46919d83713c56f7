// Hides a scaled copy of a template in noise and compares how the inner
// product, cosine and real-valued Jaccard profiles respond.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#include "gmset/gmset.hpp"

int main()
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> noise(0.0, 0.3);

    std::vector<double> templ(24);
    for (std::size_t i = 0; i < templ.size(); ++i) {
        templ[i] = std::sin(0.5 * static_cast<double>(i)) * std::exp(-0.05 * static_cast<double>(i));
    }

    std::vector<double> signal(200);
    for (auto& v : signal) {
        v = noise(rng);
    }
    // An exact copy at lag 40 and a copy at three times the amplitude at lag 120.
    for (std::size_t i = 0; i < templ.size(); ++i) {
        signal[40 + i] = templ[i];
        signal[120 + i] = 3.0 * templ[i];
    }

    const gmset::Signal t(templ);
    const gmset::Signal s(signal);
    std::cout << std::setprecision(4);
    for (auto index : {gmset::SlideIndex::inner, gmset::SlideIndex::cosine, gmset::SlideIndex::jaccard,
                       gmset::SlideIndex::coincidence}) {
        const auto p = gmset::slide(t, s, index);
        std::cout << std::setw(12) << gmset::to_string(index) << ": best_lag=" << p.best_lag
                  << " score@40=" << p.scores[40] << " score@120=" << p.scores[120] << '\n';
    }
    return 0;
}
