// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <iostream>

#include "sympoly/verify.hpp"

int main()
{
    bool all = true;
    for (const auto& criterion : sympoly::verify::reproduction_suite()) {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = sympoly::verify::run(criterion);
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        all = all && outcome.pass;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.name
                  << " (" << took.count() << " s)\n";
        for (const auto& f : outcome.failures)
            std::cout << "    failed: " << f << '\n';
        for (const auto& n : outcome.notes)
            std::cout << "    note: " << n << '\n';
    }
    return all ? 0 : 1;
}
