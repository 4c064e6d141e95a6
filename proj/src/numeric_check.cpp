#include "kolmonet/numeric_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace kolmonet {

NumericCheckResult numeric_check(const EntropyExpression& expr, int trials, int alphabet,
                                 std::uint64_t seed) {
    auto vars = expr.variables();
    const int k = static_cast<int>(vars.size());
    if (k == 0 || k > 5) throw std::invalid_argument("numeric_check needs 1..5 variables");
    if (alphabet < 2 || alphabet > 4) throw std::invalid_argument("alphabet must be 2..4");

    auto coeffs = expr.canonical(vars);
    const unsigned nsub = (1u << k) - 1;

    std::size_t cells = 1;
    for (int i = 0; i < k; ++i) cells *= alphabet;

    // cell index -> projected index for each subset, precomputed
    std::vector<std::vector<std::size_t>> proj(nsub + 1);
    std::vector<std::size_t> proj_size(nsub + 1, 1);
    for (unsigned mask = 1; mask <= nsub; ++mask) {
        proj[mask].resize(cells);
        std::size_t sz = 1;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sz *= alphabet;
        proj_size[mask] = sz;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::size_t idx = 0, c = cell;
            for (int i = 0; i < k; ++i) {
                std::size_t digit = c % alphabet;
                c /= alphabet;
                if (mask & (1u << i)) idx = idx * alphabet + digit;
            }
            proj[mask][cell] = idx;
        }
    }

    std::mt19937_64 rng(seed);
    auto unit = [&rng] {
        // top 53 bits -> (0,1]; avoids distribution implementation differences
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };

    NumericCheckResult res;
    res.trials = trials;
    std::vector<double> p(cells);
    std::vector<double> marg;
    bool first = true;
    for (int t = 0; t < trials; ++t) {
        double total = 0.0;
        for (auto& cell : p) {
            cell = -std::log(unit());
            total += cell;
        }
        for (auto& cell : p) cell /= total;

        double value = 0.0;
        for (unsigned mask = 1; mask <= nsub; ++mask) {
            if (coeffs[mask - 1].is_zero()) continue;
            marg.assign(proj_size[mask], 0.0);
            for (std::size_t cell = 0; cell < cells; ++cell) marg[proj[mask][cell]] += p[cell];
            double h = 0.0;
            for (double q : marg)
                if (q > 0.0) h -= q * std::log2(q);
            value += coeffs[mask - 1].to_double() * h;
        }
        if (first || value < res.min_value) res.min_value = value;
        if (first || value > res.max_value) res.max_value = value;
        res.max_abs = std::max(res.max_abs, std::fabs(value));
        first = false;
    }
    return res;
}

}  // namespace kolmonet
