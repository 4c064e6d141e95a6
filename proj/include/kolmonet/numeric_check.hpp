#ifndef KOLMONET_NUMERIC_CHECK_HPP
#define KOLMONET_NUMERIC_CHECK_HPP

#include <cstdint>

#include "kolmonet/entropy_expression.hpp"

namespace kolmonet {

struct NumericCheckResult {
    double min_value = 0.0;
    double max_value = 0.0;
    double max_abs = 0.0;
    int trials = 0;
};

/// Independent cross-check of the symbolic engine: samples random joint
/// distributions (Dirichlet(1) over alphabet^k cells), evaluates Shannon
/// entropies in bits, and reports the extremal values of the expression.
/// Deterministic given the seed. Requires k <= 5 and alphabet <= 4.
NumericCheckResult numeric_check(const EntropyExpression& expr, int trials, int alphabet,
                                 std::uint64_t seed);

}  // namespace kolmonet

#endif  // KOLMONET_NUMERIC_CHECK_HPP
