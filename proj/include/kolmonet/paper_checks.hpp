#ifndef KOLMONET_PAPER_CHECKS_HPP
#define KOLMONET_PAPER_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kolmonet/certificate.hpp"
#include "kolmonet/numeric_check.hpp"

namespace kolmonet {

struct BundleOptions {
    std::string cert_dir;      // empty -> compiled-in data directory
    int trials = 1000;
    int alphabet = 3;
    std::uint64_t seed = 20240801;
    int max_vars = 5;          // items needing more variables are skipped
    double tolerance = 1e-9;
};

struct BundleItemResult {
    std::string name;
    enum class Kind { Identity, Inequality } kind = Kind::Identity;
    int var_count = 0;
    bool skipped = false;
    bool symbolic_ok = false;
    bool numeric_ok = false;
    double numeric_min = 0.0;
    double numeric_max_abs = 0.0;
    std::string detail;

    bool pass() const { return skipped || (symbolic_ok && numeric_ok); }
};

struct BundleReport {
    std::vector<BundleItemResult> items;
    bool all_pass = true;
    std::string halted_at;  // first failing item name, empty when all pass
};

std::string default_certificate_dir();

/// Runs the fixed list of identity/inequality checks behind the paper's
/// proofs: both chain rules, the relative chain rule, commutativity of
/// information, the cut bound, the four-variable disclosure inequality with
/// its exact difference decomposition, the footnote inequality, the
/// proof-step identity both sides of which equal I(q,z:x|y), and the
/// rewriting used for the two-hop network. Stops at the first failure.
BundleReport bundled_paper_checks(const BundleOptions& opt = {});

}  // namespace kolmonet

#endif  // KOLMONET_PAPER_CHECKS_HPP
