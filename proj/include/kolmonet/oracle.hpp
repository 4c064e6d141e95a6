#ifndef KOLMONET_ORACLE_HPP
#define KOLMONET_ORACLE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kolmonet/bitstring.hpp"
#include "kolmonet/description_system.hpp"

namespace kolmonet {

/// Result of a minimal-program query. When within_budget is false no program
/// of length <= budget produces the target and value/witness are meaningless.
struct CQuery {
    bool within_budget = false;
    int value = 0;
    BitString witness;

    int expect() const {
        if (!within_budget) throw std::logic_error("complexity value above budget");
        return value;
    }
};

struct OracleConfig {
    int budget_slack = 8;   // default budget is |u| + budget_slack
    std::size_t l_max = 64; // longest string the oracle will evaluate
};

/// Exact conditional complexity over a DescriptionSystem:
/// C(u|v) = min{ |p| : run(p, v) = u }, minimized over all program strings up
/// to the budget. The program space partitions into the six opcode families,
/// so the minimum is computed by direct case analysis; tests pin this against
/// a literal enumeration of every program string.
class ComplexityOracle {
public:
    explicit ComplexityOracle(DescriptionSystem sys, OracleConfig cfg = {})
        : sys_(std::move(sys)), cfg_(cfg) {}

    const DescriptionSystem& system() const { return sys_; }
    const OracleConfig& config() const { return cfg_; }

    /// C(u|v) searched up to an explicit program-length budget.
    CQuery conditional(const BitString& u, const BitString& v, int budget) const;

    /// C(u|v) with the default budget |u| + slack (always finite: LIT).
    CQuery conditional(const BitString& u, const BitString& v) const {
        return conditional(u, v, static_cast<int>(u.size()) + cfg_.budget_slack);
    }

    /// Unconditional C(u) = C(u | empty).
    CQuery plain(const BitString& u) const { return conditional(u, BitString()); }

    int c(const BitString& u, const BitString& v) const { return conditional(u, v).expect(); }
    int c(const BitString& u) const { return plain(u).expect(); }

    /// I(x:y) = C(y) - C(y|x), the paper's asymmetric information quantity.
    int info(const BitString& x, const BitString& y) const { return c(y) - c(y, x); }

    /// I(x:y|z) = C(y|z) - C(y|[x,z]).
    int info_cond(const BitString& x, const BitString& y, const BitString& z) const {
        return c(y, z) - c(y, encode_pair(x, z));
    }

    /// J(x:y) = C(x) + C(y) - C(x,y).
    int j_info(const BitString& x, const BitString& y) const {
        return c(x) + c(y) - c(encode_pair(x, y));
    }

private:
    DescriptionSystem sys_;
    OracleConfig cfg_;
};

/// Joint complexities of every nonempty subset of 2..4 strings; subsets are
/// joined by nested pairing in ascending index order. Entry for subset mask S
/// lives at index S-1 (15 entries for k = 4).
struct Profile {
    int k = 0;
    std::vector<CQuery> joint;

    const CQuery& at(unsigned mask) const { return joint.at(mask - 1); }
};

Profile profile_of(const ComplexityOracle& oracle, std::span<const BitString> xs);

/// Max over subset pairs S within T of C(S) - C(T): the pairing overhead under
/// which this profile is monotone (0 when monotone outright).
int profile_monotonicity_overhead(const Profile& p);

struct NamedValue {
    std::string name;
    std::optional<int> value;  // nullopt = above budget
};

struct DerivedQuantities {
    Profile profile;
    std::vector<NamedValue> informations;  // all I, J, and conditional I values
};

DerivedQuantities derived_quantities(const ComplexityOracle& oracle,
                                     std::span<const BitString> xs,
                                     std::span<const std::string> names = {});

}  // namespace kolmonet

#endif  // KOLMONET_ORACLE_HPP
