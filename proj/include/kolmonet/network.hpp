#ifndef KOLMONET_NETWORK_HPP
#define KOLMONET_NETWORK_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kolmonet/oracle.hpp"

namespace kolmonet {

/// The six topologies: a sender with two channels p (to node2) and q (to
/// node3), except (b) which has the single channel p.
///
///   (a) node2 has x wants y, node3 has w wants z   private {w,x}
///   (b) node2 has x wants y                        private {x}
///   (c) node2 has x wants y, node3 has y wants x   private {}
///   (d) node2 has x wants z, node3 has y wants z   private {x,y}
///   (e) node2 has x wants y, node3 has x wants z   private {x}
///   (f) node2 has x wants y, node3 has y wants z   private {x}
enum class Topology { A, B, C, D, E, F };

Topology topology_from_char(char c);
char topology_char(Topology t);

struct Instance {
    Topology topo = Topology::E;
    BitString w, x, y, z;  // roles not used by the topology stay empty

    /// Role names in canonical order: the order used for every nested tuple.
    std::vector<std::string> role_names() const;
    std::vector<BitString> role_values() const;
    BitString all_tuple() const;

    std::vector<std::string> private_roles() const;
    /// nullopt for topology (c), which has no private inputs.
    std::optional<BitString> private_tuple() const;

    std::size_t n_max() const;

    /// File format: lines "name=value", names in {w,x,y,z}, values as 0/1
    /// strings with "-" for empty; '#' starts a comment.
    static Instance load(std::istream& in, Topology t);
};

struct TransmissionPair {
    BitString p, q;  // q stays empty for topology (b)
};

struct NodeSpec {
    std::string input_name, output_name;
    BitString input, output;
    char channel;  // 'p' or 'q'
};

/// Receiver nodes in order (node2 [, node3]).
std::vector<NodeSpec> receiver_nodes(const Instance& inst);

/// The literal transmission pair: each channel carries the LIT program of the
/// receiver's output string. Feasible at epsilon = 6 on small instances.
TransmissionPair literal_pair(const Instance& inst);

struct ConditionValue {
    std::string name;
    CQuery value;
};

struct Feasibility {
    bool feasible = false;
    bool above_budget_seen = false;
    std::vector<ConditionValue> conditions;
    std::optional<int> achieved_epsilon;  // max condition value; nullopt above budget
};

/// The defining quantities of an epsilon transmission, each compared
/// strictly against epsilon.
Feasibility feasibility(const Instance& inst, const TransmissionPair& pair, int epsilon,
                        const ComplexityOracle& oracle);

struct Metrics {
    std::optional<int> achieved_epsilon;
    std::optional<int> cp, cq, cpq;
    std::optional<int> total_disclosure;    // Cpq - C([p,q] | all strings)
    std::optional<int> private_disclosure;  // Cpq - C([p,q] | private strings); 0 for (c)
};

Metrics metrics(const Instance& inst, const TransmissionPair& pair,
                const ComplexityOracle& oracle);

/// Disclosure toward an arbitrary nonempty group of roles (mask over
/// role_names() order). No formulas attach to groups other than all/private.
std::optional<int> group_disclosure(const Instance& inst, const TransmissionPair& pair,
                                    unsigned role_mask, const ComplexityOracle& oracle);

/// Slack constant for cut bounds at finite scale: 2*ceil(log2(max(n,2))) + 8,
/// with n the longest string in the instance.
int default_c_model(const Instance& inst);

struct CutChoice {
    std::vector<std::string> excluded;
    int c_b_given_a = 0;
    std::string description;
};

struct CutBoundResult {
    unsigned cut_mask = 0;  // bit0 = node2, bit1 = node3
    int bound = 0;          // best C(B|A') - |cut|*epsilon - c_model
    std::vector<CutChoice> choices;
};

/// Cut technique lower bound on the total disclosure. A is the cut's inputs,
/// B its outputs; an input may be excluded from A when the cut can rebuild it
/// from channel labels and the remaining inputs. The returned bound maximizes
/// over the valid exclusion choices.
CutBoundResult cut_bound(const Instance& inst, unsigned cut_mask, int epsilon,
                         const ComplexityOracle& oracle, int c_model);

std::vector<unsigned> available_cuts(Topology t);

enum class FormulaStatus { Value, NotAProfileFunction, NoClaim };

struct FormulaEntry {
    FormulaStatus status = FormulaStatus::NoClaim;
    int value = 0;
    std::string formula;
};

/// Conditional complexities / informations the closed forms consume. Fields
/// irrelevant to a topology are ignored.
struct FormulaInputs {
    int c_y_x = 0;   // C(y|x)
    int c_x_y = 0;   // C(x|y)
    int c_z_x = 0;   // C(z|x)
    int c_z_y = 0;   // C(z|y)
    int c_z_w = 0;   // C(z|w)
    int c_yz_x = 0;  // C(y,z|x)
    int i_xz_y = 0;  // I(x:z|y)
    int i_yz_x = 0;  // I(y:z|x)
};

FormulaInputs formula_inputs(const Instance& inst, const ComplexityOracle& oracle);

struct MinimalValues {
    FormulaEntry min_cp, min_cq, min_cpq, min_private;
};

/// The paper's closed forms for the minimal achievable quantities, as pure
/// arithmetic on the supplied values. Entries that provably depend on more
/// than the profile carry NotAProfileFunction; entries with no stated formula
/// carry NoClaim.
MinimalValues minimal_value_formulas(Topology t, const FormulaInputs& in);

}  // namespace kolmonet

#endif  // KOLMONET_NETWORK_HPP
