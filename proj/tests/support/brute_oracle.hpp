#ifndef KOLMONET_TESTS_BRUTE_ORACLE_HPP
#define KOLMONET_TESTS_BRUTE_ORACLE_HPP

#include <map>

#include "kolmonet/description_system.hpp"
#include "kolmonet/oracle.hpp"

namespace kolmonet::testing {

/// Independent oracle: literally enumerates every program string in
/// length-lex order and takes the first one whose run output matches. Kept
/// free of the case analysis the production oracle uses.
inline CQuery brute_force_complexity(const DescriptionSystem& sys, const BitString& u,
                                     const BitString& v, int budget) {
    for (int len = 0; len <= budget; ++len) {
        BitString p = BitString::zeros(len);
        while (true) {
            if (sys.run(p, v).is(u)) return {true, len, p};
            auto nx = p.lex_next_same_length();
            if (!nx) break;
            p = *nx;
        }
    }
    return {};
}

/// Minimal program length for every output reachable from `v` within the
/// budget, again by literal enumeration.
inline std::map<BitString, int> brute_force_reachable(const DescriptionSystem& sys,
                                                      const BitString& v, int budget) {
    std::map<BitString, int> out;
    for (int len = 0; len <= budget; ++len) {
        BitString p = BitString::zeros(len);
        while (true) {
            auto r = sys.run(p, v);
            if (r.status == RunStatus::Value) out.emplace(r.value, len);
            auto nx = p.lex_next_same_length();
            if (!nx) break;
            p = *nx;
        }
    }
    return out;
}

/// All strings of length <= n in length-lex order.
inline std::vector<BitString> universe(int n) {
    std::vector<BitString> us;
    for (int len = 0; len <= n; ++len) {
        BitString s = BitString::zeros(len);
        while (true) {
            us.push_back(s);
            auto nx = s.lex_next_same_length();
            if (!nx) break;
            s = *nx;
        }
    }
    return us;
}

}  // namespace kolmonet::testing

#endif  // KOLMONET_TESTS_BRUTE_ORACLE_HPP
