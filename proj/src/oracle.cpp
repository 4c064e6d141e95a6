#include "kolmonet/oracle.hpp"

#include <algorithm>

namespace kolmonet {

namespace {

BitString lit_program(const BitString& u) {
    BitString p;
    p.push_back(true);
    p.append(u);
    return p;
}

const BitString kId = BitString::parse("01");
const BitString kApply = BitString::parse("0001");
const BitString kFst = BitString::parse("0010");
const BitString kSnd = BitString::parse("0011");
const BitString kTabPrefix = BitString::parse("0000");

}  // namespace

CQuery ComplexityOracle::conditional(const BitString& u, const BitString& v, int budget) const {
    if (u.size() > cfg_.l_max || v.size() > cfg_.l_max)
        throw std::invalid_argument("oracle query exceeds configured L_max");

    std::optional<BitString> best;
    auto offer = [&](const BitString& prog) {
        if (static_cast<int>(prog.size()) > budget) return;
        if (!best || prog < *best) best = prog;
    };

    offer(lit_program(u));
    if (u == v) offer(kId);
    if (auto pr = decode_pair(v)) {
        if (pr->first == u) offer(kFst);
        if (pr->second == u) offer(kSnd);
        if (sys_.run(kApply, v).is(u)) offer(kApply);
    }
    if (auto r = sys_.min_key(v, u)) offer(concat(kTabPrefix, *r));

    if (!best) return {};
    return {true, static_cast<int>(best->size()), *best};
}

Profile profile_of(const ComplexityOracle& oracle, std::span<const BitString> xs) {
    const int k = static_cast<int>(xs.size());
    if (k < 2 || k > 4) throw std::invalid_argument("profile needs 2..4 strings");
    Profile p;
    p.k = k;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<BitString> subset;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) subset.push_back(xs[i]);
        p.joint.push_back(oracle.conditional(encode_tuple(subset), BitString()));
    }
    return p;
}

int profile_monotonicity_overhead(const Profile& p) {
    int worst = 0;
    const unsigned full = (1u << p.k) - 1;
    for (unsigned s = 1; s <= full; ++s) {
        for (unsigned t = 1; t <= full; ++t) {
            if ((s & t) != s || s == t) continue;
            if (!p.at(s).within_budget || !p.at(t).within_budget) continue;
            worst = std::max(worst, p.at(s).value - p.at(t).value);
        }
    }
    return worst;
}

DerivedQuantities derived_quantities(const ComplexityOracle& oracle,
                                     std::span<const BitString> xs,
                                     std::span<const std::string> names) {
    DerivedQuantities d;
    d.profile = profile_of(oracle, xs);
    const int k = static_cast<int>(xs.size());

    auto name = [&](int i) {
        if (i < static_cast<int>(names.size())) return names[i];
        return "s" + std::to_string(i + 1);
    };
    auto diff = [](const CQuery& a, const CQuery& b) -> std::optional<int> {
        if (!a.within_budget || !b.within_budget) return std::nullopt;
        return a.value - b.value;
    };

    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto cy = oracle.plain(xs[j]);
            auto cyx = oracle.conditional(xs[j], xs[i]);
            d.informations.push_back(
                {"I(" + name(i) + ":" + name(j) + ")", diff(cy, cyx)});
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            auto cx = oracle.plain(xs[i]);
            auto cy = oracle.plain(xs[j]);
            auto cxy = oracle.plain(encode_pair(xs[i], xs[j]));
            std::optional<int> val;
            if (cx.within_budget && cy.within_budget && cxy.within_budget)
                val = cx.value + cy.value - cxy.value;
            d.informations.push_back({"J(" + name(i) + ":" + name(j) + ")", val});
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int l = 0; l < k; ++l) {
                if (i == j || j == l || i == l) continue;
                auto cyz = oracle.conditional(xs[j], xs[l]);
                auto cyxz = oracle.conditional(xs[j], encode_pair(xs[i], xs[l]));
                d.informations.push_back(
                    {"I(" + name(i) + ":" + name(j) + "|" + name(l) + ")", diff(cyz, cyxz)});
            }
        }
    }
    return d;
}

}  // namespace kolmonet
