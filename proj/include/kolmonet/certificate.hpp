#ifndef KOLMONET_CERTIFICATE_HPP
#define KOLMONET_CERTIFICATE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kolmonet/entropy_expression.hpp"

namespace kolmonet {

/// A nonnegativity certificate: a list of (coefficient, elementary term)
/// pairs. Elementary terms are conditional entropies or conditional mutual
/// informations, which are Shannon-nonnegative; all coefficients must be >= 0.
struct Certificate {
    struct Item {
        Rational coeff;
        EntropyTerm term;
    };
    std::vector<Item> items;

    EntropyExpression sum() const {
        EntropyExpression e;
        for (const auto& it : items) {
            auto t = it.term;
            t.coeff = it.coeff;
            e += EntropyExpression(t);
        }
        return e;
    }
};

/// True iff target - sum(cert) canonicalizes to zero, i.e. the target is the
/// stated nonnegative combination of elementary Shannon terms. Throws on a
/// negative certificate coefficient.
bool check_certificate(const EntropyExpression& target, const Certificate& cert);

/// One paper lemma as shipped on disk: a target expression claimed
/// nonnegative plus its decomposition.
///
/// File format: '#' comments; a "[target]" section and a "[certificate]"
/// section, each holding one term per line as "coeff<TAB>kind(S;S'|T)" with
/// subsets as comma-separated variable names.
struct LemmaCertificate {
    std::string name;
    EntropyExpression target;
    Certificate cert;
};

LemmaCertificate load_certificate(std::istream& in, const std::string& name);
LemmaCertificate load_certificate_file(const std::string& path);

}  // namespace kolmonet

#endif  // KOLMONET_CERTIFICATE_HPP
