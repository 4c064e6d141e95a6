#ifndef KOLMONET_ENTROPY_EXPRESSION_HPP
#define KOLMONET_ENTROPY_EXPRESSION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kolmonet/rational.hpp"

namespace kolmonet {

/// One atom of an entropy expression over named variables.
///
///   H(S|T)     -> H(S+T) - H(T)
///   C(S|T)     -> H(S+T) - H(T)            (complexity notation, same map)
///   I(S:S'|T)  -> H(S+T) + H(S'+T) - H(S+S'+T) - H(T)
///   J(S:S'|T)  -> C(S|T) + C(S'|T) - C(S+S'|T)   (expands to the same vector)
///
/// The conditional part may be empty; for H/C the second subset is unused.
struct EntropyTerm {
    enum class Kind { H, C, I, J };
    Rational coeff = Rational(1);
    Kind kind = Kind::H;
    std::vector<std::string> a;     // first subset, nonempty
    std::vector<std::string> b;     // second subset, nonempty for I/J
    std::vector<std::string> cond;  // conditioning subset, may be empty

    std::string str() const;

    /// Parses e.g. "I(q:x,y|z)", "C(B|P,A)", "H(x)"; ':' and ';' both accepted.
    static EntropyTerm parse(std::string_view text);
};

/// A linear combination of entropy atoms with rational coefficients.
/// Canonicalization maps it onto the 2^k - 1 joint-entropy coordinates H(S)
/// over a variable ordering; two expressions are equal iff the canonical
/// vectors coincide exactly.
class EntropyExpression {
public:
    EntropyExpression() = default;
    explicit EntropyExpression(EntropyTerm t) { terms_.push_back(std::move(t)); }

    /// Parses "I(q:x,y) + C(z|q,y) - I(z:x|y)", optionally with rational
    /// coefficients as in "2*C(x|y) - 1/2 I(x:y)".
    static EntropyExpression parse(std::string_view text);

    // Convenience builders; subsets are comma-separated variable lists.
    static EntropyExpression C(std::string_view s, std::string_view t = "");
    static EntropyExpression H(std::string_view s, std::string_view t = "");
    static EntropyExpression I(std::string_view s, std::string_view sp, std::string_view t = "");
    static EntropyExpression J(std::string_view s, std::string_view sp, std::string_view t = "");

    const std::vector<EntropyTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    EntropyExpression& operator+=(const EntropyExpression& o);
    EntropyExpression& operator-=(const EntropyExpression& o);
    friend EntropyExpression operator+(EntropyExpression a, const EntropyExpression& b) {
        a += b;
        return a;
    }
    friend EntropyExpression operator-(EntropyExpression a, const EntropyExpression& b) {
        a -= b;
        return a;
    }
    EntropyExpression scaled(const Rational& r) const;

    /// Sorted union of variable names mentioned anywhere in the expression.
    std::vector<std::string> variables() const;

    /// Coefficient vector over the nonempty subsets of `vars` (index mask-1).
    /// Every variable mentioned by the expression must appear in `vars`.
    std::vector<Rational> canonical(const std::vector<std::string>& vars) const;

    /// True iff the expression canonicalizes to the zero vector.
    bool canonically_zero() const;

    std::string str() const;

private:
    std::vector<EntropyTerm> terms_;
};

/// Exact equality of canonical vectors over the union variable set.
bool check_identity(const EntropyExpression& lhs, const EntropyExpression& rhs);

}  // namespace kolmonet

#endif  // KOLMONET_ENTROPY_EXPRESSION_HPP
