#include "kolmonet/entropy_expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace kolmonet {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s.push_back(',');
        s += names[i];
    }
    return s;
}

std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

unsigned mask_of(const std::vector<std::string>& subset, const std::vector<std::string>& vars) {
    unsigned m = 0;
    for (const auto& name : subset) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw std::invalid_argument("variable '" + name + "' missing from canonical basis");
        m |= 1u << (it - vars.begin());
    }
    return m;
}

}  // namespace

std::string EntropyTerm::str() const {
    std::string s;
    switch (kind) {
        case Kind::H: s = "H("; break;
        case Kind::C: s = "C("; break;
        case Kind::I: s = "I("; break;
        case Kind::J: s = "J("; break;
    }
    s += join(a);
    if (kind == Kind::I || kind == Kind::J) s += ":" + join(b);
    if (!cond.empty()) s += "|" + join(cond);
    s += ")";
    return s;
}

EntropyTerm EntropyTerm::parse(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) throw std::invalid_argument("empty entropy term");
    EntropyTerm t;
    switch (text[i]) {
        case 'H': t.kind = Kind::H; break;
        case 'C': t.kind = Kind::C; break;
        case 'I': t.kind = Kind::I; break;
        case 'J': t.kind = Kind::J; break;
        default: throw std::invalid_argument("unknown term kind in '" + std::string(text) + "'");
    }
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("expected '(' in '" + std::string(text) + "'");
    auto close = text.rfind(')');
    if (close == std::string_view::npos || close <= i)
        throw std::invalid_argument("expected ')' in '" + std::string(text) + "'");
    std::string_view inner = text.substr(i + 1, close - i - 1);

    std::string_view args = inner;
    auto bar = inner.find('|');
    if (bar != std::string_view::npos) {
        args = inner.substr(0, bar);
        t.cond = split_names(inner.substr(bar + 1));
        if (t.cond.empty()) throw std::invalid_argument("empty condition in '" + std::string(text) + "'");
    }
    auto sep = args.find_first_of(":;");
    if (t.kind == Kind::I || t.kind == Kind::J) {
        if (sep == std::string_view::npos)
            throw std::invalid_argument("I/J term needs two subsets: '" + std::string(text) + "'");
        t.a = split_names(args.substr(0, sep));
        t.b = split_names(args.substr(sep + 1));
        if (t.a.empty() || t.b.empty())
            throw std::invalid_argument("empty subset in '" + std::string(text) + "'");
    } else {
        if (sep != std::string_view::npos)
            throw std::invalid_argument("H/C term takes one subset: '" + std::string(text) + "'");
        t.a = split_names(args);
        if (t.a.empty()) throw std::invalid_argument("empty subset in '" + std::string(text) + "'");
    }
    return t;
}

EntropyExpression EntropyExpression::parse(std::string_view text) {
    EntropyExpression e;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        Rational sign(1);
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = Rational(-1);
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in expression");
        }
        skip_ws();
        // optional rational coefficient, then optional '*'
        std::size_t num_start = i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            ++i;
        Rational coeff(1);
        if (i > num_start) {
            coeff = Rational::parse(std::string(text.substr(num_start, i - num_start)));
            skip_ws();
            if (i < text.size() && text[i] == '*') ++i;
            skip_ws();
        }
        auto term_start = i;
        int depth = 0;
        while (i < text.size()) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') {
                --depth;
                if (depth == 0) {
                    ++i;
                    break;
                }
            }
            ++i;
        }
        auto t = EntropyTerm::parse(text.substr(term_start, i - term_start));
        t.coeff = sign * coeff;
        e.terms_.push_back(std::move(t));
        skip_ws();
        first = false;
    }
    if (e.terms_.empty()) throw std::invalid_argument("empty expression");
    return e;
}

EntropyExpression EntropyExpression::C(std::string_view s, std::string_view t) {
    EntropyTerm term;
    term.kind = EntropyTerm::Kind::C;
    term.a = split_names(s);
    term.cond = split_names(t);
    return EntropyExpression(term);
}

EntropyExpression EntropyExpression::H(std::string_view s, std::string_view t) {
    auto e = C(s, t);
    e.terms_.front().kind = EntropyTerm::Kind::H;
    return e;
}

EntropyExpression EntropyExpression::I(std::string_view s, std::string_view sp,
                                       std::string_view t) {
    EntropyTerm term;
    term.kind = EntropyTerm::Kind::I;
    term.a = split_names(s);
    term.b = split_names(sp);
    term.cond = split_names(t);
    return EntropyExpression(term);
}

EntropyExpression EntropyExpression::J(std::string_view s, std::string_view sp,
                                       std::string_view t) {
    auto e = I(s, sp, t);
    e.terms_.front().kind = EntropyTerm::Kind::J;
    return e;
}

EntropyExpression& EntropyExpression::operator+=(const EntropyExpression& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

EntropyExpression& EntropyExpression::operator-=(const EntropyExpression& o) {
    for (auto t : o.terms_) {
        t.coeff = -t.coeff;
        terms_.push_back(std::move(t));
    }
    return *this;
}

EntropyExpression EntropyExpression::scaled(const Rational& r) const {
    EntropyExpression e = *this;
    for (auto& t : e.terms_) t.coeff = t.coeff * r;
    return e;
}

std::vector<std::string> EntropyExpression::variables() const {
    std::set<std::string> s;
    for (const auto& t : terms_) {
        s.insert(t.a.begin(), t.a.end());
        s.insert(t.b.begin(), t.b.end());
        s.insert(t.cond.begin(), t.cond.end());
    }
    return {s.begin(), s.end()};
}

std::vector<Rational> EntropyExpression::canonical(const std::vector<std::string>& vars) const {
    std::vector<Rational> v((1u << vars.size()) - 1, Rational(0));
    auto add = [&](unsigned mask, const Rational& c) {
        if (mask == 0) return;  // H(empty) = 0
        v[mask - 1] = v[mask - 1] + c;
    };
    for (const auto& t : terms_) {
        unsigned A = mask_of(t.a, vars);
        unsigned T = mask_of(t.cond, vars);
        switch (t.kind) {
            case EntropyTerm::Kind::H:
            case EntropyTerm::Kind::C:
                add(A | T, t.coeff);
                add(T, -t.coeff);
                break;
            case EntropyTerm::Kind::I: {
                unsigned B = mask_of(t.b, vars);
                add(A | T, t.coeff);
                add(B | T, t.coeff);
                add(A | B | T, -t.coeff);
                add(T, -t.coeff);
                break;
            }
            case EntropyTerm::Kind::J: {
                // literal expansion of J's definition via three C atoms
                unsigned B = mask_of(t.b, vars);
                add(A | T, t.coeff);
                add(T, -t.coeff);
                add(B | T, t.coeff);
                add(T, -t.coeff);
                add(A | B | T, -t.coeff);
                add(T, t.coeff);
                break;
            }
        }
    }
    return v;
}

bool EntropyExpression::canonically_zero() const {
    auto vars = variables();
    if (vars.empty()) return true;
    for (const auto& c : canonical(vars))
        if (!c.is_zero()) return false;
    return true;
}

std::string EntropyExpression::str() const {
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.is_negative()) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.is_negative() ? " - " : " + ";
            if (c.is_negative()) c = -c;
        }
        if (!(c == Rational(1))) s += c.str() + "*";
        s += t.str();
    }
    return s;
}

bool check_identity(const EntropyExpression& lhs, const EntropyExpression& rhs) {
    return (lhs - rhs).canonically_zero();
}

}  // namespace kolmonet
