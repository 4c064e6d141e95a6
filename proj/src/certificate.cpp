#include "kolmonet/certificate.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kolmonet {

bool check_certificate(const EntropyExpression& target, const Certificate& cert) {
    for (const auto& it : cert.items) {
        if (it.coeff.is_negative())
            throw std::invalid_argument("certificate coefficient must be nonnegative: " +
                                        it.coeff.str());
    }
    return (target - cert.sum()).canonically_zero();
}

LemmaCertificate load_certificate(std::istream& in, const std::string& name) {
    LemmaCertificate lc;
    lc.name = name;
    enum class Section { None, Target, Cert } section = Section::None;
    std::string line;
    std::size_t lineno = 0;
    bool have_target = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body == "[target]") {
            section = Section::Target;
            continue;
        }
        if (body == "[certificate]") {
            section = Section::Cert;
            continue;
        }
        auto tab = body.find_first_of(" \t");
        if (section == Section::None || tab == std::string::npos)
            throw std::runtime_error(name + " line " + std::to_string(lineno) +
                                     ": expected 'coeff<TAB>term' inside a section");
        Rational coeff = Rational::parse(body.substr(0, tab));
        auto term = EntropyTerm::parse(body.substr(tab + 1));
        if (section == Section::Target) {
            term.coeff = coeff;
            lc.target += EntropyExpression(term);
            have_target = true;
        } else {
            lc.cert.items.push_back({coeff, term});
        }
    }
    if (!have_target) throw std::runtime_error(name + ": no [target] section");
    return lc;
}

LemmaCertificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file " + path);
    auto slash = path.find_last_of('/');
    return load_certificate(in, slash == std::string::npos ? path : path.substr(slash + 1));
}

}  // namespace kolmonet
