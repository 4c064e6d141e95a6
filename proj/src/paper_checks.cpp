#include "kolmonet/paper_checks.hpp"

#include <cmath>

namespace kolmonet {

std::string default_certificate_dir() {
#ifdef KOLMONET_DATA_DIR
    return std::string(KOLMONET_DATA_DIR) + "/certificates";
#else
    return "data/certificates";
#endif
}

namespace {

using E = EntropyExpression;

struct Runner {
    const BundleOptions& opt;
    BundleReport& report;
    std::uint64_t item_index = 0;

    bool identity(const std::string& name, const E& lhs, const E& rhs) {
        BundleItemResult r;
        r.name = name;
        r.kind = BundleItemResult::Kind::Identity;
        E diff = lhs - rhs;
        r.var_count = static_cast<int>(diff.variables().size());
        if (r.var_count > opt.max_vars) {
            r.skipped = true;
            r.detail = "needs " + std::to_string(r.var_count) + " variables";
            report.items.push_back(r);
            return true;
        }
        r.symbolic_ok = check_identity(lhs, rhs);
        auto num = numeric_check(diff, opt.trials, opt.alphabet, opt.seed + item_index++);
        r.numeric_min = num.min_value;
        r.numeric_max_abs = num.max_abs;
        r.numeric_ok = num.max_abs < opt.tolerance;
        r.detail = diff.str();
        report.items.push_back(r);
        return r.pass();
    }

    bool inequality(const std::string& name, const LemmaCertificate& lc) {
        BundleItemResult r;
        r.name = name;
        r.kind = BundleItemResult::Kind::Inequality;
        r.var_count = static_cast<int>(lc.target.variables().size());
        if (r.var_count > opt.max_vars) {
            r.skipped = true;
            r.detail = "needs " + std::to_string(r.var_count) + " variables";
            report.items.push_back(r);
            return true;
        }
        r.symbolic_ok = check_certificate(lc.target, lc.cert);
        auto num = numeric_check(lc.target, opt.trials, opt.alphabet, opt.seed + item_index++);
        r.numeric_min = num.min_value;
        r.numeric_max_abs = num.max_abs;
        r.numeric_ok = num.min_value > -opt.tolerance;
        r.detail = lc.target.str() + " >= 0";
        report.items.push_back(r);
        return r.pass();
    }
};

}  // namespace

BundleReport bundled_paper_checks(const BundleOptions& opt_in) {
    BundleOptions opt = opt_in;
    if (opt.cert_dir.empty()) opt.cert_dir = default_certificate_dir();

    BundleReport report;
    Runner run{opt, report};

    auto fail = [&](const std::string& name) {
        report.all_pass = false;
        report.halted_at = name;
        return report;
    };

    // Chain rules
    if (!run.identity("chain-rule-pair", E::C("x,y"), E::C("x") + E::C("y", "x")))
        return fail("chain-rule-pair");
    if (!run.identity("chain-rule-conditional", E::C("x,y", "z"),
                      E::C("x", "z") + E::C("y", "x,z")))
        return fail("chain-rule-conditional");
    if (!run.identity("chain-rule-information", E::I("x,y", "u", "z"),
                      E::I("x", "u", "z") + E::I("y", "u", "x,z")))
        return fail("chain-rule-information");

    // Commutativity of information: I(x:y) = J(x:y) = I(y:x)
    if (!run.identity("commutativity-I", E::I("x", "y"), E::I("y", "x")))
        return fail("commutativity-I");
    if (!run.identity("commutativity-J", E::I("x", "y"), E::J("x", "y")))
        return fail("commutativity-J");

    // Certificates shipped as data files, one per lemma
    LemmaCertificate cut, l41, foot;
    try {
        cut = load_certificate_file(opt.cert_dir + "/cut_lemma.cert");
        l41 = load_certificate_file(opt.cert_dir + "/lemma41_inequality.cert");
        foot = load_certificate_file(opt.cert_dir + "/footnote_inequality.cert");
    } catch (const std::exception& e) {
        BundleItemResult r;
        r.name = "certificate-files";
        r.detail = e.what();
        report.items.push_back(r);
        return fail("certificate-files");
    }

    if (!run.inequality("cut-lemma", cut)) return fail("cut-lemma");
    if (!run.inequality("lemma41-inequality", l41)) return fail("lemma41-inequality");

    // The exact difference stated by the lemma: rhs - lhs equals the
    // certificate sum, as an identity.
    if (!run.identity("lemma41-exact-difference",
                      E::I("q", "x,y") + E::C("z", "q,y") - E::I("z", "x", "y"),
                      E::I("q", "y") + E::C("z", "q,y,x") + E::I("q", "x", "y,z")))
        return fail("lemma41-exact-difference");

    if (!run.inequality("footnote-inequality", foot)) return fail("footnote-inequality");

    // Proof step: both hand sides equal I(q,z:x|y)
    if (!run.identity("proof-step-lhs", E::I("q", "x", "y") + E::I("z", "x", "q,y"),
                      E::I("q,z", "x", "y")))
        return fail("proof-step-lhs");
    if (!run.identity("proof-step-rhs", E::I("z", "x", "y") + E::I("q", "x", "y,z"),
                      E::I("q,z", "x", "y")))
        return fail("proof-step-rhs");

    // Rewriting used for the two-hop network: C(z|y) - C(y,z|x) coincides
    // with I(z:x|y) - C(y|x)
    if (!run.identity("network-f-rewrite", E::C("z", "y") - E::C("y,z", "x"),
                      E::I("z", "x", "y") - E::C("y", "x")))
        return fail("network-f-rewrite");

    return report;
}

}  // namespace kolmonet
