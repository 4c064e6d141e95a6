#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "kolmonet/paper_checks.hpp"

using namespace kolmonet;
using E = EntropyExpression;

TEST_CASE("term and expression parsing round-trips") {
    auto t = EntropyTerm::parse("I(q:x,y|z)");
    CHECK(t.kind == EntropyTerm::Kind::I);
    CHECK(t.a == std::vector<std::string>{"q"});
    CHECK((t.b == std::vector<std::string>{"x", "y"}));
    CHECK(t.cond == std::vector<std::string>{"z"});
    CHECK(t.str() == "I(q:x,y|z)");

    // ';' accepted as the subset separator, as in certificate files
    auto t2 = EntropyTerm::parse("I(P;A,B)");
    CHECK((t2.b == std::vector<std::string>{"A", "B"}));

    auto e = E::parse("I(q:x,y) + C(z|q,y) - I(z:x|y)");
    CHECK(e.terms().size() == 3);
    CHECK(check_identity(e, E::I("q", "x,y") + E::C("z", "q,y") - E::I("z", "x", "y")));

    auto scaled = E::parse("2*C(x|y) - 1/2 I(x:y)");
    CHECK(scaled.terms()[0].coeff == Rational(2));
    CHECK(scaled.terms()[1].coeff == Rational(-1, 2));

    CHECK_THROWS(EntropyTerm::parse("K(x)"));
    CHECK_THROWS(EntropyTerm::parse("C(x:y)"));
    CHECK_THROWS(EntropyTerm::parse("I(x)"));
}

TEST_CASE("identity checks: fixed examples") {
    CHECK(check_identity(E::C("x,y"), E::C("x") + E::C("y", "x")));
    CHECK(check_identity(E::I("x", "y"), E::I("y", "x")));
    CHECK(!check_identity(E::I("x", "y"), E::C("x")));
    // I and J agree at the Shannon level
    CHECK(check_identity(E::I("x", "y"), E::J("x", "y")));
    CHECK(check_identity(E::I("x", "y", "z"), E::J("x", "y", "z")));
}

TEST_CASE("certificate checks: fixed examples") {
    Certificate cut;
    cut.items.push_back({Rational(1), EntropyTerm::parse("I(P;A)")});
    auto target = E::I("P", "A,B") + E::C("B", "P,A") - E::C("B", "A");
    CHECK(check_certificate(target, cut));

    Certificate l41;
    l41.items.push_back({Rational(1), EntropyTerm::parse("I(q;y)")});
    l41.items.push_back({Rational(1), EntropyTerm::parse("C(z|q,y,x)")});
    l41.items.push_back({Rational(1), EntropyTerm::parse("I(q;x|y,z)")});
    auto t41 = E::I("q", "x,y") + E::C("z", "q,y") - E::I("z", "x", "y");
    CHECK(check_certificate(t41, l41));

    Certificate foot;
    foot.items.push_back({Rational(1), EntropyTerm::parse("C(q|z,y)")});
    auto tf = E::C("q") - E::I("y", "q") + E::C("z", "q,y") - E::C("z", "y");
    CHECK(check_certificate(tf, foot));

    // wrong certificate fails, negative coefficient rejected
    CHECK(!check_certificate(target, foot));
    Certificate neg;
    neg.items.push_back({Rational(-1), EntropyTerm::parse("I(P;A)")});
    CHECK_THROWS(check_certificate(target, neg));
}

TEST_CASE("canonicalization is idempotent and linear (random expressions)") {
    std::mt19937_64 rng(99);
    std::vector<std::string> pool = {"x", "y", "z", "u", "v"};
    auto rand_subset = [&](int max_size) {
        std::vector<std::string> s;
        int size = 1 + static_cast<int>(rng() % max_size);
        for (int i = 0; i < size; ++i) s.push_back(pool[rng() % pool.size()]);
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        EntropyTerm t;
        switch (rng() % 4) {
            case 0: t.kind = EntropyTerm::Kind::H; break;
            case 1: t.kind = EntropyTerm::Kind::C; break;
            case 2: t.kind = EntropyTerm::Kind::I; break;
            default: t.kind = EntropyTerm::Kind::J; break;
        }
        t.a = rand_subset(2);
        if (t.kind == EntropyTerm::Kind::I || t.kind == EntropyTerm::Kind::J)
            t.b = rand_subset(2);
        if (rng() % 2) t.cond = rand_subset(2);
        t.coeff = Rational(static_cast<std::int64_t>(rng() % 7) - 3,
                           1 + static_cast<std::int64_t>(rng() % 3));
        EntropyExpression a(t);

        EntropyTerm t2 = t;
        t2.coeff = Rational(1 + static_cast<std::int64_t>(rng() % 5));
        EntropyExpression b(t2);

        // linearity: canonical(a + b) == canonical(a) + canonical(b)
        auto vars = (a + b).variables();
        auto ca = a.canonical(vars);
        auto cb = b.canonical(vars);
        auto cab = (a + b).canonical(vars);
        for (std::size_t i = 0; i < cab.size(); ++i) CHECK(cab[i] == ca[i] + cb[i]);

        // idempotence: subtracting an expression from itself is zero
        CHECK((a - a).canonically_zero());
        // scaling
        auto c3 = a.scaled(Rational(3)).canonical(vars);
        for (std::size_t i = 0; i < c3.size(); ++i) CHECK(c3[i] == ca[i] * Rational(3));
    }
}

TEST_CASE("numeric_check on identities and inequalities") {
    // chain rule is an exact identity: residuals at machine precision
    auto chain = E::C("x,y") - E::C("x") - E::C("y", "x");
    auto r = numeric_check(chain, 1000, 3, 7);
    CHECK(r.max_abs < 1e-9);

    // cut-lemma target is Shannon-nonnegative
    auto cut = E::I("P", "A,B") + E::C("B", "P,A") - E::C("B", "A");
    auto r2 = numeric_check(cut, 1000, 2, 7);
    CHECK(r2.min_value >= -1e-9);
    CHECK(r2.max_value > 1e-3);  // not identically zero

    // determinism given the seed
    auto r3 = numeric_check(cut, 100, 2, 42);
    auto r4 = numeric_check(cut, 100, 2, 42);
    CHECK(r3.min_value == r4.min_value);
    CHECK(r3.max_value == r4.max_value);
}

TEST_CASE("numeric independence: I(x:y) vanishes on product distributions") {
    // evaluate I on a handful of explicit product distributions
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        double px = ((rng() >> 11) + 1.0) * 0x1.0p-53;
        double py = ((rng() >> 11) + 1.0) * 0x1.0p-53;
        double p[2][2];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                p[a][b] = (a ? px : 1 - px) * (b ? py : 1 - py);
        auto h = [](std::initializer_list<double> qs) {
            double s = 0;
            for (double q : qs)
                if (q > 0) s -= q * std::log2(q);
            return s;
        };
        double hx = h({px, 1 - px});
        double hy = h({py, 1 - py});
        double hxy = h({p[0][0], p[0][1], p[1][0], p[1][1]});
        CHECK(std::fabs(hx + hy - hxy) < 1e-9);
    }
}

TEST_CASE("bundled paper checks pass end to end") {
    BundleOptions opt;
    opt.trials = 300;  // full 1000-trial sweep runs in the acceptance suite
    auto report = bundled_paper_checks(opt);
    INFO(report.halted_at);
    CHECK(report.all_pass);
    CHECK(report.items.size() >= 10);
    for (const auto& it : report.items) {
        INFO(it.name << " " << it.detail);
        CHECK(it.pass());
        CHECK(!it.skipped);
    }
}

TEST_CASE("bundle halts with the item name on a corrupted certificate") {
    // write a corrupted cut lemma into a temp cert dir
    namespace fs = std::filesystem;
    std::string dir = "corrupt_certs";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(default_certificate_dir()))
        fs::copy_file(entry.path(), fs::path(dir) / entry.path().filename());
    {
        std::ofstream f(dir + "/cut_lemma.cert");
        f << "[target]\n1\tI(P;A,B)\n1\tC(B|P,A)\n-1\tC(B|A)\n"
          << "[certificate]\n1\tI(P;B)\n";  // wrong slack term
    }
    BundleOptions opt;
    opt.cert_dir = dir;
    opt.trials = 50;
    auto report = bundled_paper_checks(opt);
    CHECK(!report.all_pass);
    CHECK(report.halted_at == "cut-lemma");
}

TEST_CASE("bundle on 2 variables only skips larger items with notice") {
    BundleOptions opt;
    opt.max_vars = 2;
    opt.trials = 50;
    auto report = bundled_paper_checks(opt);
    CHECK(report.all_pass);
    int skipped = 0, ran = 0;
    for (const auto& it : report.items) (it.skipped ? skipped : ran)++;
    CHECK(skipped > 0);
    CHECK(ran > 0);  // the two-variable items still run
}
