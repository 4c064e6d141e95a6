#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kolmonet/bitstring.hpp"
#include "support/brute_oracle.hpp"

using namespace kolmonet;

TEST_CASE("basic construction and order") {
    CHECK(BitString::parse("-").empty());
    CHECK(BitString::parse("").empty());
    CHECK(BitString::parse("0101").str() == "0101");
    CHECK(BitString::parse("0101").display() == "0101");
    CHECK(BitString().display() == "-");
    CHECK(BitString::zeros(3).str() == "000");
    CHECK(BitString::ones(3).str() == "111");
    CHECK(BitString::from_uint(0).empty());
    CHECK(BitString::from_uint(2).str() == "10");
    CHECK(BitString::from_uint(5).str() == "101");

    // length-lex: all shorter strings precede longer ones
    CHECK(BitString::parse("11") < BitString::parse("000"));
    CHECK(BitString::parse("001") < BitString::parse("010"));
    CHECK(BitString::parse("0") < BitString::parse("1"));
    CHECK(!(BitString::parse("10") < BitString::parse("10")));
}

TEST_CASE("lex_next_same_length walks the whole level") {
    auto s = BitString::zeros(3);
    int count = 1;
    while (auto nx = s.lex_next_same_length()) {
        CHECK(s < *nx);
        s = *nx;
        ++count;
    }
    CHECK(count == 8);
    CHECK(s == BitString::ones(3));
}

TEST_CASE("bit order survives block boundaries") {
    BitString s;
    std::mt19937_64 rng(7);
    std::string ref;
    for (int i = 0; i < 300; ++i) {
        bool b = (rng() >> 13) & 1;
        s.push_back(b);
        ref.push_back(b ? '1' : '0');
    }
    CHECK(s.str() == ref);
    CHECK(s.substr(60, 10).str() == ref.substr(60, 10));
    auto t = s;
    CHECK(t == s);
    t.push_back(true);
    CHECK(t != s);
    CHECK(s.is_prefix_of(t));
    CHECK(!t.is_prefix_of(s));
}

TEST_CASE("pair code fixed examples") {
    // 0^{|x|} 1 x y applied by hand
    CHECK(encode_pair(BitString::parse("0"), BitString::parse("111")).str() == "010111");
    CHECK(encode_pair(BitString(), BitString()).str() == "1");
    auto d = decode_pair(BitString::parse("001011"));
    REQUIRE(d.has_value());
    CHECK(d->first.str() == "01");
    CHECK(d->second.str() == "1");
    CHECK(encode_pair(d->first, d->second).str() == "001011");

    CHECK(!decode_pair(BitString()).has_value());
    CHECK(!decode_pair(BitString::parse("0")).has_value());
    CHECK(!decode_pair(BitString::parse("00")).has_value());
    CHECK(!decode_pair(BitString::parse("01")).has_value());   // x truncated
    CHECK(!decode_pair(BitString::parse("0010")).has_value()); // x truncated
}

TEST_CASE("pair code round trip, exhaustive |x|+|y| <= 10") {
    long checked = 0;
    for (int a = 0; a <= 10; ++a) {
        for (const auto& x : testing::universe(a)) {
            if (static_cast<int>(x.size()) != a) continue;
            for (const auto& y : testing::universe(10 - a)) {
                auto enc = encode_pair(x, y);
                CHECK(enc.size() == 2 * x.size() + y.size() + 1);
                auto dec = decode_pair(enc);
                REQUIRE(dec.has_value());
                CHECK(dec->first == x);
                CHECK(dec->second == y);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("tuple encoding is left-nested") {
    auto w = BitString::parse("1"), x = BitString::parse("00"), y = BitString::parse("1");
    CHECK(encode_tuple({w}) == w);
    CHECK(encode_tuple({w, x}) == encode_pair(w, x));
    CHECK(encode_tuple({w, x, y}) == encode_pair(w, encode_pair(x, y)));
    CHECK(encode_tuple(std::span<const BitString>{}).empty());
}
