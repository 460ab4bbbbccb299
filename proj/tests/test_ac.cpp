#include <doctest.h>

#include "mcc/ac.hpp"
#include "mcc/rng.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

Alphabet xyz_eof() {
    return Alphabet({"X", "Y", "Z"}, std::vector<std::string>{"0.2", "0.3", "0.5"}, 2);
}
Alphabet xyz_plain() {
    return Alphabet({"X", "Y", "Z"}, std::vector<std::string>{"0.2", "0.3", "0.5"});
}

CodecConfig eof_cfg(int bits = 20) { return {bits, CodecConfig::Mode::EofIncluded}; }
CodecConfig hint_cfg(int bits = 20) { return {bits, CodecConfig::Mode::EofExcluded}; }

} // namespace

TEST_CASE("dyadic code intervals") {
    const auto i1 = ac_interval(BitString::from_string("1"));
    CHECK(i1.lo == Rational(1, 2));
    CHECK(i1.hi == Rational(1));
    const auto i01 = ac_interval(BitString::from_string("01"));
    CHECK(i01.lo == Rational(1, 4));
    CHECK(i01.hi == Rational(1, 2));
    const auto i011 = ac_interval(BitString::from_string("011"));
    CHECK(i011.lo == Rational(3, 8));
    CHECK(i011.hi == Rational(1, 2));
    CHECK_THROWS_AS(ac_interval(BitString{}), EncodeError);
}

TEST_CASE("interval heights and prefix nesting") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        BitString b;
        for (int i = 0; i < 12; ++i) {
            b.push_back(static_cast<int>(rng.next_u64() & 1));
            const auto iv = ac_interval(b);
            CHECK(iv.height() == Rational(1, BigInt(1) << b.size()));
            if (b.size() > 1) {
                BitString p;
                for (std::size_t j = 0; j + 1 < b.size(); ++j) p.push_back(b[j]);
                const auto pv = ac_interval(p);
                CHECK(pv.lo <= iv.lo);
                CHECK(iv.hi <= pv.hi);
            }
        }
    }
}

TEST_CASE("worked example: YZ encodes to 011 and back") {
    const auto m = build_cumulative(xyz_eof());
    const Word yz = {1, 2};
    CHECK(ac_encode(m, yz, eof_cfg()).str() == "011");
    CHECK(ac_decode(m, BitString::from_string("011"), eof_cfg()) == yz);
}

TEST_CASE("degenerate single-symbol alphabet encodes to nothing") {
    const auto m = build_cumulative(Alphabet({"A"}, std::vector<std::string>{"1"}));
    const Word w = {0, 0, 0};
    const BitString bits = ac_encode(m, w, hint_cfg());
    CHECK(bits.empty());
    CHECK(ac_decode(m, bits, hint_cfg(), 3) == w);
}

TEST_CASE("encoder emits the shortest fitting dyadic code") {
    const auto m = build_cumulative(xyz_plain());
    const Word xx = {0, 0};
    const BitString got = ac_encode(m, xx, hint_cfg());
    const BitString want = oracle::ac_shortest(m, xx); // dyadic subset of [0, 0.04)
    CHECK(got == want);
    CHECK(ac_interval(got).hi <= Rational(1, 25));
}

TEST_CASE("streaming output equals the exact oracle for short words") {
    const auto m = build_cumulative(xyz_plain());
    std::size_t checked_p20 = 0;
    for (std::size_t len = 1; len <= 8; ++len) {
        std::vector<Word> words;
        Word cur(len, 0);
        for (;;) {
            words.push_back(cur);
            std::size_t i = 0;
            while (i < len && ++cur[i] == 3) cur[i++] = 0;
            if (i == len) break;
        }
        for (const Word& w : words) {
            const BitString want = oracle::ac_shortest(m, w);
            CHECK(ac_encode(m, w, hint_cfg(32)) == want);
            // At the default 20-bit precision the contract covers words whose
            // interval is taller than 2^-18.
            const auto iv = word_interval(m, w);
            if (iv.height() > Rational(1, 1 << 18)) {
                CHECK(ac_encode(m, w, hint_cfg(20)) == want);
                ++checked_p20;
            }
        }
    }
    CHECK(checked_p20 > 1000);
}

TEST_CASE("appended suffixes do not change the decoded word") {
    const auto m = build_cumulative(xyz_eof());
    const Word yz = {1, 2};
    for (int len = 4; len <= 5; ++len) {
        for (std::uint32_t v = 0; v < (1u << len); ++v) {
            BitString b = BitString::from_string("011");
            for (int i = 0; i < len; ++i) b.push_back(static_cast<int>((v >> i) & 1));
            CHECK(ac_decode(m, b, eof_cfg()) == yz);
        }
    }
}

TEST_CASE("round trips over random words") {
    for (bool use_eof : {true, false}) {
        const auto a = use_eof ? alphabet2() : alphabet1();
        const auto m = build_cumulative(a);
        const CodecConfig cfg = use_eof ? eof_cfg() : hint_cfg();
        for (std::size_t len : {1, 3, 20, 100, 400}) {
            for (int i = 0; i < 30; ++i) {
                const Word w = sample_word(a, len, 900 + i * 5 + len);
                const BitString bits = ac_encode(m, w, cfg);
                const auto hint =
                    use_eof ? std::optional<std::size_t>{} : std::optional<std::size_t>{len};
                CHECK(ac_decode(m, bits, cfg, hint) == w);
            }
        }
    }
}

TEST_CASE("encode input validation") {
    const auto m = build_cumulative(xyz_eof());
    CHECK_THROWS_AS(ac_encode(m, {}, eof_cfg()), EncodeError);
    CHECK_THROWS_AS(ac_encode(m, {2, 1, 2}, eof_cfg()), EncodeError); // interior EOF
    CHECK_THROWS_AS(ac_encode(m, {1, 1}, eof_cfg()), EncodeError);    // missing EOF
    CHECK_THROWS_AS(ac_encode(m, {7, 2}, eof_cfg()), EncodeError);
    CHECK_THROWS_AS(ac_decode(m, BitString::from_string("011"), hint_cfg()), DecodeError);
}

TEST_CASE("SAC substitution worked example and fixed points") {
    const auto m = build_cumulative(xyz_eof());
    const Word yz = {1, 2};
    CHECK(sac_encode(m, yz, eof_cfg()).str() == "01010");
    CHECK(sac_decode(m, BitString::from_string("01010"), eof_cfg()) == yz);
    CHECK(substitute_ones(BitString::from_string("000")).str() == "000");
    CHECK(substitute_ones(BitString::from_string("11")).str() == "1010");
    CHECK(desubstitute_ones(BitString::from_string("1010")).str() == "11");
}

TEST_CASE("SAC rejects malformed input") {
    const auto m = build_cumulative(xyz_eof());
    CHECK_THROWS_AS(sac_decode(m, BitString::from_string("0110"), eof_cfg()), DecodeError);
    CHECK_THROWS_AS(sac_decode(m, BitString::from_string("01"), eof_cfg()), DecodeError);
}

TEST_CASE("SAC length accounting and run-length constraint") {
    const auto a = alphabet1();
    const auto m = build_cumulative(a);
    for (int i = 0; i < 40; ++i) {
        const Word w = sample_word(a, 30, 4000 + i);
        const BitString ac = ac_encode(m, w, hint_cfg());
        const BitString sac = sac_encode(m, w, hint_cfg());
        CHECK(sac.size() == ac.size() + ac.count_ones());
        CHECK(sac.count_ones() == ac.count_ones());
        CHECK(sac.no_consecutive_ones());
        CHECK(sac_decode(m, sac, hint_cfg(), 30) == w);
    }
}

TEST_CASE("AC output bits are half ones on average") {
    const auto a = alphabet1();
    const auto m = build_cumulative(a);
    double ones = 0, bits = 0;
    for (int i = 0; i < 300; ++i) {
        const Word w = sample_word(a, 400, 7100 + i);
        const BitString b = ac_encode(m, w, hint_cfg());
        ones += static_cast<double>(b.count_ones());
        bits += static_cast<double>(b.size());
    }
    CHECK(std::abs(ones / bits - 0.5) < 0.02);
    // hence the substituted stream is one third ones
    CHECK(std::abs(ones / (bits + ones) - 1.0 / 3.0) < 0.02);
}
