// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Clauses that reproduce a
// defective printed value (see notes/decisions ledger) are asserted anyway
// and reported as "expected-fail": they do not flip the criterion, but any
// change in their outcome does.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mcc/harness.hpp"
#include "mcc/io.hpp"
#include "mcc/rng.hpp"
#include "oracles.hpp"

using namespace mcc;
using boost::multiprecision::cpp_bin_float_100;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    int expected_fails = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void check_expected_fail(bool ok, const std::string& what, const std::string& why) {
        if (ok) {
            pass = false; // the defect healed itself: somebody should look
            notes.push_back("UNEXPECTED PASS: " + what);
        } else {
            ++expected_fails;
            notes.push_back("expected-fail: " + what + " — " + why);
        }
    }
};

std::vector<Criterion> results;

void run(int id, const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c{id, name};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string suffix;
    if (c.expected_fails)
        suffix = ", " + std::to_string(c.expected_fails) + " expected-fail clause(s)";
    std::printf("%s criterion %d: %s (%.1f s%s)\n", c.pass ? "PASS" : "FAIL", id, name.c_str(),
                secs, suffix.c_str());
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    results.push_back(c);
}

Alphabet xyz_eof() {
    return Alphabet({"X", "Y", "Z"}, std::vector<std::string>{"0.2", "0.3", "0.5"}, 2);
}

constexpr std::uint64_t kSeed = 20240810;

// ---------------------------------------------------------------------- 1
void criterion1(Criterion& c) {
    const auto m = build_cumulative(xyz_eof());
    const Word yz = {1, 2};
    CodecConfig ac_cfg{20, CodecConfig::Mode::EofIncluded};
    MoacConfig mo_cfg;
    mo_cfg.mode = CodecConfig::Mode::EofIncluded;
    c.check(ac_encode(m, yz, ac_cfg).str() == "011", "ac_encode(YZ) == 011");
    c.check(sac_encode(m, yz, ac_cfg).str() == "01010", "sac_encode(YZ) == 01010");
    c.check(moac_encode(m, yz, mo_cfg).str() == "01000", "moac_encode(YZ) == 01000");
    const auto iv = moac_interval(BitString::from_string("01000"), 256);
    c.check(iv.subset_of(word_interval(m, yz)), "moac_interval(01000) within [0.35,0.5)");
}

// ---------------------------------------------------------------------- 2
void criterion2(Criterion& c) {
    for (int n = 1; n <= 20; ++n) {
        const BigInt fib_n2 = [&] { // Fibonacci(n+2) computed independently
            BigInt a = 1, b = 1;
            for (int i = 3; i <= n + 2; ++i) {
                const BigInt t = a + b;
                a = b;
                b = t;
            }
            return b;
        }();
        c.check(count_codes(n) == fib_n2, "count_codes(" + std::to_string(n) + ") == Fib(n+2)");
        c.check(count_ones(n) == BigInt(oracle::count_ones_enumerated(n)),
                "count_ones(" + std::to_string(n) + ") matches enumeration");
    }
    const double density = one_bit_density(10000);
    c.check(std::abs(density - 0.276) <= 0.001,
            "one_bit_density(1e4) = " + std::to_string(density) + " within 0.276 +- 0.001");
}

// ---------------------------------------------------------------------- 3
void criterion3(Criterion& c) {
    const int q = 256;
    const BigInt inv = inv_phi_fixed(q);
    const cpp_bin_float_100 tol("1e-30");
    BigInt power = inv;
    bool all_ok = true;
    for (int n = 1; n <= 18; ++n) {
        const BigInt expect0 = power;
        for (const auto& s : constrained_strings(n)) {
            if (s[s.size() - 1] != 0) continue;
            const auto cell = moac_cell_interval(s, q);
            const cpp_bin_float_100 rel =
                abs(cpp_bin_float_100(cell.height() - expect0)) / cpp_bin_float_100(expect0);
            if (rel >= tol) all_ok = false;
        }
        power = (power * inv) >> q;
    }
    c.check(all_ok, "all 0-terminated length-n cells share height (1/phi)^n, rel dev < 1e-30");
}

// ---------------------------------------------------------------------- 4
void criterion4(Criterion& c) {
    const auto a = alphabet_ratio();
    const auto m = build_cumulative(a);
    CodecConfig ac_cfg{20, CodecConfig::Mode::EofIncluded};
    MoacConfig mo_cfg;
    mo_cfg.mode = CodecConfig::Mode::EofIncluded;
    double sac_bits = 0, sac_ones = 0, moac_bits = 0, moac_ones = 0;
    for (int i = 0; i < 400; ++i) {
        const Word w = sample_word(a, 400, mix_seed(kSeed, 4, i));
        const BitString s = sac_encode(m, w, ac_cfg);
        const BitString mo = moac_encode(m, w, mo_cfg);
        sac_bits += static_cast<double>(s.size());
        sac_ones += static_cast<double>(s.count_ones());
        moac_bits += static_cast<double>(mo.size());
        moac_ones += static_cast<double>(mo.count_ones());
    }
    const double len_ratio = sac_bits / moac_bits;
    const double ones_ratio = sac_ones / moac_ones;
    c.check(std::abs(len_ratio - 1.0413) <= 0.02,
            "SAC/MoAC length ratio " + std::to_string(len_ratio) + " within 1.0413 +- 0.02");
    c.check(std::abs(ones_ratio - 1.257) <= 0.03,
            "SAC/MoAC 1-bit ratio " + std::to_string(ones_ratio) + " within 1.257 +- 0.03");
}

// ---------------------------------------------------------------------- 5
void criterion5(Criterion& c) {
    const auto counterexample =
        Alphabet({"a", "b", "c", "d", "e"},
                 std::vector<std::string>{"0.201", "0.201", "0.201", "0.199", "0.198"});
    c.check(std::abs(mopc_star(counterexample).expected_length() - 3.397) < 1e-9,
            "five-symbol counterexample expected length 3.397");
    const auto three = mopc_star(
        Alphabet({"a", "b", "c"}, std::vector<std::string>{"0.4", "0.3", "0.3"}));
    c.check(std::abs(three.expected_length() - 2.3) < 1e-12, "three-symbol expected length 2.3");
    c.check(std::abs(three.expected_ones() - 0.6) < 1e-12, "three-symbol expected ones 0.6");

    const auto star2 = mopc_star(alphabet2());
    c.check(std::abs(star2.expected_length() - 3.28) < 1e-12, "alphabet-2 row length 3.28");
    c.check(std::abs(star2.expected_ones() - 0.80) < 1e-12, "alphabet-2 row ones 0.80");

    const auto star1 = mopc_star(alphabet1());
    c.check(std::abs(star1.expected_length() - 2.52) < 1e-12, "alphabet-1 row length 2.52");
    c.check_expected_fail(std::abs(star1.expected_ones() - 0.77) < 1e-12,
                          "alphabet-1 printed row ones 0.77",
                          "exhaustive search proves 0.52 optimal at equal length; the printed "
                          "codebook violates the 1-bit tie-break (see decisions ledger)");

    Rng rng(555);
    bool agree = true;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + (trial % 2);
        std::vector<std::uint64_t> w(n);
        std::uint64_t total = 0;
        for (auto& x : w) {
            x = 1 + rng.next_u64() % 89;
            total += x;
        }
        std::vector<Rational> probs;
        std::vector<std::string> symbols;
        for (std::size_t i = 0; i < n; ++i) {
            probs.push_back(Rational(w[i], total));
            symbols.push_back(std::string(1, static_cast<char>('a' + i)));
        }
        const Alphabet alpha(symbols, probs);
        const auto star = mopc_star(alpha, 6);
        const auto [len, ones] = oracle::mopc_optimum(alpha, 6);
        if (star.expected_length_exact() != len || star.expected_ones_exact() != ones)
            agree = false;
    }
    c.check(agree, "exhaustive oracle agrees on 50 random small alphabets");
}

// ---------------------------------------------------------------------- 6
void criterion6(Criterion& c) {
    struct Row {
        Scheme scheme;
        double bits, ones;
        bool defective_ones = false;
    };
    const std::vector<Row> table3 = {
        {Scheme::Uncoded, 40, 10.4},
        {Scheme::IsiMitigating, 80, 20.4},
        {Scheme::Huffman, 35, 15.4},
        {Scheme::MoHuffman, 50.4, 15.4},
        {Scheme::MoPCStar, 50.4, 15.4, true},
    };
    const std::vector<Row> table5 = {
        {Scheme::Uncoded, 63, 16.73684},
        {Scheme::IsiMitigating, 105, 22},
        {Scheme::Huffman, 47.84210, 22.57894},
        {Scheme::MoHuffman, 70.42105, 22.57894},
        {Scheme::MoPCStar, 68.84210, 16.73684},
    };
    for (const bool second : {false, true}) {
        const Alphabet a = second ? alphabet2() : alphabet1();
        for (const Row& row : second ? table5 : table3) {
            const SchemeStats st = scheme_stats(SchemeCodec(a, row.scheme), 20, 1, kSeed);
            const std::string tag =
                scheme_name(row.scheme) + (second ? " (table V)" : " (table III)");
            c.check(std::abs(st.expected_bits - row.bits) < 1.1e-5, tag + " bits");
            if (row.defective_ones)
                c.check_expected_fail(std::abs(st.expected_ones - row.ones) < 1.1e-5,
                                      tag + " ones=15.4",
                                      "the optimal constrained codebook carries 10.4 (see "
                                      "decisions ledger)");
            else
                c.check(std::abs(st.expected_ones - row.ones) < 1.1e-5, tag + " ones");
        }
    }

    // Monte Carlo rows at 1e5 samples, +-0.5 bits.
    struct McRow {
        Scheme scheme;
        double bits, ones;
    };
    const std::vector<McRow> mc3 = {{Scheme::AC, 33.32009, 16.53598},
                                    {Scheme::SAC, 49.85607, 16.53598},
                                    {Scheme::MoAPC, 48.63674, 13.44275}};
    const std::vector<McRow> mc5 = {{Scheme::AC, 46.83747, 23.15221},
                                    {Scheme::SAC, 69.98969, 23.15221},
                                    {Scheme::MoAPC, 68.72786, 18.61808}};
    for (const bool second : {false, true}) {
        const Alphabet a = second ? alphabet2() : alphabet1();
        for (const McRow& row : second ? mc5 : mc3) {
            const SchemeStats st =
                scheme_stats(SchemeCodec(a, row.scheme), 20, 100000, mix_seed(kSeed, 6));
            const std::string tag =
                scheme_name(row.scheme) + (second ? " (table V)" : " (table III)");
            c.check(std::abs(st.expected_bits - row.bits) <= 0.5, tag + " bits within 0.5");
            c.check(std::abs(st.expected_ones - row.ones) <= 0.5, tag + " ones within 0.5");
        }
    }

    // Tables IV and VI from the printed statistics of tables III and V.
    struct Norm {
        double bits, ones, interval, factor;
    };
    const NormalizedConfig base{200, 100};
    const SchemeStats base1{40, 10.4}, base2{63, 16.73684};
    const std::vector<Norm> table4 = {
        {80, 20.4, 100, 0.5098},      {33.32009, 16.53598, 240, 0.6289},
        {49.85607, 16.53598, 160, 0.6289}, {48.63674, 13.44275, 164, 0.7736},
        {35, 15.4, 229, 0.6753},      {50.4, 15.4, 159, 0.6753},
    };
    const std::vector<Norm> table6 = {
        {105, 22, 120, 0.7607},            {46.83747, 23.15221, 269, 0.7229},
        {69.98969, 23.15221, 180, 0.7229}, {68.72786, 18.61808, 183, 0.8989},
        {47.84210, 22.57894, 263, 0.7412}, {70.42105, 22.57894, 179, 0.7412},
        {68.84210, 16.73684, 183, 1.0},
    };
    for (const Norm& n : table4) {
        const SchemeStats target{n.bits, n.ones};
        c.check(normalize(base1, base, target).signal_interval_ms == n.interval,
                "table IV interval " + std::to_string(n.interval));
        c.check(std::abs(molecule_factor_4dp(base1, target) - n.factor) < 1e-9,
                "table IV factor " + std::to_string(n.factor));
    }
    for (const Norm& n : table6) {
        const SchemeStats target{n.bits, n.ones};
        c.check(normalize(base2, base, target).signal_interval_ms == n.interval,
                "table VI interval " + std::to_string(n.interval));
        c.check(std::abs(molecule_factor_4dp(base2, target) - n.factor) < 1e-9,
                "table VI factor " + std::to_string(n.factor));
    }
}

// ---------------------------------------------------------------------- 7
void criterion7(Criterion& c) {
    // 1e5 MoAPC round trips, mixed word lengths 1..400, both alphabets.
    std::size_t failures = 0;
    for (const bool second : {false, true}) {
        const Alphabet a = second ? alphabet2() : alphabet1();
        const auto m = build_cumulative(a);
        const Codebook book = mopc_star(a);
        MoacConfig cfg;
        cfg.mode = second ? CodecConfig::Mode::EofIncluded : CodecConfig::Mode::EofExcluded;
        Rng lens(mix_seed(kSeed, 7, second));
        for (int i = 0; i < 50000; ++i) {
            const std::size_t len = 1 + lens.next_u64() % 400;
            const Word w = sample_word(a, len, mix_seed(kSeed, 70 + second, i));
            const BitString bits = moapc_encode(m, book, w, cfg).bits();
            const auto hint =
                second ? std::optional<std::size_t>{} : std::optional<std::size_t>{len};
            try {
                if (moapc_decode(m, book, bits, cfg, hint) != w) ++failures;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    c.check(failures == 0,
            "1e5 MoAPC round trips, zero failures (got " + std::to_string(failures) + ")");

    // Exact-arithmetic AC round trips.
    {
        const auto a = alphabet2();
        const auto m = build_cumulative(a);
        std::size_t bad = 0;
        for (int i = 0; i < 2000; ++i) {
            const Word w = sample_word(a, 1 + i % 24, mix_seed(kSeed, 71, i));
            if (oracle::ac_decode_exact(m, oracle::ac_shortest(m, w)) != w) ++bad;
        }
        c.check(bad == 0, "exact-oracle AC round trips 100%");
    }

    // MoAC decode-success ratio nonincreasing in word length (alphabet 1).
    {
        const auto a = alphabet1();
        const auto m = build_cumulative(a);
        MoacConfig cfg; // EOF-excluded
        std::vector<double> ratio;
        for (const std::size_t len : {20, 80, 200, 400}) {
            int ok = 0;
            const int n = 400;
            for (int i = 0; i < n; ++i) {
                const Word w = sample_word(a, len, mix_seed(kSeed, 72, len, i));
                ok += moac_encode_verified(m, w, cfg).round_trip_ok ? 1 : 0;
            }
            ratio.push_back(double(ok) / n);
        }
        bool monotone = true;
        for (std::size_t i = 0; i + 1 < ratio.size(); ++i)
            if (ratio[i + 1] > ratio[i] + 0.015) monotone = false;
        c.check(monotone, "MoAC decode-success ratio nonincreasing over lengths 20..400");
        c.check(ratio.back() < 1.0, "finite-precision failures present at length 400 (ratio " +
                                        std::to_string(ratio.back()) + ")");
    }
}

// ---------------------------------------------------------------------- 8
void criterion8(Criterion& c) {
    DetectionParams p;
    p.spacing = 4;
    p.min_count = 1;
    p.scaling_a = 0.5;
    c.check(detect(ChannelTrace{{0, 0, 0, 0}}, p).str() == "0000", "all-zero chunk stays zero");
    c.check(detect(ChannelTrace{{10, 2, 0, 9}}, p).str() == "1001", "tau=6 hand trace");
    DetectionParams gate = p;
    gate.min_count = 11;
    c.check(detect(ChannelTrace{{10, 2, 0, 9}}, gate).str() == "0000", "min gate overrides");
    c.check(correct(BitString::from_string("1111")).str() == "1010", "sweep 1111 -> 1010");
    c.check(correct(BitString::from_string("1101")).str() == "1001", "sweep 1101 -> 1001");
    Rng rng(88);
    bool constrained = true;
    for (int i = 0; i < 10000; ++i) {
        BitString b;
        const std::size_t len = 1 + rng.next_u64() % 32;
        for (std::size_t j = 0; j < len; ++j) b.push_back(static_cast<int>(rng.next_u64() & 1));
        if (!correct(b).no_consecutive_ones()) constrained = false;
    }
    c.check(constrained, "corrected sequences never contain consecutive 1s (1e4 random)");
}

// ---------------------------------------------------------------------- 9
void criterion9(Criterion& c) {
    ChannelParams p;
    const double d_ms = p.diffusion_um2_per_s / 1000.0;
    const double sigma = std::sqrt(2.0 * d_ms * p.step_ms);
    const int k = 50, particles = 100000;
    double sum = 0, sum2 = 0;
    Rng rng(mix_seed(kSeed, 9));
    for (int i = 0; i < particles; ++i) {
        double x = 0;
        for (int s = 0; s < k; ++s) x += sigma * rng.next_normal();
        sum += x;
        sum2 += x * x;
    }
    const double var = sum2 / particles - (sum / particles) * (sum / particles);
    const double want = 2.0 * d_ms * k * p.step_ms;
    c.check(std::abs(var - want) / want < 0.05, "per-axis displacement variance within 5%");

    const auto zero = simulate(BitString::from_string("00000"), p, 3);
    bool all_zero = true;
    for (std::size_t i = 0; i < zero.size(); ++i) all_zero = all_zero && zero[i] == 0;
    c.check(all_zero, "all-zero input gives an all-zero trace");

    ChannelParams pm = p;
    pm.molecules_per_one = 60;
    const auto t1 = simulate(BitString::from_string("1001"), pm, 42);
    const auto t2 = simulate(BitString::from_string("1001"), pm, 42);
    c.check(t1.counts == t2.counts, "identical seeds give identical traces");
}

// --------------------------------------------------------------------- 10
void criterion10(Criterion& c) {
    ChannelParams channel;        // table parameters
    channel.max_age_ms = 2000.0;  // bounds the back-to-back run cost
    const NormalizedConfig base{200, 100};
    const std::vector<std::uint32_t> grid = {100, 200, 300, 400};

    const auto run_scheme = [&](const Alphabet& a, Scheme scheme, std::uint32_t base_m,
                                const SchemeStats& base_stats) {
        const SchemeCodec codec(a, scheme);
        const SchemeStats stats =
            scheme_stats(codec, 20, codec.monte_carlo() ? 20000 : 1, mix_seed(kSeed, 10));
        const NormalizedConfig cfg =
            normalize(base_stats, {base.signal_interval_ms, base_m}, stats);
        ChannelParams ch = channel;
        ch.signal_interval_ms = cfg.signal_interval_ms;
        ch.molecules_per_one = cfg.molecules_per_one;
        CalibrateOptions copts;
        copts.pilot_count = 64;
        copts.pilot_len = 20;
        copts.rng_seed = mix_seed(kSeed, 101, static_cast<std::uint64_t>(scheme), base_m);
        const DetectionParams det = calibrate(codec, ch, copts);
        EvaluateOptions eopts;
        eopts.word_len = 20;
        eopts.word_count = 512;
        eopts.rng_seed = mix_seed(kSeed, 102, static_cast<std::uint64_t>(scheme), base_m);
        return evaluate(codec, ch, det, eopts);
    };

    // Alphabet 1: WER(MoAPC) < WER(SAC) < WER(AC) on at least 3 of 4 points.
    {
        const Alphabet a = alphabet1();
        const SchemeStats base_stats{40, 10.4};
        int ordered = 0;
        for (const std::uint32_t m : grid) {
            const ErrorReport ac = run_scheme(a, Scheme::AC, m, base_stats);
            const ErrorReport sac = run_scheme(a, Scheme::SAC, m, base_stats);
            const ErrorReport moapc = run_scheme(a, Scheme::MoAPC, m, base_stats);
            const bool ok = moapc.wer < sac.wer && sac.wer < ac.wer;
            ordered += ok ? 1 : 0;
            c.notes.push_back("A1 M=" + std::to_string(m) + ": WER ac=" +
                              std::to_string(ac.wer) + " sac=" + std::to_string(sac.wer) +
                              " moapc=" + std::to_string(moapc.wer) + (ok ? "" : "  [unordered]"));
        }
        c.check(ordered >= 3, "alphabet 1 WER ordering holds on >= 3 of 4 molecule counts");
    }

    // Alphabet 2: SER(MoPC*) <= SER(MoHuffman) on at least 3 of 4 points.
    {
        const Alphabet a = alphabet2();
        const SchemeStats base_stats{63, 16.73684};
        int ordered = 0;
        for (const std::uint32_t m : grid) {
            const ErrorReport star = run_scheme(a, Scheme::MoPCStar, m, base_stats);
            const ErrorReport mh = run_scheme(a, Scheme::MoHuffman, m, base_stats);
            const bool ok = star.ser <= mh.ser;
            ordered += ok ? 1 : 0;
            c.notes.push_back("A2 M=" + std::to_string(m) + ": SER mopc*=" +
                              std::to_string(star.ser) + " mohuffman=" + std::to_string(mh.ser) +
                              (ok ? "" : "  [unordered]"));
        }
        c.check(ordered >= 3, "alphabet 2 SER ordering holds on >= 3 of 4 molecule counts");
    }
}

} // namespace

int main() {
    run(1, "worked-example fidelity", criterion1);
    run(2, "combinatorics oracle", criterion2);
    run(3, "interval-height lemma", criterion3);
    run(4, "asymptotic SAC/MoAC ratios", criterion4);
    run(5, "constrained prefix optimality", criterion5);
    run(6, "table reproduction", criterion6);
    run(7, "unique decodability", criterion7);
    run(8, "detection algebra", criterion8);
    run(9, "simulator physics", criterion9);
    run(10, "end-to-end error-rate ordering", criterion10);

    int failed = 0;
    for (const auto& c : results) failed += c.pass ? 0 : 1;
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
