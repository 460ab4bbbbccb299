// Command-line front end: codebook/encode/decode/stats/normalize/calibrate/
// simulate/evaluate/curve. Tabular output is CSV with a header row; word
// input/output is whitespace-separated symbol tokens.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcc/harness.hpp"
#include "mcc/io.hpp"
#include "mcc/rng.hpp"

using namespace mcc;

namespace {

Alphabet load_alphabet(const std::string& path) {
    if (path == "alphabet1") return alphabet1();
    if (path == "alphabet2") return alphabet2();
    return read_alphabet_file(path);
}

Word read_word_tokens(const Alphabet& a, std::istream& in) {
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return word_from_tokens(a, tokens);
}

ChannelParams channel_from(const std::string& config_path, double ts_override,
                           std::uint32_t m_override, double max_age_override) {
    ChannelParams p;
    if (!config_path.empty()) p = read_channel_config_file(config_path);
    if (ts_override > 0) p.signal_interval_ms = ts_override;
    if (m_override > 0) p.molecules_per_one = m_override;
    if (max_age_override >= 0) p.max_age_ms = max_age_override;
    return p;
}

std::vector<std::size_t> parse_lens(const std::string& spec) {
    std::vector<std::size_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    if (out.empty()) throw Error("empty word length list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ISI-mitigating source codecs and diffusion-channel experiments"};
    app.require_subcommand(1);

    std::string alphabet_path = "alphabet1";
    std::string scheme_str = "moapc";
    std::string channel_config;
    std::string out_path;
    int precision = 20;
    std::uint64_t seed = 1;
    double ts = 0;
    std::uint32_t molecules = 0;
    double max_age = -1;

    auto add_common = [&](CLI::App* cmd, bool with_scheme = true) {
        cmd->add_option("--alphabet,-a", alphabet_path,
                        "alphabet file, or builtin: alphabet1, alphabet2");
        if (with_scheme) cmd->add_option("--scheme,-s", scheme_str, "coding scheme");
        cmd->add_option("--precision,-p", precision, "arithmetic coder precision bits");
        cmd->add_option("--out,-o", out_path, "output file (default stdout)");
    };
    auto out_stream = [&]() -> std::unique_ptr<std::ostream> {
        if (out_path.empty()) return nullptr;
        auto f = std::make_unique<std::ofstream>(out_path);
        if (!*f) throw IoError("cannot open output file: " + out_path);
        return f;
    };

    // codebook -----------------------------------------------------------
    auto* cb = app.add_subcommand("codebook", "emit a scheme's codebook as symbol/bits lines");
    add_common(cb);
    cb->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const SchemeCodec codec(a, scheme_from_name(scheme_str), precision);
        if (!codec.codebook()) throw Error("scheme has no fixed codebook: " + scheme_str);
        auto f = out_stream();
        std::ostream& os = f ? *f : std::cout;
        write_codebook(os, a, *codec.codebook());
        os << "# expected_length " << codec.codebook()->expected_length() << " expected_ones "
           << codec.codebook()->expected_ones() << '\n';
    });

    // encode / decode ------------------------------------------------------
    std::string word_arg, bits_arg;
    std::size_t length_hint = 0;
    auto* enc = app.add_subcommand("encode", "encode a word (symbol tokens) to bits");
    add_common(enc);
    enc->add_option("--word,-w", word_arg, "word as symbol tokens (default: stdin)");
    enc->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const SchemeCodec codec(a, scheme_from_name(scheme_str), precision);
        Word w;
        if (!word_arg.empty()) {
            std::istringstream ss(word_arg);
            w = read_word_tokens(a, ss);
        } else {
            w = read_word_tokens(a, std::cin);
        }
        auto f = out_stream();
        (f ? *f : std::cout) << codec.encode(w).str() << '\n';
    });

    auto* dec = app.add_subcommand("decode", "decode bits back to a word");
    add_common(dec);
    dec->add_option("--bits,-b", bits_arg, "bit string (default: stdin)");
    dec->add_option("--length-hint,-l", length_hint,
                    "number of source symbols (EOF-excluded arithmetic schemes)");
    dec->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const SchemeCodec codec(a, scheme_from_name(scheme_str), precision);
        std::string s = bits_arg;
        if (s.empty()) std::cin >> s;
        std::optional<std::size_t> hint;
        if (length_hint > 0) hint = length_hint;
        const Word w = codec.decode(BitString::from_string(s), hint);
        auto f = out_stream();
        (f ? *f : std::cout) << word_to_string(a, w) << '\n';
    });

    // stats ----------------------------------------------------------------
    std::size_t word_len = 20, samples = 100000, word_count = 512;
    auto* st = app.add_subcommand("stats", "expected bits and 1-bits per word, all schemes");
    add_common(st, false);
    st->add_option("--word-len", word_len, "word length (EOF not counted)");
    st->add_option("--samples", samples, "Monte Carlo samples for arithmetic schemes");
    st->add_option("--seed", seed, "RNG seed");
    st->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        auto f = out_stream();
        std::ostream& os = f ? *f : std::cout;
        os << "scheme,expected_bits,expected_ones\n";
        for (Scheme s : all_schemes()) {
            const SchemeCodec codec(a, s, precision);
            const SchemeStats stats = scheme_stats(codec, word_len, samples, seed);
            os << scheme_name(s) << ',' << stats.expected_bits << ',' << stats.expected_ones
               << '\n';
        }
    });

    // normalize --------------------------------------------------------
    double base_ts = 200.0;
    std::uint32_t base_m = 100;
    auto* nm = app.add_subcommand(
        "normalize", "per-scheme signal interval and molecule count, relative to uncoded");
    add_common(nm, false);
    nm->add_option("--word-len", word_len, "word length");
    nm->add_option("--samples", samples, "Monte Carlo samples");
    nm->add_option("--seed", seed, "RNG seed");
    nm->add_option("--base-ts", base_ts, "uncoded signal interval, ms");
    nm->add_option("--base-M", base_m, "uncoded molecules per 1-bit");
    nm->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const SchemeCodec base(a, Scheme::Uncoded, precision);
        const SchemeStats base_stats = scheme_stats(base, word_len, samples, seed);
        const NormalizedConfig base_cfg{base_ts, base_m};
        auto f = out_stream();
        std::ostream& os = f ? *f : std::cout;
        os << "scheme,signal_interval_ms,molecule_factor,molecules\n";
        for (Scheme s : all_schemes()) {
            const SchemeCodec codec(a, s, precision);
            const SchemeStats stats = scheme_stats(codec, word_len, samples, seed);
            const NormalizedConfig cfg = normalize(base_stats, base_cfg, stats);
            os << scheme_name(s) << ',' << cfg.signal_interval_ms << ','
               << molecule_factor_4dp(base_stats, stats) << ',' << cfg.molecules_per_one << '\n';
        }
    });

    // calibrate ----------------------------------------------------------
    std::size_t pilots = 64, pilot_len = 20;
    std::string rmin_mode = "nonzero-min";
    auto* cal = app.add_subcommand("calibrate",
                                   "pilot-signal calibration of a, spacing and min for a scheme");
    add_common(cal);
    cal->add_option("--config,-c", channel_config, "channel config file (key=value)");
    cal->add_option("--ts", ts, "signal interval override, ms");
    cal->add_option("--molecules,-M", molecules, "molecules per 1-bit override");
    cal->add_option("--max-age", max_age, "drop molecules older than this many ms (0: never)");
    cal->add_option("--pilots", pilots, "number of pilot words");
    cal->add_option("--pilot-len", pilot_len, "pilot word length");
    cal->add_option("--seed", seed, "RNG seed");
    cal->add_option("--rmin", rmin_mode, "r_min rule: nonzero-min or exclude-first");
    cal->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const SchemeCodec codec(a, scheme_from_name(scheme_str), precision);
        const ChannelParams channel = channel_from(channel_config, ts, molecules, max_age);
        CalibrateOptions opts;
        opts.pilot_count = pilots;
        opts.pilot_len = pilot_len;
        opts.rng_seed = seed;
        opts.rmin_mode = rmin_mode == "exclude-first" ? DetectionParams::RminMode::ExcludeFirst
                                                      : DetectionParams::RminMode::NonzeroMin;
        const DetectionParams det = calibrate(codec, channel, opts);
        auto f = out_stream();
        write_calibrations(f ? *f : std::cout,
                           {{scheme_str, channel.molecules_per_one, det}});
    });

    // simulate -----------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "channel trace for a bit string, CSV");
    add_common(sim, false);
    sim->add_option("--bits,-b", bits_arg, "bit string to transmit")->required();
    sim->add_option("--config,-c", channel_config, "channel config file");
    sim->add_option("--ts", ts, "signal interval override, ms");
    sim->add_option("--molecules,-M", molecules, "molecules per 1-bit override");
    sim->add_option("--max-age", max_age, "drop molecules older than this many ms");
    sim->add_option("--seed", seed, "RNG seed");
    sim->callback([&] {
        const ChannelParams channel = channel_from(channel_config, ts, molecules, max_age);
        const ChannelTrace trace = simulate(BitString::from_string(bits_arg), channel, seed);
        auto f = out_stream();
        std::ostream& os = f ? *f : std::cout;
        os << "interval_index,count\n";
        for (std::size_t i = 0; i < trace.size(); ++i) os << i << ',' << trace[i] << '\n';
    });

    // evaluate -----------------------------------------------------------
    std::string calibration_path;
    auto* ev = app.add_subcommand("evaluate", "end-to-end WER/SER for a scheme, CSV");
    add_common(ev);
    ev->add_option("--config,-c", channel_config, "channel config file");
    ev->add_option("--ts", ts, "normalized signal interval, ms (0: derive from stats)");
    ev->add_option("--molecules,-M", molecules, "normalized molecules per 1-bit");
    ev->add_option("--base-M", base_m, "uncoded-scheme molecule count for normalization");
    ev->add_option("--max-age", max_age, "drop molecules older than this many ms");
    ev->add_option("--calibration", calibration_path, "calibration file from `calibrate`");
    ev->add_option("--pilots", pilots, "pilot words when calibrating on the fly");
    ev->add_option("--words", word_count, "words to send");
    ev->add_option("--word-len", word_len, "word length");
    ev->add_option("--samples", samples, "Monte Carlo samples for normalization stats");
    ev->add_option("--seed", seed, "RNG seed");
    ev->add_option("--rmin", rmin_mode, "r_min rule: nonzero-min or exclude-first");
    ev->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        const Scheme scheme = scheme_from_name(scheme_str);
        const SchemeCodec codec(a, scheme, precision);
        ChannelParams channel = channel_from(channel_config, 0, 0, max_age);
        if (ts > 0 || molecules > 0) {
            if (ts > 0) channel.signal_interval_ms = ts;
            if (molecules > 0) channel.molecules_per_one = molecules;
        } else {
            const SchemeCodec base(a, Scheme::Uncoded, precision);
            const NormalizedConfig cfg =
                normalize(scheme_stats(base, word_len, samples, seed),
                          {channel.signal_interval_ms, base_m},
                          scheme_stats(codec, word_len, samples, seed));
            channel.signal_interval_ms = cfg.signal_interval_ms;
            channel.molecules_per_one = cfg.molecules_per_one;
        }
        DetectionParams det;
        det.rmin_mode = rmin_mode == "exclude-first" ? DetectionParams::RminMode::ExcludeFirst
                                                     : DetectionParams::RminMode::NonzeroMin;
        bool have_calibration = false;
        if (!calibration_path.empty()) {
            std::ifstream in(calibration_path);
            if (!in) throw IoError("cannot open calibration file: " + calibration_path);
            for (const auto& e : read_calibrations(in)) {
                if (e.scheme == scheme_str && e.molecules == channel.molecules_per_one) {
                    det = e.params;
                    have_calibration = true;
                }
            }
        }
        if (!have_calibration) {
            CalibrateOptions copts;
            copts.pilot_count = pilots;
            copts.pilot_len = word_len;
            copts.rng_seed = mix_seed(seed, 0xca1);
            copts.rmin_mode = det.rmin_mode;
            det = calibrate(codec, channel, copts);
        }
        EvaluateOptions opts;
        opts.word_len = word_len;
        opts.word_count = word_count;
        opts.rng_seed = seed;
        const ErrorReport rep = evaluate(codec, channel, det, opts);
        auto f = out_stream();
        std::ostream& os = f ? *f : std::cout;
        os << "scheme,molecules,signal_interval_ms,wer,ser,words\n";
        os << scheme_str << ',' << channel.molecules_per_one << ',' << channel.signal_interval_ms
           << ',' << rep.wer << ',' << rep.ser << ',' << rep.words_sent << '\n';
    });

    // curve ----------------------------------------------------------------
    std::string analysis = "length", scheme_list = "ac,sac,moac,moapc,mopc-star",
                lens_list = "1,5,10,20,50,100,200,400";
    std::size_t curve_samples = 400;
    auto* cv = app.add_subcommand("curve", "per-length mean metric per scheme, CSV");
    add_common(cv, false);
    cv->add_option("--analysis", analysis, "length | ones | accuracy | ratio");
    cv->add_option("--schemes", scheme_list, "comma-separated scheme names");
    cv->add_option("--lens", lens_list, "comma-separated word lengths");
    cv->add_option("--samples", curve_samples, "words per length");
    cv->add_option("--seed", seed, "RNG seed");
    cv->callback([&] {
        const Alphabet a = load_alphabet(alphabet_path);
        std::vector<Scheme> schemes;
        std::stringstream ss(scheme_list);
        std::string item;
        while (std::getline(ss, item, ',')) schemes.push_back(scheme_from_name(item));
        const Table t = curve(curve_kind_from_name(analysis), schemes, a, parse_lens(lens_list),
                              curve_samples, seed, precision);
        auto f = out_stream();
        write_csv(f ? *f : std::cout, t);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
