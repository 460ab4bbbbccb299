#include "mcc/harness.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>

#include "mcc/rng.hpp"

namespace mcc {

namespace {

/// Exact per-word stats for a fixed codebook: word_len symbols drawn from
/// the EOF-renormalized distribution, plus the EOF codeword when present.
SchemeStats exact_stats(const SchemeCodec& codec, std::size_t word_len) {
    const Alphabet& a = codec.alphabet();
    const Codebook& book = *codec.codebook();
    Rational len_sum = 0, ones_sum = 0, non_eof_mass = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.eof_index() && *a.eof_index() == i) continue;
        const Rational p = a.prob(static_cast<Symbol>(i));
        non_eof_mass += p;
        len_sum += p * Rational(book.code(static_cast<Symbol>(i)).size());
        ones_sum += p * Rational(book.code(static_cast<Symbol>(i)).count_ones());
    }
    Rational bits = Rational(word_len) * len_sum / non_eof_mass;
    Rational ones = Rational(word_len) * ones_sum / non_eof_mass;
    if (a.eof_index()) {
        bits += Rational(book.code(static_cast<Symbol>(*a.eof_index())).size());
        ones += Rational(book.code(static_cast<Symbol>(*a.eof_index())).count_ones());
    }
    return {to_double(bits), to_double(ones)};
}

} // namespace

SchemeStats scheme_stats(const SchemeCodec& codec, std::size_t word_len,
                         std::size_t sample_count, std::uint64_t rng_seed) {
    if (!codec.monte_carlo()) return exact_stats(codec, word_len);
    if (sample_count < 1) throw ModelError("sample_count must be at least 1");
    double bits = 0, ones = 0;
    for (std::size_t i = 0; i < sample_count; ++i) {
        const Word w = sample_word(codec.alphabet(), word_len, mix_seed(rng_seed, i));
        const BitString b = codec.encode(w);
        bits += static_cast<double>(b.size());
        ones += static_cast<double>(b.count_ones());
    }
    return {bits / static_cast<double>(sample_count), ones / static_cast<double>(sample_count)};
}

NormalizedConfig normalize(const SchemeStats& baseline, const NormalizedConfig& baseline_cfg,
                           const SchemeStats& target) {
    if (target.expected_bits <= 0 || target.expected_ones <= 0)
        throw ModelError("normalize requires positive target stats");
    NormalizedConfig out;
    out.signal_interval_ms = std::round(baseline_cfg.signal_interval_ms * baseline.expected_bits /
                                        target.expected_bits);
    const double factor = baseline.expected_ones / target.expected_ones;
    const double scaled = factor * static_cast<double>(baseline_cfg.molecules_per_one);
    // round half to even
    const int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    out.molecules_per_one = static_cast<std::uint32_t>(std::llrint(scaled));
    std::fesetround(saved);
    return out;
}

double molecule_factor_4dp(const SchemeStats& baseline, const SchemeStats& target) {
    const double factor = baseline.expected_ones / target.expected_ones;
    return std::floor(factor * 10000.0) / 10000.0;
}

std::size_t edit_distance(const Word& a, const Word& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

namespace {

/// Per-word symbol error: edit distance over the payload (EOF terminator
/// stripped), capped at 1.
double symbol_error(const Alphabet& a, const Word& original, const Word& decoded) {
    Word ref = original, got = decoded;
    if (a.eof_index()) {
        const Symbol eof = static_cast<Symbol>(*a.eof_index());
        if (!ref.empty() && ref.back() == eof) ref.pop_back();
        if (!got.empty() && got.back() == eof) got.pop_back();
    }
    if (ref.empty()) return got.empty() ? 0.0 : 1.0;
    const double d = static_cast<double>(edit_distance(ref, got));
    return std::min(1.0, d / static_cast<double>(ref.size()));
}

struct Transmission {
    std::vector<Word> words;
    std::vector<BitString> encodings;
    std::vector<ChannelTrace> traces; // one per word, sliced from the run
};

/// Encode word_count words and run them back to back through the channel.
Transmission transmit(const SchemeCodec& codec, const ChannelParams& channel,
                      std::size_t word_len, std::size_t word_count, std::uint64_t rng_seed) {
    Transmission tx;
    BitString all;
    for (std::size_t i = 0; i < word_count; ++i) {
        tx.words.push_back(sample_word(codec.alphabet(), word_len, mix_seed(rng_seed, 0x77, i)));
        tx.encodings.push_back(codec.encode(tx.words.back()));
        all.append(tx.encodings.back());
    }
    const ChannelTrace run = simulate(all, channel, mix_seed(rng_seed, 0xc4a2));
    std::size_t pos = 0;
    for (std::size_t i = 0; i < word_count; ++i) {
        ChannelTrace t;
        t.counts.assign(run.counts.begin() + pos, run.counts.begin() + pos +
                                                      static_cast<std::ptrdiff_t>(
                                                          tx.encodings[i].size()));
        tx.traces.push_back(std::move(t));
        pos += tx.encodings[i].size();
    }
    return tx;
}

Word decode_word(const SchemeCodec& codec, const BitString& bits, std::size_t word_len) {
    std::optional<std::size_t> hint;
    if (!codec.alphabet().has_eof()) hint = word_len;
    return codec.decode(bits, hint);
}

} // namespace

ErrorReport evaluate(const SchemeCodec& codec, const ChannelParams& channel,
                     const DetectionParams& detection, const EvaluateOptions& opts) {
    const Transmission tx =
        transmit(codec, channel, opts.word_len, opts.word_count, opts.rng_seed);
    ErrorReport report;
    report.words_sent = opts.word_count;
    for (std::size_t i = 0; i < opts.word_count; ++i) {
        BitString detected = detect(tx.traces[i], detection);
        if (codec.constrained()) detected = correct(detected);
        double ser = 1.0;
        bool word_error = true;
        try {
            const Word decoded = decode_word(codec, detected, opts.word_len);
            word_error = decoded != tx.words[i];
            ser = symbol_error(codec.alphabet(), tx.words[i], decoded);
        } catch (const Error&) {
            // fully erroneous word
        }
        report.wer += word_error ? 1.0 : 0.0;
        report.ser += ser;
    }
    report.wer /= static_cast<double>(opts.word_count);
    report.ser /= static_cast<double>(opts.word_count);
    return report;
}

DetectionParams calibrate(const SchemeCodec& codec, const ChannelParams& channel,
                          const CalibrateOptions& opts) {
    if (opts.pilot_count < 1) throw CalibrationError("pilot_count must be at least 1");
    const Transmission tx =
        transmit(codec, channel, opts.pilot_len, opts.pilot_count, opts.rng_seed);

    // Smallest count observed in any interval that carried a transmitted 1.
    std::uint32_t min_one_count = 0;
    bool any_one = false;
    for (std::size_t i = 0; i < tx.encodings.size(); ++i) {
        for (std::size_t j = 0; j < tx.encodings[i].size(); ++j) {
            if (!tx.encodings[i][j]) continue;
            const std::uint32_t c = tx.traces[i][j];
            if (!any_one || c < min_one_count) min_one_count = c;
            any_one = true;
        }
    }
    if (!any_one) throw CalibrationError("no 1-bit transmitted in pilot words");

    DetectionParams best;
    best.rmin_mode = opts.rmin_mode;
    // The block code guarantees a 1 per chunk; min is not used for it.
    best.min_count = codec.scheme() == Scheme::IsiMitigating
                         ? 0
                         : static_cast<std::uint32_t>(5 * min_one_count / 6);

    std::size_t spacing_max = opts.spacing_max;
    if (spacing_max == 0) {
        const SchemeStats st = scheme_stats(codec, opts.pilot_len, 256, opts.rng_seed);
        const double per_symbol = st.expected_bits / static_cast<double>(opts.pilot_len);
        spacing_max = std::max<std::size_t>(opts.spacing_min,
                                            static_cast<std::size_t>(std::ceil(2 * per_symbol)));
    }

    double best_ser = -1;
    const std::size_t a_steps = static_cast<std::size_t>(std::round(1.0 / opts.a_step));
    for (std::size_t ai = 0; ai <= a_steps; ++ai) {
        const double a = std::min(1.0, static_cast<double>(ai) * opts.a_step);
        for (std::size_t spacing = opts.spacing_min; spacing <= spacing_max; ++spacing) {
            DetectionParams cand = best;
            cand.scaling_a = a;
            cand.spacing = spacing;
            double ser = 0;
            for (std::size_t i = 0; i < opts.pilot_count; ++i) {
                BitString detected = detect(tx.traces[i], cand);
                if (codec.constrained()) detected = correct(detected);
                try {
                    const Word decoded = decode_word(codec, detected, opts.pilot_len);
                    ser += symbol_error(codec.alphabet(), tx.words[i], decoded);
                } catch (const Error&) {
                    ser += 1.0;
                }
            }
            if (best_ser < 0 || ser < best_ser) {
                best_ser = ser;
                best.scaling_a = a;
                best.spacing = spacing;
            }
        }
    }
    return best;
}

CurveKind curve_kind_from_name(const std::string& name) {
    if (name == "length") return CurveKind::Length;
    if (name == "ones") return CurveKind::Ones;
    if (name == "accuracy") return CurveKind::Accuracy;
    if (name == "ratio") return CurveKind::Ratio;
    throw Error("unknown curve kind: " + name);
}

Table curve(CurveKind kind, const std::vector<Scheme>& schemes, const Alphabet& alphabet,
            const std::vector<std::size_t>& word_lens, std::size_t samples,
            std::uint64_t rng_seed, int precision_bits) {
    Table table;
    table.header.push_back("word_len");

    std::vector<SchemeCodec> codecs;
    if (kind == CurveKind::Ratio) {
        codecs.emplace_back(alphabet, Scheme::SAC, precision_bits);
        codecs.emplace_back(alphabet, Scheme::MoAC, precision_bits);
        table.header.push_back("sac_moac_length_ratio");
        table.header.push_back("sac_moac_ones_ratio");
    } else {
        for (Scheme s : schemes) {
            codecs.emplace_back(alphabet, s, precision_bits);
            table.header.push_back(scheme_name(s));
        }
    }

    for (std::size_t len : word_lens) {
        std::vector<double> row;
        row.push_back(static_cast<double>(len));
        if (kind == CurveKind::Ratio) {
            double sac_bits = 0, sac_ones = 0, moac_bits = 0, moac_ones = 0;
            for (std::size_t i = 0; i < samples; ++i) {
                const Word w = sample_word(alphabet, len, mix_seed(rng_seed, len, i));
                const BitString s = codecs[0].encode(w);
                const BitString m = codecs[1].encode(w);
                sac_bits += static_cast<double>(s.size());
                sac_ones += static_cast<double>(s.count_ones());
                moac_bits += static_cast<double>(m.size());
                moac_ones += static_cast<double>(m.count_ones());
            }
            row.push_back(sac_bits / moac_bits);
            row.push_back(sac_ones / moac_ones);
        } else {
            for (const auto& codec : codecs) {
                double acc = 0;
                if (kind == CurveKind::Accuracy) {
                    for (std::size_t i = 0; i < samples; ++i) {
                        const Word w = sample_word(alphabet, len, mix_seed(rng_seed, len, i));
                        try {
                            const BitString b = codec.encode(w);
                            acc += decode_word(codec, b, len) == w ? 1.0 : 0.0;
                        } catch (const Error&) {
                        }
                    }
                    row.push_back(acc / static_cast<double>(samples));
                } else {
                    const SchemeStats st =
                        scheme_stats(codec, len, samples, mix_seed(rng_seed, len));
                    row.push_back(kind == CurveKind::Length ? st.expected_bits
                                                            : st.expected_ones);
                }
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace mcc
