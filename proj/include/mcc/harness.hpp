#ifndef MCC_HARNESS_HPP
#define MCC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/channel.hpp"
#include "mcc/detection.hpp"
#include "mcc/schemes.hpp"

namespace mcc {

/// Per-word expected bits (S) and expected 1-bits (M) of a scheme at a
/// fixed word length.
struct SchemeStats {
    double expected_bits = 0;
    double expected_ones = 0;
};

/// Signal interval and per-1-bit molecule budget after normalization.
struct NormalizedConfig {
    double signal_interval_ms = 200.0;
    std::uint32_t molecules_per_one = 100;
};

struct ErrorReport {
    double wer = 0;
    double ser = 0;
    std::size_t words_sent = 0;
};

/// Mean bits / 1-bits per word. Fixed-codebook schemes are computed exactly
/// from the symbol probabilities (EOF drawn never, appended always);
/// arithmetic schemes are sampled with sample_count words.
SchemeStats scheme_stats(const SchemeCodec& codec, std::size_t word_len,
                         std::size_t sample_count, std::uint64_t rng_seed);

/// Scale the target scheme's signal interval by S1/S2 (rounded to whole
/// milliseconds) and its molecule count by M1/M2 (rounded half to even) so
/// both schemes spend the same time and molecule budget per word.
NormalizedConfig normalize(const SchemeStats& baseline, const NormalizedConfig& baseline_cfg,
                           const SchemeStats& target);

/// M1/M2 truncated to 4 decimals, the form the normalization tables print.
double molecule_factor_4dp(const SchemeStats& baseline, const SchemeStats& target);

/// Levenshtein distance between symbol sequences.
std::size_t edit_distance(const Word& a, const Word& b);

struct EvaluateOptions {
    std::size_t word_len = 20;
    std::size_t word_count = 512;
    std::uint64_t rng_seed = 1;
};

/// Full pipeline: encode every word, transmit them back to back through the
/// channel (molecules persist across words), then per word detect, correct
/// (constrained schemes only), decode and compare. Word boundaries are
/// known to the receiver. Decode failures count as fully erroneous words.
ErrorReport evaluate(const SchemeCodec& codec, const ChannelParams& channel,
                     const DetectionParams& detection, const EvaluateOptions& opts);

struct CalibrateOptions {
    std::size_t pilot_count = 64;
    std::size_t pilot_len = 20;
    std::uint64_t rng_seed = 1;
    double a_step = 0.004;
    std::size_t spacing_min = 2;
    std::size_t spacing_max = 0; // 0: twice the scheme's per-symbol code length
    DetectionParams::RminMode rmin_mode = DetectionParams::RminMode::NonzeroMin;
};

/// Pilot-signal calibration: simulate known words, sweep the scaling
/// coefficient and the spacing, and keep the pair with the least pilot
/// symbol error rate. min is 5/6 of the smallest count observed in a
/// transmitted 1-bit interval (skipped for the block code, whose chunks
/// always carry a 1).
DetectionParams calibrate(const SchemeCodec& codec, const ChannelParams& channel,
                          const CalibrateOptions& opts);

/// Simple table for CSV output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

enum class CurveKind { Length, Ones, Accuracy, Ratio };
CurveKind curve_kind_from_name(const std::string& name);

/// Per word length, the mean metric of each scheme (length/ones/accuracy),
/// or the SAC-to-MoAC length and 1-bit ratios (ratio).
Table curve(CurveKind kind, const std::vector<Scheme>& schemes, const Alphabet& alphabet,
            const std::vector<std::size_t>& word_lens, std::size_t samples,
            std::uint64_t rng_seed, int precision_bits = 20);

} // namespace mcc

#endif
