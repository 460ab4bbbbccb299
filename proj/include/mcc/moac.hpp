#ifndef MCC_MOAC_HPP
#define MCC_MOAC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mcc/ac.hpp"
#include "mcc/bitstring.hpp"
#include "mcc/source_model.hpp"

namespace mcc {

/// Molecular arithmetic coding: the code space is the (1,inf) constrained
/// binary tree partitioned by the golden ratio. At the first column the
/// 0-bit owns [0, 1/phi) and the 1-bit owns [1/phi, 1); a 1-cell's only
/// child is a 0-cell with the same interval, and a 0-cell [x,y) splits at
/// x + (y-x)/phi. Encodings end with a 0-bit and avoid consecutive 1-bits.
struct MoacConfig {
    int precision_bits = 20;
    // Fixed-point precision used to approximate phi. 0 means "same as
    // precision_bits" (the streaming codec); tests use 256 for the oracle.
    int phi_bits = 0;
    CodecConfig::Mode mode = CodecConfig::Mode::EofExcluded;

    int resolved_phi_bits() const { return phi_bits > 0 ? phi_bits : precision_bits; }
};

/// Half-open fixed-point subinterval of [0,1): [lo, hi) / 2^scale_bits.
struct IntervalQ {
    BigInt lo;
    BigInt hi;
    int scale_bits = 0;

    Rational lo_rational() const { return Rational(lo, BigInt(1) << scale_bits); }
    Rational hi_rational() const { return Rational(hi, BigInt(1) << scale_bits); }
    BigInt height() const { return hi - lo; }
    bool subset_of(const WordInterval& w) const {
        const BigInt unit = BigInt(1) << scale_bits;
        // lo/2^Q >= w.lo  and  hi/2^Q <= w.hi, compared exactly.
        return lo * denominator(w.lo) >= numerator(w.lo) * unit &&
               hi * denominator(w.hi) <= numerator(w.hi) * unit;
    }
};

/// floor((sqrt(5)-1)/2 * 2^bits + 1/2): fixed-point 1/phi.
BigInt inv_phi_fixed(int bits);

/// Closed-form MoAC interval of a constrained code:
/// [sum b_i (1/phi)^i, sum b_i (1/phi)^i + (1/phi)^(n + b_n)).
/// Codes ending in 0 have height (1/phi)^n, codes ending in 1 have height
/// (1/phi)^(n+1), matching the recursive cell construction.
IntervalQ moac_interval(const BitString& bits, int phi_bits);
inline IntervalQ moac_interval(const BitString& bits, const MoacConfig& cfg) {
    return moac_interval(bits, cfg.resolved_phi_bits());
}

/// One node of the code-space tree.
struct MoacCell {
    int bit = 0;        // 0 or 1
    int column = 0;     // 1-based depth
    IntervalQ interval; // cell interval at the requested precision
};

/// Interval of `bits` obtained by descending the cell tree with the
/// round-half-up split rule (as opposed to the closed form above).
IntervalQ moac_cell_interval(const BitString& bits, int phi_bits);

/// All constrained bit strings of length n (no consecutive 1s), in
/// lexicographic order. |result| == Fibonacci(n+2).
std::vector<BitString> constrained_strings(int n);

/// |C(n)|: number of length-n strings without consecutive 1s.
BigInt count_codes(int n);
/// one[n]: total number of 1-bits across all strings of C(n).
BigInt count_ones(int n);
/// Expected 1-bit ratio of a MoAC code, one[n-1] / (n * Fibonacci(n+1)),
/// evaluated at n = n_max. Converges to ~0.276.
double one_bit_density(int n_max);
/// (3/2) * log2(phi): asymptotic SAC-to-MoAC expected length ratio, ~1.0413.
double length_ratio_limit();

/// Streaming encoder. Throws EncodeError on invalid words or when the
/// register precision cannot represent a symbol's slot.
BitString moac_encode(const CumulativeModel& model, const Word& word, const MoacConfig& cfg);

/// Streaming decoder: repeats the encoder's register steps, tracking the
/// input bits as a value cell inside the frame and selecting the symbol
/// whose slot contains the cell's left endpoint. Fixed-point drift between
/// the cell descent and the encoder's golden-ratio register maps is what
/// makes finite-precision MoAC decoding fallible.
Word moac_decode(const CumulativeModel& model, const BitString& bits, const MoacConfig& cfg,
                 std::optional<std::size_t> length_hint = std::nullopt);

struct MoacVerifiedResult {
    BitString bits;
    bool round_trip_ok = false;
};

/// Encode and then decode the result with the same configuration, reporting
/// whether the round trip reproduced the word. Never throws on codec
/// failure; the failure is the reported outcome.
MoacVerifiedResult moac_encode_verified(const CumulativeModel& model, const Word& word,
                                        const MoacConfig& cfg);

} // namespace mcc

#endif
