#ifndef MCC_AC_HPP
#define MCC_AC_HPP

#include <cstdint>
#include <optional>

#include "mcc/bitstring.hpp"
#include "mcc/source_model.hpp"

namespace mcc {

/// Classical arithmetic coding over the dyadic code space: the code
/// b_1..b_n owns the interval [sum b_k 2^-k, sum b_k 2^-k + 2^-n).
struct CodecConfig {
    enum class Mode { EofIncluded, EofExcluded };
    int precision_bits = 20;
    Mode mode = Mode::EofExcluded;
};

/// Exact dyadic interval of a bit string.
WordInterval ac_interval(const BitString& bits);

/// Encode `word` to the shortest bit string whose dyadic interval fits inside
/// the word's interval, as tracked by the finite-precision register pair.
/// Register subdivision is integer floor arithmetic; mid-stream bits are
/// emitted as soon as the interval settles into a half, underflow around the
/// midpoint is deferred with a counter, and termination picks the shortest
/// dyadic subinterval of the final register state exactly.
BitString ac_encode(const CumulativeModel& model, const Word& word, const CodecConfig& cfg);

/// Mirror decoder. EOF-included mode decodes until the EOF symbol appears;
/// EOF-excluded mode requires length_hint = number of source symbols.
Word ac_decode(const CumulativeModel& model, const BitString& bits, const CodecConfig& cfg,
               std::optional<std::size_t> length_hint = std::nullopt);

/// Substitution arithmetic coding: AC with every 1-bit replaced by 10, which
/// makes the output (1,inf) run-length constrained.
BitString sac_encode(const CumulativeModel& model, const Word& word, const CodecConfig& cfg);
Word sac_decode(const CumulativeModel& model, const BitString& bits, const CodecConfig& cfg,
                std::optional<std::size_t> length_hint = std::nullopt);

} // namespace mcc

#endif
