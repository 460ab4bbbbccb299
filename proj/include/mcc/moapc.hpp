#ifndef MCC_MOAPC_HPP
#define MCC_MOAPC_HPP

#include <optional>

#include "mcc/moac.hpp"
#include "mcc/prefix.hpp"

namespace mcc {

/// MoAC with constrained-prefix fallback. A word is MoAC-encoded and the
/// encoder decodes its own output; on a perfect match the frame is
/// 0 + MoAC bits, otherwise 10 + prefix bits. The header keeps the whole
/// frame free of consecutive 1s, and the fallback makes every word
/// uniquely decodable.
struct MoapcFrame {
    enum class Scheme { MoAC, Prefix };
    Scheme scheme_used = Scheme::MoAC;
    BitString header;
    BitString payload;

    BitString bits() const {
        BitString out = header;
        out.append(payload);
        return out;
    }
};

MoapcFrame moapc_encode(const CumulativeModel& model, const Codebook& book, const Word& word,
                        const MoacConfig& cfg);

Word moapc_decode(const CumulativeModel& model, const Codebook& book, const BitString& bits,
                  const MoacConfig& cfg, std::optional<std::size_t> length_hint = std::nullopt);

} // namespace mcc

#endif
