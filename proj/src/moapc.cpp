#include "mcc/moapc.hpp"

namespace mcc {

MoapcFrame moapc_encode(const CumulativeModel& model, const Codebook& book, const Word& word,
                        const MoacConfig& cfg) {
    if (book.size() != model.size())
        throw EncodeError("codebook does not match the alphabet");
    MoapcFrame frame;
    const MoacVerifiedResult moac = moac_encode_verified(model, word, cfg);
    if (moac.round_trip_ok) {
        frame.scheme_used = MoapcFrame::Scheme::MoAC;
        frame.header = BitString::from_string("0");
        frame.payload = moac.bits;
    } else {
        frame.scheme_used = MoapcFrame::Scheme::Prefix;
        frame.header = BitString::from_string("10");
        frame.payload = prefix_encode(book, word);
    }
    return frame;
}

Word moapc_decode(const CumulativeModel& model, const Codebook& book, const BitString& bits,
                  const MoacConfig& cfg, std::optional<std::size_t> length_hint) {
    if (bits.empty()) throw DecodeError("empty MoAPC frame");
    if (bits[0] == 0) {
        BitString payload;
        for (std::size_t i = 1; i < bits.size(); ++i) payload.push_back(bits[i]);
        return moac_decode(model, payload, cfg, length_hint);
    }
    if (bits.size() < 2 || bits[1] != 0)
        throw DecodeError("malformed MoAPC header");
    BitString payload;
    for (std::size_t i = 2; i < bits.size(); ++i) payload.push_back(bits[i]);
    return prefix_decode(book, payload);
}

} // namespace mcc
