#ifndef MCC_SCHEMES_HPP
#define MCC_SCHEMES_HPP

#include <memory>
#include <optional>
#include <string>

#include "mcc/ac.hpp"
#include "mcc/moac.hpp"
#include "mcc/moapc.hpp"
#include "mcc/prefix.hpp"

namespace mcc {

enum class Scheme {
    Uncoded,
    IsiMitigating,
    Huffman,
    MoHuffman,
    MoPCStar,
    AC,
    SAC,
    MoAC,
    MoAPC,
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);
const std::vector<Scheme>& all_schemes();

/// One alphabet + one scheme, ready to encode and decode words. Arithmetic
/// schemes run EOF-included when the alphabet has an EOF symbol and
/// EOF-excluded (length hint required) otherwise.
class SchemeCodec {
public:
    SchemeCodec(Alphabet alphabet, Scheme scheme, int precision_bits = 20);

    Scheme scheme() const { return scheme_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const CumulativeModel& model() const { return model_; }

    BitString encode(const Word& word) const;
    Word decode(const BitString& bits, std::optional<std::size_t> length_hint) const;

    /// Whether codewords avoid consecutive 1s (so Algorithm 2 applies).
    bool constrained() const;
    /// Whether per-word statistics require sampling (arithmetic schemes) or
    /// follow exactly from the codebook.
    bool monte_carlo() const;
    /// Fixed codebook, if the scheme has one (also the MoAPC fallback book).
    const Codebook* codebook() const { return book_ ? &*book_ : nullptr; }

private:
    Alphabet alphabet_;
    Scheme scheme_;
    CumulativeModel model_;
    std::optional<Codebook> book_;
    CodecConfig ac_cfg_;
    MoacConfig moac_cfg_;
};

} // namespace mcc

#endif
