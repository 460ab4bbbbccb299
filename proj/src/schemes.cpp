#include "mcc/schemes.hpp"

#include <array>

namespace mcc {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Uncoded: return "uncoded";
        case Scheme::IsiMitigating: return "isi";
        case Scheme::Huffman: return "huffman";
        case Scheme::MoHuffman: return "mohuffman";
        case Scheme::MoPCStar: return "mopc-star";
        case Scheme::AC: return "ac";
        case Scheme::SAC: return "sac";
        case Scheme::MoAC: return "moac";
        case Scheme::MoAPC: return "moapc";
    }
    throw Error("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    for (Scheme s : all_schemes())
        if (scheme_name(s) == name) return s;
    throw Error("unknown scheme name: " + name);
}

const std::vector<Scheme>& all_schemes() {
    static const std::vector<Scheme> schemes = {
        Scheme::Uncoded, Scheme::IsiMitigating, Scheme::Huffman,
        Scheme::MoHuffman, Scheme::MoPCStar,   Scheme::AC,
        Scheme::SAC,     Scheme::MoAC,         Scheme::MoAPC,
    };
    return schemes;
}

SchemeCodec::SchemeCodec(Alphabet alphabet, Scheme scheme, int precision_bits)
    : alphabet_(std::move(alphabet)), scheme_(scheme), model_(build_cumulative(alphabet_)) {
    const auto mode = alphabet_.has_eof() ? CodecConfig::Mode::EofIncluded
                                          : CodecConfig::Mode::EofExcluded;
    ac_cfg_.precision_bits = precision_bits;
    ac_cfg_.mode = mode;
    moac_cfg_.precision_bits = precision_bits;
    moac_cfg_.mode = mode;
    switch (scheme_) {
        case Scheme::Uncoded: book_ = uncoded(alphabet_); break;
        case Scheme::IsiMitigating: book_ = isi_mitigating(alphabet_); break;
        case Scheme::Huffman: book_ = huffman(alphabet_); break;
        case Scheme::MoHuffman: book_ = mohuffman(alphabet_); break;
        case Scheme::MoPCStar:
        case Scheme::MoAPC: book_ = mopc_star(alphabet_); break;
        default: break;
    }
}

BitString SchemeCodec::encode(const Word& word) const {
    switch (scheme_) {
        case Scheme::AC: return ac_encode(model_, word, ac_cfg_);
        case Scheme::SAC: return sac_encode(model_, word, ac_cfg_);
        case Scheme::MoAC: return moac_encode(model_, word, moac_cfg_);
        case Scheme::MoAPC: return moapc_encode(model_, *book_, word, moac_cfg_).bits();
        default: return prefix_encode(*book_, word);
    }
}

Word SchemeCodec::decode(const BitString& bits, std::optional<std::size_t> length_hint) const {
    switch (scheme_) {
        case Scheme::AC: return ac_decode(model_, bits, ac_cfg_, length_hint);
        case Scheme::SAC: return sac_decode(model_, bits, ac_cfg_, length_hint);
        case Scheme::MoAC: return moac_decode(model_, bits, moac_cfg_, length_hint);
        case Scheme::MoAPC: return moapc_decode(model_, *book_, bits, moac_cfg_, length_hint);
        default: return prefix_decode(*book_, bits);
    }
}

bool SchemeCodec::constrained() const {
    switch (scheme_) {
        case Scheme::Uncoded:
        case Scheme::Huffman:
        case Scheme::AC: return false;
        default: return true;
    }
}

bool SchemeCodec::monte_carlo() const {
    switch (scheme_) {
        case Scheme::AC:
        case Scheme::SAC:
        case Scheme::MoAC:
        case Scheme::MoAPC: return true;
        default: return false;
    }
}

} // namespace mcc
