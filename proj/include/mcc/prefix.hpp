#ifndef MCC_PREFIX_HPP
#define MCC_PREFIX_HPP

#include <cstdint>
#include <vector>

#include "mcc/bitstring.hpp"
#include "mcc/source_model.hpp"

namespace mcc {

/// Symbol -> codeword table with exact expected-length / expected-ones
/// statistics (per source symbol, under the alphabet's probabilities).
class Codebook {
public:
    Codebook(const Alphabet& alphabet, std::vector<BitString> codes);

    std::size_t size() const { return codes_.size(); }
    const BitString& code(Symbol s) const { return codes_.at(s); }
    const std::vector<BitString>& codes() const { return codes_; }

    const Rational& expected_length_exact() const { return expected_length_; }
    const Rational& expected_ones_exact() const { return expected_ones_; }
    double expected_length() const { return to_double(expected_length_); }
    double expected_ones() const { return to_double(expected_ones_); }

    bool prefix_free() const;
    Rational kraft_sum() const;
    /// True when every codeword avoids consecutive 1s and ends with a 0.
    bool run_length_constrained() const;

private:
    std::vector<BitString> codes_;
    Rational expected_length_;
    Rational expected_ones_;
};

/// Classical length-optimal prefix code. Codeword lengths come from the
/// Huffman merge; codes are the canonical zero-first set with, per length,
/// the fewest-ones codes assigned to the most probable symbols.
Codebook huffman(const Alphabet& alphabet);

/// Huffman codebook with every 1-bit substituted by 10, which removes
/// consecutive 1s at the cost of one extra bit per original 1.
Codebook mohuffman(const Alphabet& alphabet);

/// Optimal constrained prefix code: among prefix-free codebooks whose
/// codewords avoid consecutive 1s and end with a 0, minimize expected
/// length, breaking ties by expected 1-bits. Exhaustive search over
/// codewords up to max_len.
Codebook mopc_star(const Alphabet& alphabet, std::size_t max_len = 8);

/// Fixed-length codebook over ceil(log2 N) bits, fewest-ones codes to the
/// most probable symbols.
Codebook uncoded(const Alphabet& alphabet);

/// Fixed-length block code whose words start with 0, avoid consecutive 1s
/// and contain at least one 1; block length is the smallest n with enough
/// such words. Fewest-ones words go to the most probable symbols.
Codebook isi_mitigating(const Alphabet& alphabet);

BitString prefix_encode(const Codebook& book, const Word& word);
/// Greedy parse; the prefix-free property makes it unambiguous. Trailing
/// bits that match no codeword raise DecodeError.
Word prefix_decode(const Codebook& book, const BitString& bits);

} // namespace mcc

#endif
