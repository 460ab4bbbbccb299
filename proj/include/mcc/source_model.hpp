#ifndef MCC_SOURCE_MODEL_HPP
#define MCC_SOURCE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcc/common.hpp"
#include "mcc/rational.hpp"

namespace mcc {

using Word = std::vector<Symbol>;

/// Ordered finite source alphabet with exact rational probabilities and an
/// optional EOF marker symbol.
class Alphabet {
public:
    Alphabet(std::vector<std::string> symbols, std::vector<std::string> decimal_probs,
             std::optional<std::size_t> eof_index = std::nullopt);
    Alphabet(std::vector<std::string> symbols, std::vector<Rational> probs,
             std::optional<std::size_t> eof_index = std::nullopt);

    std::size_t size() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& symbol(Symbol s) const { return symbols_.at(s); }
    const std::vector<Rational>& probs() const { return probs_; }
    const Rational& prob(Symbol s) const { return probs_.at(s); }
    std::optional<std::size_t> eof_index() const { return eof_index_; }
    bool has_eof() const { return eof_index_.has_value(); }

    std::optional<Symbol> find(std::string_view name) const;

    /// Common denominator D and per-symbol numerators such that
    /// prob(i) == num(i)/D exactly. Codecs use these for integer subdivision.
    std::int64_t common_denominator() const { return den_; }
    const std::vector<std::int64_t>& numerators() const { return nums_; }

private:
    void validate_and_finish();

    std::vector<std::string> symbols_;
    std::vector<Rational> probs_;
    std::optional<std::size_t> eof_index_;
    std::int64_t den_ = 1;
    std::vector<std::int64_t> nums_;
};

/// Lower/upper cumulative probabilities: c(i) = sum of probs before i,
/// d(i) = c(i) + prob(i). Exact rationals.
struct CumulativeModel {
    std::vector<Rational> c;
    std::vector<Rational> d;
    // Integer view over the alphabet's common denominator, c_num[N] == den.
    std::vector<std::int64_t> c_num;
    std::int64_t den = 1;
    std::optional<std::size_t> eof_index;

    std::size_t size() const { return c.size(); }
};

CumulativeModel build_cumulative(const Alphabet& alphabet);

/// Half-open word interval [lo, hi) in exact rational arithmetic.
struct WordInterval {
    Rational lo;
    Rational hi;
    Rational height() const { return hi - lo; }
    bool contains(const WordInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
};

/// Interval of a word under the recursive subdivision of the unit interval:
/// start from [0,1) and repeatedly map onto the symbol's cumulative slot.
WordInterval word_interval(const CumulativeModel& model, const Word& word);

/// Draw `len` i.i.d. symbols. For an EOF alphabet the draws come from the
/// distribution renormalized without EOF and the EOF symbol is appended, so
/// the stated length never counts the terminator.
Word sample_word(const Alphabet& alphabet, std::size_t len, std::uint64_t rng_seed);

/// The two nucleotide alphabets used throughout the experiments.
Alphabet alphabet1(); // A,T,C,G at 0.50/0.25/0.23/0.02, no EOF
Alphabet alphabet2(); // A,T,C,G,EOF at 0.25/0.24/0.23/0.23/0.05
/// Near-uniform 3+EOF alphabet used for the asymptotic ratio experiments.
Alphabet alphabet_ratio(); // A,B,C,EOF at 0.33/0.33/0.33/0.01

std::string word_to_string(const Alphabet& a, const Word& w);
Word word_from_tokens(const Alphabet& a, const std::vector<std::string>& tokens);

} // namespace mcc

#endif
