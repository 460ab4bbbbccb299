#include "mcc/source_model.hpp"

#include <algorithm>
#include <numeric>

#include "mcc/rng.hpp"

namespace mcc {

Alphabet::Alphabet(std::vector<std::string> symbols, std::vector<std::string> decimal_probs,
                   std::optional<std::size_t> eof_index)
    : symbols_(std::move(symbols)), eof_index_(eof_index) {
    probs_.reserve(decimal_probs.size());
    for (const auto& s : decimal_probs) probs_.push_back(parse_decimal(s));
    validate_and_finish();
}

Alphabet::Alphabet(std::vector<std::string> symbols, std::vector<Rational> probs,
                   std::optional<std::size_t> eof_index)
    : symbols_(std::move(symbols)), probs_(std::move(probs)), eof_index_(eof_index) {
    validate_and_finish();
}

void Alphabet::validate_and_finish() {
    if (symbols_.empty()) throw ModelError("alphabet must not be empty");
    if (symbols_.size() != probs_.size())
        throw ModelError("alphabet symbol/probability count mismatch");
    Rational sum = 0;
    for (const auto& p : probs_) {
        if (p <= 0) throw ModelError("alphabet probabilities must be positive");
        sum += p;
    }
    // Probabilities are exact rationals, so the sum must be exactly 1; the
    // 1e-12 tolerance only matters for callers that construct from doubles.
    Rational err = sum - 1;
    if (err < 0) err = -err;
    if (err * 1000000000000LL > 1) throw ModelError("alphabet probabilities must sum to 1");
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[i] == symbols_[j]) throw ModelError("duplicate symbol: " + symbols_[i]);
    if (eof_index_ && *eof_index_ >= symbols_.size())
        throw ModelError("eof index out of range");

    // Common denominator for the integer codec view.
    BigInt den = 1;
    for (const auto& p : probs_) {
        BigInt d = denominator(p);
        den = den / gcd(den, d) * d;
    }
    if (den > BigInt(std::int64_t(1) << 31))
        throw ModelError("probability denominators too fine for codec subdivision");
    den_ = den.convert_to<std::int64_t>();
    nums_.clear();
    for (const auto& p : probs_) {
        BigInt n = numerator(p) * (den / denominator(p));
        nums_.push_back(n.convert_to<std::int64_t>());
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

CumulativeModel build_cumulative(const Alphabet& alphabet) {
    CumulativeModel m;
    m.eof_index = alphabet.eof_index();
    m.den = alphabet.common_denominator();
    Rational acc = 0;
    std::int64_t acc_num = 0;
    m.c_num.reserve(alphabet.size() + 1);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        m.c.push_back(acc);
        m.c_num.push_back(acc_num);
        acc += alphabet.prob(static_cast<Symbol>(i));
        acc_num += alphabet.numerators()[i];
        m.d.push_back(acc);
    }
    m.c_num.push_back(acc_num);
    if (acc != 1 || acc_num != m.den)
        throw ModelError("cumulative model does not close at 1");
    return m;
}

WordInterval word_interval(const CumulativeModel& model, const Word& word) {
    if (word.empty()) throw EncodeError("word must be nonempty");
    Rational lo = 0, hi = 1;
    for (Symbol s : word) {
        if (s >= model.size()) throw EncodeError("unknown symbol index");
        const Rational width = hi - lo;
        hi = lo + model.d[s] * width;
        lo = lo + model.c[s] * width;
    }
    return {lo, hi};
}

Word sample_word(const Alphabet& alphabet, std::size_t len, std::uint64_t rng_seed) {
    if (len < 1) throw EncodeError("sample_word requires len >= 1");
    Rng rng(mix_seed(rng_seed, 0x77a2d));
    // Renormalize away the EOF symbol; it is appended, never drawn.
    std::vector<double> cum;
    std::vector<Symbol> ids;
    double total = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet.eof_index() && *alphabet.eof_index() == i) continue;
        total += to_double(alphabet.prob(static_cast<Symbol>(i)));
        cum.push_back(total);
        ids.push_back(static_cast<Symbol>(i));
    }
    Word w;
    w.reserve(len + 1);
    for (std::size_t k = 0; k < len; ++k) {
        const double u = rng.next_double() * total;
        std::size_t j = 0;
        while (j + 1 < cum.size() && u >= cum[j]) ++j;
        w.push_back(ids[j]);
    }
    if (alphabet.eof_index()) w.push_back(static_cast<Symbol>(*alphabet.eof_index()));
    return w;
}

Alphabet alphabet1() {
    return Alphabet({"A", "T", "C", "G"}, std::vector<std::string>{"0.50", "0.25", "0.23", "0.02"});
}

Alphabet alphabet2() {
    return Alphabet({"A", "T", "C", "G", "EOF"},
                    std::vector<std::string>{"0.25", "0.24", "0.23", "0.23", "0.05"}, 4);
}

Alphabet alphabet_ratio() {
    return Alphabet({"A", "B", "C", "EOF"},
                    std::vector<std::string>{"0.33", "0.33", "0.33", "0.01"}, 3);
}

std::string word_to_string(const Alphabet& a, const Word& w) {
    std::string out;
    bool multichar = false;
    for (const auto& s : a.symbols())
        if (s.size() > 1) multichar = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (multichar && i) out.push_back(' ');
        out += a.symbol(w[i]);
    }
    return out;
}

Word word_from_tokens(const Alphabet& a, const std::vector<std::string>& tokens) {
    Word w;
    for (const auto& t : tokens) {
        auto s = a.find(t);
        if (!s) throw EncodeError("unknown symbol: " + t);
        w.push_back(*s);
    }
    return w;
}

} // namespace mcc
