#include "mcc/ac.hpp"

#include <cmath>

namespace mcc {

namespace {

void check_config(const CumulativeModel& model, const CodecConfig& cfg) {
    if (cfg.precision_bits < 8 || cfg.precision_bits > 30)
        throw EncodeError("precision_bits must be in [8,30]");
    if (cfg.mode == CodecConfig::Mode::EofIncluded && !model.eof_index)
        throw EncodeError("EOF-included mode needs an alphabet with an EOF symbol");
}

void check_word(const CumulativeModel& model, const Word& word, const CodecConfig& cfg) {
    if (word.empty()) throw EncodeError("word must be nonempty");
    for (Symbol s : word)
        if (s >= model.size()) throw EncodeError("unknown symbol index");
    if (cfg.mode == CodecConfig::Mode::EofIncluded) {
        const Symbol eof = static_cast<Symbol>(*model.eof_index);
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] == eof) throw EncodeError("interior EOF symbol");
        if (word.back() != eof) throw EncodeError("EOF-included word must end with EOF");
    }
}

// Shared register geometry. The frame is [0, 2^F); both encoder and decoder
// narrow the source interval with identical integer floor subdivision so
// their states never diverge.
struct AcRegs {
    int F;
    std::uint64_t FULL, HALF, QUARTER;
    std::uint64_t lo = 0, hi = 0;

    explicit AcRegs(int precision_bits)
        : F(precision_bits), FULL(std::uint64_t(1) << F), HALF(FULL >> 1), QUARTER(FULL >> 2) {
        hi = FULL;
    }

    void narrow(const CumulativeModel& m, Symbol s) {
        const std::uint64_t range = hi - lo;
        const auto scale = [&](std::int64_t num) {
            return static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(range) * static_cast<std::uint64_t>(num)) /
                static_cast<std::uint64_t>(m.den));
        };
        const std::uint64_t lo_off = scale(m.c_num[s]);
        const std::uint64_t hi_off = scale(m.c_num[s + 1]);
        if (hi_off <= lo_off) throw EncodeError("precision exhausted for symbol probability");
        hi = lo + hi_off;
        lo = lo + lo_off;
    }
};

std::size_t max_decoded_symbols(const CumulativeModel& model, std::size_t nbits, int F) {
    double pmax = 0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double p =
            double(model.c_num[i + 1] - model.c_num[i]) / double(model.den);
        if (p > pmax) pmax = p;
    }
    if (pmax >= 1.0) return nbits + 64; // degenerate single-symbol alphabet
    const double per_symbol = -std::log2(pmax);
    return static_cast<std::size_t>(double(nbits + 2 * std::size_t(F) + 8) / per_symbol) + 8;
}

} // namespace

WordInterval ac_interval(const BitString& bits) {
    if (bits.empty()) throw EncodeError("ac_interval of empty bit string");
    BigInt value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) value = value * 2 + bits[i];
    BigInt den = BigInt(1) << bits.size();
    return {Rational(value, den), Rational(value + 1, den)};
}

BitString ac_encode(const CumulativeModel& model, const Word& word, const CodecConfig& cfg) {
    check_config(model, cfg);
    check_word(model, word, cfg);

    AcRegs r(cfg.precision_bits);
    BitString out;
    std::uint64_t pending = 0; // deferred opposite bits from midpoint underflow

    auto emit = [&](int bit) {
        out.push_back(bit);
        for (; pending; --pending) out.push_back(!bit);
    };

    for (Symbol s : word) {
        r.narrow(model, s);
        for (;;) {
            if (r.hi <= r.HALF) {
                emit(0);
                r.lo <<= 1;
                r.hi <<= 1;
            } else if (r.lo >= r.HALF) {
                emit(1);
                r.lo = (r.lo << 1) - r.FULL;
                r.hi = (r.hi << 1) - r.FULL;
            } else if (r.lo >= r.QUARTER && r.hi <= 3 * r.QUARTER) {
                ++pending;
                r.lo = (r.lo << 1) - r.HALF;
                r.hi = (r.hi << 1) - r.HALF;
            } else {
                break;
            }
        }
    }

    // Termination: undo the pending midpoint rescalings exactly (each one is
    // the affine map v -> 2v - HALF) and pick the shortest dyadic interval
    // inside the unwound register interval. The prefix emitted so far is a
    // prefix of every admissible code, so prefix + suffix is globally minimal.
    const std::uint64_t k = pending;
    const BigInt unit = BigInt(1) << (std::size_t(r.F) + k);
    const BigInt shift = (BigInt(r.HALF)) * ((BigInt(1) << k) - 1);
    const BigInt nlo = BigInt(r.lo) + shift;
    const BigInt nhi = BigInt(r.hi) + shift;
    for (std::size_t m = 0; m <= std::size_t(r.F) + k; ++m) {
        const BigInt grid = unit >> m;
        const BigInt cell = (nlo + grid - 1) / grid; // ceil
        if ((cell + 1) * grid <= nhi) {
            for (std::size_t b = 0; b < m; ++b)
                out.push_back(static_cast<int>((cell >> (m - 1 - b)) & 1));
            return out;
        }
    }
    throw EncodeError("arithmetic coder failed to terminate"); // width >= 1 makes this unreachable
}

Word ac_decode(const CumulativeModel& model, const BitString& bits, const CodecConfig& cfg,
               std::optional<std::size_t> length_hint) {
    check_config(model, cfg);
    if (cfg.mode == CodecConfig::Mode::EofExcluded && !length_hint)
        throw DecodeError("EOF-excluded mode requires a length hint");

    AcRegs r(cfg.precision_bits);
    std::size_t cursor = 0;
    const auto next_bit = [&]() -> std::uint64_t {
        return cursor < bits.size() ? bits[cursor++] : 0; // pad past the end with zeros
    };
    std::uint64_t value = 0;
    for (int i = 0; i < r.F; ++i) value = (value << 1) | next_bit();

    const Symbol eof =
        model.eof_index ? static_cast<Symbol>(*model.eof_index) : static_cast<Symbol>(-1);
    const std::size_t cap = length_hint ? *length_hint
                                        : max_decoded_symbols(model, bits.size(), r.F);

    Word word;
    for (;;) {
        if (word.size() >= cap) {
            if (cfg.mode == CodecConfig::Mode::EofIncluded)
                throw DecodeError("bit sequence does not terminate in EOF");
            break;
        }
        const std::uint64_t range = r.hi - r.lo;
        if (value < r.lo || value >= r.hi)
            throw DecodeError("bit sequence inconsistent with any word");
        const std::uint64_t off = value - r.lo;
        Symbol sym = static_cast<Symbol>(-1);
        for (std::size_t s = 0; s < model.size(); ++s) {
            const std::uint64_t b_lo = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(range) *
                 static_cast<std::uint64_t>(model.c_num[s])) /
                static_cast<std::uint64_t>(model.den));
            const std::uint64_t b_hi = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(range) *
                 static_cast<std::uint64_t>(model.c_num[s + 1])) /
                static_cast<std::uint64_t>(model.den));
            if (off >= b_lo && off < b_hi) {
                sym = static_cast<Symbol>(s);
                break;
            }
        }
        if (sym == static_cast<Symbol>(-1))
            throw DecodeError("bit sequence inconsistent with any word");
        word.push_back(sym);
        if (cfg.mode == CodecConfig::Mode::EofIncluded && sym == eof) break;

        r.narrow(model, sym);
        for (;;) {
            if (r.hi <= r.HALF) {
                r.lo <<= 1;
                r.hi <<= 1;
                value = (value << 1) | next_bit();
            } else if (r.lo >= r.HALF) {
                r.lo = (r.lo << 1) - r.FULL;
                r.hi = (r.hi << 1) - r.FULL;
                value = ((value - r.HALF) << 1) | next_bit();
            } else if (r.lo >= r.QUARTER && r.hi <= 3 * r.QUARTER) {
                r.lo = (r.lo << 1) - r.HALF;
                r.hi = (r.hi << 1) - r.HALF;
                value = ((value - r.QUARTER) << 1) | next_bit();
            } else {
                break;
            }
        }
    }
    return word;
}

BitString sac_encode(const CumulativeModel& model, const Word& word, const CodecConfig& cfg) {
    return substitute_ones(ac_encode(model, word, cfg));
}

Word sac_decode(const CumulativeModel& model, const BitString& bits, const CodecConfig& cfg,
                std::optional<std::size_t> length_hint) {
    if (!bits.no_consecutive_ones())
        throw DecodeError("malformed SAC input: consecutive 1-bits");
    return ac_decode(model, desubstitute_ones(bits), cfg, length_hint);
}

} // namespace mcc
