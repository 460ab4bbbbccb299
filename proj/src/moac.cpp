#include "mcc/moac.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <queue>
#include <tuple>

namespace mcc {

namespace {

using boost::multiprecision::cpp_bin_float_100;

BigInt fibonacci(int n) { // Fib(1) = Fib(2) = 1
    if (n <= 0) return 0;
    BigInt a = 0, b = 1;
    for (int i = 1; i < n; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return b;
}

} // namespace

BigInt inv_phi_fixed(int bits) {
    // (sqrt(5)-1)/2 * 2^bits, rounded to nearest: 4z = U + frac - 2*2^bits
    // with U = floor(2*sqrt(5)*2^bits), so round(z) = (U - 2^(bits+1) + 2)/4.
    const BigInt full = BigInt(1) << bits;
    const BigInt u = sqrt(BigInt(20) * full * full);
    return (u - 2 * full + 2) / 4;
}

IntervalQ moac_interval(const BitString& bits, int phi_bits) {
    if (bits.empty()) throw EncodeError("moac_interval of empty bit string");
    if (!bits.no_consecutive_ones())
        throw EncodeError("constraint violation: consecutive 1-bits");
    const int q = phi_bits;
    const BigInt inv = inv_phi_fixed(q);
    BigInt power = inv; // (1/phi)^i at scale 2^q
    BigInt lo = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) lo += power;
        if (i + 1 < bits.size()) power = (power * inv) >> q;
    }
    // power is now (1/phi)^n; one more multiply when the code ends in 1.
    BigInt height = bits[bits.size() - 1] ? ((power * inv) >> q) : power;
    return {lo, lo + height, q};
}

IntervalQ moac_cell_interval(const BitString& bits, int phi_bits) {
    if (bits.empty()) throw EncodeError("moac_cell_interval of empty bit string");
    const int q = phi_bits;
    const BigInt full = BigInt(1) << q;
    const BigInt half = full >> 1;
    const BigInt inv = inv_phi_fixed(q);
    BigInt x = 0, y = full;
    int prev = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (prev == 1) {
            if (bits[i] == 1) throw EncodeError("constraint violation: consecutive 1-bits");
            // forced 0 after a 1 keeps the parent interval
            prev = 0;
            continue;
        }
        const BigInt split = x + (((y - x) * inv + half) >> q); // round half up
        if (bits[i])
            x = split;
        else
            y = split;
        prev = bits[i];
    }
    return {x, y, q};
}

std::vector<BitString> constrained_strings(int n) {
    std::vector<BitString> out;
    BitString cur;
    // lexicographic DFS
    struct Rec {
        std::vector<BitString>& out;
        int n;
        void go(BitString& cur, int last) {
            if (static_cast<int>(cur.size()) == n) {
                out.push_back(cur);
                return;
            }
            BitString next = cur;
            next.push_back(0);
            go(next, 0);
            if (last == 0) {
                BitString next1 = cur;
                next1.push_back(1);
                go(next1, 1);
            }
        }
    } rec{out, n};
    rec.go(cur, 0);
    return out;
}

BigInt count_codes(int n) {
    if (n < 1) throw EncodeError("count_codes requires n >= 1");
    return fibonacci(n + 2);
}

BigInt count_ones(int n) {
    if (n < 1) throw EncodeError("count_ones requires n >= 1");
    if (n == 1) return 1;
    BigInt prev2 = 1, prev1 = 2; // one[1], one[2]
    if (n == 2) return prev1;
    BigInt fib_a = 1, fib_b = 1; // Fib(1), Fib(2)
    for (int i = 3; i <= n; ++i) {
        // one[i] = one[i-1] + one[i-2] + Fib(i)
        BigInt fib_i = fib_a + fib_b; // Fib(i)
        fib_a = fib_b;
        fib_b = fib_i;
        BigInt cur = prev1 + prev2 + fib_i;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

double one_bit_density(int n_max) {
    if (n_max < 10) throw EncodeError("one_bit_density requires n_max >= 10");
    const BigInt num = count_ones(n_max - 1);
    const BigInt den = BigInt(n_max) * fibonacci(n_max + 1);
    return Rational(num, den).convert_to<double>();
}

double length_ratio_limit() {
    const cpp_bin_float_100 phi = (1 + sqrt(cpp_bin_float_100(5))) / 2;
    const cpp_bin_float_100 r = cpp_bin_float_100(3) / 2 * log(phi) / log(cpp_bin_float_100(2));
    return r.convert_to<double>();
}

// ---------------------------------------------------------------------------
// Streaming codec.
//
// The register frame [0, 2^F) always represents the current code cell. Its
// split point is the constant S ~ 2^F/phi. Emitting a bit renormalizes the
// frame onto the chosen child cell; when the source interval straddles S
// with too little width left, the frame is expanded around S by a factor of
// phi and the deferred descent is resolved later. Expansion matches the
// tree's self-similarity exactly on the high side (one extra 0-bit per
// expansion) and on the low side only for every second expansion (one 01
// pair), so an odd count resolves onto the enclosing cell with a pure shift
// and continues. phi being irrational, none of this is exact in fixed
// point — the decoder can disagree with the encoder, which is why encodings
// are verified by self-decoding.
// ---------------------------------------------------------------------------

namespace {

struct MoacRegs {
    int F;
    std::int64_t FULL, HALF, S, T;

    explicit MoacRegs(int precision_bits) : F(precision_bits) {
        if (F < 8 || F > 30) throw EncodeError("precision_bits must be in [8,30]");
        FULL = std::int64_t(1) << F;
        HALF = FULL >> 1;
        S = inv_phi_fixed(F).convert_to<std::int64_t>();
        T = FULL >> 3; // straddle width below which the frame is expanded
    }

    static std::int64_t floordiv(__int128 a, std::int64_t b) {
        __int128 q = a / b;
        if (a % b != 0 && ((a < 0) != (b < 0))) --q;
        return static_cast<std::int64_t>(q);
    }

    std::int64_t map_low(std::int64_t v) const { // [0,S] -> [0,FULL]
        return floordiv(static_cast<__int128>(v) * FULL, S);
    }
    std::int64_t map_high(std::int64_t v) const { // [S,FULL] -> [0,FULL]
        return floordiv(static_cast<__int128>(v - S) * FULL, FULL - S);
    }
    std::int64_t map_expand(std::int64_t v) const { // zoom by phi around S
        const __int128 phi_fx = FULL + S; // phi = 1 + 1/phi
        return S + floordiv(static_cast<__int128>(v - S) * phi_fx + HALF, FULL);
    }

    void narrow(std::int64_t& lo, std::int64_t& hi, const CumulativeModel& m, Symbol s) const {
        const std::int64_t range = hi - lo;
        const auto scale = [&](std::int64_t num) {
            return static_cast<std::int64_t>((static_cast<__int128>(range) * num) / m.den);
        };
        const std::int64_t lo_off = scale(m.c_num[s]);
        const std::int64_t hi_off = scale(m.c_num[s + 1]);
        if (hi_off <= lo_off) throw EncodeError("precision exhausted for symbol probability");
        hi = lo + hi_off;
        lo = lo + lo_off;
    }

    /// Child slot of symbol s inside [lo, hi), same quantization as narrow().
    std::pair<std::int64_t, std::int64_t> child(std::int64_t lo, std::int64_t hi,
                                                const CumulativeModel& m, Symbol s) const {
        const std::int64_t range = hi - lo;
        const auto scale = [&](std::int64_t num) {
            return static_cast<std::int64_t>((static_cast<__int128>(range) * num) / m.den);
        };
        return {lo + scale(m.c_num[s]), lo + scale(m.c_num[s + 1])};
    }
};

void check_word_moac(const CumulativeModel& model, const Word& word, const MoacConfig& cfg) {
    if (word.empty()) throw EncodeError("word must be nonempty");
    for (Symbol s : word)
        if (s >= model.size()) throw EncodeError("unknown symbol index");
    if (cfg.mode == CodecConfig::Mode::EofIncluded) {
        if (!model.eof_index) throw EncodeError("EOF-included mode needs an EOF symbol");
        const Symbol eof = static_cast<Symbol>(*model.eof_index);
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] == eof) throw EncodeError("interior EOF symbol");
        if (word.back() != eof) throw EncodeError("EOF-included word must end with EOF");
    }
}

/// Shortest constrained suffix whose cell lands inside [lo, hi), found by a
/// best-first search over the quantized cell tree. Ties prefer the 0 branch.
std::vector<std::uint8_t> shortest_suffix(const MoacRegs& r, std::int64_t lo, std::int64_t hi,
                                          std::uint64_t k_pending) {
    struct Node {
        std::int64_t lo, hi;
        std::uint64_t k;
        std::vector<std::uint8_t> bits;
        std::uint64_t seq;
    };
    // order strictly by (suffix length, insertion sequence)
    auto cmp = [](const Node& a, const Node& b) {
        if (a.bits.size() != b.bits.size()) return a.bits.size() > b.bits.size();
        return a.seq > b.seq;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> queue(cmp);
    std::uint64_t seq = 0;
    const std::int64_t clamp_lo = -(r.FULL << 2), clamp_hi = r.FULL << 2;
    const auto clamp = [&](std::int64_t v) {
        return v < clamp_lo ? clamp_lo : (v > clamp_hi ? clamp_hi : v);
    };
    const std::size_t depth_cap = 4 * static_cast<std::size_t>(r.F) + 2 * k_pending + 16;

    queue.push({lo, hi, k_pending, {}, seq++});
    while (!queue.empty()) {
        Node n = queue.top();
        queue.pop();
        if (n.k == 0 && n.lo <= 0 && n.hi >= r.FULL) return n.bits;
        if (n.bits.size() > depth_cap) break;
        if (n.hi - n.lo < 1) continue;

        if (n.k > 0) {
            // Pending expansions resolve first; see the resolution rules above.
            if (n.lo < r.S) {
                Node c = n;
                c.bits.push_back(0);
                for (std::uint64_t j = 0; j + 1 < n.k; j += 2) {
                    c.bits.push_back(1);
                    c.bits.push_back(0);
                }
                std::int64_t t_lo = n.lo, t_hi = std::min(n.hi, r.S);
                if (n.k % 2 == 0) {
                    t_lo = clamp(r.map_low(t_lo));
                    t_hi = clamp(r.map_low(t_hi));
                } else {
                    t_lo += r.FULL - r.S;
                    t_hi += r.FULL - r.S;
                }
                c.lo = t_lo;
                c.hi = t_hi;
                c.k = 0;
                c.seq = seq++;
                if (c.hi - c.lo >= 1) queue.push(c);
            }
            if (n.hi > r.S) {
                Node c = n;
                c.bits.push_back(1);
                c.bits.push_back(0);
                for (std::uint64_t j = 0; j < n.k; ++j) c.bits.push_back(0);
                c.lo = clamp(r.map_high(std::max(n.lo, r.S)));
                c.hi = clamp(r.map_high(n.hi));
                c.k = 0;
                c.seq = seq++;
                if (c.hi - c.lo >= 1) queue.push(c);
            }
            continue;
        }

        if (n.lo < r.S) {
            Node c = n;
            c.bits.push_back(0);
            c.lo = clamp(r.map_low(n.lo));
            c.hi = clamp(r.map_low(std::min(n.hi, r.S)));
            c.seq = seq++;
            if (c.hi - c.lo >= 1) queue.push(c);
        }
        if (n.hi > r.S) {
            Node c = n;
            c.bits.push_back(1);
            c.bits.push_back(0);
            c.lo = clamp(r.map_high(std::max(n.lo, r.S)));
            c.hi = clamp(r.map_high(n.hi));
            c.seq = seq++;
            if (c.hi - c.lo >= 1) queue.push(c);
        }
    }
    throw EncodeError("moac encoder failed to terminate");
}

/// One register renormalization pass. Emits bits through the callback;
/// encoder appends them to the output, decoder checks them off the input.
template <typename EmitFn>
void drain_registers(const MoacRegs& r, std::int64_t& lo, std::int64_t& hi, std::uint64_t& k,
                     EmitFn&& emit) {
    for (;;) {
        if (hi <= r.S) {
            emit(0);
            for (std::uint64_t j = 0; j + 1 < k; j += 2) {
                emit(1);
                emit(0);
            }
            if (k % 2 == 1) {
                lo += r.FULL - r.S;
                hi += r.FULL - r.S;
            } else {
                lo = r.map_low(lo);
                hi = r.map_low(hi);
            }
            k = 0;
        } else if (lo >= r.S) {
            emit(1);
            emit(0);
            for (std::uint64_t j = 0; j < k; ++j) emit(0);
            lo = r.map_high(lo);
            hi = r.map_high(hi);
            k = 0;
        } else if (hi - lo < r.T) {
            lo = r.map_expand(lo);
            hi = r.map_expand(hi);
            ++k;
        } else {
            break;
        }
    }
}

} // namespace

BitString moac_encode(const CumulativeModel& model, const Word& word, const MoacConfig& cfg) {
    check_word_moac(model, word, cfg);
    const MoacRegs r(cfg.precision_bits);

    BitString out;
    std::int64_t lo = 0, hi = r.FULL;
    std::uint64_t k = 0;

    for (Symbol s : word) {
        r.narrow(lo, hi, model, s);
        drain_registers(r, lo, hi, k, [&](int b) { out.push_back(b); });
    }
    for (std::uint8_t b : shortest_suffix(r, lo, hi, k)) out.push_back(b);
    if (out.empty()) out.push_back(0); // degenerate one-symbol source
    return out;
}

Word moac_decode(const CumulativeModel& model, const BitString& bits, const MoacConfig& cfg,
                 std::optional<std::size_t> length_hint) {
    if (cfg.mode == CodecConfig::Mode::EofExcluded && !length_hint)
        throw DecodeError("EOF-excluded mode requires a length hint");
    if (cfg.mode == CodecConfig::Mode::EofIncluded && !model.eof_index)
        throw DecodeError("EOF-included mode needs an EOF symbol");
    if (!bits.no_consecutive_ones())
        throw DecodeError("malformed MoAC input: consecutive 1-bits");
    if (!bits.empty() && !bits.ends_with_zero())
        throw DecodeError("malformed MoAC input: must end with a 0-bit");

    const MoacRegs r(cfg.precision_bits);
    const std::int64_t half = r.FULL >> 1;
    const Symbol eof =
        model.eof_index ? static_cast<Symbol>(*model.eof_index) : static_cast<Symbol>(-1);
    const std::size_t cap = length_hint ? *length_hint : bits.size() * 8 + 64;

    std::int64_t lo = 0, hi = r.FULL;
    std::uint64_t k = 0;
    std::size_t cursor = 0; // stream bits the replayed encoder has emitted so far

    // Code value seen from the current frame: descend the cell tree along
    // the bits not yet replayed and take the left endpoint; contributions
    // below one register unit are dropped. phi being irrational, this value
    // and the encoder's register maps round differently, which is the
    // finite-precision failure mode of MoAC.
    const auto value_from = [&](std::size_t pos) {
        std::int64_t x = 0, y = r.FULL;
        int prev = 0;
        for (std::size_t j = pos; j < bits.size() && y - x >= 2; ++j) {
            if (prev == 1) {
                prev = 0;
                continue;
            }
            const std::int64_t split =
                x + static_cast<std::int64_t>((static_cast<__int128>(y - x) * r.S + half) >> r.F);
            if (bits[j])
                x = split;
            else
                y = split;
            prev = bits[j];
        }
        return x;
    };

    Word word;
    for (;;) {
        // Pending expansions have zoomed the frame around S; the plain
        // cell-tree value must be mapped through the same zoom.
        std::int64_t v = value_from(cursor);
        for (std::uint64_t j = 0; j < k; ++j) {
            v = r.map_expand(v);
            if (v < -r.FULL) v = -r.FULL;
            if (v > 2 * r.FULL) v = 2 * r.FULL;
        }
        if (v < lo) v = lo;
        if (v >= hi) v = hi - 1;
        Symbol found = static_cast<Symbol>(-1);
        for (std::size_t s = 0; s < model.size(); ++s) {
            const auto [c_lo, c_hi] = r.child(lo, hi, model, static_cast<Symbol>(s));
            if (c_lo <= v && v < c_hi) {
                found = static_cast<Symbol>(s);
                break;
            }
        }
        if (found == static_cast<Symbol>(-1))
            throw DecodeError("bit sequence inconsistent with any word");
        word.push_back(found);

        // Repeat the encoder's steps for the chosen symbol; the bits its
        // renormalizations emit must match the stream at the cursor.
        r.narrow(lo, hi, model, found);
        drain_registers(r, lo, hi, k, [&](int b) {
            if (cursor >= bits.size() || bits[cursor] != b)
                throw DecodeError("bit sequence diverges from the replayed encoder");
            ++cursor;
        });

        const bool done = (cfg.mode == CodecConfig::Mode::EofIncluded && found == eof) ||
                          (length_hint && word.size() == *length_hint);
        if (done) {
            // The rest of the stream must be exactly the termination suffix
            // the encoder would emit from this state.
            const auto suffix = shortest_suffix(r, lo, hi, k);
            if (suffix.empty() && cursor == 0)
                return word; // degenerate one-symbol source, code is a lone 0
            if (bits.size() - cursor != suffix.size())
                throw DecodeError("bit sequence diverges from the replayed encoder");
            for (std::size_t i = 0; i < suffix.size(); ++i)
                if (bits[cursor + i] != suffix[i])
                    throw DecodeError("bit sequence diverges from the replayed encoder");
            return word;
        }
        if (word.size() > cap) throw DecodeError("bit sequence does not terminate in EOF");
    }
}

MoacVerifiedResult moac_encode_verified(const CumulativeModel& model, const Word& word,
                                        const MoacConfig& cfg) {
    MoacVerifiedResult res;
    try {
        res.bits = moac_encode(model, word, cfg);
    } catch (const Error&) {
        res.round_trip_ok = false;
        return res;
    }
    try {
        std::optional<std::size_t> hint;
        if (cfg.mode == CodecConfig::Mode::EofExcluded) hint = word.size();
        const Word back = moac_decode(model, res.bits, cfg, hint);
        res.round_trip_ok = (back == word);
    } catch (const Error&) {
        res.round_trip_ok = false;
    }
    return res;
}

} // namespace mcc
