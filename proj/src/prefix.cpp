#include "mcc/prefix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace mcc {

namespace {

bool is_prefix(const BitString& a, const BitString& b) { // a prefix of b
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

/// Symbols ordered by descending probability (stable on the original order).
std::vector<Symbol> symbols_by_probability(const Alphabet& a) {
    std::vector<Symbol> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Symbol x, Symbol y) { return a.prob(x) > a.prob(y); });
    return order;
}

/// Assign a set of codewords to symbols: shorter codes to more probable
/// symbols, length ties broken by fewer 1-bits, then numerically.
std::vector<BitString> assign_codes(const Alphabet& a, std::vector<BitString> codes) {
    std::sort(codes.begin(), codes.end(), [](const BitString& x, const BitString& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        if (x.count_ones() != y.count_ones()) return x.count_ones() < y.count_ones();
        return x.data() < y.data();
    });
    const auto order = symbols_by_probability(a);
    std::vector<BitString> out(a.size());
    for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = codes[i];
    return out;
}

std::vector<std::size_t> huffman_lengths(const Alphabet& a) {
    struct Node {
        Rational weight;
        std::size_t order; // smallest original index in the subtree, for determinism
        std::vector<Symbol> leaves;
    };
    auto cmp = [](const Node& x, const Node& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        return x.order > y.order;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < a.size(); ++i)
        heap.push({a.prob(static_cast<Symbol>(i)), i, {static_cast<Symbol>(i)}});
    std::vector<std::size_t> depth(a.size(), 0);
    while (heap.size() > 1) {
        Node x = heap.top();
        heap.pop();
        Node y = heap.top();
        heap.pop();
        for (Symbol s : x.leaves) ++depth[s];
        for (Symbol s : y.leaves) ++depth[s];
        Node merged{x.weight + y.weight, std::min(x.order, y.order), std::move(x.leaves)};
        merged.leaves.insert(merged.leaves.end(), y.leaves.begin(), y.leaves.end());
        heap.push(std::move(merged));
    }
    return depth;
}

/// Canonical zero-first codes for a multiset of lengths.
std::vector<BitString> canonical_codes(std::vector<std::size_t> lengths) {
    std::sort(lengths.begin(), lengths.end());
    std::vector<BitString> codes;
    std::uint64_t code = 0;
    std::size_t prev_len = lengths.empty() ? 0 : lengths[0];
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i > 0) {
            code += 1;
            code <<= (lengths[i] - prev_len);
        }
        prev_len = lengths[i];
        BitString b;
        for (std::size_t j = 0; j < lengths[i]; ++j)
            b.push_back(static_cast<int>((code >> (lengths[i] - 1 - j)) & 1));
        codes.push_back(b);
    }
    return codes;
}

/// All bit strings of length n with no consecutive 1s that end in 0, as
/// integers for compactness.
void collect_constrained(std::size_t len, std::uint32_t value, std::size_t pos, int last,
                         std::vector<std::pair<std::size_t, std::uint32_t>>& out) {
    if (pos == len) {
        if (last == 0) out.emplace_back(len, value);
        return;
    }
    collect_constrained(len, value << 1, pos + 1, 0, out);
    if (last == 0) collect_constrained(len, (value << 1) | 1, pos + 1, 1, out);
}

BitString to_bits(std::size_t len, std::uint32_t value) {
    BitString b;
    for (std::size_t i = 0; i < len; ++i)
        b.push_back(static_cast<int>((value >> (len - 1 - i)) & 1));
    return b;
}

} // namespace

Codebook::Codebook(const Alphabet& alphabet, std::vector<BitString> codes)
    : codes_(std::move(codes)) {
    if (codes_.size() != alphabet.size())
        throw ModelError("codebook size does not match alphabet");
    expected_length_ = 0;
    expected_ones_ = 0;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        expected_length_ += alphabet.prob(static_cast<Symbol>(i)) * Rational(codes_[i].size());
        expected_ones_ += alphabet.prob(static_cast<Symbol>(i)) * Rational(codes_[i].count_ones());
    }
}

bool Codebook::prefix_free() const {
    for (std::size_t i = 0; i < codes_.size(); ++i)
        for (std::size_t j = 0; j < codes_.size(); ++j)
            if (i != j && is_prefix(codes_[i], codes_[j])) return false;
    return true;
}

Rational Codebook::kraft_sum() const {
    Rational sum = 0;
    for (const auto& c : codes_) sum += Rational(1, BigInt(1) << c.size());
    return sum;
}

bool Codebook::run_length_constrained() const {
    for (const auto& c : codes_)
        if (!c.no_consecutive_ones() || !c.ends_with_zero()) return false;
    return true;
}

Codebook huffman(const Alphabet& alphabet) {
    if (alphabet.size() < 2) throw ModelError("huffman requires at least 2 symbols");
    return Codebook(alphabet, assign_codes(alphabet, canonical_codes(huffman_lengths(alphabet))));
}

Codebook mohuffman(const Alphabet& alphabet) {
    const Codebook h = huffman(alphabet);
    std::vector<BitString> subst;
    subst.reserve(h.size());
    for (const auto& c : h.codes()) subst.push_back(substitute_ones(c));
    return Codebook(alphabet, std::move(subst));
}

Codebook mopc_star(const Alphabet& alphabet, std::size_t max_len) {
    const std::size_t n = alphabet.size();
    if (n < 2) throw ModelError("mopc_star requires at least 2 symbols");
    if (max_len < 1 || max_len > 24) throw ModelError("mopc_star max_len out of range");

    // Candidate codewords: constrained, end in 0, sorted by (length, ones,
    // value) so that a chosen combination is already in assignment order.
    std::vector<std::pair<std::size_t, std::uint32_t>> cands;
    for (std::size_t len = 1; len <= max_len; ++len)
        collect_constrained(len, 0, 0, 0, cands);
    std::vector<BitString> cand_bits;
    cand_bits.reserve(cands.size());
    for (auto& [len, val] : cands) cand_bits.push_back(to_bits(len, val));
    std::vector<std::size_t> idx(cands.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = cand_bits[a];
        const auto& y = cand_bits[b];
        if (x.size() != y.size()) return x.size() < y.size();
        if (x.count_ones() != y.count_ones()) return x.count_ones() < y.count_ones();
        return x.data() < y.data();
    });
    std::vector<BitString> pool;
    pool.reserve(idx.size());
    for (std::size_t i : idx) pool.push_back(cand_bits[i]);

    // Prefix conflicts between pool entries, precomputed.
    const std::size_t m = pool.size();
    std::vector<std::vector<std::uint64_t>> conflict(m,
                                                     std::vector<std::uint64_t>((m + 63) / 64, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && (is_prefix(pool[i], pool[j]) || is_prefix(pool[j], pool[i])))
                conflict[i][j / 64] |= std::uint64_t(1) << (j % 64);

    // Exact integer objective: probabilities over the common denominator.
    const auto order = symbols_by_probability(alphabet);
    std::vector<std::int64_t> weight(n); // weight[k] = prob numerator of k-th most probable
    for (std::size_t k = 0; k < n; ++k) weight[k] = alphabet.numerators()[order[k]];

    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    std::int64_t best_len = -1, best_ones = -1;
    std::vector<std::uint64_t> blocked((m + 63) / 64, 0);

    // Depth-first over pool indices in increasing order; prune on the exact
    // lower bound "remaining symbols each pay at least the next candidate's
    // length".
    std::vector<std::int64_t> suffix_weight(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) suffix_weight[k] = suffix_weight[k + 1] + weight[k];

    const std::function<void(std::size_t, std::int64_t, std::int64_t)> dfs =
        [&](std::size_t start, std::int64_t acc_len, std::int64_t acc_ones) {
            const std::size_t k = chosen.size();
            if (k == n) {
                if (best_len < 0 || acc_len < best_len ||
                    (acc_len == best_len && acc_ones < best_ones)) {
                    best_len = acc_len;
                    best_ones = acc_ones;
                    best = chosen;
                }
                return;
            }
            for (std::size_t i = start; i + (n - k) <= m; ++i) {
                if (blocked[i / 64] & (std::uint64_t(1) << (i % 64))) continue;
                const std::int64_t cand_len = static_cast<std::int64_t>(pool[i].size());
                const std::int64_t bound =
                    acc_len + weight[k] * cand_len + suffix_weight[k + 1] * cand_len;
                if (best_len >= 0 && bound > best_len) break; // pool sorted by length
                const std::int64_t new_len = acc_len + weight[k] * cand_len;
                const std::int64_t new_ones =
                    acc_ones + weight[k] * static_cast<std::int64_t>(pool[i].count_ones());
                if (best_len >= 0 && new_len == best_len && new_ones >= best_ones &&
                    k + 1 == n)
                    continue;
                std::vector<std::uint64_t> saved = blocked;
                for (std::size_t w = 0; w < blocked.size(); ++w) blocked[w] |= conflict[i][w];
                chosen.push_back(i);
                dfs(i + 1, new_len, new_ones);
                chosen.pop_back();
                blocked = saved;
            }
        };
    dfs(0, 0, 0);

    if (best_len < 0) throw ModelError("no feasible constrained codebook within max_len");
    std::vector<BitString> codes(n);
    for (std::size_t k = 0; k < n; ++k) codes[order[k]] = pool[best[k]];
    return Codebook(alphabet, std::move(codes));
}

Codebook uncoded(const Alphabet& alphabet) {
    const std::size_t n = alphabet.size();
    std::size_t width = 1;
    while ((std::size_t(1) << width) < n) ++width;
    std::vector<BitString> all;
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << width); ++v)
        all.push_back(to_bits(width, v));
    std::sort(all.begin(), all.end(), [](const BitString& x, const BitString& y) {
        if (x.count_ones() != y.count_ones()) return x.count_ones() < y.count_ones();
        return x.data() < y.data();
    });
    all.resize(n);
    return Codebook(alphabet, assign_codes(alphabet, std::move(all)));
}

Codebook isi_mitigating(const Alphabet& alphabet) {
    const std::size_t n = alphabet.size();
    // Words of length len starting with 0 and free of consecutive 1s number
    // Fibonacci(len+1); one of them is all-zero and is excluded.
    std::size_t len = 2;
    for (;; ++len) {
        std::size_t fib_a = 1, fib_b = 1; // Fib(1), Fib(2)
        for (std::size_t i = 2; i <= len + 1; ++i) {
            const std::size_t t = fib_a + fib_b;
            fib_a = fib_b;
            fib_b = t;
        }
        if (fib_a - 1 >= n) break; // fib_a == Fib(len+1) after the loop
        if (len > 30) throw ModelError("alphabet too large for block code");
    }
    // All constrained words of this length starting with 0 and containing a
    // 1, regardless of the final bit.
    std::vector<BitString> words;
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << len); ++v) {
        if (v == 0) continue;
        if (v >> (len - 1)) continue; // must start with 0
        bool ok = true;
        for (std::size_t i = 1; i < len; ++i)
            if (((v >> (i - 1)) & 1) && ((v >> i) & 1)) ok = false;
        if (!ok) continue;
        words.push_back(to_bits(len, v));
    }
    std::sort(words.begin(), words.end(), [](const BitString& x, const BitString& y) {
        if (x.count_ones() != y.count_ones()) return x.count_ones() < y.count_ones();
        return x.data() < y.data();
    });
    words.resize(n);
    return Codebook(alphabet, assign_codes(alphabet, std::move(words)));
}

BitString prefix_encode(const Codebook& book, const Word& word) {
    BitString out;
    for (Symbol s : word) {
        if (s >= book.size()) throw EncodeError("unknown symbol index");
        out.append(book.code(s));
    }
    return out;
}

Word prefix_decode(const Codebook& book, const BitString& bits) {
    std::size_t max_len = 0;
    for (const auto& c : book.codes()) max_len = std::max(max_len, c.size());
    Word out;
    std::size_t pos = 0;
    while (pos < bits.size()) {
        bool matched = false;
        for (std::size_t len = 1; len <= max_len && pos + len <= bits.size() && !matched; ++len) {
            for (std::size_t s = 0; s < book.size(); ++s) {
                const BitString& c = book.code(static_cast<Symbol>(s));
                if (c.size() != len) continue;
                bool eq = true;
                for (std::size_t i = 0; i < len; ++i)
                    if (c[i] != bits[pos + i]) {
                        eq = false;
                        break;
                    }
                if (eq) {
                    out.push_back(static_cast<Symbol>(s));
                    pos += len;
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) throw DecodeError("bits do not parse as a codeword sequence");
    }
    return out;
}

} // namespace mcc
