#ifndef MCC_BITSTRING_HPP
#define MCC_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcc/common.hpp"

namespace mcc {

/// Finite 0/1 sequence. Carries no constraint by itself; the run-length
/// predicates below are queryable so codecs can enforce their own rules.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    static BitString from_string(std::string_view s) {
        BitString b;
        b.bits_.reserve(s.size());
        for (char c : s) {
            if (c == '0' || c == '1')
                b.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
            else if (c == ' ' || c == '_')
                continue;
            else
                throw DecodeError("bit string contains non-binary character");
        }
        return b;
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    void push_back(int bit) { bits_.push_back(bit ? 1 : 0); }
    void pop_back() { bits_.pop_back(); }
    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i]; }

    std::size_t count_ones() const {
        std::size_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    // (1,inf) run-length constraint: every 1 is followed by at least one 0.
    bool no_consecutive_ones() const {
        for (std::size_t i = 1; i < bits_.size(); ++i)
            if (bits_[i - 1] && bits_[i]) return false;
        return true;
    }

    bool ends_with_zero() const { return !bits_.empty() && bits_.back() == 0; }

    bool operator==(const BitString& o) const { return bits_ == o.bits_; }
    bool operator!=(const BitString& o) const { return bits_ != o.bits_; }

    const std::vector<std::uint8_t>& data() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Replace every 1 with 10. Used by SAC and MoHuffman.
inline BitString substitute_ones(const BitString& in) {
    BitString out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        out.push_back(in[i]);
        if (in[i]) out.push_back(0);
    }
    return out;
}

/// Inverse of substitute_ones: every 10 pair collapses back to a 1.
/// Rejects inputs that cannot have been produced by the substitution.
inline BitString desubstitute_ones(const BitString& in) {
    BitString out;
    std::size_t i = 0;
    while (i < in.size()) {
        if (in[i] == 1) {
            if (i + 1 >= in.size() || in[i + 1] != 0)
                throw DecodeError("malformed substitution code: 1 not followed by 0");
            out.push_back(1);
            i += 2;
        } else {
            out.push_back(0);
            ++i;
        }
    }
    return out;
}

} // namespace mcc

#endif
