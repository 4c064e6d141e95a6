#ifndef KOLMONET_BITSTRING_HPP
#define KOLMONET_BITSTRING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kolmonet {

/// A finite binary string. Bits are stored MSB-first inside 64-bit blocks so
/// that comparing blocks as integers yields lexicographic bit order; the total
/// order used everywhere is length-lexicographic (shorter strings first).
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t n) {
        BitString b;
        b.len_ = n;
        b.blocks_.assign(block_count(n), 0);
        return b;
    }

    static BitString ones(std::size_t n) {
        BitString b = zeros(n);
        for (std::size_t i = 0; i < block_count(n); ++i) b.blocks_[i] = ~0ULL;
        b.mask_tail();
        return b;
    }

    /// Parses "0101..."; both "" and "-" denote the empty string.
    static BitString parse(std::string_view s) {
        if (s == "-") return {};
        BitString b;
        for (char c : s) {
            if (c == '0') b.push_back(false);
            else if (c == '1') b.push_back(true);
            else throw std::invalid_argument("bad bitstring character");
        }
        return b;
    }

    /// Encodes a non-negative integer in natural binary, no leading zeros.
    /// Zero encodes as the empty string.
    static BitString from_uint(std::uint64_t v) {
        BitString b;
        if (v == 0) return b;
        int top = 63;
        while (!((v >> top) & 1)) --top;
        for (int i = top; i >= 0; --i) b.push_back((v >> i) & 1);
        return b;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// i = 0 is the leftmost (first) bit.
    bool bit(std::size_t i) const {
        return (blocks_[i >> 6] >> (63 - (i & 63))) & 1;
    }

    void push_back(bool b) {
        if ((len_ & 63) == 0) blocks_.push_back(0);
        if (b) blocks_[len_ >> 6] |= 1ULL << (63 - (len_ & 63));
        ++len_;
    }

    void append(const BitString& o) {
        for (std::size_t i = 0; i < o.len_; ++i) push_back(o.bit(i));
    }

    BitString substr(std::size_t pos, std::size_t n) const {
        if (pos + n > len_) throw std::out_of_range("BitString::substr");
        BitString r;
        for (std::size_t i = 0; i < n; ++i) r.push_back(bit(pos + i));
        return r;
    }

    bool is_prefix_of(const BitString& o) const {
        if (len_ > o.len_) return false;
        for (std::size_t i = 0; i < len_; ++i)
            if (bit(i) != o.bit(i)) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 0; i < len_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    /// Rendering used in files and reports: "-" for the empty string.
    std::string display() const { return len_ == 0 ? std::string("-") : str(); }

    friend bool operator==(const BitString& a, const BitString& b) {
        return a.len_ == b.len_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

    /// Length-lexicographic order.
    friend bool operator<(const BitString& a, const BitString& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        return a.blocks_ < b.blocks_;
    }
    friend bool operator<=(const BitString& a, const BitString& b) { return !(b < a); }
    friend bool operator>(const BitString& a, const BitString& b) { return b < a; }
    friend bool operator>=(const BitString& a, const BitString& b) { return !(a < b); }

    /// The lexicographically next string of the same length, if any.
    std::optional<BitString> lex_next_same_length() const {
        BitString r = *this;
        std::size_t i = len_;
        while (i > 0) {
            --i;
            if (!r.bit(i)) {
                r.set_bit(i, true);
                for (std::size_t k = i + 1; k < len_; ++k) r.set_bit(k, false);
                return r;
            }
        }
        return std::nullopt;
    }

    std::uint64_t hash() const {
        std::uint64_t h = mix64(len_);
        for (std::uint64_t b : blocks_) h = mix64(h ^ b);
        return h;
    }

private:
    static std::size_t block_count(std::size_t n) { return (n + 63) >> 6; }

    static std::uint64_t mix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    void set_bit(std::size_t i, bool v) {
        std::uint64_t m = 1ULL << (63 - (i & 63));
        if (v) blocks_[i >> 6] |= m;
        else blocks_[i >> 6] &= ~m;
    }

    void mask_tail() {
        if (len_ & 63) {
            std::uint64_t keep = ~0ULL << (64 - (len_ & 63));
            blocks_.back() &= keep;
        }
    }

    std::vector<std::uint64_t> blocks_;
    std::size_t len_ = 0;
};

struct BitStringHash {
    std::size_t operator()(const BitString& b) const noexcept {
        return static_cast<std::size_t>(b.hash());
    }
};

inline BitString concat(const BitString& a, const BitString& b) {
    BitString r = a;
    r.append(b);
    return r;
}

/// Self-delimiting pair code: encode(x, y) = 0^{|x|} 1 x y.
inline BitString encode_pair(const BitString& x, const BitString& y) {
    BitString r = BitString::zeros(x.size());
    r.push_back(true);
    r.append(x);
    r.append(y);
    return r;
}

/// Inverse of encode_pair; nullopt exactly on strings not of that form.
inline std::optional<std::pair<BitString, BitString>> decode_pair(const BitString& s) {
    std::size_t k = 0;
    while (k < s.size() && !s.bit(k)) ++k;
    if (k == s.size()) return std::nullopt;          // no marker bit
    if (s.size() < 2 * k + 1) return std::nullopt;   // x truncated
    BitString x = s.substr(k + 1, k);
    BitString y = s.substr(2 * k + 1, s.size() - (2 * k + 1));
    return std::make_pair(std::move(x), std::move(y));
}

/// Left-nested tuple encoding [v1,...,vk] = enc(v1, enc(v2, ...)); a single
/// string is its own tuple and the empty tuple is the empty string.
inline BitString encode_tuple(std::span<const BitString> vs) {
    if (vs.empty()) return {};
    BitString acc = vs.back();
    for (std::size_t i = vs.size() - 1; i-- > 0;) acc = encode_pair(vs[i], acc);
    return acc;
}

inline BitString encode_tuple(std::initializer_list<BitString> vs) {
    return encode_tuple(std::span<const BitString>(vs.begin(), vs.size()));
}

}  // namespace kolmonet

#endif  // KOLMONET_BITSTRING_HPP
