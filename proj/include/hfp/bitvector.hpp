#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hfp {

/// Dense vector over GF(2). Coordinates are 1-indexed; coordinate 1 is the
/// leftmost character of the text form ("1100" has coordinates 1 and 2 set).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    static BitVector from_string(std::string_view text);
    /// Builds a vector of the given length from the low bits of `bits`
    /// (bit 0 of `bits` becomes coordinate 1). Requires length <= 64.
    static BitVector from_bits(std::uint64_t bits, std::size_t length);
    static BitVector all_ones(std::size_t length);

    std::size_t length() const noexcept { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    bool is_ones() const noexcept;
    /// 1-based index of the first set coordinate, 0 when the vector is zero.
    std::size_t lowest_set() const noexcept;

    BitVector& operator+=(const BitVector& rhs);
    BitVector operator+(const BitVector& rhs) const;
    BitVector complemented() const;
    /// Cyclic right shift: coordinate i moves to coordinate i+offset (mod N).
    /// Negative offsets rotate the other way.
    BitVector rotated(long offset) const;

    std::string to_string() const;
    std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator==(const BitVector& rhs) const noexcept = default;
    /// Lexicographic order on the text form ('0' < '1', coordinate 1 first).
    std::strong_ordering operator<=>(const BitVector& rhs) const noexcept;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;

    void clear_padding() noexcept;
};

/// 1-based indices of the nonzero coordinates, ascending.
std::vector<std::size_t> support_of(const BitVector& v);

}  // namespace hfp
