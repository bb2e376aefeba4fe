#pragma once

#include <cstddef>
#include <vector>

#include "hfp/bitvector.hpp"

namespace hfp {

/// Finite set of distinct equal-length vectors, kept sorted for deterministic
/// iteration and fast membership tests.
class BinaryCode {
public:
    BinaryCode() = default;
    explicit BinaryCode(std::size_t length) : length_(length) {}
    BinaryCode(std::size_t length, std::vector<BitVector> words);
    static BinaryCode from_words(std::vector<BitVector> words);

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<BitVector>& words() const noexcept { return words_; }
    bool contains(const BitVector& w) const;

    bool operator==(const BinaryCode& rhs) const noexcept = default;

private:
    std::size_t length_ = 0;
    std::vector<BitVector> words_;
};

/// Dimension over GF(2) of the linear span of the words, by elimination with
/// lowest-coordinate pivots.
std::size_t span_rank(const BinaryCode& code);

/// Kernel scans the whole space only when the zero word is absent; beyond this
/// length it refuses instead of stalling.
inline constexpr std::size_t kKernelScanMaxLength = 24;

/// K(C) = { x : x + C = C }. When the zero word is in C the scan is restricted
/// to codewords (every kernel element is then a codeword).
BinaryCode kernel(const BinaryCode& code);

/// Restriction of v to the listed coordinates, in increasing index order.
BitVector project(const BitVector& v, std::vector<std::size_t> support);

}  // namespace hfp
