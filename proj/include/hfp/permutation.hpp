#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hfp/bitvector.hpp"

namespace hfp {

/// Coordinate permutation on {1..N}, stored as the image table.
class Permutation {
public:
    /// images[i-1] is the image of i; must be a bijection onto {1..N}.
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t degree);
    /// The permutation realizing a cyclic right shift by `offset` positions,
    /// i.e. apply(rotation(n, k), v) == v.rotated(k).
    static Permutation rotation(std::size_t degree, long offset);
    /// Builds from disjoint cycles in the usual notation: {1,2,3,4} maps
    /// 1->2->3->4->1. Coordinates not mentioned are fixed.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t image_of(std::size_t i) const;

    /// Function composition: (*this)(inner(i)).
    Permutation composed_with(const Permutation& inner) const;
    Permutation inverse() const;

    bool is_identity() const noexcept;
    std::size_t fixed_point_count() const noexcept;

    bool operator==(const Permutation& rhs) const noexcept = default;

private:
    std::vector<std::uint32_t> images_;
};

/// Moves coordinate i of v to coordinate p(i): result[p(i)] = v[i].
BitVector apply(const Permutation& p, const BitVector& v);

}  // namespace hfp
