#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"
#include "hfp/circulant.hpp"
#include "hfp/permutation.hpp"
#include "hfp/propelinear.hpp"

namespace hfp::testing {

inline BitVector bv(const char* s) { return BitVector::from_string(s); }

inline BitVector random_vector(std::mt19937_64& rng, std::size_t length) {
    BitVector v(length);
    for (std::size_t i = 1; i <= length; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

/// The order-4 code of the unique circulant Hadamard matrix, with shift
/// permutations: type C4 x C2u.
inline PropelinearStructure shift_structure() {
    return build_hfp(RingElement::from_string("1000"));
}

/// The same 8-word code with double-transposition permutations:
/// a=(1100) -> (1,2)(3,4), b=(1010) -> (1,3)(2,4), type C2 x C2 x C2u.
inline PropelinearStructure double_transposition_structure() {
    const Permutation id = Permutation::identity(4);
    const Permutation pa = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    const Permutation pb = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
    const Permutation pab = Permutation::from_cycles(4, {{1, 4}, {2, 3}});
    std::vector<BitVector> words{bv("0000"), bv("1111"), bv("1100"), bv("0011"),
                                 bv("1010"), bv("0101"), bv("1001"), bv("0110")};
    std::vector<Permutation> perms{id, id, pa, pa, pb, pb, pab, pab};
    return PropelinearStructure(std::move(words), std::move(perms));
}

/// Any linear code is propelinear with every permutation the identity.
inline PropelinearStructure trivial_structure(const BinaryCode& code) {
    std::vector<BitVector> words(code.words().begin(), code.words().end());
    std::vector<Permutation> perms(words.size(), Permutation::identity(code.length()));
    return PropelinearStructure(std::move(words), std::move(perms));
}

/// Test-only spanning oracle: closes the word set under addition and reports
/// the size of the resulting subspace. Independent of the elimination path.
inline std::size_t brute_force_span_size(const BinaryCode& code) {
    std::set<BitVector> span{BitVector(code.length())};
    std::vector<BitVector> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
        std::vector<BitVector> next;
        for (const BitVector& v : frontier) {
            for (const BitVector& w : code.words()) {
                BitVector sum = v + w;
                if (span.insert(sum).second) next.push_back(std::move(sum));
            }
        }
        frontier = std::move(next);
    }
    return span.size();
}

}  // namespace hfp::testing
