#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"
#include "hfp/polyring.hpp"
#include "hfp/propelinear.hpp"

namespace hfp {

/// True iff the circulant binary matrix with this first row has all pairwise
/// row distances equal to half the order. Only the offsets 1..N/2 are tested:
/// rows at offset i are at the same distance for every starting row, and
/// offset N-i repeats offset i.
bool circulant_is_hadamard(const BitVector& first_row);

/// The code {g + x^i g + xi*u : 0 <= i < N, xi in {0,1}}, deduplicated.
BinaryCode circulant_code(const RingElement& g);

/// Builds the full propelinear structure on circulant_code(g): the word for
/// shift i carries the shift-by-i permutation, complements included.
/// Requires circulant_is_hadamard(g.coeffs()).
PropelinearStructure build_hfp(const RingElement& g);

/// Recovers a circulant generator from a full propelinear structure with a
/// cyclic permutation group of order 4n: the quotient of the generator word
/// by (1+x). The resulting circulant matrix is Hadamard and regenerates the
/// structure's code (both checked).
RingElement extract_circulant(const PropelinearStructure& s);

struct ColumnWeightReport {
    std::vector<std::size_t> weights;  // per column of circulant(g)
    long sigma;                        // weight(g) - N/2
};
ColumnWeightReport column_weight_report(const RingElement& g);

/// Whether the sum of g + x^i g over i = 1..N-1 equals the all-ones vector;
/// by the column-sum identity this is exactly odd weight of g.
bool u_in_span_check(const RingElement& g);

struct CirculantRank {
    std::size_t rank;  // rank of circulant_code(g)
    std::size_t d;     // degree of gcd(lift(g), x^N + 1)
};

/// Rank of circulant_code(g) without enumerating it: the span of the words
/// g + x^i g is the ideal generated by (1+x)g, of dimension N - deg gcd with
/// x^N + 1, plus one more dimension when u lies outside that ideal. For
/// odd-weight g this collapses to 4n - 1 - d.
CirculantRank rank_of_circulant_code(const RingElement& g);

/// Order-4n feasibility: n must be an odd perfect square. Advisory only;
/// concrete matrices are always verified directly.
bool turyn_feasible(std::size_t order);

struct CirculantAnalysis {
    RingElement generator;
    std::size_t order;
    bool is_hadamard = false;
    std::vector<std::size_t> column_weights;
    long sigma = 0;
    std::size_t rank_by_gcd = 0;
    std::size_t rank_by_elimination = 0;
    std::optional<std::size_t> kernel_dim;  // absent for non-Hadamard g longer than the kernel guard
    std::optional<GroupType> group_type;    // present when the matrix is Hadamard
};

/// Aggregates the Hadamard verdict, column weights, both rank routes (they
/// must agree), kernel dimension and group type. For a Hadamard nonlinear
/// code the rank/kernel law (k = 1, r = 4n-1) is asserted.
CirculantAnalysis full_analysis(const RingElement& g);

}  // namespace hfp
