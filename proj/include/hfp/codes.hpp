#pragma once

#include <cstddef>

#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"

namespace hfp {

struct HadamardCodeReport {
    std::size_t length = 0;      // 4n
    std::size_t n = 0;           // length / 4
    unsigned s = 0;              // length = 2^s * n_prime, n_prime odd
    std::size_t n_prime = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    bool is_linear = false;
};

/// True iff C consists of the rows of a binary Hadamard matrix and their
/// complements: length 4n, 8n words, zero word present, complement-closed,
/// distances 2n except 4n exactly on complement pairs.
bool is_hadamard_code(const BinaryCode& code);

/// Rank, kernel dimension and linearity of a Hadamard code. The classical
/// rank and kernel bounds are asserted; a violation throws std::logic_error
/// since at this scale it can only mean a computation bug.
HadamardCodeReport analyze(const BinaryCode& code);

/// Projection onto the support of a nontrivial kernel word; the result is
/// itself a Hadamard code of half the length (checked).
BinaryCode project_code(const BinaryCode& code, const BitVector& kappa);

}  // namespace hfp
