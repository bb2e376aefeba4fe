#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"

namespace hfp {

/// Square matrix with entries in {+1, -1}. Rows and columns are 0-indexed.
class SignMatrix {
public:
    SignMatrix(std::size_t order, std::vector<std::int8_t> entries);
    static SignMatrix filled(std::size_t order, int value);

    std::size_t order() const noexcept { return order_; }
    int at(std::size_t r, std::size_t c) const;
    void put(std::size_t r, std::size_t c, int value);
    void negate_row(std::size_t r);
    void negate_column(std::size_t c);

    bool operator==(const SignMatrix& rhs) const noexcept = default;

private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
};

/// Square 0/1 matrix stored as one BitVector per row.
class BinaryMatrix {
public:
    explicit BinaryMatrix(std::vector<BitVector> rows);

    std::size_t order() const noexcept { return rows_.size(); }
    const BitVector& row(std::size_t r) const;
    const std::vector<BitVector>& rows() const noexcept { return rows_; }

    bool operator==(const BinaryMatrix& rhs) const noexcept = default;

private:
    std::vector<BitVector> rows_;
};

/// True iff every pair of distinct rows is orthogonal over the integers.
bool is_hadamard(const SignMatrix& h);

/// Equivalent matrix with all-+1 first row and column, obtained by negating
/// columns from the row-1 signs and then rows from the column-1 signs.
SignMatrix normalize(const SignMatrix& h);

/// Entrywise +1 -> 0, -1 -> 1.
BinaryMatrix binarize(const SignMatrix& h);
/// Entrywise 0 -> +1, 1 -> -1.
SignMatrix to_sign_matrix(const BinaryMatrix& b);

/// All rows together with all complemented rows, deduplicated.
BinaryCode code_from_matrix(const BinaryMatrix& b);

/// Row i is the cyclic right shift of the first row by i positions.
BinaryMatrix circulant(const BitVector& first_row);

bool is_circulant(const BinaryMatrix& b);
bool is_circulant(const SignMatrix& h);

/// Hadamard code of length 2^s from the doubling construction.
BinaryCode sylvester_code(unsigned s);
SignMatrix sylvester_matrix(unsigned s);

/// Hadamard code of length q+1 from quadratic residues; q prime, q = 3 mod 4.
BinaryCode paley_code(unsigned q);
SignMatrix paley_matrix(unsigned q);

/// The 8-word length-4 code of the order-4 circulant Hadamard matrix.
BinaryCode circulant4_code();

/// Matrix file: first line the order, then one row per line over '0'/'1' or
/// '+'/'-'; the alphabet is auto-detected.
struct MatrixInput {
    SignMatrix matrix;
    bool was_binary;
};
MatrixInput read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SignMatrix& h);
void write_matrix(std::ostream& out, const BinaryMatrix& b);

}  // namespace hfp
