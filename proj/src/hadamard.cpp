#include "hfp/hadamard.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hfp {

SignMatrix::SignMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ == 0) throw std::invalid_argument("matrix order must be positive");
    if (entries_.size() != order_ * order_) throw std::invalid_argument("entry count mismatch");
    for (std::int8_t e : entries_)
        if (e != 1 && e != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
}

SignMatrix SignMatrix::filled(std::size_t order, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
    return SignMatrix(order, std::vector<std::int8_t>(order * order, static_cast<std::int8_t>(value)));
}

int SignMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= order_ || c >= order_) throw std::out_of_range("matrix index out of range");
    return entries_[r * order_ + c];
}

void SignMatrix::put(std::size_t r, std::size_t c, int value) {
    if (r >= order_ || c >= order_) throw std::out_of_range("matrix index out of range");
    if (value != 1 && value != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
    entries_[r * order_ + c] = static_cast<std::int8_t>(value);
}

void SignMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < order_; ++c) entries_[r * order_ + c] = -entries_[r * order_ + c];
}

void SignMatrix::negate_column(std::size_t c) {
    for (std::size_t r = 0; r < order_; ++r) entries_[r * order_ + c] = -entries_[r * order_ + c];
}

BinaryMatrix::BinaryMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("matrix order must be positive");
    for (const BitVector& r : rows_)
        if (r.length() != rows_.size()) throw std::invalid_argument("matrix must be square");
}

const BitVector& BinaryMatrix::row(std::size_t r) const {
    if (r >= rows_.size()) throw std::out_of_range("matrix index out of range");
    return rows_[r];
}

bool is_hadamard(const SignMatrix& h) {
    const std::size_t m = h.order();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            long dot = 0;
            for (std::size_t k = 0; k < m; ++k) dot += h.at(i, k) * h.at(j, k);
            if (dot != 0) return false;
        }
    }
    return true;
}

SignMatrix normalize(const SignMatrix& h) {
    if (!is_hadamard(h)) throw std::invalid_argument("normalize: matrix is not Hadamard");
    SignMatrix out = h;
    for (std::size_t c = 0; c < out.order(); ++c)
        if (out.at(0, c) < 0) out.negate_column(c);
    for (std::size_t r = 0; r < out.order(); ++r)
        if (out.at(r, 0) < 0) out.negate_row(r);
    return out;
}

BinaryMatrix binarize(const SignMatrix& h) {
    std::vector<BitVector> rows;
    rows.reserve(h.order());
    for (std::size_t r = 0; r < h.order(); ++r) {
        BitVector row(h.order());
        for (std::size_t c = 0; c < h.order(); ++c)
            if (h.at(r, c) < 0) row.set(c + 1, true);
        rows.push_back(std::move(row));
    }
    return BinaryMatrix(std::move(rows));
}

SignMatrix to_sign_matrix(const BinaryMatrix& b) {
    const std::size_t m = b.order();
    std::vector<std::int8_t> entries(m * m, 1);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (b.row(r).get(c + 1)) entries[r * m + c] = -1;
    return SignMatrix(m, std::move(entries));
}

BinaryCode code_from_matrix(const BinaryMatrix& b) {
    std::vector<BitVector> words;
    words.reserve(2 * b.order());
    for (const BitVector& row : b.rows()) {
        words.push_back(row);
        words.push_back(row.complemented());
    }
    return BinaryCode(b.order(), std::move(words));
}

BinaryMatrix circulant(const BitVector& first_row) {
    std::vector<BitVector> rows;
    rows.reserve(first_row.length());
    for (std::size_t i = 0; i < first_row.length(); ++i)
        rows.push_back(first_row.rotated(static_cast<long>(i)));
    return BinaryMatrix(std::move(rows));
}

bool is_circulant(const BinaryMatrix& b) {
    for (std::size_t r = 1; r < b.order(); ++r)
        if (b.row(r) != b.row(r - 1).rotated(1)) return false;
    return true;
}

bool is_circulant(const SignMatrix& h) { return is_circulant(binarize(h)); }

SignMatrix sylvester_matrix(unsigned s) {
    if (s < 1 || s > 13) throw std::invalid_argument("sylvester parameter must be in 1..13");
    SignMatrix h = SignMatrix::filled(1, 1);
    for (unsigned step = 0; step < s; ++step) {
        const std::size_t m = h.order();
        SignMatrix next = SignMatrix::filled(2 * m, 1);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                const int v = h.at(r, c);
                next.put(r, c, v);
                next.put(r, c + m, v);
                next.put(r + m, c, v);
                next.put(r + m, c + m, -v);
            }
        }
        h = std::move(next);
    }
    return h;
}

BinaryCode sylvester_code(unsigned s) {
    // The doubling construction is already normalized.
    return code_from_matrix(binarize(sylvester_matrix(s)));
}

namespace {

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

SignMatrix paley_matrix(unsigned q) {
    if (!is_prime(q) || q % 4 != 3)
        throw std::invalid_argument("paley parameter must be a prime congruent to 3 mod 4");
    std::vector<bool> residue(q, false);
    for (unsigned k = 1; k < q; ++k) residue[static_cast<std::size_t>(k) * k % q] = true;
    const std::size_t m = q + 1;
    // I + S with S skew: first row +1, first column -1, core from the
    // quadratic character of the index difference.
    SignMatrix h = SignMatrix::filled(m, 1);
    for (std::size_t i = 1; i < m; ++i) h.put(i, 0, -1);
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = 1; j < m; ++j) {
            if (i == j) continue;
            const unsigned diff = static_cast<unsigned>((j + q - i) % q);
            h.put(i, j, residue[diff] ? 1 : -1);
        }
    }
    return h;
}

BinaryCode paley_code(unsigned q) {
    return code_from_matrix(binarize(normalize(paley_matrix(q))));
}

BinaryCode circulant4_code() {
    const SignMatrix h = to_sign_matrix(circulant(BitVector::from_string("1000")));
    return code_from_matrix(binarize(normalize(h)));
}

MatrixInput read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix file is empty");
    std::size_t order = 0;
    try {
        order = std::stoul(line);
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix file must start with the order");
    }
    if (order == 0 || order > 16384) throw std::invalid_argument("matrix order out of range");
    std::vector<std::string> rows;
    while (rows.size() < order && std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.back() == '\r') line.pop_back();
        rows.push_back(line);
    }
    if (rows.size() != order) throw std::invalid_argument("matrix file is truncated");

    bool binary = false, sign = false;
    for (const std::string& r : rows) {
        if (r.size() != order) throw std::invalid_argument("matrix row has the wrong length");
        for (char ch : r) {
            if (ch == '0' || ch == '1')
                binary = true;
            else if (ch == '+' || ch == '-')
                sign = true;
            else
                throw std::invalid_argument("matrix rows must use '0'/'1' or '+'/'-'");
        }
    }
    if (binary && sign) throw std::invalid_argument("matrix file mixes binary and sign alphabets");

    std::vector<std::int8_t> entries(order * order, 1);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c)
            if (rows[r][c] == '1' || rows[r][c] == '-') entries[r * order + c] = -1;
    return MatrixInput{SignMatrix(order, std::move(entries)), binary};
}

void write_matrix(std::ostream& out, const SignMatrix& h) {
    out << h.order() << '\n';
    for (std::size_t r = 0; r < h.order(); ++r) {
        for (std::size_t c = 0; c < h.order(); ++c) out << (h.at(r, c) > 0 ? '+' : '-');
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const BinaryMatrix& b) {
    out << b.order() << '\n';
    for (const BitVector& row : b.rows()) out << row.to_string() << '\n';
}

}  // namespace hfp
