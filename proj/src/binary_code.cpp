#include "hfp/binary_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfp {

BinaryCode::BinaryCode(std::size_t length, std::vector<BitVector> words)
    : length_(length), words_(std::move(words)) {
    for (const BitVector& w : words_)
        if (w.length() != length_) throw std::invalid_argument("codeword length mismatch");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

BinaryCode BinaryCode::from_words(std::vector<BitVector> words) {
    if (words.empty()) throw std::invalid_argument("cannot infer length from an empty word list");
    const std::size_t length = words.front().length();
    return BinaryCode(length, std::move(words));
}

bool BinaryCode::contains(const BitVector& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::size_t span_rank(const BinaryCode& code) {
    // Basis rows keyed by pivot = lowest set coordinate.
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivots;
    for (const BitVector& word : code.words()) {
        BitVector v = word;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (!v.is_zero() && v.get(pivots[b])) v += basis[b];
        if (!v.is_zero()) {
            basis.push_back(v);
            pivots.push_back(v.lowest_set());
        }
    }
    return basis.size();
}

namespace {

bool translation_fixes(const BinaryCode& code, const BitVector& x) {
    for (const BitVector& c : code.words())
        if (!code.contains(x + c)) return false;
    return true;
}

}  // namespace

BinaryCode kernel(const BinaryCode& code) {
    if (code.empty()) throw std::invalid_argument("kernel of an empty code");
    const std::size_t n = code.length();
    std::vector<BitVector> members;
    if (code.contains(BitVector(n))) {
        for (const BitVector& x : code.words())
            if (translation_fixes(code, x)) members.push_back(x);
    } else {
        if (n > kKernelScanMaxLength)
            throw std::invalid_argument(
                "kernel: full-space scan refused beyond length 24 when the zero word is absent");
        // Packed scan over all of F_2^n with early exit on the first miss.
        std::vector<std::uint64_t> packed;
        packed.reserve(code.size());
        for (const BitVector& w : code.words()) packed.push_back(w.low_word());
        std::sort(packed.begin(), packed.end());
        const std::uint64_t space = 1ull << n;
        for (std::uint64_t x = 0; x < space; ++x) {
            bool ok = true;
            for (std::uint64_t c : packed) {
                if (!std::binary_search(packed.begin(), packed.end(), x ^ c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) members.push_back(BitVector::from_bits(x, n));
        }
    }
    return BinaryCode(n, std::move(members));
}

BitVector project(const BitVector& v, std::vector<std::size_t> support) {
    if (support.empty()) throw std::invalid_argument("projection support must be nonempty");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.front() == 0 || support.back() > v.length())
        throw std::invalid_argument("projection support out of range");
    BitVector out(support.size());
    for (std::size_t j = 0; j < support.size(); ++j)
        if (v.get(support[j])) out.set(j + 1, true);
    return out;
}

}  // namespace hfp
