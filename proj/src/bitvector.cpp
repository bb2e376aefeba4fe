#include "hfp/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace hfp {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {
    if (length == 0) throw std::invalid_argument("bit vector length must be positive");
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v.set(i + 1, true);
        else if (text[i] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_bits(std::uint64_t bits, std::size_t length) {
    if (length > kWordBits) throw std::invalid_argument("from_bits limited to 64 coordinates");
    BitVector v(length);
    v.words_[0] = bits;
    v.clear_padding();
    if (v.weight() != static_cast<std::size_t>(std::popcount(bits)))
        throw std::invalid_argument("from_bits value has bits beyond the requested length");
    return v;
}

BitVector BitVector::all_ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~0ull;
    v.clear_padding();
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i == 0 || i > length_) throw std::out_of_range("coordinate index out of range");
    return (words_[(i - 1) / kWordBits] >> ((i - 1) % kWordBits)) & 1;
}

void BitVector::set(std::size_t i, bool value) {
    if (i == 0 || i > length_) throw std::out_of_range("coordinate index out of range");
    const std::uint64_t mask = 1ull << ((i - 1) % kWordBits);
    if (value)
        words_[(i - 1) / kWordBits] |= mask;
    else
        words_[(i - 1) / kWordBits] &= ~mask;
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const noexcept {
    for (std::uint64_t word : words_)
        if (word != 0) return false;
    return true;
}

bool BitVector::is_ones() const noexcept { return weight() == length_ && length_ > 0; }

std::size_t BitVector::lowest_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k])) + 1;
    return 0;
}

BitVector& BitVector::operator+=(const BitVector& rhs) {
    if (length_ != rhs.length_) throw std::invalid_argument("length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= rhs.words_[k];
    return *this;
}

BitVector BitVector::operator+(const BitVector& rhs) const {
    BitVector out = *this;
    out += rhs;
    return out;
}

BitVector BitVector::complemented() const {
    BitVector out = *this;
    for (auto& w : out.words_) w = ~w;
    out.clear_padding();
    return out;
}

BitVector BitVector::rotated(long offset) const {
    if (length_ == 0) return *this;
    const long n = static_cast<long>(length_);
    const std::size_t s = static_cast<std::size_t>(((offset % n) + n) % n);
    if (s == 0) return *this;
    BitVector out(length_);
    if (length_ <= kWordBits) {
        const std::uint64_t v = words_[0];
        out.words_[0] = (v << s) | (v >> (length_ - s));
        out.clear_padding();
    } else {
        for (std::size_t i = 1; i <= length_; ++i)
            if (get(i)) out.set((i - 1 + s) % length_ + 1, true);
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 1; i <= length_; ++i)
        if (get(i)) s[i - 1] = '1';
    return s;
}

std::strong_ordering BitVector::operator<=>(const BitVector& rhs) const noexcept {
    // First differing coordinate decides; it is the lowest set bit of the xor.
    const std::size_t common = std::min(words_.size(), rhs.words_.size());
    for (std::size_t k = 0; k < common; ++k) {
        const std::uint64_t diff = words_[k] ^ rhs.words_[k];
        if (diff != 0) {
            const int bit = std::countr_zero(diff);
            return ((words_[k] >> bit) & 1) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return length_ <=> rhs.length_;
}

void BitVector::clear_padding() noexcept {
    const std::size_t used = length_ % kWordBits;
    if (used != 0 && !words_.empty()) words_.back() &= (1ull << used) - 1;
}

std::vector<std::size_t> support_of(const BitVector& v) {
    std::vector<std::size_t> out;
    out.reserve(v.weight());
    for (std::size_t i = 1; i <= v.length(); ++i)
        if (v.get(i)) out.push_back(i);
    return out;
}

}  // namespace hfp
