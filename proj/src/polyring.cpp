#include "hfp/polyring.hpp"

#include <bit>
#include <stdexcept>

namespace hfp {

RingElement::RingElement(BitVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.length() == 0) throw std::invalid_argument("ring modulus degree must be positive");
}

RingElement RingElement::one(std::size_t modulus_degree) {
    BitVector v(modulus_degree);
    v.set(1, true);
    return RingElement(std::move(v));
}

RingElement RingElement::monomial(std::size_t modulus_degree, std::size_t degree) {
    BitVector v(modulus_degree);
    v.set(degree % modulus_degree + 1, true);
    return RingElement(std::move(v));
}

RingElement RingElement::operator+(const RingElement& rhs) const {
    return RingElement(coeffs_ + rhs.coeffs_);
}

RingElement shift(const RingElement& g, long i) { return RingElement(g.coeffs().rotated(i)); }

RingElement mul(const RingElement& a, const RingElement& b) {
    if (a.modulus_degree() != b.modulus_degree()) throw std::invalid_argument("modulus mismatch");
    BitVector acc(a.modulus_degree());
    for (std::size_t i = 1; i <= a.modulus_degree(); ++i)
        if (a.coeffs().get(i)) acc += b.coeffs().rotated(static_cast<long>(i - 1));
    return RingElement(std::move(acc));
}

namespace {
constexpr std::size_t kWordBits = 64;
}

Gf2Poly Gf2Poly::one() {
    Gf2Poly p;
    p.set_coeff(0, true);
    return p;
}

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
    Gf2Poly p;
    p.set_coeff(degree, true);
    return p;
}

Gf2Poly Gf2Poly::x_power_plus_one(std::size_t n) {
    Gf2Poly p;
    p.set_coeff(0, true);
    p.set_coeff(n, true);
    return p;
}

Gf2Poly Gf2Poly::lift(const RingElement& g) {
    Gf2Poly p;
    for (std::size_t i = 1; i <= g.modulus_degree(); ++i)
        if (g.coeffs().get(i)) p.set_coeff(i - 1, true);
    return p;
}

long Gf2Poly::degree() const noexcept {
    if (words_.empty()) return -1;
    const std::uint64_t top = words_.back();
    return static_cast<long>((words_.size() - 1) * kWordBits) + std::bit_width(top) - 1;
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
    const std::size_t k = i / kWordBits;
    if (k >= words_.size()) return false;
    return (words_[k] >> (i % kWordBits)) & 1;
}

std::size_t Gf2Poly::weight() const noexcept {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& rhs) const {
    Gf2Poly out = *this;
    if (rhs.words_.size() > out.words_.size()) out.words_.resize(rhs.words_.size(), 0);
    for (std::size_t k = 0; k < rhs.words_.size(); ++k) out.words_[k] ^= rhs.words_[k];
    out.trim();
    return out;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& rhs) const {
    Gf2Poly out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w != 0) {
            const int b = std::countr_zero(w);
            out = out + rhs.shifted_left(k * kWordBits + static_cast<std::size_t>(b));
            w &= w - 1;
        }
    }
    return out;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Gf2Poly quot;
    Gf2Poly rem = num;
    const long dd = den.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const std::size_t k = static_cast<std::size_t>(rem.degree() - dd);
        rem = rem + den.shifted_left(k);
        quot.set_coeff(k, true);
    }
    return {quot, rem};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool Gf2Poly::divides(const Gf2Poly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    const std::size_t len = static_cast<std::size_t>(degree()) + 1;
    std::string s(len, '0');
    for (std::size_t i = 0; i < len; ++i)
        if (coeff(i)) s[i] = '1';
    return s;
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
    const std::size_t k = i / kWordBits;
    if (k >= words_.size()) {
        if (!value) return;
        words_.resize(k + 1, 0);
    }
    const std::uint64_t mask = 1ull << (i % kWordBits);
    if (value)
        words_[k] |= mask;
    else
        words_[k] &= ~mask;
    trim();
}

void Gf2Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::shifted_left(std::size_t k) const {
    Gf2Poly out;
    if (is_zero()) return out;
    const std::size_t word_shift = k / kWordBits;
    const std::size_t bit_shift = k % kWordBits;
    out.words_.assign(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + word_shift] |= words_[i] << bit_shift;
        if (bit_shift != 0) out.words_[i + word_shift + 1] |= words_[i] >> (kWordBits - bit_shift);
    }
    out.trim();
    return out;
}

GcdReport gcd_with_modulus(const RingElement& g) {
    if (g.is_zero()) throw std::invalid_argument("gcd is degenerate for the zero element");
    const Gf2Poly lifted = Gf2Poly::lift(g);
    const Gf2Poly modulus = Gf2Poly::x_power_plus_one(g.modulus_degree());
    Gf2Poly d = Gf2Poly::gcd(lifted, modulus);
    auto [q, r] = Gf2Poly::divmod(lifted, d);
    if (!r.is_zero()) throw std::logic_error("gcd does not divide its argument");
    GcdReport report;
    report.degree_d = static_cast<std::size_t>(d.degree());
    report.gcd_poly = std::move(d);
    report.cofactor_q = std::move(q);
    return report;
}

RingElement divide_by_one_plus_x(const RingElement& a) {
    if (a.weight() % 2 != 0)
        throw std::invalid_argument("odd-weight element is not divisible by 1+x");
    const Gf2Poly one_plus_x = Gf2Poly::one() + Gf2Poly::monomial(1);
    auto [q, r] = Gf2Poly::divmod(Gf2Poly::lift(a), one_plus_x);
    if (!r.is_zero()) throw std::logic_error("even-weight element left a remainder");
    BitVector coeffs(a.modulus_degree());
    for (long i = 0; i <= q.degree(); ++i)
        if (q.coeff(static_cast<std::size_t>(i))) coeffs.set(static_cast<std::size_t>(i) + 1, true);
    return RingElement(std::move(coeffs));
}

}  // namespace hfp
