#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfp/bitvector.hpp"

namespace hfp {

/// Element of F_2[x]/(x^N + 1). Coefficient of x^i lives at coordinate i+1 of
/// the backing vector, so the text form lists the constant term first.
class RingElement {
public:
    explicit RingElement(BitVector coeffs);
    static RingElement from_string(std::string_view text) { return RingElement(BitVector::from_string(text)); }
    static RingElement zero(std::size_t modulus_degree) { return RingElement(BitVector(modulus_degree)); }
    static RingElement one(std::size_t modulus_degree);
    static RingElement monomial(std::size_t modulus_degree, std::size_t degree);
    static RingElement all_ones(std::size_t modulus_degree) {
        return RingElement(BitVector::all_ones(modulus_degree));
    }

    std::size_t modulus_degree() const noexcept { return coeffs_.length(); }
    const BitVector& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }
    std::size_t weight() const noexcept { return coeffs_.weight(); }
    std::string to_string() const { return coeffs_.to_string(); }

    RingElement operator+(const RingElement& rhs) const;
    bool operator==(const RingElement& rhs) const noexcept = default;

private:
    BitVector coeffs_;
};

/// Multiplication by x^i, a cyclic right shift of the coefficients. Negative
/// i wraps mod N.
RingElement shift(const RingElement& g, long i);

/// Product reduced mod x^N + 1.
RingElement mul(const RingElement& a, const RingElement& b);

/// Plain (unreduced) polynomial over GF(2), for the gcd and division
/// machinery where ring elements are treated through their canonical lift.
class Gf2Poly {
public:
    Gf2Poly() = default;  // zero
    static Gf2Poly one();
    static Gf2Poly monomial(std::size_t degree);
    /// x^n + 1.
    static Gf2Poly x_power_plus_one(std::size_t n);
    /// The unique representative of degree < N.
    static Gf2Poly lift(const RingElement& g);

    bool is_zero() const noexcept { return words_.empty(); }
    /// Degree, -1 for the zero polynomial.
    long degree() const noexcept;
    bool coeff(std::size_t i) const noexcept;
    std::size_t weight() const noexcept;

    Gf2Poly operator+(const Gf2Poly& rhs) const;
    Gf2Poly operator*(const Gf2Poly& rhs) const;
    /// Schoolbook division; second component is the remainder.
    static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& num, const Gf2Poly& den);
    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
    bool divides(const Gf2Poly& other) const;

    /// Coefficient of x^0 leftmost, length degree+1 ("11" is 1+x); zero is "0".
    std::string to_string() const;

    bool operator==(const Gf2Poly& rhs) const noexcept = default;

private:
    std::vector<std::uint64_t> words_;  // bit k of word k/64 is the x^k coefficient

    void set_coeff(std::size_t i, bool value);
    void trim() noexcept;
    Gf2Poly shifted_left(std::size_t k) const;
};

struct GcdReport {
    Gf2Poly gcd_poly;       // gcd of the canonical lift with x^N + 1
    std::size_t degree_d;   // its degree
    Gf2Poly cofactor_q;     // lift(g) / gcd_poly
};

/// Euclidean gcd of the canonical lift of g with x^N + 1.
GcdReport gcd_with_modulus(const RingElement& g);

/// Exact quotient of the lift of a by (1+x); requires even weight.
RingElement divide_by_one_plus_x(const RingElement& a);

}  // namespace hfp
