#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"
#include "hfp/circulant.hpp"
#include "hfp/hadamard.hpp"
#include "hfp/permutation.hpp"

using namespace hfp;
using hfp::testing::bv;
using hfp::testing::random_vector;

TEST_SUITE("gf2core") {

TEST_CASE("addition is coordinatewise xor") {
    CHECK(bv("1100") + bv("0110") == bv("1010"));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const BitVector v = random_vector(rng, 20);
        CHECK((v + v).is_zero());
        CHECK(v + BitVector(20) == v);
    }
    CHECK_THROWS_AS(bv("10") + bv("100"), std::invalid_argument);
}

TEST_CASE("addition is associative and commutative") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const BitVector a = random_vector(rng, 33);
        const BitVector b = random_vector(rng, 33);
        const BitVector c = random_vector(rng, 33);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("apply moves coordinate i to p(i)") {
    const Permutation cycle = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    CHECK(apply(cycle, bv("1100")) == bv("0110"));
    CHECK(apply(Permutation::identity(4), bv("1010")) == bv("1010"));
    const Permutation swaps = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    CHECK(apply(swaps, bv("1010")) == bv("0101"));
    CHECK_THROWS_AS(apply(Permutation::identity(3), bv("1010")), std::invalid_argument);
}

TEST_CASE("apply respects composition") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const Permutation p = hfp::testing::random_permutation(rng, 12);
        const Permutation q = hfp::testing::random_permutation(rng, 12);
        const BitVector v = random_vector(rng, 12);
        CHECK(apply(p.composed_with(q), v) == apply(p, apply(q, v)));
        CHECK(apply(p.inverse(), apply(p, v)) == v);
    }
}

TEST_CASE("rotation permutation matches cyclic shift") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const BitVector v = random_vector(rng, 9);
        const long k = static_cast<long>(rng() % 9);
        CHECK(apply(Permutation::rotation(9, k), v) == v.rotated(k));
    }
}

TEST_CASE("span rank on reference codes") {
    CHECK(span_rank(BinaryCode(4, {bv("0000")})) == 0);
    CHECK(span_rank(circulant4_code()) == 3);
    CHECK(span_rank(sylvester_code(3)) == 4);
}

TEST_CASE("span rank agrees with the closure oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        std::vector<BitVector> words;
        for (int k = 0; k < 6; ++k) words.push_back(random_vector(rng, 10));
        const BinaryCode code(10, words);
        const std::size_t rank = span_rank(code);
        CHECK((std::size_t{1} << rank) == hfp::testing::brute_force_span_size(code));
    }
}

TEST_CASE("kernel of a linear code is the code") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        // span of a few random vectors, enumerated by closure
        std::vector<BitVector> gens;
        for (int k = 0; k < 4; ++k) gens.push_back(random_vector(rng, 8));
        std::set<BitVector> span{BitVector(8)};
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<BitVector> snapshot(span.begin(), span.end());
            for (const BitVector& s : snapshot)
                for (const BitVector& g : gens)
                    if (span.insert(s + g).second) grew = true;
        }
        const BinaryCode linear(8, std::vector<BitVector>(span.begin(), span.end()));
        CHECK(kernel(linear) == linear);
    }
}

TEST_CASE("kernel of the order-4 circulant code is the whole code") {
    const BinaryCode code = circulant4_code();
    const BinaryCode k = kernel(code);
    CHECK(k == code);
    CHECK(span_rank(k) == 3);
}

TEST_CASE("kernel of the length-12 code from quadratic residues is {e,u}") {
    const BinaryCode code = paley_code(11);
    const BinaryCode k = kernel(code);
    REQUIRE(k.size() == 2);
    CHECK(k.contains(BitVector(12)));
    CHECK(k.contains(BitVector::all_ones(12)));
    CHECK(span_rank(k) == 1);
}

TEST_CASE("kernel scans the full space when the zero word is absent") {
    const BinaryCode code(2, {bv("10"), bv("01")});
    const BinaryCode k = kernel(code);
    REQUIRE(k.size() == 2);
    CHECK(k.contains(bv("00")));
    CHECK(k.contains(bv("11")));
}

TEST_CASE("kernel refuses oversized full-space scans") {
    // Zero word absent and length beyond the guard.
    BitVector w(26);
    w.set(1, true);
    CHECK_THROWS_AS(kernel(BinaryCode(26, {w})), std::invalid_argument);
}

TEST_CASE("kernel is add-closed and contains the zero word") {
    for (const BinaryCode& code : {sylvester_code(2), sylvester_code(3), paley_code(11)}) {
        const BinaryCode k = kernel(code);
        CHECK(k.contains(BitVector(code.length())));
        for (const BitVector& a : k.words())
            for (const BitVector& b : k.words()) CHECK(k.contains(a + b));
        CHECK(span_rank(k) <= span_rank(code));
    }
}

TEST_CASE("projection keeps the listed coordinates in order") {
    CHECK(project(bv("1010"), {1, 2}) == bv("10"));
    CHECK(project(BitVector::all_ones(6), {2, 4, 5}) == bv("111"));
    CHECK(project(bv("1001"), {2, 3}) == bv("00"));
    CHECK_THROWS_AS(project(bv("1010"), {}), std::invalid_argument);
    CHECK_THROWS_AS(project(bv("1010"), {5}), std::invalid_argument);
}

TEST_CASE("bit vector text form round trips and orders lexicographically") {
    CHECK(bv("0110").to_string() == "0110");
    CHECK(bv("0001") < bv("0010"));
    CHECK(bv("0111") < bv("1000"));
    CHECK(BitVector::from_bits(0b0001, 4) == bv("1000"));  // bit 0 is coordinate 1
    CHECK_THROWS_AS(BitVector::from_string("01x1"), std::invalid_argument);
}

}  // TEST_SUITE
