#include "doctest.h"

#include "fixtures.hpp"
#include "hfp/codes.hpp"
#include "hfp/hadamard.hpp"
#include "hfp/json_io.hpp"

using namespace hfp;
using hfp::testing::bv;

TEST_SUITE("codes") {

TEST_CASE("hadamard code recognition") {
    CHECK(is_hadamard_code(circulant4_code()));
    CHECK(is_hadamard_code(paley_code(11)));
    CHECK_FALSE(is_hadamard_code(BinaryCode(4, {bv("0000"), bv("1111")})));
    CHECK_FALSE(is_hadamard_code(sylvester_code(1)));  // length 2

    // Tamper with one word: sizes still match but a distance breaks.
    const BinaryCode reference = circulant4_code();
    std::vector<BitVector> words(reference.words().begin(), reference.words().end());
    words[1] = bv("1000");
    CHECK_FALSE(is_hadamard_code(BinaryCode(4, words)));
}

TEST_CASE("analysis of the order-4 circulant code") {
    const HadamardCodeReport rep = analyze(circulant4_code());
    CHECK(rep.length == 4);
    CHECK(rep.n == 1);
    CHECK(rep.s == 2);
    CHECK(rep.n_prime == 1);
    CHECK(rep.rank == 3);
    CHECK(rep.kernel_dim == 3);
    CHECK(rep.is_linear);
}

TEST_CASE("analysis of the length-8 doubling code") {
    const HadamardCodeReport rep = analyze(sylvester_code(3));
    CHECK(rep.length == 8);
    CHECK(rep.s == 3);
    CHECK(rep.rank == 2 * rep.n);  // equality at s = 3
    CHECK(rep.rank == 4);
    CHECK(rep.kernel_dim == 4);
    CHECK(rep.is_linear);
}

TEST_CASE("analysis of the length-12 code") {
    const BinaryCode code = paley_code(11);
    const HadamardCodeReport rep = analyze(code);
    CHECK(rep.s == 2);
    CHECK(rep.n_prime == 3);
    CHECK_FALSE(rep.is_linear);
    CHECK(rep.kernel_dim == 1);
    CHECK(rep.rank >= 11);
    // All words have even weight, so the span stays inside the even-weight
    // hyperplane; the closure oracle pins the rank at exactly 11.
    CHECK(rep.rank == 11);
    CHECK(hfp::testing::brute_force_span_size(code) == (std::size_t{1} << 11));
}

TEST_CASE("analysis of the length-16 doubling code") {
    const HadamardCodeReport rep = analyze(sylvester_code(4));
    CHECK(rep.s == 4);
    CHECK(rep.rank == 5);
    CHECK(rep.rank <= 2 * rep.n);  // strict bound once s > 3
    CHECK(rep.is_linear);
}

TEST_CASE("analysis rejects non-hadamard input") {
    CHECK_THROWS_AS(analyze(BinaryCode(4, {bv("0000")})), std::invalid_argument);
}

TEST_CASE("projection onto a kernel support of the length-8 code") {
    const BinaryCode code = sylvester_code(3);
    const BinaryCode k = kernel(code);
    std::size_t checked = 0;
    for (const BitVector& kappa : k.words()) {
        if (kappa.is_zero() || kappa.is_ones()) continue;
        const BinaryCode proj = project_code(code, kappa);
        CHECK(proj.length() == 4);
        CHECK(proj.size() == 8);
        CHECK(is_hadamard_code(proj));
        ++checked;
    }
    CHECK(checked == 14);  // all weight-4 words of the linear code
}

TEST_CASE("projection of the length-4 code degenerates to F_2^2") {
    const BinaryCode proj = project_code(sylvester_code(2), bv("1100"));
    REQUIRE(proj.size() == 4);
    for (const char* w : {"00", "01", "10", "11"}) CHECK(proj.contains(bv(w)));
}

TEST_CASE("projection rejects trivial or non-kernel words") {
    CHECK_THROWS_AS(project_code(sylvester_code(2), bv("1111")), std::invalid_argument);
    CHECK_THROWS_AS(project_code(sylvester_code(2), bv("0000")), std::invalid_argument);
    // weight-6 word of the length-12 code: not in the kernel
    const BinaryCode code = paley_code(11);
    for (const BitVector& w : code.words()) {
        if (w.weight() != 6) continue;
        CHECK_THROWS_AS(project_code(code, w), std::invalid_argument);
        break;
    }
}

TEST_CASE("kernels of hadamard fixtures contain e and u") {
    for (const BinaryCode& code : {circulant4_code(), sylvester_code(3), paley_code(11)}) {
        const BinaryCode k = kernel(code);
        CHECK(k.contains(BitVector(code.length())));
        CHECK(k.contains(BitVector::all_ones(code.length())));
    }
}

TEST_CASE("report serializes with the documented keys") {
    const nlohmann::json j = to_json(analyze(circulant4_code()));
    CHECK(j["length"] == 4);
    CHECK(j["n"] == 1);
    CHECK(j["s"] == 2);
    CHECK(j["n_prime"] == 1);
    CHECK(j["rank"] == 3);
    CHECK(j["kernel_dim"] == 3);
    CHECK(j["is_linear"] == true);
}

}  // TEST_SUITE
