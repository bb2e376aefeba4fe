#include "hfp/circulant.hpp"

#include <map>
#include <stdexcept>

#include "hfp/codes.hpp"
#include "hfp/hadamard.hpp"

namespace hfp {

bool circulant_is_hadamard(const BitVector& first_row) {
    const std::size_t n = first_row.length();
    if (n == 0 || n % 4 != 0) return false;
    const std::size_t half = n / 2;
    for (std::size_t i = 1; i <= half; ++i) {
        if ((first_row + first_row.rotated(static_cast<long>(i))).weight() != half) return false;
    }
    return true;
}

BinaryCode circulant_code(const RingElement& g) {
    const std::size_t n = g.modulus_degree();
    std::vector<BitVector> words;
    words.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector w = g.coeffs() + g.coeffs().rotated(static_cast<long>(i));
        words.push_back(w.complemented());
        words.push_back(std::move(w));
    }
    return BinaryCode(n, std::move(words));
}

PropelinearStructure build_hfp(const RingElement& g) {
    const std::size_t n = g.modulus_degree();
    if (!circulant_is_hadamard(g.coeffs()))
        throw std::invalid_argument("build_hfp: generator does not give a circulant Hadamard matrix");
    std::vector<BitVector> words;
    std::vector<Permutation> perms;
    words.reserve(2 * n);
    perms.reserve(2 * n);
    std::map<BitVector, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const BitVector base = g.coeffs() + g.coeffs().rotated(static_cast<long>(i));
        const Permutation rot = Permutation::rotation(n, static_cast<long>(i));
        for (const BitVector& w : {base, base.complemented()}) {
            if (!seen.emplace(w, i).second)
                throw std::logic_error("build_hfp: two shifts produced the same codeword");
            words.push_back(w);
            perms.push_back(rot);
        }
    }
    return PropelinearStructure(std::move(words), std::move(perms));
}

RingElement extract_circulant(const PropelinearStructure& s) {
    if (!verify_full(s))
        throw std::invalid_argument("extract_circulant: structure is not full propelinear");
    if (!is_hadamard_code(s.code()))
        throw std::invalid_argument("extract_circulant: underlying code is not a Hadamard code");
    const GroupType type = group_type(s);
    if (type.kind != GroupKind::cyclic_times_c2u)
        throw std::invalid_argument(
            "extract_circulant: no generator of *-order 4n avoiding u was found");
    const RingElement a(*type.generator);
    const RingElement g = divide_by_one_plus_x(a);
    // Both guaranteed by the construction; checked because a failure here
    // would mean the group-type search or the division is broken.
    if (!circulant_is_hadamard(g.coeffs()))
        throw std::logic_error("extract_circulant: quotient row is not a Hadamard circulant");
    if (circulant_code(g) != s.code())
        throw std::logic_error("extract_circulant: quotient row regenerates a different code");
    return g;
}

ColumnWeightReport column_weight_report(const RingElement& g) {
    const BinaryMatrix m = circulant(g.coeffs());
    ColumnWeightReport report;
    report.weights.assign(m.order(), 0);
    for (const BitVector& row : m.rows())
        for (std::size_t c = 1; c <= m.order(); ++c)
            if (row.get(c)) ++report.weights[c - 1];
    report.sigma = static_cast<long>(g.weight()) - static_cast<long>(g.modulus_degree() / 2);
    return report;
}

bool u_in_span_check(const RingElement& g) {
    const std::size_t n = g.modulus_degree();
    BitVector sum(n);
    for (std::size_t i = 1; i < n; ++i)
        sum += g.coeffs() + g.coeffs().rotated(static_cast<long>(i));
    return sum.is_ones();
}

CirculantRank rank_of_circulant_code(const RingElement& g) {
    if (g.is_zero()) throw std::invalid_argument("rank of the zero generator is undefined");
    const std::size_t n = g.modulus_degree();
    const Gf2Poly modulus = Gf2Poly::x_power_plus_one(n);
    const Gf2Poly lifted = Gf2Poly::lift(g);
    const Gf2Poly one_plus_x = Gf2Poly::one() + Gf2Poly::monomial(1);
    const Gf2Poly h = Gf2Poly::gcd(one_plus_x * lifted, modulus);
    const std::size_t ideal_dim = n - static_cast<std::size_t>(h.degree());
    const Gf2Poly u = Gf2Poly::lift(RingElement::all_ones(n));
    const std::size_t rank = ideal_dim + (h.divides(u) ? 0 : 1);
    const std::size_t d = static_cast<std::size_t>(Gf2Poly::gcd(lifted, modulus).degree());
    return CirculantRank{rank, d};
}

bool turyn_feasible(std::size_t order) {
    if (order == 0 || order % 4 != 0)
        throw std::invalid_argument("turyn_feasible: order must be a positive multiple of 4");
    const std::size_t n = order / 4;
    if (n % 2 == 0) return false;
    std::size_t r = 0;
    while (r * r < n) ++r;
    return r * r == n;
}

CirculantAnalysis full_analysis(const RingElement& g) {
    if (g.is_zero()) throw std::invalid_argument("full_analysis: generator must be nonzero");
    const std::size_t n = g.modulus_degree();
    if (n % 4 != 0) throw std::invalid_argument("full_analysis: order must be a multiple of 4");

    CirculantAnalysis a{g, n, false, {}, 0, 0, 0, std::nullopt, std::nullopt};
    a.is_hadamard = circulant_is_hadamard(g.coeffs());
    ColumnWeightReport cw = column_weight_report(g);
    a.column_weights = std::move(cw.weights);
    a.sigma = cw.sigma;

    const CirculantRank by_gcd = rank_of_circulant_code(g);
    a.rank_by_gcd = by_gcd.rank;
    const BinaryCode code = circulant_code(g);
    a.rank_by_elimination = span_rank(code);
    if (a.rank_by_gcd != a.rank_by_elimination)
        throw std::logic_error("full_analysis: gcd and elimination ranks disagree");

    if (a.is_hadamard) {
        const HadamardCodeReport report = analyze(code);
        a.kernel_dim = report.kernel_dim;
        a.group_type = group_type(build_hfp(g));
        if (!report.is_linear &&
            !(report.kernel_dim == 1 && report.rank == n - 1))
            throw std::logic_error("full_analysis: nonlinear circulant code must have k=1, r=4n-1");
    } else if (n <= kKernelScanMaxLength) {
        a.kernel_dim = span_rank(kernel(code));
    }
    return a;
}

}  // namespace hfp
