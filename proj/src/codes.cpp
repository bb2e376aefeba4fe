#include "hfp/codes.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace hfp {

namespace {

std::pair<unsigned, std::size_t> factor_two_part(std::size_t length) {
    unsigned s = 0;
    while (length % 2 == 0) {
        length /= 2;
        ++s;
    }
    return {s, length};
}

bool closed_under_add(const BinaryCode& code) {
    const auto& ws = code.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i; j < ws.size(); ++j)
            if (!code.contains(ws[i] + ws[j])) return false;
    return true;
}

}  // namespace

bool is_hadamard_code(const BinaryCode& code) {
    const std::size_t len = code.length();
    if (len == 0 || len % 4 != 0) return false;
    const std::size_t n = len / 4;
    if (code.size() != 8 * n) return false;
    if (!code.contains(BitVector(len))) return false;
    const auto& ws = code.words();
    for (const BitVector& w : ws)
        if (!code.contains(w.complemented())) return false;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            const std::size_t d = (ws[i] + ws[j]).weight();
            if (d == 4 * n) {
                if (ws[j] != ws[i].complemented()) return false;
            } else if (d != 2 * n) {
                return false;
            }
        }
    }
    return true;
}

HadamardCodeReport analyze(const BinaryCode& code) {
    if (!is_hadamard_code(code)) throw std::invalid_argument("analyze: not a Hadamard code");
    HadamardCodeReport rep;
    rep.length = code.length();
    rep.n = rep.length / 4;
    std::tie(rep.s, rep.n_prime) = factor_two_part(rep.length);
    rep.rank = span_rank(code);
    rep.kernel_dim = span_rank(kernel(code));
    rep.is_linear = closed_under_add(code);

    // Structural bounds; failures indicate a rank/kernel computation bug.
    if (rep.is_linear) {
        if (rep.kernel_dim != rep.rank)
            throw std::logic_error("linear code reported kernel dimension != rank");
    } else {
        if (rep.kernel_dim < 1 || rep.kernel_dim > rep.s - 1)
            throw std::logic_error("kernel dimension outside 1..s-1 for a nonlinear Hadamard code");
    }
    if (rep.s >= 3) {
        if (rep.rank > 2 * rep.n) throw std::logic_error("rank exceeds 2n for s >= 3");
        if (rep.s == 3 && rep.rank != 2 * rep.n)
            throw std::logic_error("rank must equal 2n when s = 3");
    } else {
        if (rep.rank < rep.length - 1) throw std::logic_error("rank below 4n-1 for s = 2");
    }
    return rep;
}

BinaryCode project_code(const BinaryCode& code, const BitVector& kappa) {
    if (!is_hadamard_code(code)) throw std::invalid_argument("project_code: not a Hadamard code");
    if (kappa.length() != code.length())
        throw std::invalid_argument("project_code: kappa length mismatch");
    if (kappa.is_zero() || kappa.is_ones())
        throw std::invalid_argument("project_code: kappa must be a nontrivial kernel word");
    for (const BitVector& w : code.words())
        if (!code.contains(kappa + w))
            throw std::invalid_argument("project_code: kappa is not in the kernel");

    const auto support = support_of(kappa);
    std::vector<BitVector> projected;
    projected.reserve(code.size());
    for (const BitVector& w : code.words()) projected.push_back(project(w, support));
    BinaryCode out(support.size(), std::move(projected));

    // Halved length; a length-2 result degenerates to all of F_2^2.
    const bool ok = out.length() >= 4 ? is_hadamard_code(out)
                                      : (out.length() == 2 && out.size() == 4);
    if (!ok) throw std::logic_error("projection onto a kernel support failed to stay Hadamard");
    return out;
}

}  // namespace hfp
