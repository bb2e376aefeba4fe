#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hfp/binary_code.hpp"
#include "hfp/bitvector.hpp"
#include "hfp/permutation.hpp"

namespace hfp {

/// A code together with one coordinate permutation per codeword, the data of
/// the operation x*y = x + pi_x(y).
class PropelinearStructure {
public:
    /// Words and permutations are parallel arrays; words must be distinct and
    /// every permutation degree must equal the code length.
    PropelinearStructure(std::vector<BitVector> words, std::vector<Permutation> perms);

    const BinaryCode& code() const noexcept { return code_; }
    const Permutation& perm_of(const BitVector& word) const;
    /// Permutation for words()[index], aligned with code().words().
    const Permutation& perm_at(std::size_t index) const { return perms_[index]; }

private:
    BinaryCode code_;
    std::vector<Permutation> perms_;
};

/// x*y = x + pi_x(y); x must be a codeword, y any vector of the same length.
BitVector star(const PropelinearStructure& s, const BitVector& x, const BitVector& y);

/// Checks both conditions over all codeword pairs: closure x + pi_x(y) in C,
/// and the compatibility pi_x pi_y = pi_{x*y}.
bool verify_propelinear(const PropelinearStructure& s);

/// On top of a propelinear structure: pi_e = pi_u = identity and every other
/// permutation fixed-point-free. Throws if the structure is not propelinear.
bool verify_full(const PropelinearStructure& s);

/// Least k >= 1 with x^k = e under *, or 0 if no power reaches e within |C|.
std::size_t star_order(const PropelinearStructure& s, const BitVector& x);

enum class GroupKind { cyclic_times_c2u, elementary_abelian, other };

struct GroupType {
    GroupKind kind = GroupKind::other;
    std::optional<BitVector> generator;      // present for cyclic_times_c2u
    std::size_t order_of_generator = 0;      // 4n for cyclic, else the largest *-order
};

/// "C4nxC2u" / "elementary_abelian" / "other".
std::string group_type_label(const GroupType& t);

/// Hunts, in lexicographic word order, for a codeword of *-order equal to the
/// code length whose cyclic group misses u; falls back to exponent-2
/// detection. Throws if the structure is not propelinear.
GroupType group_type(const PropelinearStructure& s);

/// Kernel/automorphism equivalences: x is a kernel word iff pi_x maps the
/// code onto itself, and c * K = c + K for every codeword c. Throws if the
/// structure is not propelinear.
bool kernel_automorphism_check(const PropelinearStructure& s);

}  // namespace hfp
