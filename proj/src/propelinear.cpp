#include "hfp/propelinear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hfp {

PropelinearStructure::PropelinearStructure(std::vector<BitVector> words,
                                           std::vector<Permutation> perms) {
    if (words.empty()) throw std::invalid_argument("propelinear structure needs at least one word");
    if (words.size() != perms.size())
        throw std::invalid_argument("words and permutations must be parallel");
    const std::size_t len = words.front().length();
    std::vector<std::size_t> idx(words.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });
    std::vector<BitVector> sorted_words;
    std::vector<Permutation> sorted_perms;
    sorted_words.reserve(words.size());
    sorted_perms.reserve(perms.size());
    for (std::size_t k : idx) {
        if (!sorted_words.empty() && sorted_words.back() == words[k])
            throw std::invalid_argument("duplicate codeword in propelinear structure");
        if (perms[k].degree() != len)
            throw std::invalid_argument("permutation degree must equal the code length");
        sorted_words.push_back(std::move(words[k]));
        sorted_perms.push_back(std::move(perms[k]));
    }
    code_ = BinaryCode(len, std::move(sorted_words));
    perms_ = std::move(sorted_perms);
}

const Permutation& PropelinearStructure::perm_of(const BitVector& word) const {
    const auto& ws = code_.words();
    const auto it = std::lower_bound(ws.begin(), ws.end(), word);
    if (it == ws.end() || *it != word)
        throw std::invalid_argument("not a codeword of this structure");
    return perms_[static_cast<std::size_t>(it - ws.begin())];
}

BitVector star(const PropelinearStructure& s, const BitVector& x, const BitVector& y) {
    return x + apply(s.perm_of(x), y);
}

bool verify_propelinear(const PropelinearStructure& s) {
    const auto& ws = s.code().words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = 0; j < ws.size(); ++j) {
            const BitVector z = ws[i] + apply(s.perm_at(i), ws[j]);
            if (!s.code().contains(z)) return false;
            if (s.perm_at(i).composed_with(s.perm_at(j)) != s.perm_of(z)) return false;
        }
    }
    return true;
}

bool verify_full(const PropelinearStructure& s) {
    if (!verify_propelinear(s))
        throw std::invalid_argument("verify_full: structure is not propelinear");
    const std::size_t len = s.code().length();
    const BitVector e(len);
    const BitVector u = BitVector::all_ones(len);
    if (!s.code().contains(e) || !s.code().contains(u)) return false;
    if (!s.perm_of(e).is_identity() || !s.perm_of(u).is_identity()) return false;
    const auto& ws = s.code().words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] == e || ws[i] == u) continue;
        if (s.perm_at(i).fixed_point_count() != 0) return false;
    }
    return true;
}

std::size_t star_order(const PropelinearStructure& s, const BitVector& x) {
    const BitVector e(x.length());
    BitVector power = x;
    std::size_t order = 1;
    const std::size_t bound = s.code().size();
    while (power != e) {
        power = star(s, x, power);
        if (++order > bound) return 0;
    }
    return order;
}

std::string group_type_label(const GroupType& t) {
    switch (t.kind) {
        case GroupKind::cyclic_times_c2u:
            return "C" + std::to_string(t.order_of_generator) + "xC2u";
        case GroupKind::elementary_abelian:
            return "elementary_abelian";
        default:
            return "other";
    }
}

GroupType group_type(const PropelinearStructure& s) {
    if (!verify_propelinear(s))
        throw std::invalid_argument("group_type: structure is not propelinear");
    const std::size_t len = s.code().length();
    const BitVector e(len);
    const BitVector u = BitVector::all_ones(len);
    std::size_t max_order = 0;
    for (const BitVector& a : s.code().words()) {
        const std::size_t ord = star_order(s, a);
        max_order = std::max(max_order, ord);
        if (ord != len) continue;
        // <a> = {a, a^2, ..., e}; the type needs u outside it.
        bool u_inside = false;
        BitVector power = a;
        for (std::size_t k = 1; k <= ord; ++k) {
            if (power == u) {
                u_inside = true;
                break;
            }
            power = star(s, a, power);
        }
        if (!u_inside) return GroupType{GroupKind::cyclic_times_c2u, a, ord};
    }
    if (max_order <= 2) return GroupType{GroupKind::elementary_abelian, std::nullopt, max_order};
    return GroupType{GroupKind::other, std::nullopt, max_order};
}

bool kernel_automorphism_check(const PropelinearStructure& s) {
    if (!verify_propelinear(s))
        throw std::invalid_argument("kernel_automorphism_check: structure is not propelinear");
    const BinaryCode k = kernel(s.code());
    const auto& ws = s.code().words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        bool maps_code_to_itself = true;
        for (const BitVector& c : ws) {
            if (!s.code().contains(apply(s.perm_at(i), c))) {
                maps_code_to_itself = false;
                break;
            }
        }
        if (k.contains(ws[i]) != maps_code_to_itself) return false;
    }
    // c * K and c + K must coincide as sets for every codeword c.
    for (const BitVector& c : ws) {
        std::vector<BitVector> starred, translated;
        starred.reserve(k.size());
        translated.reserve(k.size());
        for (const BitVector& kappa : k.words()) {
            starred.push_back(star(s, c, kappa));
            translated.push_back(c + kappa);
        }
        std::sort(starred.begin(), starred.end());
        std::sort(translated.begin(), translated.end());
        if (starred != translated) return false;
    }
    return true;
}

}  // namespace hfp
