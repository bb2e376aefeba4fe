#include "hfp/permutation.hpp"

#include <stdexcept>

namespace hfp {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t img : images_) {
        if (img == 0 || img > images_.size() || seen[img - 1])
            throw std::invalid_argument("permutation images must form a bijection on 1..N");
        seen[img - 1] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(images));
}

Permutation Permutation::rotation(std::size_t degree, long offset) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    const long n = static_cast<long>(degree);
    const std::size_t s = static_cast<std::size_t>(((offset % n) + n) % n);
    std::vector<std::uint32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>((i + s) % degree + 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            const std::uint32_t from = cycle[j];
            const std::uint32_t to = cycle[(j + 1) % cycle.size()];
            if (from == 0 || from > degree) throw std::invalid_argument("cycle entry out of range");
            if (used[from - 1]) throw std::invalid_argument("cycles must be disjoint");
            used[from - 1] = true;
            p.images_[from - 1] = to;
        }
    }
    return Permutation(std::move(p.images_));
}

std::uint32_t Permutation::image_of(std::size_t i) const {
    if (i == 0 || i > images_.size()) throw std::out_of_range("coordinate index out of range");
    return images_[i - 1];
}

Permutation Permutation::composed_with(const Permutation& inner) const {
    if (degree() != inner.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<std::uint32_t> images(degree());
    for (std::size_t i = 0; i < degree(); ++i) images[i] = images_[inner.images_[i] - 1];
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> images(degree());
    for (std::size_t i = 0; i < degree(); ++i) images[images_[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::size_t Permutation::fixed_point_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == i + 1) ++count;
    return count;
}

BitVector apply(const Permutation& p, const BitVector& v) {
    if (p.degree() != v.length()) throw std::invalid_argument("degree mismatch");
    BitVector out(v.length());
    for (std::size_t i = 1; i <= v.length(); ++i)
        if (v.get(i)) out.set(p.image_of(i), true);
    return out;
}

}  // namespace hfp
