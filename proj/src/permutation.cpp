#include "lincert/permutation.hpp"

#include <numeric>

namespace lincert {

Permutation::Permutation(std::size_t n) : img_(n), pre_(n) {
    std::iota(img_.begin(), img_.end(), 0);
    std::iota(pre_.begin(), pre_.end(), 0);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    if (!is_valid(img_)) throw Error("not a permutation");
    pre_.resize(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) pre_[img_[j]] = static_cast<std::uint32_t>(j);
}

bool Permutation::is_valid(const std::vector<std::uint32_t>& images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::compose(const Permutation& o) const {
    if (size() != o.size()) throw DimensionMismatch("permutation compose");
    // (this * o).image(j) = this.image(o.image(j))
    std::vector<std::uint32_t> out(size());
    for (std::size_t j = 0; j < size(); ++j) out[j] = img_[o.img_[j]];
    return Permutation(std::move(out));
}

int Permutation::sign() const {
    std::vector<bool> seen(size(), false);
    int sgn = 1;
    for (std::size_t j = 0; j < size(); ++j) {
        if (seen[j]) continue;
        std::size_t len = 0;
        std::size_t k = j;
        while (!seen[k]) {
            seen[k] = true;
            k = img_[k];
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

void Permutation::swap_images(std::size_t a, std::size_t b) {
    std::swap(img_[a], img_[b]);
    pre_[img_[a]] = static_cast<std::uint32_t>(a);
    pre_[img_[b]] = static_cast<std::uint32_t>(b);
}

}  // namespace lincert
