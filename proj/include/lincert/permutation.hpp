#pragma once

#include <cstdint>
#include <vector>

#include "lincert/errors.hpp"

namespace lincert {

/// Permutation on {0..n-1}.  As a matrix, column j holds its 1 at row
/// image(j); left-multiplication by it moves row j of the operand to row
/// image(j), right-multiplication moves column image(j) to column j.
class Permutation {
public:
    explicit Permutation(std::size_t n);  // identity
    explicit Permutation(std::vector<std::uint32_t> images);

    static bool is_valid(const std::vector<std::uint32_t>& images);

    std::size_t size() const { return img_.size(); }
    std::uint32_t image(std::size_t j) const { return img_[j]; }
    std::uint32_t preimage(std::size_t i) const { return pre_[i]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    Permutation inverse() const { return Permutation(pre_); }
    Permutation compose(const Permutation& o) const;  // this * o as matrices

    /// +1 or -1 depending on parity.
    int sign() const;

    /// Swaps images of positions a and b (this := this * transposition).
    void swap_images(std::size_t a, std::size_t b);

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<std::uint32_t> img_;
    std::vector<std::uint32_t> pre_;
};

}  // namespace lincert
