#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "lincert/matrix.hpp"

namespace lincert {
namespace oracle {

/// Strictly increasing 0-based positions of the lexicographically minimal
/// independent rows or columns.
using RankProfile = std::vector<std::uint32_t>;

/// Ground truth used by every test; deliberately slow and structurally
/// independent of the elimination kernels under test.

std::size_t rank(const FMatrix& a);
RankProfile crp(const FMatrix& a);
RankProfile rrp(const FMatrix& a);
FMatrix rpm(const FMatrix& a);
PrimeField::Element det(const FMatrix& a);
bool grp(const FMatrix& a);

/// (positive, negative, zero) eigenvalue counts of a symmetric integer
/// matrix, via the characteristic polynomial and exact sign counting.
std::tuple<int, int, int> signature(const QMatrix& a);

std::size_t rank_q(const QMatrix& a);
RankProfile crp_q(const QMatrix& a);

}  // namespace oracle
}  // namespace lincert
