#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lincert/matrix.hpp"
#include "lincert/permutation.hpp"

namespace lincert {

/// A = P * L * U * Q with L m x r unit lower trapezoidal and U r x n upper
/// trapezoidal carrying the nonzero pivots.
struct PluqFactors {
    Permutation p;
    FMatrix l;
    FMatrix u;
    Permutation q;
    std::size_t rank;

    FMatrix assemble() const;  // P * L * U * Q
};

/// Column-ordered elimination: pivot columns are scanned left to right and
/// within a column the topmost available row wins, so U*Q is in row echelon
/// form and the pivot columns are the lexicographically minimal independent
/// set.
PluqFactors pluq_crp(const FMatrix& a);

/// 0-based pivot column positions of a CRP-revealing decomposition.
std::vector<std::uint32_t> crp_of(const PluqFactors& f);

/// Lexicographically minimal pivoting with rotation permutations; the
/// resulting P [I_r; 0] Q equals the rank profile matrix.
PluqFactors pluq_rpm(const FMatrix& a);

/// P * [I_r; 0] * Q from a rank-profile-revealing decomposition.
FMatrix rpm_matrix(const PluqFactors& f);

/// A = L * Diag(d) * U1 * P with unit triangular L, U1 and nonzero d.
struct LdupFactors {
    FMatrix l;
    Vec d;
    FMatrix u1;
    Permutation p;

    FMatrix assemble() const;
    PrimeField::Element det(const PrimeField& f) const;
};

/// Picks P as the rank profile matrix of A, so A*P^T has generic rank
/// profile and P^T*U1*P is upper triangular.  Throws SingularMatrix.
LdupFactors ldup(const FMatrix& a);

/// Solves T x = b for triangular T with nonzero diagonal.
Vec lower_solve(const FMatrix& t, const Vec& b, bool unit_diagonal = false);
Vec upper_solve(const FMatrix& t, const Vec& b, bool unit_diagonal = false);

/// Solves A x = b for A with full column rank via a CRP decomposition of A.
/// Returns nullopt when the system is inconsistent.
std::optional<Vec> solve_full_column_rank(const PluqFactors& f, const Vec& b);

bool is_lower_triangular(const FMatrix& m);
bool is_upper_triangular(const FMatrix& m);
bool is_row_echelon(const FMatrix& m);
bool is_column_echelon(const FMatrix& m);

/// P * M * P^T.
FMatrix conjugate_by_perm(const FMatrix& m, const Permutation& p);

/// Invertible 1x1 or symmetric 2x2 rational blocks on the diagonal.
struct BlockDiagonal {
    struct Block {
        bool two_by_two;
        Rational a;       // 1x1 value, or the (0,0) entry
        Rational b, c;    // 2x2 off-diagonal and (1,1) entry
    };
    std::vector<Block> blocks;

    std::size_t dimension() const;
    bool all_invertible() const;
    QMatrix to_matrix() const;
    /// (positives, negatives) by the exact sign rule per block.
    std::pair<int, int> inertia() const;
};

/// B = L * Delta * L^T for symmetric nonsingular B whose row/column order
/// admits a non-pivoting elimination: a 1x1 pivot whenever the leading
/// diagonal entry is nonzero, otherwise the leading 2x2 with a nonzero
/// off-diagonal entry.  Throws PivotFailure otherwise.
struct SymLdlt {
    QMatrix l;
    BlockDiagonal delta;
};
SymLdlt symmetric_block_ldlt(const QMatrix& b);

/// Symmetric permutation P such that P^T B P admits the non-pivoting
/// elimination above, found by simulating the elimination modulo a random
/// 31-bit prime.  Throws SingularMatrix if B is singular.
Permutation grp_forcing_permutation(const QMatrix& b, RandomSource& rng);

}  // namespace lincert
