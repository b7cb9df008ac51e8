#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lincert/matrix.hpp"

namespace lincert {

/// Text container: "lincert-matrix v1 <m> <n> <p|Q>" then m rows of n
/// entries.  Prime-field mode reduces entries mod p; rational mode accepts
/// "a" or "a/b" tokens.
struct LoadedMatrix {
    std::optional<FMatrix> field_matrix;
    std::optional<QMatrix> rational_matrix;
};

LoadedMatrix load_matrix(const std::string& path);
LoadedMatrix parse_matrix(std::istream& in);
void save_matrix(const std::string& path, const FMatrix& m);
void save_matrix(const std::string& path, const QMatrix& m);

}  // namespace lincert
