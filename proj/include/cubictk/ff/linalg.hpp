// Dense linear algebra over FqField.
#pragma once

#include <cstddef>
#include <vector>

#include "cubictk/ff/field.hpp"

namespace cubictk::ff {

using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;  // row-major, all rows the same length

/// In-place reduced row echelon form; zero rows are dropped.
/// Returns the pivot columns.
std::vector<std::size_t> rref(const FqField& f, Matrix& m);

std::size_t rank(const FqField& f, Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
Matrix nullspace(const FqField& f, Matrix m, std::size_t cols);

/// Dot product.
Elem dot(const FqField& f, const Vec& a, const Vec& b);

}  // namespace cubictk::ff
