#include "cubictk/ff/linalg.hpp"

namespace cubictk::ff {

std::vector<std::size_t> rref(const FqField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[row], m[r]);
    const Elem s = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.mul(x, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Elem factor = f.neg(m[i][c]);
      for (std::size_t j = c; j < cols; ++j)
        if (m[row][j] != 0) m[i][j] = f.add(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(const FqField& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const FqField& f, Matrix m, std::size_t cols) {
  const auto pivots = rref(f, m);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Elem dot(const FqField& f, const Vec& a, const Vec& b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace cubictk::ff
