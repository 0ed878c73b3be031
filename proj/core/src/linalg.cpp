#include "syzkit/linalg.hpp"

namespace syz {

namespace {

// Reduces m in place to row echelon form; returns pivot columns.
std::vector<int> echelon(DenseMat& m, const GF& k) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    uint32_t inv = k.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      uint32_t f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(DenseMat m, const GF& k) { return static_cast<int>(echelon(m, k).size()); }

std::vector<std::vector<uint32_t>> kernel_basis(DenseMat m, const GF& k) {
  std::vector<int> pivots = echelon(m, k);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<uint32_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(m.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace syz
