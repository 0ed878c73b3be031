#pragma once

#include <cstdint>
#include <vector>

#include "syzkit/field.hpp"

namespace syz {

// Row-major dense matrix over GF(p). Just enough linear algebra for the
// dense verification oracles: rank and kernel bases via Gaussian elimination.
struct DenseMat {
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int rank(DenseMat m, const GF& k);

// Basis of the right kernel {x : M x = 0}, one column vector per entry.
std::vector<std::vector<uint32_t>> kernel_basis(DenseMat m, const GF& k);

}  // namespace syz
