#pragma once

// Smith normal form of small dense integer matrices.

#include "annulab/valnum.hpp"

#include <cstddef>
#include <vector>

namespace annulab {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

/// U * M * W = D with U, W unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix U;                 // rows x rows
  IntMatrix W;                 // cols x cols
  std::vector<Integer> diag;   // nonzero invariant factors, positive, length = rank
  std::size_t rows = 0;
  std::size_t cols = 0;
};

SmithForm smith_normal_form(const IntMatrix& M, std::size_t rows, std::size_t cols);

}  // namespace annulab
