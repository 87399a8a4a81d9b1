#include "annulab/smith.hpp"

#include <utility>

namespace annulab {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix I(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  std::size_t r = a.size();
  std::size_t c = b.empty() ? 0 : b[0].size();
  IntMatrix out(r, std::vector<Integer>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

namespace {

struct Work {
  IntMatrix A, U, W;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : A) std::swap(row[i], row[j]);
    for (auto& row : W) std::swap(row[i], row[j]);
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c) A[i][c] += k * A[j][c];
    for (std::size_t c = 0; c < rows; ++c) U[i][c] += k * U[j][c];
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows; ++r) A[r][i] += k * A[r][j];
    for (std::size_t r = 0; r < cols; ++r) W[r][i] += k * W[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : A[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M, std::size_t rows, std::size_t cols) {
  Work w{M, identity_matrix(rows), identity_matrix(cols), rows, cols};
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (w.A[i][j] != 0 && (pr == rows || abs(w.A[i][j]) < abs(w.A[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.A[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.A[i][t].get_mpz_t(), w.A[t][t].get_mpz_t());
        w.add_row(i, t, -q);
        if (w.A[i][t] != 0) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.A[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.A[t][j].get_mpz_t(), w.A[t][t].get_mpz_t());
        w.add_col(j, t, -q);
        if (w.A[t][j] != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide the whole remaining block
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.A[i][j] % w.A[t][t] != 0) {
            w.add_row(t, i, 1);
            clean = false;
            break;
          }
    }
    if (w.A[t][t] < 0) w.negate_row(t);
    ++t;
  }
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  for (std::size_t i = 0; i < t; ++i) out.diag.push_back(w.A[i][i]);
  out.U = std::move(w.U);
  out.W = std::move(w.W);
  return out;
}

}  // namespace annulab
