#include "sextic/algebra/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sextic {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix");
    for (long v : row) a_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntegerMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Reducer {
  IntegerMatrix d, u, v;
  int r, c;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c; ++k) std::swap(d(i, k), d(j, k));
    for (int k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r; ++k) std::swap(d(k, i), d(k, j));
    for (int k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
  }
  // row_i += q * row_j
  void add_row(int i, int j, const Integer& q) {
    for (int k = 0; k < c; ++k) d(i, k) += q * d(j, k);
    for (int k = 0; k < r; ++k) u(i, k) += q * u(j, k);
  }
  // col_i += q * col_j
  void add_col(int i, int j, const Integer& q) {
    for (int k = 0; k < r; ++k) d(k, i) += q * d(k, j);
    for (int k = 0; k < c; ++k) v(k, i) += q * v(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < c; ++k) d(i, k) = -d(i, k);
    for (int k = 0; k < r; ++k) u(i, k) = -u(i, k);
  }

  bool move_min_to(int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (d(i, j) != 0 && (bi < 0 || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    int n = std::min(r, c);
    for (int t = 0; t < n; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool dirty = false;
        for (int i = t + 1; i < r; ++i) {
          if (d(i, t) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (d(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < c; ++j) {
          if (d(t, j) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (d(t, j) != 0) dirty = true;
        }
        if (dirty) {
          // a smaller remainder appeared in row or column t
          int bi = t, bj = t;
          for (int i = t; i < r; ++i)
            if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
              bi = i;
              bj = t;
            }
          for (int j = t; j < c; ++j)
            if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
              bi = t;
              bj = j;
            }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        int bad = -1;
        for (int i = t + 1; i < r && bad < 0; ++i)
          for (int j = t + 1; j < c; ++j)
            if (d(i, j) % d(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (d(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer red{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), m.rows(), m.cols()};
  red.run();
  SmithForm out;
  int rank = 0;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Integer& e = red.d(i, i);
    if (e == 0) break;
    ++rank;
    out.diagonal_entries.push_back(e);
    if (e > 1) out.invariants.torsion.push_back(e);
  }
  out.invariants.free_rank = m.cols() - rank;
  out.diagonal = red.d;
  out.U = red.u;
  out.V = red.v;
  return out;
}

}  // namespace sextic
