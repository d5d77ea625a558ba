#pragma once

#include <string>
#include <vector>

#include "sextic/algebra/rational.hpp"

namespace sextic {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> init);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Integer& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  /// Determinant of a square matrix (fraction-free elimination).
  Integer determinant() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

struct AbelianInvariants {
  std::vector<Integer> torsion;  // each >= 2, each divides the next
  int free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  Integer order() const;  // 0 when infinite
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct SmithForm {
  AbelianInvariants invariants;
  IntegerMatrix diagonal;  // U * m * V
  IntegerMatrix U, V;
  std::vector<Integer> diagonal_entries;
};

/// Smith normal form of a relation matrix (rows = relations, columns = generators).
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace sextic
