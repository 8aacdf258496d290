#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stslab/bitvec.hpp"

namespace stslab {

// Dense GF(2) matrix stored as packed rows.
struct BinaryMatrix {
  std::size_t n_cols = 0;
  std::vector<BitVec> rows;

  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t cols) : n_cols(cols) {}
  BinaryMatrix(std::size_t n_rows, std::size_t cols) : n_cols(cols), rows(n_rows, BitVec(cols)) {}

  std::size_t n_rows() const { return rows.size(); }
  bool get(std::size_t r, std::size_t c) const { return rows[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows[r].set(c, v); }
  void push_back(BitVec row);

  BinaryMatrix transpose() const;
  // M·v for v of length n_cols.
  BitVec apply(const BitVec& v) const;
  // Keeps only the listed columns, in the given order.
  BinaryMatrix select_columns(const std::vector<std::size_t>& cols) const;

  static BinaryMatrix identity(std::size_t n);
  bool operator==(const BinaryMatrix& o) const { return n_cols == o.n_cols && rows == o.rows; }
};

std::size_t gf2_rank(const BinaryMatrix& m);
// Basis of {v : M v = 0}; n_cols − rank rows.
BinaryMatrix gf2_kernel(const BinaryMatrix& m);
// Some x with M x = b, or nullopt if the system is inconsistent.
std::optional<BitVec> gf2_solve(const BinaryMatrix& m, const BitVec& b);

// Incrementally built row space kept in reduced echelon form. Every stored row remembers
// which inserted vectors it is the sum of, so membership queries can return a certificate.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t n_cols) : n_cols_(n_cols) {}

  std::size_t n_cols() const { return n_cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return n_inserted_; }

  // Adds v; returns true if it enlarged the span.
  bool insert(const BitVec& v);
  // Residual of v after eliminating all pivots; zero iff v is in the span.
  BitVec reduce(const BitVec& v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  // If v is in the span, the subset of inserted vectors (by insertion index) summing to v.
  std::optional<std::vector<std::size_t>> express(const BitVec& v) const;

 private:
  struct Row {
    BitVec bits;
    std::size_t pivot;
    std::vector<std::size_t> combo;  // sorted insertion indices
  };
  static std::vector<std::size_t> sym_diff(const std::vector<std::size_t>& a,
                                           const std::vector<std::size_t>& b);

  std::size_t n_cols_;
  std::size_t n_inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace stslab
