#include "stslab/gf2.hpp"

#include <algorithm>
#include <iterator>

#include "stslab/errors.hpp"

namespace stslab {

void BinaryMatrix::push_back(BitVec row) {
  if (row.size() != n_cols) throw DimensionError("row length differs from n_cols");
  rows.push_back(std::move(row));
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(n_cols, n_rows());
  for (std::size_t r = 0; r < n_rows(); ++r)
    for (std::size_t c : rows[r].ones()) t.rows[c].set(r);
  return t;
}

BitVec BinaryMatrix::apply(const BitVec& v) const {
  if (v.size() != n_cols) throw DimensionError("vector length differs from n_cols");
  BitVec out(n_rows());
  for (std::size_t r = 0; r < n_rows(); ++r)
    if (rows[r].dot(v)) out.set(r);
  return out;
}

BinaryMatrix BinaryMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BinaryMatrix out(n_rows(), cols.size());
  for (std::size_t r = 0; r < n_rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[r].get(cols[j])) out.rows[r].set(j);
  return out;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i].set(i);
  return m;
}

namespace {

// Reduced row echelon form of a copy; returns pivot column per leading row.
std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t n_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t gf2_rank(const BinaryMatrix& m) {
  RowEchelon e(m.n_cols);
  for (const auto& row : m.rows) e.insert(row);
  return e.rank();
}

BinaryMatrix gf2_kernel(const BinaryMatrix& m) {
  std::vector<BitVec> rows = m.rows;
  const auto pivots = rref(rows, m.n_cols);
  std::vector<bool> is_pivot(m.n_cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  BinaryMatrix ker(m.n_cols);
  for (std::size_t f = 0; f < m.n_cols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.n_cols);
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].get(f)) v.set(pivots[r]);
    ker.rows.push_back(std::move(v));
  }
  return ker;
}

std::optional<BitVec> gf2_solve(const BinaryMatrix& m, const BitVec& b) {
  if (b.size() != m.n_rows()) throw DimensionError("right-hand side length differs from row count");
  std::vector<BitVec> rows;
  rows.reserve(m.n_rows());
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    BitVec aug(m.n_cols + 1);
    for (std::size_t c : m.rows[r].ones()) aug.set(c);
    if (b.get(r)) aug.set(m.n_cols);
    rows.push_back(std::move(aug));
  }
  const auto pivots = rref(rows, m.n_cols);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rows[r].get(m.n_cols)) return std::nullopt;
  BitVec x(m.n_cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (rows[r].get(m.n_cols)) x.set(pivots[r]);
  return x;
}

std::vector<std::size_t> RowEchelon::sym_diff(const std::vector<std::size_t>& a,
                                              const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool RowEchelon::insert(const BitVec& v) {
  if (v.size() != n_cols_) throw DimensionError("vector length differs from echelon width");
  Row nr{v, 0, {n_inserted_}};
  ++n_inserted_;
  for (const auto& row : rows_) {
    if (nr.bits.get(row.pivot)) {
      nr.bits ^= row.bits;
      nr.combo = sym_diff(nr.combo, row.combo);
    }
  }
  if (nr.bits.none()) return false;
  nr.pivot = nr.bits.first_set();
  for (auto& row : rows_) {
    if (row.bits.get(nr.pivot)) {
      row.bits ^= nr.bits;
      row.combo = sym_diff(row.combo, nr.combo);
    }
  }
  rows_.push_back(std::move(nr));
  return true;
}

BitVec RowEchelon::reduce(const BitVec& v) const {
  if (v.size() != n_cols_) throw DimensionError("vector length differs from echelon width");
  BitVec r = v;
  for (const auto& row : rows_)
    if (r.get(row.pivot)) r ^= row.bits;
  return r;
}

std::optional<std::vector<std::size_t>> RowEchelon::express(const BitVec& v) const {
  if (v.size() != n_cols_) throw DimensionError("vector length differs from echelon width");
  BitVec r = v;
  std::vector<std::size_t> combo;
  for (const auto& row : rows_) {
    if (r.get(row.pivot)) {
      r ^= row.bits;
      combo = sym_diff(combo, row.combo);
    }
  }
  if (r.any()) return std::nullopt;
  return combo;
}

}  // namespace stslab
