#pragma once

// Column-operator combinatorics used to shrink logical operators along one axis: halving maps,
// characteristic vectors, characteristic binary columns and identity-generating matrices.
//
// Conventions: columns are stored least index first. A column operator of height 2^m is a list
// of 2^m Pauli operators on one composite particle each. T2 shifts a column cyclically towards
// larger indices; T1 shifts columns of a strip towards larger column indices without wrapping.
// Identity tests compare Pauli bits only; phases are not tracked by this module's predicates.

#include <cstddef>
#include <optional>
#include <vector>

#include "stslab/bitvec.hpp"
#include "stslab/lattice.hpp"
#include "stslab/pauli.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

using BinaryVector = std::vector<int>;  // b[0] is b_1

std::size_t g_value(const BinaryVector& b);
BinaryVector g_inverse(std::size_t p, std::size_t m);

class ColumnOperator {
 public:
  ColumnOperator() = default;
  ColumnOperator(std::size_t m, std::size_t v);
  ColumnOperator(std::size_t m, std::vector<PauliOperator> entries);

  std::size_t m() const { return m_; }
  std::size_t height() const { return entries_.size(); }
  std::size_t v() const { return entries_.empty() ? 0 : entries_.front().n_qubits(); }
  const PauliOperator& operator[](std::size_t j) const { return entries_[j]; }
  PauliOperator& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<PauliOperator>& entries() const { return entries_; }

  bool is_identity() const;
  bool same_bits(const ColumnOperator& o) const;
  // T2^s, cyclic: entry j moves to j+s mod 2^m.
  ColumnOperator shifted(long s) const;
  ColumnOperator& operator*=(const ColumnOperator& o);
  friend ColumnOperator operator*(ColumnOperator a, const ColumnOperator& b) { return a *= b; }

 private:
  std::size_t m_ = 0;
  std::vector<PauliOperator> entries_;
};

// which = 0: U_j U_{j+2^{m-1}}; which = 1: U_j; both for j < 2^{m-1}.
ColumnOperator f_map(const ColumnOperator& u, int which);

struct CharacteristicData {
  BinaryVector b;
  PauliOperator V;  // phase dropped
};

CharacteristicData characteristic_vector(const ColumnOperator& u);

// x columns of 2^m bits each; entry (i, j) is column i, height j.
class BinaryColumnMatrix {
 public:
  BinaryColumnMatrix() = default;
  BinaryColumnMatrix(std::size_t x, std::size_t m) : m_(m), cols_(x, BitVec(std::size_t{1} << m)) {}

  std::size_t x() const { return cols_.size(); }
  std::size_t m() const { return m_; }
  std::size_t height() const { return std::size_t{1} << m_; }
  bool get(std::size_t i, std::size_t j) const { return cols_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { cols_[i].set(j, v); }
  const BitVec& column(std::size_t i) const { return cols_[i]; }
  BitVec& column(std::size_t i) { return cols_[i]; }

  bool parity(std::size_t i) const { return cols_[i].popcount() & 1; }
  bool is_odd() const;
  bool is_zero() const;

  BinaryColumnMatrix& operator^=(const BinaryColumnMatrix& o);
  bool operator==(const BinaryColumnMatrix& o) const { return m_ == o.m_ && cols_ == o.cols_; }

 private:
  std::size_t m_ = 0;
  std::vector<BitVec> cols_;
};

// Single column with bit p set iff g^{-1}(p) lies below b componentwise.
BinaryColumnMatrix characteristic_column(const BinaryVector& b);
// Sum over set bits j of `selector` of T2^j applied to every column of `b`.
BinaryColumnMatrix star(const BinaryColumnMatrix& b, const BitVec& selector);
// B(a)*B(b) for width-one operands.
BinaryColumnMatrix column_star(const BinaryColumnMatrix& ba, const BinaryColumnMatrix& bb);

// C(alpha, beta) mod 2 via the bitwise-subset criterion. Throws if beta > alpha.
bool binomial_parity(std::size_t alpha, std::size_t beta);

// Product of T2 translations of a column operator selected by a single binary column.
ColumnOperator apply_column(const ColumnOperator& u, const BitVec& selector);

// Operator supported on an x-column strip, each column of height 2^m.
struct StripOperator {
  std::vector<ColumnOperator> columns;
  std::size_t x() const { return columns.size(); }
  std::size_t m() const { return columns.empty() ? 0 : columns.front().m(); }
  std::size_t v() const { return columns.empty() ? 0 : columns.front().v(); }
};

// Strip of the first x particles along axis 0 and 2^m along axis 1 (remaining coordinates 0).
// Throws if p has support outside the strip.
StripOperator strip_from_operator(const LatticeLayout& layout, const PauliOperator& p, std::size_t x,
                                  std::size_t m);

struct AppliedMatrix {
  std::vector<ColumnOperator> full;  // 2x−1 columns
  ColumnOperator last;               // column x (1-based) of the product
};

AppliedMatrix apply_matrix(const StripOperator& l, const BinaryColumnMatrix& b);

// Odd B with ℓ(B)_x = I via characteristic-vector escalation, or nullopt within the round budget.
// budget 0 means 2^m·x rounds.
std::optional<BinaryColumnMatrix> find_odd_identity_matrix(const StripOperator& l, std::size_t budget = 0);

struct PeriodicDecomposition {
  PauliOperator l_a;   // supported on the first min(2v, n_1) slices of the plane
  PauliOperator l_b;   // invariant under T1^period
  std::size_t period = 0;
};

// ℓ ~ ℓ_a·ℓ_b with ℓ_a, ℓ_b centralizer elements on the plane r_a = 0 (a >= 2).
// Returns nullopt if no period dividing n_1 (and below n_1) admits a solution.
std::optional<PeriodicDecomposition> decompose_periodic(const StabilizerCode& code, const LatticeLayout& layout,
                                                        const PauliOperator& l);

}  // namespace stslab
