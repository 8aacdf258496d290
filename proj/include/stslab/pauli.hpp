#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stslab/bitvec.hpp"

namespace stslab {

// Pauli operator i^phase * (P_0 ⊗ P_1 ⊗ ...), with P_q in {I, X, Y, Z} selected by (x_q, z_q).
// Y is stored as x=z=1, so a Hermitian operator has even phase.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVec x, BitVec z, int phase = 0);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator single(std::size_t n, std::size_t q, char p);
  // Parses "[+|-|+i|-i|i]{I,X,Y,Z}*"; the Unicode minus sign is accepted as well.
  static PauliOperator parse(const std::string& s);
  // Builds from the symplectic vector [x | z] of length 2n, phase 0.
  static PauliOperator from_symplectic(const BitVec& v);

  std::size_t n_qubits() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  int phase() const { return phase_; }
  void set_phase(int p) { phase_ = ((p % 4) + 4) % 4; }

  char at(std::size_t q) const;
  void set(std::size_t q, char p);

  BitVec symplectic() const { return BitVec::concat(x_, z_); }
  std::size_t weight() const { return (x_ | z_).popcount(); }
  std::vector<std::size_t> support() const { return (x_ | z_).ones(); }
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool same_bits(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }

  std::string to_string() const;

  PauliOperator& operator*=(const PauliOperator& o);
  friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }

  bool operator==(const PauliOperator& o) const {
    return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliOperator& o) const { return !(*this == o); }
  bool operator<(const PauliOperator& o) const {
    if (x_ != o.x_) return x_ < o.x_;
    if (z_ != o.z_) return z_ < o.z_;
    return phase_ < o.phase_;
  }

 private:
  BitVec x_, z_;
  int phase_ = 0;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
// 0 when a and b commute, 1 when they anticommute. Phases are ignored.
bool symplectic_product(const PauliOperator& a, const PauliOperator& b);
std::size_t weight(const PauliOperator& a);

// Symplectic product of two [x | z] vectors of equal length 2n.
bool symplectic_product(const BitVec& a, const BitVec& b);

}  // namespace stslab
