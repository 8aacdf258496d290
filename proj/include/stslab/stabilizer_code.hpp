#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stslab/gf2.hpp"
#include "stslab/pauli.hpp"

namespace stslab {

// Generator list of a stabilizer group. Construction checks sizes only; use validate() for
// commutation and the −I condition.
class StabilizerCode {
 public:
  StabilizerCode() = default;
  StabilizerCode(std::size_t n_qubits, std::vector<PauliOperator> generators);

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  std::size_t n_generators() const { return gens_.size(); }
  // G(S): number of independent generators.
  std::size_t rank() const { return rank_; }
  std::size_t k() const { return n_ - rank_; }

  // Rows are generators as [x | z].
  const BinaryMatrix& symplectic_matrix() const { return mat_; }
  // Rows are generators as [z | x], so that check_matrix().apply(v) is the syndrome of v.
  const BinaryMatrix& check_matrix() const { return check_; }

  BitVec syndrome(const PauliOperator& p) const;
  bool commutes_with_all(const PauliOperator& p) const { return syndrome(p).none(); }
  // Bit-level membership in the group generated by the generators (phase ignored).
  bool in_stabilizer_group(const PauliOperator& p) const;
  bool is_logical(const PauliOperator& p) const {
    return commutes_with_all(p) && !in_stabilizer_group(p);
  }
  // Product of the selected generators, with its phase.
  PauliOperator product(const std::vector<std::size_t>& generator_indices) const;
  // Generator indices whose product has the same bits as p, if p is in the group.
  std::optional<std::vector<std::size_t>> express(const PauliOperator& p) const;

  // True if every generator is X-type or Z-type.
  bool is_css() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> gens_;
  BinaryMatrix mat_, check_;
  std::size_t rank_ = 0;
  RowEchelon echelon_{0};
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  // Offending generator pair for a commutation failure.
  std::optional<std::pair<std::size_t, std::size_t>> anticommuting_pair;
  // Generator indices multiplying to a nontrivial multiple of the identity.
  std::vector<std::size_t> identity_combination;
};

ValidationReport validate(const StabilizerCode& code);

// Throws ValidationError with the report's message if the code is invalid.
void require_valid(const StabilizerCode& code);

// 2k operators, independent modulo S, each commuting with every generator.
std::vector<PauliOperator> logical_basis(const StabilizerCode& code);

struct LogicalSet {
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
  std::size_t k() const { return pairs.size(); }
};

LogicalSet canonical_pairs(const StabilizerCode& code);
// Symplectic Gram–Schmidt on an explicit list of independent logical operators. Partners are
// taken in list order: the first remaining operator is paired with the first later operator
// it anticommutes with.
LogicalSet canonical_pairs_from_basis(std::vector<PauliOperator> basis);

struct DistanceResult {
  std::optional<std::size_t> distance;  // nullopt: nothing found up to max_weight
  std::size_t max_weight = 0;
  std::optional<PauliOperator> witness;
  bool exceeded() const { return !distance.has_value(); }
};

DistanceResult code_distance_exact(const StabilizerCode& code, std::size_t max_weight);

// G(C_R) − G(S_R) for the qubit subset R.
std::size_t g_region(const StabilizerCode& code, const std::vector<std::size_t>& qubits);

// The qubits not in the given subset.
std::vector<std::size_t> complement_qubits(std::size_t n, const std::vector<std::size_t>& qubits);

}  // namespace stslab
