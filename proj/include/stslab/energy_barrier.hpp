#pragma once

#include <cstddef>
#include <vector>

#include "stslab/pauli.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

// Energy above the ground state of e|gs> for H = −Σ S_j: two units per anticommuting generator.
std::size_t excitation_energy(const StabilizerCode& code, const PauliOperator& e);

struct PathStep {
  std::size_t qubit;
  char pauli;
  std::size_t energy_after;
};

struct ErrorPath {
  std::vector<PathStep> steps;
};

struct BarrierResult {
  std::size_t barrier = 0;
  ErrorPath witness;
  PauliOperator representative;  // the operator whose factors were ordered
  // Set by barrier_min_over_class.
  std::size_t representatives_searched = 1;
  std::size_t representatives_skipped = 0;  // over the weight cap
  bool class_level = false;
};

constexpr std::size_t kBarrierWeightCap = 20;

// Minimax over all orderings of ℓ's single-qubit factors (best-first search over subsets).
BarrierResult barrier_for_representative(const StabilizerCode& code, const PauliOperator& l,
                                         std::size_t weight_cap = kBarrierWeightCap);

// Minimum of barrier_for_representative over ℓ·s, s in the group generated by the first
// `stabilizer_budget` independent generators. Representatives above the weight cap are skipped
// and counted in the result.
BarrierResult barrier_min_over_class(const StabilizerCode& code, const PauliOperator& l,
                                     std::size_t stabilizer_budget,
                                     std::size_t weight_cap = kBarrierWeightCap);

constexpr std::size_t kClassBudgetCap = 16;

}  // namespace stslab
