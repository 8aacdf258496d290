#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stslab/lattice.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

// A set of composite particles of a layout.
class Region {
 public:
  Region() = default;
  explicit Region(LatticeLayout layout) : layout_(std::move(layout)), in_(layout_.n_particles(), false) {}
  Region(LatticeLayout layout, const std::vector<Coord>& members);

  const LatticeLayout& layout() const { return layout_; }
  bool contains(const Coord& c) const { return in_[layout_.particle_index(c)]; }
  bool contains_particle(std::size_t p) const { return in_.at(p); }
  void add(const Coord& c) { in_[layout_.particle_index(c)] = true; }
  std::size_t size() const;

  std::vector<Coord> members() const;
  std::vector<std::size_t> qubits() const;

  Region complement() const;
  Region united(const Region& o) const;
  Region translated(std::size_t axis, long amount) const;

  bool operator==(const Region& o) const { return layout_ == o.layout_ && in_ == o.in_; }

 private:
  void check_same(const Region& o) const;

  LatticeLayout layout_;
  std::vector<bool> in_;
};

// Particles with 0 <= r_a < x[a].
Region region_P(const LatticeLayout& layout, const std::vector<std::size_t>& x);
// P with x[a] = n[a] where d[a] = 1 and x[a] = 1 otherwise.
Region region_Q(const LatticeLayout& layout, const std::vector<int>& d);
// Union of all Q(d) with |d| = m.
Region region_R(const LatticeLayout& layout, std::size_t m);

std::size_t g_region(const StabilizerCode& code, const Region& r);

struct TranslationCheck {
  bool pass = true;
  std::optional<std::size_t> failed_axis;
};

// Tests ℓ·T_a(ℓ) ∈ S for every axis a.
TranslationCheck translation_equivalence_check(const StabilizerCode& code, const LatticeLayout& layout,
                                               const PauliOperator& l);

// Some ℓ·s (s ∈ S) supported inside the target region, if one exists.
std::optional<PauliOperator> deform_logical(const StabilizerCode& code, const PauliOperator& l,
                                            const Region& target);

// Least m such that ℓ has an equivalent representative inside R_m.
std::size_t logical_dimension(const StabilizerCode& code, const LatticeLayout& layout, const PauliOperator& l);

struct DualityReport {
  std::vector<std::size_t> g_by_dimension;  // g_0 .. g_D
  std::vector<std::pair<std::size_t, std::size_t>> pair_dimensions;
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
};

// Logical basis ordered by the R_m filtration, so lower-dimensional classes come first.
std::vector<PauliOperator> filtered_logical_basis(const StabilizerCode& code, const LatticeLayout& layout);

DualityReport classify_dimensions(const StabilizerCode& code, const LatticeLayout& layout);
bool verify_duality(const DualityReport& report);

struct TopologicalOrderReport {
  bool pass = true;
  std::size_t g_contractible = 0;
  std::size_t max_g_single_particle = 0;
};

TopologicalOrderReport topological_order_check(const StabilizerCode& code, const LatticeLayout& layout);

}  // namespace stslab
