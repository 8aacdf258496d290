#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "stslab/pauli.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

using Coord = std::vector<std::size_t>;

// Periodic D-dimensional grid of composite particles with v qubits each.
// Qubit index = particle_index(c) * v + intra, particle_index is row-major with axis 0 slowest.
class LatticeLayout {
 public:
  LatticeLayout() = default;
  LatticeLayout(std::vector<std::size_t> n, std::size_t v);

  std::size_t D() const { return n_.size(); }
  const std::vector<std::size_t>& n() const { return n_; }
  std::size_t n(std::size_t axis) const { return n_.at(axis); }
  std::size_t v() const { return v_; }
  std::size_t n_particles() const { return n_particles_; }
  std::size_t n_qubits() const { return n_particles_ * v_; }

  std::size_t particle_index(const Coord& c) const;
  Coord particle_coord(std::size_t p) const;
  std::size_t qubit(const Coord& c, std::size_t intra) const { return particle_index(c) * v_ + intra; }
  std::size_t particle_of_qubit(std::size_t q) const { return q / v_; }
  std::size_t intra_of_qubit(std::size_t q) const { return q % v_; }

  // Coordinate shifted along an axis, wrapping periodically. amount may be negative.
  Coord shifted(Coord c, std::size_t axis, long amount) const;
  std::size_t translate_qubit(std::size_t q, std::size_t axis, long amount) const;

  bool operator==(const LatticeLayout& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  std::vector<std::size_t> n_;
  std::size_t v_ = 1;
  std::size_t n_particles_ = 0;
};

struct LatticeCode {
  StabilizerCode code;
  LatticeLayout layout;
  std::string family;  // "ising", "toric", or a caller-supplied name
  std::size_t D = 0;
  std::size_t m = 0;   // cell dimension for toric codes
};

// One ZZ bond per site and axis.
LatticeCode build_ising(std::size_t D, const std::vector<std::size_t>& dims);
// Qubits on m-cells; Z on the boundary of each (m+1)-cell, X on the coboundary of each (m−1)-cell.
LatticeCode build_toric(std::size_t D, std::size_t m, std::size_t L);
LatticeCode build_toric(std::size_t D, std::size_t m, const std::vector<std::size_t>& dims);

// Qubit of the m-cell based at coordinate c spanning the given sorted axes.
std::size_t toric_cell_qubit(const LatticeLayout& layout, std::size_t m, const Coord& c,
                             const std::vector<std::size_t>& axes);

std::size_t binomial(std::size_t n, std::size_t k);

PauliOperator translate_operator(const LatticeLayout& layout, const PauliOperator& p, std::size_t axis,
                                 long amount);

// Regroups blocks of factors[a] particles along each axis into single particles.
LatticeCode coarse_grain(const LatticeCode& lc, const std::vector<std::size_t>& factors);

// True if every generator's particle support fits in a periodic box of window[a] particles per axis.
bool generators_fit_window(const StabilizerCode& code, const LatticeLayout& layout,
                           const std::vector<std::size_t>& window);

struct CodeFamily {
  std::string id;
  std::function<LatticeCode(const std::vector<std::size_t>& size)> build;
};

CodeFamily ising_family(std::size_t D);
CodeFamily toric_family(std::size_t D, std::size_t m);

struct ScaleSymmetryReport {
  std::vector<std::vector<std::size_t>> sizes;
  std::vector<std::size_t> k;
  bool pass = false;
};

ScaleSymmetryReport check_scale_symmetry(const CodeFamily& family,
                                         const std::vector<std::vector<std::size_t>>& sizes);

}  // namespace stslab
