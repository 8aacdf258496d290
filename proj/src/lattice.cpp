#include "stslab/lattice.hpp"

#include <algorithm>
#include <map>

#include "stslab/errors.hpp"

namespace stslab {

LatticeLayout::LatticeLayout(std::vector<std::size_t> n, std::size_t v) : n_(std::move(n)), v_(v) {
  if (n_.empty()) throw ValidationError("lattice needs at least one axis");
  if (v_ == 0) throw ValidationError("composite particles need at least one qubit");
  n_particles_ = 1;
  for (auto x : n_) {
    if (x == 0) throw ValidationError("lattice side must be positive");
    n_particles_ *= x;
  }
}

std::size_t LatticeLayout::particle_index(const Coord& c) const {
  if (c.size() != D()) throw DimensionError("coordinate has wrong dimension");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < D(); ++a) idx = idx * n_[a] + (c[a] % n_[a]);
  return idx;
}

Coord LatticeLayout::particle_coord(std::size_t p) const {
  if (p >= n_particles_) throw DimensionError("particle index out of range");
  Coord c(D());
  for (std::size_t a = D(); a-- > 0;) {
    c[a] = p % n_[a];
    p /= n_[a];
  }
  return c;
}

Coord LatticeLayout::shifted(Coord c, std::size_t axis, long amount) const {
  if (axis >= D()) throw DimensionError("axis out of range");
  const long n = static_cast<long>(n_[axis]);
  long x = (static_cast<long>(c[axis]) + amount) % n;
  if (x < 0) x += n;
  c[axis] = static_cast<std::size_t>(x);
  return c;
}

std::size_t LatticeLayout::translate_qubit(std::size_t q, std::size_t axis, long amount) const {
  const Coord c = shifted(particle_coord(particle_of_qubit(q)), axis, amount);
  return qubit(c, intra_of_qubit(q));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// All k-subsets of {0..D-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t D, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = start; a < D; ++a) {
      cur.push_back(a);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::size_t subset_rank(std::size_t D, const std::vector<std::size_t>& s) {
  const auto all = subsets(D, s.size());
  const auto it = std::find(all.begin(), all.end(), s);
  if (it == all.end()) throw ValidationError("axis subset is not sorted or out of range");
  return static_cast<std::size_t>(it - all.begin());
}

void check_dims(const std::vector<std::size_t>& dims) {
  for (auto d : dims)
    if (d < 2) throw ValidationError("lattice sides must be at least 2");
}

}  // namespace

LatticeCode build_ising(std::size_t D, const std::vector<std::size_t>& dims) {
  if (D == 0) throw ValidationError("dimension must be at least 1");
  if (dims.size() != D) throw ValidationError("need one size per axis");
  check_dims(dims);
  LatticeLayout layout(dims, 1);
  const std::size_t N = layout.n_qubits();
  std::vector<PauliOperator> gens;
  for (std::size_t p = 0; p < layout.n_particles(); ++p) {
    const Coord c = layout.particle_coord(p);
    for (std::size_t a = 0; a < D; ++a) {
      PauliOperator g(N);
      g.set(layout.qubit(c, 0), 'Z');
      g.set(layout.qubit(layout.shifted(c, a, 1), 0), 'Z');
      gens.push_back(std::move(g));
    }
  }
  return {StabilizerCode(N, std::move(gens)), layout, "ising", D, 0};
}

std::size_t toric_cell_qubit(const LatticeLayout& layout, std::size_t m, const Coord& c,
                             const std::vector<std::size_t>& axes) {
  if (axes.size() != m) throw ValidationError("cell must span exactly m axes");
  return layout.qubit(c, subset_rank(layout.D(), axes));
}

LatticeCode build_toric(std::size_t D, std::size_t m, std::size_t L) {
  return build_toric(D, m, std::vector<std::size_t>(D, L));
}

LatticeCode build_toric(std::size_t D, std::size_t m, const std::vector<std::size_t>& dims) {
  if (D == 0) throw ValidationError("dimension must be at least 1");
  if (m > D) throw ValidationError("cell dimension m must satisfy 0 <= m <= D");
  if (dims.size() != D) throw ValidationError("need one size per axis");
  check_dims(dims);
  const auto cells = subsets(D, m);
  LatticeLayout layout(dims, cells.size());
  const std::size_t N = layout.n_qubits();
  auto cell = [&](const Coord& c, const std::vector<std::size_t>& axes) {
    return layout.qubit(c, subset_rank(D, axes));
  };

  std::vector<PauliOperator> gens;
  const auto up = subsets(D, m + 1);  // empty when m == D
  for (std::size_t p = 0; p < layout.n_particles(); ++p) {
    const Coord c = layout.particle_coord(p);
    for (const auto& A : up) {
      PauliOperator g(N);
      for (std::size_t a : A) {
        std::vector<std::size_t> face;
        for (std::size_t b : A) if (b != a) face.push_back(b);
        g.set(cell(c, face), 'Z');
        g.set(cell(layout.shifted(c, a, 1), face), 'Z');
      }
      gens.push_back(std::move(g));
    }
  }
  if (m >= 1) {
    const auto down = subsets(D, m - 1);
    for (std::size_t p = 0; p < layout.n_particles(); ++p) {
      const Coord c = layout.particle_coord(p);
      for (const auto& B : down) {
        PauliOperator g(N);
        for (std::size_t a = 0; a < D; ++a) {
          if (std::find(B.begin(), B.end(), a) != B.end()) continue;
          std::vector<std::size_t> co = B;
          co.insert(std::upper_bound(co.begin(), co.end(), a), a);
          g.set(cell(c, co), 'X');
          g.set(cell(layout.shifted(c, a, -1), co), 'X');
        }
        gens.push_back(std::move(g));
      }
    }
  }
  return {StabilizerCode(N, std::move(gens)), layout, "toric", D, m};
}

PauliOperator translate_operator(const LatticeLayout& layout, const PauliOperator& p, std::size_t axis,
                                 long amount) {
  if (p.n_qubits() != layout.n_qubits()) throw DimensionError("operator does not match layout");
  if (axis >= layout.D()) throw DimensionError("axis out of range");
  PauliOperator r(p.n_qubits());
  for (std::size_t q : p.support()) r.set(layout.translate_qubit(q, axis, amount), p.at(q));
  r.set_phase(p.phase());
  return r;
}

LatticeCode coarse_grain(const LatticeCode& lc, const std::vector<std::size_t>& factors) {
  const auto& old = lc.layout;
  if (factors.size() != old.D()) throw ValidationError("need one factor per axis");
  std::vector<std::size_t> n2(old.D());
  std::size_t block = 1;
  for (std::size_t a = 0; a < old.D(); ++a) {
    if (factors[a] == 0 || old.n(a) % factors[a] != 0)
      throw ValidationError("coarse-graining factors must divide the lattice sides");
    n2[a] = old.n(a) / factors[a];
    block *= factors[a];
  }
  LatticeLayout layout(n2, old.v() * block);
  std::vector<std::size_t> perm(old.n_qubits());
  for (std::size_t q = 0; q < old.n_qubits(); ++q) {
    const Coord c = old.particle_coord(old.particle_of_qubit(q));
    Coord c2(old.D());
    std::size_t offset = 0;
    for (std::size_t a = 0; a < old.D(); ++a) {
      c2[a] = c[a] / factors[a];
      offset = offset * factors[a] + c[a] % factors[a];
    }
    perm[q] = layout.qubit(c2, offset * old.v() + old.intra_of_qubit(q));
  }
  std::vector<PauliOperator> gens;
  for (const auto& g : lc.code.generators()) {
    PauliOperator h(g.n_qubits());
    for (std::size_t q : g.support()) h.set(perm[q], g.at(q));
    h.set_phase(g.phase());
    gens.push_back(std::move(h));
  }
  return {StabilizerCode(lc.code.n_qubits(), std::move(gens)), layout, lc.family, lc.D, lc.m};
}

bool generators_fit_window(const StabilizerCode& code, const LatticeLayout& layout,
                           const std::vector<std::size_t>& window) {
  if (window.size() != layout.D()) throw DimensionError("window needs one extent per axis");
  for (const auto& g : code.generators()) {
    std::vector<Coord> coords;
    for (std::size_t q : g.support()) coords.push_back(layout.particle_coord(layout.particle_of_qubit(q)));
    if (coords.empty()) continue;
    for (std::size_t a = 0; a < layout.D(); ++a) {
      std::vector<std::size_t> xs;
      for (const auto& c : coords) xs.push_back(c[a]);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      const std::size_t n = layout.n(a);
      std::size_t max_gap = xs.front() + n - xs.back();
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) max_gap = std::max(max_gap, xs[i + 1] - xs[i]);
      const std::size_t arc = n - max_gap + 1;
      if (arc > window[a]) return false;
    }
  }
  return true;
}

CodeFamily ising_family(std::size_t D) {
  return {"ising", [D](const std::vector<std::size_t>& size) { return build_ising(D, size); }};
}

CodeFamily toric_family(std::size_t D, std::size_t m) {
  return {"toric", [D, m](const std::vector<std::size_t>& size) { return build_toric(D, m, size); }};
}

ScaleSymmetryReport check_scale_symmetry(const CodeFamily& family,
                                         const std::vector<std::vector<std::size_t>>& sizes) {
  if (sizes.size() < 2) throw ValidationError("scale-symmetry check needs at least two sizes");
  ScaleSymmetryReport rep;
  rep.sizes = sizes;
  for (const auto& s : sizes) rep.k.push_back(family.build(s).code.k());
  rep.pass = std::all_of(rep.k.begin(), rep.k.end(), [&](std::size_t k) { return k == rep.k.front(); });
  return rep;
}

}  // namespace stslab
