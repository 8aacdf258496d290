#include "stslab/sts_analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "stslab/errors.hpp"

namespace stslab {

Region::Region(LatticeLayout layout, const std::vector<Coord>& members) : Region(std::move(layout)) {
  for (const auto& c : members) {
    if (c.size() != layout_.D()) throw DimensionError("coordinate has wrong dimension");
    for (std::size_t a = 0; a < c.size(); ++a)
      if (c[a] >= layout_.n(a)) throw DimensionError("coordinate out of range");
    add(c);
  }
}

std::size_t Region::size() const {
  std::size_t s = 0;
  for (bool b : in_) s += b;
  return s;
}

std::vector<Coord> Region::members() const {
  std::vector<Coord> out;
  for (std::size_t p = 0; p < in_.size(); ++p)
    if (in_[p]) out.push_back(layout_.particle_coord(p));
  return out;
}

std::vector<std::size_t> Region::qubits() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < in_.size(); ++p)
    if (in_[p])
      for (std::size_t i = 0; i < layout_.v(); ++i) out.push_back(p * layout_.v() + i);
  return out;
}

void Region::check_same(const Region& o) const {
  if (!(layout_ == o.layout_)) throw DimensionError("regions belong to different layouts");
}

Region Region::complement() const {
  Region r = *this;
  r.in_.flip();
  return r;
}

Region Region::united(const Region& o) const {
  check_same(o);
  Region r = *this;
  for (std::size_t p = 0; p < in_.size(); ++p) r.in_[p] = in_[p] || o.in_[p];
  return r;
}

Region Region::translated(std::size_t axis, long amount) const {
  Region r(layout_);
  for (const auto& c : members()) r.add(layout_.shifted(c, axis, amount));
  return r;
}

Region region_P(const LatticeLayout& layout, const std::vector<std::size_t>& x) {
  if (x.size() != layout.D()) throw DimensionError("extent needs one entry per axis");
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] > layout.n(a)) throw DimensionError("extent exceeds lattice size");
  Region r(layout);
  for (std::size_t p = 0; p < layout.n_particles(); ++p) {
    const Coord c = layout.particle_coord(p);
    bool in = true;
    for (std::size_t a = 0; a < c.size(); ++a) in = in && c[a] < x[a];
    if (in) r.add(c);
  }
  return r;
}

Region region_Q(const LatticeLayout& layout, const std::vector<int>& d) {
  if (d.size() != layout.D()) throw DimensionError("direction vector needs one entry per axis");
  std::vector<std::size_t> x(d.size());
  for (std::size_t a = 0; a < d.size(); ++a) {
    if (d[a] != 0 && d[a] != 1) throw DimensionError("direction vector must be binary");
    x[a] = d[a] ? layout.n(a) : 1;
  }
  return region_P(layout, x);
}

Region region_R(const LatticeLayout& layout, std::size_t m) {
  const std::size_t D = layout.D();
  if (m > D) throw DimensionError("R_m needs 0 <= m <= D");
  Region r(layout);
  for (std::size_t mask = 0; mask < (std::size_t{1} << D); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<int> d(D);
    for (std::size_t a = 0; a < D; ++a) d[a] = (mask >> a) & 1;
    r = r.united(region_Q(layout, d));
  }
  return r;
}

std::size_t g_region(const StabilizerCode& code, const Region& r) {
  if (code.n_qubits() != r.layout().n_qubits()) throw DimensionError("region layout does not match code");
  return g_region(code, r.qubits());
}

TranslationCheck translation_equivalence_check(const StabilizerCode& code, const LatticeLayout& layout,
                                               const PauliOperator& l) {
  if (!code.is_logical(l)) throw ValidationError("operator is not a logical operator of the code");
  TranslationCheck res;
  for (std::size_t a = 0; a < layout.D(); ++a) {
    const PauliOperator prod = l * translate_operator(layout, l, a, 1);
    if (!code.in_stabilizer_group(prod)) {
      res.pass = false;
      res.failed_axis = a;
      return res;
    }
  }
  return res;
}

std::optional<PauliOperator> deform_logical(const StabilizerCode& code, const PauliOperator& l,
                                            const Region& target) {
  const std::size_t n = code.n_qubits();
  if (l.n_qubits() != n || target.layout().n_qubits() != n)
    throw DimensionError("operator, region and code sizes differ");
  const auto outside = complement_qubits(n, target.qubits());
  std::vector<std::size_t> cols;
  for (auto q : outside) cols.push_back(q);
  for (auto q : outside) cols.push_back(n + q);
  // Unknowns are generator coefficients; equations ask the product to match ℓ off the target.
  const BinaryMatrix a = code.symplectic_matrix().select_columns(cols).transpose();
  BitVec b(cols.size());
  const BitVec lv = l.symplectic();
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (lv.get(cols[i])) b.set(i);
  const auto c = gf2_solve(a, b);
  if (!c) return std::nullopt;
  PauliOperator out = l;
  for (std::size_t j : c->ones()) out *= code.generators()[j];
  return out;
}

std::size_t logical_dimension(const StabilizerCode& code, const LatticeLayout& layout, const PauliOperator& l) {
  for (std::size_t m = 0; m <= layout.D(); ++m)
    if (deform_logical(code, l, region_R(layout, m))) return m;
  throw ValidationError("operator has no representative on the full lattice");
}

std::vector<PauliOperator> filtered_logical_basis(const StabilizerCode& code, const LatticeLayout& layout) {
  require_valid(code);
  const std::size_t n = code.n_qubits();
  RowEchelon e(2 * n);
  for (const auto& row : code.symplectic_matrix().rows) e.insert(row);
  std::vector<PauliOperator> out;
  for (std::size_t m = 0; m <= layout.D() && out.size() < 2 * code.k(); ++m) {
    const auto q = region_R(layout, m).qubits();
    std::vector<std::size_t> cols;
    for (auto x : q) cols.push_back(x);
    for (auto x : q) cols.push_back(n + x);
    const BinaryMatrix ker = gf2_kernel(code.check_matrix().select_columns(cols));
    for (const auto& v : ker.rows) {
      BitVec full(2 * n);
      for (std::size_t i : v.ones()) full.set(cols[i]);
      if (e.insert(full)) out.push_back(PauliOperator::from_symplectic(full));
    }
  }
  return out;
}

DualityReport classify_dimensions(const StabilizerCode& code, const LatticeLayout& layout) {
  DualityReport rep;
  std::size_t prev = 0;
  for (std::size_t m = 0; m <= layout.D(); ++m) {
    const std::size_t g = g_region(code, region_R(layout, m));
    rep.g_by_dimension.push_back(g - prev);
    prev = g;
  }
  const LogicalSet ls = canonical_pairs_from_basis(filtered_logical_basis(code, layout));
  for (const auto& [l, r] : ls.pairs) {
    rep.pair_dimensions.emplace_back(logical_dimension(code, layout, l), logical_dimension(code, layout, r));
    rep.pairs.emplace_back(l, r);
  }
  return rep;
}

bool verify_duality(const DualityReport& report) {
  const auto& g = report.g_by_dimension;
  if (g.empty()) return false;
  const std::size_t D = g.size() - 1;
  for (std::size_t m = 0; m <= D; ++m)
    if (g[m] != g[D - m]) return false;
  for (const auto& [a, b] : report.pair_dimensions)
    if (a + b != D) return false;
  return true;
}

namespace {

bool translation_invariant(const StabilizerCode& code, const LatticeLayout& layout) {
  std::set<std::pair<BitVec, BitVec>> gens;
  for (const auto& g : code.generators()) gens.emplace(g.x(), g.z());
  for (std::size_t a = 0; a < layout.D(); ++a)
    for (const auto& g : code.generators()) {
      const auto t = translate_operator(layout, g, a, 1);
      if (!gens.count({t.x(), t.z()})) return false;
    }
  return true;
}

}  // namespace

TopologicalOrderReport topological_order_check(const StabilizerCode& code, const LatticeLayout& layout) {
  TopologicalOrderReport rep;
  std::vector<std::size_t> x(layout.D());
  for (std::size_t a = 0; a < layout.D(); ++a) x[a] = layout.n(a) - 1;
  rep.g_contractible = g_region(code, region_P(layout, x));
  const std::size_t n_check = translation_invariant(code, layout) ? 1 : layout.n_particles();
  for (std::size_t p = 0; p < n_check; ++p) {
    Region r(layout);
    r.add(layout.particle_coord(p));
    rep.max_g_single_particle = std::max(rep.max_g_single_particle, g_region(code, r));
  }
  rep.pass = rep.g_contractible == 0 && rep.max_g_single_particle == 0;
  return rep;
}

}  // namespace stslab
