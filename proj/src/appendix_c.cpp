#include "stslab/appendix_c.hpp"

#include <algorithm>

#include "stslab/errors.hpp"
#include "stslab/gf2.hpp"

namespace stslab {

std::size_t g_value(const BinaryVector& b) {
  std::size_t g = 0;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j]) g |= std::size_t{1} << j;
  return g;
}

BinaryVector g_inverse(std::size_t p, std::size_t m) {
  if (m < 64 && p >= (std::size_t{1} << m)) throw DimensionError("value does not fit in m bits");
  BinaryVector b(m);
  for (std::size_t j = 0; j < m; ++j) b[j] = (p >> j) & 1;
  return b;
}

ColumnOperator::ColumnOperator(std::size_t m, std::size_t v)
    : m_(m), entries_(std::size_t{1} << m, PauliOperator(v)) {}

ColumnOperator::ColumnOperator(std::size_t m, std::vector<PauliOperator> entries)
    : m_(m), entries_(std::move(entries)) {
  if (entries_.size() != (std::size_t{1} << m)) throw DimensionError("column operator needs 2^m entries");
  for (const auto& e : entries_)
    if (e.n_qubits() != entries_.front().n_qubits()) throw DimensionError("column entries differ in size");
}

bool ColumnOperator::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const PauliOperator& p) { return p.is_identity_up_to_phase(); });
}

bool ColumnOperator::same_bits(const ColumnOperator& o) const {
  if (o.height() != height()) return false;
  for (std::size_t j = 0; j < height(); ++j)
    if (!entries_[j].same_bits(o.entries_[j])) return false;
  return true;
}

ColumnOperator ColumnOperator::shifted(long s) const {
  ColumnOperator r = *this;
  const long h = static_cast<long>(height());
  for (std::size_t j = 0; j < height(); ++j) {
    long t = (static_cast<long>(j) + s) % h;
    if (t < 0) t += h;
    r.entries_[static_cast<std::size_t>(t)] = entries_[j];
  }
  return r;
}

ColumnOperator& ColumnOperator::operator*=(const ColumnOperator& o) {
  if (o.height() != height()) throw DimensionError("column operators differ in height");
  for (std::size_t j = 0; j < height(); ++j) entries_[j] *= o.entries_[j];
  return *this;
}

ColumnOperator f_map(const ColumnOperator& u, int which) {
  if (u.m() == 0) throw DimensionError("f-maps need m >= 1");
  const std::size_t half = u.height() / 2;
  std::vector<PauliOperator> e;
  e.reserve(half);
  for (std::size_t j = 0; j < half; ++j) e.push_back(which == 0 ? u[j] * u[j + half] : u[j]);
  return ColumnOperator(u.m() - 1, std::move(e));
}

CharacteristicData characteristic_vector(const ColumnOperator& u) {
  if (u.is_identity()) throw ValidationError("characteristic vector of the identity column is undefined");
  CharacteristicData d;
  d.b.assign(u.m(), 0);
  ColumnOperator cur = u;
  for (std::size_t mm = u.m(); mm >= 1; --mm) {
    ColumnOperator f0 = f_map(cur, 0);
    if (f0.is_identity()) {
      d.b[mm - 1] = 1;
      cur = f_map(cur, 1);
    } else {
      cur = std::move(f0);
    }
  }
  d.V = cur[0];
  d.V.set_phase(0);
  return d;
}

bool BinaryColumnMatrix::is_odd() const {
  for (std::size_t i = 0; i < x(); ++i)
    if (parity(i)) return true;
  return false;
}

bool BinaryColumnMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const BitVec& c) { return c.none(); });
}

BinaryColumnMatrix& BinaryColumnMatrix::operator^=(const BinaryColumnMatrix& o) {
  if (o.x() != x() || o.m() != m()) throw DimensionError("binary matrices differ in shape");
  for (std::size_t i = 0; i < x(); ++i) cols_[i] ^= o.cols_[i];
  return *this;
}

BinaryColumnMatrix characteristic_column(const BinaryVector& b) {
  const std::size_t m = b.size();
  BinaryColumnMatrix out(1, m);
  const std::size_t gb = g_value(b);
  for (std::size_t p = 0; p < out.height(); ++p)
    if ((p & ~gb) == 0) out.set(0, p);
  return out;
}

namespace {

BitVec cyclic_shift(const BitVec& c, std::size_t s) {
  const std::size_t h = c.size();
  BitVec r(h);
  for (std::size_t j : c.ones()) r.set((j + s) % h);
  return r;
}

}  // namespace

BinaryColumnMatrix star(const BinaryColumnMatrix& b, const BitVec& selector) {
  if (selector.size() != b.height()) throw DimensionError("selector height differs from matrix height");
  BinaryColumnMatrix out(b.x(), b.m());
  for (std::size_t s : selector.ones())
    for (std::size_t i = 0; i < b.x(); ++i) out.column(i) ^= cyclic_shift(b.column(i), s);
  return out;
}

BinaryColumnMatrix column_star(const BinaryColumnMatrix& ba, const BinaryColumnMatrix& bb) {
  if (ba.x() != 1 || bb.x() != 1) throw DimensionError("column_star takes single columns");
  if (ba.m() != bb.m()) throw DimensionError("columns differ in height");
  return star(ba, bb.column(0));
}

bool binomial_parity(std::size_t alpha, std::size_t beta) {
  if (beta > alpha) throw DimensionError("binomial_parity needs beta <= alpha");
  return (beta & ~alpha) == 0;
}

ColumnOperator apply_column(const ColumnOperator& u, const BitVec& selector) {
  if (selector.size() != u.height()) throw DimensionError("selector height differs from column height");
  ColumnOperator out(u.m(), u.v());
  for (std::size_t s : selector.ones()) out *= u.shifted(static_cast<long>(s));
  return out;
}

StripOperator strip_from_operator(const LatticeLayout& layout, const PauliOperator& p, std::size_t x,
                                  std::size_t m) {
  if (p.n_qubits() != layout.n_qubits()) throw DimensionError("operator does not match layout");
  if (layout.D() < 1) throw DimensionError("layout needs at least one axis");
  const std::size_t h = std::size_t{1} << m;
  const std::size_t n2 = layout.D() >= 2 ? layout.n(1) : 1;
  if (x > layout.n(0) || h > n2) throw DimensionError("strip does not fit in the lattice");
  const std::size_t v = layout.v();
  StripOperator s;
  s.columns.assign(x, ColumnOperator(m, v));
  std::size_t covered = 0;
  for (std::size_t i = 0; i < x; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      Coord c(layout.D(), 0);
      c[0] = i;
      if (layout.D() >= 2) c[1] = j;
      PauliOperator e(v);
      for (std::size_t a = 0; a < v; ++a) {
        const char ch = p.at(layout.qubit(c, a));
        if (ch != 'I') {
          e.set(a, ch);
          ++covered;
        }
      }
      s.columns[i][j] = e;
    }
  }
  if (covered != p.weight()) throw DimensionError("operator has support outside the strip");
  return s;
}

AppliedMatrix apply_matrix(const StripOperator& l, const BinaryColumnMatrix& b) {
  const std::size_t x = l.x();
  if (b.x() != x || b.m() != l.m()) throw DimensionError("matrix shape does not match the strip");
  AppliedMatrix out;
  out.full.assign(2 * x - 1, ColumnOperator(l.m(), l.v()));
  for (std::size_t i = 0; i < x; ++i) {
    for (std::size_t j : b.column(i).ones()) {
      // T1^{x-1-i} T2^{j} applied to ℓ (0-based i, j).
      const std::size_t shift = x - 1 - i;
      for (std::size_t c = 0; c < x; ++c)
        out.full[c + shift] *= l.columns[c].shifted(static_cast<long>(j));
    }
  }
  out.last = out.full[x - 1];
  return out;
}

std::optional<BinaryColumnMatrix> find_odd_identity_matrix(const StripOperator& l, std::size_t budget) {
  const std::size_t x = l.x();
  if (x == 0) return std::nullopt;
  const std::size_t m = l.m();
  const std::size_t v = l.v();
  if (budget == 0) budget = (std::size_t{1} << m) * x;

  std::vector<ColumnOperator> u = l.columns;
  std::vector<BinaryColumnMatrix> e(x, BinaryColumnMatrix(x, m));
  for (std::size_t i = 0; i < x; ++i) e[i].set(i, 0);

  auto accept = [&](const BinaryColumnMatrix& b) -> std::optional<BinaryColumnMatrix> {
    if (b.is_odd() && apply_matrix(l, b).last.is_identity()) return b;
    return std::nullopt;
  };

  for (std::size_t round = 0; round <= budget; ++round) {
    for (std::size_t i = 0; i < x; ++i)
      if (u[i].is_identity()) return accept(e[i]);

    std::vector<CharacteristicData> cd;
    cd.reserve(x);
    for (std::size_t i = 0; i < x; ++i) cd.push_back(characteristic_vector(u[i]));

    // Dependency among the characteristic operators: kernel of the 2v × x matrix with columns V_i.
    BinaryMatrix vm(2 * v, x);
    for (std::size_t i = 0; i < x; ++i)
      for (std::size_t r : cd[i].V.symplectic().ones()) vm.set(r, i);
    const BinaryMatrix ker = gf2_kernel(vm);
    if (ker.n_rows() == 0) return std::nullopt;
    const auto members = ker.rows.front().ones();

    std::size_t alpha = members.front();
    for (std::size_t i : members)
      if (g_value(cd[i].b) >= g_value(cd[alpha].b)) alpha = i;
    const std::size_t target = g_value(cd[alpha].b);

    BinaryColumnMatrix acc(x, m);
    for (std::size_t i : members) {
      const BinaryVector delta = g_inverse(target - g_value(cd[i].b), m);
      acc ^= star(e[i], characteristic_column(delta).column(0));
    }
    const ColumnOperator col = apply_matrix(l, acc).last;
    if (col.is_identity()) return accept(acc);
    u[alpha] = col;
    e[alpha] = std::move(acc);
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> plane_qubits(const LatticeLayout& layout, std::size_t max_axis0) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < layout.n_particles(); ++p) {
    const Coord c = layout.particle_coord(p);
    bool in = c[0] < max_axis0;
    for (std::size_t a = 2; a < layout.D(); ++a) in = in && c[a] == 0;
    if (in)
      for (std::size_t i = 0; i < layout.v(); ++i) out.push_back(p * layout.v() + i);
  }
  return out;
}

// Centralizer elements supported on the given qubits, as full-length symplectic vectors.
std::vector<BitVec> restricted_centralizer(const StabilizerCode& code, const std::vector<std::size_t>& qubits) {
  const std::size_t n = code.n_qubits();
  std::vector<std::size_t> cols;
  for (auto q : qubits) cols.push_back(q);
  for (auto q : qubits) cols.push_back(n + q);
  const BinaryMatrix ker = gf2_kernel(code.check_matrix().select_columns(cols));
  std::vector<BitVec> out;
  for (const auto& v : ker.rows) {
    BitVec full(2 * n);
    for (std::size_t i : v.ones()) full.set(cols[i]);
    out.push_back(std::move(full));
  }
  return out;
}

// Centralizer elements on the plane that are invariant under T1^beta.
std::vector<BitVec> periodic_centralizer(const StabilizerCode& code, const LatticeLayout& layout,
                                         const std::vector<std::size_t>& plane, std::size_t beta) {
  const std::size_t n = code.n_qubits();
  std::vector<bool> seen(n, false);
  std::vector<BitVec> orbits;
  for (std::size_t q : plane) {
    if (seen[q]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = q;
    do {
      orbit.push_back(cur);
      seen[cur] = true;
      cur = layout.translate_qubit(cur, 0, static_cast<long>(beta));
    } while (cur != q);
    for (std::size_t half = 0; half < 2; ++half) {
      BitVec o(2 * n);
      for (auto r : orbit) o.set(half * n + r);
      orbits.push_back(std::move(o));
    }
  }
  BinaryMatrix syn(code.n_generators(), orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t r : code.check_matrix().apply(orbits[i]).ones()) syn.set(r, i);
  const BinaryMatrix ker = gf2_kernel(syn);
  std::vector<BitVec> out;
  for (const auto& k : ker.rows) {
    BitVec v(2 * n);
    for (std::size_t i : k.ones()) v ^= orbits[i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<PeriodicDecomposition> decompose_periodic(const StabilizerCode& code, const LatticeLayout& layout,
                                                        const PauliOperator& l) {
  if (!code.is_logical(l)) throw ValidationError("operator is not a logical operator of the code");
  const std::size_t n = code.n_qubits();
  const std::size_t n1 = layout.n(0);
  const auto plane = plane_qubits(layout, n1);
  {
    std::vector<bool> in(n, false);
    for (auto q : plane) in[q] = true;
    for (auto q : l.support())
      if (!in[q]) throw ValidationError("operator is not supported on the plane");
  }
  const auto strip = plane_qubits(layout, std::min(2 * layout.v(), n1));
  const auto a_basis = restricted_centralizer(code, strip);
  const BitVec lv = l.symplectic();

  for (std::size_t beta = 1; beta < n1; ++beta) {
    if (n1 % beta) continue;
    const PauliOperator lt = translate_operator(layout, l, 0, static_cast<long>(beta));
    if (lt.same_bits(l)) {
      PeriodicDecomposition d{PauliOperator(n), l, beta};
      d.l_b.set_phase(0);
      return d;
    }
    const auto p_basis = periodic_centralizer(code, layout, plane, beta);
    // Columns: generators, then strip centralizers, then periodic centralizers.
    const std::size_t g = code.n_generators();
    BinaryMatrix sys(2 * n, g + a_basis.size() + p_basis.size());
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t r : code.symplectic_matrix().rows[j].ones()) sys.set(r, j);
    for (std::size_t j = 0; j < a_basis.size(); ++j)
      for (std::size_t r : a_basis[j].ones()) sys.set(r, g + j);
    for (std::size_t j = 0; j < p_basis.size(); ++j)
      for (std::size_t r : p_basis[j].ones()) sys.set(r, g + a_basis.size() + j);
    const auto sol = gf2_solve(sys, lv);
    if (!sol) continue;
    BitVec va(2 * n), vb(2 * n);
    for (std::size_t j = 0; j < a_basis.size(); ++j)
      if (sol->get(g + j)) va ^= a_basis[j];
    for (std::size_t j = 0; j < p_basis.size(); ++j)
      if (sol->get(g + a_basis.size() + j)) vb ^= p_basis[j];
    return PeriodicDecomposition{PauliOperator::from_symplectic(va), PauliOperator::from_symplectic(vb), beta};
  }
  return std::nullopt;
}

}  // namespace stslab
