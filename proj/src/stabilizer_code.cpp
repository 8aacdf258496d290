#include "stslab/stabilizer_code.hpp"

#include <algorithm>
#include <array>

#include "stslab/errors.hpp"

namespace stslab {

StabilizerCode::StabilizerCode(std::size_t n_qubits, std::vector<PauliOperator> generators)
    : n_(n_qubits), gens_(std::move(generators)), mat_(2 * n_qubits), check_(2 * n_qubits),
      echelon_(2 * n_qubits) {
  if (n_ == 0) throw ValidationError("a code needs at least one qubit");
  for (const auto& g : gens_) {
    if (g.n_qubits() != n_) throw DimensionError("generator qubit count differs from code size");
    mat_.rows.push_back(g.symplectic());
    check_.rows.push_back(BitVec::concat(g.z(), g.x()));
    echelon_.insert(mat_.rows.back());
  }
  rank_ = echelon_.rank();
}

BitVec StabilizerCode::syndrome(const PauliOperator& p) const {
  if (p.n_qubits() != n_) throw DimensionError("operator qubit count differs from code size");
  return check_.apply(p.symplectic());
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& p) const {
  if (p.n_qubits() != n_) throw DimensionError("operator qubit count differs from code size");
  return echelon_.contains(p.symplectic());
}

PauliOperator StabilizerCode::product(const std::vector<std::size_t>& idx) const {
  PauliOperator r(n_);
  for (auto i : idx) r *= gens_.at(i);
  return r;
}

std::optional<std::vector<std::size_t>> StabilizerCode::express(const PauliOperator& p) const {
  if (p.n_qubits() != n_) throw DimensionError("operator qubit count differs from code size");
  return echelon_.express(p.symplectic());
}

bool StabilizerCode::is_css() const {
  for (const auto& g : gens_)
    if (g.x().any() && g.z().any()) return false;
  return true;
}

ValidationReport validate(const StabilizerCode& code) {
  ValidationReport rep;
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_hermitian()) {
      rep.ok = false;
      rep.message = "generator " + std::to_string(i) + " is not Hermitian";
      return rep;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (symplectic_product(g[i], g[j])) {
        rep.ok = false;
        rep.anticommuting_pair = std::make_pair(i, j);
        rep.message = "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
        return rep;
      }
    }
  }
  // With all generators commuting, a dependent generator must equal the product of the
  // generators it depends on exactly, sign included; otherwise −I is in the group.
  RowEchelon e(2 * code.n_qubits());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto combo = e.express(g[j].symplectic());
    if (combo) {
      PauliOperator prod = g[j];
      for (auto i : *combo) prod *= g[i];
      if (prod.phase() != 0) {
        rep.ok = false;
        rep.identity_combination = *combo;
        rep.identity_combination.push_back(j);
        rep.message = "generators multiply to " + std::string(prod.phase() == 2 ? "-I" : "a phase times I") +
                      " (dependent generator " + std::to_string(j) + ")";
        return rep;
      }
    }
    e.insert(g[j].symplectic());
  }
  return rep;
}

void require_valid(const StabilizerCode& code) {
  const auto rep = validate(code);
  if (!rep.ok) throw ValidationError("invalid stabilizer code: " + rep.message);
}

std::vector<PauliOperator> logical_basis(const StabilizerCode& code) {
  require_valid(code);
  const std::size_t n = code.n_qubits();
  const BinaryMatrix centralizer = gf2_kernel(code.check_matrix());
  RowEchelon e(2 * n);
  for (const auto& row : code.symplectic_matrix().rows) e.insert(row);
  std::vector<PauliOperator> out;
  for (const auto& v : centralizer.rows)
    if (e.insert(v)) out.push_back(PauliOperator::from_symplectic(v));
  return out;
}

LogicalSet canonical_pairs_from_basis(std::vector<PauliOperator> basis) {
  LogicalSet out;
  while (!basis.empty()) {
    PauliOperator a = basis.front();
    std::size_t partner = basis.size();
    for (std::size_t j = 1; j < basis.size(); ++j) {
      if (symplectic_product(a, basis[j])) {
        partner = j;
        break;
      }
    }
    if (partner == basis.size())
      throw ValidationError("logical basis is degenerate: an operator commutes with all others");
    PauliOperator b = basis[partner];
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(partner));
    basis.erase(basis.begin());
    for (auto& c : basis) {
      const bool cb = symplectic_product(c, b);
      const bool ca = symplectic_product(c, a);
      if (cb) c *= a;
      if (ca) c *= b;
      c.set_phase(0);
    }
    a.set_phase(0);
    b.set_phase(0);
    out.pairs.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

LogicalSet canonical_pairs(const StabilizerCode& code) {
  return canonical_pairs_from_basis(logical_basis(code));
}

namespace {

struct DistanceSearch {
  const StabilizerCode& code;
  std::size_t n;
  std::vector<std::array<BitVec, 3>> syn;       // per qubit, syndromes of X, Y, Z
  std::vector<std::size_t> gen_last_qubit;      // highest qubit in each generator's support
  std::vector<std::size_t> choice_q;
  std::vector<int> choice_p;
  std::optional<PauliOperator> found;

  static constexpr char kPauli[3] = {'X', 'Y', 'Z'};

  explicit DistanceSearch(const StabilizerCode& c) : code(c), n(c.n_qubits()) {
    syn.resize(n);
    for (std::size_t q = 0; q < n; ++q)
      for (int p = 0; p < 3; ++p)
        syn[q][p] = code.syndrome(PauliOperator::single(n, q, kPauli[p]));
    for (const auto& g : code.generators()) {
      const auto s = g.support();
      gen_last_qubit.push_back(s.empty() ? 0 : s.back());
    }
  }

  // A violated generator whose support ends at or before `last` can no longer be repaired.
  bool hopeless(const BitVec& s, std::size_t last) const {
    for (std::size_t j : s.ones())
      if (gen_last_qubit[j] <= last) return true;
    return false;
  }

  bool dfs(std::size_t start, std::size_t remaining, const BitVec& s) {
    if (remaining == 0) {
      if (s.any()) return false;
      PauliOperator e(n);
      for (std::size_t i = 0; i < choice_q.size(); ++i) e.set(choice_q[i], kPauli[choice_p[i]]);
      if (code.in_stabilizer_group(e)) return false;
      found = e;
      return true;
    }
    for (std::size_t q = start; q + remaining <= n; ++q) {
      for (int p = 0; p < 3; ++p) {
        BitVec s2 = s ^ syn[q][p];
        if (remaining > 1 && hopeless(s2, q)) continue;
        choice_q.push_back(q);
        choice_p.push_back(p);
        const bool hit = dfs(q + 1, remaining - 1, s2);
        choice_q.pop_back();
        choice_p.pop_back();
        if (hit) return true;
      }
    }
    return false;
  }
};

}  // namespace

DistanceResult code_distance_exact(const StabilizerCode& code, std::size_t max_weight) {
  require_valid(code);
  if (code.k() == 0) throw ValidationError("code has no logical qubits; distance is undefined");
  DistanceResult res;
  res.max_weight = max_weight;
  DistanceSearch search(code);
  const BitVec zero(code.n_generators());
  for (std::size_t w = 1; w <= std::min(max_weight, code.n_qubits()); ++w) {
    if (search.dfs(0, w, zero)) {
      res.distance = w;
      res.witness = search.found;
      return res;
    }
  }
  return res;
}

std::vector<std::size_t> complement_qubits(std::size_t n, const std::vector<std::size_t>& qubits) {
  std::vector<bool> in(n, false);
  for (auto q : qubits) {
    if (q >= n) throw DimensionError("qubit index out of range");
    in[q] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q)
    if (!in[q]) out.push_back(q);
  return out;
}

namespace {

std::vector<std::size_t> symplectic_columns(std::size_t n, const std::vector<std::size_t>& qubits) {
  std::vector<std::size_t> cols;
  cols.reserve(2 * qubits.size());
  for (auto q : qubits) cols.push_back(q);
  for (auto q : qubits) cols.push_back(n + q);
  return cols;
}

}  // namespace

std::size_t g_region(const StabilizerCode& code, const std::vector<std::size_t>& qubits) {
  const std::size_t n = code.n_qubits();
  std::vector<std::size_t> r = qubits;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  const auto rbar = complement_qubits(n, r);

  // Centralizer elements supported on R: kernel of the check matrix restricted to R's columns.
  const BinaryMatrix check_r = code.check_matrix().select_columns(symplectic_columns(n, r));
  const std::size_t g_c = gf2_kernel(check_r).n_rows();

  // Stabilizer elements supported on R: the kernel of projecting S onto the complement.
  const BinaryMatrix s_rbar = code.symplectic_matrix().select_columns(symplectic_columns(n, rbar));
  const std::size_t g_s = code.rank() - gf2_rank(s_rbar);

  return g_c - g_s;
}

}  // namespace stslab
