#include "stslab/energy_barrier.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

#include "stslab/errors.hpp"

namespace stslab {

std::size_t excitation_energy(const StabilizerCode& code, const PauliOperator& e) {
  return 2 * code.syndrome(e).popcount();
}

BarrierResult barrier_for_representative(const StabilizerCode& code, const PauliOperator& l,
                                         std::size_t weight_cap) {
  if (l.n_qubits() != code.n_qubits()) throw DimensionError("operator does not match code size");
  const auto support = l.support();
  const std::size_t w = support.size();
  if (w > weight_cap || w > kBarrierWeightCap)
    throw CapacityError("representative weight " + std::to_string(w) + " exceeds the barrier search cap");

  // Syndrome of each factor, packed into words.
  const std::size_t n_gen = code.n_generators();
  const std::size_t words = (n_gen + 63) / 64;
  std::vector<std::vector<std::uint64_t>> fsyn(w, std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < w; ++i) {
    const BitVec s = code.syndrome(PauliOperator::single(code.n_qubits(), support[i], l.at(support[i])));
    for (std::size_t k = 0; k < words; ++k) fsyn[i][k] = s.word(k);
  }

  // Energy of every subset, by Gray-code walk.
  const std::size_t n_states = std::size_t{1} << w;
  std::vector<std::uint16_t> energy(n_states);
  {
    std::vector<std::uint64_t> cur(words, 0);
    std::size_t mask = 0;
    energy[0] = 0;
    for (std::size_t t = 1; t < n_states; ++t) {
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(t));
      mask ^= std::size_t{1} << bit;
      std::size_t pc = 0;
      for (std::size_t k = 0; k < words; ++k) {
        cur[k] ^= fsyn[bit][k];
        pc += static_cast<std::size_t>(std::popcount(cur[k]));
      }
      energy[mask] = static_cast<std::uint16_t>(2 * pc);
    }
  }

  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> best(n_states, kInf);
  std::vector<std::uint8_t> parent_bit(n_states, 0xff);
  using Item = std::pair<std::uint16_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  best[0] = 0;
  pq.emplace(0, 0);
  const std::size_t full = n_states - 1;
  while (!pq.empty()) {
    const auto [d, s] = pq.top();
    pq.pop();
    if (d != best[s]) continue;
    if (s == full) break;
    for (std::size_t i = 0; i < w; ++i) {
      if (s >> i & 1) continue;
      const std::size_t t = s | (std::size_t{1} << i);
      const std::uint16_t nd = std::max(d, energy[t]);
      if (nd < best[t]) {
        best[t] = nd;
        parent_bit[t] = static_cast<std::uint8_t>(i);
        pq.emplace(nd, t);
      }
    }
  }

  BarrierResult res;
  res.barrier = best[full];
  res.representative = l;
  std::vector<std::size_t> order;
  for (std::size_t s = full; s != 0; s &= ~(std::size_t{1} << parent_bit[s])) order.push_back(parent_bit[s]);
  std::size_t mask = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    mask |= std::size_t{1} << *it;
    res.witness.steps.push_back({support[*it], l.at(support[*it]), energy[mask]});
  }
  return res;
}

BarrierResult barrier_min_over_class(const StabilizerCode& code, const PauliOperator& l,
                                     std::size_t stabilizer_budget, std::size_t weight_cap) {
  if (stabilizer_budget > kClassBudgetCap)
    throw CapacityError("stabilizer budget " + std::to_string(stabilizer_budget) + " exceeds cap " +
                        std::to_string(kClassBudgetCap));
  // First independent generators, in order.
  std::vector<std::size_t> chosen;
  RowEchelon e(2 * code.n_qubits());
  for (std::size_t j = 0; j < code.n_generators() && chosen.size() < stabilizer_budget; ++j)
    if (e.insert(code.symplectic_matrix().rows[j])) chosen.push_back(j);
  if (chosen.size() < stabilizer_budget)
    throw CapacityError("stabilizer budget exceeds the number of independent generators");

  BarrierResult best;
  bool have = false;
  std::size_t searched = 0, skipped = 0;
  const std::size_t n_reps = std::size_t{1} << chosen.size();
  PauliOperator rep = l;
  for (std::size_t t = 0; t < n_reps; ++t) {
    if (t > 0) rep *= code.generators()[chosen[static_cast<std::size_t>(std::countr_zero(t))]];
    if (rep.weight() > weight_cap || rep.weight() > kBarrierWeightCap) {
      ++skipped;
      continue;
    }
    ++searched;
    BarrierResult r = barrier_for_representative(code, rep, weight_cap);
    if (!have || r.barrier < best.barrier) {
      best = std::move(r);
      have = true;
    }
  }
  if (!have) throw CapacityError("every representative in the searched class exceeds the weight cap");
  best.representatives_searched = searched;
  best.representatives_skipped = skipped;
  best.class_level = true;
  return best;
}

}  // namespace stslab
