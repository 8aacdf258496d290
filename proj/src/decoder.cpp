#include "stslab/decoder.hpp"

#include <bit>
#include <deque>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include "stslab/errors.hpp"

namespace stslab {

SectorCode sector_code(const StabilizerCode& code, Sector sector) {
  if (!code.is_css()) throw ValidationError("sector decoding needs a CSS code");
  SectorCode sc;
  sc.sector = sector;
  sc.n = code.n_qubits();
  sc.checks = BinaryMatrix(sc.n);
  sc.stabilizers = BinaryMatrix(sc.n);
  const auto& gens = code.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& g = gens[j];
    if (g.weight() == 0) continue;
    const bool z_type = g.x().none();
    // X errors are seen by Z-type generators.
    const bool detects = (sector == Sector::XErrors) == z_type;
    const BitVec& bits = z_type ? g.z() : g.x();
    if (detects) {
      sc.checks.push_back(bits);
      sc.check_generator.push_back(j);
    } else {
      sc.stabilizers.push_back(bits);
    }
  }
  return sc;
}

CosetDecoder::CosetDecoder(const SectorCode& sc) : sc_(sc), columns_(sc.checks.n_rows()) {
  const BinaryMatrix cols = sc.checks.transpose();
  for (const auto& c : cols.rows) columns_.insert(c);

  RowEchelon span(sc.n);
  for (const auto& s : sc.stabilizers.rows)
    if (span.insert(s)) coset_gens.push_back(s);
  for (const auto& l : gf2_kernel(sc.checks).rows)
    if (span.insert(l)) coset_gens.push_back(l);
  if (coset_gens.size() > kMaxGenerators)
    throw CapacityError("coset decoder would enumerate 2^" + std::to_string(coset_gens.size()) + " candidates");
}

BitVec CosetDecoder::correction(const BitVec& syndrome) {
  const auto combo = columns_.express(syndrome);
  if (!combo) throw ValidationError("syndrome is not reachable by any error");
  BitVec cur(sc_.n);
  for (std::size_t q : *combo) cur.flip(q);
  BitVec best = cur;
  std::size_t best_w = cur.popcount();
  const std::size_t n = std::size_t{1} << coset_gens.size();
  for (std::size_t t = 1; t < n; ++t) {
    cur ^= coset_gens[static_cast<std::size_t>(std::countr_zero(t))];
    const std::size_t w = cur.popcount();
    if (w < best_w) {
      best_w = w;
      best = cur;
    }
  }
  return best;
}

bool MatchingDecoder::applicable(const SectorCode& sc) {
  std::vector<std::size_t> deg(sc.n, 0);
  for (const auto& r : sc.checks.rows)
    for (std::size_t q : r.ones()) ++deg[q];
  for (auto d : deg)
    if (d != 2) return false;
  return true;
}

MatchingDecoder::MatchingDecoder(const SectorCode& sc)
    : n_qubits_(sc.n), n_checks_(sc.checks.n_rows()), edge_ends_(sc.n) {
  if (!applicable(sc)) throw ValidationError("matching decoder needs every qubit in exactly two checks");
  std::vector<std::vector<std::size_t>> incident(n_checks_);
  for (std::size_t c = 0; c < n_checks_; ++c)
    for (std::size_t q : sc.checks.rows[c].ones()) {
      edge_ends_[q].push_back(c);
      incident[c].push_back(q);
    }
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  dist_.assign(n_checks_, std::vector<std::size_t>(n_checks_, kUnreached));
  parent_.assign(n_checks_, std::vector<std::size_t>(n_checks_, kUnreached));
  for (std::size_t s = 0; s < n_checks_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t q : incident[c]) {
        const std::size_t o = edge_ends_[q][0] == c ? edge_ends_[q][1] : edge_ends_[q][0];
        if (d[o] != kUnreached) continue;
        d[o] = d[c] + 1;
        parent_[s][o] = q;
        queue.push_back(o);
      }
    }
  }
}

BitVec MatchingDecoder::correction(const BitVec& syndrome) {
  const auto defects = syndrome.ones();
  if (defects.size() % 2) throw ValidationError("odd number of defects on a boundaryless check graph");
  BitVec out(n_qubits_);
  if (defects.empty()) return out;
  const std::size_t k = defects.size();
  std::vector<std::vector<std::size_t>> cost(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t d = dist_[defects[i]][defects[j]];
      if (d == std::numeric_limits<std::size_t>::max()) throw ValidationError("defects lie in disconnected components");
      cost[i][j] = d;
    }
  const auto mate = min_weight_perfect_matching(cost);
  for (std::size_t i = 0; i < k; ++i) {
    if (mate[i] < i) continue;
    const std::size_t s = defects[i];
    std::size_t t = defects[mate[i]];
    while (t != s) {
      const std::size_t q = parent_[s][t];
      out.flip(q);
      t = edge_ends_[q][0] == t ? edge_ends_[q][1] : edge_ends_[q][0];
    }
  }
  return out;
}

std::vector<std::size_t> min_weight_perfect_matching(const std::vector<std::vector<std::size_t>>& cost) {
  const std::size_t n = cost.size();
  if (n % 2) throw DimensionError("perfect matching needs an even number of nodes");
  std::vector<std::size_t> mate(n);
  if (n == 0) return mate;
  if (n <= kSubsetMatchingNodes) {
    // best[s]: cheapest pairing of the nodes in s, always pairing the lowest node first.
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::size_t> best(full + 1, kInf), choice(full + 1, 0);
    best[0] = 0;
    for (std::size_t s = 1; s <= full; ++s) {
      if (std::popcount(s) % 2) continue;
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(s));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(s >> j & 1)) continue;
        const std::size_t rest = s & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
        if (best[rest] == kInf) continue;
        const std::size_t c = best[rest] + cost[i][j];
        if (c < best[s]) {
          best[s] = c;
          choice[s] = j;
        }
      }
    }
    for (std::size_t s = full; s != 0;) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(s)), j = choice[s];
      mate[i] = j;
      mate[j] = i;
      s &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }
    return mate;
  }
  std::size_t max_cost = 0;
  for (const auto& r : cost)
    for (auto c : r) max_cost = std::max(max_cost, c);
  // On a complete graph with positive weights a maximum-weight matching is perfect, and
  // maximising C − cost then minimises the total cost.
  using EdgeProp = boost::property<boost::edge_weight_t, long>;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, EdgeProp>;
  Graph g(n);
  const long c0 = static_cast<long>(max_cost) + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) boost::add_edge(i, j, EdgeProp(c0 - static_cast<long>(cost[i][j])), g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> m(n);
  boost::maximum_weighted_matching(g, &m[0]);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] == boost::graph_traits<Graph>::null_vertex()) throw std::logic_error("matching left a node unmatched");
    mate[i] = m[i];
  }
  return mate;
}

std::unique_ptr<Decoder> make_decoder(const StabilizerCode& code, Sector sector) {
  const SectorCode sc = sector_code(code, sector);
  const bool matchable = MatchingDecoder::applicable(sc);
  try {
    auto coset = std::make_unique<CosetDecoder>(sc);
    if (!matchable || coset->n_coset_generators() <= CosetDecoder::kPreferredGenerators) return coset;
  } catch (const CapacityError&) {
    if (!matchable) throw;
  }
  return std::make_unique<MatchingDecoder>(sc);
}

}  // namespace stslab
