#include "stslab/thermal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

#include "stslab/errors.hpp"
#include "stslab/gf2.hpp"

namespace stslab {

namespace {

double log_2cosh(double beta) {
  const double a = std::fabs(beta);
  return a + std::log1p(std::exp(-2.0 * a));
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), salt};
  return std::mt19937_64(seq);
}

std::size_t resolve_threads(std::size_t requested, std::size_t jobs) {
  std::size_t t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(t, jobs));
}

// Runs job(i) for i < n_jobs on up to `threads` workers; job state is created per worker.
template <class MakeState, class Job>
void parallel_for(std::size_t n_jobs, std::size_t threads, MakeState make_state, Job job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      auto state = make_state();
      for (std::size_t i = next++; i < n_jobs; i = next++) job(state, i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_jobs;
    }
  };
  const std::size_t t = resolve_threads(threads, n_jobs);
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

double partition_function_exact(const StabilizerCode& code, double beta) {
  require_valid(code);
  const std::size_t n = code.n_qubits();
  const std::size_t m = code.n_generators();
  const auto& rows = code.symplectic_matrix().rows;
  RowEchelon e(2 * n);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> basis_pos(m, kNone);
  std::size_t r = 0;
  for (std::size_t j = 0; j < m; ++j)
    if (e.insert(rows[j])) basis_pos[j] = r++;
  if (r == m) return static_cast<double>(n - m) * std::log(2.0) + static_cast<double>(m) * log_2cosh(beta);
  if (r > kExactSectorCap)
    throw CapacityError("exact partition function needs 2^" + std::to_string(r) + " syndrome sectors");

  // Generator j's eigenvalue in sector σ is (−1)^{|mask_j ∧ σ|}.
  std::vector<std::vector<std::size_t>> touched(r);
  for (std::size_t j = 0; j < m; ++j) {
    if (basis_pos[j] != kNone) {
      touched[basis_pos[j]].push_back(j);
      continue;
    }
    const auto combo = e.express(rows[j]);
    for (std::size_t idx : *combo) touched[basis_pos[idx]].push_back(j);
  }
  std::vector<std::int8_t> sign(m, 1);
  long total = static_cast<long>(m);
  std::vector<std::uint64_t> hist(2 * m + 1, 0);
  hist[static_cast<std::size_t>(total) + m] = 1;
  const std::uint64_t n_sectors = std::uint64_t{1} << r;
  for (std::uint64_t t = 1; t < n_sectors; ++t) {
    const std::size_t b = static_cast<std::size_t>(std::countr_zero(t));
    for (std::size_t j : touched[b]) {
      total -= 2 * sign[j];
      sign[j] = static_cast<std::int8_t>(-sign[j]);
    }
    ++hist[static_cast<std::size_t>(total + static_cast<long>(m))];
  }
  long double top = -std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < hist.size(); ++i)
    if (hist[i]) top = std::max(top, std::log(static_cast<long double>(hist[i])) +
                                         static_cast<long double>(beta) * (static_cast<long>(i) - static_cast<long>(m)));
  long double acc = 0;
  for (std::size_t i = 0; i < hist.size(); ++i)
    if (hist[i])
      acc += std::exp(std::log(static_cast<long double>(hist[i])) +
                      static_cast<long double>(beta) * (static_cast<long>(i) - static_cast<long>(m)) - top);
  return static_cast<double>(static_cast<long double>(n - r) * std::log(2.0L) + top + std::log(acc));
}

void check_config(const ThermalConfig& cfg) {
  if (!(cfg.T > 0.0) || !std::isfinite(cfg.T)) throw ValidationError("temperature must be positive");
  if (!(cfg.eps >= 0.0) || !std::isfinite(cfg.eps)) throw ValidationError("bias must be non-negative");
  if (cfg.chains == 0) throw ValidationError("need at least one chain");
  if (cfg.record_every == 0) throw ValidationError("record stride must be positive");
}

CssMetropolis::CssMetropolis(const StabilizerCode& code, Sector sector, const std::vector<PauliOperator>& bias,
                             double T, double eps)
    : n_(code.n_qubits()), eps_(eps), site_checks_(n_), site_bias_(n_), err_(n_, 0) {
  if (!(T > 0.0)) throw ValidationError("temperature must be positive");
  const SectorCode sc = sector_code(code, sector);
  for (std::size_t c = 0; c < sc.checks.n_rows(); ++c)
    for (std::size_t q : sc.checks.rows[c].ones()) site_checks_[q].push_back(static_cast<std::uint32_t>(c));
  check_state_.assign(sc.checks.n_rows(), 0);
  for (std::size_t b = 0; b < bias.size(); ++b) {
    const auto& op = bias[b];
    if (op.n_qubits() != n_) throw DimensionError("bias operator does not match code size");
    if (sector_for(op) != sector) throw ValidationError("bias operator is not detected by this error sector");
    const BitVec& bits = sector == Sector::XErrors ? op.z() : op.x();
    for (std::size_t q : bits.ones()) site_bias_[q].push_back(static_cast<std::uint32_t>(b));
  }
  n_bias_ = bias.size();
  bias_state_.assign(n_bias_, 0);
  for (std::size_t q = 0; q < n_; ++q) {
    max_c_ = std::max(max_c_, static_cast<int>(site_checks_[q].size()));
    max_b_ = std::max(max_b_, static_cast<int>(site_bias_[q].size()));
  }
  const double beta = 1.0 / T;
  accept_table_.resize(static_cast<std::size_t>((2 * max_c_ + 1) * (2 * max_b_ + 1)));
  for (int dv = -max_c_; dv <= max_c_; ++dv)
    for (int db = -max_b_; db <= max_b_; ++db) {
      const double de = 2.0 * dv + 2.0 * eps * db;
      accept_table_[static_cast<std::size_t>((dv + max_c_) * (2 * max_b_ + 1) + db + max_b_)] =
          de <= 0.0 ? 1.0 : std::exp(-beta * de);
    }
}

void CssMetropolis::reset() {
  std::fill(err_.begin(), err_.end(), 0);
  std::fill(check_state_.begin(), check_state_.end(), 0);
  std::fill(bias_state_.begin(), bias_state_.end(), 0);
  viol_checks_ = viol_bias_ = 0;
  proposed_ = accepted_ = 0;
}

std::size_t CssMetropolis::delta_index(std::size_t site) const {
  int dv = 0, db = 0;
  for (auto c : site_checks_[site]) dv += check_state_[c] ? -1 : 1;
  for (auto b : site_bias_[site]) db += bias_state_[b] ? -1 : 1;
  return static_cast<std::size_t>((dv + max_c_) * (2 * max_b_ + 1) + db + max_b_);
}

double CssMetropolis::acceptance(std::size_t site) const { return accept_table_[delta_index(site)]; }

void CssMetropolis::flip(std::size_t site) {
  err_[site] ^= 1;
  for (auto c : site_checks_[site]) {
    check_state_[c] ^= 1;
    if (check_state_[c]) ++viol_checks_; else --viol_checks_;
  }
  for (auto b : site_bias_[site]) {
    bias_state_[b] ^= 1;
    if (bias_state_[b]) ++viol_bias_; else --viol_bias_;
  }
}

bool CssMetropolis::propose(std::size_t site, double u) {
  ++proposed_;
  const double p = accept_table_[delta_index(site)];
  if (p >= 1.0 || u < p) {
    flip(site);
    ++accepted_;
    return true;
  }
  return false;
}

void CssMetropolis::sweep(std::mt19937_64& rng) {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t site = uniform_index(rng, n_);
    ++proposed_;
    const double p = accept_table_[delta_index(site)];
    if (p >= 1.0 || uniform01(rng) < p) {
      flip(site);
      ++accepted_;
    }
  }
}

double CssMetropolis::energy() const {
  return 2.0 * static_cast<double>(viol_checks_) + 2.0 * eps_ * static_cast<double>(viol_bias_);
}

double CssMetropolis::order_parameter() const {
  if (n_bias_ == 0) return 0.0;
  return (static_cast<double>(n_bias_) - 2.0 * static_cast<double>(viol_bias_)) / static_cast<double>(n_bias_);
}

BitVec CssMetropolis::error() const {
  BitVec e(n_);
  for (std::size_t q = 0; q < n_; ++q)
    if (err_[q]) e.set(q);
  return e;
}

BitVec CssMetropolis::syndrome() const {
  BitVec s(check_state_.size());
  for (std::size_t c = 0; c < check_state_.size(); ++c)
    if (check_state_[c]) s.set(c);
  return s;
}

std::vector<PauliOperator> translation_family(const LatticeLayout& layout, const PauliOperator& l,
                                              const std::vector<std::size_t>& axes_in) {
  std::vector<std::size_t> axes = axes_in;
  if (axes.empty())
    for (std::size_t a = 0; a < layout.D(); ++a) axes.push_back(a);
  for (auto a : axes)
    if (a >= layout.D()) throw DimensionError("translation axis out of range");
  std::vector<PauliOperator> out{l};
  std::unordered_set<BitVec, BitVecHash> seen{l.symplectic()};
  for (auto a : axes) {
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t s = 1; s < layout.n()[a]; ++s) {
        PauliOperator t = translate_operator(layout, out[i], a, static_cast<long>(s));
        if (seen.insert(t.symplectic()).second) out.push_back(std::move(t));
      }
  }
  return out;
}

Sector sector_for(const PauliOperator& l) {
  if (l.x().none() && l.z().any()) return Sector::XErrors;
  if (l.z().none() && l.x().any()) return Sector::ZErrors;
  throw ValidationError("operator must be a non-identity pure-X or pure-Z Pauli");
}

PauliOperator default_logical(const StabilizerCode& code, Sector sector) {
  // Z-type logicals are Z vectors orthogonal to every X-type generator, and dually.
  const SectorCode other = sector_code(code, sector == Sector::XErrors ? Sector::ZErrors : Sector::XErrors);
  RowEchelon span(code.n_qubits());
  for (const auto& s : other.stabilizers.rows) span.insert(s);
  std::optional<BitVec> found;
  for (const auto& v : gf2_kernel(other.checks).rows)
    if (!span.contains(v)) {
      found = v;
      break;
    }
  if (!found) throw ValidationError("code has no logical operator of the requested type");
  BitVec best = *found;
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& s : other.stabilizers.rows) {
      BitVec t = best ^ s;
      if (t.popcount() < best.popcount()) {
        best = std::move(t);
        improved = true;
      }
    }
  }
  const BitVec zero(code.n_qubits());
  return sector == Sector::XErrors ? PauliOperator(zero, best, 0) : PauliOperator(best, zero, 0);
}

std::vector<ChainTrajectory> sample_gibbs_css(const StabilizerCode& code, Sector sector,
                                              const std::vector<PauliOperator>& bias, const ThermalConfig& cfg) {
  check_config(cfg);
  const CssMetropolis proto(code, sector, bias, cfg.T, cfg.eps);
  std::vector<ChainTrajectory> out(cfg.chains);
  parallel_for(
      cfg.chains, cfg.threads, [&] { return proto; },
      [&](CssMetropolis& mc, std::size_t chain) {
        mc.reset();
        auto rng = stream(cfg.seed, chain, 0x6368);
        ChainTrajectory tr;
        tr.chain = chain;
        if (cfg.sweeps > cfg.burn_in) tr.measured.reserve(cfg.sweeps - cfg.burn_in);
        for (std::size_t s = 1; s <= cfg.sweeps; ++s) {
          mc.sweep(rng);
          if (s > cfg.burn_in) tr.measured.push_back(mc.order_parameter());
          if (s % cfg.record_every == 0) {
            tr.records.push_back({s, mc.energy(), mc.order_parameter()});
            if (cfg.keep_errors) tr.errors.push_back(mc.error());
          }
        }
        tr.proposed = mc.proposed();
        tr.accepted = mc.accepted();
        tr.final_error = mc.error();
        out[chain] = std::move(tr);
      });
  return out;
}

OrderParameterEstimate estimate_from(const std::vector<ChainTrajectory>& chains, const std::string& id) {
  OrderParameterEstimate est;
  est.operator_id = id;
  long double sum = 0;
  std::vector<double> batches;
  for (const auto& c : chains) {
    const auto& xs = c.measured;
    for (double x : xs) sum += x;
    est.samples += xs.size();
    if (xs.empty()) continue;
    const std::size_t b = std::max<std::size_t>(1, xs.size() / 20);
    for (std::size_t start = 0; start + b <= xs.size(); start += b) {
      long double s = 0;
      for (std::size_t i = start; i < start + b; ++i) s += xs[i];
      batches.push_back(static_cast<double>(s / b));
    }
  }
  if (est.samples == 0) throw ValidationError("no post-burn-in samples");
  est.mean = static_cast<double>(sum / est.samples);
  if (batches.size() >= 2) {
    long double bm = 0;
    for (double x : batches) bm += x;
    bm /= batches.size();
    long double var = 0;
    for (double x : batches) var += (x - bm) * (x - bm);
    var /= (batches.size() - 1);
    est.stderr_ = static_cast<double>(std::sqrt(var / batches.size()));
  }
  return est;
}

OrderParameterEstimate order_parameter(const StabilizerCode& code, const LatticeLayout& layout, const PauliOperator& l,
                                       const std::vector<std::size_t>& axes, const ThermalConfig& cfg) {
  if (!code.is_logical(l)) throw ValidationError("order parameter needs a logical operator");
  const auto family = translation_family(layout, l, axes);
  const auto chains = sample_gibbs_css(code, sector_for(l), family, cfg);
  return estimate_from(chains, l.to_string());
}

MemoryTimeResult memory_time(const StabilizerCode& code, const PauliOperator& l, const ThermalConfig& cfg,
                             std::size_t trials) {
  check_config(cfg);
  if (trials == 0) throw ValidationError("need at least one trial");
  if (!code.is_logical(l)) throw ValidationError("memory time needs a logical operator");
  const Sector sector = sector_for(l);
  const BitVec& lbits = sector == Sector::XErrors ? l.z() : l.x();
  const CssMetropolis proto(code, sector, {}, cfg.T, 0.0);

  MemoryTimeResult res;
  res.decoder = make_decoder(code, sector)->name();
  res.failure_times.assign(trials, cfg.sweeps);
  res.censored.assign(trials, true);
  struct State {
    CssMetropolis mc;
    std::unique_ptr<Decoder> dec;
  };
  parallel_for(
      trials, cfg.threads, [&] { return State{proto, make_decoder(code, sector)}; },
      [&](State& st, std::size_t trial) {
        st.mc.reset();
        auto rng = stream(cfg.seed, trial, 0x6d74);
        for (std::size_t s = 1; s <= cfg.sweeps; ++s) {
          st.mc.sweep(rng);
          BitVec residual = st.mc.error();
          residual ^= st.dec->correction(st.mc.syndrome());
          if (residual.dot(lbits)) {
            res.failure_times[trial] = s;
            res.censored[trial] = false;
            return;
          }
        }
      });
  std::vector<double> xs(res.failure_times.begin(), res.failure_times.end());
  res.median = median(xs);
  return res;
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw ValidationError("median of an empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

Interval bootstrap_median_ci(const std::vector<double>& xs, double level, std::size_t resamples, std::uint64_t seed) {
  if (xs.empty()) throw ValidationError("bootstrap of an empty sample");
  if (!(level > 0.0 && level < 1.0)) throw ValidationError("confidence level must lie in (0, 1)");
  if (resamples == 0) throw ValidationError("need at least one resample");
  std::mt19937_64 rng(seed);
  std::vector<double> meds(resamples), buf(xs.size());
  for (auto& m : meds) {
    for (auto& b : buf) b = xs[uniform_index(rng, xs.size())];
    m = median(buf);
  }
  std::sort(meds.begin(), meds.end());
  const double tail = (1.0 - level) / 2.0;
  const auto at = [&](double q) {
    const double pos = q * static_cast<double>(resamples - 1);
    return meds[static_cast<std::size_t>(std::llround(pos))];
  };
  return {at(tail), at(1.0 - tail)};
}

}  // namespace stslab
