#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stslab/bitvec.hpp"
#include "stslab/decoder.hpp"
#include "stslab/lattice.hpp"
#include "stslab/pauli.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

// log Z(β) for H = −Σ_j S_j. Enumerates the 2^r syndrome sectors of r independent generators;
// uses the closed form when every generator is independent.
double partition_function_exact(const StabilizerCode& code, double beta);
constexpr std::size_t kExactSectorCap = 24;

struct ThermalConfig {
  double T = 1.0;
  double eps = 0.0;
  std::size_t sweeps = 1000;
  std::size_t burn_in = 0;
  std::uint64_t seed = 0;
  std::size_t chains = 1;
  std::size_t threads = 0;       // 0: hardware concurrency
  std::size_t record_every = 1;  // trajectory stride in sweeps
  bool keep_errors = false;      // store the error configuration with every record
};

void check_config(const ThermalConfig& cfg);

struct TraceRecord {
  std::size_t sweep;
  double energy;           // 2·(violated checks) + 2ε·(flipped bias operators)
  double order_parameter;  // mean eigenvalue of the bias operators
};

struct ChainTrajectory {
  std::size_t chain = 0;
  std::vector<TraceRecord> records;
  std::vector<BitVec> errors;  // parallel to records when keep_errors
  std::vector<double> measured;  // order parameter after every sweep past burn-in
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;
  BitVec final_error;
};

// Single-qubit-flip Metropolis in one error sector of a CSS code, with optional bias operators
// of the detecting type. Energies follow H = −Σ S_j − ε Σ_b B_b measured from the ground state.
class CssMetropolis {
 public:
  CssMetropolis(const StabilizerCode& code, Sector sector, const std::vector<PauliOperator>& bias, double T,
                double eps);

  std::size_t n() const { return n_; }
  void reset();
  // One proposal at `site`; `u` in [0,1) decides uphill moves. Returns whether it was accepted.
  bool propose(std::size_t site, double u);
  // Acceptance probability of flipping `site` from the current state.
  double acceptance(std::size_t site) const;
  // n uniformly chosen proposals.
  void sweep(std::mt19937_64& rng);
  // Flip without the Metropolis test.
  void flip(std::size_t site);

  double energy() const;
  double order_parameter() const;
  std::size_t violated_checks() const { return viol_checks_; }
  BitVec error() const;
  // Violated checks, indexed like sector_code(code, sector).checks.
  BitVec syndrome() const;
  std::uint64_t proposed() const { return proposed_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  std::size_t delta_index(std::size_t site) const;

  std::size_t n_;
  double eps_;
  std::vector<std::vector<std::uint32_t>> site_checks_;
  std::vector<std::vector<std::uint32_t>> site_bias_;
  std::vector<std::uint8_t> err_, check_state_, bias_state_;
  std::size_t viol_checks_ = 0, viol_bias_ = 0, n_bias_ = 0;
  int max_c_ = 0, max_b_ = 0;
  std::vector<double> accept_table_;
  std::uint64_t proposed_ = 0, accepted_ = 0;
};

// Distinct translates of ℓ along the listed axes (every axis when empty), in first-seen order.
std::vector<PauliOperator> translation_family(const LatticeLayout& layout, const PauliOperator& l,
                                              const std::vector<std::size_t>& axes = {});

// Sector whose errors a pure-X or pure-Z operator detects.
Sector sector_for(const PauliOperator& l);

// A low-weight pure-Z (XErrors) or pure-X (ZErrors) logical operator: the first logical class
// of that type, greedily reduced by same-type generators.
PauliOperator default_logical(const StabilizerCode& code, Sector sector);

// Runs cfg.chains independent chains from the zero error. Each chain draws from its own
// mt19937_64 stream derived from (seed, chain).
std::vector<ChainTrajectory> sample_gibbs_css(const StabilizerCode& code, Sector sector,
                                              const std::vector<PauliOperator>& bias, const ThermalConfig& cfg);

struct OrderParameterEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::string operator_id;
  std::size_t samples = 0;
};

// Batch means over every chain's post-burn-in measurements.
OrderParameterEstimate estimate_from(const std::vector<ChainTrajectory>& chains, const std::string& id);

OrderParameterEstimate order_parameter(const StabilizerCode& code, const LatticeLayout& layout, const PauliOperator& l,
                                       const std::vector<std::size_t>& axes, const ThermalConfig& cfg);

struct MemoryTimeResult {
  std::vector<std::size_t> failure_times;  // censored trials count at the sweep budget
  std::vector<bool> censored;
  std::string decoder;
  double median = 0.0;
};

// Per trial: zero error, Metropolis at cfg.T with no bias, decode after every sweep; the failure
// time is the first sweep whose corrected residual anticommutes with ℓ. Trial t uses stream
// (seed, t). cfg.chains is ignored.
MemoryTimeResult memory_time(const StabilizerCode& code, const PauliOperator& l, const ThermalConfig& cfg,
                             std::size_t trials);

double median(std::vector<double> xs);

struct Interval {
  double lo = 0.0, hi = 0.0;
};

// Percentile bootstrap interval for the median.
Interval bootstrap_median_ci(const std::vector<double>& xs, double level, std::size_t resamples, std::uint64_t seed);

}  // namespace stslab
