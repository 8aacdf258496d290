#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "stslab/bitvec.hpp"
#include "stslab/gf2.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

// Which single-qubit errors a CSS sampler flips: X errors are detected by Z-type generators
// and vice versa.
enum class Sector { XErrors, ZErrors };

// Restriction of a CSS code to one error sector: checks are rows over qubits.
struct SectorCode {
  Sector sector = Sector::XErrors;
  std::size_t n = 0;
  BinaryMatrix checks;       // detecting generators, rows over qubits
  BinaryMatrix stabilizers;  // same-type generators (errors in their span are harmless)
  std::vector<std::size_t> check_generator;  // generator index of each check row
};

SectorCode sector_code(const StabilizerCode& code, Sector sector);

// Minimal-weight correction from a syndrome. Implementations see only the syndrome.
class Decoder {
 public:
  virtual ~Decoder() = default;
  virtual BitVec correction(const BitVec& syndrome) = 0;
  virtual std::string name() const = 0;
};

// Enumerates the coset of a canonical particular solution over all same-type logical classes
// and stabilizers. Feasible when k_sector + rank(stabilizers) is small.
class CosetDecoder : public Decoder {
 public:
  explicit CosetDecoder(const SectorCode& sc);
  BitVec correction(const BitVec& syndrome) override;
  std::string name() const override { return "coset"; }
  std::size_t n_coset_generators() const { return coset_gens.size(); }

  static constexpr std::size_t kMaxGenerators = 20;
  // make_decoder prefers matching above this many coset generators.
  static constexpr std::size_t kPreferredGenerators = 10;

 private:
  SectorCode sc_;
  RowEchelon columns_;            // per-qubit syndromes, for particular solutions
  std::vector<BitVec> coset_gens;  // logical representatives then stabilizers
};

// Minimum-weight perfect matching on the check graph. Needs every qubit to touch exactly two
// checks of the sector.
class MatchingDecoder : public Decoder {
 public:
  explicit MatchingDecoder(const SectorCode& sc);
  BitVec correction(const BitVec& syndrome) override;
  std::string name() const override { return "matching"; }

  static bool applicable(const SectorCode& sc);

 private:
  std::size_t n_qubits_;
  std::size_t n_checks_;
  std::vector<std::vector<std::size_t>> dist_;    // check-to-check graph distance
  std::vector<std::vector<std::size_t>> parent_;  // BFS tree edge (qubit) towards the source
  std::vector<std::vector<std::size_t>> edge_ends_;  // qubit -> its two checks
};

// Coset decoder when its enumeration is cheap, otherwise matching if the check graph allows
// it, otherwise the coset decoder up to its hard cap.
std::unique_ptr<Decoder> make_decoder(const StabilizerCode& code, Sector sector);

// Minimum-weight perfect matching of an even number of nodes given a symmetric cost matrix.
// Returns mate[i] for every node. Up to kSubsetMatchingNodes nodes are solved by subset dynamic
// programming; larger inputs go to Boost's blossom implementation, which leaks a little memory per
// call in Boost 1.74 (shared_ptr cycles between nested blossoms).
constexpr std::size_t kSubsetMatchingNodes = 14;
std::vector<std::size_t> min_weight_perfect_matching(const std::vector<std::vector<std::size_t>>& cost);

}  // namespace stslab
