#include "stslab/pauli.hpp"

#include <bit>

#include "stslab/errors.hpp"

namespace stslab {

PauliOperator::PauliOperator(BitVec x, BitVec z, int phase) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw DimensionError("x and z bit vectors differ in length");
  set_phase(phase);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char p) {
  PauliOperator r(n);
  r.set(q, p);
  return r;
}

PauliOperator PauliOperator::from_symplectic(const BitVec& v) {
  if (v.size() % 2) throw DimensionError("symplectic vector has odd length");
  const std::size_t n = v.size() / 2;
  return PauliOperator(v.slice(0, n), v.slice(n, n), 0);
}

char PauliOperator::at(std::size_t q) const {
  const bool xb = x_.get(q), zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliOperator::set(std::size_t q, char p) {
  if (q >= n_qubits()) throw DimensionError("qubit index out of range");
  switch (p) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true); z_.set(q, false); break;
    case 'Y': x_.set(q, true); z_.set(q, true); break;
    case 'Z': x_.set(q, false); z_.set(q, true); break;
    default: throw std::invalid_argument(std::string("bad Pauli character '") + p + "'");
  }
}

PauliOperator PauliOperator::parse(const std::string& s) {
  std::size_t pos = 0;
  int phase = 0;
  bool neg = false;
  if (s.compare(0, 1, "+") == 0) {
    pos = 1;
  } else if (s.compare(0, 1, "-") == 0) {
    neg = true;
    pos = 1;
  } else if (s.compare(0, 3, "\xE2\x88\x92") == 0) {  // U+2212
    neg = true;
    pos = 3;
  }
  if (pos < s.size() && s[pos] == 'i') {
    phase = 1;
    ++pos;
  }
  if (neg) phase += 2;
  const std::size_t n = s.size() - pos;
  PauliOperator r(n);
  for (std::size_t q = 0; q < n; ++q) r.set(q, s[pos + q]);
  r.set_phase(phase);
  return r;
}

std::string PauliOperator::to_string() const {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  std::string s = prefix[phase_];
  s.reserve(s.size() + n_qubits());
  for (std::size_t q = 0; q < n_qubits(); ++q) s.push_back(at(q));
  return s;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& o) {
  if (o.n_qubits() != n_qubits()) throw DimensionError("Pauli operators act on different qubit counts");
  // Per site, sigma_a sigma_b = i^{+1} for XY, YZ, ZX and i^{-1} for the reversed orders.
  int acc = 0;
  const std::size_t nw = x_.num_words();
  const std::uint64_t* ax = x_.data();
  const std::uint64_t* az = z_.data();
  const std::uint64_t* bx = o.x_.data();
  const std::uint64_t* bz = o.z_.data();
  for (std::size_t i = 0; i < nw; ++i) {
    const std::uint64_t aX = ax[i] & ~az[i], aY = ax[i] & az[i], aZ = ~ax[i] & az[i];
    const std::uint64_t bX = bx[i] & ~bz[i], bY = bx[i] & bz[i], bZ = ~bx[i] & bz[i];
    const std::uint64_t plus = (aX & bY) | (aY & bZ) | (aZ & bX);
    const std::uint64_t minus = (aX & bZ) | (aY & bX) | (aZ & bY);
    acc += std::popcount(plus) - std::popcount(minus);
  }
  x_ ^= o.x_;
  z_ ^= o.z_;
  set_phase(phase_ + o.phase_ + acc);
  return *this;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }

bool symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("Pauli operators act on different qubit counts");
  return a.x().dot(b.z()) ^ a.z().dot(b.x());
}

bool symplectic_product(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size() || a.size() % 2) throw DimensionError("symplectic vectors differ in length");
  const std::size_t n = a.size() / 2;
  bool r = false;
  for (std::size_t q = 0; q < n; ++q) r ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
  return r;
}

std::size_t weight(const PauliOperator& a) { return a.weight(); }

}  // namespace stslab
