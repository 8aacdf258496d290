#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stslab {

// Fixed-length packed bit vector. Bits past size() in the last word are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t num_words() const { return w_.size(); }
  const std::uint64_t* data() const { return w_.data(); }
  std::uint64_t* data() { return w_.data(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Inner product over GF(2).
  bool dot(const BitVec& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
  }

  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Bits [begin, begin+len) as a new vector.
  BitVec slice(std::size_t begin, std::size_t len) const {
    BitVec r(len);
    for (std::size_t i = 0; i < len; ++i)
      if (get(begin + i)) r.set(i);
    return r;
  }

  static BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec r(a.n_ + b.n_);
    for (std::size_t i : a.ones()) r.set(i);
    for (std::size_t i : b.ones()) r.set(a.n_ + i);
    return r;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
  }
  static BitVec from_string(const std::string& s) {
    BitVec r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') r.set(i);
      else if (s[i] != '0') throw std::invalid_argument("bit string must contain only 0/1");
    }
    return r;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVec length mismatch");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace stslab
