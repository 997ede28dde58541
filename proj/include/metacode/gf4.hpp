// Copyright 2026 The metacode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arithmetic over GF(4) = {0, 1, w, W} where w^2 = w + 1 = W.
//
// An element is stored as the bit pair (a, b) meaning a*w + b:
//   0 -> (0,0)   1 -> (0,1)   w -> (1,0)   W -> (1,1)
// so that addition is XOR of pairs. Vectors keep the a-bits and the b-bits in
// two parallel bit planes of little-endian 64-bit words.

#ifndef METACODE_GF4_HPP
#define METACODE_GF4_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metacode {

class GF4Element {
 public:
  constexpr GF4Element() = default;
  constexpr GF4Element(bool omega_coeff, bool one_coeff)
      : bits_(static_cast<std::uint8_t>((omega_coeff ? 2 : 0) | (one_coeff ? 1 : 0))) {}

  static constexpr GF4Element zero() { return {false, false}; }
  static constexpr GF4Element one() { return {false, true}; }
  static constexpr GF4Element omega() { return {true, false}; }
  static constexpr GF4Element omega_bar() { return {true, true}; }

  constexpr bool a() const { return (bits_ & 2) != 0; }
  constexpr bool b() const { return (bits_ & 1) != 0; }
  constexpr bool is_zero() const { return bits_ == 0; }

  /// x^2. Frobenius: fixes 0 and 1, swaps w and W.
  constexpr GF4Element square() const { return {a(), a() != b()}; }

  constexpr GF4Element operator+(GF4Element o) const { return {a() != o.a(), b() != o.b()}; }
  constexpr bool operator==(const GF4Element&) const = default;

  /// One of '0', '1', 'w', 'W'.
  constexpr char symbol() const { return "01wW"[bits_]; }

  static GF4Element from_symbol(char c) {
    switch (c) {
      case '0': return zero();
      case '1': return one();
      case 'w': return omega();
      case 'W': return omega_bar();
      default: throw std::invalid_argument(std::string("not a GF(4) symbol: '") + c + "'");
    }
  }

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr GF4Element scalar_conj_square(GF4Element x) { return x.square(); }

inline constexpr std::size_t words_for_bits(std::size_t n) { return (n + 63) / 64; }

class GF4Vector {
 public:
  GF4Vector() = default;

  /// Zero vector of length n.
  explicit GF4Vector(std::size_t n) : n_(n), a_(words_for_bits(n), 0), b_(words_for_bits(n), 0) {}

  /// From explicit planes. Bits at positions >= n must be clear.
  GF4Vector(std::size_t n, std::vector<std::uint64_t> plane_a, std::vector<std::uint64_t> plane_b)
      : n_(n), a_(std::move(plane_a)), b_(std::move(plane_b)) {
    if (a_.size() != words_for_bits(n) || b_.size() != words_for_bits(n)) {
      throw std::invalid_argument("GF4Vector: plane word count does not match length");
    }
    if (n % 64 != 0 && !a_.empty()) {
      const std::uint64_t tail = ~std::uint64_t{0} << (n % 64);
      if ((a_.back() & tail) != 0 || (b_.back() & tail) != 0) {
        throw std::invalid_argument("GF4Vector: bits set beyond the vector length");
      }
    }
  }

  /// Parses symbols {0,1,w,W}; whitespace is ignored.
  static GF4Vector from_symbols(std::string_view text) {
    std::vector<GF4Element> elems;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
      elems.push_back(GF4Element::from_symbol(c));
    }
    GF4Vector v(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) v.set(i, elems[i]);
    return v;
  }

  std::size_t size() const { return n_; }
  std::span<const std::uint64_t> plane_a() const { return a_; }
  std::span<const std::uint64_t> plane_b() const { return b_; }

  GF4Element operator[](std::size_t i) const {
    return {((a_[i / 64] >> (i % 64)) & 1) != 0, ((b_[i / 64] >> (i % 64)) & 1) != 0};
  }

  // Only used while a vector is being assembled; values handed out are not mutated afterwards.
  void set(std::size_t i, GF4Element x) {
    if (i >= n_) throw std::out_of_range("GF4Vector::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    a_[i / 64] = x.a() ? (a_[i / 64] | bit) : (a_[i / 64] & ~bit);
    b_[i / 64] = x.b() ? (b_[i / 64] | bit) : (b_[i / 64] & ~bit);
  }

  std::string to_symbols(char separator = '\0') const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (separator != '\0' && i != 0) out.push_back(separator);
      out.push_back((*this)[i].symbol());
    }
    return out;
  }

  bool operator==(const GF4Vector&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
};

namespace detail {
inline void require_same_length(const GF4Vector& u, const GF4Vector& v, const char* op) {
  if (u.size() != v.size()) {
    throw std::invalid_argument(std::string(op) + ": length mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  }
}
}  // namespace detail

inline GF4Vector add(const GF4Vector& u, const GF4Vector& v) {
  detail::require_same_length(u, v, "add");
  std::vector<std::uint64_t> a(u.plane_a().begin(), u.plane_a().end());
  std::vector<std::uint64_t> b(u.plane_b().begin(), u.plane_b().end());
  for (std::size_t w = 0; w < a.size(); ++w) {
    a[w] ^= v.plane_a()[w];
    b[w] ^= v.plane_b()[w];
  }
  return GF4Vector(u.size(), std::move(a), std::move(b));
}

inline GF4Vector operator+(const GF4Vector& u, const GF4Vector& v) { return add(u, v); }

inline std::size_t weight(const GF4Vector& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.plane_a().size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(v.plane_a()[i] | v.plane_b()[i]));
  }
  return w;
}

inline std::size_t distance(const GF4Vector& u, const GF4Vector& v) {
  detail::require_same_length(u, v, "distance");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.plane_a().size(); ++i) {
    d += static_cast<std::size_t>(
        std::popcount((u.plane_a()[i] ^ v.plane_a()[i]) | (u.plane_b()[i] ^ v.plane_b()[i])));
  }
  return d;
}

/// Trace-Hermitian form sum_j (u_j v_j^2 + u_j^2 v_j), always 0 or 1.
/// Per coordinate this is a_u*b_v + b_u*a_v, so the sum is a parity.
inline bool trace_hermitian_ip(const GF4Vector& u, const GF4Vector& v) {
  detail::require_same_length(u, v, "trace_hermitian_ip");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.plane_a().size(); ++i) {
    acc ^= (u.plane_a()[i] & v.plane_b()[i]) ^ (u.plane_b()[i] & v.plane_a()[i]);
  }
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace metacode

#endif  // METACODE_GF4_HPP
