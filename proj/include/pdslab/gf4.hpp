#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdslab/error.hpp"

namespace pdslab {

// GF(4) = {0, 1, w, w+1} with w^2 = w + 1.
// Codes: 0 -> 0, 1 -> 1, w -> 2, w+1 -> 3. Addition is XOR of codes.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(std::uint8_t code) : code_(static_cast<std::uint8_t>(code & 3u)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }
  static constexpr GF4 omega_sq() { return GF4(3); }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }
  constexpr bool in_prime_field() const { return code_ < 2; }

  constexpr GF4 square() const { return GF4(kSquare[code_]); }
  /// a + a^2, always 0 or 1.
  constexpr GF4 trace() const { return GF4(kTrace[code_]); }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.code_ ^ b.code_); }
  // characteristic 2
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
  friend constexpr GF4 operator*(GF4 a, GF4 b) { return GF4(kMul[a.code_][b.code_]); }
  constexpr GF4& operator+=(GF4 b) { return *this = *this + b; }
  constexpr GF4& operator*=(GF4 b) { return *this = *this * b; }
  friend constexpr bool operator==(GF4, GF4) = default;

  char to_char() const { return kChars[code_]; }
  static GF4 from_char(char c);

  static constexpr std::array<GF4, 4> all() { return {GF4(0), GF4(1), GF4(2), GF4(3)}; }

  // Lookup tables, indexed by code.
  static constexpr std::uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  static constexpr std::uint8_t kSquare[4] = {0, 1, 3, 2};
  static constexpr std::uint8_t kTrace[4] = {0, 0, 1, 1};
  static constexpr char kChars[4] = {'0', '1', 'w', 'W'};

 private:
  std::uint8_t code_ = 0;
};

inline GF4 gf4_add(GF4 a, GF4 b) { return a + b; }
inline GF4 gf4_mul(GF4 a, GF4 b) { return a * b; }
inline GF4 gf4_trace(GF4 a) { return a.trace(); }

/// A vector over GF(4), used for form coefficients and map parameters.
using GF4Vector = std::vector<GF4>;

/// Parses a string over {0,1,w,W}.
GF4Vector parse_gf4_vector(std::string_view text);
std::string format_gf4_vector(const GF4Vector& v);

/// Parses a string over {0,1}; rejects w/W.
GF4Vector parse_gf2_vector(std::string_view text);

/// Hamming weight.
int weight(const GF4Vector& v);
/// Componentwise product u*v.
GF4Vector hadamard(const GF4Vector& u, const GF4Vector& v);
GF4Vector operator+(const GF4Vector& u, const GF4Vector& v);
/// Componentwise trace.
GF4Vector trace(const GF4Vector& v);
bool is_zero(const GF4Vector& v);
bool in_prime_field(const GF4Vector& v);
GF4Vector ones(std::size_t n);

}  // namespace pdslab
