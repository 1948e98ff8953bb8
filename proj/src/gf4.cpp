#include "pdslab/gf4.hpp"

#include <algorithm>

namespace pdslab {

GF4 GF4::from_char(char c) {
  switch (c) {
    case '0': return GF4(0);
    case '1': return GF4(1);
    case 'w': return GF4(2);
    case 'W': return GF4(3);
    default: throw InputError(std::string("invalid GF(4) character '") + c + "'");
  }
}

GF4Vector parse_gf4_vector(std::string_view text) {
  GF4Vector out;
  out.reserve(text.size());
  for (char c : text) out.push_back(GF4::from_char(c));
  return out;
}

std::string format_gf4_vector(const GF4Vector& v) {
  std::string s;
  s.reserve(v.size());
  for (GF4 x : v) s.push_back(x.to_char());
  return s;
}

GF4Vector parse_gf2_vector(std::string_view text) {
  GF4Vector out = parse_gf4_vector(text);
  if (!in_prime_field(out)) throw InputError("expected a binary vector, got '" + std::string(text) + "'");
  return out;
}

int weight(const GF4Vector& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](GF4 x) { return !x.is_zero(); }));
}

GF4Vector hadamard(const GF4Vector& u, const GF4Vector& v) {
  if (u.size() != v.size()) throw InputError("vector length mismatch");
  GF4Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * v[i];
  return out;
}

GF4Vector operator+(const GF4Vector& u, const GF4Vector& v) {
  if (u.size() != v.size()) throw InputError("vector length mismatch");
  GF4Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

GF4Vector trace(const GF4Vector& v) {
  GF4Vector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](GF4 x) { return x.trace(); });
  return out;
}

bool is_zero(const GF4Vector& v) {
  return std::all_of(v.begin(), v.end(), [](GF4 x) { return x.is_zero(); });
}

bool in_prime_field(const GF4Vector& v) {
  return std::all_of(v.begin(), v.end(), [](GF4 x) { return x.in_prime_field(); });
}

GF4Vector ones(std::size_t n) { return GF4Vector(n, GF4::one()); }

}  // namespace pdslab
