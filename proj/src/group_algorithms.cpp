#include "pdslab/group_algorithms.hpp"

namespace pdslab {

std::string to_string(const AbelianType& type) {
  if (type.empty()) return "1";
  std::string s;
  for (const auto& [order, mult] : type) {
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(order) + "^" + std::to_string(mult);
  }
  return s;
}

std::uint64_t type_order(const AbelianType& type) {
  std::uint64_t o = 1;
  for (const auto& [order, mult] : type)
    for (int i = 0; i < mult; ++i) o *= order;
  return o;
}

AbelianType make_type(int twos, int fours) {
  if (twos < 0 || fours < 0) throw ContractError("negative multiplicity in abelian type");
  AbelianType t;
  if (twos > 0) t[2] = twos;
  if (fours > 0) t[4] = fours;
  return t;
}

}  // namespace pdslab
