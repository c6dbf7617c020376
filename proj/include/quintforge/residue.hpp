#pragma once

#include "quintforge/exact_arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quintforge {

// A set of residues modulo `modulus`, kept sorted and in [0, modulus).
struct ResidueClassSet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;

  std::size_t size() const { return residues.size(); }
  bool contains(std::int64_t r) const;
  std::string to_string() const;  // comma-separated residues
};

// The class r mod m contains squarefree integers
// iff no p^2 dividing m also divides r.
bool class_admits_squarefree(std::int64_t r, std::int64_t m);

// Residues mod m containing at least one squarefree integer (of either sign;
// the condition does not depend on sign).
ResidueClassSet admissible_classes(std::int64_t m);

}  // namespace quintforge
