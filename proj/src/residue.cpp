#include "quintforge/residue.hpp"

#include "quintforge/error.hpp"

#include <algorithm>
#include <sstream>

namespace quintforge {

bool ResidueClassSet::contains(std::int64_t r) const {
  return std::binary_search(residues.begin(), residues.end(), mod_floor(r, modulus));
}

std::string ResidueClassSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) os << ',';
    os << residues[i];
  }
  return os.str();
}

bool class_admits_squarefree(std::int64_t r, std::int64_t m) {
  r = mod_floor(r, m);
  for (const auto& [p, e] : factor(Integer(static_cast<long>(m)))) {
    if (e < 2) continue;
    const std::int64_t p2 = p.get_si() * p.get_si();
    if (r % p2 == 0) return false;
  }
  return true;
}

ResidueClassSet admissible_classes(std::int64_t m) {
  if (m < 1) throw Error(Errc::domain, "modulus must be positive");
  std::vector<std::int64_t> squares;
  for (const auto& [p, e] : factor(Integer(static_cast<long>(m)))) {
    if (e >= 2) squares.push_back(p.get_si() * p.get_si());
  }
  ResidueClassSet out;
  out.modulus = m;
  for (std::int64_t r = 0; r < m; ++r) {
    bool ok = true;
    for (std::int64_t s : squares) ok = ok && r % s != 0;
    if (ok) out.residues.push_back(r);
  }
  return out;
}

}  // namespace quintforge
