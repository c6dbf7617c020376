#include "quintforge/error.hpp"

namespace quintforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::undefined_valuation: return "undefined-valuation";
    case Errc::domain: return "domain";
    case Errc::no_representative: return "no-representative";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::pole: return "pole";
    case Errc::degenerate: return "degenerate";
    case Errc::not_a_pair: return "not-a-pair";
    case Errc::not_constructible: return "not-constructible";
    case Errc::not_on_twist: return "not-on-twist";
    case Errc::not_good: return "not-good";
    case Errc::not_squarefree: return "not-squarefree";
    case Errc::unpopulated_table: return "unpopulated-table";
    case Errc::no_affine_image: return "no-affine-image";
    case Errc::no_new_point: return "no-new-point";
    case Errc::off_curve: return "off-curve";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace quintforge
