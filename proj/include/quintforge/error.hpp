#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quintforge {

enum class Errc {
  undefined_valuation,
  domain,
  no_representative,
  division_by_zero,
  pole,
  degenerate,
  not_a_pair,
  not_constructible,
  not_on_twist,
  not_good,
  not_squarefree,
  unpopulated_table,
  no_affine_image,
  no_new_point,
  off_curve,
  parse,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can branch on the kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quintforge
