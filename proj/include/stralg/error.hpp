#pragma once

#include <stdexcept>
#include <string>

namespace stralg {

enum class Errc {
  invalid_characteristic,
  invalid_precision,
  ring_mismatch,
  not_a_unit,
  trivial_path_has_no_arrows,
  syntax_error,
  unknown_name,
  dimension_mismatch,
  zero_element,
  quiver_mismatch,
  degree_overflow,
  not_finite_at_precision,
  empty_quiver,
  inadmissible_path,
  not_a_string_algebra,
  incomplete_assignment,
  generator_not_in_kernel,
  rank_deficit,
  unsupported_pattern,
  bad_input,
};

const char* errc_name(Errc c);

/// Library-wide exception. `pos` carries a character offset for parser
/// diagnostics and is -1 otherwise.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg, long pos = -1)
      : std::runtime_error(std::move(msg)), code_(code), pos_(pos) {}

  Errc code() const { return code_; }
  long pos() const { return pos_; }

private:
  Errc code_;
  long pos_;
};

} // namespace stralg
