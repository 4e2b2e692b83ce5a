#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/freealg.hpp"
#include "stralg/orders.hpp"

namespace stralg {

/// A parsed presentation file: ring, quiver and ideal, plus the optional
/// order/hom payload consumed by the order checks.
struct PresentationFile {
  Presentation pres;
  std::optional<OrderPattern> order;
  std::optional<HomAssignment> hom;
  std::vector<std::string> warnings;
};

/// Loads the TOML-compatible presentation format:
///   [ring]   kind = "padic"|"series"|"field", p/q = int, precision = int
///   [quiver] vertices = [..], arrows = [{name=, from=, to=}, ..]
///   [ideal]  generators = ["a*a", ..]
///   [order]  blocks = [..] (optional exponents/congruences)
///   [hom]    e_v / arrow = [block matrices with "pi"-literal entries]
/// An optional top-level `name` labels the presentation.
PresentationFile load_presentation(const std::string& text,
                                   const std::string& fallback_name);

PresentationFile load_presentation_file(const std::string& path);

/// Re-renders a loaded file in canonical key order (used by --dump).
std::string render_presentation_file(const std::string& text);

/// Overrides the [ring] precision, keeping everything else.
PresentationFile load_with_precision(const std::string& text,
                                     const std::string& fallback_name,
                                     unsigned precision);

} // namespace stralg
