#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stralg/chainring.hpp"
#include "stralg/quiver.hpp"

namespace stralg {

/// A finitely supported R-linear combination of paths of one quiver.
/// No zero coefficients are stored; equality is support equality.
class AlgElem {
public:
  AlgElem(ChainRing ring, QuiverPtr quiver)
      : ring_(std::move(ring)), quiver_(std::move(quiver)) {}

  const ChainRing& ring() const { return ring_; }
  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const std::map<Path, uint64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  uint64_t coeff(const Path& p) const {
    auto it = support_.find(p);
    return it == support_.end() ? 0 : it->second;
  }

  /// Adds c*p in place.
  void accumulate(const Path& p, uint64_t c);

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem scaled(uint64_t c) const;
  /// Bilinear product; incomposable path products contribute zero.
  AlgElem operator*(const AlgElem& o) const;

  bool operator==(const AlgElem& o) const { return support_ == o.support_; }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  /// (min, max) path length over the support; throws ZeroElement on 0.
  std::pair<int, int> degree_window() const;

  /// All coefficients have valuation >= 1 (lies in mQ).
  bool in_radical_coefficients() const;

  std::string str() const;
  /// Grammar-conformant rendering with parse(render(x)) == x.
  std::string render() const;

private:
  void check_compatible(const AlgElem& o) const;

  ChainRing ring_;
  QuiverPtr quiver_;
  std::map<Path, uint64_t> support_;
};

AlgElem elem_zero(const ChainRing& R, const QuiverPtr& Q);
AlgElem elem_path(const ChainRing& R, const QuiverPtr& Q, const Path& p);

struct ParseResult {
  AlgElem elem;
  std::vector<std::string> warnings; // e.g. incomposable products
};

/// Parses the element grammar:
///   element := term (("+"|"-") term)*
///   term    := [coeff "*"] pathexpr | coeff
///   coeff   := int | "pi" ["^" int] | int "*" "pi" ["^" int]
///   pathexpr:= atom ("*" atom)*
///   atom    := ARROWNAME | "e_" VERTEXNAME
/// A bare coeff term denotes coeff * (sum of all trivial paths).
ParseResult parse_element(const std::string& text, const QuiverPtr& Q,
                          const ChainRing& R);

/// A quiver together with ideal generators over a chain ring. Generators
/// are nonzero and uniform: the support of each shares one head and one
/// tail. The factory splits non-uniform inputs through trivial paths.
struct Presentation {
  std::string name;
  ChainRing ring = ChainRing::finite_field(2);
  QuiverPtr quiver;
  std::vector<AlgElem> generators;

  int max_generator_degree() const;
};

Presentation make_presentation(std::string name, ChainRing ring, QuiverPtr quiver,
                               std::vector<AlgElem> generators);

} // namespace stralg
