#include "stralg/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stralg {

void AlgElem::check_compatible(const AlgElem& o) const {
  if (ring_ != o.ring_)
    throw Error(Errc::ring_mismatch, "elements belong to different rings");
  if (*quiver_ != *o.quiver_)
    throw Error(Errc::quiver_mismatch, "elements belong to different quivers");
}

void AlgElem::accumulate(const Path& p, uint64_t c) {
  if (c == 0) return;
  auto it = support_.find(p);
  if (it == support_.end()) {
    support_.emplace(p, c);
    return;
  }
  it->second = ring_.add(it->second, c);
  if (it->second == 0) support_.erase(it);
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  check_compatible(o);
  AlgElem r = *this;
  for (const auto& [p, c] : o.support_) r.accumulate(p, c);
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  check_compatible(o);
  AlgElem r = *this;
  for (const auto& [p, c] : o.support_) r.accumulate(p, ring_.neg(c));
  return r;
}

AlgElem AlgElem::scaled(uint64_t c) const {
  AlgElem r(ring_, quiver_);
  for (const auto& [p, v] : support_) r.accumulate(p, ring_.mul(c, v));
  return r;
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
  check_compatible(o);
  AlgElem r(ring_, quiver_);
  for (const auto& [p, c] : support_)
    for (const auto& [q, d] : o.support_)
      if (auto pq = compose(*quiver_, p, q))
        r.accumulate(*pq, ring_.mul(c, d));
  return r;
}

std::pair<int, int> AlgElem::degree_window() const {
  if (support_.empty())
    throw Error(Errc::zero_element, "degree window of the zero element");
  int lo = support_.begin()->first.length();
  int hi = support_.rbegin()->first.length();
  return {lo, hi};
}

bool AlgElem::in_radical_coefficients() const {
  for (const auto& [p, c] : support_)
    if (ring_.valuation(c) == 0) return false;
  return true;
}

std::string AlgElem::str() const {
  if (support_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : support_) {
    if (!first) s += " + ";
    first = false;
    std::string cs = ring_.scalar_str(c);
    if (cs == "1") {
      s += p.str(*quiver_);
    } else {
      bool simple = cs.find_first_of("+ ") == std::string::npos;
      s += (simple ? cs : "(" + cs + ")") + "*" + p.str(*quiver_);
    }
  }
  return s;
}

std::string AlgElem::render() const {
  if (support_.empty()) return "0*e_" + quiver_->vertex_name(0);
  std::string s;
  bool first = true;
  for (const auto& [p, c] : support_) {
    // one grammar term per pi-power digit of the coefficient
    if (ring_.kind() == ChainRing::Kind::padic_trunc) {
      if (!first) s += " + ";
      first = false;
      s += std::to_string(c) + "*" + p.str(*quiver_);
      continue;
    }
    auto digits = ring_.pi_digits(c);
    for (unsigned v = 0; v < digits.size(); ++v) {
      if (digits[v] == 0) continue;
      if (!first) s += " + ";
      first = false;
      std::string coeff = std::to_string(digits[v]);
      if (v == 1) coeff += "*pi";
      if (v > 1) coeff += "*pi^" + std::to_string(v);
      s += coeff + "*" + p.str(*quiver_);
    }
  }
  if (first) return "0*e_" + quiver_->vertex_name(0);
  return s;
}

AlgElem elem_zero(const ChainRing& R, const QuiverPtr& Q) { return AlgElem(R, Q); }

AlgElem elem_path(const ChainRing& R, const QuiverPtr& Q, const Path& p) {
  AlgElem e(R, Q);
  e.accumulate(p, R.one());
  return e;
}

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::syntax_error, msg, (long)pos);
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }
  // NAME or e_NAME token; names are [A-Za-z0-9_']+
  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }
  bool looking_at_int() {
    skip_ws();
    return pos < text.size() && std::isdigit((unsigned char)text[pos]);
  }
  bool looking_at_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) != 0) return false;
    size_t end = pos + w.size();
    if (end < text.size() &&
        (std::isalnum((unsigned char)text[end]) || text[end] == '_'))
      return false;
    return true;
  }
};

struct ElementParser {
  Lexer lex;
  const QuiverPtr& Q;
  const ChainRing& R;
  std::vector<std::string>& warnings;

  // pi ["^" int]
  uint64_t pi_factor() {
    lex.pos += 2; // consume "pi"
    unsigned e = 1;
    if (lex.accept('^')) {
      long long k = lex.integer();
      if (k < 0) lex.fail("negative pi exponent");
      e = (unsigned)k;
    }
    return R.pi_pow(e);
  }

  // coeff := int | pi [^int] | int * pi [^int]; returns the scalar and
  // whether a trailing "*" has already been consumed before a path atom.
  uint64_t coeff() {
    if (lex.looking_at_word("pi")) return pi_factor();
    long long n = lex.integer();
    uint64_t c = R.from_int(n);
    size_t save = lex.pos;
    if (lex.accept('*')) {
      if (lex.looking_at_word("pi")) return R.mul(c, pi_factor());
      lex.pos = save;
    }
    return c;
  }

  std::optional<Path> atom() {
    size_t at = lex.pos;
    std::string n = lex.name();
    if (n.size() > 2 && n.rfind("e_", 0) == 0) {
      std::string v = n.substr(2);
      auto vi = Q->vertex_index(v);
      if (!vi) throw Error(Errc::unknown_name, "unknown vertex '" + v + "'", (long)at);
      return Path::trivial(*Q, *vi);
    }
    auto ai = Q->arrow_index(n);
    if (!ai) throw Error(Errc::unknown_name, "unknown arrow '" + n + "'", (long)at);
    return Path::of_arrow(*Q, *ai);
  }

  // pathexpr := atom ("*" atom)*; empty optional = incomposable (zero)
  std::optional<Path> pathexpr(size_t term_start) {
    auto p = atom();
    while (true) {
      size_t save = lex.pos;
      if (!lex.accept('*')) break;
      if (!std::isalpha((unsigned char)lex.peek()) && lex.peek() != '_' &&
          lex.peek() != 'e') {
        lex.pos = save;
        break;
      }
      auto q = atom();
      if (p && q) {
        p = compose(*Q, *p, *q);
        if (!p)
          warnings.push_back("incomposable product in term at position " +
                             std::to_string(term_start) + "; it denotes 0");
      }
    }
    return p;
  }

  void term(AlgElem& out, bool negate) {
    size_t term_start = lex.pos;
    uint64_t c = R.one();
    bool have_coeff = false;
    if (lex.looking_at_int() || lex.looking_at_word("pi")) {
      c = coeff();
      have_coeff = true;
    }
    char next = lex.peek();
    bool have_path =
        (have_coeff && next == '*') || (!have_coeff);
    if (have_coeff && next == '*') {
      lex.accept('*');
    }
    if (negate) c = R.neg(c);
    if (!have_path) {
      // bare scalar: coeff * (sum of trivial paths)
      for (int v = 0; v < Q->num_vertices(); ++v)
        out.accumulate(Path::trivial(*Q, v), c);
      return;
    }
    auto p = pathexpr(term_start);
    if (p) out.accumulate(*p, c);
  }

  AlgElem element() {
    AlgElem out(R, Q);
    bool neg = lex.accept('-');
    term(out, neg);
    while (!lex.eof()) {
      if (lex.accept('+')) {
        term(out, false);
      } else if (lex.accept('-')) {
        term(out, true);
      } else {
        lex.fail("expected '+' or '-'");
      }
    }
    return out;
  }
};

} // namespace

ParseResult parse_element(const std::string& text, const QuiverPtr& Q,
                          const ChainRing& R) {
  ParseResult res{AlgElem(R, Q), {}};
  ElementParser parser{{text}, Q, R, res.warnings};
  if (parser.lex.eof()) parser.lex.fail("empty element");
  res.elem = parser.element();
  return res;
}

int Presentation::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree_window().second);
  return d;
}

Presentation make_presentation(std::string name, ChainRing ring, QuiverPtr quiver,
                               std::vector<AlgElem> generators) {
  if (!quiver || quiver->num_vertices() == 0)
    throw Error(Errc::empty_quiver, "presentation needs a quiver");
  Presentation pres;
  pres.name = std::move(name);
  pres.ring = std::move(ring);
  pres.quiver = std::move(quiver);
  const Quiver& Q = *pres.quiver;
  for (const auto& g : generators) {
    if (g.is_zero())
      throw Error(Errc::bad_input, "zero ideal generator in '" + pres.name + "'");
    // split through trivial paths so every stored generator is uniform
    for (int u = 0; u < Q.num_vertices(); ++u) {
      for (int v = 0; v < Q.num_vertices(); ++v) {
        AlgElem part(pres.ring, pres.quiver);
        for (const auto& [p, c] : g.support())
          if (p.tail() == u && p.head() == v) part.accumulate(p, c);
        if (!part.is_zero()) pres.generators.push_back(std::move(part));
      }
    }
  }
  return pres;
}

} // namespace stralg
