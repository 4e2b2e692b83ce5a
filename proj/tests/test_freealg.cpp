#include <doctest.h>

#include <random>

#include "stralg/freealg.hpp"

using namespace stralg;

namespace {

QuiverPtr two_loops() {
  return std::make_shared<Quiver>(std::vector<std::string>{"u"},
                                  std::vector<ArrowSpec>{{"a", "u", "u"}, {"b", "u", "u"}});
}

QuiverPtr one_loop() {
  return std::make_shared<Quiver>(std::vector<std::string>{"1"},
                                  std::vector<ArrowSpec>{{"x", "1", "1"}});
}

QuiverPtr fields_quiver() {
  return std::make_shared<Quiver>(
      std::vector<std::string>{"1", "2"},
      std::vector<ArrowSpec>{{"a", "1", "1"}, {"b", "1", "2"}, {"c", "2", "1"}});
}

} // namespace

TEST_CASE("parse monomials and relations") {
  auto Q = two_loops();
  auto R = ChainRing::series(2, 2);

  auto aa = parse_element("a*a", Q, R);
  CHECK(aa.elem.support().size() == 1);
  CHECK(aa.elem.support().begin()->first.str(*Q) == "a*a");
  CHECK(aa.elem.support().begin()->second == R.one());

  auto g = parse_element("pi*e_u - a*b - b*a", Q, R);
  CHECK(g.elem.support().size() == 3);
  CHECK(g.elem.coeff(Path::trivial(*Q, 0)) == R.pi());
}

TEST_CASE("parse over the fields quiver") {
  auto Q = fields_quiver();
  auto R = ChainRing::series(2, 2);
  auto g1 = parse_element("pi*e_1 - a*c*b - c*b*a", Q, R);
  CHECK(g1.elem.support().size() == 3);
  uint64_t minus_one = R.neg(R.one());
  for (const auto& [p, c] : g1.elem.support()) {
    if (p.is_trivial())
      CHECK(c == R.pi());
    else
      CHECK(c == minus_one);
  }
  CHECK(g1.warnings.empty());
}

TEST_CASE("parse integer coefficients through the canonical map") {
  auto Q = one_loop();
  auto R = ChainRing::padic(2, 3);
  auto g = parse_element("2*e_1 - x", Q, R);
  CHECK(g.elem.coeff(Path::trivial(*Q, 0)) == 2);
  CHECK(g.elem.coeff(Path::of_arrow(*Q, 0)) == 7); // -1 = 7 in Z/8
}

TEST_CASE("incomposable products denote zero with a warning") {
  auto Q = fields_quiver();
  auto R = ChainRing::finite_field(2);
  auto r = parse_element("b*b", Q, R); // t(b)=1 != 2=h(b)
  CHECK(r.elem.is_zero());
  REQUIRE(r.warnings.size() == 1);

  auto s = parse_element("a*a + b*b", Q, R);
  CHECK(s.elem.support().size() == 1);
}

TEST_CASE("parser diagnostics carry positions") {
  auto Q = one_loop();
  auto R = ChainRing::padic(2, 3);
  CHECK_THROWS_AS(parse_element("x + ", Q, R), Error);
  CHECK_THROWS_AS(parse_element("y", Q, R), Error);
  CHECK_THROWS_AS(parse_element("e_2", Q, R), Error);
  CHECK_THROWS_AS(parse_element("", Q, R), Error);
  try {
    parse_element("x*x + y", Q, R);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_name);
    CHECK(e.pos() == 6);
  }
}

TEST_CASE("pi powers and scalar terms") {
  auto Q = one_loop();
  auto R = ChainRing::padic(2, 3);
  auto e = parse_element("pi^2", Q, R);
  CHECK(e.elem.coeff(Path::trivial(*Q, 0)) == 4);
  auto f = parse_element("3*pi*x", Q, R);
  CHECK(f.elem.coeff(Path::of_arrow(*Q, 0)) == 6);
  auto g = parse_element("5", Q, R);
  CHECK(g.elem.coeff(Path::trivial(*Q, 0)) == 5);
}

TEST_CASE("mul distributes over supports and drops zero products") {
  auto Q = fields_quiver();
  auto R = ChainRing::series(2, 2);
  auto a = parse_element("a", Q, R).elem;
  auto b = parse_element("b", Q, R).elem;
  auto c = parse_element("c", Q, R).elem;
  CHECK((b * c).support().begin()->first.str(*Q) == "b*c");
  CHECK((b * b).is_zero());
  auto prod = (a + c) * b; // ab zero? a: 1->1, b: 1->2, t(a)=1=h(b)? h(b)=2 -> zero; cb ok? t(c)=2=h(b) -> c*b
  CHECK(prod.support().size() == 1);
  CHECK(prod.support().begin()->first.str(*Q) == "c*b");
}

TEST_CASE("degree window") {
  auto Q = fields_quiver();
  auto R = ChainRing::series(2, 2);
  auto g1 = parse_element("pi*e_1 - a*c*b - c*b*a", Q, R).elem;
  CHECK(g1.degree_window() == std::pair<int, int>{0, 3});
  auto aa = parse_element("a*a", Q, R).elem;
  CHECK(aa.degree_window() == std::pair<int, int>{2, 2});
  CHECK_THROWS_AS(elem_zero(R, Q).degree_window(), Error);
}

TEST_CASE("parse-render round trip") {
  std::mt19937 rng(43);
  auto Q = fields_quiver();
  for (const ChainRing& R : {ChainRing::padic(2, 3), ChainRing::series(2, 2),
                             ChainRing::series(3, 3), ChainRing::finite_field(5)}) {
    // random elements over random small paths
    std::vector<Path> paths = {Path::trivial(*Q, 0), Path::trivial(*Q, 1),
                               Path::of_arrow(*Q, 0), Path::of_arrow(*Q, 1),
                               Path::of_arrow(*Q, 2),
                               *compose(*Q, Path::of_arrow(*Q, 0), Path::of_arrow(*Q, 2)),
                               *compose(*Q, Path::of_arrow(*Q, 1), Path::of_arrow(*Q, 0))};
    for (int tc = 0; tc < 50; ++tc) {
      AlgElem x(R, Q);
      for (const auto& p : paths)
        if (rng() % 2) x.accumulate(p, rng() % R.card());
      auto text = x.render();
      auto back = parse_element(text, Q, R);
      CAPTURE(text);
      CHECK(back.elem == x);
    }
  }
}

TEST_CASE("mul is associative and bilinear on random elements") {
  std::mt19937 rng(47);
  auto Q = two_loops();
  auto R = ChainRing::padic(2, 2);
  std::vector<Path> paths = {Path::trivial(*Q, 0), Path::of_arrow(*Q, 0),
                             Path::of_arrow(*Q, 1),
                             *compose(*Q, Path::of_arrow(*Q, 0), Path::of_arrow(*Q, 1))};
  auto randel = [&]() {
    AlgElem x(R, Q);
    for (const auto& p : paths)
      if (rng() % 2) x.accumulate(p, rng() % R.card());
    return x;
  };
  for (int tc = 0; tc < 60; ++tc) {
    auto x = randel(), y = randel(), z = randel();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
  }
}

TEST_CASE("scaling by pi lands in the radical-coefficient part") {
  auto Q = two_loops();
  auto R = ChainRing::padic(2, 3);
  auto x = parse_element("e_u + a + 3*a*b", Q, R).elem;
  CHECK(!x.in_radical_coefficients());
  CHECK(x.scaled(R.pi()).in_radical_coefficients());
}

TEST_CASE("presentations split non-uniform generators") {
  auto Q = fields_quiver();
  auto R = ChainRing::series(2, 2);
  // a + b has head 1 and 2 mixed; the loader splits it at trivial paths
  auto mixed = parse_element("a + b", Q, R).elem;
  auto pres = make_presentation("t", R, Q, {mixed});
  REQUIRE(pres.generators.size() == 2);
  for (const auto& g : pres.generators) {
    auto h = g.support().begin()->first.head();
    auto t = g.support().begin()->first.tail();
    for (const auto& [p, c] : g.support()) {
      CHECK(p.head() == h);
      CHECK(p.tail() == t);
    }
  }
  CHECK_THROWS_AS(make_presentation("z", R, Q, {elem_zero(R, Q)}), Error);
}
