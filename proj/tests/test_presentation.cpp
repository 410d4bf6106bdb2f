#include "doctest.h"
#include "gsdeform/embedded.hpp"
#include "gsdeform/presentation.hpp"

using namespace gsdeform;

namespace {

const char* kTrivial = "field 2\ncap 0\nbasis one 0\nunit one\nmu one one = one\ndelta one = one*one\n";

// Divided-power style Hopf algebra on x (deg 2), x2 (deg 4): x primitive, Δx2 = 1⊗x2 + x⊗x + x2⊗1.
const char* kDivided = R"(field 2
cap 4
basis 1 0
basis x 2
basis x2 4
unit 1
mu x x = 0
delta x2 = 1*x2 + x*x + x2*1
)";

}  // namespace

TEST_CASE("parse minimal presentations") {
  auto p = parse_presentation(kTrivial);
  CHECK(p.B().size() == 1);
  CHECK(p.has_delta());
  CHECK(validate_dgha(p).passed());

  auto a = parse_presentation(embedded::kExample4Dga);
  CHECK(a.B().size() == 5);
  CHECK_FALSE(a.has_delta());
  CHECK(render(a.mu.apply(Tuple{1, 2}), a.B()) == "a2a3");
  CHECK(render(a.mu.apply(Tuple{0, 3}), a.B()) == "b3");
  CHECK(a.mu.apply(Tuple{3, 3}).is_zero());
  const auto r = validate_dgha(a);
  CHECK(r.passed());

  auto l = parse_presentation(embedded::kLoopSpaceDga);
  REQUIRE(l.E.count(1) == 1);
  CHECK(render(l.E.at(1).apply(Tuple{3, 3}), l.B()) == "a2a3");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH(parse_presentation("field 3\n"), "line 1: only field 2 is supported");
  CHECK_THROWS_WITH(parse_presentation("field 2\ncap 5\nbasis 1 0\nbasis a2 2\nbasis a3 3\nunit 1\nmu a2 a3 = a3\n"),
                    doctest::Contains("line 7: inhomogeneous"));
  CHECK_THROWS_WITH(parse_presentation("field 2\ncap 5\nbasis 1 0\nunit 1\nmu 1 q = 1\n"),
                    "line 5: unknown basis name 'q'");
  CHECK_THROWS_WITH(parse_presentation("field 2\ncap 5\nbasis 1 0\nunit 1\nfoo\n"), doctest::Contains("line 5"));
  CHECK_THROWS_WITH(parse_presentation("field 2\ncap 5\nbasis 1 0\nbasis b 3\nunit 1\nE 1 1 b ; b = b\n"),
                    doctest::Contains("line 6: inhomogeneous"));
  CHECK_THROWS_AS(parse_presentation("field 2\ncap 5\nbasis 1 0\nunit 1\nmu 1 1 = 1\nmu 1 1 = 1\n"), ParseError);
}

TEST_CASE("emit and re-parse round trip") {
  auto l = parse_presentation(embedded::kLoopSpaceDga);
  auto again = parse_presentation(emit_presentation(l));
  CHECK(again.mu == l.mu);
  CHECK(again.E.at(1) == l.E.at(1));
  auto h = parse_presentation(kDivided);
  auto h2 = parse_presentation(emit_presentation(h));
  CHECK(*h2.delta == *h.delta);
}

TEST_CASE("validator finds witnesses") {
  auto h = parse_presentation(kDivided);
  CHECK(validate_dgha(h).passed());

  auto bad = parse_presentation("field 2\ncap 6\nbasis 1 0\nbasis x 2\nbasis y 2\nbasis xy 4\nunit 1\n"
                                "mu x y = xy\ndelta xy = 1*xy + xy*1\n");
  const auto r = validate_dgha(bad);
  CHECK_FALSE(r.passed());
  const Check* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->name == "Hopf compatibility");
  CHECK(f->witness.find("at x*y") != std::string::npos);

  auto nonassoc = parse_presentation("field 2\ncap 6\nbasis 1 0\nbasis x 2\nbasis y 4\nbasis z 6\nunit 1\n"
                                     "mu x x = y\nmu x y = z\n");
  CHECK(validate_dgha(nonassoc).first_failure()->name == "mu is associative");
}

TEST_CASE("differential axioms") {
  auto p = parse_presentation("field 2\ncap 5\nbasis 1 0\nbasis x 2\nbasis y 3\nunit 1\nd x = y\n");
  auto r = validate_dgha(p);
  CHECK(r.passed());
  auto q = parse_presentation("field 2\ncap 5\nbasis 1 0\nbasis x 2\nbasis y 3\nbasis z 4\nunit 1\nd x = y\nd y = z\n");
  CHECK(validate_dgha(q).first_failure()->name == "d^2 = 0");
}

TEST_CASE("safe window") {
  auto p = parse_presentation("field 2\ncap 10\nbasis 1 0\nunit 1\n");
  CHECK(safe_window(p, 0) == 10);
  CHECK(safe_window(p, 1) == 9);
}

TEST_CASE("order-4 relations") {
  auto h = parse_presentation(kDivided);
  auto zero = [](const Presentation& p, int m, int n) { return MultiMap(p.basis, p.basis, m, n, -1); };
  CHECK(check_kk_order4(h, zero(h, 3, 1), zero(h, 2, 2), zero(h, 1, 3)).passed());

  // Primitive x, y = dx with all products zero: strictly not Hopf compatible,
  // but ω^{2,2}(x,y) = ω^{2,2}(y,x) = x⊗x is a homotopy for compatibility.
  auto p = parse_presentation("field 2\ncap 6\nbasis 1 0\nbasis x 2\nbasis y 3\nunit 1\nd x = y\n"
                              "delta x = 1*x + x*1\n");
  CHECK(validate_dgha(p).first_failure()->name == "Hopf compatibility");
  CHECK(check_kk_order4(p, zero(p, 3, 1), zero(p, 2, 2), zero(p, 1, 3)).first_failure()->name ==
        "homotopy compatibility");
  auto w22 = zero(p, 2, 2);
  w22.set({1, 2}, parse_element("x*x", p.B(), 2));
  w22.set({2, 1}, parse_element("x*x", p.B(), 2));
  CHECK(check_kk_order4(p, zero(p, 3, 1), w22, zero(p, 1, 3)).passed());
  w22.set({2, 1}, Element(2));
  const auto r = check_kk_order4(p, zero(p, 3, 1), w22, zero(p, 1, 3));
  REQUIRE_FALSE(r.passed());
  CHECK(r.first_failure()->witness.find("at x*x") != std::string::npos);
}
