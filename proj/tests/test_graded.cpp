#include <random>

#include "doctest.h"
#include "gsdeform/graded.hpp"

using namespace gsdeform;

namespace {

BasisPtr small_basis() {
  return std::make_shared<GradedBasis>(
      std::vector<BasisElement>{{"1", 0}, {"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}}, 6);
}

Element el(const BasisPtr& b, const std::string& s, int arity) { return parse_element(s, *b, arity); }

MultiMap random_map(std::mt19937& rng, const BasisPtr& b, int m, int n, int p) {
  MultiMap f(b, b, m, n, p);
  std::bernoulli_distribution bit(0.3);
  for (int t = 0; t + p <= 3; ++t) {
    if (t + p < 0) continue;
    for (const auto& in : b->tuples(m, t)) {
      Element v(n);
      for (const auto& out : b->tuples(n, t + p))
        if (bit(rng)) v.add(out, true);
      f.set(in, v);
    }
  }
  return f;
}

Element random_element(std::mt19937& rng, const BasisPtr& b, int arity, int degree) {
  std::bernoulli_distribution bit(0.5);
  Element e(arity);
  for (const auto& t : b->tuples(arity, degree))
    if (bit(rng)) e.add(t, true);
  return e;
}

}  // namespace

TEST_CASE("basis validation") {
  CHECK_THROWS_AS(GradedBasis({{"x", 1}, {"x", 2}}, 3), AlgebraError);
  CHECK_THROWS_AS(GradedBasis({{"x", 4}}, 3), AlgebraError);
  auto b = small_basis();
  CHECK(b->index_of("c") == 3);
  CHECK_THROWS_AS(b->index_of("zz"), AlgebraError);
}

TEST_CASE("tuple enumeration is lexicographic and complete") {
  auto b = small_basis();
  const auto& t = b->tuples(2, 2);
  CHECK(t.size() == 8);
  CHECK(std::is_sorted(t.begin(), t.end()));
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(b->position(t[i]) == i);
}

TEST_CASE("tensor examples") {
  auto b = small_basis();
  const auto e = el(b, "a + c", 1);
  CHECK(tensor(scalar_one(), e) == e);
  CHECK(tensor(el(b, "a", 1), el(b, "b", 1)) == el(b, "a*b", 2));
  const auto ab = el(b, "a + b", 1);
  CHECK(tensor(ab, ab) == el(b, "a*a + a*b + b*a + b*b", 2));
  CHECK(render(tensor(ab, ab), *b) == "a*a + a*b + b*a + b*b");
  CHECK(render(scalar_one(), *b) == "1");
  CHECK(render(Element(2), *b) == "0");
}

TEST_CASE("sigma examples") {
  auto b = small_basis();
  CHECK(sigma_permute(2, 2, el(b, "a*b*c*d", 4)) == el(b, "a*c*b*d", 4));
  const auto delta = el(b, "1*c + c*1", 2);
  CHECK(render(sigma_permute(2, 2, tensor(delta, delta)), *b) == "1*1*c*c + 1*c*c*1 + c*1*1*c + c*c*1*1");
  CHECK(sigma_permute(1, 3, el(b, "a*b*c", 3)) == el(b, "a*b*c", 3));
  CHECK_THROWS_AS(sigma_permute(2, 2, el(b, "a*b", 2)), AlgebraError);
}

TEST_CASE("sigma round trip") {
  std::mt19937 rng(3);
  auto b = small_basis();
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      if (m * n > 6) continue;
      const auto e = random_element(rng, b, m * n, 2);
      CHECK(sigma_permute(n, m, sigma_permute(m, n, e)) == e);
    }
}

TEST_CASE("apply, hom_tensor and compose") {
  auto b = small_basis();
  MultiMap zero(b, b, 1, 1, 0);
  CHECK(apply(zero, el(b, "a + b", 1)).is_zero());
  const auto id = MultiMap::identity(b);
  CHECK(apply(id, el(b, "a + c", 1)) == el(b, "a + c", 1));
  CHECK(hom_tensor(id, id).apply(el(b, "a*c", 2)) == el(b, "a*c", 2));
  CHECK(hom_tensor(id, zero).is_zero());

  MultiMap mu(b, b, 2, 1, 0);
  mu.set(b->tuples(2, 0)[0], el(b, "1", 1));
  mu.set({1, 2}, el(b, "c", 1));
  mu.set({2, 1}, el(b, "c + d", 1));
  const auto mm = hom_tensor(mu, mu);
  CHECK(mm.apply(el(b, "a*b*b*a", 4)) == el(b, "c*c + c*d", 2));
  CHECK(compose(mu, hom_tensor(id, id)) == mu);
  CHECK(compose(id, mu) == mu);
  CHECK(compose(zero, mu).is_zero());
  CHECK_THROWS_AS(compose(mu, mu), AlgebraError);

  MultiMap bad(b, b, 1, 1, 1);
  CHECK_THROWS_AS(bad.set({1}, el(b, "a", 1)), AlgebraError);
  MultiMap up(b, b, 1, 1, 5);
  CHECK_THROWS_AS(up.apply(Tuple{3}), WindowViolation);
  CHECK_NOTHROW(up.apply(Tuple{1}));
}

TEST_CASE("interchange law and matrix consistency") {
  std::mt19937 rng(5);
  auto b = small_basis();
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_map(rng, b, 1, 1, 0);
    auto g = random_map(rng, b, 1, 1, 1);
    auto f2 = random_map(rng, b, 2, 1, 0);
    auto g2 = random_map(rng, b, 1, 1, 0);
    const auto lhs = compose(hom_tensor(f, g), hom_tensor(f2, g2));
    const auto rhs = hom_tensor(compose(f, f2), compose(g, g2));
    for (int t = 0; t <= 2; ++t)
      for (const auto& in : b->tuples(3, t)) CHECK(lhs.apply(in) == rhs.apply(in));
    for (int t = 0; t <= 2; ++t) {
      const auto m = as_matrix(f2, t);
      const auto x = random_element(rng, b, 2, t);
      CHECK(m * to_vector(x, *b, t) == to_vector(f2.apply(x), *b, t));
      const auto e1 = random_element(rng, b, 2, t);
      CHECK(f2.apply(x + e1) == f2.apply(x) + f2.apply(e1));
    }
  }
  CHECK(as_matrix(MultiMap::identity(b), 2) == BitMatrix::identity(2));
}

TEST_CASE("element parsing errors") {
  auto b = small_basis();
  CHECK(el(b, "0", 2).is_zero());
  CHECK_THROWS_AS(el(b, "a*b +", 2), AlgebraError);
  CHECK_THROWS_AS(el(b, "a*b c*d", 2), AlgebraError);
  CHECK_THROWS_AS(el(b, "a", 2), AlgebraError);
  CHECK_THROWS_AS(el(b, "q*a", 2), AlgebraError);
  CHECK(el(b, "1", 0) == scalar_one());
}
