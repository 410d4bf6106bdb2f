#include "doctest.h"
#include "fixtures.hpp"
#include "gsdeform/triviality.hpp"

using namespace gsdeform;

TEST_CASE("the commutative example is trivial") {
  const auto& E = fixtures::example4();
  GSHost host(E.host());
  const GSCochain psi = parse_cochain(embedded::kExample4Psi, host.basis());
  const GSCochain omega = materialize(host, total_D(host, lazy(psi)), 8);
  const TrivialityResult r = decide_triviality(host, omega, -1);
  MESSAGE(r.report.text());
  CHECK(r.verdict == Verdict::Trivial);
  CHECK(satisfies_equations(host, omega, psi, -1));
  CHECK(satisfies_equations(host, omega, r.psi, -1));
}
