#pragma once

// Finitely presented DG (Hopf) algebras over GF(2): parsing, axiom checks, order-4 homotopy checks.

#include <map>
#include <optional>
#include <string>

#include "gsdeform/graded.hpp"
#include "gsdeform/report.hpp"

namespace gsdeform {

/// Syntax or content error in an input file; the message starts with `line N:`.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structure constants of a DG algebra, optionally with a coproduct and HGA operations E_{1,q}.
///
/// Unit and counit laws are filled in at construction time: μ(1,x) = μ(x,1) = x,
/// and every basis element without an explicit coproduct is primitive.
struct Presentation {
  BasisPtr basis;
  int unit = 0;
  MultiMap d;                    // (1,1,+1)
  MultiMap mu;                   // (2,1,0)
  std::optional<MultiMap> delta; // (1,2,0)
  std::map<int, MultiMap> E;     // q -> (1+q,1,-q)

  Presentation(BasisPtr b, int unit_index);

  const GradedBasis& B() const { return *basis; }
  bool has_delta() const { return delta.has_value(); }
  bool has_differential() const { return !d.is_zero(); }
  /// Installs the implicit unit products and primitive coproducts where no value was given.
  void complete_unit_laws(bool with_delta);
};

Presentation parse_presentation(const std::string& text);
std::string emit_presentation(const Presentation& p);

/// Largest total input degree W with W + shift ≤ cap.
int safe_window(const Presentation& p, int shift);

/// Compares two arity-preserving expressions on every tuple of the given arity and degree ≤ window.
template <class Lhs, class Rhs>
Check check_identity(const std::string& name, const GradedBasis& basis, int arity, int window, Lhs&& lhs,
                     Rhs&& rhs) {
  for (int t = 0; t <= window; ++t) {
    for (const auto& in : basis.tuples(arity, t)) {
      const Element a = lhs(in);
      const Element b = rhs(in);
      if (!(a == b)) {
        return Check{name, Status::Fail,
                     "at " + render_tuple(in, basis) + ": lhs = " + render(a, basis) + ", rhs = " + render(b, basis)};
      }
    }
  }
  return Check{name, Status::Pass, {}};
}

/// d² = 0, Leibniz rules, (co)associativity, unit/counit laws and Hopf compatibility.
RunReport validate_dgha(const Presentation& p);

/// The three m+n = 4 relations with given homotopies ω^{1,3} (3,1,−1), ω^{2,2} (2,2,−1), ω^{3,1} (1,3,−1).
RunReport check_kk_order4(const Presentation& p, const MultiMap& w13, const MultiMap& w22, const MultiMap& w31);

/// ∇f = d_(n) f + f d_(m) on a single input tuple.
Element nabla_at(const Presentation& p, const MultiMap& f, const Tuple& in);
/// d_(k) = Σ 1^{s} ⊗ d ⊗ 1^{k−s−1} on an element.
Element d_tensor(const Presentation& p, const Element& e);
/// Δ ∘ μ and (μ⊗μ)σ_{2,2}(Δ⊗Δ) on a pair.
Element delta_mu(const Presentation& p, const Tuple& xy);
Element mumu_sigma_deltadelta(const Presentation& p, const Tuple& xy);

}  // namespace gsdeform
