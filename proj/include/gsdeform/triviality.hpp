#pragma once

// Is a GS 2-cocycle ω = ω^{1,3} + ω^{2,2} + ω^{3,1} the coboundary D(ψ₂¹ + ψ₁²)?
//
// The values of ψ₂¹ (−1,2,1) and ψ₁² (−1,1,2) on all inputs of degree ≤ window
// are unknowns; the differentials are evaluated with symbolic coefficients and
// every output coordinate of D(ψ) − ω becomes one GF(2) equation.

#include <optional>
#include <string>
#include <vector>

#include "gsdeform/gs_complex.hpp"
#include "gsdeform/report.hpp"

namespace gsdeform {

enum class Verdict { Trivial, NonTrivial, Inconclusive };
std::string to_string(Verdict v);

/// One equation: the coefficient of `output` in D(ψ)(input), restricted to one component.
struct EquationRow {
  Tridegree component;
  Tuple input;
  Tuple output;
  std::vector<int> unknowns;  // sorted ids
  bool rhs = false;           // coefficient of `output` in ω(input)
};

/// Unknown ids: ψ₂¹ values first, then ψ₁², each ordered by input degree, input tuple, output tuple.
class TrivialityUnknowns {
 public:
  TrivialityUnknowns(const GradedBasis& b, int window);

  int count() const { return total_; }
  int first_psi12() const { return split_; }
  /// Id of the coefficient of `output` in ψ(input), or −1 outside the window.
  int id(const Tuple& input, const Tuple& output) const;
  /// Input tuple, output tuple and part of an id.
  Tridegree part_of(int id) const;
  std::pair<Tuple, Tuple> decode(int id) const;
  std::string name(int id) const;

 private:
  struct Slab {
    int arity_in;
    int degree;  // total input degree
    int offset;
    std::size_t inputs;
    std::size_t outputs;
  };
  const Slab* slab(int arity_in, int degree) const;

  const GradedBasis& b_;
  int window_;
  std::vector<Slab> slabs_;
  int split_ = 0;
  int total_ = 0;
};

struct TrivialityCertificate {
  int degree = 0;  // largest input degree among the rows
  std::vector<EquationRow> rows;
  /// Header plus `equation <degree> : <input> : <row>` lines; stable for a fixed basis ordering.
  std::string text(const GradedBasis& b, const TrivialityUnknowns& u) const;
  /// Whether some row at `input` is an equation for the given differential (∂ψ₁², δψ₂¹, ...),
  /// including rows where that differential contributes no unknown.
  bool mentions(const Tuple& input, const std::string& part_label) const;
};

struct TrivialityResult {
  Verdict verdict = Verdict::Inconclusive;
  int window = 0;
  GSCochain psi;                                     // Trivial: D(psi) = ω on the window
  std::optional<TrivialityCertificate> certificate;  // NonTrivial
  std::optional<TrivialityUnknowns> unknowns;
  std::string certificate_text;
  RunReport report{"gs-trivial"};
};

/// Label of the differential contributing an unknown to a row: "∂ψ₂¹", "δψ₂¹", "∂ψ₁²", "δψ₁²", "∇ψ₂¹", "∇ψ₁²".
std::string contribution_label(const Tridegree& component, Tridegree part);
/// The labels of every ψ part whose ∇, ∂ or δ lands in `component`, sorted.
std::vector<std::string> landing_labels(const Tridegree& component);

/// Assembles and solves D(ψ) = ω on inputs of degree ≤ window (window < 0: the largest safe one).
/// Throws AlgebraError when ω fails the 2-cocycle test.
TrivialityResult decide_triviality(const GSHost& host, const GSCochain& omega, int window = -1);

/// Whether a given ψ solves the assembled equations of decide_triviality.
bool satisfies_equations(const GSHost& host, const GSCochain& omega, const GSCochain& psi, int window);

}  // namespace gsdeform
