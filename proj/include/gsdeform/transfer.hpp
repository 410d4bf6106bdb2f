#pragma once

// Transfer of the DG Hopf structure of a bar construction B = BA to its
// homology H along a cocycle-selecting map g, through total arity 4.
//
// Order 3 solves for the homotopies g₂¹, g₁²; order 4 assembles the known
// part φ of each JJ relation, reads ω^{n,m} off as the class of φ pulled back
// along g^⊗n, and solves ∇g_m^n = g^⊗n ω^{n,m} + φ. Everything is canonical
// except where a pin overrides a homotopy value.

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gsdeform/gs_complex.hpp"
#include "gsdeform/hosts.hpp"
#include "gsdeform/report.hpp"
#include "gsdeform/tensor_cohomology.hpp"
#include "gsdeform/triviality.hpp"

namespace gsdeform {

/// A user choice g_m^n(input) = value.
struct Pin {
  int m = 2;
  int n = 1;
  Tuple input;  // H indices
  Element value;
};

/// Lines `pin g <m> <n> : <H names> -> <bar element>`; bar tensor factors are joined with `*`.
std::vector<Pin> parse_pins(const std::string& text, const BarHomology& bh);
/// `[a2|a3]*[a3] + ...` as an element of B^⊗arity.
Element parse_bar_element(const std::string& text, const BarComplex& words, int arity);

struct TransferState {
  BarHomology source;
  int window = 0;                                    // H input tuples of total degree ≤ window
  std::map<std::pair<int, int>, MultiMap> homotopies;  // (m, n) → g_m^n : H^⊗m → B^⊗n, degree 2 − m − n
  GSCochain omega;                                   // transferred ω^{n,m} on H, m + n = 4
  std::vector<Pin> pins;
  std::shared_ptr<TensorCohomologyCache> cohomology;  // classes of B^⊗n through g^⊗n
  RunReport report{"transfer4"};

  const Presentation& B() const { return *source.bar; }
  const Presentation& H() const { return *source.h.H; }
  const MultiMap& g() const { return source.h.g; }
  /// g_m^n; zero when not computed.
  const MultiMap& homotopy(int m, int n) const;
};

/// Window < 0: every H tuple inside the H cap.
TransferState make_transfer_state(BarHomology bh, std::vector<Pin> pins = {}, int window = -1);

void transfer_order3(TransferState& s);
void transfer_order4(TransferState& s);

/// The known part φ of the JJ relation for (m, n) on one H tuple: ∇g_m^n = g^⊗n ω^{n,m} + φ.
Element boundary_cochain(const TransferState& s, int m, int n, const Tuple& x);
/// ∇g_m^n(x) + φ(x) + g^⊗n ω^{n,m}(x) (order 3: the μ/Δ terms), zero when the relation holds.
Element jj_defect(const TransferState& s, int m, int n, const Tuple& x);
/// Every stored homotopy satisfies its relation on all tuples of the window.
RunReport check_jj_relations(const TransferState& s);

/// Homotopy tables in the grammar `g <m> <n> : <H names> -> <bar element>`.
std::string emit_homotopies(const TransferState& s);

struct LoopspaceVerification {
  RunReport report{"loopspace"};
  std::optional<TrivialityResult> triviality;
};

/// The transferred values, the 2-cocycle test and a NonTrivial verdict with the β⊗β certificate.
/// Expects classes named alpha1, alpha2 and beta.
LoopspaceVerification verify_loopspace(const TransferState& s);
/// The same checks on a given ω over H (window < 0: the largest safe one). `swapped` expects
/// ω^{2,2}(β⊗β) = α₂⊗α₁, the value for the mirrored pin [a3|a2].
LoopspaceVerification verify_loopspace(const std::shared_ptr<const Presentation>& H, const GSCochain& omega,
                                       int window, bool swapped = false);

/// The closed form ω^{1,3}(β⊗β⊗σ) = μ(α₁|α₂⊗σ), read through its derivation: the class of
/// μ_B([a2|a3]⊗g σ) when that is a cocycle. Fails where the closed form has no value or disagrees.
RunReport compare_closed_form_omega13(const TransferState& s);

/// Full pipeline on a bar homology: order 3, order 4 and the JJ checks merged into s.report.
TransferState run_transfer(BarHomology bh, std::vector<Pin> pins = {}, int window = -1);

}  // namespace gsdeform
