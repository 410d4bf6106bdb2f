#pragma once

// Seeded random GS cochains and the D² = 0 / commutation property run over them.

#include <memory>
#include <random>
#include <vector>

#include "gsdeform/gs_complex.hpp"

namespace gsdeform {

/// Up to four nonzero inputs per part, each of degree ≤ top, with three random output terms.
GSCochain random_cochain(const GSHost& host, std::mt19937& rng, const std::vector<Tridegree>& degs, int top);
/// One or two tridegrees with m + n ≤ 4; p ∈ {−1, 0}, or {−2, −1, 0} on hosts with a differential.
std::vector<Tridegree> random_degrees(std::mt19937& rng, bool with_d);

struct SampleOptions {
  int samples = 100;
  unsigned seed = 1;
  int window = 6;  // input degree, clipped to what the cap supports
};

/// D(D(c)) = 0, ∂δ = δ∂, and (with a differential) ∇∂ = ∂∇, ∇δ = δ∇ on random cochains.
RunReport check_d_squared(const std::shared_ptr<const Presentation>& host, const SampleOptions& options);

}  // namespace gsdeform
