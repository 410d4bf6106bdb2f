#pragma once

// The two built-in examples: a trivial order-4 extension of a shuffle bar
// homology, and the non-trivial one transferred onto the loop-space homology.

#include <string>

#include "gsdeform/report.hpp"

namespace gsdeform {

struct DemoOptions {
  int cap = 8;                  // bar cap; H holds classes of degree ≤ cap − 1
  bool corrupt = false;         // example4: ω^{2,2}(β₂⊗β₂) replaced by α₁⊗α₂
  int pin_i = 2;                // loopspace: g₂¹(β⊗β) = [a2|a3] (2) or [a3|a2] (3)
  bool skip_transfer = false;   // loopspace: decide on a stored ω instead
  std::string omega_path;       // with skip_transfer; empty for the built-in cochain
  std::string certificate_path = "loopspace-certificate.txt";
};

RunReport demo_example4(const DemoOptions& options = {});
RunReport demo_loopspace(const DemoOptions& options = {});

/// Class names as symbols (alpha1 → α₁, beta2 → β₂, ...) and `*` as ⊗.
std::string pretty(const std::string& rendered);

}  // namespace gsdeform
