#pragma once

// Homology of a bar construction packaged with everything that produced it.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gsdeform/bar.hpp"

namespace gsdeform {

struct BarHomology {
  std::shared_ptr<const Presentation> algebra;  // A
  std::shared_ptr<const BarComplex> words;      // BA words
  std::shared_ptr<const Presentation> bar;      // BA with the chosen product
  Homology h;                                   // H = H*(BA), g: H → BA

  std::shared_ptr<const Presentation> host() const { return h.H; }
};

BarHomology bar_homology(const std::string& dga_text, BarProduct product, int cap,
                         const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Shuffle bar construction of the commutative DGA, classes alpha1, alpha2, beta2, gamma named.
BarHomology example4_homology(int cap = 9);
/// Perturbed bar construction of the cup-one DGA, classes alpha1, alpha2, beta, gamma named.
BarHomology loopspace_homology(int cap = 9);

}  // namespace gsdeform
