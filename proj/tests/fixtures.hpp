#pragma once

// Hosts shared by several test files; each is built once per process.

#include <memory>

#include "gsdeform/bar.hpp"
#include "gsdeform/embedded.hpp"
#include "gsdeform/hosts.hpp"

namespace fixtures {

inline const gsdeform::BarHomology& example4() {
  static const gsdeform::BarHomology h = gsdeform::example4_homology(9);
  return h;
}

inline const gsdeform::BarHomology& loopspace() {
  static const gsdeform::BarHomology h = gsdeform::loopspace_homology(9);
  return h;
}

/// A DGHA with nonzero differential: the shuffle bar construction itself.
inline std::shared_ptr<const gsdeform::Presentation> bar_host() {
  static const auto p = [] {
    auto a = std::make_shared<gsdeform::Presentation>(gsdeform::parse_presentation(gsdeform::embedded::kExample4Dga));
    gsdeform::BarComplex bc(a, 8);
    return std::shared_ptr<const gsdeform::Presentation>(gsdeform::bar_presentation(bc, gsdeform::BarProduct::Shuffle));
  }();
  return p;
}

}  // namespace fixtures
