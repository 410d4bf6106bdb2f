#pragma once

// Cohomology of tensor powers B^⊗n in one degree, identified with H^⊗n through g^⊗n.

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "gsdeform/gf2.hpp"
#include "gsdeform/graded.hpp"
#include "gsdeform/presentation.hpp"

namespace gsdeform {

class TensorCohomology {
 public:
  /// g: H → B of degree 0 with cocycle values; n ≥ 1; t the total degree.
  TensorCohomology(const Presentation& B, const MultiMap& g, int n, int t);

  int arity() const { return n_; }
  int degree() const { return t_; }
  /// g^⊗n is injective on classes in this degree (Künneth holds at this window).
  bool injective() const { return injective_; }

  /// The unique w in H^⊗n with g^⊗n w cohomologous to the cocycle z, or nothing if z is outside the span.
  std::optional<Element> pullback(const Element& z) const;
  /// Canonical u with d_(n) u = z, or nothing when z is not a coboundary.
  std::optional<Element> bound(const Element& z) const;

 private:
  const Presentation& B_;
  int n_;
  int t_;
  BasisPtr hbasis_;
  std::size_t g_cols_ = 0;
  SparseSystem combined_;  // [g^⊗n | d_(n)]
  SparseSystem boundary_;  // d_(n)
  bool injective_ = false;
};

/// Lazily built TensorCohomology per (n, t).
class TensorCohomologyCache {
 public:
  TensorCohomologyCache(const Presentation& B, const MultiMap& g) : B_(B), g_(g) {}
  const TensorCohomology& get(int n, int t) const;

 private:
  const Presentation& B_;
  MultiMap g_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<TensorCohomology>> cache_;
};

}  // namespace gsdeform
