#include "gsdeform/tensor_cohomology.hpp"

namespace gsdeform {

namespace {

// Positions of the terms of an element inside tuples(arity, degree).
std::vector<std::size_t> positions(const Element& e, const GradedBasis& b) {
  std::vector<std::size_t> out;
  out.reserve(e.size());
  for (const auto& [t, c] : e.terms()) out.push_back(b.position(t));
  return out;
}

Element tensor_power_apply(const MultiMap& g, const Tuple& t) {
  Element out = scalar_one();
  for (int x : t) out = tensor(out, g.apply(Tuple{x}));
  return out;
}

}  // namespace

TensorCohomology::TensorCohomology(const Presentation& B, const MultiMap& g, int n, int t)
    : B_(B), n_(n), t_(t), hbasis_(g.source()) {
  const auto& bb = B.B();
  const auto& rows = bb.tuples(n, t);
  const auto& hcols = hbasis_->tuples(n, t);
  std::vector<std::vector<std::size_t>> cols;
  for (const auto& h : hcols) cols.push_back(positions(tensor_power_apply(g, h), bb));
  g_cols_ = cols.size();
  std::vector<std::vector<std::size_t>> dcols;
  if (t >= 1) {
    for (const auto& u : bb.tuples(n, t - 1)) dcols.push_back(positions(d_tensor(B, element_of(u)), bb));
  }
  cols.insert(cols.end(), dcols.begin(), dcols.end());
  combined_ = SparseSystem(rows.size(), std::move(cols));
  boundary_ = SparseSystem(rows.size(), std::move(dcols));
  injective_ = combined_.rank() == g_cols_ + boundary_.rank();
}

std::optional<Element> TensorCohomology::pullback(const Element& z) const {
  const auto& bb = B_.B();
  if (z.arity() != n_) throw ContractViolation("pullback: arity mismatch");
  if (t_ + 1 <= bb.cap() && !d_tensor(B_, z).is_zero()) throw ContractViolation("not a cocycle");
  const auto x = combined_.solve(to_vector(z, bb, t_));
  if (!x) return std::nullopt;
  const auto& hcols = hbasis_->tuples(n_, t_);
  Element w(n_);
  for (auto i : x->support())
    if (i < g_cols_) w.add(hcols[i], true);
  return w;
}

std::optional<Element> TensorCohomology::bound(const Element& z) const {
  const auto& bb = B_.B();
  if (z.arity() != n_) throw ContractViolation("bound: arity mismatch");
  const auto x = boundary_.solve(to_vector(z, bb, t_));
  if (!x) return std::nullopt;
  if (t_ < 1) return Element(n_);
  return from_vector(*x, bb, n_, t_ - 1);
}

const TensorCohomology& TensorCohomologyCache::get(int n, int t) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[{n, t}];
  if (!slot) slot = std::make_unique<TensorCohomology>(B_, g_, n, t);
  return *slot;
}

}  // namespace gsdeform
