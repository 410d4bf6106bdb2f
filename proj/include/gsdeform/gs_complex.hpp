#pragma once

// Gerstenhaber–Schack triple complex of a DG Hopf algebra over GF(2).
//
// Cochain parts are evaluated pointwise: a part is a function from input
// tuples to linear combinations of output tuples. The differentials build
// new functions from old ones, so D(D(c)) never materializes D(c) beyond
// the tuples it actually touches. The coefficient type is a template
// parameter; the triviality solver runs the same code on sets of unknowns.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsdeform/graded.hpp"
#include "gsdeform/presentation.hpp"
#include "gsdeform/report.hpp"

namespace gsdeform {

/// (p, m, n): internal degree p, m inputs, n outputs.
struct Tridegree {
  int p = 0;
  int m = 1;
  int n = 1;
  auto operator<=>(const Tridegree&) const = default;
};
std::string to_string(const Tridegree& t);

/// A GF(2) combination of unknowns, kept as a sorted index list.
struct Symbols {
  std::vector<int> ids;
  bool operator==(const Symbols&) const = default;
};
inline bool coeff_zero(const Symbols& s) { return s.ids.empty(); }
void coeff_add(Symbols& a, const Symbols& b);

/// Host DGHA with cached structure maps used by the differentials.
class GSHost {
 public:
  explicit GSHost(std::shared_ptr<const Presentation> host);

  const Presentation& presentation() const { return *host_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return host_; }
  const GradedBasis& B() const { return host_->B(); }
  const BasisPtr& basis() const { return host_->basis; }
  bool has_differential() const { return host_->has_differential(); }

  /// Left-fold product of the slots; the empty tuple gives the unit.
  Element product(const Tuple& xs) const;
  /// Δ^{(n)} x with n factors (n = 1 is x itself).
  Element iterated_coproduct(int x, int n) const;
  /// λ_m and ρ_m on an m-tuple; arity m + 1.
  Element lambda_lower(const Tuple& x) const;
  Element rho_lower(const Tuple& x) const;
  /// λ^n(a ⊗ y) and ρ^n(y ⊗ a) for an n-tuple y; arity n.
  Element lambda_upper(int a, const Tuple& y) const;
  Element rho_upper(const Tuple& y, int a) const;
  /// d_(k), ∂_(k) = Σ 1⊗μ⊗1 and δ_(k) = Σ 1⊗Δ⊗1 on one tuple.
  Element d_tensor_at(const Tuple& t) const;
  Element mu_tensor_at(const Tuple& t) const;
  Element delta_tensor_at(const Tuple& t) const;

 private:
  std::shared_ptr<const Presentation> host_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Element> coproducts_;
  mutable std::map<Tuple, Element> lambda_lower_, rho_lower_, lambda_upper_, rho_upper_;
};

enum class Side { Left, Right };

/// Tables of λ_m / ρ_m on inputs of degree ≤ window.
MultiMap comodule_action(const GSHost& host, Side side, int m, int window);
/// Tables of λ^n / ρ^n on inputs of degree ≤ window; input slot 0 (left) or n (right) is the acting element.
MultiMap module_action(const GSHost& host, Side side, int n, int window);

/// One homogeneous part, evaluated on demand.
template <class C>
struct Part {
  Tridegree deg;
  std::function<LinComb<C>(const Tuple&)> eval;
};

/// f applied to every term of an input combination.
template <class C>
LinComb<C> eval_on(const Part<C>& f, const Element& in) {
  LinComb<C> out(f.deg.n);
  for (const auto& [t, bit] : in.terms()) out += f.eval(t);
  return out;
}

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = t.size();
    for (int x : t) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(x) + (h >> 29);
    return h;
  }
};

/// Caches the values of a part; shared between copies.
template <class C>
Part<C> memoize(Part<C> f) {
  struct Memo {
    std::mutex mutex;
    std::unordered_map<Tuple, LinComb<C>, TupleHash> values;
  };
  auto memo = std::make_shared<Memo>();
  auto inner = std::move(f.eval);
  f.eval = [memo, inner](const Tuple& t) {
    {
      std::lock_guard lock(memo->mutex);
      if (auto it = memo->values.find(t); it != memo->values.end()) return it->second;
    }
    LinComb<C> v = inner(t);
    std::lock_guard lock(memo->mutex);
    memo->values.emplace(t, v);
    return v;
  };
  return f;
}

namespace detail {
template <class C>
void check_input(const Tridegree& deg, const Tuple& x, int want, const char* what) {
  if (static_cast<int>(x.size()) != want)
    throw ContractViolation(std::string(what) + ": input arity " + std::to_string(x.size()) + " does not match " +
                            to_string(deg));
}
inline Tuple slice(const Tuple& t, std::size_t from, std::size_t to) {
  return Tuple(t.begin() + static_cast<std::ptrdiff_t>(from), t.begin() + static_cast<std::ptrdiff_t>(to));
}
}  // namespace detail

/// ∇f = d_(n) f + f d_(m): (p, m, n) → (p+1, m, n).
template <class C>
Part<C> nabla(const GSHost& host, const Part<C>& f) {
  const Tridegree deg{f.deg.p + 1, f.deg.m, f.deg.n};
  return {deg, [&host, f, deg](const Tuple& x) {
            detail::check_input<C>(deg, x, deg.m, "nabla");
            LinComb<C> out = map_terms(f.eval(x), deg.n, [&](const Tuple& y) { return host.d_tensor_at(y); });
            out += eval_on(f, host.d_tensor_at(x));
            return out;
          }};
}

/// ∂f = λ^n(1⊗f) + f ∂_(m) + ρ^n(f⊗1): (p, m, n) → (p, m+1, n).
template <class C>
Part<C> gs_partial(const GSHost& host, const Part<C>& f) {
  const Tridegree deg{f.deg.p, f.deg.m + 1, f.deg.n};
  return {deg, [&host, f, deg](const Tuple& x) {
            detail::check_input<C>(deg, x, deg.m, "gs_partial");
            const std::size_t m = static_cast<std::size_t>(f.deg.m);
            const int first = x.front();
            const int last = x.back();
            LinComb<C> out = map_terms(f.eval(detail::slice(x, 1, m + 1)), deg.n,
                                       [&](const Tuple& y) { return host.lambda_upper(first, y); });
            out += eval_on(f, host.mu_tensor_at(x));
            out += map_terms(f.eval(detail::slice(x, 0, m)), deg.n,
                             [&](const Tuple& y) { return host.rho_upper(y, last); });
            return out;
          }};
}

/// δf = (1⊗f) λ_m + δ_(n) f + (f⊗1) ρ_m: (p, m, n) → (p, m, n+1).
template <class C>
Part<C> gs_delta(const GSHost& host, const Part<C>& f) {
  const Tridegree deg{f.deg.p, f.deg.m, f.deg.n + 1};
  return {deg, [&host, f, deg](const Tuple& x) {
            detail::check_input<C>(deg, x, deg.m, "gs_delta");
            const std::size_t m = x.size();
            LinComb<C> out(deg.n);
            const Element left = host.lambda_lower(x);
            for (const auto& [u, bit] : left.terms()) {
              const LinComb<C> v = f.eval(detail::slice(u, 1, m + 1));
              if (!v.is_zero()) out += tensor_left(element_of({u.front()}), v);
            }
            out += map_terms(f.eval(x), deg.n, [&](const Tuple& y) { return host.delta_tensor_at(y); });
            const Element right = host.rho_lower(x);
            for (const auto& [u, bit] : right.terms()) {
              const LinComb<C> v = f.eval(detail::slice(u, 0, m));
              if (!v.is_zero()) out += tensor_right(v, element_of({u.back()}));
            }
            return out;
          }};
}

/// Sum of parts sharing a tridegree.
template <class C>
Part<C> part_sum(std::vector<Part<C>> terms) {
  if (terms.empty()) throw ContractViolation("part_sum of nothing");
  const Tridegree deg = terms.front().deg;
  for (const auto& t : terms)
    if (!(t.deg == deg)) throw ContractViolation("part_sum: mixed tridegrees");
  if (terms.size() == 1) return terms.front();
  return {deg, [terms, deg](const Tuple& x) {
            LinComb<C> out(deg.n);
            for (const auto& t : terms) out += t.eval(x);
            return out;
          }};
}

/// A cochain as a collection of lazily evaluated parts.
template <class C>
using LazyCochain = std::map<Tridegree, Part<C>>;

/// D = ∇ + ∂ + δ partwise, collected by target tridegree and memoized.
/// ∇ is skipped on hosts with zero differential, where it vanishes identically.
template <class C>
LazyCochain<C> total_D(const GSHost& host, const LazyCochain<C>& c) {
  std::map<Tridegree, std::vector<Part<C>>> pieces;
  for (const auto& [deg, f] : c) {
    if (host.has_differential()) pieces[{deg.p + 1, deg.m, deg.n}].push_back(nabla(host, f));
    pieces[{deg.p, deg.m + 1, deg.n}].push_back(gs_partial(host, f));
    pieces[{deg.p, deg.m, deg.n + 1}].push_back(gs_delta(host, f));
  }
  LazyCochain<C> out;
  for (auto& [deg, list] : pieces) out.emplace(deg, memoize(part_sum(std::move(list))));
  return out;
}

/// A GS cochain with tabulated parts: tridegree → MultiMap(m, n, p).
struct GSCochain {
  BasisPtr basis;
  std::map<Tridegree, MultiMap> parts;

  explicit GSCochain(BasisPtr b = nullptr) : basis(std::move(b)) {}
  bool is_zero() const;
  /// The r with p + m + n = r + 1 for every nonzero part; nothing for the zero cochain.
  std::optional<int> total_degree() const;
  /// The part in a tridegree, created empty when absent.
  MultiMap& part(const Tridegree& deg);
  const MultiMap* find(const Tridegree& deg) const;
  GSCochain& operator+=(const GSCochain& other);
};

/// Table lookups as lazy parts.
LazyCochain<bool> lazy(const GSCochain& c);
Part<bool> lazy(const MultiMap& f);
/// Tabulates lazy parts on inputs of degree ≤ window (and outputs inside the cap).
GSCochain materialize(const GSHost& host, const LazyCochain<bool>& c, int window);
MultiMap materialize(const GSHost& host, const Part<bool>& f, int window);

/// First input (degree ≤ window) where two parts of the same tridegree differ, as a witness string.
std::optional<std::string> first_difference(const GSHost& host, const Part<bool>& a, const Part<bool>& b, int window);

/// Largest input degree at which D of a p-part can be evaluated inside the cap.
int gs_window(const GSHost& host, int p);

/// Full 2-cocycle test for ω = ω^{1,3} + ω^{2,2} + ω^{3,1}, componentwise and as D(ω) = 0.
RunReport is_gs_2cocycle(const GSHost& host, const GSCochain& omega, int window);
RunReport is_gs_2cocycle(const GSHost& host, const MultiMap& w13, const MultiMap& w22, const MultiMap& w31,
                         int window);

/// Lines `omega <n> <m> : x1 ... xm -> element` (also `psi`, `phi`, `f`); `#` comments.
GSCochain parse_cochain(const std::string& text, const BasisPtr& basis);
std::string emit_cochain(const GSCochain& c, const std::string& keyword = "omega");

}  // namespace gsdeform
