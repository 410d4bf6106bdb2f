#pragma once

// Graded bases, GF(2) elements of tensor powers and homogeneous multilinear maps.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsdeform/gf2.hpp"

namespace gsdeform {

/// A computation needed a value above the degree cap of a truncated basis.
class WindowViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, an unknown name, or a degree mismatch.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis tuple: indices into a GradedBasis, one per tensor slot.
using Tuple = std::vector<int>;

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Finite ordered list of named basis elements with nonnegative degrees ≤ cap.
///
/// The ordering is fixed at construction; tuples are ordered lexicographically
/// by index, which fixes every matrix and canonical solution downstream.
class GradedBasis {
 public:
  GradedBasis(std::vector<BasisElement> elements, int cap);

  std::size_t size() const { return elements_.size(); }
  int cap() const { return cap_; }
  const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::string& name(int i) const { return elements_[static_cast<std::size_t>(i)].name; }
  int degree(int i) const { return elements_[static_cast<std::size_t>(i)].degree; }
  int degree(const Tuple& t) const;

  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws AlgebraError

  const std::vector<int>& of_degree(int d) const;
  /// All tuples of the given arity and total degree, in lexicographic order.
  const std::vector<Tuple>& tuples(int arity, int total_degree) const;
  /// Position of a tuple inside tuples(arity, degree(t)).
  std::size_t position(const Tuple& t) const;

 private:
  std::vector<BasisElement> elements_;
  int cap_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> by_degree_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<Tuple>> tuple_cache_;
  mutable std::map<std::pair<int, int>, std::map<Tuple, std::size_t>> position_cache_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

/// GF(2) coefficient helpers; a coefficient type C supports these two calls.
inline bool coeff_zero(bool c) { return !c; }
inline void coeff_add(bool& a, bool b) { a = a != b; }

/// Finite linear combination of basis tuples of a fixed arity.
///
/// With C = bool this is an ordinary GF(2) element; the GS solver instantiates
/// it with sets of unknowns to evaluate differentials symbolically.
template <class C>
class LinComb {
 public:
  explicit LinComb(int arity = 1) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Tuple, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Tuple& t, const C& c) {
    if (static_cast<int>(t.size()) != arity_) throw AlgebraError("tuple arity does not match element arity");
    if (coeff_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      coeff_add(it->second, c);
      if (coeff_zero(it->second)) terms_.erase(it);
    }
  }
  LinComb& operator+=(const LinComb& other) {
    if (other.arity_ != arity_) throw AlgebraError("adding elements of different arity");
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  bool operator==(const LinComb& other) const = default;

 private:
  int arity_;
  std::map<Tuple, C> terms_;
};

using Element = LinComb<bool>;

Element element_of(const Tuple& t);
Element scalar_one();
void toggle(Element& e, const Tuple& t);

/// Applies a tuple-wise linear map to every term, scaling by the coefficient.
template <class C, class F>
LinComb<C> map_terms(const LinComb<C>& v, int out_arity, F&& fn) {
  LinComb<C> out(out_arity);
  for (const auto& [t, c] : v.terms()) {
    const Element image = fn(t);
    for (const auto& [u, bit] : image.terms()) out.add(u, c);
  }
  return out;
}

/// e ⊗ v where e is a plain element and v has arbitrary coefficients.
template <class C>
LinComb<C> tensor_left(const Element& e, const LinComb<C>& v) {
  LinComb<C> out(e.arity() + v.arity());
  for (const auto& [a, bit] : e.terms()) {
    for (const auto& [b, c] : v.terms()) {
      Tuple t = a;
      t.insert(t.end(), b.begin(), b.end());
      out.add(t, c);
    }
  }
  return out;
}

template <class C>
LinComb<C> tensor_right(const LinComb<C>& v, const Element& e) {
  LinComb<C> out(v.arity() + e.arity());
  for (const auto& [a, c] : v.terms()) {
    for (const auto& [b, bit] : e.terms()) {
      Tuple t = a;
      t.insert(t.end(), b.begin(), b.end());
      out.add(t, c);
    }
  }
  return out;
}

Element tensor(const Element& a, const Element& b);

/// Degree of every term, or nothing when the element is zero or inhomogeneous.
std::optional<int> homogeneous_degree(const Element& e, const GradedBasis& basis);

/// Block transpose (A^⊗m)^⊗n → (A^⊗n)^⊗m; slot (i, j) of the output is slot (j, i) of the input.
Tuple sigma_permute(int m, int n, const Tuple& t);
Element sigma_permute(int m, int n, const Element& e);

/// `a*b + c*d` rendering; the arity-0 scalar renders as `1`, zero as `0`.
std::string render(const Element& e, const GradedBasis& basis);
std::string render_tuple(const Tuple& t, const GradedBasis& basis, const char* sep = "*");
/// Parses `0` or `term (+ term)*` with `term ::= name (* name)*`.
Element parse_element(const std::string& text, const GradedBasis& basis, int arity);

/// Homogeneous multilinear map source^⊗m → target^⊗n of internal degree p.
///
/// Stored as a sparse table; tuples absent from the table map to zero.
class MultiMap {
 public:
  MultiMap() = default;  // placeholder without bases; assign before use
  MultiMap(BasisPtr source, BasisPtr target, int inputs, int outputs, int degree);
  static MultiMap identity(const BasisPtr& basis);
  static MultiMap zero(const BasisPtr& basis, int inputs, int outputs, int degree) {
    return MultiMap(basis, basis, inputs, outputs, degree);
  }

  int inputs() const { return m_; }
  int outputs() const { return n_; }
  int degree() const { return p_; }
  const BasisPtr& source() const { return source_; }
  const BasisPtr& target() const { return target_; }
  const std::map<Tuple, Element>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  /// Sets the value on one input tuple, checking arity and homogeneity.
  void set(const Tuple& input, Element value);
  void add(const Tuple& input, const Element& value);
  const Element* find(const Tuple& input) const;

  /// Throws WindowViolation when deg(input) + p exceeds the target cap.
  Element apply(const Tuple& input) const;
  Element apply(const Element& e) const;

  bool operator==(const MultiMap& other) const {
    return m_ == other.m_ && n_ == other.n_ && p_ == other.p_ && table_ == other.table_;
  }

 private:
  BasisPtr source_;
  BasisPtr target_;
  int m_ = 0;
  int n_ = 0;
  int p_ = 0;
  std::map<Tuple, Element> table_;
};

Element apply(const MultiMap& f, const Element& e);

/// (f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y).
MultiMap hom_tensor(const MultiMap& f, const MultiMap& g);
/// f ∘ g.
MultiMap compose(const MultiMap& f, const MultiMap& g);
/// Applies f to the slots [slot, slot + f.inputs()) of t, leaving the rest untouched.
Element apply_at(const MultiMap& f, const Tuple& t, std::size_t slot);
template <class C>
LinComb<C> apply_at(const MultiMap& f, const LinComb<C>& v, std::size_t slot) {
  const int arity = v.arity() - f.inputs() + f.outputs();
  return map_terms(v, arity, [&](const Tuple& t) { return apply_at(f, t, slot); });
}

/// Matrix of f restricted to input tuples of total degree `input_degree`.
BitMatrix as_matrix(const MultiMap& f, int input_degree);

/// Coordinates of a homogeneous element in tuples(arity, degree), and back.
BitVector to_vector(const Element& e, const GradedBasis& basis, int degree);
Element from_vector(const BitVector& v, const GradedBasis& basis, int arity, int degree);

}  // namespace gsdeform
