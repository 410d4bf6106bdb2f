#pragma once

// Bar construction of a 1-connected DGA, its HGA-perturbed product, and its homology.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gsdeform/gf2.hpp"
#include "gsdeform/graded.hpp"
#include "gsdeform/presentation.hpp"
#include "gsdeform/report.hpp"

namespace gsdeform {

/// Letters of a bar word, as indices into the underlying DGA basis.
using BarWord = std::vector<int>;

/// All words of bar-degree ≤ cap, ordered by degree, then length, then lexicographically.
class BarComplex {
 public:
  BarComplex(std::shared_ptr<const Presentation> algebra, int cap);

  const Presentation& algebra() const { return *algebra_; }
  const std::shared_ptr<const Presentation>& algebra_ptr() const { return algebra_; }
  const BasisPtr& basis() const { return basis_; }
  int cap() const { return basis_->cap(); }
  int empty_word() const { return 0; }

  const BarWord& word(int index) const { return words_[static_cast<std::size_t>(index)]; }
  /// Index of a word; throws WindowViolation above the cap.
  int index_of(const BarWord& w) const;
  int degree(const BarWord& w) const;
  std::string render_word(const BarWord& w) const;
  /// Parses `[a2|a3] + [b]`-style input (also `[]`).
  Element parse(const std::string& text) const;

  Element differential(int word) const;
  Element coproduct(int word) const;
  Element shuffle(int w1, int w2) const;
  /// Grouped-interleaving form of μ_BA built from the E_{1,q} tables of the algebra.
  Element perturbed(int w1, int w2) const;

 private:
  Element words_to_element(const std::map<BarWord, bool>& parity) const;

  std::shared_ptr<const Presentation> algebra_;
  std::vector<BarWord> words_;
  std::map<BarWord, int> index_;
  BasisPtr basis_;
};

BarComplex bar_basis(const std::shared_ptr<const Presentation>& algebra, int cap);

enum class BarProduct { Shuffle, Perturbed };

/// (BA, d_BA, Δ_BA, product) as a presentation; products are tabulated on all pairs inside the cap.
std::shared_ptr<Presentation> bar_presentation(const BarComplex& bc, BarProduct product);

/// Relations (1), (2) and (3) of a homotopy Gerstenhaber algebra on every tuple of degree ≤ window.
RunReport hga_relations_check(const Presentation& a, int window);

/// Cohomology of a DG Hopf algebra B with zero-differential induced structure and a cocycle-selecting map.
struct Homology {
  std::shared_ptr<const Presentation> source;  // B
  std::shared_ptr<Presentation> H;             // zero differential, induced μ (and Δ when B has one)
  MultiMap g;                                  // H → B, degree 0
  int top = 0;                                 // H is exact in degrees ≤ top
  std::vector<QuotientBasis> quotients;        // per degree of B, 0..top
  std::vector<std::vector<int>> class_index;   // per degree: quotient coordinate → H index
  bool comultiplicative = false;               // g commutes with the coproducts
  RunReport checks{"homology"};

  /// Class of a homogeneous cocycle of B; throws ContractViolation("not a cocycle").
  Element class_of(const Element& z) const;
  bool is_boundary(const Element& z) const;
  Element representative(int h) const { return g.apply(Tuple{h}); }
};

struct HomologyOptions {
  /// Class name → cocycle of B installed as that class's representative.
  std::vector<std::pair<std::string, std::string>> overrides;
  /// Adjusts representatives by coboundaries so that g is comultiplicative where possible.
  bool refine_comultiplicative = true;
};

/// H*(B) through degree B.cap − 1; overrides are parsed with the bar word syntax.
Homology homology(const std::shared_ptr<const Presentation>& B, const BarComplex* words,
                  const HomologyOptions& options = {});

}  // namespace gsdeform
