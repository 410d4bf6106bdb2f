#include <algorithm>

#include "gsdeform/bar.hpp"
#include "gsdeform/tensor_cohomology.hpp"

namespace gsdeform {

namespace {

BitMatrix differential_matrix(const Presentation& B, int t) {
  const auto& b = B.B();
  if (t < 0) return BitMatrix(b.tuples(1, 0).size(), 0);
  if (t + 1 > b.cap()) throw WindowViolation("differential out of degree " + std::to_string(t) + " is above the cap");
  return as_matrix(B.d, t);
}

std::vector<BitVector> columns_of(const BitMatrix& m) {
  const BitMatrix t = m.transposed();
  std::vector<BitVector> out;
  for (std::size_t c = 0; c < t.rows(); ++c) out.push_back(t.row(c));
  return out;
}

std::vector<std::size_t> positions(const Element& e, const GradedBasis& b) {
  std::vector<std::size_t> out;
  for (const auto& [t, c] : e.terms()) out.push_back(b.position(t));
  return out;
}

}  // namespace

Element Homology::class_of(const Element& z) const {
  const auto& b = source->B();
  Element out(1);
  if (z.is_zero()) return out;
  const auto t = homogeneous_degree(z, b);
  if (!t) throw ContractViolation("class_of: element is not homogeneous");
  if (*t > top) throw WindowViolation("class_of: degree " + std::to_string(*t) + " is above the homology window");
  if (!apply(source->d, z).is_zero()) throw ContractViolation("not a cocycle");
  const auto& q = quotients.at(static_cast<std::size_t>(*t));
  const auto coords = q.try_class_of(to_vector(z, b, *t));
  if (!coords) throw ContractViolation("not a cocycle");
  for (auto j : coords->support()) out.add({class_index.at(static_cast<std::size_t>(*t)).at(j)}, true);
  return out;
}

bool Homology::is_boundary(const Element& z) const {
  if (z.is_zero()) return true;
  const auto t = homogeneous_degree(z, source->B());
  if (!t) throw ContractViolation("is_boundary: element is not homogeneous");
  return quotients.at(static_cast<std::size_t>(*t)).in_image(to_vector(z, source->B(), *t));
}

Homology homology(const std::shared_ptr<const Presentation>& Bp, const BarComplex* words,
                  const HomologyOptions& options) {
  const Presentation& B = *Bp;
  const auto& bb = B.B();
  Homology h;
  h.source = Bp;
  h.top = bb.cap() - 1;
  if (h.top < 0) throw WindowViolation("homology needs a cap of at least 1");

  // Parse overrides and sort them by degree.
  std::map<int, std::vector<std::pair<std::string, BitVector>>> overrides;
  for (const auto& [name, text] : options.overrides) {
    const Element z = words ? words->parse(text) : parse_element(text, bb, 1);
    const auto t = homogeneous_degree(z, bb);
    if (!t) throw AlgebraError("override " + name + " is zero or inhomogeneous");
    if (*t > h.top) throw WindowViolation("override " + name + " is above the homology window");
    if (!apply(B.d, z).is_zero()) throw AlgebraError("override " + name + " is not a cocycle");
    overrides[*t].push_back({name, to_vector(z, bb, *t)});
  }

  std::vector<BasisElement> elements;
  std::vector<Element> reps;
  int unit_index = -1;
  for (int t = 0; t <= h.top; ++t) {
    const BitMatrix d_in = differential_matrix(B, t - 1);
    const BitMatrix d_out = differential_matrix(B, t);
    HomologyPair pair(d_in, d_out);
    const auto image = columns_of(d_in);
    std::vector<BitVector> candidates;
    for (const auto& [name, v] : overrides[t]) candidates.push_back(v);
    const std::size_t pinned = candidates.size();
    for (const auto& v : pair.class_basis()) candidates.push_back(v);
    QuotientBasis q(bb.tuples(1, t).size(), image, candidates);
    if (q.dimension() != pair.dimension()) throw ContractViolation("homology dimension mismatch");
    for (std::size_t j = 0; j < pinned; ++j) {
      if (j >= q.representatives().size() || !(q.representatives()[j] == candidates[j]))
        throw AlgebraError("override " + overrides[t][j].first + " is a boundary or dependent on other overrides");
    }
    std::vector<int> indices;
    for (std::size_t j = 0; j < q.dimension(); ++j) {
      const Element rep = from_vector(q.representatives()[j], bb, 1, t);
      std::string name;
      if (j < pinned) {
        name = overrides[t][j].first;
      } else if (t == 0 && rep == element_of({B.unit})) {
        name = "1";
      } else {
        name = "h" + std::to_string(t) + "_" + std::to_string(j);
      }
      if (rep == element_of({B.unit})) unit_index = static_cast<int>(elements.size());
      indices.push_back(static_cast<int>(elements.size()));
      elements.push_back({name, t});
      reps.push_back(rep);
    }
    h.quotients.push_back(std::move(q));
    h.class_index.push_back(std::move(indices));
  }
  if (unit_index < 0) throw AlgebraError("the unit of the source is not a class representative");

  auto hb = std::make_shared<GradedBasis>(std::move(elements), h.top);
  h.H = std::make_shared<Presentation>(hb, unit_index);
  h.g = MultiMap(hb, Bp->basis, 1, 1, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) h.g.set({static_cast<int>(i)}, reps[i]);

  // Induced product.
  for (int t = 0; t <= h.top; ++t) {
    for (const auto& xy : hb->tuples(2, t)) {
      const Element prod = B.mu.apply(tensor(h.g.apply(Tuple{xy[0]}), h.g.apply(Tuple{xy[1]})));
      h.H->mu.set(xy, h.class_of(prod));
    }
  }
  {
    Check c{"induced product is well defined", Status::Pass, {}};
    for (int s = 0; s <= h.top && c.status == Status::Pass; ++s) {
      for (int t = 1; s + t <= h.top && c.status == Status::Pass; ++t) {
        for (const auto& w : bb.tuples(1, t - 1)) {
          const Element bnd = B.d.apply(w);
          if (bnd.is_zero()) continue;
          for (int x : hb->of_degree(s)) {
            const Element gx = h.g.apply(Tuple{x});
            const Element left = B.mu.apply(tensor(gx, bnd));
            const Element right = B.mu.apply(tensor(bnd, gx));
            if (!h.is_boundary(left) || !h.is_boundary(right)) {
              c = {c.name, Status::Fail,
                   "product of " + hb->name(x) + " with the coboundary " + render(bnd, bb) + " is not a coboundary"};
              break;
            }
          }
          if (c.status != Status::Pass) break;
        }
      }
    }
    h.checks.add(c);
  }

  if (!B.delta) return h;

  // Induced coproduct through the Künneth identification.
  h.H->delta.emplace(hb, hb, 1, 2, 0);
  TensorCohomologyCache kunneth(B, h.g);
  {
    Check c{"Kunneth identification of (B⊗B)", Status::Pass, {}};
    for (int t = 0; t <= h.top; ++t)
      if (!kunneth.get(2, t).injective()) {
        c = {c.name, Status::Inconclusive, "g⊗g is not injective on classes in degree " + std::to_string(t)};
        break;
      }
    h.checks.add(c);
    if (c.status != Status::Pass) return h;
  }
  for (std::size_t i = 0; i < hb->size(); ++i) {
    const int x = static_cast<int>(i);
    const int t = hb->degree(x);
    const auto w = kunneth.get(2, t).pullback(B.delta->apply(h.g.apply(Tuple{x})));
    if (!w) {
      h.checks.inconclusive("induced coproduct", "no class for the coproduct of " + hb->name(x));
      return h;
    }
    h.H->delta->set({x}, *w);
  }
  {
    Check c{"induced coproduct is well defined", Status::Pass, {}};
    for (int t = 1; t <= h.top && c.status == Status::Pass; ++t) {
      for (const auto& w : bb.tuples(1, t - 1)) {
        const Element bnd = B.d.apply(w);
        if (bnd.is_zero()) continue;
        const auto cls = kunneth.get(2, t).pullback(B.delta->apply(bnd));
        if (!cls || !cls->is_zero()) {
          c = {c.name, Status::Fail, "coproduct of the coboundary " + render(bnd, bb) + " is not a coboundary"};
          break;
        }
      }
    }
    h.checks.add(c);
  }

  // Comultiplicative refinement: g(x) += d u with Δ_B(g x + d u) = (g⊗g)Δ_H x.
  std::vector<bool> pinned(hb->size(), false);
  for (const auto& [name, text] : options.overrides) pinned[static_cast<std::size_t>(hb->index_of(name))] = true;
  auto defect = [&](int x) {
    Element e = B.delta->apply(h.g.apply(Tuple{x}));
    const Element dh = h.H->delta->apply(Tuple{x});
    for (const auto& [t, c] : dh.terms()) e += tensor(h.g.apply(Tuple{t[0]}), h.g.apply(Tuple{t[1]}));
    return e;
  };
  if (options.refine_comultiplicative) {
    std::map<int, SparseSystem> systems;
    for (std::size_t i = 0; i < hb->size(); ++i) {
      const int x = static_cast<int>(i);
      const int t = hb->degree(x);
      if (pinned[i] || x == unit_index || t < 1) continue;
      const Element e = defect(x);
      if (e.is_zero()) continue;
      auto it = systems.find(t);
      if (it == systems.end()) {
        std::vector<std::vector<std::size_t>> cols;
        for (const auto& u : bb.tuples(1, t - 1)) cols.push_back(positions(B.delta->apply(B.d.apply(u)), bb));
        it = systems.emplace(t, SparseSystem(bb.tuples(2, t).size(), std::move(cols))).first;
      }
      const auto u = it->second.solve(to_vector(e, bb, t));
      if (!u) continue;
      Element gx = h.g.apply(Tuple{x});
      gx += B.d.apply(from_vector(*u, bb, 1, t - 1));
      h.g.set({x}, gx);
    }
  }
  h.comultiplicative = true;
  for (std::size_t i = 0; i < hb->size(); ++i)
    if (!defect(static_cast<int>(i)).is_zero()) h.comultiplicative = false;
  return h;
}

}  // namespace gsdeform
