#include "gsdeform/transfer.hpp"

#include <sstream>

#include "gsdeform/triviality.hpp"

namespace gsdeform {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

// Splits on `sep` outside brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// g^⊗k on a tuple of H.
Element g_power(const MultiMap& g, const Tuple& t) {
  Element out = scalar_one();
  for (int x : t) out = tensor(out, g.apply(Tuple{x}));
  return out;
}

Element g_power(const MultiMap& g, const Element& e) {
  Element out(e.arity());
  for (const auto& [t, bit] : e.terms()) out += g_power(g, t);
  return out;
}

// (f₁ ⊗ ... ⊗ f_k) on an element whose arity is the sum of the input arities.
Element apply_each(const std::vector<const MultiMap*>& fs, const Element& e) {
  int arity = 0;
  for (const auto* f : fs) arity += f->outputs();
  Element out(arity);
  for (const auto& [t, bit] : e.terms()) {
    Element term = scalar_one();
    std::size_t at = 0;
    for (const auto* f : fs) {
      const auto k = static_cast<std::size_t>(f->inputs());
      term = tensor(term, f->apply(Tuple(t.begin() + static_cast<std::ptrdiff_t>(at),
                                         t.begin() + static_cast<std::ptrdiff_t>(at + k))));
      if (term.is_zero()) break;
      at += k;
    }
    if (!term.is_zero()) out += term;
  }
  return out;
}

std::string label(int m, int n) { return "g" + std::to_string(m) + std::to_string(n); }

// The order-3 right-hand sides: μ_B(g⊗g) + gμ_H and Δ_B g + (g⊗g)Δ_H.
Element order3_rhs(const TransferState& s, int m, int n, const Tuple& x) {
  const auto& g = s.g();
  if (m == 2 && n == 1) {
    Element out = apply_at(s.B().mu, g_power(g, x), 0);
    out += g_power(g, s.H().mu.apply(x));
    return out;
  }
  if (m == 1 && n == 2) {
    Element out = apply_at(*s.B().delta, g_power(g, x), 0);
    out += g_power(g, s.H().delta->apply(x));
    return out;
  }
  throw ContractViolation("order 3 has no relation for (" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

// Solves one homotopy, and for m + n = 4 the transferred operation, tuple by tuple.
void solve_part(TransferState& s, int m, int n) {
  const bool order4 = m + n == 4;
  const auto& hb = s.H().B();
  const auto& bb = s.B().B();
  MultiMap h(s.H().basis, s.B().basis, m, n, 2 - m - n);
  s.homotopies[{m, n}] = h;  // lower parts only are read while solving
  const Tridegree part{-1, m, n};
  bool exact = true;
  bool pullback_ok = true;
  bool pins_ok = true;
  std::string witness;

  for (int t = 0; t <= s.window; ++t) {
    for (const auto& x : hb.tuples(m, t)) {
      const int deg = t + 3 - m - n;
      Element rhs = order4 ? boundary_cochain(s, m, n, x) : order3_rhs(s, m, n, x);
      if (deg < 0) continue;
      if (deg + 1 <= bb.cap() && !d_tensor(s.B(), rhs).is_zero()) {
        if (exact) witness = "at " + render_tuple(x, hb) + ": " + render(rhs, bb);
        exact = false;
        continue;
      }
      const auto& tc = s.cohomology->get(n, deg);
      if (order4) {
        std::optional<Element> w;
        if (tc.injective()) w = tc.pullback(rhs);
        if (!w) {
          if (pullback_ok)
            s.report.inconclusive("class of φ for " + label(m, n) + " pulls back along g",
                                  "g^⊗" + std::to_string(n) + " is not an isomorphism on classes in degree " +
                                      std::to_string(deg));
          pullback_ok = false;
          continue;
        }
        if (!w->is_zero()) {
          s.omega.part(part).set(x, *w);
          rhs += g_power(s.g(), *w);
        }
      }
      std::optional<Element> value;
      for (const auto& pin : s.pins) {
        if (pin.m != m || pin.n != n || pin.input != x) continue;
        if (d_tensor(s.B(), pin.value) == rhs) {
          value = pin.value;
        } else {
          pins_ok = false;
          s.report.add("pin " + label(m, n) + " at " + render_tuple(x, hb) + " solves its relation", false,
                       "d(" + render(pin.value, bb) + ") = " + render(d_tensor(s.B(), pin.value), bb) +
                           ", required " + render(rhs, bb));
        }
      }
      if (!value) value = tc.bound(rhs);
      if (!value) {
        if (exact) witness = "at " + render_tuple(x, hb) + ": " + render(rhs, bb) + " is not a coboundary";
        exact = false;
        continue;
      }
      if (!value->is_zero()) s.homotopies[{m, n}].set(x, *value);
    }
  }
  const std::string what = order4 ? "φ for " + label(m, n) + " is a cocycle and g^⊗n ω + φ bounds"
                                  : "right-hand side for " + label(m, n) + " is exact";
  s.report.add(what, exact, witness);
  if (pins_ok) {
    for (const auto& pin : s.pins)
      if (pin.m == m && pin.n == n && hb.degree(pin.input) > s.window)
        s.report.note("pin " + label(m, n) + " at " + render_tuple(pin.input, hb) + " lies outside the window");
  }
}

}  // namespace

Element parse_bar_element(const std::string& text, const BarComplex& words, int arity) {
  Element out(arity);
  const std::string body = trim(text);
  if (body == "0") return out;
  for (const auto& term : split_top(body, '+')) {
    const auto factors = split_top(term, '*');
    if (static_cast<int>(factors.size()) != arity)
      throw AlgebraError("bar element term '" + term + "' has " + std::to_string(factors.size()) +
                         " factors, expected " + std::to_string(arity));
    Element e = scalar_one();
    for (const auto& f : factors) e = tensor(e, words.parse(f));
    out += e;
  }
  return out;
}

std::vector<Pin> parse_pins(const std::string& text, const BarHomology& bh) {
  std::vector<Pin> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  const auto& hb = bh.h.H->B();
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    const auto arrow = line.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(number, "expected 'pin g <m> <n> : <inputs> -> <bar element>'");
    std::istringstream head(line.substr(0, colon));
    std::string kw, gname;
    Pin pin;
    if (!(head >> kw >> gname >> pin.m >> pin.n) || kw != "pin" || gname != "g")
      throw ParseError(number, "expected 'pin g <m> <n>'");
    if (pin.m < 1 || pin.n < 1 || pin.m + pin.n < 3 || pin.m + pin.n > 4)
      throw ParseError(number, "pins exist for homotopies with 3 ≤ m + n ≤ 4");
    std::istringstream names(line.substr(colon + 1, arrow - colon - 1));
    std::string name;
    while (names >> name) {
      const auto i = hb.find(name);
      if (!i) throw ParseError(number, "unknown class '" + name + "'");
      pin.input.push_back(*i);
    }
    if (static_cast<int>(pin.input.size()) != pin.m)
      throw ParseError(number, "expected " + std::to_string(pin.m) + " input names, found " +
                                   std::to_string(pin.input.size()));
    try {
      pin.value = parse_bar_element(line.substr(arrow + 2), *bh.words, pin.n);
    } catch (const std::exception& e) {
      throw ParseError(number, e.what());
    }
    const auto want = hb.degree(pin.input) + 2 - pin.m - pin.n;
    const auto got = homogeneous_degree(pin.value, bh.bar->B());
    if (!pin.value.is_zero() && (!got || *got != want))
      throw ParseError(number, "pinned value must be homogeneous of degree " + std::to_string(want));
    out.push_back(std::move(pin));
  }
  return out;
}

const MultiMap& TransferState::homotopy(int m, int n) const {
  const auto it = homotopies.find({m, n});
  if (it == homotopies.end()) throw ContractViolation("homotopy " + label(m, n) + " has not been computed");
  return it->second;
}

TransferState make_transfer_state(BarHomology bh, std::vector<Pin> pins, int window) {
  if (!bh.bar->has_delta() || !bh.h.H->has_delta()) throw AlgebraError("transfer needs coproducts on B and H");
  if (bh.h.H->has_differential()) throw AlgebraError("transfer needs a host with zero differential");
  TransferState s;
  s.source = std::move(bh);
  const int cap = s.H().B().cap();
  s.window = window < 0 || window > cap ? cap : window;
  s.omega = GSCochain(s.H().basis);
  s.pins = std::move(pins);
  s.cohomology = std::make_shared<TensorCohomologyCache>(s.B(), s.g());
  s.report.note("input window: total degree <= " + std::to_string(s.window));
  return s;
}

void transfer_order3(TransferState& s) {
  solve_part(s, 2, 1);
  solve_part(s, 1, 2);
}

void transfer_order4(TransferState& s) {
  if (!s.homotopies.count({2, 1}) || !s.homotopies.count({1, 2}))
    throw ContractViolation("transfer_order4 before transfer_order3");
  solve_part(s, 3, 1);
  solve_part(s, 2, 2);
  solve_part(s, 1, 3);
}

Element boundary_cochain(const TransferState& s, int m, int n, const Tuple& x) {
  const auto& B = s.B();
  const auto& H = s.H();
  const auto& g = s.g();
  if (m == 3 && n == 1) {
    // μ_B(g₂¹⊗g + g⊗g₂¹) + g₂¹(μ⊗1 + 1⊗μ)
    const auto& g21 = s.homotopy(2, 1);
    Element out = apply_at(B.mu, apply_each({&g21, &g}, element_of(x)), 0);
    out += apply_at(B.mu, apply_each({&g, &g21}, element_of(x)), 0);
    out += g21.apply(apply_at(H.mu, x, 0));
    out += g21.apply(apply_at(H.mu, x, 1));
    return out;
  }
  if (m == 1 && n == 3) {
    // (Δ_B⊗1 + 1⊗Δ_B)g₁² + (g₁²⊗g + g⊗g₁²)Δ
    const auto& g12 = s.homotopy(1, 2);
    const Element v = g12.apply(x);
    Element out = apply_at(*B.delta, v, 0);
    out += apply_at(*B.delta, v, 1);
    const Element split = H.delta->apply(x);
    out += apply_each({&g12, &g}, split);
    out += apply_each({&g, &g12}, split);
    return out;
  }
  if (m == 2 && n == 2) {
    // Δ_B g₂¹ + g₁²μ + (μ_B⊗μ_B)σ(Δ_B g⊗g₁² + g₁²⊗(g⊗g)Δ) + (μ_B(g⊗g)⊗g₂¹ + g₂¹⊗gμ)σ(Δ⊗Δ)
    const auto& g21 = s.homotopy(2, 1);
    const auto& g12 = s.homotopy(1, 2);
    const Tuple a{x[0]};
    const Tuple b{x[1]};
    Element out = apply_at(*B.delta, g21.apply(x), 0);
    out += g12.apply(H.mu.apply(x));
    Element four = tensor(B.delta->apply(g.apply(a)), g12.apply(b));
    four += tensor(g12.apply(a), g_power(g, H.delta->apply(b)));
    out += apply_at(B.mu, apply_at(B.mu, sigma_permute(2, 2, four), 2), 0);
    const Element spread = sigma_permute(2, 2, tensor(H.delta->apply(a), H.delta->apply(b)));
    out += apply_at(B.mu, apply_each({&g, &g, &g21}, spread), 0);
    out += apply_each({&g21, &g}, apply_at(H.mu, spread, 2));
    return out;
  }
  throw ContractViolation("no boundary cochain for (" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

Element jj_defect(const TransferState& s, int m, int n, const Tuple& x) {
  Element out = d_tensor(s.B(), s.homotopy(m, n).apply(x));
  if (m + n == 3) {
    out += order3_rhs(s, m, n, x);
    return out;
  }
  out += boundary_cochain(s, m, n, x);
  if (const auto* w = s.omega.find({-1, m, n}))
    if (const auto* v = w->find(x)) out += g_power(s.g(), *v);
  return out;
}

RunReport check_jj_relations(const TransferState& s) {
  RunReport r("jj-relations");
  const auto& hb = s.H().B();
  for (const auto& [mn, h] : s.homotopies) {
    const auto [m, n] = mn;
    std::string witness;
    for (int t = 0; t <= s.window && witness.empty(); ++t) {
      if (t + 3 - m - n < 0) continue;
      for (const auto& x : hb.tuples(m, t)) {
        const Element e = jj_defect(s, m, n, x);
        if (!e.is_zero()) {
          witness = "at " + render_tuple(x, hb) + ": defect " + render(e, s.B().B());
          break;
        }
      }
    }
    r.add("JJ relation for " + label(m, n), witness.empty(), witness);
  }
  return r;
}

std::string emit_homotopies(const TransferState& s) {
  std::ostringstream out;
  const auto& hb = s.H().B();
  for (const auto& [mn, h] : s.homotopies) {
    for (const auto& [x, v] : h.table()) {
      out << "g " << mn.first << ' ' << mn.second << " : " << render_tuple(x, hb, " ") << " -> "
          << render(v, s.B().B()) << '\n';
    }
  }
  return out.str();
}

TransferState run_transfer(BarHomology bh, std::vector<Pin> pins, int window) {
  TransferState s = make_transfer_state(std::move(bh), std::move(pins), window);
  transfer_order3(s);
  transfer_order4(s);
  s.report.merge(check_jj_relations(s));
  return s;
}

}  // namespace gsdeform

namespace gsdeform {

namespace {

Element value_at(const GSCochain& c, const Tridegree& part, const Tuple& x) {
  if (const auto* f = c.find(part))
    if (const auto* v = f->find(x)) return *v;
  return Element(part.n);
}

}  // namespace

LoopspaceVerification verify_loopspace(const TransferState& s) {
  return verify_loopspace(s.source.h.H, s.omega, s.window, false);
}

LoopspaceVerification verify_loopspace(const std::shared_ptr<const Presentation>& H, const GSCochain& omega,
                                       int window, bool swapped) {
  LoopspaceVerification out;
  auto& r = out.report;
  const GSHost host(H);
  if (window < 0) window = gs_window(host, -1);
  const auto& hb = H->B();
  const int a1 = hb.index_of("alpha1");
  const int a2 = hb.index_of("alpha2");
  const int beta = hb.index_of("beta");
  const Tridegree p13{-1, 3, 1}, p22{-1, 2, 2}, p31{-1, 1, 3};

  const Element w22 = value_at(omega, p22, {beta, beta});
  if (swapped)
    r.add("ω^{2,2}(β⊗β) = α₂⊗α₁", w22 == element_of({a2, a1}), "computed " + render(w22, hb));
  else
    r.add("ω^{2,2}(β⊗β) = α₁⊗α₂", w22 == element_of({a1, a2}), "computed " + render(w22, hb));

  const auto* w31 = omega.find(p31);
  r.add("ω^{3,1} = 0", !w31 || w31->is_zero(),
        w31 && !w31->is_zero() ? "nonzero at " + render_tuple(w31->table().begin()->first, hb) : "");

  // ω^{1,3}: symmetric in β⊗β⊗σ ↔ σ⊗β⊗β, zero for σ ∈ {1, β}, and zero off those two shapes.
  std::string asym, at_trivial, off_support;
  for (int sg = 0; sg < static_cast<int>(hb.size()); ++sg) {
    if (hb.degree(sg) + 4 > window) continue;
    const Element l = value_at(omega, p13, {beta, beta, sg});
    const Element rr = value_at(omega, p13, {sg, beta, beta});
    if (!(l == rr) && asym.empty())
      asym = "at σ = " + hb.name(sg) + ": " + render(l, hb) + " vs " + render(rr, hb);
    if ((sg == H->unit || sg == beta) && !l.is_zero() && at_trivial.empty())
      at_trivial = "ω^{1,3}(β⊗β⊗" + hb.name(sg) + ") = " + render(l, hb);
  }
  if (const auto* w13 = omega.find(p13)) {
    for (const auto& [x, v] : w13->table()) {
      if ((x[0] == beta && x[1] == beta) || (x[1] == beta && x[2] == beta)) continue;
      off_support = "ω^{1,3}(" + render_tuple(x, hb) + ") = " + render(v, hb);
      break;
    }
  }
  r.add("ω^{1,3}(β⊗β⊗σ) = ω^{1,3}(σ⊗β⊗β)", asym.empty(), asym);
  r.add("ω^{1,3}(β⊗β⊗σ) = 0 for σ = 1, β", at_trivial.empty(), at_trivial);
  r.add("ω^{1,3} vanishes off β⊗β⊗σ and σ⊗β⊗β", off_support.empty(), off_support);
  const auto* w13 = omega.find(p13);
  r.add("ω^{1,3} ≠ 0", w13 && !w13->is_zero(), "ω^{1,3} vanishes on the window");

  r.merge(is_gs_2cocycle(host, omega, window));
  out.triviality.emplace(decide_triviality(host, omega, window));
  const auto& t = *out.triviality;
  r.note("decided on input degree <= " + std::to_string(t.window));
  if (t.verdict != Verdict::NonTrivial) {
    r.add("cls(ω^{2,2} + ω^{1,3}) ≠ 0", false, "verdict " + to_string(t.verdict));
    return out;
  }
  r.add("cls(ω^{2,2} + ω^{1,3}) ≠ 0", true);
  const auto& cert = *t.certificate;
  const Tuple bb{beta, beta};
  r.add("certificate uses ∂ψ₁² at β⊗β", cert.mentions(bb, "∂ψ₁²"),
        "no ∂ψ₁² unknown in the rows at β⊗β");
  r.add("certificate uses δψ₂¹ at β⊗β", cert.mentions(bb, "δψ₂¹"),
        "no δψ₂¹ unknown in the rows at β⊗β");
  // Every term of ∂ψ₁²(β⊗β) carries a factor β, so no ∂ψ₁² unknown reaches α₁⊗α₂.
  const Tuple lead = swapped ? Tuple{a2, a1} : Tuple{a1, a2};
  const std::string lead_name = swapped ? "α₂⊗α₁" : "α₁⊗α₂";
  std::string reach = "the certificate has no " + lead_name + " row at β⊗β";
  for (const auto& row : cert.rows) {
    if (row.input != bb || row.output != lead || !(row.component == p22)) continue;
    reach.clear();
    for (int id : row.unknowns)
      if (contribution_label(row.component, t.unknowns->part_of(id)) == "∂ψ₁²") reach = t.unknowns->name(id);
  }
  r.add("∂ψ₁²(β⊗β) has no " + lead_name + " term in the certificate", reach.empty(), reach);
  return out;
}

RunReport compare_closed_form_omega13(const TransferState& s) {
  RunReport r("closed-form");
  const auto& hb = s.H().B();
  const auto& bb = s.B().B();
  const int beta = hb.index_of("beta");
  const Element lead = s.source.words->parse("[a2|a3]");
  const Tridegree p13{-1, 3, 1};
  std::string first;
  int evaluable = 0;
  int compared = 0;
  for (int sg = 0; sg < static_cast<int>(hb.size()); ++sg) {
    if (sg == s.H().unit || sg == beta || hb.degree(sg) + 4 > s.window) continue;
    ++compared;
    const Element value = apply_at(s.B().mu, tensor(lead, s.g().apply(Tuple{sg})), 0);
    const Element computed = value_at(s.omega, p13, {beta, beta, sg});
    const Element dv = d_tensor(s.B(), value);
    if (!dv.is_zero()) {
      if (first.empty())
        first = "σ = " + hb.name(sg) + ": μ_B([a2|a3]⊗g σ) = " + render(value, bb) + " is not a cocycle (d = " +
                render(dv, bb) + "); transferred value " + render(computed, hb);
      continue;
    }
    ++evaluable;
    const auto& tc = s.cohomology->get(1, bb.degree(Tuple{value.terms().begin()->first}));
    const auto cls = tc.pullback(value);
    if (!cls || !(*cls == computed)) {
      if (first.empty())
        first = "σ = " + hb.name(sg) + ": closed form " + (cls ? render(*cls, hb) : "?") + ", transferred " +
                render(computed, hb);
    }
  }
  r.note(std::to_string(compared) + " values of σ compared, " + std::to_string(evaluable) + " with a closed-form class");
  r.add("ω^{1,3}(β⊗β⊗σ) = μ(α₁|α₂⊗σ) for σ ≠ 1, β", first.empty(), first);
  return r;
}

}  // namespace gsdeform
