#include "gsdeform/demos.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <utility>
#include <vector>

#include "gsdeform/embedded.hpp"
#include "gsdeform/hosts.hpp"
#include "gsdeform/transfer.hpp"
#include "gsdeform/triviality.hpp"

namespace gsdeform {

namespace {

const std::vector<std::pair<std::string, std::string>> kSymbols = {
    {"alpha1", "α₁"}, {"alpha2", "α₂"}, {"beta2", "β₂"}, {"beta", "β"}, {"gamma", "γ"}};

std::string symbol(const std::string& name) {
  for (const auto& [from, to] : kSymbols)
    if (name == from) return to;
  return name;
}

// Canonical rendering of the expected value next to the computed one.
void expect(RunReport& r, const std::string& name, const Element& computed, const Element& expected,
            const GradedBasis& b) {
  r.add(name, computed == expected, "computed " + pretty(render(computed, b)) + ", expected " +
                                        pretty(render(expected, b)));
}

Element sigma_dd(const Presentation& h, int x) {
  const Element d = h.delta->apply(Tuple{x});
  return sigma_permute(2, 2, tensor(d, d));
}

std::optional<std::string> part_difference(const GSHost& host, const Part<bool>& a, const GSCochain& c,
                                           int window) {
  const MultiMap* f = c.find(a.deg);
  const Part<bool> b = f ? lazy(*f) : Part<bool>{a.deg, [n = a.deg.n](const Tuple&) { return Element(n); }};
  return first_difference(host, a, b, window);
}

// The smallest bar cap whose H window holds α₂⊗β₂⊗β₂ (degree 6).
constexpr int kExample4MinCap = 7;

}  // namespace

std::string pretty(const std::string& rendered) {
  std::string out;
  std::string token;
  auto flush = [&] {
    out += symbol(token);
    token.clear();
  };
  for (char c : rendered) {
    if (c == '*') {
      flush();
      out += "⊗";
    } else if (c == ' ' || c == '+') {
      flush();
      out += c;
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

RunReport demo_example4(const DemoOptions& o) {
  RunReport r("demo example4");
  r.note("A = <1, a2, a3, b3, a2a3>, a2·a3 = a3·a2 = a2a3; BA with the shuffle product, cap " +
         std::to_string(o.cap));
  if (o.cap < kExample4MinCap) {
    r.inconclusive("window holds α₂⊗β₂⊗β₂",
                   "window violation: cap " + std::to_string(o.cap) + " gives classes of degree <= " +
                       std::to_string(o.cap - 1) + ", the example needs inputs of degree 6 (cap >= " +
                       std::to_string(kExample4MinCap) + ")");
    return r;
  }
  const BarHomology E = example4_homology(o.cap);
  const GSHost host(E.host());
  const Presentation& H = host.presentation();
  const auto& b = host.B();
  const int window = gs_window(host, -1);
  const int a1 = b.index_of("alpha1"), a2 = b.index_of("alpha2"), be = b.index_of("beta2"),
            ga = b.index_of("gamma");
  for (int x : {a1, a2, be, ga})
    r.note(symbol(b.name(x)) + " = cls(" + render(E.h.representative(x), E.bar->B()) + ")");

  // Structure constants the example writes out.
  const Element dg = H.delta->apply(Tuple{ga});
  r.note("Δγ = " + pretty(render(dg, b)));
  expect(r, "Δγ = 1⊗γ + α₁⊗α₂ + α₂⊗α₁ + γ⊗1", dg,
         parse_element("1*gamma + alpha1*alpha2 + alpha2*alpha1 + gamma*1", b, 2), b);
  expect(r, "γ = μ(α₁⊗α₂)", H.mu.apply(Tuple{a1, a2}), element_of({ga}), b);
  const Element s = sigma_dd(H, be);
  r.note("σ_{2,2}(Δβ₂⊗Δβ₂) = " + pretty(render(s, b)));
  expect(r, "σ_{2,2}(Δβ₂⊗Δβ₂) = 1⊗1⊗β₂⊗β₂ + β₂⊗1⊗1⊗β₂ + 1⊗β₂⊗β₂⊗1 + β₂⊗β₂⊗1⊗1", s,
         parse_element("1*1*beta2*beta2 + beta2*1*1*beta2 + 1*beta2*beta2*1 + beta2*beta2*1*1", b, 4), b);
  const BarComplex& W = *E.words;
  const auto word = [&](const char* text) { return W.parse(text).terms().begin()->first[0]; };
  const Element sh = W.shuffle(word("[a2|a3]"), word("[b3]"));
  r.note("sh([a2|a3]⊗[b3]) = " + render(sh, E.bar->B()));
  r.add("sh([a2|a3]⊗[b3]) = [a2|a3|b3] + [a2|b3|a3] + [b3|a2|a3]",
        sh == W.parse("[a2|a3|b3] + [a2|b3|a3] + [b3|a2|a3]"), "computed " + render(sh, E.bar->B()));

  // The cochains.
  const GSCochain psi = parse_cochain(embedded::kExample4Psi, host.basis());
  GSCochain omega = parse_cochain(embedded::kExample4Omega, host.basis());
  const Tridegree p13{-1, 3, 1}, p22{-1, 2, 2}, p21{-1, 2, 1};
  if (o.corrupt) {
    omega.part(p22).set(Tuple{be, be}, element_of({a1, a2}));
    r.note("corrupted: ω^{2,2}(β₂⊗β₂) := α₁⊗α₂");
  }
  const Element w22 = omega.part(p22).apply(Tuple{be, be});
  expect(r, "ω^{2,2}(β₂⊗β₂) = α₁⊗α₂ + α₂⊗α₁", w22, parse_element("alpha1*alpha2 + alpha2*alpha1", b, 2), b);
  for (int ai : {a1, a2}) {
    const Element prod = H.mu.apply(Tuple{ai, ga});
    const std::string n = symbol(b.name(ai));
    expect(r, "ω^{1,3}(" + n + "⊗β₂⊗β₂) = " + n + "|γ + γ|" + n + " = μ(" + n + "⊗γ)",
           omega.part(p13).apply(Tuple{ai, be, be}), prod, b);
    expect(r, "ω^{1,3}(β₂⊗β₂⊗" + n + ") = " + n + "|γ + γ|" + n + " = μ(γ⊗" + n + ")",
           omega.part(p13).apply(Tuple{be, be, ai}), H.mu.apply(Tuple{ga, ai}), b);
    if (prod.is_zero()) r.note("μ(" + n + "⊗γ) = 0 in H: the shuffle of " + n + " with γ cancels in pairs");
  }
  {
    GSCochain shown(host.basis());
    shown.part(p22).set(Tuple{be, be}, w22);
    const RunReport lit = is_gs_2cocycle(host, shown, window);
    if (const Check* bad = lit.first_failure())
      r.note("the β₂⊗β₂ entry alone is not a 2-cocycle (" + bad->name + " " + bad->witness +
             "); the loaded ω adds the entries of D(ψ) on classes of degree <= " + std::to_string(window));
  }

  // Cocycle, the two faces of the commuting square, and the verdict.
  const RunReport cocycle = is_gs_2cocycle(host, omega, window);
  r.merge(cocycle);
  const Part<bool> f = lazy(psi.find(p21) ? *psi.find(p21) : MultiMap::zero(host.basis(), 2, 1, -1));
  const auto dpsi = part_difference(host, gs_delta(host, f), omega, window);
  r.add("δψ = ω^{2,2}", !dpsi, dpsi.value_or(""));
  const auto ppsi = part_difference(host, gs_partial(host, f), omega, window);
  r.add("∂ψ = ω^{1,3}", !ppsi, ppsi.value_or(""));
  r.add("δψ(β₂⊗β₂) = α₁⊗α₂ + α₂⊗α₁ = Δ̄γ", gs_delta(host, f).eval({be, be}) ==
                                               parse_element("alpha1*alpha2 + alpha2*alpha1", b, 2));
  r.note("");
  r.note("  0");
  r.note("  ↑");
  r.note("  δψ = ω^{2,2}  →  ∂ω^{2,2} = δω^{1,3}");
  r.note("  ↑                ↑");
  r.note("  ψ  →  ∂ψ = ω^{1,3}  →  0");
  r.note("");

  if (!cocycle.passed()) {
    r.add("cls = 0: TRIVIAL", false, "ω is not a GS 2-cocycle, so it has no class");
    r.add("ψ(β₂⊗β₂) = γ solves D(ψ) = ω", satisfies_equations(host, omega, psi, window), "D(ψ) ≠ ω");
    return r;
  }
  const TrivialityResult t = decide_triviality(host, omega, window);
  r.note("solver: " + t.report.lines().front());
  r.add("cls = 0: TRIVIAL", t.verdict == Verdict::Trivial, "verdict " + to_string(t.verdict));
  r.add("ψ(β₂⊗β₂) = γ solves D(ψ) = ω", satisfies_equations(host, omega, psi, window), "D(ψ) ≠ ω");
  if (t.verdict == Verdict::Trivial) {
    std::istringstream lines(emit_cochain(t.psi, "psi"));
    for (std::string line; std::getline(lines, line);) r.note("solver ψ: " + line);
  }
  return r;
}

RunReport demo_loopspace(const DemoOptions& o) {
  RunReport r("demo loopspace");
  r.note("A = <1, a2, a3, b, a2a3>, a2·a3 = a3·a2 = a2a3, b⌣₁b = a2a3; BA with the perturbed product, cap " +
         std::to_string(o.cap));
  r.note("note: with g₁² = 0 the transfer gives ω^{3,1} = 0; the nonzero order-4 part beyond ω^{2,2} is ω^{1,3}");
  if (o.pin_i != 2 && o.pin_i != 3) throw std::invalid_argument("--pin-i must be 2 or 3");
  BarHomology L = loopspace_homology(o.cap);
  const auto Hp = L.host();
  const Presentation& H = *Hp;
  const auto& b = H.B();
  const int a1 = b.index_of("alpha1"), a2 = b.index_of("alpha2"), be = b.index_of("beta");
  for (int x : {a1, a2, be, b.index_of("gamma")})
    r.note(symbol(b.name(x)) + " = cls(" + render(L.h.representative(x), L.bar->B()) + ")");

  const BarComplex& W = *L.words;
  const auto word = [&](const char* text) { return W.parse(text).terms().begin()->first[0]; };
  const Element bb = W.perturbed(word("[b]"), word("[b]"));
  r.note("μ_BA([b]⊗[b]) = " + render(bb, L.bar->B()));
  r.add("μ_BA([b]⊗[b]) = [b|b] + [b|b] + [b⌣₁b] = [a2a3]", bb == W.parse("[a2a3]"),
        "computed " + render(bb, L.bar->B()));
  const Element ab = W.perturbed(word("[a2]"), word("[b]"));
  r.add("μ_BA([a2]⊗[b]) = [a2|b] + [b|a2] + [a2⌣₁b] with a2⌣₁b = 0", ab == W.parse("[a2|b] + [b|a2]"),
        "computed " + render(ab, L.bar->B()));
  const Element s = sigma_dd(H, be);
  r.note("σ_{2,2}(Δβ⊗Δβ) = " + pretty(render(s, b)));
  expect(r, "σ_{2,2}(Δβ⊗Δβ) = 1⊗1⊗β⊗β + β⊗1⊗1⊗β + 1⊗β⊗β⊗1 + β⊗β⊗1⊗1", s,
         parse_element("1*1*beta*beta + beta*1*1*beta + 1*beta*beta*1 + beta*beta*1*1", b, 4), b);
  r.add("μ(β⊗β) = 0", H.mu.apply(Tuple{be, be}).is_zero(), "μ(β⊗β) = " + pretty(render(H.mu.apply(Tuple{be, be}), b)));

  GSCochain omega(H.basis);
  int window = -1;
  if (o.skip_transfer) {
    std::string text = embedded::kLoopSpaceOmega;
    std::string source = "the built-in cochain";
    if (!o.omega_path.empty()) {
      std::ifstream in(o.omega_path);
      if (!in) throw std::invalid_argument("cannot read " + o.omega_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      source = o.omega_path;
    }
    omega = parse_cochain(text, H.basis);
    r.note("transfer skipped; ω loaded from " + source);
  } else {
    const char* pins = o.pin_i == 2 ? embedded::kLoopSpacePins : embedded::kLoopSpacePinsAlt;
    const TransferState st = run_transfer(L, parse_pins(pins, L));
    r.merge(st.report);
    r.note("pin: g₂¹(β⊗β) = " + render(st.homotopy(2, 1).apply(Tuple{be, be}), st.B().B()));
    omega = st.omega;
    window = st.window;
    const RunReport closed = compare_closed_form_omega13(st);
    if (const Check* bad = closed.first_failure())
      r.note("note: the closed form ω^{1,3}(β⊗β⊗σ) = μ(α₁|α₂⊗σ) has no value in H (" + bad->witness +
             "); the computed ω^{1,3} is reported instead");
    const auto* w13 = omega.find({-1, 3, 1});
    if (w13) {
      for (const auto& [x, v] : w13->table())
        r.note("ω^{1,3}(" + pretty(render_tuple(x, b)) + ") = " + pretty(render(v, b)) + " = cls(" +
               render(L.h.representative(v.terms().begin()->first[0]), L.bar->B()) + ")");
    }
    if (o.pin_i == 3) {
      const TransferState base = run_transfer(L, parse_pins(embedded::kLoopSpacePins, L));
      GSCochain diff = base.omega;
      diff += omega;
      const TrivialityResult t = decide_triviality(GSHost(Hp), diff, window);
      r.add("the choice i = 3 gives an isomorphic structure: cls(ω_{i=3} − ω_{i=2}) = 0",
            t.verdict == Verdict::Trivial, "verdict " + to_string(t.verdict));
    }
  }

  LoopspaceVerification v = verify_loopspace(Hp, omega, window, o.pin_i == 3 && !o.skip_transfer);
  r.merge(v.report);
  if (!v.triviality) return r;
  const TrivialityResult& t = *v.triviality;
  r.add("cls ≠ 0: NON-TRIVIAL", t.verdict == Verdict::NonTrivial, "verdict " + to_string(t.verdict));
  if (t.verdict == Verdict::NonTrivial && !o.certificate_path.empty()) {
    std::ofstream out(o.certificate_path);
    out << t.certificate_text;
    if (!out) throw std::runtime_error("cannot write " + o.certificate_path);
    r.artifact(o.certificate_path);
    r.note("certificate: " + o.certificate_path);
    std::istringstream lines(t.certificate_text);
    for (std::string line; std::getline(lines, line);) r.note("  " + line);
  }
  return r;
}

}  // namespace gsdeform
