#include "gsdeform/triviality.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace gsdeform {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::NonTrivial: return "NonTrivial";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {
constexpr Tridegree kPsi21{-1, 2, 1};
constexpr Tridegree kPsi12{-1, 1, 2};
}  // namespace

// ---- unknowns ----

TrivialityUnknowns::TrivialityUnknowns(const GradedBasis& b, int window) : b_(b), window_(window) {
  int offset = 0;
  for (int arity_in : {2, 1}) {
    if (arity_in == 1) split_ = offset;
    const int arity_out = 3 - arity_in;
    for (int t = 0; t <= window; ++t) {
      Slab s{arity_in, t, offset, b.tuples(arity_in, t).size(),
             t >= 1 ? b.tuples(arity_out, t - 1).size() : 0};
      offset += static_cast<int>(s.inputs * s.outputs);
      slabs_.push_back(s);
    }
  }
  total_ = offset;
}

const TrivialityUnknowns::Slab* TrivialityUnknowns::slab(int arity_in, int degree) const {
  if (degree < 0 || degree > window_) return nullptr;
  const std::size_t base = arity_in == 2 ? 0 : static_cast<std::size_t>(window_) + 1;
  return &slabs_[base + static_cast<std::size_t>(degree)];
}

int TrivialityUnknowns::id(const Tuple& input, const Tuple& output) const {
  const Slab* s = slab(static_cast<int>(input.size()), b_.degree(input));
  if (!s || s->outputs == 0) return -1;
  return s->offset + static_cast<int>(b_.position(input) * s->outputs + b_.position(output));
}

Tridegree TrivialityUnknowns::part_of(int id) const { return id < split_ ? kPsi21 : kPsi12; }

std::pair<Tuple, Tuple> TrivialityUnknowns::decode(int id) const {
  const Slab* hit = nullptr;
  for (const auto& s : slabs_)
    if (id >= s.offset && id < s.offset + static_cast<int>(s.inputs * s.outputs)) hit = &s;
  if (!hit) throw ContractViolation("unknown id out of range");
  const auto local = static_cast<std::size_t>(id - hit->offset);
  const Tuple& in = b_.tuples(hit->arity_in, hit->degree)[local / hit->outputs];
  const Tuple& out = b_.tuples(3 - hit->arity_in, hit->degree - 1)[local % hit->outputs];
  return {in, out};
}

std::string TrivialityUnknowns::name(int id) const {
  const auto [in, out] = decode(id);
  return std::string(id < split_ ? "psi21(" : "psi12(") + render_tuple(in, b_) + " -> " + render_tuple(out, b_) +
         ")";
}

std::string contribution_label(const Tridegree& component, Tridegree part) {
  const char* op = component.m > part.m ? "∂" : component.n > part.n ? "δ" : "∇";
  return std::string(op) + (part.m == 2 ? "ψ₂¹" : "ψ₁²");
}

// ---- assembly ----

namespace {

// ψ₂¹ or ψ₁² with one unknown per output coordinate.
Part<Symbols> symbolic_part(const GradedBasis& b, const TrivialityUnknowns& u, const Tridegree& deg) {
  return memoize(Part<Symbols>{deg, [&b, &u, deg](const Tuple& x) {
                                 LinComb<Symbols> out(deg.n);
                                 const int t = b.degree(x) - 1;
                                 if (t < 0) return out;
                                 for (const auto& y : b.tuples(deg.n, t)) {
                                   const int id = u.id(x, y);
                                   if (id < 0) throw WindowViolation("ψ is needed on " + render_tuple(x, b) +
                                                                     ", outside the triviality window");
                                   out.add(y, Symbols{{id}});
                                 }
                                 return out;
                               }});
}

struct Assembly {
  std::vector<EquationRow> rows;
};

Assembly assemble(const GSHost& host, const GSCochain& omega, const TrivialityUnknowns& u, int window) {
  const auto& b = host.B();
  const Part<Symbols> f21 = symbolic_part(b, u, kPsi21);
  const Part<Symbols> f12 = symbolic_part(b, u, kPsi12);

  struct Component {
    Tridegree deg;
    std::vector<Part<Symbols>> terms;
  };
  std::vector<Component> comps{{{-1, 3, 1}, {gs_partial(host, f21)}},
                               {{-1, 2, 2}, {gs_partial(host, f12), gs_delta(host, f21)}},
                               {{-1, 1, 3}, {gs_delta(host, f12)}}};
  if (host.has_differential()) {
    comps.push_back({{0, 2, 1}, {nabla(host, f21)}});
    comps.push_back({{0, 1, 2}, {nabla(host, f12)}});
  }

  Assembly a;
  for (const auto& c : comps) {
    const MultiMap* w = omega.find(c.deg);
    for (int t = 0; t <= window; ++t) {
      if (t + c.deg.p < 0) continue;
      for (const auto& x : b.tuples(c.deg.m, t)) {
        LinComb<Symbols> v(c.deg.n);
        for (const auto& term : c.terms) v += term.eval(x);
        const Element rhs = w ? w->apply(x) : Element(c.deg.n);
        std::map<Tuple, EquationRow> here;
        for (const auto& [y, s] : v.terms()) here[y] = EquationRow{c.deg, x, y, s.ids, false};
        for (const auto& [y, bit] : rhs.terms()) {
          auto it = here.find(y);
          if (it == here.end()) it = here.emplace(y, EquationRow{c.deg, x, y, {}, false}).first;
          it->second.rhs = true;
        }
        for (auto& [y, row] : here) a.rows.push_back(std::move(row));
      }
    }
  }
  return a;
}

SparseSystem system_of(const std::vector<EquationRow>& rows, const std::vector<std::size_t>& pick, int unknowns,
                       BitVector& rhs) {
  std::vector<std::vector<std::size_t>> cols(static_cast<std::size_t>(unknowns));
  rhs = BitVector(pick.size());
  for (std::size_t r = 0; r < pick.size(); ++r) {
    const auto& row = rows[pick[r]];
    for (int id : row.unknowns) cols[static_cast<std::size_t>(id)].push_back(r);
    if (row.rhs) rhs.set(r);
  }
  return SparseSystem(pick.size(), std::move(cols));
}

bool feasible(const std::vector<EquationRow>& rows, const std::vector<std::size_t>& pick, int unknowns) {
  SparseEliminator e(static_cast<std::size_t>(unknowns));
  for (auto r : pick) {
    const auto& row = rows[r];
    if (!e.add(std::vector<std::size_t>(row.unknowns.begin(), row.unknowns.end()), row.rhs)) return false;
  }
  return true;
}

// Irreducible infeasible set of (component, input) groups inside `pick`.
std::vector<std::size_t> minimize(const std::vector<EquationRow>& rows, std::vector<std::size_t> pick,
                                  int unknowns, const GradedBasis& b) {
  std::map<std::pair<Tridegree, Tuple>, std::vector<std::size_t>> groups;
  for (auto r : pick) groups[{rows[r].component, rows[r].input}].push_back(r);
  // Try to drop low-degree groups first, so the surviving contradiction sits as high as possible.
  std::vector<std::pair<Tridegree, Tuple>> order;
  for (const auto& [k, v] : groups) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    return b.degree(x.second) < b.degree(y.second);
  });
  std::set<std::pair<Tridegree, Tuple>> kept(order.begin(), order.end());
  for (const auto& g : order) {
    kept.erase(g);
    std::vector<std::size_t> trial;
    for (const auto& k : kept) trial.insert(trial.end(), groups[k].begin(), groups[k].end());
    if (feasible(rows, trial, unknowns)) kept.insert(g);
  }
  // Within the surviving groups keep only the rows used by a left certificate.
  std::vector<std::size_t> rest;
  for (const auto& k : kept) rest.insert(rest.end(), groups[k].begin(), groups[k].end());
  std::sort(rest.begin(), rest.end());
  BitVector rhs;
  const SparseSystem s = system_of(rows, rest, unknowns, rhs);
  const auto y = s.infeasibility_certificate(rhs);
  if (!y) throw ContractViolation("minimized subsystem lost its contradiction");
  std::vector<std::size_t> out;
  for (auto i : y->support()) out.push_back(rest[i]);
  return out;
}

}  // namespace

// ---- certificate ----

std::vector<std::string> landing_labels(const Tridegree& component) {
  std::vector<std::string> out;
  for (const Tridegree part : {Tridegree{-1, 2, 1}, Tridegree{-1, 1, 2}}) {
    for (const Tridegree target : {Tridegree{part.p + 1, part.m, part.n}, Tridegree{part.p, part.m + 1, part.n},
                                   Tridegree{part.p, part.m, part.n + 1}}) {
      if (target == component) out.push_back(contribution_label(component, part));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string TrivialityCertificate::text(const GradedBasis& b, const TrivialityUnknowns& u) const {
  std::ostringstream out;
  out << "# GS triviality certificate: these equations of D(psi) = omega sum to 0 = 1\n";
  out << "# rows: " << rows.size() << ", largest input degree: " << degree << '\n';
  out << "# psi21(x*y -> z) is the coefficient of z in psi21(x*y); psi12(x -> y*z) likewise; {} is no unknown\n";
  for (const auto& r : rows) {
    std::map<std::string, std::vector<std::string>> by_label;
    for (const auto& label : landing_labels(r.component)) by_label[label];
    for (int id : r.unknowns) by_label[contribution_label(r.component, u.part_of(id))].push_back(u.name(id));
    std::string lhs;
    for (const auto& [label, names] : by_label) {
      if (!lhs.empty()) lhs += " + ";
      lhs += label + "{";
      for (std::size_t i = 0; i < names.size(); ++i) lhs += (i ? " + " : "") + names[i];
      lhs += "}";
    }
    out << "equation " << b.degree(r.input) << " : " << render_tuple(r.input, b, " ") << " : coefficient of "
        << render_tuple(r.output, b) << " in omega^{" << r.component.n << "," << r.component.m << "} : " << lhs
        << " = " << (r.rhs ? 1 : 0) << '\n';
  }
  return out.str();
}

bool TrivialityCertificate::mentions(const Tuple& input, const std::string& part_label) const {
  for (const auto& r : rows) {
    if (r.input != input) continue;
    for (const auto& label : landing_labels(r.component))
      if (label == part_label) return true;
  }
  return false;
}

// ---- decision ----

TrivialityResult decide_triviality(const GSHost& host, const GSCochain& omega, int window) {
  TrivialityResult res;
  const auto& b = host.B();
  const int limit = gs_window(host, -1);
  if (window < 0 || window > limit) window = limit;
  res.window = window;
  if (const auto r = omega.total_degree(); r && *r != 2)
    throw AlgebraError("omega has total degree " + std::to_string(*r) + ", expected 2");
  const RunReport cocycle = is_gs_2cocycle(host, omega, window);
  if (!cocycle.passed()) {
    const Check* bad = cocycle.first_failure();
    throw AlgebraError("omega is not a GS 2-cocycle: " + (bad ? bad->name + " fails " + bad->witness : ""));
  }
  res.report.add("omega is a GS 2-cocycle", true);

  // With d ≠ 0, ∇ψ reads ψ one degree higher than its input.
  const int unknown_window = window + (host.has_differential() ? 1 : 0);
  if (unknown_window > b.cap() + 1) throw WindowViolation("triviality window exceeds the cap");
  res.unknowns.emplace(b, unknown_window);
  const TrivialityUnknowns& u = *res.unknowns;
  const Assembly a = assemble(host, omega, u, window);
  res.report.note("window: inputs of total degree <= " + std::to_string(window) + ", unknowns: " +
                  std::to_string(u.count()) + ", equations: " + std::to_string(a.rows.size()));

  // Rows in input-degree order: the first contradiction marks the smallest infeasible graded subsystem.
  std::vector<std::size_t> order(a.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return b.degree(a.rows[x].input) < b.degree(a.rows[y].input);
  });
  SparseEliminator elim(static_cast<std::size_t>(u.count()));
  std::optional<int> t_min;
  for (auto i : order) {
    const auto& row = a.rows[i];
    if (!elim.add(std::vector<std::size_t>(row.unknowns.begin(), row.unknowns.end()), row.rhs)) {
      t_min = b.degree(row.input);
      break;
    }
  }
  std::optional<BitVector> sol;
  if (!t_min) {
    sol = elim.solution();
    res.report.note("rank: " + std::to_string(elim.rank()));
  }

  if (sol) {
    res.psi = GSCochain(host.basis());
    for (auto id : sol->support()) {
      const auto [in, out] = u.decode(static_cast<int>(id));
      MultiMap& f = res.psi.part(u.part_of(static_cast<int>(id)));
      Element v = f.apply(in);
      toggle(v, out);
      f.set(in, v);
    }
    // Re-check D(ψ) = ω with ψ extended by zero beyond the window.
    const LazyCochain<bool> D = total_D(host, lazy(res.psi));
    std::optional<std::string> bad;
    for (const auto& [deg, f] : D) {
      const MultiMap* w = omega.find(deg);
      const Part<bool> target = w ? lazy(*w) : Part<bool>{deg, [deg](const Tuple&) { return Element(deg.n); }};
      if (auto diff = first_difference(host, f, target, window)) {
        bad = to_string(deg) + " " + *diff;
        break;
      }
    }
    res.report.add("D(ψ) = ω after extension by zero", !bad, bad.value_or(""));
    if (host.has_differential()) {
      res.verdict = Verdict::Inconclusive;
      res.report.inconclusive("triviality", "a solution exists on the window, but d couples it to higher degrees");
    } else {
      res.verdict = bad ? Verdict::Inconclusive : Verdict::Trivial;
    }
    return res;
  }

  std::vector<std::size_t> graded;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (b.degree(a.rows[i].input) <= *t_min) graded.push_back(i);
  TrivialityCertificate cert;
  cert.degree = *t_min;
  for (auto i : minimize(a.rows, graded, u.count(), b)) cert.rows.push_back(a.rows[i]);
  std::sort(cert.rows.begin(), cert.rows.end(), [&](const EquationRow& x, const EquationRow& y) {
    return std::tuple(b.degree(x.input), x.component, x.input, x.output) <
           std::tuple(b.degree(y.input), y.component, y.input, y.output);
  });
  res.report.add("no ψ with D(ψ) = ω", true,
                 std::to_string(cert.rows.size()) + " contradictory equations through input degree " +
                     std::to_string(*t_min));
  res.certificate_text = cert.text(b, u);
  res.certificate = std::move(cert);
  res.verdict = Verdict::NonTrivial;
  return res;
}

bool satisfies_equations(const GSHost& host, const GSCochain& omega, const GSCochain& psi, int window) {
  const int limit = gs_window(host, -1);
  if (window < 0 || window > limit) window = limit;
  const TrivialityUnknowns u(host.B(), window + (host.has_differential() ? 1 : 0));
  const Assembly a = assemble(host, omega, u, window);
  BitVector x(static_cast<std::size_t>(u.count()));
  for (const auto& [deg, f] : psi.parts) {
    if (!(deg == kPsi21 || deg == kPsi12)) {
      if (!f.is_zero()) return false;
      continue;
    }
    for (const auto& [in, v] : f.table()) {
      for (const auto& [out, bit] : v.terms()) {
        const int id = u.id(in, out);
        if (id < 0) return false;
        x.set(static_cast<std::size_t>(id));
      }
    }
  }
  for (const auto& row : a.rows) {
    bool sum = false;
    for (int id : row.unknowns) sum ^= x.get(static_cast<std::size_t>(id));
    if (sum != row.rhs) return false;
  }
  return true;
}

}  // namespace gsdeform
