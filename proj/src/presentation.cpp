#include "gsdeform/presentation.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace gsdeform {

Presentation::Presentation(BasisPtr b, int unit_index)
    : basis(std::move(b)),
      unit(unit_index),
      d(basis, basis, 1, 1, 1),
      mu(basis, basis, 2, 1, 0) {
  if (basis->degree(unit) != 0) throw AlgebraError("unit must have degree 0");
}

void Presentation::complete_unit_laws(bool with_delta) {
  if (with_delta && !delta) delta.emplace(basis, basis, 1, 2, 0);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const int x = static_cast<int>(i);
    if (!mu.find({unit, x})) mu.set({unit, x}, element_of({x}));
    if (!mu.find({x, unit})) mu.set({x, unit}, element_of({x}));
    if (delta && !delta->find({x})) {
      Element v(2);
      v.add({unit, x}, true);
      v.add({x, unit}, true);
      if (x == unit) v = element_of({unit, unit});
      delta->set({x}, v);
    }
  }
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string join(const std::vector<std::string>& toks, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (i > from) s += ' ';
    s += toks[i];
  }
  return s;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, found '" + s + "'");
  }
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto toks = split_ws(raw);
      if (!toks.empty()) lines.push_back({n, std::move(toks)});
    }
  }

  std::optional<int> field, cap;
  std::vector<BasisElement> elements;
  std::optional<std::pair<int, std::string>> unit_line;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "field") {
      if (t.size() != 2) throw ParseError(l.number, "usage: field 2");
      field = parse_int(t[1], l.number);
      if (*field != 2) throw ParseError(l.number, "only field 2 is supported");
    } else if (t[0] == "cap") {
      if (t.size() != 2) throw ParseError(l.number, "usage: cap <int>");
      cap = parse_int(t[1], l.number);
    } else if (t[0] == "basis") {
      if (t.size() != 3) throw ParseError(l.number, "usage: basis <name> <degree>");
      elements.push_back({t[1], parse_int(t[2], l.number)});
    } else if (t[0] == "unit") {
      if (t.size() != 2) throw ParseError(l.number, "usage: unit <name>");
      unit_line = {l.number, t[1]};
    } else if (t[0] != "d" && t[0] != "mu" && t[0] != "delta" && t[0] != "E") {
      throw ParseError(l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!field) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'field 2'");
  if (!cap) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'cap'");
  if (!unit_line) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'unit'");

  BasisPtr basis;
  try {
    basis = std::make_shared<GradedBasis>(std::move(elements), *cap);
  } catch (const AlgebraError& e) {
    throw ParseError(lines.front().number, e.what());
  }
  const auto unit = basis->find(unit_line->second);
  if (!unit) throw ParseError(unit_line->first, "unknown basis name '" + unit_line->second + "'");
  if (basis->degree(*unit) != 0) throw ParseError(unit_line->first, "unit must have degree 0");

  Presentation p(basis, *unit);
  bool any_delta = false;
  std::set<std::string> seen;
  for (const auto& l : lines) {
    const auto& t = l.tokens;
    if (t[0] != "d" && t[0] != "mu" && t[0] != "delta" && t[0] != "E") continue;
    std::size_t eq = 0;
    while (eq < t.size() && t[eq] != "=") ++eq;
    if (eq == t.size() || eq + 1 == t.size()) throw ParseError(l.number, "expected '= <element>'");
    const std::string rhs = join(t, eq + 1);
    try {
      auto name = [&](std::size_t i) { return basis->index_of(t[i]); };
      std::string key = join(std::vector<std::string>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(eq)), 0);
      if (!seen.insert(key).second) throw ParseError(l.number, "duplicate entry '" + key + "'");
      if (t[0] == "d") {
        if (eq != 2) throw ParseError(l.number, "usage: d <name> = <element>");
        p.d.set({name(1)}, parse_element(rhs, *basis, 1));
      } else if (t[0] == "mu") {
        if (eq != 3) throw ParseError(l.number, "usage: mu <name> <name> = <element>");
        p.mu.set({name(1), name(2)}, parse_element(rhs, *basis, 1));
      } else if (t[0] == "delta") {
        if (eq != 2) throw ParseError(l.number, "usage: delta <name> = <element>");
        if (!p.delta) p.delta.emplace(basis, basis, 1, 2, 0);
        any_delta = true;
        p.delta->set({name(1)}, parse_element(rhs, *basis, 2));
      } else {
        if (eq < 6 || t[1] != "1" || t[4] != ";")
          throw ParseError(l.number, "usage: E 1 <q> <name> ; <name> ... <name> = <element>");
        const int q = parse_int(t[2], l.number);
        if (q < 1 || static_cast<int>(eq) - 5 != q)
          throw ParseError(l.number, "E 1 " + t[2] + " needs exactly " + t[2] + " names after ';'");
        Tuple in{name(3)};
        for (std::size_t i = 5; i < eq; ++i) in.push_back(name(i));
        auto it = p.E.try_emplace(q, basis, basis, 1 + q, 1, -q).first;
        it->second.set(in, parse_element(rhs, *basis, 1));
      }
    } catch (const AlgebraError& e) {
      throw ParseError(l.number, e.what());
    }
  }
  p.complete_unit_laws(any_delta);
  return p;
}

std::string emit_presentation(const Presentation& p) {
  const auto& b = p.B();
  std::ostringstream out;
  out << "field 2\ncap " << b.cap() << '\n';
  for (std::size_t i = 0; i < b.size(); ++i) out << "basis " << b[i].name << ' ' << b[i].degree << '\n';
  out << "unit " << b.name(p.unit) << '\n';
  for (const auto& [in, v] : p.d.table()) out << "d " << b.name(in[0]) << " = " << render(v, b) << '\n';
  for (const auto& [in, v] : p.mu.table()) {
    if (in[0] == p.unit || in[1] == p.unit) continue;
    out << "mu " << b.name(in[0]) << ' ' << b.name(in[1]) << " = " << render(v, b) << '\n';
  }
  if (p.delta)
    for (const auto& [in, v] : p.delta->table()) out << "delta " << b.name(in[0]) << " = " << render(v, b) << '\n';
  for (const auto& [q, e] : p.E) {
    for (const auto& [in, v] : e.table()) {
      out << "E 1 " << q << ' ' << b.name(in[0]) << " ;";
      for (std::size_t i = 1; i < in.size(); ++i) out << ' ' << b.name(in[i]);
      out << " = " << render(v, b) << '\n';
    }
  }
  return out.str();
}

int safe_window(const Presentation& p, int shift) { return p.B().cap() - shift; }

Element d_tensor(const Presentation& p, const Element& e) {
  Element out(e.arity());
  for (int s = 0; s < e.arity(); ++s) out += apply_at(p.d, e, static_cast<std::size_t>(s));
  return out;
}

Element nabla_at(const Presentation& p, const MultiMap& f, const Tuple& in) {
  Element out = d_tensor(p, f.apply(in));
  out += f.apply(d_tensor(p, element_of(in)));
  return out;
}

Element delta_mu(const Presentation& p, const Tuple& xy) { return p.delta->apply(p.mu.apply(xy)); }

Element mumu_sigma_deltadelta(const Presentation& p, const Tuple& xy) {
  const Element dd = tensor(p.delta->apply(Tuple{xy[0]}), p.delta->apply(Tuple{xy[1]}));
  const Element s = sigma_permute(2, 2, dd);
  return apply_at(p.mu, apply_at(p.mu, s, 2), 0);
}

RunReport validate_dgha(const Presentation& p) {
  RunReport r("validate");
  const auto& b = p.B();
  const Element zero1(1);
  auto id = [](const Tuple& t) { return element_of(t); };
  r.add(check_identity("d^2 = 0", b, 1, safe_window(p, 2),
                       [&](const Tuple& x) { return p.d.apply(p.d.apply(x)); }, [&](const Tuple&) { return zero1; }));
  r.add(check_identity("d is a derivation of mu", b, 2, safe_window(p, 1),
                       [&](const Tuple& xy) { return p.d.apply(p.mu.apply(xy)); },
                       [&](const Tuple& xy) { return p.mu.apply(d_tensor(p, element_of(xy))); }));
  r.add(check_identity("mu is associative", b, 3, safe_window(p, 0),
                       [&](const Tuple& t) { return p.mu.apply(apply_at(p.mu, t, 0)); },
                       [&](const Tuple& t) { return p.mu.apply(apply_at(p.mu, t, 1)); }));
  r.add(check_identity("unit law", b, 1, safe_window(p, 0),
                       [&](const Tuple& x) { return p.mu.apply(Tuple{p.unit, x[0]}); }, id));
  r.add(check_identity("unit law (right)", b, 1, safe_window(p, 0),
                       [&](const Tuple& x) { return p.mu.apply(Tuple{x[0], p.unit}); }, id));
  if (!p.delta) return r;
  const auto& delta = *p.delta;
  r.add(check_identity("d is a coderivation of delta", b, 1, safe_window(p, 1),
                       [&](const Tuple& x) { return delta.apply(p.d.apply(x)); },
                       [&](const Tuple& x) { return d_tensor(p, delta.apply(x)); }));
  r.add(check_identity("delta is coassociative", b, 1, safe_window(p, 0),
                       [&](const Tuple& x) { return apply_at(delta, delta.apply(x), 0); },
                       [&](const Tuple& x) { return apply_at(delta, delta.apply(x), 1); }));
  auto counit = [&](const Element& e, int side) {
    Element out(1);
    for (const auto& [t, c] : e.terms())
      if (t[static_cast<std::size_t>(side)] == p.unit) out.add({t[static_cast<std::size_t>(1 - side)]}, true);
    return out;
  };
  r.add(check_identity("counit law", b, 1, safe_window(p, 0),
                       [&](const Tuple& x) { return counit(delta.apply(x), 0); }, id));
  r.add(check_identity("counit law (right)", b, 1, safe_window(p, 0),
                       [&](const Tuple& x) { return counit(delta.apply(x), 1); }, id));
  r.add(check_identity("Hopf compatibility", b, 2, safe_window(p, 0),
                       [&](const Tuple& xy) { return delta_mu(p, xy); },
                       [&](const Tuple& xy) { return mumu_sigma_deltadelta(p, xy); }));
  return r;
}

RunReport check_kk_order4(const Presentation& p, const MultiMap& w13, const MultiMap& w22, const MultiMap& w31) {
  RunReport r("kk-order4");
  if (w13.inputs() != 3 || w13.outputs() != 1 || w13.degree() != -1) throw AlgebraError("omega^{1,3} must be (3,1,-1)");
  if (w22.inputs() != 2 || w22.outputs() != 2 || w22.degree() != -1) throw AlgebraError("omega^{2,2} must be (2,2,-1)");
  if (w31.inputs() != 1 || w31.outputs() != 3 || w31.degree() != -1) throw AlgebraError("omega^{3,1} must be (1,3,-1)");
  if (!p.delta) throw AlgebraError("check_kk_order4 needs a coproduct");
  const auto& b = p.B();
  const auto& delta = *p.delta;
  const int w = safe_window(p, 1);
  r.add(check_identity("omega^{1,3} is an associator", b, 3, w, [&](const Tuple& t) { return nabla_at(p, w13, t); },
                       [&](const Tuple& t) { return p.mu.apply(apply_at(p.mu, t, 0) + apply_at(p.mu, t, 1)); }));
  r.add(check_identity("homotopy compatibility", b, 2, w, [&](const Tuple& t) { return nabla_at(p, w22, t); },
                       [&](const Tuple& t) { return mumu_sigma_deltadelta(p, t) + delta_mu(p, t); }));
  r.add(check_identity("omega^{3,1} is a coassociator", b, 1, w, [&](const Tuple& t) { return nabla_at(p, w31, t); },
                       [&](const Tuple& t) {
                         const Element dx = delta.apply(t);
                         return apply_at(delta, dx, 0) + apply_at(delta, dx, 1);
                       }));
  return r;
}

}  // namespace gsdeform
