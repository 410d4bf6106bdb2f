#include "gsdeform/gs_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsdeform {

std::string to_string(const Tridegree& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
}

void coeff_add(Symbols& a, const Symbols& b) {
  std::vector<int> out;
  out.reserve(a.ids.size() + b.ids.size());
  std::set_symmetric_difference(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(), std::back_inserter(out));
  a.ids = std::move(out);
}

GSHost::GSHost(std::shared_ptr<const Presentation> host) : host_(std::move(host)) {
  if (!host_->delta) throw AlgebraError("the GS complex needs a coproduct on the host");
}

Element GSHost::product(const Tuple& xs) const {
  if (xs.empty()) return element_of({host_->unit});
  Element cur = element_of({xs.front()});
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const int y = xs[i];
    cur = map_terms(cur, 1, [&](const Tuple& t) { return host_->mu.apply(Tuple{t[0], y}); });
  }
  return cur;
}

Element GSHost::iterated_coproduct(int x, int n) const {
  if (n < 1) throw ContractViolation("iterated_coproduct needs n >= 1");
  if (n == 1) return element_of({x});
  {
    std::lock_guard lock(mutex_);
    if (auto it = coproducts_.find({x, n}); it != coproducts_.end()) return it->second;
  }
  // Δ^{(n)} = (Δ ⊗ 1^{n−2}) Δ^{(n−1)}; coassociativity makes the bracketing irrelevant.
  const Element prev = iterated_coproduct(x, n - 1);
  const Element out = apply_at(*host_->delta, prev, 0);
  std::lock_guard lock(mutex_);
  coproducts_.emplace(std::pair{x, n}, out);
  return out;
}

namespace {

Element cached(std::mutex& mutex, std::map<Tuple, Element>& cache, const Tuple& key, auto&& compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Element v = compute();
  std::lock_guard lock(mutex);
  cache.emplace(key, v);
  return v;
}

}  // namespace

Element GSHost::lambda_lower(const Tuple& x) const {
  if (x.empty()) throw ContractViolation("lambda_m needs m >= 1");
  return cached(mutex_, lambda_lower_, x, [&] {
    const std::size_t m = x.size();
    Element all = scalar_one();
    for (int xi : x) all = tensor(all, host_->delta->apply(Tuple{xi}));
    Element out(static_cast<int>(m) + 1);
    for (const auto& [u, bit] : all.terms()) {
      Tuple left, right;
      for (std::size_t i = 0; i < m; ++i) {
        left.push_back(u[2 * i]);
        right.push_back(u[2 * i + 1]);
      }
      out += tensor(product(left), element_of(right));
    }
    return out;
  });
}

Element GSHost::rho_lower(const Tuple& x) const {
  if (x.empty()) throw ContractViolation("rho_m needs m >= 1");
  return cached(mutex_, rho_lower_, x, [&] {
    const std::size_t m = x.size();
    Element all = scalar_one();
    for (int xi : x) all = tensor(all, host_->delta->apply(Tuple{xi}));
    Element out(static_cast<int>(m) + 1);
    for (const auto& [u, bit] : all.terms()) {
      Tuple left, right;
      for (std::size_t i = 0; i < m; ++i) {
        left.push_back(u[2 * i]);
        right.push_back(u[2 * i + 1]);
      }
      out += tensor(element_of(left), product(right));
    }
    return out;
  });
}

Element GSHost::lambda_upper(int a, const Tuple& y) const {
  if (y.empty()) throw ContractViolation("lambda^n needs n >= 1");
  Tuple key{a};
  key.insert(key.end(), y.begin(), y.end());
  return cached(mutex_, lambda_upper_, key, [&] {
    const int n = static_cast<int>(y.size());
    Element out(n);
    const Element split = iterated_coproduct(a, n);
    for (const auto& [v, bit] : split.terms()) {
      Element e = scalar_one();
      for (std::size_t i = 0; i < y.size(); ++i) e = tensor(e, host_->mu.apply(Tuple{v[i], y[i]}));
      out += e;
    }
    return out;
  });
}

Element GSHost::rho_upper(const Tuple& y, int a) const {
  if (y.empty()) throw ContractViolation("rho^n needs n >= 1");
  Tuple key = y;
  key.push_back(a);
  return cached(mutex_, rho_upper_, key, [&] {
    const int n = static_cast<int>(y.size());
    Element out(n);
    const Element split = iterated_coproduct(a, n);
    for (const auto& [v, bit] : split.terms()) {
      Element e = scalar_one();
      for (std::size_t i = 0; i < y.size(); ++i) e = tensor(e, host_->mu.apply(Tuple{y[i], v[i]}));
      out += e;
    }
    return out;
  });
}

Element GSHost::d_tensor_at(const Tuple& t) const { return d_tensor(*host_, element_of(t)); }

Element GSHost::mu_tensor_at(const Tuple& t) const {
  Element out(static_cast<int>(t.size()) - 1);
  for (std::size_t s = 0; s + 1 < t.size(); ++s) out += apply_at(host_->mu, t, s);
  return out;
}

Element GSHost::delta_tensor_at(const Tuple& t) const {
  Element out(static_cast<int>(t.size()) + 1);
  for (std::size_t s = 0; s < t.size(); ++s) out += apply_at(*host_->delta, t, s);
  return out;
}

MultiMap comodule_action(const GSHost& host, Side side, int m, int window) {
  if (m < 1) throw ContractViolation("comodule_action needs m >= 1");
  MultiMap out(host.basis(), host.basis(), m, m + 1, 0);
  for (int t = 0; t <= std::min(window, host.B().cap()); ++t)
    for (const auto& x : host.B().tuples(m, t))
      out.set(x, side == Side::Left ? host.lambda_lower(x) : host.rho_lower(x));
  return out;
}

MultiMap module_action(const GSHost& host, Side side, int n, int window) {
  if (n < 1) throw ContractViolation("module_action needs n >= 1");
  MultiMap out(host.basis(), host.basis(), n + 1, n, 0);
  const auto un = static_cast<std::size_t>(n);
  for (int t = 0; t <= std::min(window, host.B().cap()); ++t)
    for (const auto& x : host.B().tuples(n + 1, t))
      out.set(x, side == Side::Left ? host.lambda_upper(x.front(), detail::slice(x, 1, un + 1))
                                    : host.rho_upper(detail::slice(x, 0, un), x.back()));
  return out;
}

// ---- tabulated cochains ----

bool GSCochain::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::optional<int> GSCochain::total_degree() const {
  std::optional<int> r;
  for (const auto& [deg, f] : parts) {
    if (f.is_zero()) continue;
    const int here = deg.p + deg.m + deg.n - 1;
    if (r && *r != here) throw ContractViolation("cochain parts have different total degrees");
    r = here;
  }
  return r;
}

MultiMap& GSCochain::part(const Tridegree& deg) {
  auto it = parts.find(deg);
  if (it == parts.end()) it = parts.emplace(deg, MultiMap(basis, basis, deg.m, deg.n, deg.p)).first;
  return it->second;
}

const MultiMap* GSCochain::find(const Tridegree& deg) const {
  auto it = parts.find(deg);
  return it == parts.end() ? nullptr : &it->second;
}

GSCochain& GSCochain::operator+=(const GSCochain& other) {
  if (!basis) basis = other.basis;
  for (const auto& [deg, f] : other.parts) {
    MultiMap& mine = part(deg);
    for (const auto& [in, v] : f.table()) mine.add(in, v);
  }
  return *this;
}

Part<bool> lazy(const MultiMap& f) {
  return {{f.degree(), f.inputs(), f.outputs()}, [f](const Tuple& x) { return f.apply(x); }};
}

LazyCochain<bool> lazy(const GSCochain& c) {
  LazyCochain<bool> out;
  for (const auto& [deg, f] : c.parts) out.emplace(deg, lazy(f));
  return out;
}

namespace {

// Input degrees t ≤ window whose outputs t + p land in [0, cap].
template <class F>
void for_inputs(const GSHost& host, const Tridegree& deg, int window, F&& fn) {
  const int cap = host.B().cap();
  for (int t = std::max(0, -deg.p); t <= window && t + deg.p <= cap; ++t)
    for (const auto& x : host.B().tuples(deg.m, t))
      if (!fn(x)) return;
}

}  // namespace

MultiMap materialize(const GSHost& host, const Part<bool>& f, int window) {
  MultiMap out(host.basis(), host.basis(), f.deg.m, f.deg.n, f.deg.p);
  for_inputs(host, f.deg, window, [&](const Tuple& x) {
    out.set(x, f.eval(x));
    return true;
  });
  return out;
}

GSCochain materialize(const GSHost& host, const LazyCochain<bool>& c, int window) {
  GSCochain out(host.basis());
  for (const auto& [deg, f] : c) out.parts.emplace(deg, materialize(host, f, window));
  return out;
}

std::optional<std::string> first_difference(const GSHost& host, const Part<bool>& a, const Part<bool>& b,
                                            int window) {
  if (!(a.deg == b.deg)) throw ContractViolation("first_difference: tridegrees differ");
  std::optional<std::string> witness;
  for_inputs(host, a.deg, window, [&](const Tuple& x) {
    const Element l = a.eval(x);
    const Element r = b.eval(x);
    if (l == r) return true;
    witness = "at " + render_tuple(x, host.B()) + ": lhs = " + render(l, host.B()) + ", rhs = " + render(r, host.B());
    return false;
  });
  return witness;
}

int gs_window(const GSHost& host, int p) {
  return safe_window(host.presentation(), std::max(0, p + (host.has_differential() ? 1 : 0)));
}

// ---- 2-cocycle test ----

namespace {

constexpr Tridegree k13{-1, 3, 1};
constexpr Tridegree k22{-1, 2, 2};
constexpr Tridegree k31{-1, 1, 3};

Part<bool> zero_part(const Tridegree& deg) {
  return {deg, [deg](const Tuple&) { return Element(deg.n); }};
}

Part<bool> part_or_zero(const GSCochain& c, const Tridegree& deg) {
  const MultiMap* f = c.find(deg);
  return f ? lazy(*f) : zero_part(deg);
}

}  // namespace

RunReport is_gs_2cocycle(const GSHost& host, const GSCochain& omega, int window) {
  RunReport r("gs-cocycle");
  for (const auto& [deg, f] : omega.parts) {
    if (f.is_zero()) continue;
    if (!(deg == k13 || deg == k22 || deg == k31)) {
      r.add("omega has 2-cochain tridegrees", false, "unexpected part in tridegree " + to_string(deg));
      return r;
    }
  }
  const int limit = gs_window(host, -1);
  if (window < 0 || window > limit) window = limit;
  r.note("input window: total degree <= " + std::to_string(window));

  const Part<bool> w13 = part_or_zero(omega, k13);
  const Part<bool> w22 = part_or_zero(omega, k22);
  const Part<bool> w31 = part_or_zero(omega, k31);

  auto component = [&](const std::string& name, const Part<bool>& lhs, const Part<bool>& rhs) {
    const auto w = first_difference(host, lhs, rhs, window);
    r.add(name, !w, w.value_or(""));
    return !w;
  };
  bool parts_ok = true;
  parts_ok &= component("∂ω^{1,3} = 0", gs_partial(host, w13), zero_part({-1, 4, 1}));
  parts_ok &= component("∂ω^{2,2} = δω^{1,3}", gs_partial(host, w22), gs_delta(host, w13));
  parts_ok &= component("∂ω^{3,1} = δω^{2,2}", gs_partial(host, w31), gs_delta(host, w22));
  parts_ok &= component("δω^{3,1} = 0", gs_delta(host, w31), zero_part({-1, 1, 4}));
  if (host.has_differential()) {
    parts_ok &= component("∇ω^{1,3} = 0", nabla(host, w13), zero_part({0, 3, 1}));
    parts_ok &= component("∇ω^{2,2} = 0", nabla(host, w22), zero_part({0, 2, 2}));
    parts_ok &= component("∇ω^{3,1} = 0", nabla(host, w31), zero_part({0, 1, 3}));
  }

  // Same question through the total differential.
  const LazyCochain<bool> D = total_D(host, LazyCochain<bool>{{k13, w13}, {k22, w22}, {k31, w31}});
  std::optional<std::string> total_witness;
  for (const auto& [deg, f] : D) {
    if (const auto w = first_difference(host, f, zero_part(deg), window)) {
      total_witness = "component " + to_string(deg) + " " + *w;
      break;
    }
  }
  r.add("D(ω) = 0", !total_witness, total_witness.value_or(""));
  r.add("componentwise and total tests agree", parts_ok == !total_witness,
        parts_ok ? "components vanish but D(ω) does not" : "a component fails but D(ω) vanishes");
  return r;
}

RunReport is_gs_2cocycle(const GSHost& host, const MultiMap& w13, const MultiMap& w22, const MultiMap& w31,
                         int window) {
  GSCochain c(host.basis());
  for (const MultiMap* f : {&w13, &w22, &w31}) {
    const Tridegree deg{f->degree(), f->inputs(), f->outputs()};
    c.parts.insert_or_assign(deg, *f);
  }
  return is_gs_2cocycle(host, c, window);
}

// ---- cochain files ----

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "expected an integer, found '" + s + "'");
}

}  // namespace

GSCochain parse_cochain(const std::string& text, const BasisPtr& basis) {
  static const std::set<std::string> keywords{"omega", "psi", "phi", "f"};
  GSCochain c(basis);
  std::map<std::pair<int, int>, int> part_degree;  // (m, n) → p
  std::optional<int> total;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (words(raw).empty()) continue;
    const auto colon = raw.find(':');
    const auto arrow = raw.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(line, "expected '<keyword> <n> <m> : <inputs> -> <element>'");
    const auto head = words(raw.substr(0, colon));
    if (head.size() != 3) throw ParseError(line, "expected '<keyword> <n> <m>' before ':'");
    if (!keywords.count(head[0])) throw ParseError(line, "unknown directive '" + head[0] + "'");
    const int n = to_int(head[1], line);
    const int m = to_int(head[2], line);
    if (n < 1 || m < 1) throw ParseError(line, "arities must be positive");
    const auto names = words(raw.substr(colon + 1, arrow - colon - 1));
    if (static_cast<int>(names.size()) != m)
      throw ParseError(line, "expected " + std::to_string(m) + " input names, found " + std::to_string(names.size()));
    Tuple input;
    Element value(n);
    try {
      for (const auto& nm : names) input.push_back(basis->index_of(nm));
      value = parse_element(raw.substr(arrow + 2), *basis, n);
    } catch (const AlgebraError& e) {
      throw ParseError(line, e.what());
    }
    if (value.is_zero()) continue;
    const auto out_deg = homogeneous_degree(value, *basis);
    if (!out_deg) throw ParseError(line, "value is not homogeneous");
    const int p = *out_deg - basis->degree(input);
    auto [it, fresh] = part_degree.emplace(std::pair{m, n}, p);
    if (!fresh && it->second != p)
      throw ParseError(line, "entry has degree " + std::to_string(p) + " but earlier entries of this part have " +
                                 std::to_string(it->second));
    if (total && *total != p + m + n - 1)
      throw ParseError(line, "entry has total degree " + std::to_string(p + m + n - 1) + " but the cochain has " +
                                 std::to_string(*total));
    total = p + m + n - 1;
    MultiMap& f = c.part({p, m, n});
    if (f.find(input)) throw ParseError(line, "duplicate entry for " + render_tuple(input, *basis, " "));
    f.set(input, value);
  }
  return c;
}

std::string emit_cochain(const GSCochain& c, const std::string& keyword) {
  std::ostringstream out;
  for (const auto& [deg, f] : c.parts) {
    for (const auto& [in, v] : f.table()) {
      out << keyword << ' ' << deg.n << ' ' << deg.m << " : " << render_tuple(in, *c.basis, " ") << " -> "
          << render(v, *c.basis) << '\n';
    }
  }
  return out.str();
}

}  // namespace gsdeform
