#include "gsdeform/graded.hpp"

#include <sstream>

namespace gsdeform {

GradedBasis::GradedBasis(std::vector<BasisElement> elements, int cap)
    : elements_(std::move(elements)), cap_(cap) {
  if (cap_ < 0) throw AlgebraError("degree cap must be nonnegative");
  by_degree_.resize(static_cast<std::size_t>(cap_) + 1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (e.degree < 0) throw AlgebraError("basis element " + e.name + " has negative degree");
    if (e.degree > cap_) throw AlgebraError("basis element " + e.name + " exceeds the degree cap");
    if (!index_.emplace(e.name, static_cast<int>(i)).second)
      throw AlgebraError("duplicate basis name " + e.name);
    by_degree_[static_cast<std::size_t>(e.degree)].push_back(static_cast<int>(i));
  }
}

int GradedBasis::degree(const Tuple& t) const {
  int d = 0;
  for (int i : t) d += degree(i);
  return d;
}

std::optional<int> GradedBasis::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GradedBasis::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw AlgebraError("unknown basis name '" + name + "'");
  return *i;
}

const std::vector<int>& GradedBasis::of_degree(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d > cap_) return empty;
  return by_degree_[static_cast<std::size_t>(d)];
}

namespace {

void enumerate(const GradedBasis& b, int arity, int remaining, Tuple& prefix, std::vector<Tuple>& out) {
  if (arity == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int d = b[i].degree;
    if (d > remaining) continue;
    prefix.push_back(static_cast<int>(i));
    enumerate(b, arity - 1, remaining - d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Tuple>& GradedBasis::tuples(int arity, int total_degree) const {
  std::lock_guard lock(cache_mutex_);
  const auto key = std::make_pair(arity, total_degree);
  auto it = tuple_cache_.find(key);
  if (it != tuple_cache_.end()) return it->second;
  std::vector<Tuple> out;
  if (arity >= 0 && total_degree >= 0) {
    Tuple prefix;
    enumerate(*this, arity, total_degree, prefix, out);
  }
  return tuple_cache_.emplace(key, std::move(out)).first->second;
}

std::size_t GradedBasis::position(const Tuple& t) const {
  const auto& list = tuples(static_cast<int>(t.size()), degree(t));
  std::lock_guard lock(cache_mutex_);
  const auto key = std::make_pair(static_cast<int>(t.size()), degree(t));
  auto it = position_cache_.find(key);
  if (it == position_cache_.end()) {
    std::map<Tuple, std::size_t> pos;
    for (std::size_t i = 0; i < list.size(); ++i) pos.emplace(list[i], i);
    it = position_cache_.emplace(key, std::move(pos)).first;
  }
  return it->second.at(t);
}

Element element_of(const Tuple& t) {
  Element e(static_cast<int>(t.size()));
  e.add(t, true);
  return e;
}

Element scalar_one() { return element_of({}); }

void toggle(Element& e, const Tuple& t) { e.add(t, true); }

Element tensor(const Element& a, const Element& b) { return tensor_left(a, b); }

std::optional<int> homogeneous_degree(const Element& e, const GradedBasis& basis) {
  std::optional<int> deg;
  for (const auto& [t, c] : e.terms()) {
    const int d = basis.degree(t);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Tuple sigma_permute(int m, int n, const Tuple& t) {
  if (static_cast<int>(t.size()) != m * n) throw AlgebraError("sigma_permute: arity is not m*n");
  Tuple out(t.size());
  // Input: n blocks of length m. Output: m blocks of length n.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = t[static_cast<std::size_t>(j * m + i)];
  return out;
}

Element sigma_permute(int m, int n, const Element& e) {
  if (e.arity() != m * n) throw AlgebraError("sigma_permute: arity is not m*n");
  return map_terms(e, e.arity(), [&](const Tuple& t) { return element_of(sigma_permute(m, n, t)); });
}

std::string render_tuple(const Tuple& t, const GradedBasis& basis, const char* sep) {
  if (t.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += sep;
    s += basis.name(t[i]);
  }
  return s;
}

std::string render(const Element& e, const GradedBasis& basis) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [t, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += render_tuple(t, basis);
  }
  return s;
}

Element parse_element(const std::string& text, const GradedBasis& basis, int arity) {
  Element out(arity);
  std::istringstream in(text);
  std::string tok;
  std::vector<std::string> tokens;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  if (tokens.empty()) throw AlgebraError("empty element");
  bool expect_term = true;
  for (const auto& t : tokens) {
    if (expect_term) {
      Tuple tuple;
      std::size_t start = 0;
      while (true) {
        const auto star = t.find('*', start);
        const std::string name = t.substr(start, star == std::string::npos ? std::string::npos : star - start);
        if (name.empty()) throw AlgebraError("malformed term '" + t + "'");
        if (!(arity == 0 && name == "1" && tuple.empty() && star == std::string::npos))
          tuple.push_back(basis.index_of(name));
        if (star == std::string::npos) break;
        start = star + 1;
      }
      if (static_cast<int>(tuple.size()) != arity)
        throw AlgebraError("term '" + t + "' has arity " + std::to_string(tuple.size()) + ", expected " +
                           std::to_string(arity));
      out.add(tuple, true);
    } else if (t != "+") {
      throw AlgebraError("expected '+' but found '" + t + "'");
    }
    expect_term = !expect_term;
  }
  if (expect_term) throw AlgebraError("element ends with '+'");
  return out;
}

MultiMap::MultiMap(BasisPtr source, BasisPtr target, int inputs, int outputs, int degree)
    : source_(std::move(source)), target_(std::move(target)), m_(inputs), n_(outputs), p_(degree) {
  if (!source_ || !target_) throw AlgebraError("MultiMap needs source and target bases");
  if (m_ < 0 || n_ < 0) throw AlgebraError("negative arity");
}

MultiMap MultiMap::identity(const BasisPtr& basis) {
  MultiMap f(basis, basis, 1, 1, 0);
  for (std::size_t i = 0; i < basis->size(); ++i) f.set({static_cast<int>(i)}, element_of({static_cast<int>(i)}));
  return f;
}

void MultiMap::set(const Tuple& input, Element value) {
  if (static_cast<int>(input.size()) != m_) throw AlgebraError("MultiMap::set: input arity mismatch");
  if (value.arity() != n_) throw AlgebraError("MultiMap::set: output arity mismatch");
  const int want = source_->degree(input) + p_;
  for (const auto& [t, c] : value.terms()) {
    if (target_->degree(t) != want)
      throw AlgebraError("inhomogeneous entry at " + render_tuple(input, *source_) + ": " +
                         render_tuple(t, *target_) + " has degree " + std::to_string(target_->degree(t)) +
                         ", expected " + std::to_string(want));
  }
  if (value.is_zero()) {
    table_.erase(input);
  } else {
    table_[input] = std::move(value);
  }
}

void MultiMap::add(const Tuple& input, const Element& value) {
  Element cur = apply(input);
  cur += value;
  set(input, std::move(cur));
}

const Element* MultiMap::find(const Tuple& input) const {
  auto it = table_.find(input);
  return it == table_.end() ? nullptr : &it->second;
}

Element MultiMap::apply(const Tuple& input) const {
  if (static_cast<int>(input.size()) != m_) throw AlgebraError("MultiMap::apply: input arity mismatch");
  const int out_degree = source_->degree(input) + p_;
  if (out_degree > target_->cap())
    throw WindowViolation("value at " + render_tuple(input, *source_) + " needs degree " +
                          std::to_string(out_degree) + " above cap " + std::to_string(target_->cap()));
  if (const Element* e = find(input)) return *e;
  return Element(n_);
}

Element MultiMap::apply(const Element& e) const {
  if (e.arity() != m_) throw AlgebraError("MultiMap::apply: element arity mismatch");
  return map_terms(e, n_, [&](const Tuple& t) { return apply(t); });
}

Element apply(const MultiMap& f, const Element& e) { return f.apply(e); }

MultiMap hom_tensor(const MultiMap& f, const MultiMap& g) {
  if (f.source() != g.source() || f.target() != g.target()) throw AlgebraError("hom_tensor: bases differ");
  MultiMap out(f.source(), f.target(), f.inputs() + g.inputs(), f.outputs() + g.outputs(), f.degree() + g.degree());
  for (const auto& [a, fa] : f.table()) {
    for (const auto& [b, gb] : g.table()) {
      Tuple t = a;
      t.insert(t.end(), b.begin(), b.end());
      out.set(t, tensor(fa, gb));
    }
  }
  return out;
}

MultiMap compose(const MultiMap& f, const MultiMap& g) {
  if (g.outputs() != f.inputs()) throw AlgebraError("compose: arity mismatch");
  if (g.target() != f.source()) throw AlgebraError("compose: bases differ");
  MultiMap out(g.source(), f.target(), g.inputs(), f.outputs(), f.degree() + g.degree());
  for (const auto& [t, gt] : g.table()) out.set(t, f.apply(gt));
  return out;
}

Element apply_at(const MultiMap& f, const Tuple& t, std::size_t slot) {
  const auto m = static_cast<std::size_t>(f.inputs());
  if (slot + m > t.size()) throw AlgebraError("apply_at: slot out of range");
  const Tuple mid(t.begin() + static_cast<std::ptrdiff_t>(slot), t.begin() + static_cast<std::ptrdiff_t>(slot + m));
  Element out(static_cast<int>(t.size() - m) + f.outputs());
  if (f.source()->degree(mid) + f.degree() > f.target()->cap()) f.apply(mid);  // throws WindowViolation
  const Element* image = f.find(mid);
  if (!image) return out;
  for (const auto& [u, c] : image->terms()) {
    Tuple r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(slot));
    r.insert(r.end(), u.begin(), u.end());
    r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(slot + m), t.end());
    out.add(r, true);
  }
  return out;
}

BitMatrix as_matrix(const MultiMap& f, int input_degree) {
  if (input_degree + f.degree() > f.target()->cap())
    throw WindowViolation("as_matrix: input degree " + std::to_string(input_degree) + " outside the window");
  const auto& cols = f.source()->tuples(f.inputs(), input_degree);
  const int out_degree = input_degree + f.degree();
  const auto& rows = f.target()->tuples(f.outputs(), out_degree);
  BitMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Element image = f.apply(cols[c]);
    for (const auto& [u, bit] : image.terms()) m.set(f.target()->position(u), c);
  }
  return m;
}

BitVector to_vector(const Element& e, const GradedBasis& basis, int degree) {
  const auto& list = basis.tuples(e.arity(), degree);
  BitVector v(list.size());
  for (const auto& [t, c] : e.terms()) {
    if (basis.degree(t) != degree) throw AlgebraError("to_vector: element is not homogeneous of the given degree");
    v.set(basis.position(t));
  }
  return v;
}

Element from_vector(const BitVector& v, const GradedBasis& basis, int arity, int degree) {
  const auto& list = basis.tuples(arity, degree);
  if (v.size() != list.size()) throw AlgebraError("from_vector: length mismatch");
  Element e(arity);
  for (auto i : v.support()) e.add(list[i], true);
  return e;
}

}  // namespace gsdeform
