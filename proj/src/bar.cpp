#include "gsdeform/bar.hpp"

#include <algorithm>
#include <functional>

#include "gsdeform/tensor_cohomology.hpp"

namespace gsdeform {

namespace {

void words_of_degree(const std::vector<int>& letters, const GradedBasis& a, int remaining, BarWord& prefix,
                     std::vector<BarWord>& out) {
  if (remaining == 0) out.push_back(prefix);
  for (int l : letters) {
    const int w = a.degree(l) - 1;
    if (w > remaining) continue;
    prefix.push_back(l);
    words_of_degree(letters, a, remaining - w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BarComplex::BarComplex(std::shared_ptr<const Presentation> algebra, int cap) : algebra_(std::move(algebra)) {
  const auto& a = algebra_->B();
  std::vector<int> letters;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int x = static_cast<int>(i);
    if (x == algebra_->unit) continue;
    if (a.degree(x) < 2) throw AlgebraError("not 1-connected: " + a.name(x) + " has degree " + std::to_string(a.degree(x)));
    letters.push_back(x);
  }
  std::vector<BasisElement> elements;
  for (int t = 0; t <= cap; ++t) {
    std::vector<BarWord> ws;
    BarWord prefix;
    words_of_degree(letters, a, t, prefix, ws);
    std::stable_sort(ws.begin(), ws.end(), [](const BarWord& x, const BarWord& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    for (auto& w : ws) {
      index_.emplace(w, static_cast<int>(words_.size()));
      elements.push_back({render_word(w), t});
      words_.push_back(std::move(w));
    }
  }
  basis_ = std::make_shared<GradedBasis>(std::move(elements), cap);
}

int BarComplex::degree(const BarWord& w) const {
  int d = 0;
  for (int l : w) d += algebra_->B().degree(l) - 1;
  return d;
}

int BarComplex::index_of(const BarWord& w) const {
  auto it = index_.find(w);
  if (it != index_.end()) return it->second;
  if (degree(w) > cap())
    throw WindowViolation("bar word " + render_word(w) + " of degree " + std::to_string(degree(w)) +
                          " is above cap " + std::to_string(cap()));
  throw AlgebraError("not a bar word: " + render_word(w));
}

std::string BarComplex::render_word(const BarWord& w) const {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '|';
    s += algebra_->B().name(w[i]);
  }
  return s + "]";
}

Element BarComplex::parse(const std::string& text) const {
  Element out(1);
  std::string rest = text;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  rest = trim(rest);
  if (rest == "0") return out;
  std::size_t pos = 0;
  while (true) {
    const auto open = rest.find('[', pos);
    const auto close = rest.find(']', pos);
    if (open != pos || close == std::string::npos) throw AlgebraError("malformed bar element '" + text + "'");
    const std::string inner = rest.substr(open + 1, close - open - 1);
    BarWord w;
    std::size_t start = 0;
    while (!inner.empty()) {
      const auto bar = inner.find('|', start);
      const std::string name = trim(inner.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      w.push_back(algebra_->B().index_of(name));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    out.add({index_of(w)}, true);
    pos = close + 1;
    while (pos < rest.size() && rest[pos] == ' ') ++pos;
    if (pos == rest.size()) break;
    if (rest[pos] != '+') throw AlgebraError("expected '+' in bar element '" + text + "'");
    ++pos;
    while (pos < rest.size() && rest[pos] == ' ') ++pos;
  }
  return out;
}

Element BarComplex::words_to_element(const std::map<BarWord, bool>& parity) const {
  Element out(1);
  for (const auto& [w, bit] : parity)
    if (bit) out.add({index_of(w)}, true);
  return out;
}

namespace {

// Replaces letter i of w by each term of e (deleting it when the term is the unit).
void substitute(const BarWord& w, std::size_t i, std::size_t len, const Element& e, int unit,
                std::map<BarWord, bool>& acc) {
  for (const auto& [t, c] : e.terms()) {
    BarWord r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (t[0] != unit) r.push_back(t[0]);
    r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
    acc[r] = !acc[r];
  }
}

}  // namespace

Element BarComplex::differential(int word) const {
  const auto& w = this->word(word);
  const auto& A = *algebra_;
  if (degree(w) + 1 > cap())
    throw WindowViolation("d of " + render_word(w) + " leaves the bar window");
  std::map<BarWord, bool> acc;
  for (std::size_t i = 0; i < w.size(); ++i) substitute(w, i, 1, A.d.apply(Tuple{w[i]}), A.unit, acc);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    substitute(w, i, 2, A.mu.apply(Tuple{w[i], w[i + 1]}), A.unit, acc);
  return words_to_element(acc);
}

Element BarComplex::coproduct(int word) const {
  const auto& w = this->word(word);
  Element out(2);
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const BarWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    const BarWord right(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    out.add({index_of(left), index_of(right)}, true);
  }
  return out;
}

namespace {

using Parity = std::map<BarWord, bool>;

struct Interleaver {
  const BarWord& x;
  const BarWord& y;
  const Presentation& A;
  bool use_e;
  std::map<std::pair<std::size_t, std::size_t>, Parity> memo;

  const Parity& suffixes(std::size_t i, std::size_t j) {
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Parity out;
    auto prepend = [&](int letter, const Parity& tails) {
      for (const auto& [tail, bit] : tails) {
        if (!bit) continue;
        BarWord w;
        if (letter != A.unit) w.push_back(letter);
        w.insert(w.end(), tail.begin(), tail.end());
        out[w] = !out[w];
      }
    };
    if (i == x.size() && j == y.size()) {
      out[{}] = true;
    } else {
      if (i < x.size()) prepend(x[i], suffixes(i + 1, j));
      if (j < y.size()) prepend(y[j], suffixes(i, j + 1));
      if (use_e && i < x.size()) {
        for (const auto& [q, e] : A.E) {
          if (j + static_cast<std::size_t>(q) > y.size()) continue;
          Tuple args{x[i]};
          args.insert(args.end(), y.begin() + static_cast<std::ptrdiff_t>(j),
                      y.begin() + static_cast<std::ptrdiff_t>(j) + q);
          const Element value = e.apply(args);
          if (value.is_zero()) continue;
          const Parity tails = suffixes(i + 1, j + static_cast<std::size_t>(q));
          for (const auto& [t, c] : value.terms()) prepend(t[0], tails);
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

Element BarComplex::shuffle(int w1, int w2) const {
  Interleaver it{word(w1), word(w2), *algebra_, false, {}};
  return words_to_element(it.suffixes(0, 0));
}

Element BarComplex::perturbed(int w1, int w2) const {
  Interleaver it{word(w1), word(w2), *algebra_, true, {}};
  return words_to_element(it.suffixes(0, 0));
}

BarComplex bar_basis(const std::shared_ptr<const Presentation>& algebra, int cap) { return BarComplex(algebra, cap); }

std::shared_ptr<Presentation> bar_presentation(const BarComplex& bc, BarProduct product) {
  auto p = std::make_shared<Presentation>(bc.basis(), bc.empty_word());
  const auto& b = *bc.basis();
  p->delta.emplace(bc.basis(), bc.basis(), 1, 2, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int w = static_cast<int>(i);
    if (b.degree(w) + 1 <= b.cap()) p->d.set({w}, bc.differential(w));
    p->delta->set({w}, bc.coproduct(w));
  }
  for (int t = 0; t <= b.cap(); ++t) {
    for (const auto& xy : b.tuples(2, t)) {
      p->mu.set(xy, product == BarProduct::Shuffle ? bc.shuffle(xy[0], xy[1]) : bc.perturbed(xy[0], xy[1]));
    }
  }
  return p;
}

namespace {

struct HgaEval {
  const Presentation& A;

  Element E(int q, const std::vector<Element>& args) const {
    if (q == 0) return args.at(0);
    auto it = A.E.find(q);
    if (it == A.E.end()) return Element(1);
    Element t = scalar_one();
    for (const auto& a : args) t = tensor(t, a);
    return it->second.apply(t);
  }
  Element mul(const Element& x, const Element& y) const { return A.mu.apply(tensor(x, y)); }
  Element d(const Element& x) const { return A.d.apply(x); }
};

std::vector<Element> slice(const std::vector<Element>& v, std::size_t from, std::size_t to) {
  return std::vector<Element>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

std::vector<Element> with_front(Element a, const std::vector<Element>& rest) {
  std::vector<Element> out{std::move(a)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Element> letters(const Tuple& t) {
  std::vector<Element> out;
  for (int x : t) out.push_back(element_of({x}));
  return out;
}

// Enumerates 0 ≤ i1 ≤ j1 ≤ … ≤ im ≤ jm ≤ n.
void interval_sequences(int m, int n, int lo, std::vector<std::pair<int, int>>& cur,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (static_cast<int>(cur.size()) == m) {
    visit(cur);
    return;
  }
  for (int i = lo; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      cur.push_back({i, j});
      interval_sequences(m, n, j, cur, visit);
      cur.pop_back();
    }
}

}  // namespace

RunReport hga_relations_check(const Presentation& a, int window) {
  RunReport r("hga-check");
  const auto& b = a.B();
  const HgaEval ev{a};
  int qmax = 0;
  for (const auto& [q, e] : a.E) {
    if (e.degree() != -q) throw AlgebraError("E_{1," + std::to_string(q) + "} must have degree " + std::to_string(-q));
    if (!e.is_zero()) qmax = std::max(qmax, q);
  }
  r.note("nonzero E_{1,q} up to q = " + std::to_string(qmax) + ", window " + std::to_string(window));

  for (int q = 1; q <= qmax + 1; ++q) {
    const int w = std::min(window, safe_window(a, 1));
    r.add(check_identity(
        "relation (1), q = " + std::to_string(q), b, q + 1, w,
        [&](const Tuple& t) {
          const auto args = letters(t);
          Element lhs = ev.d(ev.E(q, args));
          for (std::size_t i = 0; i < args.size(); ++i) {
            auto moved = args;
            moved[i] = ev.d(args[i]);
            lhs += ev.E(q, moved);
          }
          return lhs;
        },
        [&](const Tuple& t) {
          const auto args = letters(t);
          const auto bs = slice(args, 1, args.size());
          Element rhs = ev.mul(bs.front(), ev.E(q - 1, with_front(args[0], slice(bs, 1, bs.size()))));
          rhs += ev.mul(ev.E(q - 1, with_front(args[0], slice(bs, 0, bs.size() - 1))), bs.back());
          for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
            std::vector<Element> merged = slice(bs, 0, i);
            merged.push_back(ev.mul(bs[i], bs[i + 1]));
            const auto tail = slice(bs, i + 2, bs.size());
            merged.insert(merged.end(), tail.begin(), tail.end());
            rhs += ev.E(q - 1, with_front(args[0], merged));
          }
          return rhs;
        }));
  }

  for (int q = 1; q <= 2 * qmax; ++q) {
    const int w = std::min(window, safe_window(a, 0));
    r.add(check_identity(
        "relation (2), q = " + std::to_string(q), b, q + 2, w,
        [&](const Tuple& t) {
          const auto args = letters(t);
          return ev.E(q, with_front(ev.mul(args[0], args[1]), slice(args, 2, args.size())));
        },
        [&](const Tuple& t) {
          const auto args = letters(t);
          const auto bs = slice(args, 2, args.size());
          Element rhs = ev.mul(args[0], ev.E(q, with_front(args[1], bs)));
          rhs += ev.mul(ev.E(q, with_front(args[0], bs)), args[1]);
          for (int p = 1; p < q; ++p) {
            rhs += ev.mul(ev.E(p, with_front(args[0], slice(bs, 0, static_cast<std::size_t>(p)))),
                          ev.E(q - p, with_front(args[1], slice(bs, static_cast<std::size_t>(p), bs.size()))));
          }
          return rhs;
        }));
  }

  for (int m = 1; m <= qmax; ++m) {
    for (int n = 1; n <= (m + 1) * qmax; ++n) {
      const int w = std::min(window, safe_window(a, 0));
      r.add(check_identity(
          "relation (3), m = " + std::to_string(m) + ", n = " + std::to_string(n), b, 1 + m + n, w,
          [&](const Tuple& t) {
            const auto args = letters(t);
            const auto inner = ev.E(m, slice(args, 0, static_cast<std::size_t>(m) + 1));
            return ev.E(n, with_front(inner, slice(args, static_cast<std::size_t>(m) + 1, args.size())));
          },
          [&](const Tuple& t) {
            const auto args = letters(t);
            const auto bs = slice(args, 1, static_cast<std::size_t>(m) + 1);
            const auto cs = slice(args, static_cast<std::size_t>(m) + 1, args.size());
            Element rhs(1);
            std::vector<std::pair<int, int>> cur;
            interval_sequences(m, n, 0, cur, [&](const std::vector<std::pair<int, int>>& ij) {
              std::vector<Element> outer{args[0]};
              int prev = 0;
              for (int s = 0; s < m; ++s) {
                const auto [i, j] = ij[static_cast<std::size_t>(s)];
                for (int k = prev; k < i; ++k) outer.push_back(cs[static_cast<std::size_t>(k)]);
                outer.push_back(ev.E(j - i, with_front(bs[static_cast<std::size_t>(s)],
                                                       slice(cs, static_cast<std::size_t>(i), static_cast<std::size_t>(j)))));
                prev = j;
              }
              for (int k = prev; k < n; ++k) outer.push_back(cs[static_cast<std::size_t>(k)]);
              rhs += ev.E(static_cast<int>(outer.size()) - 1, outer);
            });
            return rhs;
          }));
    }
  }
  return r;
}

}  // namespace gsdeform
