#include "gsdeform/sampling.hpp"

#include <algorithm>
#include <string>

namespace gsdeform {

GSCochain random_cochain(const GSHost& host, std::mt19937& rng, const std::vector<Tridegree>& degs, int top) {
  const auto& b = host.B();
  GSCochain c(host.basis());
  for (const auto& deg : degs) {
    MultiMap& f = c.part(deg);
    for (int k = 0; k < 4; ++k) {
      const int lo = std::max(0, -deg.p);
      const int hi = std::min(top, b.cap() - deg.p);
      if (hi < lo) break;
      const int t = std::uniform_int_distribution<int>(lo, hi)(rng);
      const auto& ins = b.tuples(deg.m, t);
      const auto& outs = b.tuples(deg.n, t + deg.p);
      if (ins.empty() || outs.empty()) continue;
      const Tuple in = ins[std::uniform_int_distribution<std::size_t>(0, ins.size() - 1)(rng)];
      Element v(deg.n);
      for (int j = 0; j < 3; ++j) toggle(v, outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)]);
      f.set(in, v);
    }
  }
  return c;
}

std::vector<Tridegree> random_degrees(std::mt19937& rng, bool with_d) {
  std::vector<Tridegree> out;
  const int count = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int k = 0; k < count; ++k) {
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 4 - m)(rng);
    const int p = std::uniform_int_distribution<int>(with_d ? -2 : -1, 0)(rng);
    out.push_back({p, m, n});
  }
  return out;
}

namespace {

std::string describe(const GSCochain& c, int trial) {
  std::string s = "sample " + std::to_string(trial) + " with parts";
  for (const auto& [deg, f] : c.parts) s += " " + to_string(deg);
  return s;
}

}  // namespace

RunReport check_d_squared(const std::shared_ptr<const Presentation>& p, const SampleOptions& options) {
  RunReport r("gs-d2");
  GSHost host(p);
  const bool with_d = host.has_differential();
  const int window = std::min(options.window, host.B().cap() - (with_d ? 2 : 0));
  r.note("samples " + std::to_string(options.samples) + ", seed " + std::to_string(options.seed) +
         ", input degree <= " + std::to_string(window));
  std::mt19937 rng(options.seed);
  std::string square, commute, nabla_commute;
  for (int trial = 0; trial < options.samples; ++trial) {
    const GSCochain c = random_cochain(host, rng, random_degrees(rng, with_d), options.window);
    if (square.empty()) {
      for (const auto& [deg, f] : total_D(host, total_D(host, lazy(c)))) {
        const Part<bool> zero{deg, [deg](const Tuple&) { return Element(deg.n); }};
        if (auto w = first_difference(host, f, zero, window)) {
          square = describe(c, trial) + ": component " + to_string(deg) + " " + *w;
          break;
        }
      }
    }
    for (const auto& [deg, f] : lazy(c)) {
      if (commute.empty()) {
        if (auto w = first_difference(host, gs_partial(host, memoize(gs_delta(host, f))),
                                      gs_delta(host, memoize(gs_partial(host, f))), window))
          commute = describe(c, trial) + ": " + *w;
      }
      if (!with_d || !nabla_commute.empty()) continue;
      if (auto w = first_difference(host, nabla(host, memoize(gs_partial(host, f))),
                                    gs_partial(host, memoize(nabla(host, f))), window))
        nabla_commute = describe(c, trial) + ": ∇∂ " + *w;
      else if (auto w2 = first_difference(host, nabla(host, memoize(gs_delta(host, f))),
                                          gs_delta(host, memoize(nabla(host, f))), window))
        nabla_commute = describe(c, trial) + ": ∇δ " + *w2;
    }
  }
  r.add("D(D(c)) = 0", square.empty(), square);
  r.add("∂δ = δ∂", commute.empty(), commute);
  if (with_d) r.add("∇∂ = ∂∇ and ∇δ = δ∇", nabla_commute.empty(), nabla_commute);
  return r;
}

}  // namespace gsdeform
