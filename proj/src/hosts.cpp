#include "gsdeform/hosts.hpp"

#include "gsdeform/embedded.hpp"

namespace gsdeform {

BarHomology bar_homology(const std::string& dga_text, BarProduct product, int cap,
                         const std::vector<std::pair<std::string, std::string>>& overrides) {
  BarHomology out;
  out.algebra = std::make_shared<Presentation>(parse_presentation(dga_text));
  auto words = std::make_shared<BarComplex>(out.algebra, cap);
  out.words = words;
  out.bar = bar_presentation(*words, product);
  HomologyOptions opt;
  opt.overrides = overrides;
  out.h = homology(out.bar, words.get(), opt);
  return out;
}

BarHomology example4_homology(int cap) {
  return bar_homology(embedded::kExample4Dga, BarProduct::Shuffle, cap,
                      {{"alpha1", "[a2]"}, {"alpha2", "[a3]"}, {"beta2", "[b3]"}, {"gamma", "[a2|a3] + [a3|a2]"}});
}

BarHomology loopspace_homology(int cap) {
  return bar_homology(embedded::kLoopSpaceDga, BarProduct::Perturbed, cap,
                      {{"alpha1", "[a2]"}, {"alpha2", "[a3]"}, {"beta", "[b]"}, {"gamma", "[a2|a3] + [a3|a2]"}});
}

}  // namespace gsdeform
