#pragma once

// Brute-force reference computations used to cross-check the library.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gsdeform/gf2.hpp"

namespace oracle {

inline std::uint32_t mask_of(const gsdeform::BitVector& v) {
  std::uint32_t m = 0;
  for (auto i : v.support()) m |= 1U << i;
  return m;
}

inline gsdeform::BitVector vector_of(std::uint32_t m, std::size_t n) {
  gsdeform::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) v.set(i);
  return v;
}

inline std::uint32_t apply(const gsdeform::BitMatrix& a, std::uint32_t x) {
  return mask_of(a * vector_of(x, a.cols()));
}

/// All vectors of GF(2)^n killed by a.
inline std::vector<std::uint32_t> kernel(const gsdeform::BitMatrix& a) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1U << a.cols()); ++x)
    if (apply(a, x) == 0) out.push_back(x);
  return out;
}

/// The set of all images a·x.
inline std::set<std::uint32_t> image(const gsdeform::BitMatrix& a) {
  std::set<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1U << a.cols()); ++x) out.insert(apply(a, x));
  return out;
}

inline gsdeform::BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  std::bernoulli_distribution bit(density);
  gsdeform::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

/// Random pair with d_out·d_in = 0: columns of d_in are drawn from ker(d_out).
inline std::pair<gsdeform::BitMatrix, gsdeform::BitMatrix> random_complex(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> size(0, 5);
  const std::size_t l = size(rng);
  const std::size_t k = size(rng);
  auto d_out = random_matrix(rng, l, n);
  const auto z = kernel(d_out);
  std::uniform_int_distribution<std::size_t> pick(0, z.size() - 1);
  gsdeform::BitMatrix d_in(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = z[pick(rng)];
    for (std::size_t r = 0; r < n; ++r)
      if ((col >> r) & 1U) d_in.set(r, c);
  }
  return {d_in, d_out};
}

}  // namespace oracle
