#include "gsdeform/gf2.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <utility>

namespace gsdeform {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw ContractViolation("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
  return size_;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw ContractViolation("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return __builtin_parityll(acc);
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ContractViolation("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] & 1);
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ContractViolation("column length mismatch");
    for (auto r : columns[c].support()) m.set(r, c);
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BitVector BitMatrix::operator*(const BitVector& x) const {
  if (x.size() != cols_) throw ContractViolation("matrix-vector dimension mismatch");
  BitVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].dot(x)) y.set(r);
  return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (other.rows() != cols_) throw ContractViolation("matrix product dimension mismatch");
  BitMatrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto k : rows_[r].support()) out.rows_[r] ^= other.rows_[k];
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : rows_[r].support()) t.set(c, r);
  return t;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, {}};
  BitMatrix& a = out.reduced;
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t r = next;
    while (r < a.rows() && !a.get(r, c)) ++r;
    if (r == a.rows()) continue;
    std::swap(a.row(r), a.row(next));
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != next && a.get(i, c)) a.row(i) ^= a.row(next);
    out.pivots.push_back(c);
    ++next;
  }
  return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank(); }

std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw ContractViolation("solve_affine: right-hand side has wrong length");
  return LinearSystem(a).solve(b);
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
  const auto r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(a.cols());
    v.set(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.reduced.get(i, f)) v.set(r.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSystem::LinearSystem(const BitMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), reduced_(a), transform_(BitMatrix::identity(a.rows())) {
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
    std::size_t r = next;
    while (r < rows_ && !reduced_.get(r, c)) ++r;
    if (r == rows_) continue;
    std::swap(reduced_.row(r), reduced_.row(next));
    std::swap(transform_.row(r), transform_.row(next));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != next && reduced_.get(i, c)) {
        reduced_.row(i) ^= reduced_.row(next);
        transform_.row(i) ^= transform_.row(next);
      }
    }
    pivots_.push_back(c);
    ++next;
  }
}

std::optional<BitVector> LinearSystem::solve(const BitVector& b) const {
  if (b.size() != rows_) throw ContractViolation("LinearSystem::solve: right-hand side has wrong length");
  const BitVector tb = transform_ * b;
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (tb.get(r)) return std::nullopt;
  BitVector x(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (tb.get(i)) x.set(pivots_[i]);
  return x;
}

std::optional<BitVector> LinearSystem::infeasibility_certificate(const BitVector& b) const {
  if (b.size() != rows_) throw ContractViolation("LinearSystem: right-hand side has wrong length");
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (transform_.row(r).dot(b)) return transform_.row(r);
  return std::nullopt;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SparseSystem::SparseSystem(std::size_t rows, std::vector<std::vector<std::size_t>> columns)
    : rows_(rows), columns_(std::move(columns)) {
  std::vector<std::size_t> parent(rows_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& col : columns_) {
    for (auto r : col) {
      if (r >= rows_) throw ContractViolation("SparseSystem: row index out of range");
      const auto a = find_root(parent, col.front());
      const auto b = find_root(parent, r);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<bool> touched(rows_, false);
  for (const auto& col : columns_)
    for (auto r : col) touched[r] = true;
  std::vector<std::size_t> block_of(rows_, SIZE_MAX);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!touched[r]) {
      untouched_rows_.push_back(r);
      continue;
    }
    const auto root = find_root(parent, r);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks_.size();
      blocks_.emplace_back();
    }
    blocks_[block_of[root]].rows.push_back(r);
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].empty()) continue;
    blocks_[block_of[find_root(parent, columns_[c].front())]].cols.push_back(c);
  }
  std::vector<std::size_t> local(rows_, 0);
  for (auto& blk : blocks_) {
    for (std::size_t i = 0; i < blk.rows.size(); ++i) local[blk.rows[i]] = i;
    BitMatrix m(blk.rows.size(), blk.cols.size());
    for (std::size_t j = 0; j < blk.cols.size(); ++j)
      for (auto r : columns_[blk.cols[j]]) m.flip(local[r], j);
    blk.system = LinearSystem(m);
  }
}

std::size_t SparseSystem::rank() const {
  std::size_t r = 0;
  for (const auto& blk : blocks_) r += blk.system.rank();
  return r;
}

BitVector SparseSystem::restrict(const BitVector& b, const Block& blk) const {
  BitVector v(blk.rows.size());
  for (std::size_t i = 0; i < blk.rows.size(); ++i)
    if (b.get(blk.rows[i])) v.set(i);
  return v;
}

std::optional<BitVector> SparseSystem::solve(const BitVector& b) const {
  if (b.size() != rows_) throw ContractViolation("SparseSystem::solve: right-hand side has wrong length");
  for (auto r : untouched_rows_)
    if (b.get(r)) return std::nullopt;
  BitVector x(columns_.size());
  for (const auto& blk : blocks_) {
    const auto local = restrict(b, blk);
    if (local.none()) continue;
    auto y = blk.system.solve(local);
    if (!y) return std::nullopt;
    for (auto j : y->support()) x.set(blk.cols[j]);
  }
  return x;
}

std::optional<BitVector> SparseSystem::infeasibility_certificate(const BitVector& b) const {
  if (b.size() != rows_) throw ContractViolation("SparseSystem: right-hand side has wrong length");
  for (auto r : untouched_rows_)
    if (b.get(r)) return BitVector::unit(rows_, r);
  for (const auto& blk : blocks_) {
    const auto local = restrict(b, blk);
    if (local.none()) continue;
    auto y = blk.system.infeasibility_certificate(local);
    if (!y) continue;
    BitVector out(rows_);
    for (auto i : y->support()) out.set(blk.rows[i]);
    return out;
  }
  return std::nullopt;
}

QuotientBasis::QuotientBasis(std::size_t dim, const std::vector<BitVector>& image,
                             const std::vector<BitVector>& candidates)
    : dim_(dim) {
  for (const auto& v : image) {
    if (insert(v, BitVector(0)) != dim_) ++image_rank_;
  }
  // Tags are sized once the representative count is known; collect first.
  std::vector<BitVector> reps;
  for (const auto& v : candidates) {
    if (insert(v, BitVector(0)) == dim_) continue;
    reps.push_back(v);
  }
  *this = with_representatives(dim, image, reps);
}

QuotientBasis QuotientBasis::with_representatives(std::size_t dim, const std::vector<BitVector>& image,
                                                  const std::vector<BitVector>& representatives) {
  QuotientBasis q;
  q.dim_ = dim;
  const std::size_t k = representatives.size();
  for (const auto& v : image) {
    if (q.insert(v, BitVector(k)) != dim) ++q.image_rank_;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (q.insert(representatives[j], BitVector::unit(k, j)) == dim)
      throw ContractViolation("representatives are dependent modulo the image");
  }
  q.reps_ = representatives;
  return q;
}

BitVector QuotientBasis::reduce(BitVector v, BitVector* tag) const {
  for (const auto& row : rows_) {
    if (v.get(row.pivot)) {
      v ^= row.vec;
      if (tag && row.tag.size() == tag->size()) *tag ^= row.tag;
    }
  }
  return v;
}

std::size_t QuotientBasis::insert(BitVector v, BitVector tag) {
  if (v.size() != dim_) throw ContractViolation("QuotientBasis: vector has wrong length");
  for (const auto& row : rows_) {
    if (v.get(row.pivot)) {
      v ^= row.vec;
      if (row.tag.size() == tag.size()) tag ^= row.tag;
    }
  }
  const std::size_t p = v.first_set();
  if (p == dim_) return dim_;
  rows_.push_back({std::move(v), p, std::move(tag)});
  return p;
}

std::optional<BitVector> QuotientBasis::try_class_of(const BitVector& v) const {
  if (v.size() != dim_) throw ContractViolation("QuotientBasis: vector has wrong length");
  BitVector tag(reps_.size());
  if (reduce(v, &tag).any()) return std::nullopt;
  return tag;
}

BitVector QuotientBasis::representative_of(const BitVector& coords) const {
  if (coords.size() != reps_.size()) throw ContractViolation("class coordinates have wrong length");
  BitVector v(dim_);
  for (auto j : coords.support()) v ^= reps_[j];
  return v;
}

bool QuotientBasis::in_image(const BitVector& v) const {
  auto c = try_class_of(v);
  return c && c->none();
}

HomologyPair::HomologyPair(const BitMatrix& d_in, const BitMatrix& d_out) : d_out_(d_out) {
  if (d_in.rows() != d_out.cols()) throw ContractViolation("homology_of_pair: dimension mismatch");
  if (!(d_out * d_in).is_zero()) throw ContractViolation("not a complex");
  const std::size_t dim = d_out.cols();
  std::vector<BitVector> image;
  const BitMatrix t = d_in.transposed();
  for (std::size_t c = 0; c < t.rows(); ++c) image.push_back(t.row(c));
  const auto kernel = kernel_basis(d_out);
  kernel_dim_ = kernel.size();
  quotient_ = QuotientBasis(dim, image, kernel);
  boundary_rank_ = kernel_dim_ - quotient_.dimension();
}

BitVector HomologyPair::class_of(const BitVector& v) const {
  if ((d_out_ * v).any()) throw ContractViolation("not a cocycle");
  auto c = quotient_.try_class_of(v);
  if (!c) throw ContractViolation("not a cocycle");
  return *c;
}

BitVector HomologyPair::representative_of(const BitVector& coords) const {
  return quotient_.representative_of(coords);
}

bool SparseEliminator::add(std::vector<std::size_t> row, bool rhs) {
  std::sort(row.begin(), row.end());
  // Cancel repeated columns.
  std::vector<std::size_t> clean;
  for (std::size_t i = 0; i < row.size();) {
    std::size_t j = i;
    while (j < row.size() && row[j] == row[i]) ++j;
    if ((j - i) % 2) clean.push_back(row[i]);
    i = j;
  }
  row.swap(clean);
  std::vector<std::size_t> next;
  while (!row.empty()) {
    const std::size_t lead = row.front();
    if (lead >= pivots_.size()) throw ContractViolation("SparseEliminator: column out of range");
    auto& slot = pivots_[lead];
    if (!slot) {
      slot = Pivot{std::move(row), rhs};
      ++rank_;
      return true;
    }
    next.clear();
    std::set_symmetric_difference(row.begin(), row.end(), slot->row.begin(), slot->row.end(), std::back_inserter(next));
    row.swap(next);
    rhs = rhs != slot->rhs;
  }
  if (rhs) consistent_ = false;
  return !rhs;
}

BitVector SparseEliminator::solution() const {
  if (!consistent_) throw ContractViolation("SparseEliminator: inconsistent system");
  BitVector x(pivots_.size());
  for (std::size_t c = pivots_.size(); c-- > 0;) {
    if (!pivots_[c]) continue;
    bool v = pivots_[c]->rhs;
    for (std::size_t k = 1; k < pivots_[c]->row.size(); ++k) v = v != x.get(pivots_[c]->row[k]);
    if (v) x.set(c);
  }
  return x;
}

}  // namespace gsdeform
