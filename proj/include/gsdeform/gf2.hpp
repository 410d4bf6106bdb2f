#pragma once

// Exact linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsdeform {

/// Thrown when a precondition of a linear-algebra routine is violated.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Packed GF(2) vector of fixed length.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  /// Parity of the bitwise AND with another vector of the same size.
  bool dot(const BitVector& other) const;
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense bit-packed GF(2) matrix, stored row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Builds the matrix whose columns are the given vectors (all of length `rows`).
  static BitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  BitVector column(std::size_t c) const;

  BitVector operator*(const BitVector& x) const;
  BitMatrix operator*(const BitMatrix& other) const;
  bool operator==(const BitMatrix& other) const = default;

  BitMatrix transposed() const;
  bool is_zero() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Canonical solution of a·x = b: free variables of the RREF are zero.
std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& b);

/// Basis of ker(a), one vector per free column of the RREF, in column order.
std::vector<BitVector> kernel_basis(const BitMatrix& a);

/// Reusable elimination of a fixed matrix for many right-hand sides.
///
/// Keeps the row operations T with T·A = RREF(A), so each solve costs one
/// matrix-vector product. Infeasible systems yield a left certificate y with
/// yᵀA = 0 and yᵀb = 1.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(const BitMatrix& a);

  std::size_t equations() const { return rows_; }
  std::size_t unknowns() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::optional<BitVector> solve(const BitVector& b) const;
  /// Returns y with yᵀA = 0 and yᵀb = 1, or nothing when a·x = b is solvable.
  std::optional<BitVector> infeasibility_certificate(const BitVector& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  BitMatrix reduced_;
  BitMatrix transform_;
};

/// Linear system given by sparse columns, solved independently on each connected block.
///
/// Blocks are the connected components of the row/column incidence graph. The
/// pivot columns, and therefore the canonical solution, coincide with those of
/// the whole matrix.
class SparseSystem {
 public:
  SparseSystem() = default;
  SparseSystem(std::size_t rows, std::vector<std::vector<std::size_t>> columns);

  std::size_t equations() const { return rows_; }
  std::size_t unknowns() const { return columns_.size(); }
  std::size_t rank() const;
  std::size_t blocks() const { return blocks_.size(); }

  /// Canonical solution (free variables zero), or nothing when infeasible.
  std::optional<BitVector> solve(const BitVector& b) const;
  /// Left certificate y (yᵀA = 0, yᵀb = 1) supported on a single block.
  std::optional<BitVector> infeasibility_certificate(const BitVector& b) const;

 private:
  struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    LinearSystem system;
  };
  BitVector restrict(const BitVector& b, const Block& blk) const;

  std::size_t rows_ = 0;
  std::vector<std::vector<std::size_t>> columns_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> untouched_rows_;
};

/// Row-by-row sparse elimination for large, very sparse systems.
///
/// Each stored pivot row is keyed by its smallest column; an incoming row is
/// reduced until its smallest column is new. The pivot columns are those of the
/// RREF, so solution() is the same canonical solution as LinearSystem's.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t unknowns) : pivots_(unknowns) {}

  /// Adds Σ_{c ∈ row} x_c = rhs; returns false when it contradicts the rows added so far.
  bool add(std::vector<std::size_t> row, bool rhs);
  std::size_t rank() const { return rank_; }
  bool consistent() const { return consistent_; }
  /// Canonical solution with free variables zero; throws when inconsistent.
  BitVector solution() const;

 private:
  struct Pivot {
    std::vector<std::size_t> row;  // sorted, front() is the key
    bool rhs = false;
  };
  std::vector<std::optional<Pivot>> pivots_;
  std::size_t rank_ = 0;
  bool consistent_ = true;
};

/// Echelon basis of a quotient ker/im with tagged class coordinates.
///
/// Representatives are the candidate vectors that are independent of the image
/// and of the earlier representatives, kept verbatim, so
/// class_of(representative_of(c)) == c.
class QuotientBasis {
 public:
  QuotientBasis() = default;
  /// `image` spans the subspace to divide out; `candidates` span the cycles.
  QuotientBasis(std::size_t dim, const std::vector<BitVector>& image,
                const std::vector<BitVector>& candidates);
  /// Uses `representatives` verbatim as class representatives.
  static QuotientBasis with_representatives(std::size_t dim, const std::vector<BitVector>& image,
                                            const std::vector<BitVector>& representatives);

  std::size_t dimension() const { return reps_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  const std::vector<BitVector>& representatives() const { return reps_; }

  /// Class coordinates of v, or nothing if v is outside span(image, reps).
  std::optional<BitVector> try_class_of(const BitVector& v) const;
  BitVector representative_of(const BitVector& coords) const;
  bool in_image(const BitVector& v) const;

 private:
  struct Row {
    BitVector vec;
    std::size_t pivot;
    BitVector tag;
  };
  // Returns the remainder; accumulates the tag of the rows used.
  BitVector reduce(BitVector v, BitVector* tag) const;
  std::size_t insert(BitVector v, BitVector tag);

  std::size_t dim_ = 0;
  std::vector<Row> rows_;
  std::vector<BitVector> reps_;
  std::size_t image_rank_ = 0;
};

/// Homology of C_{k-1} --d_in--> C_k --d_out--> C_{k+1}.
class HomologyPair {
 public:
  HomologyPair(const BitMatrix& d_in, const BitMatrix& d_out);

  const std::vector<BitVector>& class_basis() const { return quotient_.representatives(); }
  std::size_t dimension() const { return quotient_.dimension(); }
  std::size_t kernel_dimension() const { return kernel_dim_; }
  std::size_t boundary_rank() const { return boundary_rank_; }

  /// Throws ContractViolation("not a cocycle") when d_out·v ≠ 0.
  BitVector class_of(const BitVector& v) const;
  BitVector representative_of(const BitVector& coords) const;
  bool is_boundary(const BitVector& v) const { return quotient_.in_image(v); }

 private:
  BitMatrix d_out_;
  QuotientBasis quotient_;
  std::size_t kernel_dim_ = 0;
  std::size_t boundary_rank_ = 0;
};

}  // namespace gsdeform
