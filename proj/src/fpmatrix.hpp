#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "errors.hpp"

namespace lindef {

// Arithmetic context for the prime field F_p. The modulus is carried by the
// objects that need it (matrices, polynomials); scalars themselves are plain
// residues in [0, p).
struct PrimeField {
  std::uint32_t p{101};

  static bool is_prime(std::uint32_t n);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
  // Reduces an arbitrary signed integer into [0, p).
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  bool operator==(const PrimeField&) const = default;
};

// Dense row-major matrix over F_p. Zero-dimensional shapes are legal.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(PrimeField f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0) {}

  static FpMatrix identity(PrimeField f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PrimeField field() const { return f_; }

  std::uint32_t& at(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
  std::uint32_t at(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }
  std::span<std::uint32_t> row(int i) {
    return {v_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
  }
  std::span<const std::uint32_t> row(int i) const {
    return {v_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
  }

  void append_row(std::span<const std::uint32_t> r);
  void swap_rows(int i, int j);

  bool is_zero() const;
  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_.p == o.f_.p && v_ == o.v_;
  }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix transpose() const;

  // y = M*x, skipping zero entries of x.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x) const;

 private:
  PrimeField f_{};
  int rows_{0};
  int cols_{0};
  std::vector<std::uint32_t> v_;
};

struct RrefResult {
  FpMatrix reduced;
  int rank{0};
  std::vector<int> pivots;  // strictly increasing column indices
};

// Unique reduced row echelon form.
RrefResult rref(const FpMatrix& m);

// A linear subspace of k^n held by its unique RREF basis.
struct Subspace {
  int ambient_dim{0};
  FpMatrix basis;            // dim() rows, all nonzero, in RREF
  std::vector<int> pivots;   // pivot column per basis row, strictly increasing

  int dim() const { return basis.rows(); }
  PrimeField field() const { return basis.field(); }

  static Subspace zero(PrimeField f, int ambient);
  static Subspace full(PrimeField f, int ambient);
  // Span of arbitrary rows (reduced internally).
  static Subspace from_rows(const FpMatrix& rows);
  // Coordinate subspace spanned by the given unit vectors; coords must be sorted.
  static Subspace coordinates(PrimeField f, int ambient, const std::vector<int>& coords);

  // Subtracts the projection onto the subspace, zeroing pivot coordinates.
  void reduce_in_place(std::span<std::uint32_t> v) const;
  bool contains_vector(std::span<const std::uint32_t> v) const;
};

Subspace kernel_basis(const FpMatrix& m);

// Coordinates of v in the RREF basis of s, or nullopt if v is outside the span.
std::optional<std::vector<std::uint32_t>> membership(const Subspace& s,
                                                     std::span<const std::uint32_t> v);

bool contains(const Subspace& outer, const Subspace& inner);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Representatives of sub/mod in the pivot-complement convention: the rows of
// RREF(sub) whose pivot is not a pivot of mod. Requires mod ⊆ sub.
std::vector<std::vector<std::uint32_t>> quotient_representatives(const Subspace& sub,
                                                                 const Subspace& mod);

// Matrix of the map (src_sub/src_mod) -> (dst_sub/dst_mod) induced by f, in the
// pivot-complement bases. Throws Err::contract when f does not respect the
// filtrations, Err::dimension_mismatch on shape errors.
FpMatrix induced_map_on_subquotients(const FpMatrix& f, const Subspace& src_sub,
                                     const Subspace& src_mod, const Subspace& dst_sub,
                                     const Subspace& dst_mod);

FpMatrix random_matrix(PrimeField f, int rows, int cols, std::mt19937& rng);
FpMatrix random_invertible(PrimeField f, int n, std::mt19937& rng);

}  // namespace lindef
