#include "fpmatrix.hpp"

#include <algorithm>
#include <cstring>

namespace lindef {

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  // extended Euclid; a must be nonzero mod p
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error(Err::field, "not invertible: modulus is not prime");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpMatrix FpMatrix::identity(PrimeField f, int n) {
  FpMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void FpMatrix::append_row(std::span<const std::uint32_t> r) {
  if (static_cast<int>(r.size()) != cols_)
    throw Error(Err::dimension_mismatch, "append_row: width mismatch");
  v_.insert(v_.end(), r.begin(), r.end());
  ++rows_;
}

void FpMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  std::swap_ranges(v_.begin() + static_cast<size_t>(i) * cols_,
                   v_.begin() + static_cast<size_t>(i + 1) * cols_,
                   v_.begin() + static_cast<size_t>(j) * cols_);
}

bool FpMatrix::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Err::dimension_mismatch, "matrix product shapes");
  FpMatrix out(f_, rows_, rhs.cols_);
  const std::uint64_t p = f_.p;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = at(i, k);
      if (a == 0) continue;
      auto r = rhs.row(k);
      auto o = out.row(i);
      for (int j = 0; j < rhs.cols_; ++j)
        if (r[j]) o[j] = static_cast<std::uint32_t>((o[j] + a * r[j]) % p);
    }
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<std::uint32_t> FpMatrix::apply(std::span<const std::uint32_t> x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(Err::dimension_mismatch, "apply: vector length mismatch");
  std::vector<std::uint32_t> y(rows_, 0);
  const std::uint64_t p = f_.p;
  for (int j = 0; j < cols_; ++j) {
    std::uint64_t c = x[j];
    if (c == 0) continue;
    for (int i = 0; i < rows_; ++i) {
      std::uint32_t a = at(i, j);
      if (a) y[i] = static_cast<std::uint32_t>((y[i] + c * a) % p);
    }
  }
  return y;
}

namespace {

// row_a[from..] -= c * row_b[from..]
inline void axpy_suffix(std::span<std::uint32_t> a, std::span<const std::uint32_t> b,
                        std::uint32_t c, int from, std::uint64_t p) {
  for (size_t j = from; j < a.size(); ++j) {
    if (b[j] == 0) continue;
    std::uint64_t t = std::uint64_t(c) * b[j] % p;
    std::uint64_t r = a[j] >= t ? a[j] - t : a[j] + p - t;
    a[j] = static_cast<std::uint32_t>(r);
  }
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
  RrefResult res;
  res.reduced = m;
  FpMatrix& a = res.reduced;
  const PrimeField f = m.field();
  const std::uint64_t p = f.p;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(r, piv);
    std::uint32_t d = f.inv(a.at(r, c));
    if (d != 1) {
      auto row = a.row(r);
      for (int j = c; j < a.cols(); ++j)
        if (row[j]) row[j] = static_cast<std::uint32_t>(std::uint64_t(row[j]) * d % p);
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      std::uint32_t c0 = a.at(i, c);
      if (c0 == 0) continue;
      axpy_suffix(a.row(i), a.row(r), c0, c, p);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

Subspace Subspace::zero(PrimeField f, int ambient) {
  Subspace s;
  s.ambient_dim = ambient;
  s.basis = FpMatrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(PrimeField f, int ambient) {
  Subspace s;
  s.ambient_dim = ambient;
  s.basis = FpMatrix::identity(f, ambient);
  s.pivots.resize(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots[i] = i;
  return s;
}

Subspace Subspace::from_rows(const FpMatrix& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient_dim = rows.cols();
  s.basis = FpMatrix(rows.field(), 0, rows.cols());
  for (int i = 0; i < r.rank; ++i) s.basis.append_row(r.reduced.row(i));
  s.pivots = r.pivots;
  return s;
}

Subspace Subspace::coordinates(PrimeField f, int ambient, const std::vector<int>& coords) {
  Subspace s;
  s.ambient_dim = ambient;
  s.basis = FpMatrix(f, static_cast<int>(coords.size()), ambient);
  for (size_t i = 0; i < coords.size(); ++i) s.basis.at(static_cast<int>(i), coords[i]) = 1;
  s.pivots = coords;
  return s;
}

void Subspace::reduce_in_place(std::span<std::uint32_t> v) const {
  const PrimeField f = basis.field();
  const std::uint64_t p = f.p;
  for (int i = 0; i < basis.rows(); ++i) {
    std::uint32_t c = v[pivots[i]];
    if (c == 0) continue;
    axpy_suffix(v, basis.row(i), c, pivots[i], p);
  }
}

bool Subspace::contains_vector(std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> w(v.begin(), v.end());
  reduce_in_place(w);
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

Subspace kernel_basis(const FpMatrix& m) {
  RrefResult r = rref(m);
  const PrimeField f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;

  FpMatrix rows(f, 0, m.cols());
  std::vector<std::uint32_t> v(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, c));
    rows.append_row(v);
  }
  return Subspace::from_rows(rows);
}

std::optional<std::vector<std::uint32_t>> membership(const Subspace& s,
                                                     std::span<const std::uint32_t> v) {
  if (static_cast<int>(v.size()) != s.ambient_dim)
    throw Error(Err::dimension_mismatch, "membership: vector length mismatch");
  std::vector<std::uint32_t> coords(s.dim());
  std::vector<std::uint32_t> w(v.begin(), v.end());
  const PrimeField f = s.basis.field();
  const std::uint64_t p = f.p;
  for (int i = 0; i < s.dim(); ++i) {
    std::uint32_t c = w[s.pivots[i]];
    coords[i] = c;
    if (c) axpy_suffix(w, s.basis.row(i), c, s.pivots[i], p);
  }
  if (!std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; }))
    return std::nullopt;
  return coords;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim != inner.ambient_dim)
    throw Error(Err::dimension_mismatch, "contains: ambient mismatch");
  for (int i = 0; i < inner.dim(); ++i)
    if (!outer.contains_vector(inner.basis.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw Error(Err::dimension_mismatch, "sum: ambient mismatch");
  FpMatrix rows = a.basis;
  for (int i = 0; i < b.dim(); ++i) rows.append_row(b.basis.row(i));
  return Subspace::from_rows(rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw Error(Err::dimension_mismatch, "intersect: ambient mismatch");
  const PrimeField f = a.basis.field();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, a.ambient_dim);
  // x*A = y*B  <=>  (x, -y) in the kernel of [A; B]^T
  FpMatrix stacked = a.basis;
  for (int i = 0; i < b.dim(); ++i) stacked.append_row(b.basis.row(i));
  Subspace ker = kernel_basis(stacked.transpose());
  FpMatrix rows(f, 0, a.ambient_dim);
  std::vector<std::uint32_t> v(a.ambient_dim);
  for (int i = 0; i < ker.dim(); ++i) {
    std::fill(v.begin(), v.end(), 0);
    const std::uint64_t p = f.p;
    for (int r = 0; r < a.dim(); ++r) {
      std::uint64_t c = ker.basis.at(i, r);
      if (c == 0) continue;
      auto br = a.basis.row(r);
      for (int j = 0; j < a.ambient_dim; ++j)
        if (br[j]) v[j] = static_cast<std::uint32_t>((v[j] + c * br[j]) % p);
    }
    rows.append_row(v);
  }
  return Subspace::from_rows(rows);
}

std::vector<std::vector<std::uint32_t>> quotient_representatives(const Subspace& sub,
                                                                 const Subspace& mod) {
  if (sub.ambient_dim != mod.ambient_dim)
    throw Error(Err::dimension_mismatch, "quotient: ambient mismatch");
  std::vector<bool> mod_pivot(sub.ambient_dim, false);
  for (int c : mod.pivots) mod_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> reps;
  for (int i = 0; i < sub.dim(); ++i) {
    if (mod_pivot[sub.pivots[i]]) continue;
    auto r = sub.basis.row(i);
    reps.emplace_back(r.begin(), r.end());
  }
  return reps;
}

FpMatrix induced_map_on_subquotients(const FpMatrix& f, const Subspace& src_sub,
                                     const Subspace& src_mod, const Subspace& dst_sub,
                                     const Subspace& dst_mod) {
  if (f.cols() != src_sub.ambient_dim || f.rows() != dst_sub.ambient_dim ||
      src_sub.ambient_dim != src_mod.ambient_dim ||
      dst_sub.ambient_dim != dst_mod.ambient_dim)
    throw Error(Err::dimension_mismatch, "induced map: shape mismatch");
  if (!contains(src_sub, src_mod) || !contains(dst_sub, dst_mod))
    throw Error(Err::contract, "induced map: mod is not contained in sub");

  // f must carry src_mod into dst_mod for the induced map to be defined.
  for (int i = 0; i < src_mod.dim(); ++i) {
    auto y = f.apply(src_mod.basis.row(i));
    if (!dst_mod.contains_vector(y))
      throw Error(Err::contract, "induced map: f(src_mod) not inside dst_mod");
  }

  std::vector<bool> dst_mod_pivot(dst_sub.ambient_dim, false);
  for (int c : dst_mod.pivots) dst_mod_pivot[c] = true;
  std::vector<int> dst_rep_rows;  // rows of dst_sub giving the quotient basis
  for (int i = 0; i < dst_sub.dim(); ++i)
    if (!dst_mod_pivot[dst_sub.pivots[i]]) dst_rep_rows.push_back(i);

  auto src_reps = quotient_representatives(src_sub, src_mod);
  FpMatrix out(f.field(), static_cast<int>(dst_rep_rows.size()),
               static_cast<int>(src_reps.size()));
  const PrimeField fld = f.field();
  const std::uint64_t p = fld.p;
  for (size_t j = 0; j < src_reps.size(); ++j) {
    std::vector<std::uint32_t> y = f.apply(src_reps[j]);
    dst_mod.reduce_in_place(y);
    // After killing dst_mod pivots, the class coordinates sit at the
    // complement pivots of dst_sub; the residual must vanish.
    for (size_t i = 0; i < dst_rep_rows.size(); ++i) {
      int row = dst_rep_rows[i];
      std::uint32_t c = y[dst_sub.pivots[row]];
      out.at(static_cast<int>(i), static_cast<int>(j)) = c;
      if (c) axpy_suffix(y, dst_sub.basis.row(row), c, dst_sub.pivots[row], p);
    }
    if (!std::all_of(y.begin(), y.end(), [](std::uint32_t x) { return x == 0; }))
      throw Error(Err::contract, "induced map: f(src_sub) not inside dst_sub");
  }
  return out;
}

FpMatrix random_matrix(PrimeField f, int rows, int cols, std::mt19937& rng) {
  FpMatrix m(f, rows, cols);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

FpMatrix random_invertible(PrimeField f, int n, std::mt19937& rng) {
  for (;;) {
    FpMatrix m = random_matrix(f, n, n, rng);
    if (rref(m).rank == n) return m;
  }
}

}  // namespace lindef
