#pragma once

#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"

namespace lindef {

// Presentation of R = Q/(relations + n^(N+1)) with Q a truncated polynomial
// ring over F_p at cap W. Relations must have order >= 2.
struct AlgebraPresentation {
  std::uint32_t p{101};
  std::vector<std::string> vars;
  std::vector<TruncatedPoly> relations;
  int truncation_degree{1};  // N: enforces m^(N+1) = 0
  int cap{3};                // W >= N+2 and > max relation degree
};

// Finite-dimensional local algebra with a monomial normal-form basis. The
// basis is the pivot-complement of the ideal span, listed in the global
// monomial order, so it is grouped by degree and starts with 1.
class LocalAlgebra {
 public:
  PrimeField F;
  AlgebraPresentation pres;
  std::shared_ptr<const MonomialTable> table;

  int dim{0};                       // L
  std::vector<int> basis;           // monomial indices into `table`
  std::vector<int> basis_degree;    // degree of each basis element
  Subspace ideal;                   // span of relations + truncation monomials
  std::vector<int> hilbert;         // h_0..h_N
  bool graded{false};               // all relations homogeneous
  bool truncation_forced{false};    // m^(N+1)=0 did not follow from relations
  bool is_associated_graded{false};

  int edim() const { return hilbert.size() > 1 ? hilbert[1] : 0; }
  int socle_degree() const;
  int multiplicity() const { return dim; }
  int truncation_degree() const { return pres.truncation_degree; }

  // Positions of the degree-1 basis elements: a minimal generating set of m.
  std::vector<int> gens_of_m() const;

  // Coordinates of basis_i * basis_j in the algebra basis.
  std::span<const std::uint32_t> mult(int i, int j) const {
    return {mult_table_.data() + (static_cast<size_t>(i) * dim + j) * dim,
            static_cast<size_t>(dim)};
  }
  // L x L matrix of multiplication by basis_t.
  const FpMatrix& mult_op(int t) const { return mult_ops_[t]; }

  // Product of two elements given by coordinate vectors.
  std::vector<std::uint32_t> mult_elems(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b) const;

  // m^s as a coordinate subspace of k^L (basis positions of degree >= s).
  Subspace filtration(int s) const;
  // First basis position of degree >= s.
  int filtration_start(int s) const;

  // Reduces a dense coefficient vector (table space) to basis coordinates.
  std::vector<std::uint32_t> normal_form(std::vector<std::uint32_t> dense) const;

  TruncatedPoly basis_poly(int i) const;
  std::string basis_name(int i, const std::vector<std::string>& vars) const;

  void finalize();  // builds mult tables; called by build_algebra
  void set_mult(int i, int j, std::span<const std::uint32_t> coords);
  void rebuild_mult_ops();

 private:
  std::vector<std::uint32_t> mult_table_;  // [i][j] -> L coords, flattened
  std::vector<FpMatrix> mult_ops_;
};

// Constructs R from a presentation. Throws Err::field for nonprime p and
// Err::relation_order when a relation has a term of degree < 2.
LocalAlgebra build_algebra(const AlgebraPresentation& pres);

// gr R with respect to the m-adic filtration; multiplication keeps only the
// leading-form component. For graded input the result is isomorphic to it.
LocalAlgebra associated_graded(const LocalAlgebra& a);

std::vector<int> hilbert_series(const LocalAlgebra& a);
int multiplicity(const LocalAlgebra& a);
int edim(const LocalAlgebra& a);
int socle_degree(const LocalAlgebra& a);

}  // namespace lindef
