#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/frobenius.hpp"

namespace frobkit {

// Square matrix of polynomials over one ring.
struct MatrixOverRing {
  Ring ring;
  std::vector<std::vector<Polynomial>> entries;

  std::size_t size() const { return entries.size(); }
  std::string to_string() const;
};

// Square matrix over F_p.
using ScalarMatrix = std::vector<std::vector<Coeff>>;

// Determinant by fraction-free elimination with exact division.
Polynomial determinant(const MatrixOverRing& m);
Coeff determinant(const ScalarMatrix& m, const PrimeModulus& mod);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const PrimeModulus& mod);
ScalarMatrix transpose(const ScalarMatrix& a);

// The old basis is always the variables of the ring, in order.
MatrixOverRing jacobian(const Ring& ring, const std::vector<Polynomial>& new_basis);

// Units are nonzero constants, or constant multiples of monomials in a
// Laurent ring.
bool is_ring_unit(const Polynomial& f);

// Largest q^n for which the full Frobenius jacobian is assembled.
inline constexpr std::int64_t kFrobJacobianBudget = 81;

struct FrobJacobian {
  Ring ring;
  unsigned level = 1;
  std::int64_t q = 0;
  std::vector<MultiIndex> indices;  // row and column labels, in order
  // Column j holds the rooted components of y^j: y^j = sum_i xi[i][j]^q x^i.
  MatrixOverRing xi;
};

FrobJacobian frobenius_jacobian(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                unsigned e = 1);

struct BasisValidation {
  bool is_d_basis = false;
  bool is_p_basis = false;
  Polynomial jacobian_det;
  Polynomial frobenius_det;
};

// Throws InternalError if the two notions disagree.
BasisValidation validate_basis(const Ring& ring, const std::vector<Polynomial>& new_basis);

// xi with Phi_x = Phi_y(xi * -), read off the top row of the Frobenius
// jacobian. Throws InternalError unless it equals det(J)^(q-1).
Polynomial dual_generator_ratio(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                unsigned e = 1);
// Level-one ratio from (p-1)-fold partial derivatives, without decompositions.
Polynomial dual_generator_ratio_derivative(const Ring& ring,
                                           const std::vector<Polynomial>& new_basis);
// Level-e ratio assembled from the level-one ratio: prod_{r<e} frob(xi_1, r).
Polynomial dual_generator_ratio_cocycle(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                        unsigned e);

// Sum over nonnegative integer matrices with all row and column sums p-1.
Coeff xi_operator(const ScalarMatrix& mu, const PrimeModulus& mod);

// Every n x n matrix over [0, p-1] with all row and column sums p-1.
std::vector<std::vector<std::vector<std::int64_t>>> admissible_matrices(std::uint64_t p,
                                                                         std::size_t n);

struct DetIdentityReport {
  std::size_t matrices = 0;       // invertible matrices checked
  std::size_t singular = 0;       // singular matrices checked (exhaustive mode)
  std::size_t pairs = 0;          // multiplicativity checks
  std::size_t failures = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return failures == 0; }
};

// random_count == 0 selects exhaustive mode.
DetIdentityReport verify_det_identity(std::uint64_t p, std::size_t n, std::size_t random_count,
                                      std::uint64_t seed = 0, std::size_t exhaustive_limit = 1u << 20);

struct CombinatorialCheck {
  Coeff lhs = 0;
  Coeff rhs = 0;
  bool equal = false;
};

CombinatorialCheck combinatorial_identity_check(std::uint64_t p,
                                                const std::vector<std::vector<std::int64_t>>& a);

// Values of sum_{j=i}^{p-1} prod_{k<i} (j-k) mod p for i = 1..p-1.
std::vector<Coeff> falling_sum_values(std::uint64_t p);
bool falling_sum_identity_holds(std::uint64_t p);

}  // namespace frobkit
