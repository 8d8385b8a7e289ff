#include "frobkit/basis_change.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void require_square(const Ring& ring, const std::vector<Polynomial>& new_basis) {
  if (new_basis.size() != ring->arity()) {
    throw InvalidArgument("new basis needs one element per variable (" +
                          std::to_string(ring->arity()) + "), got " +
                          std::to_string(new_basis.size()));
  }
  for (const auto& y : new_basis) require_same_ring(ring, y.ring());
}

std::vector<MultiIndex> all_indices(std::size_t n, std::int64_t q) {
  std::vector<MultiIndex> out;
  MultiIndex idx(n, 0);
  while (true) {
    out.push_back(idx);
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == q) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Polynomial basis_power(const Ring& ring, const std::vector<Polynomial>& y, const MultiIndex& j) {
  auto out = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (j[k] != 0) out = out * pow(y[k], static_cast<std::uint64_t>(j[k]));
  }
  return out;
}

MultiIndex complement(const MultiIndex& j, std::int64_t q) {
  MultiIndex c(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) c[k] = q - 1 - j[k];
  return c;
}

std::vector<Coeff> factorials(const PrimeModulus& mod) {
  std::vector<Coeff> f(mod.value(), 1);
  for (Coeff i = 1; i < mod.value(); ++i) f[i] = mod.mul(f[i - 1], i);
  return f;
}

std::string describe(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

void enumerate_tables(std::size_t n, std::int64_t total,
                      const std::function<void(const std::vector<std::vector<std::int64_t>>&)>& visit) {
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> col_left(n, total);
  std::function<void(std::size_t, std::size_t, std::int64_t)> rec =
      [&](std::size_t row, std::size_t col, std::int64_t row_left) {
        if (row == n) {
          visit(a);
          return;
        }
        if (col == n - 1) {
          if (row_left > col_left[col]) return;
          a[row][col] = row_left;
          col_left[col] -= row_left;
          rec(row + 1, 0, total);
          col_left[col] += row_left;
          return;
        }
        const auto hi = std::min(row_left, col_left[col]);
        for (std::int64_t v = 0; v <= hi; ++v) {
          a[row][col] = v;
          col_left[col] -= v;
          rec(row, col + 1, row_left - v);
          col_left[col] += v;
        }
      };
  if (n == 0) return;
  rec(0, 0, total);
}

}  // namespace

std::string MatrixOverRing::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      s += (j ? ", " : "") + entries[i][j].to_string();
    }
    s += "]";
  }
  return s + "]";
}

Polynomial determinant(const MatrixOverRing& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidArgument("empty matrix");
  auto a = m.entries;
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidArgument("matrix is not square");
  }
  bool negate = false;
  auto prev = Polynomial::constant(m.ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return Polynomial(m.ring);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw InternalError("inexact division in fraction-free elimination");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Polynomial(m.ring);
    }
    prev = a[k][k];
  }
  auto det = a[n - 1][n - 1];
  return negate ? -det : det;
}

Coeff determinant(const ScalarMatrix& m, const PrimeModulus& mod) {
  auto a = m;
  const std::size_t n = a.size();
  Coeff det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = mod.neg(det);
    }
    det = mod.mul(det, a[k][k]);
    const Coeff inv = mod.inv(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Coeff f = mod.mul(a[i][k], inv);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] = mod.sub(a[i][j], mod.mul(f, a[k][j]));
    }
  }
  return det;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const PrimeModulus& mod) {
  const std::size_t n = a.size();
  ScalarMatrix c(n, std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = mod.add(c[i][j], mod.mul(a[i][k], b[k][j]));
    }
  }
  return c;
}

ScalarMatrix transpose(const ScalarMatrix& a) {
  ScalarMatrix t(a.size(), std::vector<Coeff>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

MatrixOverRing jacobian(const Ring& ring, const std::vector<Polynomial>& new_basis) {
  require_square(ring, new_basis);
  MatrixOverRing j{ring, {}};
  for (const auto& y : new_basis) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->arity(); ++v) row.push_back(partial_derivative(y, v));
    j.entries.push_back(std::move(row));
  }
  return j;
}

bool is_ring_unit(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  return f.ring()->laurent() && f.is_monomial();
}

FrobJacobian frobenius_jacobian(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                unsigned e) {
  require_square(ring, new_basis);
  const auto q = checked_prime_power(ring->p(), e);
  const std::size_t n = ring->arity();
  std::int64_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) {
    dim *= q;
    if (dim > kFrobJacobianBudget) {
      throw BudgetExceeded("Frobenius jacobian of size q^n > " +
                           std::to_string(kFrobJacobianBudget) + " is not assembled");
    }
  }
  FrobJacobian fj{ring, e, q, all_indices(n, q), MatrixOverRing{ring, {}}};
  const std::size_t size = fj.indices.size();
  fj.xi.entries.assign(size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (std::size_t col = 0; col < size; ++col) {
    const auto yj = basis_power(ring, new_basis, fj.indices[col]);
    auto d = decompose(yj, e, DecompositionMode::absolute);
    if (!(d.recompose() == yj)) throw InternalError("Frobenius decomposition does not recompose");
    for (std::size_t row = 0; row < size; ++row) {
      auto it = d.components.find(fj.indices[row]);
      if (it != d.components.end()) fj.xi.entries[row][col] = it->second;
    }
  }
  return fj;
}

BasisValidation validate_basis(const Ring& ring, const std::vector<Polynomial>& new_basis) {
  auto jdet = determinant(jacobian(ring, new_basis));
  auto fdet = determinant(frobenius_jacobian(ring, new_basis, 1).xi);
  BasisValidation v{is_ring_unit(jdet), is_ring_unit(fdet), jdet, fdet};
  if (v.is_d_basis != v.is_p_basis) {
    throw InternalError("d-basis and p-basis tests disagree: det J = " + jdet.to_string() +
                        ", det Xi = " + fdet.to_string());
  }
  return v;
}

Polynomial dual_generator_ratio(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                unsigned e) {
  require_square(ring, new_basis);
  const auto q = checked_prime_power(ring->p(), e);
  const std::size_t n = ring->arity();
  const MultiIndex top(n, q - 1);
  Polynomial xi(ring);
  for (const auto& j : all_indices(n, q)) {
    auto d = decompose(basis_power(ring, new_basis, j), e, DecompositionMode::absolute);
    auto it = d.components.find(top);
    if (it == d.components.end()) continue;
    xi += frob(it->second, e) * basis_power(ring, new_basis, complement(j, q));
  }
  auto expected = pow(determinant(jacobian(ring, new_basis)), static_cast<std::uint64_t>(q - 1));
  if (!(xi == expected)) {
    throw InternalError("dual generator ratio " + xi.to_string() + " differs from det(J)^(q-1) = " +
                        expected.to_string());
  }
  return xi;
}

Polynomial dual_generator_ratio_derivative(const Ring& ring,
                                           const std::vector<Polynomial>& new_basis) {
  require_square(ring, new_basis);
  const std::int64_t p = ring->p();
  const std::size_t n = ring->arity();
  Polynomial xi(ring);
  for (const auto& j : all_indices(n, p)) {
    auto d = basis_power(ring, new_basis, j);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::int64_t r = 0; r + 1 < p; ++r) d = partial_derivative(d, v);
    }
    if (n % 2 == 1) d = -d;
    xi += d * basis_power(ring, new_basis, complement(j, p));
  }
  return xi;
}

Polynomial dual_generator_ratio_cocycle(const Ring& ring, const std::vector<Polynomial>& new_basis,
                                        unsigned e) {
  if (e == 0) throw InvalidArgument("level must be positive");
  const auto xi1 = dual_generator_ratio_derivative(ring, new_basis);
  auto out = xi1;
  for (unsigned r = 1; r < e; ++r) out = out * frob(xi1, r);
  return out;
}

std::vector<std::vector<std::vector<std::int64_t>>> admissible_matrices(std::uint64_t p,
                                                                         std::size_t n) {
  std::vector<std::vector<std::vector<std::int64_t>>> out;
  enumerate_tables(n, static_cast<std::int64_t>(p) - 1, [&out](const auto& a) { out.push_back(a); });
  return out;
}

Coeff xi_operator(const ScalarMatrix& mu, const PrimeModulus& mod) {
  const std::size_t n = mu.size();
  for (const auto& row : mu) {
    if (row.size() != n) throw InvalidArgument("matrix is not square");
  }
  const auto fact = factorials(mod);
  const Coeff top = fact[mod.value() - 1];
  Coeff total = 0;
  enumerate_tables(n, static_cast<std::int64_t>(mod.value()) - 1, [&](const auto& a) {
    Coeff term = 1;
    for (std::size_t l = 0; l < n && term != 0; ++l) {
      Coeff denom = 1;
      for (std::size_t k = 0; k < n; ++k) {
        denom = mod.mul(denom, fact[static_cast<std::size_t>(a[l][k])]);
        term = mod.mul(term, mod.pow(mu[l][k], static_cast<std::uint64_t>(a[l][k])));
      }
      term = mod.mul(term, mod.mul(top, mod.inv(denom)));
    }
    total = mod.add(total, term);
  });
  return total;
}

DetIdentityReport verify_det_identity(std::uint64_t p, std::size_t n, std::size_t random_count,
                                      std::uint64_t seed, std::size_t exhaustive_limit) {
  const PrimeModulus mod(p);
  if (n == 0) throw InvalidArgument("matrix size must be positive");
  DetIdentityReport rep;
  auto record = [&rep](const std::string& what) {
    ++rep.failures;
    if (!rep.counterexample) rep.counterexample = what;
  };
  auto check_one = [&](const ScalarMatrix& m) {
    const Coeff d = determinant(m, mod);
    const Coeff x = xi_operator(m, mod);
    if (x != mod.pow(d, p - 1)) record("xi != det^(p-1) at " + describe(m));
    if (xi_operator(transpose(m), mod) != x) record("xi(m^T) != xi(m) at " + describe(m));
    return d != 0;
  };
  auto check_pair = [&](const ScalarMatrix& a, const ScalarMatrix& b) {
    ++rep.pairs;
    if (xi_operator(multiply(a, b, mod), mod) !=
        mod.mul(xi_operator(a, mod), xi_operator(b, mod))) {
      record("xi not multiplicative at " + describe(a) + " * " + describe(b));
    }
  };

  if (random_count == 0) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= p;
      if (total > exhaustive_limit) {
        throw BudgetExceeded("exhaustive sweep over " + std::to_string(p) + "^" +
                             std::to_string(n * n) + " matrices exceeds the budget");
      }
    }
    std::vector<ScalarMatrix> invertible;
    for (std::size_t code = 0; code < total; ++code) {
      ScalarMatrix m(n, std::vector<Coeff>(n));
      std::size_t c = code;
      for (auto& row : m) {
        for (auto& v : row) {
          v = static_cast<Coeff>(c % p);
          c /= p;
        }
      }
      if (check_one(m)) {
        ++rep.matrices;
        invertible.push_back(std::move(m));
      } else {
        ++rep.singular;
      }
    }
    for (const auto& a : invertible) {
      for (const auto& b : invertible) check_pair(a, b);
    }
    return rep;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coeff> digit(0, static_cast<Coeff>(p - 1));
  auto random_invertible = [&] {
    while (true) {
      ScalarMatrix m(n, std::vector<Coeff>(n));
      for (auto& row : m) {
        for (auto& v : row) v = digit(rng);
      }
      if (determinant(m, mod) != 0) return m;
    }
  };
  for (std::size_t i = 0; i < random_count; ++i) {
    auto a = random_invertible();
    check_one(a);
    ++rep.matrices;
    check_pair(a, random_invertible());
  }
  return rep;
}

CombinatorialCheck combinatorial_identity_check(std::uint64_t p,
                                                const std::vector<std::vector<std::int64_t>>& a) {
  const PrimeModulus mod(p);
  const std::size_t n = a.size();
  const auto target = static_cast<std::int64_t>(p) - 1;
  if (n == 0) throw InvalidArgument("malformed matrix: empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidArgument("malformed matrix: not square");
    std::int64_t rs = 0;
    std::int64_t cs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] < 0 || a[i][j] > target || a[j][i] < 0) {
        throw InvalidArgument("malformed matrix: entries must lie in [0, p-1]");
      }
      rs += a[i][j];
      cs += a[j][i];
    }
    if (rs != target || cs != target) {
      throw InvalidArgument("malformed matrix: row and column sums must equal p-1");
    }
  }
  const auto fact = factorials(mod);
  const Coeff top = fact[p - 1];

  CombinatorialCheck res;
  res.lhs = 1;
  for (std::size_t l = 0; l < n; ++l) {
    Coeff denom = 1;
    for (std::size_t k = 0; k < n; ++k) denom = mod.mul(denom, fact[static_cast<std::size_t>(a[l][k])]);
    res.lhs = mod.mul(res.lhs, mod.mul(top, mod.inv(denom)));
  }

  std::vector<std::vector<std::size_t>> perms;
  std::vector<bool> odd;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    perms.push_back(sigma);
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inv += sigma[i] > sigma[j] ? 1 : 0;
    }
    odd.push_back(inv % 2 == 1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  // b assigns a multiplicity to each permutation; its weighted sum of
  // permutation matrices must reproduce a.
  std::vector<std::vector<std::int64_t>> acc(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> b(perms.size(), 0);
  res.rhs = 0;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t idx, std::int64_t left) {
    if (idx + 1 == perms.size()) {
      b[idx] = left;
      bool fits = true;
      for (std::size_t k = 0; k < n; ++k) fits = fits && acc[k][perms[idx][k]] + left == a[k][perms[idx][k]];
      if (!fits) return;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const auto extra = perms[idx][k] == l ? left : 0;
          if (acc[k][l] + extra != a[k][l]) return;
        }
      }
      Coeff term = top;
      bool negative = false;
      for (std::size_t s = 0; s < perms.size(); ++s) {
        term = mod.mul(term, mod.inv(fact[static_cast<std::size_t>(b[s])]));
        if (odd[s] && b[s] % 2 == 1) negative = !negative;
      }
      res.rhs = mod.add(res.rhs, negative ? mod.neg(term) : term);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      bool fits = true;
      for (std::size_t k = 0; k < n; ++k) {
        fits = fits && acc[k][perms[idx][k]] + v <= a[k][perms[idx][k]];
      }
      if (!fits) break;
      b[idx] = v;
      for (std::size_t k = 0; k < n; ++k) acc[k][perms[idx][k]] += v;
      rec(idx + 1, left - v);
      for (std::size_t k = 0; k < n; ++k) acc[k][perms[idx][k]] -= v;
    }
    b[idx] = 0;
  };
  rec(0, target);
  res.equal = res.lhs == res.rhs;
  return res;
}

std::vector<Coeff> falling_sum_values(std::uint64_t p) {
  const PrimeModulus mod(p);
  std::vector<Coeff> out;
  for (std::uint64_t i = 1; i + 1 <= p; ++i) {
    Coeff s = 0;
    for (std::uint64_t j = i; j + 1 <= p; ++j) {
      Coeff prod = 1;
      for (std::uint64_t k = 0; k < i; ++k) prod = mod.mul(prod, mod.reduce(static_cast<std::int64_t>(j - k)));
      s = mod.add(s, prod);
    }
    out.push_back(s);
  }
  return out;
}

bool falling_sum_identity_holds(std::uint64_t p) {
  const auto v = falling_sum_values(p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool last = i + 1 == v.size();
    if (v[i] != (last ? static_cast<Coeff>(p - 1) : 0)) return false;
  }
  return true;
}

}  // namespace frobkit
