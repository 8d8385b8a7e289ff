#pragma once

#include <map>
#include <vector>

#include "frobkit/ideal.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit {

// Residue multi-index over the decomposed variables, entries in [0, q).
using MultiIndex = std::vector<std::int64_t>;

enum class DecompositionMode {
  // Over all variables: g = sum_i g_i^q x^i.
  absolute,
  // Over the fiber variables only, keeping base variables unrooted.
  relative,
};

// s (fiber monomial, monic) paired with r (base polynomial carrying the
// coefficient), standing for s (x) F^e_* r.
struct RelativePair {
  Polynomial s;
  Polynomial r;
};

struct FrobDecomposition {
  Ring ring;
  unsigned level = 0;
  std::int64_t q = 0;
  DecompositionMode mode = DecompositionMode::absolute;
  // Index of the first decomposed variable (0 in absolute mode).
  std::size_t first_var = 0;
  std::map<MultiIndex, Polynomial> components;                  // absolute
  std::map<MultiIndex, std::vector<RelativePair>> relative;     // relative

  // Reassembles the decomposed polynomial.
  Polynomial recompose() const;
};

FrobDecomposition decompose(const Polynomial& g, unsigned e,
                            DecompositionMode mode = DecompositionMode::absolute);

// Absolute trace Phi^e: the component at (q-1, ..., q-1).
Polynomial trace(const Polynomial& g, unsigned e);

// Relative trace: the pairs at fiber index (q-1, ..., q-1).
std::vector<RelativePair> relative_trace(const Polynomial& g, unsigned e);

// I^[1/p^e]: ideal generated by every decomposition component of every
// generator of I.
Ideal bracket_root(const Ideal& ideal, unsigned e);
// Generators of bracket_root((g), e) without building an Ideal.
std::vector<Polynomial> root_components(const Polynomial& g, unsigned e);

// The p^e-th root of f; throws InvalidArgument when an exponent is not
// divisible by p^e.
Polynomial root_exact(const Polynomial& f, unsigned e);

}  // namespace frobkit
