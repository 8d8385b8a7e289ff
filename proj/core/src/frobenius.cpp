#include "frobkit/frobenius.hpp"

#include <algorithm>
#include <unordered_map>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t q) {
  auto d = a / q;
  if ((a % q != 0) && (a < 0)) --d;
  return d;
}

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& v) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (auto e : v) {
      h ^= static_cast<std::uint64_t>(e);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

FrobDecomposition decompose(const Polynomial& g, unsigned e, DecompositionMode mode) {
  if (e == 0) throw InvalidArgument("decomposition level must be positive");
  const auto& ring = g.ring();
  FrobDecomposition d;
  d.ring = ring;
  d.level = e;
  d.q = checked_prime_power(ring->p(), e);
  d.mode = mode;
  d.first_var = mode == DecompositionMode::absolute ? 0 : ring->fiber_begin();
  const std::size_t n = ring->arity();
  const std::size_t k = n - d.first_var;

  if (mode == DecompositionMode::absolute) {
    std::unordered_map<MultiIndex, std::vector<Term>, MultiIndexHash> buckets;
    for (const auto& t : g.terms()) {
      MultiIndex idx(k);
      Monomial root;
      for (std::size_t i = 0; i < n; ++i) {
        root.exp[i] = floor_div(t.mono.exp[i], d.q);
        idx[i] = t.mono.exp[i] - root.exp[i] * d.q;
      }
      buckets[idx].push_back(Term{root, t.coeff});
    }
    for (auto& [idx, terms] : buckets) {
      d.components.emplace(idx, Polynomial::from_terms(ring, std::move(terms)));
    }
    return d;
  }

  // relative: group by (fiber residue, rooted fiber monomial)
  std::map<MultiIndex, std::vector<std::pair<Monomial, Term>>> buckets;
  for (const auto& t : g.terms()) {
    MultiIndex idx(k);
    Monomial s;
    Monomial base;
    for (std::size_t i = 0; i < d.first_var; ++i) base.exp[i] = t.mono.exp[i];
    for (std::size_t i = d.first_var; i < n; ++i) {
      s.exp[i] = floor_div(t.mono.exp[i], d.q);
      idx[i - d.first_var] = t.mono.exp[i] - s.exp[i] * d.q;
    }
    buckets[idx].push_back({s, Term{base, t.coeff}});
  }
  for (auto& [idx, items] : buckets) {
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> by_s;
    std::vector<Monomial> order;
    for (auto& [s, term] : items) {
      auto [it, inserted] = by_s.try_emplace(s);
      if (inserted) order.push_back(s);
      it->second.push_back(term);
    }
    std::sort(order.begin(), order.end(), [&ring](const Monomial& a, const Monomial& b) {
      return ring->compare(a, b) > 0;
    });
    std::vector<RelativePair> pairs;
    for (const auto& s : order) {
      auto r = Polynomial::from_terms(ring, std::move(by_s[s]));
      if (r.is_zero()) continue;
      pairs.push_back(RelativePair{Polynomial::monomial(ring, s), std::move(r)});
    }
    if (!pairs.empty()) d.relative.emplace(idx, std::move(pairs));
  }
  return d;
}

Polynomial FrobDecomposition::recompose() const {
  Polynomial acc(ring);
  auto index_monomial = [this](const MultiIndex& idx) {
    Monomial m;
    for (std::size_t i = 0; i < idx.size(); ++i) m.exp[first_var + i] = idx[i];
    return m;
  };
  if (mode == DecompositionMode::absolute) {
    for (const auto& [idx, c] : components) acc += frob(c, level).shifted(index_monomial(idx));
  } else {
    for (const auto& [idx, pairs] : relative) {
      for (const auto& pr : pairs) acc += (frob(pr.s, level) * pr.r).shifted(index_monomial(idx));
    }
  }
  return acc;
}

Polynomial trace(const Polynomial& g, unsigned e) {
  auto d = decompose(g, e, DecompositionMode::absolute);
  MultiIndex top(g.ring()->arity(), d.q - 1);
  auto it = d.components.find(top);
  return it == d.components.end() ? Polynomial(g.ring()) : it->second;
}

std::vector<RelativePair> relative_trace(const Polynomial& g, unsigned e) {
  auto d = decompose(g, e, DecompositionMode::relative);
  MultiIndex top(g.ring()->fiber_count(), d.q - 1);
  auto it = d.relative.find(top);
  return it == d.relative.end() ? std::vector<RelativePair>{} : it->second;
}

std::vector<Polynomial> root_components(const Polynomial& g, unsigned e) {
  auto d = decompose(g, e, DecompositionMode::absolute);
  std::vector<Polynomial> out;
  out.reserve(d.components.size());
  for (auto& [idx, c] : d.components) out.push_back(c.monic());
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.to_string() < b.to_string();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ideal bracket_root(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) {
    auto cs = root_components(g, e);
    gens.insert(gens.end(), cs.begin(), cs.end());
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Polynomial root_exact(const Polynomial& f, unsigned e) {
  const auto q = checked_prime_power(f.ring()->p(), e);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->arity(); ++i) {
      if (t.mono.exp[i] % q != 0) {
        throw InvalidArgument("not a p^" + std::to_string(e) + "-th power: exponent " +
                              std::to_string(t.mono.exp[i]) + " of " + f.ring()->names()[i]);
      }
      m.exp[i] = t.mono.exp[i] / q;
    }
    out.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

}  // namespace frobkit
