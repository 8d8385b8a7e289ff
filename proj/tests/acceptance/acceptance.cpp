// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "test_support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = v.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s (%.2f s, limit %.0f s): %s%s\n", pass ? "PASS" : "FAIL", id, name, secs,
              limit_s, v.detail.c_str(), in_time ? "" : " [time limit exceeded]");
  std::fflush(stdout);
}

std::string num(std::size_t n) { return std::to_string(n); }

std::vector<Ideal> perez_ideals(const Ring& R) { return {ideal(R, {"x+y"}), ideal(R, {"x*y"})}; }

Verdict xi_exhaustive() {
  // |GL_2(F_3)| = (3^2 - 1)(3^2 - 3)
  const std::size_t order = (9 - 1) * (9 - 3);
  auto rep = verify_det_identity(3, 2, 0);
  const bool ok = rep.ok() && rep.matrices == order && rep.pairs == order * order;
  return {ok, num(rep.matrices) + "/" + num(order) + " matrices, " + num(rep.pairs) + " pairs, " +
                  num(rep.failures) + " failures"};
}

Verdict xi_sampled() {
  auto a = verify_det_identity(5, 2, 10000, 1);
  auto b = verify_det_identity(3, 3, 1000, 2);
  const bool ok = a.ok() && b.ok() && a.matrices == 10000 && b.matrices == 1000;
  return {ok, "GL2(F5) " + num(a.matrices - a.failures) + "/" + num(a.matrices) + ", GL3(F3) " +
                  num(b.matrices - b.failures) + "/" + num(b.matrices)};
}

Verdict combinatorial() {
  std::size_t total = 0, good = 0;
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint64_t>>{{2, 3}, {2, 5}, {3, 3}}) {
    for (const auto& a : admissible_matrices(p, n)) {
      ++total;
      good += combinatorial_identity_check(p, a).equal ? 1 : 0;
    }
  }
  return {total > 0 && good == total, num(good) + "/" + num(total) + " admissible matrices"};
}

Verdict dual_ratio() {
  auto L = ring(3, {"x"}, true);
  std::vector<Polynomial> inv{parse_poly("x^-1", L)};
  auto xi1 = dual_generator_ratio(L, inv);
  auto det1 = determinant(jacobian(L, inv));
  auto R = ring(3, {"x", "y"});
  std::vector<Polynomial> tri{parse_poly("x+y^2", R), parse_poly("y", R)};
  auto xi2 = dual_generator_ratio(R, tri);
  const bool ok = xi1 == parse_poly("x^-4", L) && xi1 == pow(det1, 2) &&
                  xi1 == dual_generator_ratio_derivative(L, inv) &&
                  xi2 == Polynomial::constant(R, 1) && xi2 == dual_generator_ratio_derivative(R, tri);
  return {ok, "{x^-1}: xi = " + xi1.to_string() + ", det^2 = " + pow(det1, 2).to_string() +
                  "; {x+y^2, y}: xi = " + xi2.to_string()};
}

Verdict perez_thresholds() {
  auto R = ring(3, {"x", "y"});
  ThresholdOptions opts;
  opts.confirm_depth = 6;
  std::string detail;
  bool ok = true;
  for (auto [t1, expect] : std::vector<std::pair<Rational, Rational>>{
           {q(1, 3), q(2, 3)}, {q(2, 3), q(2, 3)}, {q(1, 9), q(8, 9)}, {q(7, 9), q(5, 9)}}) {
    ThresholdProblem prob{CartierAlgebraSpec::make_full(R), {ideal(R, {"x+y"})}, {t1}, ideal(R, {"x*y"})};
    auto r = fpt_search(prob, opts);
    const bool hit = r.exact && *r.exact == expect;
    ok = ok && hit;
    detail += "t1=" + to_string(t1) + " -> " + (r.exact ? to_string(*r.exact) : "none") + "; ";
  }
  return {ok, detail};
}

Verdict staircase_consistency() {
  auto R = ring(3, {"x", "y"});
  auto full = CartierAlgebraSpec::make_full(R);
  RasterOptions opts;
  opts.jobs = 0;
  GridSpec g3{3, 2, q(1), 3}, g4{3, 2, q(1), 4};
  auto r3 = constancy_raster(perez_ideals(R), full, g3, opts);
  auto r4 = constancy_raster(perez_ideals(R), full, g4, opts);
  std::size_t separated = 0;
  auto st = perez_staircase(3, 3);
  for (const auto& v : st) separated += separates_classes(r4, v) ? 1 : 0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < g3.size(); ++i) {
    auto c = g3.coords(i);
    agree += r3.class_ids[i] == r4.class_ids[g4.index({3 * c[0], 3 * c[1]})] ? 1 : 0;
  }
  const bool ok = separated == st.size() && agree == g3.size() && r3.class_count() == r4.class_count();
  return {ok, num(separated) + "/" + num(st.size()) + " vertices separate; classes k=3: " +
                  num(r3.class_count()) + ", k=4: " + num(r4.class_count()) + "; shared points agree " +
                  num(agree) + "/" + num(g3.size())};
}

Verdict t_invariance() {
  bool ok = true;
  std::size_t checks = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    auto R = ring(p, {"x", "y"});
    auto m = ideal(R, {"x", "y"});
    for (std::int64_t l = 0; 2 * l <= static_cast<std::int64_t>(p) - 1; ++l) {
      ++checks;
      ok = ok && ideal_eq(transform_chi_symbolic(m, {2 * l, static_cast<std::int64_t>(p) - l - 1}, perez_ideals(R)), m);
    }
  }
  auto R = ring(3, {"x", "y"});
  auto full = CartierAlgebraSpec::make_full(R);
  auto m = ideal(R, {"x", "y"});
  RasterOptions opts;
  opts.jobs = 0;
  GridSpec src{3, 2, q(1), 4}, dst{3, 2, q(1), 3};
  auto chi4 = chi_raster(perez_ideals(R), full, m, src, opts);
  auto chi3 = chi_raster(perez_ideals(R), full, m, dst, opts);
  std::size_t cells = 0, agree = 0;
  for (std::int64_t l = 0; l <= 1; ++l) {
    auto moved = apply_T(chi4, {1, {2 * l, 3 - l - 1}});
    for (std::size_t i = 0; i < dst.size(); ++i) {
      ++cells;
      agree += moved.values[i] == chi3.values[i] ? 1 : 0;
    }
  }
  ok = ok && agree == cells;
  return {ok, num(checks) + " symbolic identities; raster cells agree " + num(agree) + "/" + num(cells)};
}

Verdict scaling_skoda() {
  auto R = ring(3, {"x", "y"});
  auto full = CartierAlgebraSpec::make_full(R);
  const auto f = ideal(R, {"x^2+y^3"});
  const std::vector<Rational> grid{q(1, 2), q(2, 3), q(5, 6), q(1), q(7, 5),
                                   q(3, 2), q(5, 3), q(2), q(9, 4), q(11, 5)};
  std::size_t scaled = 0, skoda = 0, skoda_points = 0;
  for (const auto& t : grid) {
    auto tau_t = tau_mixed(MixedPair({f}, {t}), full).ideal;
    auto tau_tp = tau_mixed(MixedPair({f}, {t / 3}), full).ideal;
    scaled += ideal_eq(tau_tp, scale_test_ideal(tau_t, full)) ? 1 : 0;
    if (t >= 1) {
      ++skoda_points;
      auto lower = tau_mixed(MixedPair({f}, {t - 1}), full).ideal;
      skoda += ideal_eq(tau_t, product(f, lower)) ? 1 : 0;
    }
  }
  const bool ok = scaled == grid.size() && skoda == skoda_points;
  return {ok, "scaling " + num(scaled) + "/" + num(grid.size()) + ", Skoda " + num(skoda) + "/" +
                  num(skoda_points) + " for x^2+y^3"};
}

Verdict theorem_b() {
  auto base = ring(3, {"t"});
  auto full = CartierAlgebraSpec::make_full(base);
  std::size_t good = 0, total = 0;
  for (const auto& fiber : {std::vector<std::string>{"x"}, std::vector<std::string>{"x", "y"}}) {
    auto chart = RelativeChart::make(base, fiber);
    for (auto [f, t] : std::vector<std::pair<std::string, Rational>>{{"t", q(1, 2)}, {"t*(t+1)", q(2, 3)}}) {
      ++total;
      good += theorem_b_check(full, MixedPair({ideal(base, {f})}, {t}), chart).equal ? 1 : 0;
    }
    ++total;
    good += sigma_pullback_check(CartierAlgebraSpec::parse("1:t^4", base), chart).equal ? 1 : 0;
  }
  return {good == total, num(good) + "/" + num(total) + " chart comparisons equal"};
}

Verdict hausdorff() {
  auto R = ring(3, {"x", "y"});
  GridSpec g{3, 2, q(1), 5};
  RasterOptions opts;
  opts.jobs = 0;
  auto a3 = unit_mask(perez_ideals(R), CartierAlgebraSpec::make_full(R), g, opts);
  auto d = hausdorff_distance(g, a3, lct_mask(g));
  const Rational tol(2, 243);
  const bool ok = d >= q(1, 3) - tol && d <= q(1, 3) + tol;
  return {ok, "d_H = " + to_string(d) + ", expected 1/3 +- 2/243"};
}

Verdict series() {
  const auto s = staircase_partial_sum(3, 12);
  const double err = std::fabs(to_double(s) - 1.5);
  char buf[96];
  std::snprintf(buf, sizeof buf, " = %.6f, |diff from 3/2| = %.6f, tolerance 0.001", to_double(s), err);
  return {err <= 1e-3, to_string(s) + buf};
}

Verdict property_suites() {
  std::size_t checks = 0, bad = 0;
  auto expect = [&](bool c) {
    ++checks;
    bad += c ? 0 : 1;
  };
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring(p, {"x", "y"});
    auto full = CartierAlgebraSpec::make_full(R);
    for (int it = 0; it < 20; ++it) {
      auto f = random_poly(R, rng, 5, 10);
      expect(decompose(f, 1).recompose() == f);
      expect(decompose(f, 2).recompose() == f);
      Ideal I(R, {f, random_poly(R, rng, 2, 6)});
      auto root = bracket_root(I, 1);
      expect(frob_power(root, 1).contains(I));
      Ideal J(R, {random_poly(R, rng, 2, 3)});
      expect(J.contains(root) == frob_power(J, 1).contains(I));
      std::vector<Polynomial> gens{random_poly(R, rng, 3, 3), random_poly(R, rng, 3, 3)};
      Ideal A(R, gens);
      Ideal B(R, {gens[1], gens[0] + gens[1] * random_poly(R, rng, 2, 2)});
      expect(A.to_string() == B.to_string());
    }
    for (const char* f : {"x^2+y^3", "x*y*(x+y)"}) {
      Ideal prev = Ideal::unit(R);
      for (int k = 0; k <= 12; ++k) {
        auto cur = tau_mixed(MixedPair({ideal(R, {f})}, {Rational(k, static_cast<std::int64_t>(p * p))}), full).ideal;
        expect(prev.contains(cur));
        prev = cur;
      }
    }
  }
  std::size_t primes = 0;
  for (std::uint64_t p = 2; p <= 101; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    ++primes;
    expect(falling_sum_identity_holds(p));
  }
  return {bad == 0, num(checks - bad) + "/" + num(checks) + " property checks, falling-factorial sums on " +
                        num(primes) + " primes"};
}

}  // namespace

int main() {
  criterion(1, "xi identity, exhaustive GL2(F3)", 1, xi_exhaustive);
  criterion(2, "xi identity, sampled GL2(F5) and GL3(F3)", 10, xi_sampled);
  criterion(3, "combinatorial identity", 30, combinatorial);
  criterion(4, "dual generator ratio", 1, dual_ratio);
  criterion(5, "thresholds of the two-curve example", 120, perez_thresholds);
  criterion(6, "staircase consistency", 1800, staircase_consistency);
  criterion(7, "T-operator invariance", 60, t_invariance);
  criterion(8, "scaling and Skoda laws", 120, scaling_skoda);
  criterion(9, "chart pullback desk check", 60, theorem_b);
  criterion(10, "Hausdorff distance to the LCT region", 600, hausdorff);
  criterion(11, "staircase series truncation", 1, series);
  criterion(12, "property suites", 120, property_suites);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
