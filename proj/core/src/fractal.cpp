#include "frobkit/fractal.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "frobkit/error.hpp"
#include "frobkit/parallel.hpp"

namespace frobkit {

namespace mp = boost::multiprecision;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<Rational> point_at(const GridSpec& grid, const std::vector<std::int64_t>& m) {
  std::vector<Rational> t;
  t.reserve(m.size());
  for (auto v : m) t.emplace_back(v, grid.scale());
  return t;
}

bool all_homogeneous_principal(const std::vector<Ideal>& ideals) {
  for (const auto& a : ideals) {
    if (a.gens().size() != 1 || !a.gens().front().is_homogeneous()) return false;
  }
  return true;
}

// N generated by exactly the variables of its ring.
bool is_variable_ideal(const Ideal& N) {
  const auto& ring = N.ring();
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return ideal_eq(N, Ideal(ring, std::move(vars)));
}

}  // namespace

std::int64_t GridSpec::scale() const { return checked_prime_power(p, mesh); }

std::int64_t GridSpec::side() const {
  const Rational n = bound * Rational(scale());
  if (n.denominator() != 1) {
    throw InvalidArgument("box bound " + to_string(bound) + " is not on the mesh 1/" +
                          std::to_string(p) + "^" + std::to_string(mesh));
  }
  return n.numerator() + 1;
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= static_cast<std::size_t>(side());
  return n;
}

void GridSpec::validate() const {
  if (!is_prime(p)) throw InvalidArgument("grid modulus must be prime");
  if (dim == 0 || dim > kMaxVars) throw InvalidArgument("grid dimension out of range");
  if (bound < 0) throw InvalidArgument("box bound must be nonnegative");
  (void)side();
}

std::vector<std::int64_t> GridSpec::coords(std::size_t index) const {
  const auto s = static_cast<std::size_t>(side());
  std::vector<std::int64_t> m(dim);
  for (std::size_t i = dim; i-- > 0;) {
    m[i] = static_cast<std::int64_t>(index % s);
    index /= s;
  }
  return m;
}

std::size_t GridSpec::index(const std::vector<std::int64_t>& m) const {
  const auto s = static_cast<std::size_t>(side());
  std::size_t idx = 0;
  for (auto v : m) idx = idx * s + static_cast<std::size_t>(v);
  return idx;
}

std::vector<Rational> GridSpec::point(std::size_t index) const {
  return point_at(*this, coords(index));
}

bool RasterGrid::is_unit_class(std::uint64_t id) const { return classes.at(id).is_unit(); }

RegionFunction RegionFunction::constant(const GridSpec& grid, const Rational& v) {
  grid.validate();
  return RegionFunction{grid, std::vector<Rational>(grid.size(), v), std::nullopt};
}

Rational RegionFunction::at(const std::vector<std::int64_t>& m) const {
  return values[grid.index(m)];
}

RasterGrid constancy_raster(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                            const GridSpec& grid, const RasterOptions& opts) {
  grid.validate();
  if (ideals.size() != grid.dim) throw InvalidArgument("grid dimension must match the ideals");
  if (grid.p != alg.ring->p()) throw InvalidArgument("grid prime differs from the ring prime");
  const std::size_t n = grid.size();
  std::vector<std::optional<Ideal>> taus(n);
  parallel_for(n, opts.jobs, [&](std::size_t i) {
    taus[i] = tau_mixed(MixedPair(ideals, grid.point(i)), alg, opts.tau).ideal;
  });
  RasterGrid r{grid, {}, {}};
  r.class_ids.reserve(n);
  for (auto& t : taus) {
    auto id = t->hash();
    r.class_ids.push_back(id);
    r.classes.try_emplace(id, std::move(*t));
  }
  return r;
}

std::vector<bool> unit_mask(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                            const GridSpec& grid, const RasterOptions& opts) {
  grid.validate();
  if (ideals.size() != grid.dim) throw InvalidArgument("grid dimension must match the ideals");
  const std::size_t n = grid.size();
  std::vector<char> out(n, 0);
  parallel_for(n, opts.jobs, [&](std::size_t i) {
    out[i] = tau_is_unit(MixedPair(ideals, grid.point(i)), alg, opts.tau) ? 1 : 0;
  });
  return std::vector<bool>(out.begin(), out.end());
}

RegionFunction chi_raster(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                          const Ideal& N, const GridSpec& grid, const RasterOptions& opts) {
  grid.validate();
  RegionFunction f{grid, std::vector<Rational>(grid.size(), Rational(0)), N};
  if (N.is_unit()) return f;
  // A homogeneous test ideal escapes the variable ideal exactly when it is
  // the unit ideal.
  if (alg.full && !alg.chart && all_homogeneous_principal(ideals) && is_variable_ideal(N)) {
    auto mask = unit_mask(ideals, alg, grid, opts);
    for (std::size_t i = 0; i < mask.size(); ++i) f.values[i] = mask[i] ? 1 : 0;
    return f;
  }
  std::vector<char> out(grid.size(), 0);
  parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
    auto tau = tau_mixed(MixedPair(ideals, grid.point(i)), alg, opts.tau).ideal;
    out[i] = N.contains(tau) ? 0 : 1;
  });
  for (std::size_t i = 0; i < out.size(); ++i) f.values[i] = out[i];
  return f;
}

RegionFunction chi_from_raster(const RasterGrid& raster, const Ideal& N) {
  std::map<std::uint64_t, bool> escapes;
  for (const auto& [id, tau] : raster.classes) escapes[id] = !N.contains(tau);
  RegionFunction f{raster.grid, {}, N};
  f.values.reserve(raster.class_ids.size());
  for (auto id : raster.class_ids) f.values.emplace_back(escapes[id] ? 1 : 0);
  return f;
}

RegionFunction apply_T(const RegionFunction& phi, const TOperator& op,
                       std::optional<Rational> out_bound) {
  const auto& src = phi.grid;
  if (op.c > src.mesh) {
    throw InvalidArgument("mesh incompatibility: source mesh " + std::to_string(src.mesh) +
                          " cannot absorb q = p^" + std::to_string(op.c));
  }
  if (op.b.size() != src.dim) throw InvalidArgument("offset has the wrong dimension");
  const auto q = checked_prime_power(src.p, op.c);
  for (auto v : op.b) {
    if (v < 0 || v > q) throw InvalidArgument("offsets must lie in [0, q]");
  }
  GridSpec out = src;
  out.mesh = src.mesh - op.c;
  if (out_bound) out.bound = *out_bound;
  out.validate();
  const auto lift = checked_prime_power(src.p, out.mesh);
  const auto src_side = src.side();
  RegionFunction res{out, std::vector<Rational>(out.size(), Rational(0)), std::nullopt};
  std::vector<std::int64_t> sm(src.dim);
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    auto m = out.coords(i);
    bool inside = true;
    for (std::size_t d = 0; d < src.dim; ++d) {
      sm[d] = m[d] + op.b[d] * lift;
      inside = inside && sm[d] < src_side;
    }
    if (inside) res.values[i] = phi.values[src.index(sm)];
  }
  return res;
}

TOperator compose(const TOperator& a, const TOperator& b, std::uint64_t p) {
  if (a.b.size() != b.b.size()) throw InvalidArgument("operators differ in dimension");
  TOperator r{a.c + b.c, std::vector<std::int64_t>(a.b.size())};
  const auto qb = checked_prime_power(p, b.c);
  for (std::size_t i = 0; i < a.b.size(); ++i) r.b[i] = b.b[i] + qb * a.b[i];
  return r;
}

Ideal transform_chi_symbolic(const Ideal& N, const std::vector<std::int64_t>& b,
                             const std::vector<Ideal>& ideals) {
  if (b.size() != ideals.size()) throw InvalidArgument("one offset per ideal is required");
  const auto& ring = N.ring();
  const auto p = static_cast<std::int64_t>(ring->p());
  auto g = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    require_same_ring(ring, ideals[i].ring());
    if (b[i] < 0 || b[i] > p) throw InvalidArgument("offsets must lie in [0, p]");
    if (!ideals[i].is_principal() || ideals[i].is_zero()) {
      throw InvalidArgument("symbolic transform needs nonzero principal ideals");
    }
    const auto& f = ideals[i].gens().size() == 1 ? ideals[i].gens().front()
                                                 : ideals[i].basis().front();
    g = g * pow(f, static_cast<std::uint64_t>(b[i]));
  }
  if (N.is_unit()) return N;
  return colon(frob_power(N, 1), g);
}

std::vector<Vertex> perez_staircase(std::uint64_t p, unsigned depth) {
  PrimeModulus(p).require_odd("perez_staircase");
  struct Flat {
    Rational left, right, height;
  };
  std::vector<Flat> flats;
  for (unsigned j = 1; j <= depth; ++j) {
    const auto q = checked_prime_power(p, j);
    for (std::int64_t b = 1; b < q; b += 2) {
      bool leading_even = true;
      for (std::int64_t rest = b / static_cast<std::int64_t>(p); rest > 0 && leading_even;
           rest /= static_cast<std::int64_t>(p)) {
        leading_even = (rest % static_cast<std::int64_t>(p)) % 2 == 0;
      }
      if (!leading_even) continue;
      flats.push_back(Flat{Rational(b, q), Rational(b + 1, q), 1 - Rational(b + 1, 2 * q)});
    }
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) { return a.left < b.left; });
  auto diag = [](const Rational& x) { return 1 - x / 2; };
  std::vector<Vertex> v{{Rational(0), Rational(1)}};
  auto push = [&v](Vertex w) {
    if (!(v.back() == w)) v.push_back(w);
  };
  for (const auto& f : flats) {
    push({f.left, diag(f.left)});
    push({f.left, f.height});
    push({f.right, f.height});
  }
  push({Rational(1), Rational(1, 2)});
  return v;
}

double BoundaryLength::total() const { return to_double(axis_parallel) + other; }

BoundaryLength boundary_length(const std::vector<Vertex>& polyline) {
  BoundaryLength len;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const Rational dx = polyline[i].x - polyline[i - 1].x;
    const Rational dy = polyline[i].y - polyline[i - 1].y;
    if (dx.numerator() == 0 || dy.numerator() == 0) {
      len.axis_parallel += abs(dx) + abs(dy);
    } else {
      len.other += std::hypot(to_double(dx), to_double(dy));
    }
  }
  return len;
}

Rational staircase_partial_sum(std::uint64_t p, unsigned terms) {
  PrimeModulus(p).require_odd("staircase_partial_sum");
  const mp::cpp_rational P(static_cast<long long>(p));
  const mp::cpp_rational ratio = (P + 1) / (2 * P);
  mp::cpp_rational term = mp::cpp_rational(3, 2) * (P - 1) / (2 * P);
  mp::cpp_rational acc = 0;
  for (unsigned k = 1; k <= terms; ++k) {
    acc += term;
    term *= ratio;
  }
  const mp::cpp_int num = mp::numerator(acc);
  const mp::cpp_int den = mp::denominator(acc);
  constexpr auto lim = std::numeric_limits<std::int64_t>::max();
  if (mp::abs(num) > lim || den > lim) throw ExponentOverflow();
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

BoundaryLength staircase_region_perimeter(std::uint64_t p, unsigned depth) {
  auto poly = perez_staircase(p, depth);
  poly.push_back({Rational(1), Rational(0)});
  poly.push_back({Rational(0), Rational(0)});
  poly.push_back({Rational(0), Rational(1)});
  return boundary_length(poly);
}

Rational hausdorff_distance(const std::vector<std::vector<Rational>>& a,
                            const std::vector<std::vector<Rational>>& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("Hausdorff distance of an empty set");
  auto dist = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size()) throw InvalidArgument("points differ in dimension");
    Rational d(0);
    for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, abs(u[i] - v[i]));
    return d;
  };
  auto directed = [&dist](const auto& from, const auto& to) {
    Rational worst(0);
    for (const auto& u : from) {
      Rational best = dist(u, to.front());
      for (const auto& v : to) best = std::min(best, dist(u, v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

namespace {

// Chebyshev distance, in grid steps, from every point to the nearest source.
std::vector<std::int64_t> chebyshev_field(const GridSpec& grid, const std::vector<bool>& source) {
  const std::size_t n = grid.size();
  const auto side = grid.side();
  std::vector<std::int64_t> dist(n, -1);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (source[i]) {
      dist[i] = 0;
      queue.push_back(i);
    }
  }
  std::vector<std::vector<std::int64_t>> steps;
  const std::size_t combos = static_cast<std::size_t>(std::pow(3, grid.dim));
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<std::int64_t> s(grid.dim);
    std::size_t r = c;
    bool zero = true;
    for (auto& v : s) {
      v = static_cast<std::int64_t>(r % 3) - 1;
      r /= 3;
      zero = zero && v == 0;
    }
    if (!zero) steps.push_back(std::move(s));
  }
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    const auto m = grid.coords(i);
    for (const auto& s : steps) {
      auto w = m;
      bool inside = true;
      for (std::size_t d = 0; d < grid.dim; ++d) {
        w[d] += s[d];
        inside = inside && w[d] >= 0 && w[d] < side;
      }
      if (!inside) continue;
      const auto j = grid.index(w);
      if (dist[j] >= 0) continue;
      dist[j] = dist[i] + 1;
      queue.push_back(j);
    }
  }
  return dist;
}

}  // namespace

Rational hausdorff_distance(const GridSpec& grid, const std::vector<bool>& a,
                            const std::vector<bool>& b) {
  grid.validate();
  if (a.size() != grid.size() || b.size() != grid.size()) {
    throw InvalidArgument("mask size does not match the grid");
  }
  if (std::none_of(a.begin(), a.end(), [](bool v) { return v; }) ||
      std::none_of(b.begin(), b.end(), [](bool v) { return v; })) {
    throw InvalidArgument("Hausdorff distance of an empty set");
  }
  auto directed = [&grid](const std::vector<bool>& from, const std::vector<bool>& to) {
    auto field = chebyshev_field(grid, to);
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (from[i]) worst = std::max(worst, field[i]);
    }
    return worst;
  };
  return Rational(std::max(directed(a, b), directed(b, a)), grid.scale());
}

std::vector<bool> lct_mask(const GridSpec& grid) {
  grid.validate();
  if (grid.dim != 2) throw InvalidArgument("the LCT region lives in two dimensions");
  std::vector<bool> out(grid.size());
  const auto s = grid.scale();
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto m = grid.coords(i);
    out[i] = m[0] + 2 * m[1] < 2 * s;
  }
  return out;
}

bool separates_classes(const RasterGrid& raster, const Vertex& v) {
  const auto& g = raster.grid;
  if (g.dim != 2) throw InvalidArgument("vertex separation needs a two-dimensional raster");
  const auto s = g.scale();
  const Rational step(1, s);
  auto range = [&](const Rational& c) {
    auto lo = std::max<std::int64_t>(ceil((c - step) * Rational(s)), 0);
    auto hi = std::min<std::int64_t>(floor((c + step) * Rational(s)), g.side() - 1);
    return std::pair{lo, hi};
  };
  auto [x0, x1] = range(v.x);
  auto [y0, y1] = range(v.y);
  bool unit = false;
  bool other = false;
  for (auto x = x0; x <= x1; ++x) {
    for (auto y = y0; y <= y1; ++y) {
      const bool u = raster.is_unit_class(raster.class_ids[g.index({x, y})]);
      unit = unit || u;
      other = other || !u;
    }
  }
  return unit && other;
}

namespace {

std::size_t exact_rank(std::vector<std::vector<mp::cpp_int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto& pr = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const mp::cpp_int a = pr[col];
      const mp::cpp_int b = rows[r][col];
      mp::cpp_int g = 0;
      for (std::size_t k = col; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - pr[k] * b;
        g = gcd(g, rows[r][k]);
      }
      if (g > 1) {
        for (std::size_t k = col; k < cols; ++k) rows[r][k] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SpanRank pfractal_span_rank(const RegionFunction& phi, unsigned c_max,
                            std::optional<unsigned> out_mesh) {
  const auto& src = phi.grid;
  if (c_max > src.mesh) throw InvalidArgument("mesh incompatibility: c_max exceeds the mesh");
  const unsigned om = out_mesh.value_or(src.mesh - c_max);
  if (om + c_max > src.mesh) {
    throw InvalidArgument("mesh incompatibility: output mesh too fine for c_max");
  }
  GridSpec out = src;
  out.mesh = om;
  out.validate();
  const auto src_side = src.side();
  std::set<std::vector<Rational>> distinct;
  SpanRank res;
  for (unsigned c = 0; c <= c_max; ++c) {
    const auto q = checked_prime_power(src.p, c);
    const auto lift_t = checked_prime_power(src.p, src.mesh - om - c);
    const auto lift_b = checked_prime_power(src.p, src.mesh - c);
    std::vector<std::int64_t> b(src.dim, 0);
    while (true) {
      std::vector<Rational> row(out.size(), Rational(0));
      std::vector<std::int64_t> sm(src.dim);
      for (std::size_t i = 0; i < row.size(); ++i) {
        auto m = out.coords(i);
        bool inside = true;
        for (std::size_t d = 0; d < src.dim; ++d) {
          sm[d] = m[d] * lift_t + b[d] * lift_b;
          inside = inside && sm[d] < src_side;
        }
        if (inside) row[i] = phi.values[src.index(sm)];
      }
      ++res.rows;
      distinct.insert(std::move(row));
      std::size_t k = 0;
      while (k < src.dim && ++b[k] > q) b[k++] = 0;
      if (k == src.dim) break;
    }
  }
  res.distinct_rows = distinct.size();
  std::vector<std::vector<mp::cpp_int>> rows;
  rows.reserve(distinct.size());
  for (const auto& r : distinct) {
    std::int64_t l = 1;
    for (const auto& v : r) l = std::lcm(l, v.denominator());
    std::vector<mp::cpp_int> ir;
    ir.reserve(r.size());
    for (const auto& v : r) ir.emplace_back(mp::cpp_int(v.numerator()) * (l / v.denominator()));
    rows.push_back(std::move(ir));
  }
  res.rank = exact_rank(std::move(rows));
  return res;
}

std::string raster_csv(const RasterGrid& raster) {
  std::ostringstream os;
  const auto& g = raster.grid;
  for (std::size_t d = 0; d < g.dim; ++d) {
    os << "t" << d + 1 << "_num,t" << d + 1 << "_den,";
  }
  os << "class_hash\n";
  for (std::size_t i = 0; i < raster.class_ids.size(); ++i) {
    for (const auto& t : g.point(i)) os << t.numerator() << "," << t.denominator() << ",";
    os << hex64(raster.class_ids[i]) << "\n";
  }
  return os.str();
}

std::string raster_svg(const RasterGrid& raster, const std::vector<Vertex>* staircase) {
  const auto& g = raster.grid;
  if (g.dim != 2) throw InvalidArgument("SVG output needs a two-dimensional raster");
  static constexpr const char* palette[] = {"#f7f7f7", "#1b9e77", "#d95f02", "#7570b3",
                                            "#e7298a", "#66a61e", "#e6ab02", "#a6761d",
                                            "#666666", "#1f78b4", "#b2df8a", "#fb9a99"};
  std::map<std::uint64_t, std::size_t> color;
  std::size_t next = 1;
  for (const auto& [id, tau] : raster.classes) color[id] = tau.is_unit() ? 0 : next++;
  constexpr double view = 600.0;
  const double cell = view / static_cast<double>(g.scale());
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  for (std::size_t i = 0; i < raster.class_ids.size(); ++i) {
    auto m = g.coords(i);
    const double x = static_cast<double>(m[0]) * cell - cell / 2;
    const double y = view - static_cast<double>(m[1]) * cell - cell / 2;
    const auto c = color[raster.class_ids[i]];
    os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(cell)
       << "\" height=\"" << fmt(cell) << "\" fill=\""
       << palette[c == 0 ? 0 : 1 + (c - 1) % (std::size(palette) - 1)] << "\"/>\n";
  }
  if (staircase) {
    os << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < staircase->size(); ++i) {
      const auto& v = (*staircase)[i];
      os << (i ? " " : "") << fmt(to_double(v.x) * view) << "," << fmt(view - to_double(v.y) * view);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace frobkit
