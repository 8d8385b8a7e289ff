#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/cartier.hpp"

namespace frobkit {

// Lattice points m/p^mesh of the box [0, bound]^dim.
struct GridSpec {
  std::uint64_t p = 3;
  std::size_t dim = 2;
  Rational bound{1};
  unsigned mesh = 0;

  std::int64_t scale() const;  // p^mesh
  std::int64_t side() const;   // points per axis, bound*p^mesh + 1
  std::size_t size() const;    // side^dim
  // Integer coordinates m of a flat index, first axis varying slowest.
  std::vector<std::int64_t> coords(std::size_t index) const;
  std::size_t index(const std::vector<std::int64_t>& coords) const;
  std::vector<Rational> point(std::size_t index) const;
  void validate() const;
};

struct RasterGrid {
  GridSpec grid;
  std::vector<std::uint64_t> class_ids;
  std::map<std::uint64_t, Ideal> classes;

  std::size_t class_count() const { return classes.size(); }
  bool is_unit_class(std::uint64_t id) const;
};

struct RegionFunction {
  GridSpec grid;
  std::vector<Rational> values;
  // Set when the function is the indicator of tau not contained in N.
  std::optional<Ideal> label;

  static RegionFunction constant(const GridSpec& grid, const Rational& v);
  Rational at(const std::vector<std::int64_t>& coords) const;
};

struct TOperator {
  unsigned c = 0;  // q = p^c
  std::vector<std::int64_t> b;
};

struct RasterOptions {
  unsigned jobs = 1;
  TauOptions tau;
};

// tau at every grid point, classified by the hash of its reduced basis.
// The grid point supplies the exponents of the ideals.
RasterGrid constancy_raster(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                            const GridSpec& grid, const RasterOptions& opts = {});

// Per grid point, whether tau is the unit ideal.
std::vector<bool> unit_mask(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                            const GridSpec& grid, const RasterOptions& opts = {});

// chi_a^N on the grid.
RegionFunction chi_raster(const std::vector<Ideal>& ideals, const CartierAlgebraSpec& alg,
                          const Ideal& N, const GridSpec& grid, const RasterOptions& opts = {});
// chi_a^N read off a finished raster.
RegionFunction chi_from_raster(const RasterGrid& raster, const Ideal& N);

// T_{q|b}: output mesh is the source mesh minus c; values whose source point
// leaves the source box are zero. out_bound defaults to the source bound.
RegionFunction apply_T(const RegionFunction& phi, const TOperator& op,
                       std::optional<Rational> out_bound = std::nullopt);

// Composite of applying a then b, i.e. apply_T(apply_T(phi, a), b).
TOperator compose(const TOperator& a, const TOperator& b, std::uint64_t p);

// The label N' with T_{p|b} chi^N = chi^{N'} for principal ideals (f_i).
Ideal transform_chi_symbolic(const Ideal& N, const std::vector<std::int64_t>& b,
                             const std::vector<Ideal>& ideals);

struct Vertex {
  Rational x;
  Rational y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::vector<Vertex> perez_staircase(std::uint64_t p, unsigned depth);

struct BoundaryLength {
  Rational axis_parallel{0};
  double other = 0.0;
  double total() const;
};

BoundaryLength boundary_length(const std::vector<Vertex>& polyline);
Rational staircase_partial_sum(std::uint64_t p, unsigned terms);
// Perimeter of the region under perez_staircase(p, depth) inside [0,1]^2:
// the staircase plus the bottom, left and right edges.
BoundaryLength staircase_region_perimeter(std::uint64_t p, unsigned depth);

// Max-norm Hausdorff distance between finite point sets.
Rational hausdorff_distance(const std::vector<std::vector<Rational>>& a,
                            const std::vector<std::vector<Rational>>& b);
// Same for two masks on one grid, in exact units of 1/p^mesh.
Rational hausdorff_distance(const GridSpec& grid, const std::vector<bool>& a,
                            const std::vector<bool>& b);

// Indicator of {t1 + 2 t2 < 2} on a two-dimensional grid.
std::vector<bool> lct_mask(const GridSpec& grid);

// Whether unit and non-unit points both occur within max-norm distance
// 1/p^mesh of v.
bool separates_classes(const RasterGrid& raster, const Vertex& v);

struct SpanRank {
  std::size_t rows = 0;           // transforms generated
  std::size_t distinct_rows = 0;  // after removing duplicates
  std::size_t rank = 0;
};

// Rank over Q of all T_{p^c|b} phi with c <= c_max, sampled on the mesh
// out_mesh (default: source mesh minus c_max).
SpanRank pfractal_span_rank(const RegionFunction& phi, unsigned c_max,
                            std::optional<unsigned> out_mesh = std::nullopt);

std::string raster_csv(const RasterGrid& raster);
std::string raster_svg(const RasterGrid& raster, const std::vector<Vertex>* staircase);

}  // namespace frobkit
