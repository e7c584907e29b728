#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/errors.hpp"

namespace symbreak {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

// "p/q", "p" or a plain decimal. Decimals with more than 12 fractional digits
// are rounded to denominator 10^12; *converted is set when a decimal was seen.
Rational parse_rational(std::string_view s, bool* converted = nullptr);
RatVec parse_ratvec(std::string_view csv, bool* converted = nullptr);
// always "p/q" with q > 0, integers as "p/1"
std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);

// canonical n/d
inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational from_double(double x);  // exact binary value
// best approximation with denominator <= max_den (continued fractions)
Rational approximate(const Rational& x, const mpz_class& max_den);
std::optional<Rational> exact_sqrt(const Rational& x);
// largest multiple of 1/scale whose square is <= x (x >= 0)
Rational sqrt_floor(const Rational& x, const mpz_class& scale);
Rational floor_q(const Rational& x);
Rational ceil_q(const Rational& x);

RatVec vadd(const RatVec& a, const RatVec& b);
RatVec vsub(const RatVec& a, const RatVec& b);
RatVec vscale(const Rational& s, const RatVec& a);
Rational dot(const RatVec& a, const RatVec& b);
Rational vsum(const RatVec& a);
Rational norm_sq(const RatVec& a);
RatVec unit_vector(std::size_t d, std::size_t i);
RatVec centroid(const std::vector<RatVec>& pts);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RatMatrix transpose() const;

  RatVec operator*(const RatVec& x) const;
  RatMatrix operator*(const RatMatrix& m) const;
  RatMatrix operator+(const RatMatrix& m) const;
  RatMatrix operator-(const RatMatrix& m) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& m) const;
  bool operator!=(const RatMatrix& m) const { return !(*this == m); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational det(RatMatrix m);
std::size_t rank(RatMatrix m);
// unique solution of a square system, nullopt when singular
std::optional<RatVec> solve(RatMatrix a, RatVec b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
RatMatrix power(const RatMatrix& m, unsigned e);
std::vector<RatVec> nullspace(RatMatrix m);
std::string to_string(const RatMatrix& m);

struct AffineMap {
  RatMatrix linear;
  RatVec offset;

  static AffineMap identity(std::size_t d);
  std::size_t dim() const { return offset.size(); }
  RatVec operator()(const RatVec& x) const;
  AffineMap after(const AffineMap& inner) const;  // this o inner
  std::optional<RatVec> fixed_point() const;
  bool operator==(const AffineMap& o) const { return linear == o.linear && offset == o.offset; }
};

// the unique affine map sending src[i] to dst[i]; src must be d+1 affinely
// independent points in R^d
AffineMap affine_from_points(const std::vector<RatVec>& src, const std::vector<RatVec>& dst);

// closed half-space normal . x <= offset
struct HalfSpace {
  RatVec normal;
  Rational offset;

  Rational slack(const RatVec& x) const { return offset - dot(normal, x); }
  bool contains(const RatVec& x) const { return sgn(slack(x)) >= 0; }
  bool strictly_contains(const RatVec& x) const { return sgn(slack(x)) > 0; }
};

struct Polytope {
  std::optional<std::vector<RatVec>> vrep;
  std::optional<std::vector<HalfSpace>> hrep;
  int dim = 0;

  static Polytope from_hrep(std::vector<HalfSpace> h, int dim);
  static Polytope box(const RatVec& lo, const RatVec& hi);
  bool contains_closed(const RatVec& x) const;  // needs hrep
  std::vector<RatVec> vertices() const;         // vrep or enumerated from hrep
};

struct Simplex {
  std::vector<RatVec> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<RatVec> v);
  std::size_t dim() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::vector<HalfSpace> facets() const;  // facet i is opposite vertex i
  Polytope polytope() const;
  RatVec barycenter() const { return centroid(vertices); }
};

std::vector<Rational> barycentric(const Simplex& s, const RatVec& x);
bool contains_closed(const Simplex& s, const RatVec& x);
Simplex image(const AffineMap& f, const Simplex& s);

// vertices of {x : h_i(x) for all i}, dim <= 8
std::vector<RatVec> hrep_vertices(const std::vector<HalfSpace>& h, int dim);
std::vector<RatVec> intersect_vertices(const Polytope& a, const Polytope& b);
// affine dimension of a finite point set (-1 when empty)
int affine_dim(const std::vector<RatVec>& pts);

struct DisjointResult {
  enum class Reason { SeparatingFacet, Farkas, CommonPoint };
  bool disjoint = false;
  Reason reason = Reason::CommonPoint;
  HalfSpace separator;                // separating facet (disjoint via facet)
  int separator_owner = -1;           // 0: facet of a, 1: facet of b
  std::vector<Rational> farkas;       // multipliers over a.hrep ++ b.hrep
  RatVec witness;                     // common point (not disjoint)
  std::vector<RatVec> common_vertices;
  bool interiors_disjoint = true;     // meaningful when closures meet
};

DisjointResult disjoint_closed(const Polytope& a, const Polytope& b);
// y >= 0, y^T A = 0 and y^T b < 0 over the stacked constraints
bool check_farkas(const std::vector<HalfSpace>& rows, const std::vector<Rational>& y);

}  // namespace symbreak
