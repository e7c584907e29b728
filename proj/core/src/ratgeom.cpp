#include "symbreak/ratgeom.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace symbreak {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// k-subsets of [0, n) in lexicographic order
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view s, bool* converted) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty rational");
  bool neg = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational r;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError("malformed '" + std::string(s) + "'");
    mpz_class den{std::string(q)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpz_class num{std::string(p)};
    r = Rational(num, den);
    r.canonicalize();
  } else if (auto dotp = body.find('.'); dotp != std::string_view::npos) {
    auto ip = body.substr(0, dotp), fp = body.substr(dotp + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed '" + std::string(s) + "'");
    std::string digits(fp);
    bool round_up = false;
    if (digits.size() > 12) {
      round_up = digits[12] >= '5';
      digits.resize(12);
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size());
    mpz_class num = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip));
    num = num * den + (digits.empty() ? mpz_class(0) : mpz_class(digits)) + (round_up ? 1 : 0);
    r = Rational(num, den);
    r.canonicalize();
    if (converted) *converted = true;
  } else {
    if (!all_digits(body)) throw ParseError("malformed '" + std::string(s) + "'");
    r = Rational(mpz_class(std::string(body)));
  }
  return neg ? Rational(-r) : r;
}

RatVec parse_ratvec(std::string_view csv, bool* converted) {
  RatVec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(parse_rational(csv.substr(start, comma - start), converted));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational from_double(double x) { return Rational(x); }

Rational approximate(const Rational& x, const mpz_class& max_den) {
  // convergents p/q of x, then the best semiconvergent below max_den
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (d != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) {
      mpz_class t = (max_den - q0) / q1;
      Rational c1(p1, q1), c2(p0 + t * p1, q0 + t * q1);
      c1.canonicalize();
      c2.canonicalize();
      Rational e1 = abs(c1 - x), e2 = abs(c2 - x);
      return e2 < e1 ? c2 : c1;
    }
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

Rational sqrt_floor(const Rational& x, const mpz_class& scale) {
  Rational y = x * scale * scale;
  mpz_class f, r;
  mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

Rational floor_q(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

Rational ceil_q(const Rational& x) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

RatVec vadd(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vadd");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vsub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vsub");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vscale(const Rational& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational vsum(const RatVec& a) {
  Rational s = 0;
  for (const auto& x : a) s += x;
  return s;
}

Rational norm_sq(const RatVec& a) { return dot(a, a); }

RatVec unit_vector(std::size_t d, std::size_t i) {
  RatVec e(d, Rational(0));
  e.at(i) = 1;
  return e;
}

RatVec centroid(const std::vector<RatVec>& pts) {
  if (pts.empty()) return {};
  RatVec c(pts[0].size(), Rational(0));
  for (const auto& p : pts) c = vadd(c, p);
  return vscale(rat(1, static_cast<long>(pts.size())), c);
}

// ---------------------------------------------------------------- matrices

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw DimensionMismatch("from_columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("from_rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  return RatVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVec RatMatrix::col(std::size_t j) const {
  RatVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec RatMatrix::operator*(const RatVec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector product");
  RatVec y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& m) const {
  if (cols_ != m.rows_) throw DimensionMismatch("matrix product");
  RatMatrix r(rows_, m.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < m.cols_; ++j) r(i, j) += (*this)(i, k) * m(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DimensionMismatch("matrix sum");
  RatMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += m.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DimensionMismatch("matrix difference");
  RatMatrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= m.a_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

bool RatMatrix::operator==(const RatMatrix& m) const {
  return rows_ == m.rows_ && cols_ == m.cols_ && a_ == m.a_;
}

namespace {

// row echelon form in place; returns pivot columns
std::vector<std::size_t> echelon(RatMatrix& m, Rational* det_sign = nullptr) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (det_sign) *det_sign = -*det_sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

Rational det(RatMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square matrix");
  Rational sign = 1;
  auto piv = echelon(m, &sign);
  if (piv.size() < m.rows()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

std::size_t rank(RatMatrix m) { return echelon(m).size(); }

std::optional<RatVec> solve(RatMatrix a, RatVec b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionMismatch("solve");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto c = solve(m, unit_vector(n, j));
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*c)[i];
  }
  return inv;
}

RatMatrix power(const RatMatrix& m, unsigned e) {
  RatMatrix r = RatMatrix::identity(m.rows()), b = m;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<RatVec> nullspace(RatMatrix m) {
  auto piv = echelon(m);
  // back-substitute to reduced form
  for (std::size_t r = piv.size(); r-- > 0;) {
    Rational p = m(r, piv[r]);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) /= p;
    for (std::size_t i = 0; i < r; ++i) {
      Rational f = m(i, piv[r]);
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string to_string(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += to_string(m.row(i));
  }
  return s + "]";
}

// ---------------------------------------------------------------- affine

AffineMap AffineMap::identity(std::size_t d) { return {RatMatrix::identity(d), RatVec(d, Rational(0))}; }

RatVec AffineMap::operator()(const RatVec& x) const { return vadd(linear * x, offset); }

AffineMap AffineMap::after(const AffineMap& inner) const {
  return {linear * inner.linear, vadd(linear * inner.offset, offset)};
}

std::optional<RatVec> AffineMap::fixed_point() const {
  // (I - L) x = offset
  return solve(RatMatrix::identity(dim()) - linear, offset);
}

AffineMap affine_from_points(const std::vector<RatVec>& src, const std::vector<RatVec>& dst) {
  const std::size_t d = src.empty() ? 0 : src[0].size();
  if (src.size() != d + 1 || dst.size() != d + 1) throw DimensionMismatch("affine_from_points needs d+1 points");
  std::vector<RatVec> es, fs;
  for (std::size_t i = 1; i <= d; ++i) {
    es.push_back(vsub(src[i], src[0]));
    fs.push_back(vsub(dst[i], dst[0]));
  }
  auto einv = inverse(RatMatrix::from_columns(es));
  if (!einv) throw DegenerateSimplex("source points are affinely dependent");
  RatMatrix lin = RatMatrix::from_columns(fs) * *einv;
  return {lin, vsub(dst[0], lin * src[0])};
}

// ---------------------------------------------------------------- polytopes

Polytope Polytope::from_hrep(std::vector<HalfSpace> h, int dim) {
  Polytope p;
  p.hrep = std::move(h);
  p.dim = dim;
  return p;
}

Polytope Polytope::box(const RatVec& lo, const RatVec& hi) {
  const std::size_t d = lo.size();
  std::vector<HalfSpace> h;
  for (std::size_t i = 0; i < d; ++i) {
    h.push_back({vscale(-1, unit_vector(d, i)), -lo[i]});
    h.push_back({unit_vector(d, i), hi[i]});
  }
  return from_hrep(std::move(h), static_cast<int>(d));
}

bool Polytope::contains_closed(const RatVec& x) const {
  if (!hrep) throw DimensionMismatch("polytope has no H-representation");
  return std::all_of(hrep->begin(), hrep->end(), [&](const HalfSpace& h) { return h.contains(x); });
}

std::vector<RatVec> Polytope::vertices() const {
  if (vrep) return *vrep;
  if (!hrep) return {};
  return hrep_vertices(*hrep, dim);
}

Simplex::Simplex(std::vector<RatVec> v) : vertices(std::move(v)) {
  const std::size_t d = vertices.empty() ? 0 : vertices[0].size();
  if (vertices.size() != d + 1) throw DegenerateSimplex("a d-simplex needs d+1 vertices");
  for (const auto& p : vertices)
    if (p.size() != d) throw DimensionMismatch("simplex vertex dimension");
}

namespace {

RatMatrix lifted(const Simplex& s) {
  const std::size_t d = s.dim();
  RatMatrix m(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = s.vertices[j][i];
    m(d, j) = 1;
  }
  return m;
}

}  // namespace

std::vector<HalfSpace> Simplex::facets() const {
  auto inv = inverse(lifted(*this));
  if (!inv) throw DegenerateSimplex("vertices are affinely dependent");
  const std::size_t d = dim();
  std::vector<HalfSpace> h;
  // lambda_i(x) = row_i . (x, 1) >= 0
  for (std::size_t i = 0; i <= d; ++i) {
    RatVec n(d);
    for (std::size_t j = 0; j < d; ++j) n[j] = -(*inv)(i, j);
    h.push_back({std::move(n), (*inv)(i, d)});
  }
  return h;
}

Polytope Simplex::polytope() const {
  Polytope p;
  p.vrep = vertices;
  p.hrep = facets();
  p.dim = static_cast<int>(dim());
  return p;
}

std::vector<Rational> barycentric(const Simplex& s, const RatVec& x) {
  if (x.size() != s.dim()) throw DimensionMismatch("barycentric");
  RatVec rhs = x;
  rhs.push_back(1);
  auto lam = solve(lifted(s), rhs);
  if (!lam) throw DegenerateSimplex("vertices are affinely dependent");
  return *lam;
}

bool contains_closed(const Simplex& s, const RatVec& x) {
  auto lam = barycentric(s, x);
  return std::all_of(lam.begin(), lam.end(), [](const Rational& l) { return sgn(l) >= 0; });
}

Simplex image(const AffineMap& f, const Simplex& s) {
  std::vector<RatVec> v;
  for (const auto& p : s.vertices) v.push_back(f(p));
  return Simplex(std::move(v));
}

std::vector<RatVec> hrep_vertices(const std::vector<HalfSpace>& h, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  if (dim < 1 || dim > 8) throw DimensionMismatch("vertex enumeration supports 1 <= dim <= 8");
  for (const auto& f : h)
    if (f.normal.size() != d) throw DimensionMismatch("half-space dimension");
  std::set<RatVec> found;
  for_each_subset(h.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a(d, d);
    RatVec b(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r, c) = h[idx[r]].normal[c];
      b[r] = h[idx[r]].offset;
    }
    auto x = solve(std::move(a), std::move(b));
    if (x && std::all_of(h.begin(), h.end(), [&](const HalfSpace& f) { return f.contains(*x); }))
      found.insert(std::move(*x));
    return false;
  });
  return {found.begin(), found.end()};
}

std::vector<RatVec> intersect_vertices(const Polytope& a, const Polytope& b) {
  if (!a.hrep || !b.hrep) throw DimensionMismatch("intersect_vertices needs H-representations");
  if (a.dim != b.dim) throw DimensionMismatch("intersect_vertices: dimensions differ");
  std::vector<HalfSpace> h = *a.hrep;
  h.insert(h.end(), b.hrep->begin(), b.hrep->end());
  return hrep_vertices(h, a.dim);
}

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(vsub(pts[i], pts[0]));
  if (rows.empty()) return 0;
  return static_cast<int>(rank(RatMatrix::from_rows(rows)));
}

bool check_farkas(const std::vector<HalfSpace>& rows, const std::vector<Rational>& y) {
  if (rows.empty() || y.size() != rows.size()) return false;
  const std::size_t d = rows[0].normal.size();
  RatVec comb(d, Rational(0));
  Rational rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (sgn(y[i]) < 0) return false;
    comb = vadd(comb, vscale(y[i], rows[i].normal));
    rhs += y[i] * rows[i].offset;
  }
  return std::all_of(comb.begin(), comb.end(), [](const Rational& c) { return sgn(c) == 0; }) && sgn(rhs) < 0;
}

namespace {

std::optional<HalfSpace> separating_facet(const std::vector<HalfSpace>& facets, const std::vector<RatVec>& other) {
  if (other.empty()) return std::nullopt;
  for (const auto& f : facets)
    if (std::all_of(other.begin(), other.end(), [&](const RatVec& v) { return sgn(f.slack(v)) < 0; })) return f;
  return std::nullopt;
}

std::optional<std::vector<Rational>> find_farkas(const std::vector<HalfSpace>& rows, std::size_t d) {
  for (std::size_t k = 2; k <= std::min(d + 1, rows.size()); ++k) {
    std::optional<std::vector<Rational>> hit;
    for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& idx) {
      RatMatrix at(d, k);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < d; ++r) at(r, c) = rows[idx[c]].normal[r];
      auto ns = nullspace(std::move(at));
      if (ns.size() != 1) return false;
      RatVec y = ns[0];
      int s = 0;
      for (const auto& v : y) {
        int t = sgn(v);
        if (t == 0) return false;
        if (s == 0) s = t;
        if (t != s) return false;
      }
      if (s < 0) y = vscale(-1, y);
      std::vector<Rational> full(rows.size(), Rational(0));
      for (std::size_t c = 0; c < k; ++c) full[idx[c]] = y[c];
      if (check_farkas(rows, full)) {
        hit = std::move(full);
        return true;
      }
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

DisjointResult disjoint_closed(const Polytope& a, const Polytope& b) {
  if (!a.hrep || !b.hrep) throw DimensionMismatch("disjoint_closed needs H-representations");
  if (a.dim != b.dim) throw DimensionMismatch("disjoint_closed: dimensions differ");
  DisjointResult res;
  auto va = a.vertices(), vb = b.vertices();
  if (auto f = separating_facet(*a.hrep, vb)) {
    res.disjoint = true;
    res.reason = DisjointResult::Reason::SeparatingFacet;
    res.separator = *f;
    res.separator_owner = 0;
    return res;
  }
  if (auto f = separating_facet(*b.hrep, va)) {
    res.disjoint = true;
    res.reason = DisjointResult::Reason::SeparatingFacet;
    res.separator = *f;
    res.separator_owner = 1;
    return res;
  }
  auto common = intersect_vertices(a, b);
  if (!common.empty()) {
    res.disjoint = false;
    res.reason = DisjointResult::Reason::CommonPoint;
    res.witness = common.front();
    res.interiors_disjoint = affine_dim(common) < a.dim;
    res.common_vertices = std::move(common);
    return res;
  }
  std::vector<HalfSpace> rows = *a.hrep;
  rows.insert(rows.end(), b.hrep->begin(), b.hrep->end());
  auto y = find_farkas(rows, static_cast<std::size_t>(a.dim));
  if (!y) throw SearchExhausted("no Farkas certificate for an empty intersection");
  res.disjoint = true;
  res.reason = DisjointResult::Reason::Farkas;
  res.farkas = std::move(*y);
  return res;
}

}  // namespace symbreak
