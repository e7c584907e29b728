#include "symbreak/simplexmaps.hpp"

#include <algorithm>

#include "symbreak/reduction.hpp"

namespace symbreak {

SimplexMapParams SimplexMapParams::uniform(std::size_t d, const Rational& eps) {
  return {d, rat(1, static_cast<long>(d + 1)), eps};
}

namespace {

const Rational kHalf = rat(1, 2);

// indicator of the 1-based coordinate range [lo, hi]
RatVec ones(std::size_t d, std::size_t lo, std::size_t hi) {
  RatVec v(d, Rational(0));
  for (std::size_t i = lo; i <= hi; ++i) v[i - 1] = 1;
  return v;
}

HalfSpace le(RatVec n, const Rational& b) { return {std::move(n), b}; }
HalfSpace ge(const RatVec& n, const Rational& b) { return {vscale(-1, n), Rational(-b)}; }
HalfSpace nonneg(std::size_t d, std::size_t i) { return ge(unit_vector(d, i - 1), 0); }

void check_dim(const AtomId& id, std::size_t d) {
  if (d < 1 || id.k > d) throw InvalidAtom(id.label() + " in dimension " + std::to_string(d));
  if (id.kind == AtomId::Kind::B && d < 2) throw InvalidAtom("B atoms need d >= 2");
}

}  // namespace

std::vector<HalfSpace> simplex_hrep(std::size_t d) {
  std::vector<HalfSpace> h;
  for (std::size_t i = 1; i <= d; ++i) h.push_back(nonneg(d, i));
  h.push_back(le(ones(d, 1, d), 1));
  return h;
}

RatVec simplex_vertex(std::size_t d, std::size_t k) {
  return k == 0 ? RatVec(d, Rational(0)) : unit_vector(d, k - 1);
}

std::vector<HalfSpace> atom_hrep(const AtomId& id, std::size_t d) {
  check_dim(id, d);
  const std::size_t k = id.k;
  std::vector<HalfSpace> h;
  if (id.kind == AtomId::Kind::A) {
    if (k == 0) {
      for (std::size_t i = 1; i <= d; ++i) h.push_back(nonneg(d, i));
      h.push_back(le(ones(d, 1, d), kHalf));
    } else {
      for (std::size_t i = 1; i <= d; ++i)
        if (i != k) h.push_back(nonneg(d, i));
      h.push_back(le(ones(d, 1, d), 1));
      h.push_back(ge(unit_vector(d, k - 1), kHalf));
    }
    return h;
  }
  if (k == 0) {
    for (std::size_t i = 2; i + 1 <= d; ++i) h.push_back(nonneg(d, i));
    h.push_back(le(ones(d, 1, d - 1), kHalf));
    h.push_back(le(ones(d, 2, d), kHalf));
    h.push_back(ge(ones(d, 1, d), kHalf));
  } else if (k == 1) {
    for (std::size_t i = 3; i <= d; ++i) h.push_back(nonneg(d, i));
    h.push_back(le(unit_vector(d, 0), kHalf));
    h.push_back(le(ones(d, 2, d), kHalf));
    h.push_back(ge(ones(d, 1, 2), kHalf));
  } else if (k == d) {
    for (std::size_t i = 1; i + 2 <= d; ++i) h.push_back(nonneg(d, i));
    h.push_back(le(ones(d, 1, d - 1), kHalf));
    h.push_back(le(unit_vector(d, d - 1), kHalf));
    h.push_back(ge(ones(d, d - 1, d), kHalf));
  } else {
    for (std::size_t i = 1; i <= d; ++i)
      if (i + 1 < k || i > k + 1) h.push_back(nonneg(d, i));
    h.push_back(le(unit_vector(d, k - 1), kHalf));
    h.push_back(ge(ones(d, k - 1, k), kHalf));
    h.push_back(ge(ones(d, k, k + 1), kHalf));
    h.push_back(le(ones(d, 1, d), 1));
  }
  return h;
}

Simplex atom_vertices(const AtomId& id, std::size_t d) {
  check_dim(id, d);
  if (id.kind == AtomId::Kind::A) {
    RatVec vk = simplex_vertex(d, id.k);
    std::vector<RatVec> v{vk};
    for (std::size_t j = 0; j <= d; ++j)
      if (j != id.k) v.push_back(vscale(kHalf, vadd(vk, simplex_vertex(d, j))));
    return Simplex(std::move(v));
  }
  auto v = hrep_vertices(atom_hrep(id, d), static_cast<int>(d));
  if (v.size() != d + 1) throw InvalidAtom(id.label() + " is not a simplex");
  return Simplex(std::move(v));
}

Polytope atom_polytope(const AtomId& id, std::size_t d) {
  Polytope p = Polytope::from_hrep(atom_hrep(id, d), static_cast<int>(d));
  p.vrep = atom_vertices(id, d).vertices;
  return p;
}

bool in_atom_open(const AtomId& id, std::size_t d, const RatVec& x) {
  auto h = atom_hrep(id, d);
  return std::all_of(h.begin(), h.end(), [&](const HalfSpace& f) { return f.strictly_contains(x); });
}

std::optional<AtomId> atom_of(const RatVec& x, std::size_t d) {
  if (x.size() != d) throw DimensionMismatch("atom_of");
  if (!in_open_simplex(x)) throw OutsideSimplex(to_string(x));
  for (std::size_t k = 0; k <= d; ++k)
    if (in_atom_open({AtomId::Kind::A, k}, d, x)) return AtomId{AtomId::Kind::A, k};
  if (d >= 2)
    for (std::size_t k = 0; k <= d; ++k)
      if (in_atom_open({AtomId::Kind::B, k}, d, x)) return AtomId{AtomId::Kind::B, d == 2 ? 1 : k};
  return std::nullopt;
}

AffineMap sigma_d_map(std::size_t d) {
  AffineMap s{RatMatrix(d, d), RatVec(d, Rational(0))};
  for (std::size_t i = 0; i + 1 < d; ++i) s.linear(i, d - 2 - i) = 1;
  for (std::size_t j = 0; j < d; ++j) s.linear(d - 1, j) = -1;
  s.offset[d - 1] = 1;
  return s;
}

std::vector<bool> b_atom_validity(std::size_t d, const Rational& varrho) {
  std::vector<bool> ok(d + 1, false);
  if (d < 2) return ok;
  const bool inner = d <= 3 && varrho >= rat(1, 4);
  const bool outer = varrho >= rat(1, static_cast<long>(2 * d)) && varrho <= rat(1, static_cast<long>(2 * (d - 1)));
  for (std::size_t k = 0; k <= d; ++k) ok[k] = (k == 0 || k == d) ? outer : inner;
  return ok;
}

AffineMap restriction_A(const SimplexMapParams& p, std::size_t k) {
  if (k > p.d) throw InvalidAtom("A_" + std::to_string(k));
  const Rational c = 2 * (1 - p.eps);
  AffineMap m{RatMatrix::identity(p.d).scaled(c), RatVec(p.d, Rational(0))};
  if (k > 0) m.offset[k - 1] = 2 * p.eps - 1;
  return m;
}

namespace {

AffineMap b1_map(const SimplexMapParams& p) {
  const std::size_t d = p.d;
  const Rational c = 2 * (1 - p.eps);
  AffineMap m{RatMatrix(d, d), RatVec(d, Rational(0))};
  m.linear(0, 0) = -c;
  m.offset[0] = 1 - 2 * p.eps * (1 - 2 * p.varrho);
  m.linear(1, 0) = c;
  m.linear(1, 1) = c;
  m.offset[1] = 2 * p.eps * (1 - p.varrho) - 1;
  if (d == 3) m.linear(2, 2) = c;
  return m;
}

AffineMap b0_map3(const SimplexMapParams& p) {
  const Rational c = 2 * (1 - p.eps);
  AffineMap m{RatMatrix(3, 3), RatVec(3, Rational(0))};
  m.linear(0, 1) = c;
  m.linear(1, 0) = -c;
  m.linear(1, 1) = -c;
  m.offset[1] = 1 - 2 * p.eps * (1 - 3 * p.varrho);
  m.linear(2, 0) = c;
  m.linear(2, 1) = c;
  m.linear(2, 2) = c;
  m.offset[2] = 2 * p.eps * (1 - 2 * p.varrho) - 1;
  return m;
}

}  // namespace

AffineMap restriction_B(const SimplexMapParams& p, std::size_t k) {
  if (p.d >= 4) throw UnsupportedDimension("B_k is not an atom for d >= 4");
  if (p.d < 2 || k > p.d) throw InvalidAtom("B_" + std::to_string(k) + " in dimension " + std::to_string(p.d));
  if (!b_atom_validity(p.d, p.varrho)[k]) throw AtomNotValid("B_" + std::to_string(k) + " at varrho " + to_string(p.varrho));
  if (p.d == 2) return b1_map(p);
  const AffineMap s = sigma_d_map(3);
  switch (k) {
    case 0: return b0_map3(p);
    case 1: return b1_map(p);
    case 2: return s.after(b1_map(p)).after(s);
    default: return s.after(b0_map3(p)).after(s);
  }
}

std::optional<RatVec> closed_form_G(const SimplexMapParams& p, const RatVec& x) {
  auto id = atom_of(x, p.d);
  if (!id) return std::nullopt;
  if (id->kind == AtomId::Kind::A) return restriction_A(p, id->k)(x);
  if (p.d > 3 || !b_atom_validity(p.d, p.varrho)[id->k]) return std::nullopt;
  return restriction_B(p, id->k)(x);
}

Feat2D feat2d_data(const SimplexMapParams& p) {
  if (p.d != 2) throw UnsupportedDimension("feat2d_data is two-dimensional");
  Feat2D f;
  f.restriction = restriction_B(p, 1);
  auto fp = f.restriction.fixed_point();
  if (!fp || !in_atom_open({AtomId::Kind::B, 1}, 2, *fp)) throw FixedPointOutsideB("fixed point not in B");
  f.p0 = *fp;
  const RatVec v2 = simplex_vertex(2, 2);
  // segment [p0, v2] meets x2 = 1/2
  Rational t = (kHalf - f.p0[1]) / (1 - f.p0[1]);
  f.p1 = vadd(f.p0, vscale(t, vsub(v2, f.p0)));
  RatVec g1 = f.restriction(f.p1);
  Rational t2 = (kHalf - f.p0[1]) / (g1[1] - f.p0[1]);
  f.p2 = vadd(f.p0, vscale(t2, vsub(g1, f.p0)));
  if (!(sgn(f.p2[0]) >= 0 && f.p2[0] <= kHalf)) throw FixedPointOutsideB("p2 misses the edge of A_2");
  const RatVec b1 = vsub(f.p1, f.p0), b2 = vsub(f.p2, f.p0);
  auto binv = inverse(RatMatrix::from_columns({b1, b2}));
  if (!binv) throw DegenerateSimplex("p0, p1, p2 are collinear");
  RatMatrix col = *binv * f.restriction.linear * RatMatrix::from_columns({b1, b2});
  f.basis_matrix = col.transpose();
  const Rational c = 2 * (1 - p.eps);
  f.alpha = f.basis_matrix(1, 0) / c;
  return f;
}

}  // namespace symbreak
