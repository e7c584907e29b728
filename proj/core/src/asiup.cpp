#include "symbreak/asiup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symbreak/reduction.hpp"

namespace symbreak {

namespace {

const AtomId atomA(std::size_t k) { return {AtomId::Kind::A, k}; }
const AtomId atomB(std::size_t k) { return {AtomId::Kind::B, k}; }

bool all_nonneg(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

double to_d(const Rational& q) { return q.get_d(); }

// parameter range of the ray vk + t dr inside closure(B_k)
std::pair<Rational, Rational> ray_range(const std::vector<HalfSpace>& h, const RatVec& vk, const RatVec& dr) {
  std::optional<Rational> lo, hi;
  for (const auto& f : h) {
    Rational nd = dot(f.normal, dr);
    Rational room = f.offset - dot(f.normal, vk);
    if (sgn(nd) > 0) {
      Rational t = room / nd;
      if (!hi || t < *hi) hi = t;
    } else if (sgn(nd) < 0) {
      Rational t = room / nd;
      if (!lo || t > *lo) lo = t;
    }
  }
  if (!lo || !hi || !(*lo < *hi)) throw ConstructionFailed("ray from v_k misses B_k");
  return {*lo, *hi};
}

}  // namespace

std::vector<RatVec> facet_T_vertices(std::size_t d, std::size_t k) {
  const RatVec vk = simplex_vertex(d, k);
  std::vector<RatVec> t;
  for (std::size_t j = 0; j <= d; ++j)
    if (j != k) t.push_back(vscale(rat(1, 2), vadd(vk, simplex_vertex(d, j))));
  return t;
}

PointFrame select_points(std::size_t d, std::size_t k) {
  if (d < 2 || k > d) throw ParameterOutOfRange("frame needs d >= 2 and k in [0,d]");
  PointFrame f;
  f.d = d;
  f.k = k;
  f.vk = simplex_vertex(d, k);
  const auto tv = facet_T_vertices(d, k);
  const RatVec p1 = centroid(tv);
  const RatVec dr = vsub(p1, f.vk);
  auto [tlo, thi] = ray_range(atom_hrep(atomB(k), d), f.vk, dr);
  if (tlo != 1) throw ConstructionFailed("T is not the entry facet of the ray");
  const RatVec p0 = vadd(f.vk, vscale((tlo + thi) / 2, dr));

  const RatVec D = vsub(p1, p0);
  const Rational lam = norm_sq(D);
  f.vk_len_sq = norm_sq(vsub(f.vk, p0));

  // the d-1 vertices of T farthest from p0, nearest first
  std::vector<std::size_t> idx(tv.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Rational> dist(tv.size());
  for (std::size_t j = 0; j < tv.size(); ++j) dist[j] = norm_sq(vsub(tv[j], p0));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  idx.erase(idx.begin());

  const double l1 = std::sqrt(to_d(lam));
  double q = std::pow(std::sqrt(to_d(f.vk_len_sq)) / l1, 1.0 / static_cast<double>(d));
  for (std::size_t n = 2; n <= d; ++n)
    q = std::min(q, std::pow(std::sqrt(to_d(dist[idx[n - 2]])) / l1, 1.0 / static_cast<double>(n - 1)));
  if (!(q > 1)) throw ConstructionFailed("no room for a length chain");
  q = 1 + 0.9 * (q - 1);

  f.p = {p0, p1};
  f.ratios = {Rational(1)};
  f.lengths_sq = {lam};
  for (std::size_t n = 2; n <= d; ++n) {
    const RatVec u = vsub(tv[idx[n - 2]], p1);
    const Rational du = dot(D, u), uu = norm_sq(u);
    const double target = std::pow(q, static_cast<double>(n - 1));
    // |D + s u|^2 = target^2 lam, larger root
    const double A = to_d(uu), B = 2 * to_d(du), Cc = to_d(lam) * (1 - target * target);
    const double s_star = (-B + std::sqrt(B * B - 4 * A * Cc)) / (2 * A);
    const Rational m_star = from_double((target - 1) / s_star);
    bool placed = false;
    // rational points on the conic through (s, r) = (0, 1): r = 1 + m s
    for (long den = 16; den <= (1L << 40) && !placed; den *= 16) {
      const Rational m = approximate(m_star, mpz_class(den));
      const Rational denom = lam * m * m - uu;
      if (sgn(denom) == 0) continue;
      const Rational s = 2 * (du - lam * m) / denom;
      const Rational r = 1 + m * s;
      if (!(sgn(s) > 0 && s < 1)) continue;
      if (!(r > f.ratios.back())) continue;
      if (n == d && !(lam * r * r < f.vk_len_sq)) continue;
      const RatVec pn = vadd(p1, vscale(s, u));
      if (norm_sq(vsub(pn, p0)) != lam * r * r) throw ConstructionFailed("conic parametrization drifted");
      f.p.push_back(pn);
      f.ratios.push_back(r);
      f.lengths_sq.push_back(lam * r * r);
      placed = true;
    }
    if (!placed) throw ConstructionFailed("could not place p_" + std::to_string(n));
  }
  if (auto why = frame_violation(f); !why.empty()) throw ConstructionFailed(why);
  return f;
}

std::string frame_violation(const PointFrame& f) {
  const std::size_t d = f.d;
  if (f.p.size() != d + 1 || f.ratios.size() != d || f.lengths_sq.size() != d) return "frame has the wrong size";
  const RatVec& p0 = f.p[0];
  if (!in_atom_open(atomB(f.k), d, p0)) return "p_0 is not interior to B_k";
  const Simplex ak = atom_vertices(atomA(f.k), d);  // v_k first, then T
  for (std::size_t n = 1; n <= d; ++n) {
    auto b = barycentric(ak, f.p[n]);
    if (sgn(b[0]) != 0) return "p_" + std::to_string(n) + " is off the facet T";
    for (std::size_t j = 1; j < b.size(); ++j)
      if (sgn(b[j]) <= 0) return "p_" + std::to_string(n) + " is not interior to T";
  }
  // p1 on [p0, vk]
  const RatVec a = vsub(f.p[1], p0), b = vsub(f.vk, p0);
  const Rational t = dot(a, b) / norm_sq(b);
  if (vscale(t, b) != a || sgn(t) < 0 || t > 1) return "p_1 is not on [p_0, v_k]";
  if (f.ratios[0] != 1) return "r_1 must be 1";
  for (std::size_t n = 1; n <= d; ++n) {
    const Rational l = norm_sq(vsub(f.p[n], p0));
    if (l != f.lengths_sq[n - 1] || l != f.lengths_sq[0] * f.ratios[n - 1] * f.ratios[n - 1] || sgn(f.ratios[n - 1]) <= 0)
      return "length ratio of p_" + std::to_string(n) + " is not exact";
    if (n > 1 && !(f.lengths_sq[n - 2] < l)) return "length chain not increasing at p_" + std::to_string(n);
  }
  if (f.vk_len_sq != norm_sq(vsub(f.vk, p0)) || !(f.lengths_sq.back() < f.vk_len_sq)) return "|p0pd| must stay below |p0vk|";
  std::vector<RatVec> e;
  for (std::size_t n = 1; n <= d; ++n) e.push_back(vsub(f.p[n], p0));
  if (sgn(det(RatMatrix::from_columns(e))) == 0) return "frame points are affinely dependent";
  return {};
}

Rational a_prime_bound(const PointFrame& f) {
  std::optional<Rational> best;
  for (std::size_t n = 1; n < f.d; ++n) {
    Rational r = f.ratios[n] / f.ratios[n - 1];
    if (!best || r < *best) best = r;
  }
  const Rational last = f.vk_len_sq / f.lengths_sq.back();
  Rational root = exact_sqrt(last).value_or(sqrt_floor(last, mpz_class(1) << 32));
  if (!best || root < *best) best = root;
  return *best;
}

std::vector<RatVec> h_vertex_images(const PointFrame& f, const Rational& a) {
  const RatVec& p0 = f.p[0];
  std::vector<RatVec> img{p0};
  for (std::size_t n = 1; n < f.d; ++n)
    img.push_back(vadd(p0, vscale(a * f.ratios[n - 1] / f.ratios[n], vsub(f.p[n + 1], p0))));
  img.push_back(vadd(p0, vscale(a * f.ratios[f.d - 1], vsub(f.p[1], p0))));
  return img;
}

HMapSpec build_H(const PointFrame& f, const Rational& a) {
  HMapSpec h;
  h.frame = f;
  h.a = a;
  h.a_prime = a_prime_bound(f);
  if (!(a > 1)) throw ParameterOutOfRange("rate a must exceed 1");
  if (a > h.a_prime) throw RateAboveBound(to_string(a) + " > a' = " + to_string(h.a_prime));
  h.on_C = affine_from_points(f.p, h_vertex_images(f, a));
  h.eps_a = 1 - a / 2;
  h.on_A = restriction_A(SimplexMapParams::uniform(f.d, h.eps_a), f.k);
  h.lambda = rat(1, 4);
  return h;
}

namespace {

std::optional<RatVec> eval_own_side(const HMapSpec& h, const RatVec& x) {
  const std::size_t d = h.frame.d, k = h.frame.k;
  if (in_atom_open(atomA(k), d, x)) return h.on_A(x);
  if (in_atom_open(atomB(k), d, x)) {
    if (contains_closed(Simplex(h.frame.p), x)) return h.on_C(x);
    const RatVec& p0 = h.frame.p[0];
    return vadd(p0, vscale(h.lambda, vsub(x, p0)));
  }
  return std::nullopt;
}

}  // namespace

std::optional<RatVec> eval_H(const HMapSpec& h, const RatVec& x) {
  const std::size_t d = h.frame.d;
  if (x.size() != d || !in_open_simplex(x)) return std::nullopt;
  if (auto y = eval_own_side(h, x)) return y;
  const RatVec sx = sigma_d(x);
  if (auto y = eval_own_side(h, sx)) return sigma_d(*y);
  try {
    return base_map(x, Distribution::uniform(d + 1), h.eps_a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

IupCertificate check_system(const std::string& system, std::size_t d, std::size_t k, const std::vector<RatVec>& frame,
                            const AffineMap& on_C, const AffineMap& on_A, const Rational& rate) {
  IupCertificate c;
  c.system = system;
  c.d = d;
  c.k = k;
  c.a = rate;
  c.frame = frame;
  const Simplex C(frame);
  const Simplex HC = image(on_C, C);
  c.hc_vertices = HC.vertices;
  const Polytope A = atom_polytope(atomA(k), d), B = atom_polytope(atomB(k), d);
  const Simplex As = atom_vertices(atomA(k), d), Bs = atom_vertices(atomB(k), d);

  auto fail = [&](const std::string& why) {
    if (c.failure.empty()) c.failure = why;
  };

  for (std::size_t n = 0; n <= d; ++n) {
    VertexRecord r;
    r.point = HC.vertices[n];
    if (n < d) {
      r.where = "closure(B_" + std::to_string(k) + ")";
      r.bary = barycentric(Bs, r.point);
      r.ok = all_nonneg(r.bary);
    } else {
      r.where = "A_" + std::to_string(k);
      r.bary = barycentric(As, r.point);
      r.ok = std::all_of(r.bary.begin(), r.bary.end(), [](const Rational& x) { return sgn(x) > 0; });
    }
    if (!r.ok) fail("image of p_" + std::to_string(n) + " " + to_string(r.point) + " is not in " + r.where);
    c.location.push_back(std::move(r));
  }

  const Polytope hc = HC.polytope();
  for (auto& v : intersect_vertices(hc, B)) {
    VertexRecord r;
    r.where = "closure(C)";
    r.bary = barycentric(C, v);
    r.ok = all_nonneg(r.bary);
    if (!r.ok) fail("vertex " + to_string(v) + " of HC n B_k lies outside C");
    r.point = std::move(v);
    c.hc_cap_b.push_back(std::move(r));
  }
  for (auto& v : intersect_vertices(hc, A)) {
    VertexRecord r;
    r.where = "closure(HC)";
    r.bary = barycentric(HC, on_A(v));
    r.ok = all_nonneg(r.bary);
    if (!r.ok) fail("image of vertex " + to_string(v) + " of HC n A_k lies outside HC");
    r.point = std::move(v);
    c.hc_cap_a.push_back(std::move(r));
  }

  Rational ad = 1;
  for (std::size_t i = 0; i < d; ++i) ad *= rate;
  c.ld_check = power(on_C.linear, static_cast<unsigned>(d)) == RatMatrix::identity(d).scaled(ad);
  if (!c.ld_check) fail("L^d differs from a^d Id");
  c.prop2 = c.failure.empty();
  return c;
}

Polytope simplex_poly(const std::vector<RatVec>& v) { return Simplex(v).polytope(); }

}  // namespace

IupCertificate verify_prop2(const HMapSpec& h) {
  IupCertificate c = check_system("H", h.frame.d, h.frame.k, h.frame.p, h.on_C, h.on_A, h.a);
  c.a_prime = h.a_prime;
  c.ratios = h.frame.ratios;
  c.eps = h.eps_a;
  c.varrho = rat(1, static_cast<long>(h.frame.d + 1));
  return c;
}

IupCertificate verify_prop2_g2(const SimplexMapParams& p) {
  if (p.d != 2) throw UnsupportedDimension("the G certificate is two-dimensional");
  const Feat2D f = feat2d_data(p);
  const Rational c = 2 * (1 - p.eps);
  IupCertificate cert = check_system("G2", 2, 2, {f.p0, f.p1, f.p2}, f.restriction, restriction_A(p, 2), c);
  cert.eps = p.eps;
  cert.varrho = p.varrho;
  return cert;
}

IupCertificate& verify_asymmetry(IupCertificate& cert) {
  if (cert.k * 2 == cert.d) throw NotAsymmetric("k = d/2: sigma_d maps the bipyramid to itself");
  auto sig = [](const std::vector<RatVec>& v) {
    std::vector<RatVec> out;
    for (const auto& x : v) out.push_back(sigma_d(x));
    return out;
  };
  const std::vector<std::pair<std::string, std::vector<RatVec>>> mine = {{"C", cert.frame}, {"HC", cert.hc_vertices}};
  cert.asymmetry.clear();
  cert.asymmetric = true;
  for (const auto& [na, va] : mine)
    for (const auto& [nb, vb] : mine) {
      PairRecord pr;
      pr.name = na + "|sigma(" + nb + ")";
      auto r = disjoint_closed(simplex_poly(va), simplex_poly(sig(vb)));
      if (r.disjoint) {
        pr.outcome = r.reason == DisjointResult::Reason::Farkas ? "farkas" : "separated";
        if (r.reason == DisjointResult::Reason::SeparatingFacet) pr.separator = r.separator;
      } else {
        pr.outcome = r.interiors_disjoint ? "touching" : "overlap";
        pr.common = r.common_vertices;
        if (!r.interiors_disjoint) {
          cert.asymmetric = false;
          if (cert.failure.empty()) cert.failure = pr.name + " overlap at " + to_string(r.witness);
        }
      }
      cert.asymmetry.push_back(std::move(pr));
    }
  cert.asymmetry_checked = true;
  return cert;
}

IupCertificate certify(const PointFrame& f, const Rational& a) {
  IupCertificate c = verify_prop2(build_H(f, a));
  if (c.prop2) verify_asymmetry(c);
  return c;
}

SearchResult search_max_a(const PointFrame& f, const Rational& precision) {
  if (!(sgn(precision) > 0)) throw ParameterOutOfRange("precision must be positive");
  SearchResult best;
  std::optional<IupCertificate> found;
  Rational hi = a_prime_bound(f);
  std::size_t evals = 0;
  auto attempt = [&](const Rational& a) {
    ++evals;
    IupCertificate c = certify(f, a);
    if (c.pass()) {
      if (!found || a > best.a) {
        best.a = a;
        found = std::move(c);
      }
      return true;
    }
    return false;
  };
  if (!attempt(hi)) {
    Rational lo = 1;
    while (hi - lo > precision) {
      Rational mid = (lo + hi) / 2;
      if (attempt(mid))
        lo = mid;
      else
        hi = mid;
    }
  }
  if (!found) throw NoPassingA("no tested rate in (1, " + to_string(a_prime_bound(f)) + "] passes");
  best.cert = std::move(*found);
  best.evaluations = evals;
  return best;
}

}  // namespace symbreak
