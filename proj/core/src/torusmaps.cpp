#include "symbreak/torusmaps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symbreak {

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw ParameterOutOfRange("empty distribution");
  return {RatVec(n, rat(1, static_cast<long>(n)))};
}

Distribution Distribution::clustered(std::size_t d, const Rational& r) {
  Distribution rho{RatVec(d, r)};
  rho.w.push_back(1 - r * static_cast<long>(d));
  rho.validate();
  return rho;
}

void Distribution::validate() const {
  if (w.empty()) throw ParameterOutOfRange("empty distribution");
  for (const auto& x : w)
    if (sgn(x) < 0) throw ParameterOutOfRange("negative weight " + to_string(x));
  if (vsum(w) != 1) throw ParameterOutOfRange("weights do not sum to 1");
}

template <class S>
S g_eval(const S& u) {
  S v = frac_s(u);
  S half = scalar_of<S>(rat(1, 2));
  if constexpr (std::is_same_v<S, double>) {
    if (v != 0.5 && std::abs(v - 0.5) < kGuardBand) {
      note_guard_event();
      return half;
    }
  }
  if (v == half) return half;
  return S(v - floor_s(S(v + half)));
}

template <class S>
std::vector<S> coupled_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps) {
  if (u.size() != rho.size()) throw LengthMismatch("state has " + std::to_string(u.size()) + " coordinates, distribution " + std::to_string(rho.size()));
  const std::size_t n = u.size();
  std::vector<S> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    S acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += rho[j] * g_eval(S(u[j] - u[i]));
    }
    out[i] = frac_s(S(2 * (u[i] + eps * acc)));
  }
  return out;
}

template <class S>
std::vector<S> torus_reduce(const std::vector<S>& u) {
  std::vector<S> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = frac_s(u[i]);
  return out;
}

template <class S>
std::vector<S> torus_inversion(const std::vector<S>& u) {
  std::vector<S> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = frac_s(S(-u[i]));
  return out;
}

RatMatrix coupled_linear_part(const Distribution& rho, const Rational& eps) {
  const std::size_t n = rho.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 2 * eps * rho.w[j] + (i == j ? Rational(2 * (1 - eps)) : Rational(0));
  return m;
}

template <class S>
DiagPerp<S> diag_perp_decompose(const std::vector<S>& u) {
  DiagPerp<S> r;
  r.diag = 0;
  for (const auto& x : u) r.diag += x;
  S mean = r.diag / S(static_cast<long>(u.size()));
  for (const auto& x : u) r.perp.push_back(S(x - mean));
  return r;
}

namespace {

template <class S>
bool leq(const S& a, const S& b) {
  if constexpr (std::is_same_v<S, double>)
    return a <= b + 1e-12;
  else
    return a <= b;
}

template <class S>
S bound(std::size_t s, std::size_t n) {
  return S(static_cast<long>(s * (n - s))) / S(static_cast<long>(2 * n));
}

// largest violation over subset sizes, using top-s sums
template <class S>
std::pair<std::size_t, S> worst_violation(const std::vector<S>& u, std::vector<std::size_t>& order) {
  const std::size_t n = u.size();
  order.resize(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] > u[b]; });
  std::size_t best = 0;
  S excess = 0;
  S run = 0;
  for (std::size_t s = 1; s < n; ++s) {
    run += u[order[s - 1]];
    S e = run - bound<S>(s, n);
    if (e > excess) {
      excess = e;
      best = s;
    }
  }
  return {best, excess};
}

}  // namespace

template <class S>
bool in_permutahedron(const std::vector<S>& u) {
  const std::size_t n = u.size();
  if (n == 0) return true;
  S total = 0;
  for (const auto& x : u) total += x;
  if (!leq<S>(total, S(0)) || !leq<S>(S(0), total)) return false;
  std::vector<S> sorted(u);
  std::sort(sorted.begin(), sorted.end(), std::greater<S>());
  S run = 0;
  for (std::size_t s = 1; s < n; ++s) {
    run += sorted[s - 1];
    if (!leq<S>(run, bound<S>(s, n))) return false;
  }
  return true;
}

template <class S>
PermutahedronPoint<S> permutahedron_representative(const std::vector<S>& perp, std::size_t max_steps) {
  const std::size_t n = perp.size();
  PermutahedronPoint<S> out;
  out.coords = perp;
  if (n == 0) {
    out.constraints_ok = true;
    return out;
  }
  std::vector<std::size_t> order;
  // each translation by 1_T - (|T|/N) 1 strictly shortens the vector, so the
  // descent ends inside the Voronoi cell of the lattice
  for (; out.translations <= max_steps; ++out.translations) {
    auto [s, excess] = worst_violation(out.coords, order);
    bool violated;
    if constexpr (std::is_same_v<S, double>)
      violated = s > 0 && excess > 1e-12;
    else
      violated = s > 0 && sgn(excess) > 0;
    if (!violated) {
      out.constraints_ok = in_permutahedron(out.coords);
      return out;
    }
    S shift = S(static_cast<long>(s)) / S(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) out.coords[i] += shift;
    for (std::size_t i = 0; i < s; ++i) out.coords[order[i]] -= 1;
  }
  throw SearchExhausted("permutahedron descent did not settle in " + std::to_string(max_steps) + " translations");
}

void LorenzParams::validate() const {
  if (!(a > 1 && a < 2)) throw ParameterOutOfRange("slope a must lie in (1,2), got " + to_string(a));
  if (!(xd > rat(1, 4) && xd < rat(1, 2))) throw ParameterOutOfRange("breakpoint must lie in (1/4,1/2), got " + to_string(xd));
}

template <class S>
S lorenz_step(const S& x, const S& a, const S& xd) {
  S half = scalar_of<S>(rat(1, 2));
  if (x <= xd) return S(a * x);
  if (x < 1 - xd) return S(a * (x - half) + half);
  return S(a * (x - 1) + 1);
}

bool lorenz_interval_invariant(const LorenzParams& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return false;
  // each branch is increasing and affine; the closure of its piece of [lo, hi]
  // maps onto [f(l), f(h)], which also covers the values at the breakpoints
  const Rational half = rat(1, 2);
  struct Branch {
    Rational l, h;
    std::function<Rational(const Rational&)> f;
  };
  std::vector<Branch> br = {
      {0, p.xd, [&](const Rational& x) { return Rational(p.a * x); }},
      {p.xd, 1 - p.xd, [&](const Rational& x) { return Rational(p.a * (x - half) + half); }},
      {1 - p.xd, 1, [&](const Rational& x) { return Rational(p.a * (x - 1) + 1); }},
  };
  for (const auto& b : br) {
    Rational l = std::max(lo, b.l), h = std::min(hi, b.h);
    if (!(l < h)) continue;
    if (b.f(l) < lo || b.f(h) > hi) return false;
  }
  for (const Rational& x : {p.xd, Rational(1 - p.xd)})
    if (lo <= x && x <= hi) {
      Rational y = lorenz_step(x, p);
      if (y < lo || y > hi) return false;
    }
  return true;
}

LorenzIntervals lorenz_invariant_intervals(const LorenzParams& p) {
  p.validate();
  LorenzIntervals out;
  const Rational half = rat(1, 2);
  Rational axd = p.a * p.xd;
  Rational left = p.a * (p.xd - half) + half;
  if (axd < half) {
    out.kind = LorenzIntervals::Kind::Two;
    out.intervals = {{left, axd}, {1 - axd, 1 - left}};
  } else if (axd > half) {
    out.kind = LorenzIntervals::Kind::One;
    out.intervals = {{left, Rational(p.a * (half - p.xd) + half)}};
  } else {
    out.kind = LorenzIntervals::Kind::Degenerate;
    return out;
  }
  out.verified = std::all_of(out.intervals.begin(), out.intervals.end(),
                             [&](const auto& iv) { return lorenz_interval_invariant(p, iv.first, iv.second); });
  return out;
}

#define SYMBREAK_INSTANTIATE(S)                                                                       \
  template S g_eval<S>(const S&);                                                                     \
  template std::vector<S> coupled_step<S>(const std::vector<S>&, const std::vector<S>&, const S&);    \
  template std::vector<S> torus_reduce<S>(const std::vector<S>&);                                     \
  template std::vector<S> torus_inversion<S>(const std::vector<S>&);                                  \
  template DiagPerp<S> diag_perp_decompose<S>(const std::vector<S>&);                                 \
  template bool in_permutahedron<S>(const std::vector<S>&);                                           \
  template PermutahedronPoint<S> permutahedron_representative<S>(const std::vector<S>&, std::size_t); \
  template S lorenz_step<S>(const S&, const S&, const S&);

SYMBREAK_INSTANTIATE(Rational)
SYMBREAK_INSTANTIATE(double)

#undef SYMBREAK_INSTANTIATE

}  // namespace symbreak
