#include "symbreak/dynlab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "symbreak/reduction.hpp"

namespace symbreak {

std::vector<double> Rng::torus_point(std::size_t n) {
  std::vector<double> u(n);
  for (auto& x : u) x = uniform();
  return u;
}

std::vector<double> Rng::simplex_point(std::size_t d) {
  // spacings of sorted uniforms
  std::vector<double> c(d);
  for (auto& x : c) x = uniform();
  std::sort(c.begin(), c.end());
  std::vector<double> x(d);
  double prev = 0;
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = c[i] - prev;
    prev = c[i];
  }
  return x;
}

namespace {

void check_steps(std::size_t steps, std::size_t burn_in) {
  if (steps <= burn_in) throw ParameterOutOfRange("steps must exceed burn_in");
}

std::string str(const Rational& q) { return to_string(q); }

struct DAffine {
  std::vector<std::vector<double>> m;
  std::vector<double> b;

  explicit DAffine(const AffineMap& a) {
    const std::size_t r = a.linear.rows(), c = a.linear.cols();
    m.assign(r, std::vector<double>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m[i][j] = a.linear(i, j).get_d();
    for (const auto& q : a.offset) b.push_back(q.get_d());
  }
  std::vector<double> operator()(const std::vector<double>& x) const {
    std::vector<double> y(b);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
  }
};

struct DHrep {
  std::vector<std::vector<double>> n;
  std::vector<double> off;

  explicit DHrep(const std::vector<HalfSpace>& h) {
    for (const auto& f : h) {
      std::vector<double> row;
      for (const auto& q : f.normal) row.push_back(q.get_d());
      n.push_back(std::move(row));
      off.push_back(f.offset.get_d());
    }
  }
  bool contains(const std::vector<double>& x) const {
    for (std::size_t r = 0; r < n.size(); ++r) {
      double s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += n[r][j] * x[j];
      if (s > off[r]) return false;
    }
    return true;
  }
};

std::vector<double> sigma_d_float(const std::vector<double>& x) { return sigma_d<double>(x); }

// float copies of the pieces of one HMapSpec
struct HFloat {
  DAffine on_C, on_A;
  DHrep A, B, C;
  std::vector<double> p0;
  double lambda;

  explicit HFloat(const HMapSpec& h)
      : on_C(h.on_C),
        on_A(h.on_A),
        A(atom_hrep({AtomId::Kind::A, h.frame.k}, h.frame.d)),
        B(atom_hrep({AtomId::Kind::B, h.frame.k}, h.frame.d)),
        C(Simplex(h.frame.p).polytope().hrep.value()),
        lambda(h.lambda.get_d()) {
    for (const auto& q : h.frame.p[0]) p0.push_back(q.get_d());
  }

  std::optional<std::vector<double>> own(const std::vector<double>& x) const {
    if (A.contains(x)) return on_A(x);
    if (B.contains(x)) {
      if (C.contains(x)) return on_C(x);
      std::vector<double> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = p0[i] + lambda * (x[i] - p0[i]);
      return y;
    }
    return std::nullopt;
  }
};

std::optional<std::vector<double>> eval_H_with(const HFloat& hf, const std::vector<double>& x, const std::vector<double>& rho,
                                               double eps) {
  if (auto y = hf.own(x)) return y;
  if (auto y = hf.own(sigma_d_float(x))) return sigma_d_float(*y);
  try {
    return base_map<double>(x, rho, eps);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<double>> eval_H_float(const HMapSpec& h, const std::vector<double>& x) {
  HFloat hf(h);
  return eval_H_with(hf, x, Distribution::uniform(h.frame.d + 1).as<double>(), h.eps_a.get_d());
}

Orbit run_torus_orbit(const Distribution& rho, const Rational& eps, std::size_t steps, std::size_t burn_in, std::uint64_t seed) {
  rho.validate();
  Orbit o;
  o.space = "torus";
  o.params = {{"N", std::to_string(rho.size())}, {"eps", str(eps)}, {"rho", to_string(rho.w)}};
  o.seed = seed;
  check_steps(steps, burn_in);
  o.burn_in = burn_in;
  Rng rng(seed);
  const auto r = rho.as<double>();
  const double e = eps.get_d();
  const auto g0 = guard_events();
  auto u = rng.torus_point(rho.size());
  for (std::size_t t = 1; t <= steps; ++t) {
    u = coupled_step<double>(u, r, e);
    if (t > burn_in) {
      o.times.push_back(t - burn_in);
      o.samples.push_back(u);
    }
  }
  o.guard_events = guard_events() - g0;
  return o;
}

Orbit run_simplex_orbit(const SimplexMapParams& p, std::size_t steps, std::size_t burn_in, std::uint64_t seed,
                        std::optional<std::vector<double>> start) {
  Orbit o;
  o.space = "simplex";
  o.params = {{"d", std::to_string(p.d)}, {"eps", str(p.eps)}, {"varrho", str(p.varrho)}};
  o.seed = seed;
  check_steps(steps, burn_in);
  o.burn_in = burn_in;
  Rng rng(seed);
  const auto r = p.distribution().as<double>();
  const double e = p.eps.get_d();
  const auto g0 = guard_events();
  auto x = start ? *start : rng.simplex_point(p.d);
  for (std::size_t t = 1; t <= steps; ++t) {
    try {
      x = base_map<double>(x, r, e);
    } catch (const Error&) {
      // measure-zero collision in float; restart from a fresh point
      note_guard_event();
      x = rng.simplex_point(p.d);
    }
    if (t > burn_in) {
      o.times.push_back(t - burn_in);
      o.samples.push_back(x);
    }
  }
  o.guard_events = guard_events() - g0;
  return o;
}

Orbit run_h_orbit(const HMapSpec& h, std::size_t steps, std::size_t burn_in, std::uint64_t seed,
                  std::optional<std::vector<double>> start) {
  Orbit o;
  o.space = "simplex";
  o.params = {{"d", std::to_string(h.frame.d)}, {"k", std::to_string(h.frame.k)}, {"a", str(h.a)}};
  o.seed = seed;
  check_steps(steps, burn_in);
  o.burn_in = burn_in;
  Rng rng(seed);
  const HFloat hf(h);
  const auto rho = Distribution::uniform(h.frame.d + 1).as<double>();
  const double e = h.eps_a.get_d();
  const auto g0 = guard_events();
  auto x = start ? *start : rng.simplex_point(h.frame.d);
  for (std::size_t t = 1; t <= steps; ++t) {
    auto y = eval_H_with(hf, x, rho, e);
    if (!y) {
      note_guard_event();
      y = rng.simplex_point(h.frame.d);
    }
    x = std::move(*y);
    if (t > burn_in) {
      o.times.push_back(t - burn_in);
      o.samples.push_back(x);
    }
  }
  o.guard_events = guard_events() - g0;
  return o;
}

Orbit run_lorenz_orbit(const LorenzParams& p, std::size_t steps, std::size_t burn_in, std::uint64_t seed) {
  p.validate();
  Orbit o;
  o.space = "interval";
  o.params = {{"a", str(p.a)}, {"xd", str(p.xd)}};
  o.seed = seed;
  check_steps(steps, burn_in);
  o.burn_in = burn_in;
  Rng rng(seed);
  const double a = p.a.get_d(), xd = p.xd.get_d();
  double x = rng.uniform();
  for (std::size_t t = 1; t <= steps; ++t) {
    x = lorenz_step<double>(x, a, xd);
    if (t > burn_in) {
      o.times.push_back(t - burn_in);
      o.samples.push_back({x});
    }
  }
  return o;
}

namespace {

double half_width(std::size_t n) { return static_cast<double>(n - 1) / (2.0 * static_cast<double>(n)); }

// torus samples mapped into the permutahedron
std::vector<std::vector<double>> perm_coords(const Orbit& o) {
  if (o.space != "torus") throw ParameterOutOfRange("permutahedron coordinates need a torus orbit");
  std::vector<std::vector<double>> out;
  out.reserve(o.samples.size());
  for (const auto& u : o.samples) {
    auto dp = diag_perp_decompose<double>(u);
    out.push_back(permutahedron_representative<double>(dp.perp).coords);
  }
  return out;
}

using Hist = std::vector<double>;

double similarity(const Hist& a, const Hist& b) {
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lo += std::min(a[i], b[i]);
    hi += std::max(a[i], b[i]);
  }
  return hi > 0 ? lo / hi : 1.0;
}

Hist mean_of(const std::vector<Hist>& h, const std::vector<std::size_t>& block) {
  Hist m(h[0].size(), 0.0);
  for (auto i : block)
    for (std::size_t b = 0; b < m.size(); ++b) m[b] += h[i][b];
  for (auto& x : m) x /= static_cast<double>(block.size());
  return m;
}

std::string block_label(const std::vector<std::size_t>& b) {
  std::ostringstream s;
  s << "Pi_{";
  for (std::size_t i = 0; i < b.size(); ++i) s << (i ? "," : "") << b[i] + 1;
  s << "}";
  return s.str();
}

// partitions into the full group, a singleton plus the rest, and two blocks of size >= 2
std::vector<std::vector<std::vector<std::size_t>>> candidates(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  out.push_back({all});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rest;
    for (auto j : all)
      if (j != i) rest.push_back(j);
    out.push_back({rest, {i}});
  }
  // subsets containing coordinate 0 so each split appears once
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;
    std::vector<std::size_t> a, b;
    for (std::size_t j = 0; j < n; ++j) ((mask >> j) & 1 ? a : b).push_back(j);
    if (a.size() >= 2 && b.size() >= 2) out.push_back({a, b});
  }
  return out;
}

}  // namespace

std::vector<PolarRow> polar_plot_data(const Orbit& o) {
  const auto pts = perm_coords(o);
  const std::size_t n = o.dim();
  const double scale = M_PI / half_width(n);
  std::vector<PolarRow> rows;
  rows.reserve(pts.size() * n);
  for (std::size_t s = 0; s < pts.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      rows.push_back({o.times[s], i + 1, pts[s][i] * scale, static_cast<double>(o.times[s])});
  return rows;
}

SymmetryVerdict classify_symmetry(const Orbit& o, const ClassifyConfig& cfg) {
  if (o.samples.size() < 1000) throw InsufficientSamples("classification needs at least 1000 samples");
  const std::size_t n = o.dim();
  if (n < 3) throw ParameterOutOfRange("classification needs N >= 3");
  const std::size_t m = cfg.sectors;
  const double R = half_width(n);
  const auto pts = perm_coords(o);

  std::vector<Hist> h(n, Hist(m, 0.0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      double f = (p[i] + R) / (2 * R);
      auto b = static_cast<long>(std::floor(f * static_cast<double>(m)));
      b = std::clamp(b, 0L, static_cast<long>(m) - 1);
      h[i][static_cast<std::size_t>(b)] += 1;
    }
  for (auto& hi : h)
    for (auto& x : hi) x /= static_cast<double>(pts.size());

  SymmetryVerdict v;
  v.label = "inconclusive";
  const CandidateScore* best = nullptr;
  for (const auto& blocks : candidates(n)) {
    CandidateScore c;
    c.blocks = blocks;
    std::vector<Hist> means;
    c.invariance = 1;
    for (const auto& bl : blocks) {
      means.push_back(mean_of(h, bl));
      for (auto i : bl) c.invariance = std::min(c.invariance, similarity(h[i], means.back()));
    }
    double maxsim = 0;
    for (std::size_t a = 0; a < means.size(); ++a)
      for (std::size_t b = a + 1; b < means.size(); ++b) maxsim = std::max(maxsim, similarity(means[a], means[b]));
    c.distinctness = blocks.size() > 1 ? 1 - maxsim : 1;
    // symmetrized histograms against their mirror image x -> -x
    double lo = 0, hi = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (std::size_t b = 0; b < m; ++b) {
        double x = means[bi][b], y = means[bi][m - 1 - b];
        lo += static_cast<double>(blocks[bi].size()) * std::min(x, y);
        hi += static_cast<double>(blocks[bi].size()) * std::max(x, y);
      }
    c.inversion = hi > 0 ? lo / hi : 1;
    c.score = std::min({c.invariance, c.distinctness, std::max(c.inversion, 1 - c.inversion)});
    std::string lab;
    for (const auto& bl : blocks)
      if (bl.size() > 1) lab += (lab.empty() ? "" : " x ") + (bl.size() == n ? "Pi_" + std::to_string(n) : block_label(bl));
    if (c.inversion >= 0.5) lab += " x Z2";
    c.label = lab;
    v.evidence.push_back(c);
  }
  for (const auto& c : v.evidence)
    if (!best || c.score > best->score) best = &c;
  v.score = best->score;
  if (best->score >= cfg.threshold) {
    v.label = best->label;
    v.blocks = best->blocks;
    v.full = best->blocks.size() == 1 && best->inversion >= 0.5;
    v.inversion_symmetric = best->inversion >= 0.5;
  }
  return v;
}

double Density::total() const {
  double s = 0;
  for (const auto& [k, w] : weights) s += w;
  return s;
}

Density histogram_density(const Orbit& o, std::size_t bins) {
  if (bins == 0) throw ParameterOutOfRange("bins must be positive");
  if (o.samples.empty()) throw InsufficientSamples("empty orbit");
  Density d;
  d.d = o.dim();
  d.bins = bins;
  const double w = 1.0 / static_cast<double>(o.samples.size());
  for (const auto& x : o.samples) {
    std::vector<int> cell;
    for (double c : x) {
      auto b = static_cast<long>(std::floor(c * static_cast<double>(bins)));
      cell.push_back(static_cast<int>(std::clamp(b, 0L, static_cast<long>(bins) - 1)));
    }
    d.weights[cell] += w;
  }
  return d;
}

}  // namespace symbreak
