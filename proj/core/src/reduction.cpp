#include "symbreak/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace symbreak {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.src.resize(n);
  std::iota(p.src.begin(), p.src.end(), std::size_t{0});
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  Permutation p = identity(n);
  std::swap(p.src.at(i), p.src.at(j));
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] != i || (!shift.empty() && shift[i] != 0)) return false;
  return true;
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.size() != size()) throw LengthMismatch("permutation composition");
  Permutation r;
  r.src.resize(size());
  bool shifted = !shift.empty() || !inner.shift.empty();
  if (shifted) r.shift.assign(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    r.src[i] = inner.src[src[i]];
    if (shifted) r.shift[i] = (shift.empty() ? 0 : shift[i]) + (inner.shift.empty() ? 0 : inner.shift[src[i]]);
  }
  return r;
}

template <class S>
void require_distinct_mod1(const std::vector<S>& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (is_zero(frac_s(S(u[i] - u[j]))))
        throw DuplicateCoordinate("coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide mod 1");
}

template <class S>
std::vector<S> lift_P(const std::vector<S>& u) {
  if (u.empty()) return {};
  require_distinct_mod1(u);
  const S& un = u.back();
  S fn = floor_s(un);
  std::vector<S> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + floor_s(S(un - u[i])) - fn;
  return out;
}

template <class S>
bool in_Dstar(const std::vector<S>& u) {
  if (u.empty()) return false;
  const S& un = u.back();
  if (un < 0 || un >= 1) return false;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    S gap = un - u[i];
    if (!(gap > 0 && gap < 1)) return false;
  }
  return true;
}

template <class S>
bool in_IN(const std::vector<S>& u) {
  if (!in_Dstar(u)) return false;
  for (std::size_t i = 0; i + 2 < u.size(); ++i)
    if (!(u[i] < u[i + 1])) return false;
  return true;
}

namespace {

template <class S>
Permutation sort_block(const std::vector<S>& u, std::size_t begin, std::size_t end) {
  Permutation p = Permutation::identity(u.size());
  std::sort(p.src.begin() + static_cast<std::ptrdiff_t>(begin), p.src.begin() + static_cast<std::ptrdiff_t>(end),
            [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  for (std::size_t i = begin; i + 1 < end; ++i)
    if (u[p.src[i]] == u[p.src[i + 1]]) throw DuplicateCoordinate("equal coordinates cannot be ordered uniquely");
  return p;
}

}  // namespace

template <class S>
Permutation ordering_permutation(const std::vector<S>& u) {
  if (u.empty()) return {};
  return sort_block(u, 0, u.size() - 1);
}

template <class S>
std::vector<S> conjugated_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps) {
  auto w = coupled_step(torus_reduce(u), rho, eps);
  try {
    return lift_P(w);
  } catch (const DuplicateCoordinate& e) {
    throw ImageOutsideDomain(e.what());
  }
}

template <class S>
std::vector<S> projected_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps) {
  auto w = conjugated_step(u, rho, eps);
  return ordering_permutation(w).apply(w);
}

template <class S>
bool in_open_simplex(const std::vector<S>& x) {
  S total = 0;
  for (const auto& v : x) {
    if (!(v > 0)) return false;
    total += v;
  }
  return total < 1;
}

template <class S>
FiberPoint<S> phi_conjugate(const std::vector<S>& u) {
  if (!in_IN(u)) throw NotInIN("point is not in I_N");
  FiberPoint<S> p;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) p.x.push_back(S(u[i + 1] - u[i]));
  p.s = u.back();
  return p;
}

template <class S>
std::vector<S> phi_inverse(const FiberPoint<S>& p) {
  std::vector<S> u(p.x.size() + 1);
  u.back() = p.s;
  for (std::size_t i = p.x.size(); i-- > 0;) u[i] = u[i + 1] - p.x[i];
  return u;
}

template <class S>
FiberPoint<S> reduced_step(const std::vector<S>& x, const S& s, const std::vector<S>& rho, const S& eps) {
  if (!in_open_simplex(x)) throw OutsideSimplex("base point is not in the open simplex");
  auto u = phi_inverse(FiberPoint<S>{x, s});
  return phi_conjugate(projected_step(u, rho, eps));
}

template <class S>
std::vector<S> base_map(const std::vector<S>& x, const std::vector<S>& rho, const S& eps) {
  return reduced_step(x, S(0), rho, eps).x;
}

template <class S>
std::vector<S> sigma_on_IN(const std::vector<S>& u) {
  if (!in_IN(u)) throw NotInIN("sigma is defined on I_N");
  const std::size_t n = u.size();
  S delta = is_zero(u.back()) ? S(1) : S(0);
  std::vector<S> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = -delta - u[n - 2 - i];
  out[n - 1] = 1 - delta - u[n - 1];
  return out;
}

template <class S>
std::vector<S> sigma_via_pipeline(const std::vector<S>& u) {
  auto w = lift_P(torus_inversion(torus_reduce(u)));
  return ordering_permutation(w).apply(w);
}

template <class S>
std::vector<S> sigma_d(const std::vector<S>& x) {
  const std::size_t d = x.size();
  std::vector<S> out(d);
  S total = 0;
  for (const auto& v : x) total += v;
  for (std::size_t i = 0; i + 1 < d; ++i) out[i] = x[d - 2 - i];
  if (d) out[d - 1] = 1 - total;
  return out;
}

template <class S>
std::vector<S> kappa(const std::vector<S>& u) {
  const std::size_t n = u.size();
  if (n == 0) return {};
  const S& ref = u[0];
  S fr = floor_s(ref);
  std::vector<S> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = u[i + 1] + floor_s(S(ref - u[i + 1])) - fr;
  out[n - 1] = ref - fr;
  return out;
}

namespace {

Rational kappa_last(const RatVec& v) {
  auto k = kappa(v);
  return ordering_permutation(k).apply(k).back();
}

}  // namespace

KappaWitness kappa_witness(std::size_t n) {
  if (n < 3) throw ParameterOutOfRange("kappa witness needs N >= 3");
  const Permutation pi = Permutation::transposition(n, 0, 1);
  // increasing grids j/M; the first hit is returned
  for (long m = static_cast<long>(n) + 1; m < 64; ++m) {
    std::vector<long> c(n);
    std::iota(c.begin(), c.end(), 0L);
    while (true) {
      RatVec u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = rat(c[i], m);
      if (in_Dstar(u)) {
        RatVec pu = pi.apply(u);
        KappaWitness w{u, pi, kappa_last(pu), kappa_last(u)};
        if (w.lhs != w.rhs) return w;
      }
      std::size_t i = n;
      while (i > 0 && c[i - 1] == m - static_cast<long>(n - i) - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < n; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw SearchExhausted("no kappa witness on the grid");
}

bool recheck_kappa_witness(const KappaWitness& w) {
  // second path: last coordinate of kappa is the reduced first coordinate,
  // and ordering permutations never move coordinate N
  const std::size_t n = w.u.size();
  if (n < 3 || !in_Dstar(w.u)) return false;
  if (w.pi.src[n - 1] != n - 1) return false;
  bool touches_first = w.pi.src[0] != 0;
  RatVec pu = w.pi.apply(w.u);
  Rational lhs = pu[0] - floor_q(pu[0]);
  Rational rhs = w.u[0] - floor_q(w.u[0]);
  return touches_first && lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

template <class S>
std::vector<S> alt_lift_P(AltVariant v, const std::vector<S>& u) {
  const std::size_t n = u.size();
  if (n < 3) throw NotInVariantDomain("alternative reductions need N >= 3");
  require_distinct_mod1(u);
  std::vector<S> out(n);
  if (v == AltVariant::LastNMinus1) {
    const S& ref = u[0];
    S fr = floor_s(ref);
    for (std::size_t i = 0; i < n; ++i) out[i] = u[i] + ceil_s(S(ref - u[i])) - fr;
  } else {
    const S& ref = u[n - 2];
    S fr = floor_s(ref);
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] = u[i] + floor_s(S(ref - u[i])) - fr;
    out[n - 1] = u[n - 1] + ceil_s(S(ref - u[n - 1])) - fr;
  }
  return out;
}

template <class S>
bool alt_in_IN(AltVariant v, const std::vector<S>& u) {
  const std::size_t n = u.size();
  if (n < 3) return false;
  const S& ref = v == AltVariant::LastNMinus1 ? u[0] : u[n - 2];
  if (ref < 0 || ref >= 1) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(u[i] < u[i + 1])) return false;
  return u[n - 1] < u[0] + 1;
}

template <class S>
AltOrdering alt_ordering(AltVariant v, const std::vector<S>& u) {
  const std::size_t n = u.size();
  AltOrdering o;
  o.second = Permutation::identity(n);
  if (v == AltVariant::LastNMinus1) {
    o.first = sort_block(u, 1, n);
    return o;
  }
  o.first = sort_block(u, 0, n - 2);
  auto w = o.first.apply(u);
  if (w[n - 1] < w[0] + 1) return o;
  // 1-based j = max{i <= N-2 : w_i < w_N - 1}
  std::size_t j = 0;
  for (std::size_t i = 1; i <= n - 2; ++i)
    if (w[i - 1] < w[n - 1] - 1) j = i;
  if (j == 0) throw NotInVariantDomain("two-step ordering undefined");
  Permutation p;
  p.src.resize(n);
  p.shift.assign(n, 0);
  for (std::size_t i = 1; i < j; ++i) p.src[i - 1] = i;
  p.src[j - 1] = n - 1;
  p.shift[j - 1] = -1;
  for (std::size_t i = j + 1; i <= n - 1; ++i) p.src[i - 1] = i - 1;
  p.src[n - 1] = 0;
  p.shift[n - 1] = 1;
  o.second = p;
  return o;
}

template <class S>
std::vector<S> alt_sigma(AltVariant v, const std::vector<S>& u) {
  if (!alt_in_IN(v, u)) throw NotInVariantDomain("point is outside the variant's I_N");
  const std::size_t n = u.size();
  std::vector<S> out(n);
  if (v == AltVariant::LastNMinus1) {
    S delta = is_zero(u[0]) ? S(1) : S(0);
    out[0] = 1 - delta - u[0];
    for (std::size_t i = 1; i < n; ++i) out[i] = 2 - delta - u[n - i];
  } else {
    S delta = is_zero(u[n - 2]) ? S(1) : S(0);
    for (std::size_t i = 0; i + 3 < n; ++i) out[i] = -delta - u[n - 4 - i];
    out[n - 3] = 1 - delta - u[n - 1];
    out[n - 2] = 1 - delta - u[n - 2];
    out[n - 1] = 1 - delta - u[n - 3];
  }
  return out;
}

template <class S>
std::vector<S> alt_sigma_via_pipeline(AltVariant v, const std::vector<S>& u) {
  auto w = alt_lift_P(v, torus_inversion(torus_reduce(u)));
  return alt_ordering(v, w).combined().apply(w);
}

#define SYMBREAK_INSTANTIATE(S)                                                                               \
  template void require_distinct_mod1<S>(const std::vector<S>&);                                              \
  template std::vector<S> lift_P<S>(const std::vector<S>&);                                                   \
  template bool in_Dstar<S>(const std::vector<S>&);                                                           \
  template bool in_IN<S>(const std::vector<S>&);                                                              \
  template Permutation ordering_permutation<S>(const std::vector<S>&);                                        \
  template std::vector<S> conjugated_step<S>(const std::vector<S>&, const std::vector<S>&, const S&);         \
  template std::vector<S> projected_step<S>(const std::vector<S>&, const std::vector<S>&, const S&);          \
  template FiberPoint<S> phi_conjugate<S>(const std::vector<S>&);                                             \
  template std::vector<S> phi_inverse<S>(const FiberPoint<S>&);                                               \
  template bool in_open_simplex<S>(const std::vector<S>&);                                                    \
  template FiberPoint<S> reduced_step<S>(const std::vector<S>&, const S&, const std::vector<S>&, const S&);   \
  template std::vector<S> base_map<S>(const std::vector<S>&, const std::vector<S>&, const S&);                \
  template std::vector<S> sigma_on_IN<S>(const std::vector<S>&);                                              \
  template std::vector<S> sigma_via_pipeline<S>(const std::vector<S>&);                                       \
  template std::vector<S> sigma_d<S>(const std::vector<S>&);                                                  \
  template std::vector<S> kappa<S>(const std::vector<S>&);                                                    \
  template std::vector<S> alt_lift_P<S>(AltVariant, const std::vector<S>&);                                   \
  template bool alt_in_IN<S>(AltVariant, const std::vector<S>&);                                              \
  template AltOrdering alt_ordering<S>(AltVariant, const std::vector<S>&);                                    \
  template std::vector<S> alt_sigma<S>(AltVariant, const std::vector<S>&);                                    \
  template std::vector<S> alt_sigma_via_pipeline<S>(AltVariant, const std::vector<S>&);

SYMBREAK_INSTANTIATE(Rational)
SYMBREAK_INSTANTIATE(double)

#undef SYMBREAK_INSTANTIATE

}  // namespace symbreak
