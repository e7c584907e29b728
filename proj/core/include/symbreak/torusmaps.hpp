#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symbreak/ratgeom.hpp"
#include "symbreak/scalar.hpp"

namespace symbreak {

// weights rho_1..rho_N, nonnegative with exact sum 1
struct Distribution {
  RatVec w;

  static Distribution uniform(std::size_t n);
  // (r, ..., r, 1 - d r) on N = d + 1 coordinates
  static Distribution clustered(std::size_t d, const Rational& r);
  std::size_t size() const { return w.size(); }
  void validate() const;
  template <class S>
  std::vector<S> as() const {
    std::vector<S> out;
    for (const auto& x : w) out.push_back(scalar_of<S>(x));
    return out;
  }
};

template <class S>
S g_eval(const S& u);

template <class S>
std::vector<S> coupled_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps);

inline RatVec coupled_step(const RatVec& u, const Distribution& rho, const Rational& eps) {
  return coupled_step<Rational>(u, rho.w, eps);
}

template <class S>
std::vector<S> torus_reduce(const std::vector<S>& u);
template <class S>
std::vector<S> torus_inversion(const std::vector<S>& u);

// 2(1-eps) I + 2 eps 1 rho^T, the linear part of every affine piece
RatMatrix coupled_linear_part(const Distribution& rho, const Rational& eps);

template <class S>
struct DiagPerp {
  S diag;
  std::vector<S> perp;
};

template <class S>
DiagPerp<S> diag_perp_decompose(const std::vector<S>& u);

template <class S>
struct PermutahedronPoint {
  std::vector<S> coords;
  bool constraints_ok = false;
  std::size_t translations = 0;
};

// every proper subset S satisfies sum_S u <= |S|(N-|S|)/(2N)
template <class S>
bool in_permutahedron(const std::vector<S>& u);

// translate a zero-sum vector by the scaled lattice {n/N : n_i = n_j mod N,
// sum n = 0} into the permutahedron
template <class S>
PermutahedronPoint<S> permutahedron_representative(const std::vector<S>& perp, std::size_t max_steps = 100000);

struct LorenzParams {
  Rational a;
  Rational xd;
  void validate() const;
};

template <class S>
S lorenz_step(const S& x, const S& a, const S& xd);
inline Rational lorenz_step(const Rational& x, const LorenzParams& p) { return lorenz_step<Rational>(x, p.a, p.xd); }

struct LorenzIntervals {
  enum class Kind { Two, One, Degenerate };
  Kind kind = Kind::Degenerate;
  std::vector<std::pair<Rational, Rational>> intervals;  // closed intervals [lo, hi]
  bool verified = false;
};

LorenzIntervals lorenz_invariant_intervals(const LorenzParams& p);
// image of [lo, hi] under each monotone branch lies in [lo, hi]
bool lorenz_interval_invariant(const LorenzParams& p, const Rational& lo, const Rational& hi);

}  // namespace symbreak
