#pragma once

#include <cstddef>
#include <vector>

#include "symbreak/ratgeom.hpp"
#include "symbreak/torusmaps.hpp"

namespace symbreak {

// out[i] = in[src[i]] + shift[i]; shift is empty for plain permutations
struct Permutation {
  std::vector<std::size_t> src;
  std::vector<long> shift;

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  std::size_t size() const { return src.size(); }
  bool is_identity() const;
  Permutation after(const Permutation& inner) const;  // this o inner
  bool operator==(const Permutation& o) const { return src == o.src && shift == o.shift; }

  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != src.size()) throw LengthMismatch("permutation size");
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      out[i] = v[src[i]];
      if (!shift.empty()) out[i] += shift[i];
    }
    return out;
  }
};

template <class S>
void require_distinct_mod1(const std::vector<S>& u);

// D*_N representative: (Pu)_i = u_i + floor(u_N - u_i) - floor(u_N)
template <class S>
std::vector<S> lift_P(const std::vector<S>& u);
template <class S>
bool in_Dstar(const std::vector<S>& u);
template <class S>
bool in_IN(const std::vector<S>& u);

// sorts the first N-1 coordinates, fixes N
template <class S>
Permutation ordering_permutation(const std::vector<S>& u);

// P o F o P^-1 on D*_N
template <class S>
std::vector<S> conjugated_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps);
// pi_{Fu} o F|_{I_N}
template <class S>
std::vector<S> projected_step(const std::vector<S>& u, const std::vector<S>& rho, const S& eps);

template <class S>
struct FiberPoint {
  std::vector<S> x;
  S s;
};

template <class S>
FiberPoint<S> phi_conjugate(const std::vector<S>& u);
template <class S>
std::vector<S> phi_inverse(const FiberPoint<S>& p);
template <class S>
bool in_open_simplex(const std::vector<S>& x);

template <class S>
FiberPoint<S> reduced_step(const std::vector<S>& x, const S& s, const std::vector<S>& rho, const S& eps);
// base map G_{rho,eps}, evaluated through the pipeline at fiber value 0
template <class S>
std::vector<S> base_map(const std::vector<S>& x, const std::vector<S>& rho, const S& eps);

inline RatVec base_map(const RatVec& x, const Distribution& rho, const Rational& eps) {
  return base_map<Rational>(x, rho.w, eps);
}

template <class S>
std::vector<S> sigma_on_IN(const std::vector<S>& u);
// P o S o P^-1 followed by the ordering permutation; independent of sigma_on_IN
template <class S>
std::vector<S> sigma_via_pipeline(const std::vector<S>& u);

template <class S>
std::vector<S> sigma_d(const std::vector<S>& x);

// cyclic shift u_i -> u_{i+1} pushed back to D*_N with u_1 as reference
template <class S>
std::vector<S> kappa(const std::vector<S>& u);

struct KappaWitness {
  RatVec u;
  Permutation pi;
  Rational lhs;  // (pi_{k pi u} o k o pi u)_N
  Rational rhs;  // (pi_{k u} o k o u)_N
};

KappaWitness kappa_witness(std::size_t n);
bool recheck_kappa_witness(const KappaWitness& w);

enum class AltVariant { LastNMinus1, SkipNMinus1 };

template <class S>
std::vector<S> alt_lift_P(AltVariant v, const std::vector<S>& u);
template <class S>
bool alt_in_IN(AltVariant v, const std::vector<S>& u);

struct AltOrdering {
  Permutation first;   // sorts the permuted block
  Permutation second;  // identity except for the two-step variant
  Permutation combined() const { return second.after(first); }
};

template <class S>
AltOrdering alt_ordering(AltVariant v, const std::vector<S>& u);
template <class S>
std::vector<S> alt_sigma(AltVariant v, const std::vector<S>& u);
template <class S>
std::vector<S> alt_sigma_via_pipeline(AltVariant v, const std::vector<S>& u);

}  // namespace symbreak
