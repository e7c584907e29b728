#pragma once

#include <cmath>
#include <cstdint>

#include "symbreak/ratgeom.hpp"

namespace symbreak {

// Float-path floors snap to the nearest integer inside this band; every snap
// bumps a per-thread counter so orbits can report discontinuity crossings.
inline constexpr double kGuardBand = 0x1p-40;

std::uint64_t guard_events();
void reset_guard_events();
void note_guard_event();

inline Rational floor_s(const Rational& x) { return floor_q(x); }
inline Rational ceil_s(const Rational& x) { return ceil_q(x); }

inline double floor_s(double x) {
  double r = std::nearbyint(x);
  if (r != x && std::abs(x - r) < kGuardBand) {
    note_guard_event();
    return r;
  }
  return std::floor(x);
}

inline double ceil_s(double x) { return -floor_s(-x); }

template <class S>
S frac_s(const S& x) {
  S f = floor_s(x);
  return S(x - f);
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

template <class S>
S scalar_of(const Rational& q);
template <>
inline Rational scalar_of<Rational>(const Rational& q) { return q; }
template <>
inline double scalar_of<double>(const Rational& q) { return q.get_d(); }

}  // namespace symbreak
