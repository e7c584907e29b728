#pragma once

#include <random>

#include "symbreak/ratgeom.hpp"

namespace testing {

using symbreak::Rational;
using symbreak::RatVec;

// random rationals with bounded denominators, reproducible per seed
class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : gen_(seed) {}

  Rational unit(long den = 997) {
    std::uniform_int_distribution<long> q(2, den);
    long d = q(gen_);
    std::uniform_int_distribution<long> p(0, d - 1);
    return symbreak::rat(p(gen_), d);
  }
  // odd denominators keep every difference off 1/2 + Z, where g is not odd
  Rational unit_odd(long den = 997) {
    std::uniform_int_distribution<long> q(1, den / 2);
    long d = 2 * q(gen_) + 1;
    std::uniform_int_distribution<long> p(0, d - 1);
    return symbreak::rat(p(gen_), d);
  }
  // generic torus point: coordinates distinct mod 1
  RatVec torus(std::size_t n) {
    for (;;) {
      RatVec u;
      for (std::size_t i = 0; i < n; ++i) u.push_back(unit_odd());
      bool distinct = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) distinct = distinct && u[i] != u[j];
      if (distinct) return u;
    }
  }
  // point of I_N through the fiber chart: x in S_{N-1}, s in [0, 1)
  RatVec in_IN(std::size_t n) {
    RatVec x = simplex(n - 1);
    RatVec u(n);
    u[n - 1] = unit_odd();
    for (std::size_t i = n - 1; i-- > 0;) u[i] = u[i + 1] - x[i];
    return u;
  }
  // point of the open simplex S_d
  RatVec simplex(std::size_t d) {
    for (;;) {
      RatVec x;
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) {
        x.push_back(unit() / static_cast<long>(d));
        s += x.back();
      }
      bool pos = true;
      for (const auto& c : x) pos = pos && sgn(c) > 0;
      if (pos && s < 1) return x;
    }
  }
  // interior point of a simplex from strictly positive barycentric weights
  RatVec interior(const symbreak::Simplex& s) {
    std::vector<Rational> w;
    Rational tot = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      w.push_back(unit_odd() + symbreak::rat(1, 1000));
      tot += w.back();
    }
    RatVec x(s.dim(), Rational(0));
    for (std::size_t i = 0; i < w.size(); ++i) x = symbreak::vadd(x, symbreak::vscale(w[i] / tot, s.vertices[i]));
    return x;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline Rational q(const char* s) { return symbreak::parse_rational(s); }
inline RatVec qv(const char* s) { return symbreak::parse_ratvec(s); }

}  // namespace testing
