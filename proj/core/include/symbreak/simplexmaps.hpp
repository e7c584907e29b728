#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/ratgeom.hpp"
#include "symbreak/torusmaps.hpp"

namespace symbreak {

struct AtomId {
  enum class Kind { A, B };
  Kind kind = Kind::A;
  std::size_t k = 0;

  std::string label() const { return (kind == Kind::A ? "A_" : "B_") + std::to_string(k); }
  bool operator==(const AtomId& o) const { return kind == o.kind && k == o.k; }
};

struct SimplexMapParams {
  std::size_t d = 2;
  Rational varrho;
  Rational eps;

  static SimplexMapParams uniform(std::size_t d, const Rational& eps);
  Distribution distribution() const { return Distribution::clustered(d, varrho); }
};

// closed S_d: x >= 0, sum <= 1
std::vector<HalfSpace> simplex_hrep(std::size_t d);
RatVec simplex_vertex(std::size_t d, std::size_t k);  // v_0 = 0, v_k = e_k
// closure of the atom; every facet is strict for the open atom
std::vector<HalfSpace> atom_hrep(const AtomId& id, std::size_t d);
Simplex atom_vertices(const AtomId& id, std::size_t d);
Polytope atom_polytope(const AtomId& id, std::size_t d);
bool in_atom_open(const AtomId& id, std::size_t d, const RatVec& x);
std::optional<AtomId> atom_of(const RatVec& x, std::size_t d);

AffineMap sigma_d_map(std::size_t d);

std::vector<bool> b_atom_validity(std::size_t d, const Rational& varrho);

AffineMap restriction_A(const SimplexMapParams& p, std::size_t k);
AffineMap restriction_B(const SimplexMapParams& p, std::size_t k);

// closed-form G on the atoms where a formula is known; nullopt elsewhere
std::optional<RatVec> closed_form_G(const SimplexMapParams& p, const RatVec& x);

struct Feat2D {
  RatVec p0, p1, p2;
  // row n holds the coordinates of L(p0p_n) in the basis (p0p1, p0p2)
  RatMatrix basis_matrix;
  Rational alpha;
  AffineMap restriction;
};

Feat2D feat2d_data(const SimplexMapParams& p);

}  // namespace symbreak
