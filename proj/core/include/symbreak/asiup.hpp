#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/ratgeom.hpp"
#include "symbreak/simplexmaps.hpp"

namespace symbreak {

// p_0 inside B_k, p_1..p_d inside the facet T between A_k and B_k
struct PointFrame {
  std::size_t d = 0, k = 0;
  std::vector<RatVec> p;  // p_0..p_d
  RatVec ratios;          // r_n = |p0pn| / |p0p1|, n = 1..d, all rational
  RatVec lengths_sq;      // |p0pn|^2, n = 1..d
  Rational vk_len_sq;     // |p0vk|^2
  RatVec vk;
};

PointFrame select_points(std::size_t d, std::size_t k);
// empty string when every frame invariant holds, else the first violation
std::string frame_violation(const PointFrame& f);
Rational a_prime_bound(const PointFrame& f);

// T = closure(A_k) n closure(B_k)
std::vector<RatVec> facet_T_vertices(std::size_t d, std::size_t k);

struct HMapSpec {
  PointFrame frame;
  Rational a;
  Rational a_prime;
  Rational lambda;  // contraction toward p_0 on B_k outside C
  AffineMap on_C;
  AffineMap on_A;
  Rational eps_a;   // 1 - a/2
};

HMapSpec build_H(const PointFrame& f, const Rational& a);
// images of p_0..p_d under the affine piece on C
std::vector<RatVec> h_vertex_images(const PointFrame& f, const Rational& a);
// the assembled sigma_d-equivariant map; nullopt on boundaries where no
// piece applies
std::optional<RatVec> eval_H(const HMapSpec& h, const RatVec& x);

struct VertexRecord {
  RatVec point;
  std::vector<Rational> bary;  // barycentrics of point (or its image) in the target simplex
  std::string where;
  bool ok = false;
};

struct PairRecord {
  std::string name;
  std::string outcome;  // separated | farkas | touching | overlap
  std::optional<HalfSpace> separator;
  std::vector<RatVec> common;
};

struct IupCertificate {
  std::string system;  // "H" or "G2"
  std::size_t d = 0, k = 0;
  Rational a;
  Rational a_prime;
  Rational eps;
  Rational varrho;
  std::vector<RatVec> frame;
  RatVec ratios;
  std::vector<RatVec> hc_vertices;
  std::vector<VertexRecord> location;
  std::vector<VertexRecord> hc_cap_b;
  std::vector<VertexRecord> hc_cap_a;
  bool ld_check = false;
  bool prop2 = false;
  bool asymmetry_checked = false;
  bool asymmetric = false;
  std::vector<PairRecord> asymmetry;
  std::string failure;

  bool pass() const { return prop2 && ld_check && asymmetry_checked && asymmetric; }
};

IupCertificate verify_prop2(const HMapSpec& h);
// C = (p0, p1, p2) from feat2d_data and the map G_{rho,eps} in place of H
IupCertificate verify_prop2_g2(const SimplexMapParams& p);
IupCertificate& verify_asymmetry(IupCertificate& cert);

IupCertificate certify(const PointFrame& f, const Rational& a);

struct SearchResult {
  Rational a;
  IupCertificate cert;
  std::size_t evaluations = 0;
};

SearchResult search_max_a(const PointFrame& f, const Rational& precision);

// certificate JSON; header carries the tool version and parameter echo
std::string certificate_json(const IupCertificate& c, const std::vector<std::pair<std::string, std::string>>& header = {});

struct VerifyReport {
  bool ok = false;
  bool well_formed = false;
  std::vector<std::string> messages;
};

// independent re-check of a certificate file's content
VerifyReport verify_certificate_json(const std::string& text);

}  // namespace symbreak
