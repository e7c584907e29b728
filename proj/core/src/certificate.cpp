// Certificate serialization and the independent re-check. The verifier below
// only relies on ratgeom; atoms, sigma_d and the affine pieces are transcribed
// again from their set definitions instead of calling simplexmaps/asiup.

#include <algorithm>
#include <set>

#include "json.hpp"
#include "symbreak/asiup.hpp"
#include "symbreak/version.hpp"

namespace symbreak {

using ojson = nlohmann::ordered_json;

namespace {

ojson jq(const Rational& q) { return to_string(q); }

ojson jvec(const RatVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(jq(x));
  return a;
}

ojson jpoints(const std::vector<RatVec>& pts) {
  ojson a = ojson::array();
  for (const auto& p : pts) a.push_back(jvec(p));
  return a;
}

ojson jrecords(const std::vector<VertexRecord>& rs) {
  ojson a = ojson::array();
  for (const auto& r : rs) {
    ojson o;
    o["point"] = jvec(r.point);
    o["where"] = r.where;
    o["bary"] = jvec(r.bary);
    o["ok"] = r.ok;
    a.push_back(o);
  }
  return a;
}

}  // namespace

std::string certificate_json(const IupCertificate& c, const std::vector<std::pair<std::string, std::string>>& header) {
  ojson j;
  ojson h;
  h["tool"] = "symbreak";
  h["version"] = kVersion;
  for (const auto& [k, v] : header) h[k] = v;
  j["header"] = h;
  j["system"] = c.system;
  j["d"] = c.d;
  j["k"] = c.k;
  j["a"] = jq(c.a);
  j["eps"] = jq(c.eps);
  j["varrho"] = jq(c.varrho);
  j["frame"] = jpoints(c.frame);
  ojson t;
  t["ratios"] = jvec(c.ratios);
  t["a_prime"] = jq(c.a_prime);
  t["hc_vertices"] = jpoints(c.hc_vertices);
  t["location"] = jrecords(c.location);
  t["hc_cap_b"] = jrecords(c.hc_cap_b);
  t["hc_cap_a"] = jrecords(c.hc_cap_a);
  t["ld_check"] = c.ld_check;
  ojson asym = ojson::array();
  for (const auto& p : c.asymmetry) {
    ojson o;
    o["pair"] = p.name;
    o["outcome"] = p.outcome;
    if (p.separator) o["separator"] = {{"normal", jvec(p.separator->normal)}, {"offset", jq(p.separator->offset)}};
    o["common"] = jpoints(p.common);
    asym.push_back(o);
  }
  t["asymmetry"] = asym;
  j["transcripts"] = t;
  ojson v;
  v["prop2"] = c.prop2;
  v["asymmetry_checked"] = c.asymmetry_checked;
  v["asymmetric"] = c.asymmetric;
  v["pass"] = c.pass();
  v["failure"] = c.failure;
  j["verdict"] = v;
  return j.dump(2) + "\n";
}

// ------------------------------------------------------------------ verifier

namespace {

struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rq(const ojson& j) {
  if (!j.is_string()) throw Malformed("expected a \"p/q\" string");
  try {
    std::string s = j.get<std::string>();
    if (s.find('.') != std::string::npos) throw Malformed("decimal in certificate");
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw Malformed(e.what());
  }
}

RatVec rvec(const ojson& j, std::size_t d) {
  if (!j.is_array() || j.size() != d) throw Malformed("vector of wrong length");
  RatVec v;
  for (const auto& x : j) v.push_back(rq(x));
  return v;
}

std::vector<RatVec> rpoints(const ojson& j, std::size_t d) {
  if (!j.is_array()) throw Malformed("expected a point list");
  std::vector<RatVec> v;
  for (const auto& x : j) v.push_back(rvec(x, d));
  return v;
}

const ojson& field(const ojson& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

bool rbool(const ojson& j, const char* name) {
  const auto& f = field(j, name);
  if (!f.is_boolean()) throw Malformed(std::string("field '") + name + "' is not a boolean");
  return f.get<bool>();
}

// closed half-spaces; literal transcription of the atom definitions,
// intersected with the closed simplex (redundant rows are harmless)
struct Atoms {
  std::size_t d;

  RatVec sum_range(std::size_t lo, std::size_t hi) const {  // 1-based, inclusive
    RatVec v(d, Rational(0));
    for (std::size_t i = lo; i <= hi; ++i) v[i - 1] = 1;
    return v;
  }
  std::vector<HalfSpace> simplex() const {
    std::vector<HalfSpace> h;
    for (std::size_t i = 1; i <= d; ++i) h.push_back({vscale(-1, sum_range(i, i)), 0});
    h.push_back({sum_range(1, d), 1});
    return h;
  }
  // defining rows only: A_k as sum < 1/2 or x_k > 1/2
  std::vector<HalfSpace> a_rows(std::size_t k) const {
    const Rational half = rat(1, 2);
    if (k == 0) return {{sum_range(1, d), half}};
    return {{vscale(-1, sum_range(k, k)), -half}};
  }
  std::vector<HalfSpace> b_rows(std::size_t k) const {
    const Rational half = rat(1, 2);
    auto lt = [&](const RatVec& v) { return HalfSpace{v, half}; };
    auto gt = [&](const RatVec& v) { return HalfSpace{vscale(-1, v), -half}; };
    if (k == 0) return {lt(sum_range(1, d - 1)), lt(sum_range(2, d)), gt(sum_range(1, d))};
    if (k == 1) return {lt(sum_range(1, 1)), lt(sum_range(2, d)), gt(sum_range(1, 2))};
    if (k == d) return {lt(sum_range(1, d - 1)), lt(sum_range(d, d)), gt(sum_range(d - 1, d))};
    return {lt(sum_range(k, k)), gt(sum_range(k - 1, k)), gt(sum_range(k, k + 1))};
  }
  Polytope closed(const std::vector<HalfSpace>& rows) const {
    auto h = simplex();
    h.insert(h.end(), rows.begin(), rows.end());
    return Polytope::from_hrep(h, static_cast<int>(d));
  }
  bool strictly(const std::vector<HalfSpace>& rows, const RatVec& x) const {
    auto h = simplex();
    h.insert(h.end(), rows.begin(), rows.end());
    return std::all_of(h.begin(), h.end(), [&](const HalfSpace& f) { return sgn(f.slack(x)) > 0; });
  }
  RatVec vertex(std::size_t k) const {
    RatVec v(d, Rational(0));
    if (k) v[k - 1] = 1;
    return v;
  }
  RatVec sigma(const RatVec& x) const {
    RatVec y(d);
    for (std::size_t i = 1; i < d; ++i) y[i - 1] = x[d - i - 1];
    y[d - 1] = 1 - vsum(x);
    return y;
  }
};

std::set<RatVec> as_set(const std::vector<RatVec>& v) { return {v.begin(), v.end()}; }

struct Checker {
  VerifyReport rep;
  void fail(const std::string& m) { rep.messages.push_back(m); }
  void expect(bool cond, const std::string& m) {
    if (!cond) fail(m);
  }
};

bool nonneg(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

}  // namespace

VerifyReport verify_certificate_json(const std::string& text) {
  Checker ck;
  try {
    ojson j = ojson::parse(text);
    const std::string system = field(j, "system").get<std::string>();
    if (system != "H" && system != "G2") throw Malformed("unknown system '" + system + "'");
    const auto d = field(j, "d").get<std::size_t>();
    const auto k = field(j, "k").get<std::size_t>();
    if (d < 2 || d > 8 || k > d) throw Malformed("d or k out of range");
    const Rational a = rq(field(j, "a"));
    const Rational eps = rq(field(j, "eps"));
    const Rational varrho = rq(field(j, "varrho"));
    const auto frame = rpoints(field(j, "frame"), d);
    if (frame.size() != d + 1) throw Malformed("frame needs d+1 points");
    const auto& t = field(j, "transcripts");
    const auto& v = field(j, "verdict");
    const Atoms at{d};
    const RatVec vk = at.vertex(k);
    const RatVec& p0 = frame[0];

    // the affine piece on C, from its defining data
    std::vector<RatVec> img;
    Rational rate = a;
    if (system == "H") {
      const RatVec r = rvec(field(t, "ratios"), d);
      ck.expect(a > 1, "rate a must exceed 1");
      ck.expect(r[0] == 1, "r_1 must be 1");
      const Rational l1 = norm_sq(vsub(frame[1], p0));
      for (std::size_t n = 1; n <= d; ++n) {
        const Rational ln = norm_sq(vsub(frame[n], p0));
        ck.expect(sgn(r[n - 1]) > 0 && ln == r[n - 1] * r[n - 1] * l1, "ratio r_" + std::to_string(n) + " does not match the frame");
        const Rational next = n < d ? norm_sq(vsub(frame[n + 1], p0)) : norm_sq(vsub(vk, p0));
        ck.expect(a * a * ln <= next, "a exceeds the length bound at n = " + std::to_string(n));
      }
      ck.expect(at.strictly(at.b_rows(k), p0), "p_0 is not interior to B_k");
      // p_n in the relative interior of T: on the 1/2 hyperplane, strictly
      // inside every other closed-simplex row
      const HalfSpace face = at.a_rows(k)[0];
      for (std::size_t n = 1; n <= d; ++n) {
        ck.expect(sgn(face.slack(frame[n])) == 0, "p_" + std::to_string(n) + " is off T");
        for (const auto& h : at.simplex())
          ck.expect(sgn(h.slack(frame[n])) > 0, "p_" + std::to_string(n) + " touches the boundary of T");
      }
      // p1 = p0 + t (vk - p0) with 0 < t < 1
      const RatVec w = vsub(vk, p0), u = vsub(frame[1], p0);
      const Rational tt = dot(u, w) / norm_sq(w);
      ck.expect(vscale(tt, w) == u && sgn(tt) > 0 && tt < 1, "p_1 is not on [p_0, v_k]");
      img.push_back(p0);
      for (std::size_t n = 1; n < d; ++n) img.push_back(vadd(p0, vscale(a * r[n - 1] / r[n], vsub(frame[n + 1], p0))));
      img.push_back(vadd(p0, vscale(a * r[d - 1], vsub(frame[1], p0))));
    } else {
      ck.expect(d == 2 && k == 2, "the G2 system lives on A_2 in dimension 2");
      rate = 2 * (1 - eps);
      ck.expect(a == rate, "a must equal 2(1-eps)");
      ck.expect(sgn(eps) > 0 && eps < rat(1, 2), "eps out of range");
      ck.expect(varrho >= rat(1, 4) && varrho <= rat(1, 2), "B is not an atom at this varrho");
      auto g = [&](const RatVec& x) {
        return RatVec{-rate * x[0] + 1 - 2 * eps * (1 - 2 * varrho), rate * (x[0] + x[1]) + 2 * eps * (1 - varrho) - 1};
      };
      const Polytope b = at.closed(at.b_rows(1));
      for (std::size_t n = 0; n <= d; ++n) {
        ck.expect(b.contains_closed(frame[n]), "frame point outside closure(B)");
        img.push_back(g(frame[n]));
      }
    }
    const Simplex C(frame);
    const Simplex HC(img);
    ck.expect(rpoints(field(t, "hc_vertices"), d) == img, "hc_vertices differ from the recomputed images");

    // vertex locations
    const auto& loc = field(t, "location");
    ck.expect(loc.is_array() && loc.size() == d + 1, "location transcript has the wrong size");
    const Polytope bk = at.closed(at.b_rows(k));
    for (std::size_t n = 0; n <= d; ++n) {
      bool ok = n < d ? bk.contains_closed(img[n]) : at.strictly(at.a_rows(k), img[n]);
      ck.expect(ok, "image of p_" + std::to_string(n) + " is misplaced");
      if (loc.is_array() && n < loc.size()) {
        ck.expect(rvec(field(loc[n], "point"), d) == img[n], "location point " + std::to_string(n) + " differs");
        ck.expect(rbool(loc[n], "ok") == ok, "location flag " + std::to_string(n) + " differs");
      }
    }

    // HC n B_k inside C
    const Polytope hc = HC.polytope();
    bool prop2 = true;
    auto cap_check = [&](const char* name, const Polytope& atom, auto&& target_bary) {
      auto got = intersect_vertices(hc, atom);
      const auto& rec = field(t, name);
      std::vector<RatVec> listed;
      for (const auto& r : rec) listed.push_back(rvec(field(r, "point"), d));
      ck.expect(as_set(listed) == as_set(got), std::string(name) + ": vertex set differs");
      for (const auto& r : rec) {
        RatVec p = rvec(field(r, "point"), d);
        auto bary = target_bary(p);
        bool ok = nonneg(bary);
        prop2 = prop2 && ok;
        ck.expect(rvec(field(r, "bary"), d + 1) == RatVec(bary.begin(), bary.end()), std::string(name) + ": barycentrics differ");
        ck.expect(rbool(r, "ok") == ok, std::string(name) + ": flag differs");
      }
      for (const auto& p : got) prop2 = prop2 && nonneg(target_bary(p));
    };
    cap_check("hc_cap_b", bk, [&](const RatVec& p) { return barycentric(C, p); });
    cap_check("hc_cap_a", at.closed(at.a_rows(k)), [&](const RatVec& p) {
      return barycentric(HC, vadd(vk, vscale(rate, vsub(p, vk))));
    });
    for (std::size_t n = 0; n <= d; ++n)
      prop2 = prop2 && (n < d ? bk.contains_closed(img[n]) : at.strictly(at.a_rows(k), img[n]));

    // L^d = a^d Id
    const AffineMap L = affine_from_points(frame, img);
    Rational ad = 1;
    for (std::size_t i = 0; i < d; ++i) ad *= rate;
    const bool ld = power(L.linear, static_cast<unsigned>(d)) == RatMatrix::identity(d).scaled(ad);
    ck.expect(rbool(t, "ld_check") == ld, "ld_check differs");
    prop2 = prop2 && ld;
    ck.expect(rbool(v, "prop2") == prop2, "prop2 verdict differs from the recomputation");

    // asymmetry
    bool asym_checked = false, asymmetric = false;
    const auto& asym = field(t, "asymmetry");
    if (asym.is_array() && !asym.empty()) {
      asym_checked = true;
      asymmetric = k * 2 != d;
      std::vector<std::pair<std::string, std::vector<RatVec>>> mine = {{"C", frame}, {"HC", img}};
      std::size_t idx = 0;
      for (const auto& [na, va] : mine)
        for (const auto& [nb, vb] : mine) {
          std::vector<RatVec> sb;
          for (const auto& x : vb) sb.push_back(at.sigma(x));
          auto r = disjoint_closed(Simplex(va).polytope(), Simplex(sb).polytope());
          std::string outcome = r.disjoint ? (r.reason == DisjointResult::Reason::Farkas ? "farkas" : "separated")
                                           : (r.interiors_disjoint ? "touching" : "overlap");
          if (outcome == "overlap") asymmetric = false;
          if (idx < asym.size()) {
            ck.expect(field(asym[idx], "pair").get<std::string>() == na + "|sigma(" + nb + ")", "asymmetry pair name differs");
            ck.expect(field(asym[idx], "outcome").get<std::string>() == outcome, "asymmetry outcome differs for " + na + "|sigma(" + nb + ")");
          }
          ++idx;
        }
      ck.expect(asym.size() == 4, "asymmetry transcript needs four pairs");
    }
    ck.expect(rbool(v, "asymmetry_checked") == asym_checked, "asymmetry_checked differs");
    ck.expect(rbool(v, "asymmetric") == asymmetric, "asymmetric verdict differs");
    const bool pass = prop2 && asym_checked && asymmetric;
    ck.expect(rbool(v, "pass") == pass, "pass verdict differs");
    ck.rep.well_formed = true;
    if (!pass) ck.fail("certificate does not establish an asymmetric IUP");
    ck.rep.ok = ck.rep.messages.empty();
  } catch (const Malformed& e) {
    ck.rep.well_formed = false;
    ck.fail(std::string("malformed certificate: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    ck.rep.well_formed = false;
    ck.fail(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    ck.rep.well_formed = false;
    ck.fail(std::string("certificate rejected: ") + e.what());
  }
  return ck.rep;
}

}  // namespace symbreak
