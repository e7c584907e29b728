#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symbreak/asiup.hpp"
#include "symbreak/dynlab.hpp"
#include "symbreak/reduction.hpp"
#include "symbreak/simplexmaps.hpp"
#include "symbreak/torusmaps.hpp"
#include "symbreak/version.hpp"

using namespace symbreak;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kUsage = 1, kFail = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Echo = std::vector<std::pair<std::string, std::string>>;

Rational arg_q(const std::string& name, const std::string& s, Echo& echo) {
  bool dec = false;
  Rational q;
  try {
    q = parse_rational(s, &dec);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (dec) std::cerr << "note: --" << name << " " << s << " read as " << to_string(q) << "\n";
  echo.emplace_back(name, to_string(q));
  return q;
}

RatVec arg_vec(const std::string& name, const std::string& s, Echo& echo) {
  bool dec = false;
  RatVec v;
  try {
    v = parse_ratvec(s, &dec);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (dec) std::cerr << "note: --" << name << " " << s << " read as " << to_string(v) << "\n";
  echo.emplace_back(name, to_string(v));
  return v;
}

ojson jq(const Rational& q) { return to_string(q); }
ojson jv(const RatVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(jq(x));
  return a;
}
ojson jm(const RatMatrix& m) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jv(m.row(i)));
  return a;
}
ojson jaffine(const AffineMap& m) { return {{"linear", jm(m.linear)}, {"offset", jv(m.offset)}}; }

ojson header(const std::string& verb, const Echo& echo) {
  ojson h;
  h["tool"] = "symbreak";
  h["version"] = kVersion;
  h["verb"] = verb;
  for (const auto& [k, v] : echo) h[k] = v;
  return h;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void csv_header(std::ostream& os, const std::string& verb, const Echo& echo) {
  os << "# symbreak " << kVersion << "\n# verb=" << verb;
  for (const auto& [k, v] : echo) os << " " << k << "=" << v;
  os << "\n";
}

Distribution torus_rho(std::size_t n, const std::string& rho, Echo& echo) {
  if (rho.empty()) return Distribution::uniform(n);
  Distribution d{arg_vec("rho", rho, echo)};
  if (d.size() != n) throw UsageError("--rho needs " + std::to_string(n) + " weights");
  try {
    d.validate();
  } catch (const Error& e) {
    throw UsageError(std::string("--rho: ") + e.what());
  }
  return d;
}

// options shared by the orbit verbs
struct OrbitOpts {
  std::size_t n = 3, steps = 1500, burn_in = 500;
  std::uint64_t seed = 1;
  std::string eps = "0", rho, out;

  void add(CLI::App* c, std::size_t default_steps) {
    steps = default_steps;
    c->add_option("--n", n, "number of coordinates N")->check(CLI::Range(2, 16));
    c->add_option("--eps", eps, "coupling strength")->required();
    c->add_option("--rho", rho, "weights rho_1..rho_N (default uniform)");
    c->add_option("--steps", steps, "total iterations, burn-in included")->capture_default_str();
    c->add_option("--burn-in", burn_in, "discarded leading iterations")->capture_default_str();
    c->add_option("--seed", seed, "generator seed")->capture_default_str();
    c->add_option("--out", out, "output file (default stdout)");
  }

  Orbit torus(Echo& echo) const {
    echo.emplace_back("n", std::to_string(n));
    Rational e = arg_q("eps", eps, echo);
    Distribution r = torus_rho(n, rho, echo);
    echo.emplace_back("steps", std::to_string(steps));
    echo.emplace_back("burn_in", std::to_string(burn_in));
    echo.emplace_back("seed", std::to_string(seed));
    if (steps <= burn_in) throw UsageError("--steps must exceed --burn-in");
    return run_torus_orbit(r, e, steps, burn_in, seed);
  }
};

void write_orbit_csv(std::ostream& os, const Orbit& o, bool wide) {
  os.precision(17);
  if (wide) {
    os << "t";
    for (std::size_t i = 1; i <= o.dim(); ++i) os << ",u" << i;
    os << "\n";
    for (std::size_t s = 0; s < o.samples.size(); ++s) {
      os << o.times[s];
      for (double x : o.samples[s]) os << "," << x;
      os << "\n";
    }
    return;
  }
  os << "t,i,value\n";
  for (std::size_t s = 0; s < o.samples.size(); ++s)
    for (std::size_t i = 0; i < o.dim(); ++i) os << o.times[s] << "," << i + 1 << "," << o.samples[s][i] << "\n";
}

ojson cert_summary(const IupCertificate& c) {
  ojson o;
  o["d"] = c.d;
  o["k"] = c.k;
  o["a"] = jq(c.a);
  o["a_prime"] = jq(c.a_prime);
  o["prop2"] = c.prop2;
  o["ld_check"] = c.ld_check;
  o["asymmetric"] = c.asymmetric;
  o["pass"] = c.pass();
  if (!c.failure.empty()) o["failure"] = c.failure;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw UsageError("pair '" + s + "' must look like d:k");
  try {
    return {std::stoul(s.substr(0, c)), std::stoul(s.substr(c + 1))};
  } catch (const std::exception&) {
    throw UsageError("pair '" + s + "' must look like d:k");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbreak: exact and float tools for coupled expanding maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  int rc = kOk;
  std::function<int()> action;

  // simulate-torus
  OrbitOpts sim;
  bool wide = false;
  auto* c_sim = app.add_subcommand("simulate-torus", "float orbit of F_{rho,eps} on the torus");
  sim.add(c_sim, 1500);
  c_sim->add_flag("--wide", wide, "one row per step: t,u1..uN");
  c_sim->callback([&] {
    action = [&] {
      Echo echo;
      Orbit o = sim.torus(echo);
      Output out(sim.out);
      csv_header(out.os(), "simulate-torus", echo);
      out.os() << "# guard_events=" << o.guard_events << "\n";
      write_orbit_csv(out.os(), o, wide);
      return kOk;
    };
  });

  // lorenz
  std::string l_a, l_xd, l_out;
  bool l_intervals = false;
  std::size_t l_steps = 1500, l_burn = 500;
  std::uint64_t l_seed = 1;
  auto* c_lor = app.add_subcommand("lorenz", "Lorenz-like interval map");
  c_lor->add_option("--a", l_a, "slope")->required();
  c_lor->add_option("--xd", l_xd, "left breakpoint")->required();
  c_lor->add_flag("--invariant-intervals", l_intervals, "classify and verify the invariant intervals");
  c_lor->add_option("--steps", l_steps, "total iterations")->capture_default_str();
  c_lor->add_option("--burn-in", l_burn, "discarded leading iterations")->capture_default_str();
  c_lor->add_option("--seed", l_seed, "generator seed")->capture_default_str();
  c_lor->add_option("--out", l_out, "output file");
  c_lor->callback([&] {
    action = [&] {
      Echo echo;
      LorenzParams p{arg_q("a", l_a, echo), arg_q("xd", l_xd, echo)};
      try {
        p.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      Output out(l_out);
      if (l_intervals) {
        auto r = lorenz_invariant_intervals(p);
        ojson j;
        j["header"] = header("lorenz", echo);
        j["kind"] = r.kind == LorenzIntervals::Kind::Two ? "two" : r.kind == LorenzIntervals::Kind::One ? "one" : "degenerate";
        ojson iv = ojson::array();
        for (const auto& [lo, hi] : r.intervals) iv.push_back({jq(lo), jq(hi)});
        j["intervals"] = iv;
        j["verified"] = r.verified;
        out.os() << j.dump(2) << "\n";
        return r.verified ? kOk : kFail;
      }
      echo.emplace_back("steps", std::to_string(l_steps));
      echo.emplace_back("burn_in", std::to_string(l_burn));
      echo.emplace_back("seed", std::to_string(l_seed));
      if (l_steps <= l_burn) throw UsageError("--steps must exceed --burn-in");
      Orbit o = run_lorenz_orbit(p, l_steps, l_burn, l_seed);
      csv_header(out.os(), "lorenz", echo);
      out.os().precision(17);
      out.os() << "t,x\n";
      for (std::size_t s = 0; s < o.samples.size(); ++s) out.os() << o.times[s] << "," << o.samples[s][0] << "\n";
      return kOk;
    };
  });

  // reduce-eval
  std::size_t r_n = 3;
  std::string r_eps, r_rho, r_point, r_stage = "G";
  auto* c_red = app.add_subcommand("reduce-eval", "exact evaluation of the reduction pipeline stages");
  c_red->add_option("--n", r_n, "number of coordinates N")->check(CLI::Range(2, 16));
  c_red->add_option("--eps", r_eps, "coupling strength")->required();
  c_red->add_option("--rho", r_rho, "weights (default uniform)");
  c_red->add_option("--point", r_point, "torus point u_1,..,u_N")->required();
  c_red->add_option("--stage", r_stage, "last stage to evaluate")->capture_default_str()
      ->check(CLI::IsMember({"P", "pi", "F", "proj", "phi", "G"}));
  c_red->callback([&] {
    action = [&] {
      Echo echo;
      echo.emplace_back("n", std::to_string(r_n));
      Rational eps = arg_q("eps", r_eps, echo);
      Distribution rho = torus_rho(r_n, r_rho, echo);
      RatVec u = arg_vec("point", r_point, echo);
      echo.emplace_back("stage", r_stage);
      if (u.size() != r_n) throw UsageError("--point needs " + std::to_string(r_n) + " coordinates");
      ojson j;
      j["header"] = header("reduce-eval", echo);
      const std::vector<std::string> order{"P", "pi", "F", "proj", "phi", "G"};
      const auto last = std::find(order.begin(), order.end(), r_stage) - order.begin();
      ojson st;
      RatVec p = lift_P(u);
      st["P"] = jv(p);
      Permutation pi = ordering_permutation(p);
      RatVec v = pi.apply(p);
      if (last >= 1) {
        ojson src = ojson::array();
        for (auto s : pi.src) src.push_back(s + 1);
        st["pi"] = {{"permutation", src}, {"point", jv(v)}};
      }
      if (last >= 2) st["F"] = jv(coupled_step(v, rho, eps));
      if (last >= 3) st["proj"] = jv(projected_step(v, rho.w, eps));
      if (last >= 4) {
        auto f = phi_conjugate(v);
        st["phi"] = {{"x", jv(f.x)}, {"s", jq(f.s)}};
      }
      if (last >= 5) {
        auto f = phi_conjugate(v);
        RatVec g = base_map(f.x, rho, eps);
        ojson go;
        go["x"] = jv(f.x);
        go["image"] = jv(g);
        const std::size_t d = r_n - 1;
        bool clustered = true;
        for (std::size_t i = 1; i < d; ++i) clustered = clustered && rho.w[i] == rho.w[0];
        if (clustered && d >= 1) {
          auto id = atom_of(f.x, d);
          go["atom"] = id ? id->label() : "boundary";
          auto cf = closed_form_G({d, rho.w[0], eps}, f.x);
          if (cf) {
            go["closed_form"] = jv(*cf);
            go["match"] = *cf == g;
          }
        }
        st["G"] = go;
      }
      j["stages"] = st;
      std::cout << j.dump(2) << "\n";
      return kOk;
    };
  });

  // atoms
  std::size_t at_d = 2;
  std::string at_eps = "1/4", at_varrho;
  auto* c_at = app.add_subcommand("atoms", "atom table and affine restrictions of G on S_d");
  c_at->add_option("--d", at_d, "dimension")->check(CLI::Range(1, 8));
  c_at->add_option("--eps", at_eps, "coupling strength")->capture_default_str();
  c_at->add_option("--varrho", at_varrho, "shared weight (default 1/(d+1))");
  c_at->callback([&] {
    action = [&] {
      Echo echo;
      echo.emplace_back("d", std::to_string(at_d));
      SimplexMapParams p = SimplexMapParams::uniform(at_d, arg_q("eps", at_eps, echo));
      if (!at_varrho.empty()) p.varrho = arg_q("varrho", at_varrho, echo);
      ojson j;
      j["header"] = header("atoms", echo);
      auto valid = b_atom_validity(at_d, p.varrho);
      ojson list = ojson::array();
      for (auto kind : {AtomId::Kind::A, AtomId::Kind::B}) {
        if (kind == AtomId::Kind::B && at_d < 2) continue;
        for (std::size_t k = 0; k <= at_d; ++k) {
          AtomId id{kind, k};
          ojson a;
          a["atom"] = id.label();
          ojson h = ojson::array();
          for (const auto& f : atom_hrep(id, at_d)) h.push_back({{"normal", jv(f.normal)}, {"offset", jq(f.offset)}});
          a["hrep"] = h;
          ojson vs = ojson::array();
          for (const auto& x : atom_vertices(id, at_d).vertices) vs.push_back(jv(x));
          a["vertices"] = vs;
          if (kind == AtomId::Kind::A) {
            a["restriction"] = jaffine(restriction_A(p, k));
          } else {
            a["valid"] = static_cast<bool>(valid[k]);
            if (at_d <= 3 && valid[k]) a["restriction"] = jaffine(restriction_B(p, k));
          }
          list.push_back(a);
        }
      }
      j["atoms"] = list;
      std::cout << j.dump(2) << "\n";
      return kOk;
    };
  });

  // build-asiup
  std::size_t b_d = 3, b_k = 1;
  std::string b_a, b_out, b_eps, b_varrho;
  bool b_g2 = false;
  auto* c_build = app.add_subcommand("build-asiup", "build H_{d,a} and its exact certificate");
  c_build->add_option("--d", b_d, "dimension")->check(CLI::Range(2, 8));
  c_build->add_option("--k", b_k, "outer atom index");
  c_build->add_option("--a", b_a, "expanding rate");
  c_build->add_flag("--g2", b_g2, "certify C u G C for the two-dimensional G instead of H");
  c_build->add_option("--eps", b_eps, "coupling strength for --g2");
  c_build->add_option("--varrho", b_varrho, "shared weight for --g2 (default 1/3)");
  c_build->add_option("--out", b_out, "certificate file (default stdout)");
  c_build->callback([&] {
    action = [&] {
      Echo echo;
      IupCertificate cert;
      if (b_g2) {
        if (b_eps.empty()) throw UsageError("--g2 needs --eps");
        SimplexMapParams p = SimplexMapParams::uniform(2, arg_q("eps", b_eps, echo));
        if (!b_varrho.empty()) p.varrho = arg_q("varrho", b_varrho, echo);
        try {
          cert = verify_prop2_g2(p);
        } catch (const Error& e) {
          std::cerr << "no certificate: " << e.what() << "\n";
          return kFail;
        }
      } else {
        if (b_a.empty()) throw UsageError("--a is required");
        echo.emplace_back("d", std::to_string(b_d));
        echo.emplace_back("k", std::to_string(b_k));
        if (b_k > b_d) throw UsageError("--k must lie in [0, d]");
        Rational a = arg_q("a", b_a, echo);
        PointFrame f = select_points(b_d, b_k);
        try {
          cert = verify_prop2(build_H(f, a));
        } catch (const RateAboveBound& e) {
          std::cerr << "rate above bound: " << e.what() << "\n";
          return kFail;
        } catch (const ParameterOutOfRange& e) {
          throw UsageError(e.what());
        }
      }
      if (cert.prop2) {
        try {
          verify_asymmetry(cert);
        } catch (const NotAsymmetric& e) {
          cert.failure = e.what();
        }
      }
      Output out(b_out);
      out.os() << certificate_json(cert, echo);
      if (!cert.pass()) {
        std::cerr << "certificate fails: " << cert.failure << "\n";
        return kFail;
      }
      return kOk;
    };
  });

  // verify-cert
  std::string v_file;
  auto* c_ver = app.add_subcommand("verify-cert", "re-check a certificate file");
  c_ver->add_option("file", v_file, "certificate JSON")->required();
  c_ver->callback([&] {
    action = [&] {
      VerifyReport r = verify_certificate_json(read_file(v_file));
      ojson j;
      j["file"] = v_file;
      j["well_formed"] = r.well_formed;
      j["ok"] = r.ok;
      j["messages"] = r.messages;
      std::cout << j.dump(2) << "\n";
      return r.ok ? kOk : kFail;
    };
  });

  // search-a
  std::vector<std::string> s_pairs;
  std::size_t s_d = 0, s_k = 0, s_jobs = 1;
  std::string s_prec = "1/256", s_dir;
  auto* c_search = app.add_subcommand("search-a", "bisection for the largest certified rate");
  c_search->add_option("--d", s_d, "dimension");
  c_search->add_option("--k", s_k, "outer atom index");
  c_search->add_option("--pair", s_pairs, "d:k, repeatable");
  c_search->add_option("--precision", s_prec, "bracket width")->capture_default_str();
  c_search->add_option("--jobs", s_jobs, "worker threads")->capture_default_str();
  c_search->add_option("--out-dir", s_dir, "write one certificate per pair here");
  c_search->callback([&] {
    action = [&] {
      Echo echo;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& s : s_pairs) pairs.push_back(parse_pair(s));
      if (s_d) pairs.emplace_back(s_d, s_k);
      if (pairs.empty()) throw UsageError("give --d/--k or --pair");
      for (auto [d, k] : pairs)
        if (d < 2 || d > 8 || k > d) throw UsageError("pair " + std::to_string(d) + ":" + std::to_string(k) + " out of range");
      Rational prec = arg_q("precision", s_prec, echo);
      if (sgn(prec) <= 0) throw UsageError("--precision must be positive");
      std::function<ojson(std::size_t)> job = [&](std::size_t i) {
        auto [d, k] = pairs[i];
        ojson o;
        o["d"] = d;
        o["k"] = k;
        try {
          SearchResult r = search_max_a(select_points(d, k), prec);
          o["a"] = jq(r.a);
          o["a_decimal"] = r.a.get_d();
          o["evaluations"] = r.evaluations;
          o["certificate"] = cert_summary(r.cert);
          if (!s_dir.empty()) {
            Echo e = echo;
            e.emplace_back("d", std::to_string(d));
            e.emplace_back("k", std::to_string(k));
            std::string path = s_dir + "/cert_d" + std::to_string(d) + "_k" + std::to_string(k) + ".json";
            std::ofstream(path) << certificate_json(r.cert, e);
            o["file"] = path;
          }
          o["pass"] = r.cert.pass();
        } catch (const Error& e) {
          o["pass"] = false;
          o["error"] = e.what();
        }
        return o;
      };
      auto res = run_jobs<ojson>(s_jobs, pairs.size(), job);
      ojson j;
      j["header"] = header("search-a", echo);
      j["results"] = res;
      std::cout << j.dump(2) << "\n";
      bool all = std::all_of(res.begin(), res.end(), [](const ojson& o) { return o["pass"].get<bool>(); });
      return all ? kOk : kFail;
    };
  });

  // polar
  OrbitOpts pol;
  auto* c_pol = app.add_subcommand("polar", "permutahedron polar plot data (t, i, angle, radius)");
  pol.add(c_pol, 1500);
  c_pol->callback([&] {
    action = [&] {
      Echo echo;
      Orbit o = pol.torus(echo);
      Output out(pol.out);
      csv_header(out.os(), "polar", echo);
      out.os().precision(17);
      out.os() << "t,i,angle,radius\n";
      for (const auto& r : polar_plot_data(o)) out.os() << r.t << "," << r.i << "," << r.angle << "," << r.radius << "\n";
      return kOk;
    };
  });

  // classify
  OrbitOpts cls;
  std::size_t c_sectors = 64, c_seeds = 1, c_jobs = 1;
  double c_tau = 0.9;
  auto* c_cls = app.add_subcommand("classify", "residual symmetry of a torus orbit");
  cls.add(c_cls, 100500);
  c_cls->add_option("--sectors", c_sectors, "angular sectors m")->capture_default_str();
  c_cls->add_option("--threshold", c_tau, "acceptance threshold")->capture_default_str();
  c_cls->add_option("--seeds", c_seeds, "classify seeds seed..seed+count-1")->capture_default_str();
  c_cls->add_option("--jobs", c_jobs, "worker threads")->capture_default_str();
  c_cls->callback([&] {
    action = [&] {
      Echo echo;
      echo.emplace_back("sectors", std::to_string(c_sectors));
      echo.emplace_back("threshold", std::to_string(c_tau));
      Orbit first = cls.torus(echo);  // validates and echoes parameters
      std::function<ojson(std::size_t)> job = [&](std::size_t i) {
        OrbitOpts o = cls;
        o.seed = cls.seed + i;
        Echo quiet;
        Orbit orb = i == 0 ? first : o.torus(quiet);
        SymmetryVerdict v = classify_symmetry(orb, {c_sectors, c_tau});
        ojson r;
        r["seed"] = o.seed;
        r["label"] = v.label;
        r["score"] = v.score;
        r["full"] = v.full;
        r["inversion_symmetric"] = v.inversion_symmetric;
        ojson ev = ojson::array();
        for (const auto& c : v.evidence)
          ev.push_back({{"candidate", c.label},
                        {"invariance", c.invariance},
                        {"distinctness", c.distinctness},
                        {"inversion", c.inversion},
                        {"score", c.score}});
        r["evidence"] = ev;
        return r;
      };
      auto res = run_jobs<ojson>(c_jobs, c_seeds, job);
      ojson j;
      j["header"] = header("classify", echo);
      j["verdicts"] = res;
      Output out(cls.out);
      out.os() << j.dump(2) << "\n";
      return kOk;
    };
  });

  // density
  std::size_t de_d = 2, de_bins = 20, de_steps = 100500, de_burn = 500, de_k = 0;
  std::uint64_t de_seed = 1;
  std::string de_eps, de_varrho, de_a, de_out;
  auto* c_den = app.add_subcommand("density", "occupancy histogram of a G or H orbit on S_d");
  c_den->add_option("--d", de_d, "dimension")->check(CLI::Range(1, 8));
  c_den->add_option("--eps", de_eps, "coupling strength of G");
  c_den->add_option("--varrho", de_varrho, "shared weight of G (default 1/(d+1))");
  c_den->add_option("--a", de_a, "use H_{d,a} instead of G");
  c_den->add_option("--k", de_k, "outer atom of H")->capture_default_str();
  c_den->add_option("--bins", de_bins, "cells per axis")->capture_default_str();
  c_den->add_option("--steps", de_steps, "total iterations")->capture_default_str();
  c_den->add_option("--burn-in", de_burn, "discarded leading iterations")->capture_default_str();
  c_den->add_option("--seed", de_seed, "generator seed")->capture_default_str();
  c_den->add_option("--out", de_out, "output file");
  c_den->callback([&] {
    action = [&] {
      Echo echo;
      echo.emplace_back("d", std::to_string(de_d));
      if (de_steps <= de_burn) throw UsageError("--steps must exceed --burn-in");
      if (de_bins == 0) throw UsageError("--bins must be positive");
      Orbit o;
      if (!de_a.empty()) {
        echo.emplace_back("k", std::to_string(de_k));
        Rational a = arg_q("a", de_a, echo);
        if (de_d < 2 || de_k > de_d) throw UsageError("H needs d >= 2 and k in [0, d]");
        HMapSpec h;
        try {
          h = build_H(select_points(de_d, de_k), a);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        o = run_h_orbit(h, de_steps, de_burn, de_seed);
      } else {
        if (de_eps.empty()) throw UsageError("give --eps (G) or --a (H)");
        SimplexMapParams p = SimplexMapParams::uniform(de_d, arg_q("eps", de_eps, echo));
        if (!de_varrho.empty()) p.varrho = arg_q("varrho", de_varrho, echo);
        o = run_simplex_orbit(p, de_steps, de_burn, de_seed);
      }
      echo.emplace_back("bins", std::to_string(de_bins));
      echo.emplace_back("steps", std::to_string(de_steps));
      echo.emplace_back("burn_in", std::to_string(de_burn));
      echo.emplace_back("seed", std::to_string(de_seed));
      Density den = histogram_density(o, de_bins);
      Output out(de_out);
      csv_header(out.os(), "density", echo);
      out.os().precision(17);
      for (std::size_t i = 1; i <= de_d; ++i) out.os() << "c" << i << ",";
      out.os() << "weight\n";
      for (const auto& [cell, w] : den.weights) {
        for (int c : cell) out.os() << c << ",";
        out.os() << w << "\n";
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    rc = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
