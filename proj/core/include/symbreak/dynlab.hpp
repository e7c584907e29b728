#pragma once

#include <cstddef>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "symbreak/asiup.hpp"
#include "symbreak/simplexmaps.hpp"
#include "symbreak/torusmaps.hpp"

namespace symbreak {

// 53-bit uniform doubles from a seeded mt19937_64; portable across libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }
  std::vector<double> torus_point(std::size_t n);
  std::vector<double> simplex_point(std::size_t d);  // uniform in S_d

 private:
  std::mt19937_64 gen_;
};

struct Orbit {
  std::string space;  // torus | simplex | interval
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;
  std::vector<std::size_t> times;
  std::vector<std::vector<double>> samples;
  std::uint64_t guard_events = 0;
  std::size_t dim() const { return samples.empty() ? 0 : samples[0].size(); }
};

// steps counts every iteration; samples are t = 1..steps - burn_in
Orbit run_torus_orbit(const Distribution& rho, const Rational& eps, std::size_t steps, std::size_t burn_in, std::uint64_t seed);
// G_{rho,eps} through the float reduction pipeline
Orbit run_simplex_orbit(const SimplexMapParams& p, std::size_t steps, std::size_t burn_in, std::uint64_t seed,
                        std::optional<std::vector<double>> start = std::nullopt);
Orbit run_h_orbit(const HMapSpec& h, std::size_t steps, std::size_t burn_in, std::uint64_t seed,
                  std::optional<std::vector<double>> start = std::nullopt);
Orbit run_lorenz_orbit(const LorenzParams& p, std::size_t steps, std::size_t burn_in, std::uint64_t seed);

// float evaluation of the assembled H; nullopt off every piece
std::optional<std::vector<double>> eval_H_float(const HMapSpec& h, const std::vector<double>& x);

struct PolarRow {
  std::size_t t;
  std::size_t i;
  double angle;
  double radius;
};

std::vector<PolarRow> polar_plot_data(const Orbit& o);

struct ClassifyConfig {
  std::size_t sectors = 64;
  double threshold = 0.9;
};

struct CandidateScore {
  std::string label;
  std::vector<std::vector<std::size_t>> blocks;  // 0-based coordinate blocks
  double invariance = 0, distinctness = 1, inversion = 0, score = 0;
};

struct SymmetryVerdict {
  std::string label;  // e.g. "Pi_3 x Z2", "Pi_{1,2}", "Pi_{1,2} x Pi_{3,4}", "inconclusive"
  std::vector<std::vector<std::size_t>> blocks;
  bool full = false;
  bool inversion_symmetric = false;
  double score = 0;
  std::vector<CandidateScore> evidence;
};

SymmetryVerdict classify_symmetry(const Orbit& o, const ClassifyConfig& cfg = {});

struct Density {
  std::size_t d = 0, bins = 0;
  std::map<std::vector<int>, double> weights;  // cell -> mass
  double total() const;
};

Density histogram_density(const Orbit& o, std::size_t bins);

// f(0..count-1) on up to `jobs` threads; results in index order, so the
// output does not depend on the thread count
template <class R>
std::vector<R> run_jobs(std::size_t jobs, std::size_t count, const std::function<R(std::size_t)>& f) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errs(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<R> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errs[i]) std::rethrow_exception(errs[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace symbreak
