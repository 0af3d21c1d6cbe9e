#include "polybound/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "polybound/averaging_filter.hpp"
#include "polybound/binomial_kernel.hpp"
#include "polybound/blaschke.hpp"
#include "polybound/bounds.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/error.hpp"
#include "polybound/parallel.hpp"

namespace polybound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, uniform()); }
  Complex unimodular() { return std::polar(1.0, kTwoPi * uniform()); }

 private:
  std::mt19937_64 engine_;
};

std::string family_of(const std::string& name) {
  const auto bracket = name.find_first_of("[{");
  return bracket == std::string::npos ? name : name.substr(0, bracket);
}

// Collects checks for one instance; merged in index order afterwards.
struct InstanceLog {
  std::size_t checks = 0;
  std::vector<ViolationRecord> violations;
  std::vector<ViolationRecord> unproven;
  std::vector<QuadratureFailure> failures;
  std::map<std::string, std::size_t> equalities;
  std::vector<std::pair<std::pair<std::string, double>, double>> ratios;
};

class Checker {
 public:
  Checker(const VerifyOptions& options, InstanceLog& log, std::string poly)
      : options_(options), log_(log), poly_(std::move(poly)) {}

  // bound <= measured within tol + err/measured (relative).
  void check(const std::string& name, double p, double bound, double measured,
             double err_estimate, bool unproven = false) {
    ++log_.checks;
    const double slack = measured > 0.0 ? (measured - bound) / measured : -bound;
    const double allowed =
        options_.tol + (measured > 0.0 ? err_estimate / measured : 0.0);
    const std::string family = family_of(name);
    if (!unproven) {
      log_.ratios.push_back({{family, p}, measured > 0.0 ? bound / measured : 0.0});
    }
    if (std::abs(slack) <= options_.tol) ++log_.equalities[family];
    if (slack < -allowed) {
      ViolationRecord v{poly_, p, name, bound, measured, slack};
      (unproven ? log_.unproven : log_.violations).push_back(std::move(v));
    }
  }

 private:
  const VerifyOptions& options_;
  InstanceLog& log_;
  std::string poly_;
};

void verify_instance(const Polynomial& f, const std::vector<double>& p_grid,
                     const VerifyOptions& options, InstanceLog& log) {
  const Polynomial core = f.core();
  Checker checker(options, log, f.to_string());
  const double sup = sup_norm(core);

  std::optional<RootDecomposition> d;
  if (core.degree() >= 1) d = find_roots(core);
  const auto pairs = admissible_pairs(core);
  const double inf = std::numeric_limits<double>::infinity();

  for (const auto& pair : pairs) {
    checker.check("pair_sup[" + std::to_string(pair.L) + "," + std::to_string(pair.M) + "]",
                  inf, std::abs(pair.aL) + std::abs(pair.aM), sup, 0.0);
  }

  ReportOptions ropts;
  ropts.quadrature = options.quadrature;
  for (double p : p_grid) {
    const BoundReport report = bound_report(core, p, ropts);
    const NormValue& lp = report.measured.lp;
    if (!lp.converged) {
      log.failures.push_back({f.to_string(), p,
                              "lp_norm did not reach rel_tol at " +
                                  std::to_string(lp.nodes_used) + " nodes"});
      continue;
    }
    for (const auto& e : report.entries) {
      if (e.applicable()) checker.check(e.name, p, *e.value, lp.value, lp.err_estimate);
    }
    checker.check("chain_sup", p, lp.value, sup, 1e-9 * sup);

    // Averaged binomials: contraction and both binomial corollaries.
    for (const auto& pair : pairs) {
      if (pair.aL == Complex{} && pair.aM == Complex{}) continue;
      const Polynomial filtered = filter(core, pair);
      const NormValue fl = lp_norm(filtered, p, options.quadrature);
      const std::string tag = "[" + std::to_string(pair.L) + "," + std::to_string(pair.M) + "]";
      checker.check("averaging_contraction" + tag, p, fl.value, lp.value,
                    lp.err_estimate + fl.err_estimate);
      checker.check("corollary_asym" + tag, p, binomial_bound_asym(pair.aL, pair.aM, p),
                    fl.value, fl.err_estimate);
      if (p <= 2.0) {
        checker.check("corollary_sym" + tag, p, binomial_bound_sym(pair.aL, pair.aM, p),
                      fl.value, fl.err_estimate);
      }
    }

    if (d && d->degree() <= options.subset_scan_max_degree && p >= 1.0) {
      const SubsetScan scan = scan_subsets(*d, p);
      for (const auto& row : scan.table) {
        const std::string tag = row.subset.to_string();
        if (row.sym) {
          checker.check("blaschke_sym_subset" + tag, p, *row.sym, lp.value, lp.err_estimate);
        }
        checker.check("blaschke_asym_subset" + tag, p, *row.asym_proven, lp.value,
                      lp.err_estimate);
        if (options.include_unproven) {
          checker.check("blaschke_asym_remark" + tag, p, *row.asym_remark, lp.value,
                        lp.err_estimate, true);
        }
      }
    }
  }
}

std::vector<InstanceLog> run_ensemble(const EnsembleSpec& spec, const VerifyOptions& options) {
  spec.validate();
  options.quadrature.validate();
  std::vector<InstanceLog> logs(spec.count);
  const unsigned threads = options.threads == 0 ? worker_count() : options.threads;
  parallel_for(
      spec.count,
      [&](std::size_t i) {
        const Polynomial f = random_polynomial(spec, i);
        try {
          verify_instance(f, spec.p_grid, options, logs[i]);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::root_finding_failed) throw;
          logs[i].failures.push_back({f.to_string(), 0.0, e.what()});
        }
      },
      threads);
  return logs;
}

}  // namespace

const char* to_string(SamplingMode mode) noexcept {
  switch (mode) {
    case SamplingMode::roots: return "roots";
    case SamplingMode::coefficient_box: return "box";
    case SamplingMode::mixed: return "mixed";
    case SamplingMode::cyclotomic: return "cyclotomic";
  }
  return "unknown";
}

SamplingMode sampling_mode_from_string(std::string_view name) {
  if (name == "roots") return SamplingMode::roots;
  if (name == "box") return SamplingMode::coefficient_box;
  if (name == "mixed") return SamplingMode::mixed;
  if (name == "cyclotomic") return SamplingMode::cyclotomic;
  throw Error(ErrorCode::invalid_argument,
              "unknown sampling mode '" + std::string(name) +
                  "' (expected roots, box, mixed or cyclotomic)");
}

void EnsembleSpec::validate() const {
  const bool ok = count > 0 && degree_min >= 1 && degree_min <= degree_max &&
                  degree_max <= 64 && root_modulus_lo > 0.0 &&
                  root_modulus_lo <= root_modulus_hi && coefficient_box > 0.0 &&
                  !p_grid.empty() &&
                  std::all_of(p_grid.begin(), p_grid.end(),
                              [](double p) { return p > 0.0 && std::isfinite(p); });
  if (!ok) throw Error(ErrorCode::invalid_argument, "invalid ensemble specification");
}

RandomInstance random_instance(const EnsembleSpec& spec, std::size_t index) {
  spec.validate();
  InstanceRng rng(spec.seed, index);
  const int degree = rng.integer(spec.degree_min, spec.degree_max);

  SamplingMode mode = spec.mode;
  if (mode == SamplingMode::mixed) {
    mode = index % 2 == 0 ? SamplingMode::roots : SamplingMode::coefficient_box;
  }

  RandomInstance out;
  out.mode = mode;
  switch (mode) {
    case SamplingMode::roots: {
      const Complex leading = rng.log_uniform(0.5, 2.0) * rng.unimodular();
      for (int i = 0; i < degree; ++i) {
        const double modulus = rng.log_uniform(spec.root_modulus_lo, spec.root_modulus_hi);
        out.sampled_roots.push_back(modulus * rng.unimodular());
      }
      out.polynomial = Polynomial::normalize(expand_roots(leading, out.sampled_roots));
      break;
    }
    case SamplingMode::coefficient_box: {
      std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
      for (auto& a : c) {
        a = {rng.uniform(-spec.coefficient_box, spec.coefficient_box),
             rng.uniform(-spec.coefficient_box, spec.coefficient_box)};
      }
      out.polynomial = Polynomial::normalize(c);
      break;
    }
    case SamplingMode::cyclotomic: {
      const Complex c = rng.log_uniform(0.5, 2.0) * rng.unimodular();
      std::vector<Complex> a(static_cast<std::size_t>(degree) + 1);
      a.front() = -c;
      a.back() = c;
      out.polynomial = Polynomial::normalize(a);
      break;
    }
    case SamplingMode::mixed:
      break;
  }
  return out;
}

Polynomial random_polynomial(const EnsembleSpec& spec, std::size_t index) {
  return random_instance(spec, index).polynomial;
}

VerifyResult verify_ensemble(const EnsembleSpec& spec, const VerifyOptions& options) {
  auto logs = run_ensemble(spec, options);
  VerifyResult result;
  result.instances = spec.count;
  for (auto& log : logs) {
    result.checks += log.checks;
    std::move(log.violations.begin(), log.violations.end(),
              std::back_inserter(result.violations));
    std::move(log.unproven.begin(), log.unproven.end(),
              std::back_inserter(result.unproven_findings));
    std::move(log.failures.begin(), log.failures.end(),
              std::back_inserter(result.quadrature_failures));
    for (const auto& [name, n] : log.equalities) result.equalities[name] += n;
  }
  return result;
}

std::vector<SharpnessRow> sharpness_stats(const EnsembleSpec& spec,
                                          const VerifyOptions& options) {
  auto logs = run_ensemble(spec, options);
  std::map<std::pair<std::string, double>, std::vector<double>> grouped;
  for (const auto& log : logs) {
    for (const auto& [key, ratio] : log.ratios) grouped[key].push_back(ratio);
  }
  std::vector<SharpnessRow> rows;
  for (auto& [key, ratios] : grouped) {
    std::sort(ratios.begin(), ratios.end());
    const std::size_t n = ratios.size();
    const double median =
        n % 2 == 1 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
    rows.push_back({key.first, key.second, n, ratios.front(), median, ratios.back()});
  }
  return rows;
}

double best_pair_sym(const Polynomial& f, double p) {
  double best = 0.0;
  for (const auto& pair : admissible_pairs(f.core())) {
    best = std::max(best, binomial_bound_sym(pair.aL, pair.aM, p));
  }
  return best;
}

Witnesses noncomparability_witnesses(double p) {
  if (!(p > 1.0 && p < 2.0)) {
    throw Error(ErrorCode::out_of_range, "range: witnesses exist only for 1 < p < 2");
  }
  std::vector<Polynomial> catalog{
      Polynomial::normalize({1.0, 1.0}),
      Polynomial::normalize({1.0, 1.0, 1.0, 1.0}),
      Polynomial::normalize({1.0, 1.0, 1.0}),
      Polynomial::normalize({1.0, 0.0, 1.0}),
      Polynomial::normalize({1.0, 1.0, 1.0, 1.0, 1.0, 1.0}),
  };
  std::optional<Polynomial> pair_wins;
  std::optional<Polynomial> hy_wins;
  auto consider = [&](const Polynomial& f) {
    const double sym = best_pair_sym(f, p);
    const double hy = hausdorff_young_bound(f.core(), p);
    if (!pair_wins && sym > hy) pair_wins = f;
    if (!hy_wins && hy > sym) hy_wins = f;
  };
  for (const auto& f : catalog) consider(f);

  EnsembleSpec spec;
  spec.mode = SamplingMode::coefficient_box;
  spec.degree_min = 1;
  spec.degree_max = 8;
  spec.seed = 7;
  for (std::size_t i = 0; i < 100000 && !(pair_wins && hy_wins); ++i) {
    consider(random_polynomial(spec, i));
  }
  if (!pair_wins || !hy_wins) {
    throw Error(ErrorCode::search_exhausted, "search exhausted: no witness pair found");
  }
  Witnesses w;
  w.pair_wins = *pair_wins;
  w.pair_wins_sym = best_pair_sym(w.pair_wins, p);
  w.pair_wins_hy = hausdorff_young_bound(w.pair_wins.core(), p);
  w.hy_wins = *hy_wins;
  w.hy_wins_sym = best_pair_sym(w.hy_wins, p);
  w.hy_wins_hy = hausdorff_young_bound(w.hy_wins.core(), p);
  return w;
}

}  // namespace polybound
