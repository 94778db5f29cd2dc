#pragma once

// Brute-force and quadrature oracles for every closed form and ordering
// claim in the library. Oracles here never call the code path they check:
// quadratures use their own integration rules and closed forms are compared
// against optimizer output.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rspcorr/format.hpp"
#include "rspcorr/parallel.hpp"
#include "rspcorr/rsp.hpp"

namespace rspcorr {

/// One verification record. passed <=> |observed - expected| <= tolerance for
/// every component. Ordering claims are recorded as a violation count with
/// expected 0. Informational checks document a known discrepancy and never
/// affect the suite exit status.
struct CheckReport {
  std::string name;
  bool passed = false;
  bool informational = false;
  std::vector<double> observed;
  std::vector<double> expected;
  double tolerance = 0;
  double runtime_s = 0;
  std::string detail;
};

inline CheckReport make_report(std::string name, std::vector<double> observed, std::vector<double> expected,
                               double tolerance, std::string detail = {}) {
  CheckReport r{std::move(name), true, false, std::move(observed), std::move(expected), tolerance, 0.0, std::move(detail)};
  if (r.observed.size() != r.expected.size()) r.passed = false;
  for (std::size_t i = 0; r.passed && i < r.observed.size(); ++i)
    r.passed = std::abs(r.observed[i] - r.expected[i]) <= tolerance;
  return r;
}

namespace oracle {

// Independent entropy evaluation so oracle values do not route through
// binary_entropy.
inline double h2(double x) {
  double v = 0.0;
  for (double p : {x, 1.0 - x})
    if (p > 0.0) v -= p * std::log(p) / std::numbers::ln2;
  return v;
}

/// Hemisphere average of beta^T diag(e^2) beta using x = cos(theta) with a
/// composite Simpson rule and a periodic trapezoid rule in phi over [0, pi).
inline double hemisphere_quadratic_average(const Vec3& sq, int n_x, int n_phi) {
  if (n_x % 2) ++n_x;
  const double hx = 2.0 / n_x;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= n_x; ++i) {
    const double x = -1.0 + i * hx;
    const double wx = (i == 0 || i == n_x) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double s2 = 1.0 - x * x;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = std::numbers::pi * j / n_phi;
      const double sp = std::sin(phi), cp = std::cos(phi);
      num += wx * (sq.x() * s2 * sp * sp + sq.y() * s2 * cp * cp + sq.z() * x * x);
      den += wx;
    }
  }
  return num / den;
}

inline double c3_closed_direct(const BellDiagonalState& s) {
  return 1.0 - h2(0.5 * (1.0 + std::sqrt(s.norm2() / 3.0)));
}

inline std::string fmt(double v) { return format_number(v); }

}  // namespace oracle

struct QuadratureGrid {
  int n_x = 64;
  int n_phi = 64;
};

/// Hemisphere average of beta^T E^T E beta against ||E||^2 / 3.
inline CheckReport appendix_integral_check(const BellDiagonalState& s, QuadratureGrid grid = {}) {
  const double observed = oracle::hemisphere_quadratic_average(s.squares(), grid.n_x, grid.n_phi);
  return make_report("oracle.appendix_integral", {observed}, {s.norm2() / 3.0}, 1e-9);
}

/// Frame optimizer against the Bell-diagonal C3 closed form on given states.
inline CheckReport c3_consistency_check(std::span<const BellDiagonalState> states, const OptimizerOptions& opt = {}) {
  std::vector<double> obs(states.size()), exp(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    obs[i] = c3(states[i].fano(), opt).value;
    exp[i] = oracle::c3_closed_direct(states[i]);
  });
  std::size_t worst = 0;
  for (std::size_t i = 0; i < obs.size(); ++i)
    if (std::abs(obs[i] - exp[i]) > std::abs(obs[worst] - exp[worst])) worst = i;
  std::string detail;
  if (!states.empty()) {
    const auto& w = states[worst];
    detail = "worst state (" + oracle::fmt(w.e1) + "," + oracle::fmt(w.e2) + "," + oracle::fmt(w.e3) +
             ") |diff| = " + oracle::fmt(std::abs(obs[worst] - exp[worst]));
  }
  double worst_diff = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) worst_diff = std::max(worst_diff, std::abs(obs[i] - exp[i]));
  return make_report("measures.c3_vs_closed_form", {worst_diff}, {0.0}, 1e-3, std::move(detail));
}

inline CheckReport c3_consistency_check(std::size_t n_states, std::uint64_t seed, const OptimizerOptions& opt = {}) {
  BellDiagonalSampler sampler(seed);
  std::vector<BellDiagonalState> states(n_states);
  for (auto& s : states) s = sampler.next();
  return c3_consistency_check(states, opt);
}

/// 100 on-circle targets: 10 circle normals from a Fibonacci spiral, 10
/// equally spaced targets on each circle.
inline std::vector<std::pair<GreatCircle, TargetState>> target_grid(int circles = 10, int per_circle = 10) {
  std::vector<std::pair<GreatCircle, TargetState>> out;
  for (const Vec3& beta : fibonacci_sphere(circles)) {
    const Vec3 u = any_orthogonal(beta), v = beta.cross(u);
    for (int k = 0; k < per_circle; ++k) {
      const double psi = std::numbers::pi * (k + 0.5) / per_circle;
      out.emplace_back(GreatCircle(beta), TargetState::from_bloch((std::cos(psi) * u + std::sin(psi) * v).normalized()));
    }
  }
  return out;
}

/// Per-p comparison of rho_c(p) against rho_g(p).
inline std::vector<CheckReport> counterexample_scan(std::span<const double> p_grid, const OptimizerOptions& opt = {}) {
  std::vector<CheckReport> out;
  const auto targets = target_grid();
  for (double p : p_grid) {
    const auto c = rho_c(p), g = rho_g(p);
    const std::string tag = "scan.p=" + oracle::fmt(p) + ".";

    const double gc = g_closed(c), gg = g_closed(g);
    out.push_back(make_report(tag + "g_c_gt_g_g", {gc > gg ? 0.0 : 1.0}, {0.0}, 0.0,
                              "G_c=" + oracle::fmt(gc) + " G_g=" + oracle::fmt(gg)));

    const double cc = c3_bell_closed(c), cg = c3_bell_closed(g);
    out.push_back(make_report(tag + "c3_c_gt_c3_g", {cc > cg ? 0.0 : 1.0}, {0.0}, 0.0,
                              "C3_c=" + oracle::fmt(cc) + " C3_g=" + oracle::fmt(cg)));

    if (p <= 1.0 / 3.0 + 1e-12) {
      const double dc = discord_entropic(c.fano(), opt).value, dg = discord_entropic(g.fano(), opt).value;
      out.push_back(make_report(tag + "dent_c_lt_dent_g", {dc < dg ? 0.0 : 1.0}, {0.0}, 0.0,
                                "D_c=" + oracle::fmt(dc) + " D_g=" + oracle::fmt(dg)));
      out.push_back(make_report(tag + "discord_formula_equals_p",
                                {discord_bell_formula(c), discord_bell_formula(g)}, {p, p}, 1e-12));
    }

    double violations = 0, worst = 0;
    for (const auto& [circle, t] : targets) {
      const double margin = pq_max(c.fano(), t, circle, opt).pq - pq_max(g.fano(), t, circle, opt).pq;
      worst = std::min(worst, margin);
      if (margin < -1e-9) ++violations;
    }
    out.push_back(make_report(tag + "pq_max_c_ge_g", {violations}, {0.0}, 0.0,
                              "100 targets, most negative margin " + oracle::fmt(worst)));

    // Recorded, not asserted: min partial-transpose eigenvalues and verdicts.
    const auto ppt_c = ppt_entanglement_check(c.fano()), ppt_g = ppt_entanglement_check(g.fano());
    auto rec = make_report(tag + "ppt_classification", {ppt_c.min_eigenvalue, ppt_g.min_eigenvalue},
                           {ppt_c.min_eigenvalue, ppt_g.min_eigenvalue}, 0.0,
                           std::string("rho_c ") + to_string(ppt_c.verdict) + ", rho_g " + to_string(ppt_g.verdict));
    rec.informational = true;
    out.push_back(std::move(rec));
  }
  return out;
}

/// Zero-discord state (e1,0,0): no discord, positive C3, payoff e1^2 on the
/// circle around z for t = x, and a dead circle at beta = x.
inline CheckReport zero_discord_usefulness_check(double e1, const OptimizerOptions& opt = {}) {
  if (!(std::abs(e1) > 0.0 && std::abs(e1) <= 1.0)) throw domain_error("zero_discord_usefulness_check: need 0 < |e1| <= 1");
  const BellDiagonalState s{e1, 0, 0};
  const double pq = pq_max(s.fano(), TargetState::from_bloch(unit_x()), GreatCircle(unit_z()), opt).pq;
  return make_report("oracle.zero_discord_usefulness",
                     {discord_bell_formula(s), c3_bell_closed(s), pq, pq_av_formula(s, GreatCircle(unit_x()))},
                     {0.0, oracle::c3_closed_direct(s), e1 * e1, 0.0}, 1e-6);
}

// ---------------------------------------------------------------------------

enum class SuiteLevel { smoke, full };

inline SuiteLevel parse_level(const std::string& s) {
  if (s == "smoke") return SuiteLevel::smoke;
  if (s == "full") return SuiteLevel::full;
  throw std::invalid_argument("unknown level '" + s + "' (expected smoke or full)");
}

struct SuiteResult {
  std::vector<CheckReport> checks;  // sorted by name
  bool ok = true;                   // all non-informational checks passed
};

namespace detail {

struct SuiteSizes {
  std::size_t states, holevo_pairs, random_triples, g_pairs, monotone, mc_runs, mc_events, ordering_pairs;
};

inline SuiteSizes sizes_for(SuiteLevel level) {
  if (level == SuiteLevel::full) return {100, 100, 10000, 50, 500, 100, 100000, 10};
  return {20, 100, 2000, 20, 500, 20, 20000, 2};
}

inline std::vector<BellDiagonalState> draw(std::uint64_t seed, std::size_t n) {
  BellDiagonalSampler s(seed);
  std::vector<BellDiagonalState> out(n);
  for (auto& x : out) x = s.next();
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace detail

/// Every invariant of every module, sized by level. Deterministic in seed.
inline SuiteResult full_suite(std::uint64_t seed, SuiteLevel level, const OptimizerOptions& opt = {}) {
  using detail::draw;
  using detail::max_abs_diff;
  const auto n = detail::sizes_for(level);
  std::vector<std::function<std::vector<CheckReport>()>> jobs;
  auto one = [&](auto fn) { jobs.emplace_back([fn] { return std::vector<CheckReport>{fn()}; }); };

  // state-core -------------------------------------------------------------
  one([=] {
    std::mt19937_64 eng(seed + 1);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const FanoState s = random_fano_state(eng);
      const FanoState r = density_to_fano(fano_to_density(s));
      worst = std::max({worst, (r.a - s.a).cwiseAbs().maxCoeff(), (r.b - s.b).cwiseAbs().maxCoeff(),
                        (r.E - s.E).cwiseAbs().maxCoeff()});
    }
    return make_report("state.round_trip", {worst}, {0.0}, 1e-12);
  });
  one([=] {
    std::mt19937_64 eng(seed + 2);
    double disagree = 0;
    for (std::size_t i = 0; i < n.random_triples; ++i) {
      const BellDiagonalState s{uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
      if (tetrahedron_check(s) != is_physical(s.fano()).physical) ++disagree;
    }
    return make_report("state.tetrahedron_vs_spectrum", {disagree}, {0.0}, 0.0);
  });
  one([=] {
    std::mt19937_64 eng(seed + 3);
    double worst_p = 0, worst_b = 0;
    for (int i = 0; i < 100; ++i) {
      const FanoState s = random_fano_state(eng);
      const Vec3 u = random_unit(eng);
      const auto plus = conditional_bob_state(s, u, 1), minus = conditional_bob_state(s, u, -1);
      worst_p = std::max(worst_p, std::abs(plus.probability + minus.probability - 1.0));
      const Vec3 avg = plus.probability * plus.bob_state.bloch + minus.probability * minus.bob_state.bloch;
      worst_b = std::max(worst_b, (avg - s.b).cwiseAbs().maxCoeff());
    }
    return make_report("state.conditional_consistency", {worst_p, worst_b}, {0.0, 0.0}, 1e-12);
  });
  one([=] {
    BellDiagonalSampler sampler(seed + 4);
    double disagree = 0;
    for (std::size_t i = 0; i < n.random_triples; ++i) {
      const auto s = sampler.next();
      const auto w = bell_weights(s);
      const bool entangled_by_weight = *std::max_element(w.begin(), w.end()) > 0.5 + 1e-9;
      const bool entangled_by_ppt = ppt_entanglement_check(s.fano()).verdict == Separability::entangled;
      if (entangled_by_weight != entangled_by_ppt) ++disagree;
    }
    return make_report("state.ppt_vs_bell_weight", {disagree}, {0.0}, 0.0);
  });
  one([=] {
    BellDiagonalSampler sampler(seed + 5);
    for (std::size_t i = 0; i < n.random_triples; ++i) sampler.next();
    return make_report("state.sampler_acceptance_rate", {sampler.acceptance_rate()}, {1.0 / 3.0}, 0.02);
  });

  // info-theory ------------------------------------------------------------
  one([=] {
    std::mt19937_64 eng(seed + 6);
    const auto states = draw(seed + 6, n.holevo_pairs);
    std::vector<double> obs, exp;
    for (const auto& s : states) {
      const Vec3 u = random_unit(eng);
      obs.push_back(holevo_chi(s.fano(), u));
      exp.push_back(1.0 - oracle::h2(0.5 * (1.0 + s.diag().cwiseProduct(u).norm())));
    }
    return make_report("info.holevo_bell_closed_form", {max_abs_diff(obs, exp)}, {0.0}, 1e-10);
  });
  one([=] {
    std::mt19937_64 eng(seed + 7);
    double outside = 0, asym = 0;
    for (int i = 0; i < 1000; ++i) {
      const FanoState s = random_fano_state(eng);
      const Vec3 u = random_unit(eng);
      const double x = holevo_chi(s, u);
      if (x < 0.0 || x > 1.0) ++outside;
      asym = std::max(asym, std::abs(x - holevo_chi(s, -u)));
    }
    return make_report("info.holevo_range_and_sign_symmetry", {outside, asym}, {0.0, 0.0}, 1e-12);
  });

  // correlation-measures ---------------------------------------------------
  one([=] {
    const auto states = draw(seed + 8, n.states);
    std::vector<double> viol(states.size(), 0.0);
    parallel_for(states.size(), [&](std::size_t i) {
      const FanoState f = states[i].fano();
      const double v1 = c1(f, opt).value, v2 = c2(f, opt).value, v3 = c3(f, opt).value;
      viol[i] = (v3 <= v2 + 1e-6 && v2 <= v1 + 1e-6 && v3 <= v1 + 2e-6) ? 0.0 : 1.0;
    }, 1);
    return make_report("measures.hierarchy_c1_ge_c2_ge_c3", {std::accumulate(viol.begin(), viol.end(), 0.0)}, {0.0}, 0.0);
  });
  one([=] {
    const auto states = draw(seed + 9, n.states);
    return c3_consistency_check(states, opt);
  });
  one([=] {
    std::mt19937_64 eng(seed + 10);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const FanoState s = random_product_state(eng);
      // Run the frame search itself; c3() short-circuits product states.
      const auto r = maximize_over_frames(
          [&](const Mat3& f) { return std::min({holevo_chi(s, f.col(0)), holevo_chi(s, f.col(1)), holevo_chi(s, f.col(2))}); },
          opt);
      worst = std::max({worst, r.value, c3(s, opt).value});
    }
    return make_report("measures.c3_product_states_zero", {worst}, {0.0}, 1e-6);
  });
  one([=] {
    const auto states = draw(seed + 11, n.states);
    std::vector<double> obs(states.size()), exp(states.size());
    parallel_for(states.size(), [&](std::size_t i) {
      obs[i] = c1(states[i].fano(), opt).value;
      exp[i] = 1.0 - oracle::h2(0.5 * (1.0 + states[i].sorted_magnitudes()[0]));
    }, 1);
    return make_report("measures.c1_bell_closed_form", {max_abs_diff(obs, exp)}, {0.0}, 1e-6);
  });
  one([=] {
    double formula = 0, entropic = 0;
    for (double e : {-1.0, -0.6, -0.2, 0.1, 0.5, 0.9}) {
      const BellDiagonalState s{e, 0, 0};
      formula = std::max(formula, discord_bell_formula(s));
      entropic = std::max(entropic, discord_entropic(s.fano(), opt).value);
    }
    return make_report("measures.discord_zero_on_axis_family", {formula, entropic}, {0.0, 0.0}, 1e-6);
  });
  one([=] {
    const auto states = draw(seed + 12, n.states);
    std::vector<double> obs(states.size()), exp(states.size());
    parallel_for(states.size(), [&](std::size_t i) {
      const auto d = discord_entropic(states[i].fano(), opt);
      obs[i] = d.value;
      exp[i] = *d.closed_form;
    }, 1);
    return make_report("measures.discord_entropic_numeric_vs_closed", {max_abs_diff(obs, exp)}, {0.0}, 1e-6);
  });
  one([=] {
    const auto states = draw(seed + 13, n.states);
    double worst = 0;
    for (const auto& s : states) {
      for (const BellDiagonalState& f : {BellDiagonalState{-s.e1, -s.e2, s.e3}, BellDiagonalState{s.e1, -s.e2, -s.e3},
                                         BellDiagonalState{-s.e1, s.e2, -s.e3}}) {
        worst = std::max({worst, std::abs(c3_bell_closed(f) - c3_bell_closed(s)),
                          std::abs(discord_bell_formula(f) - discord_bell_formula(s)),
                          std::abs(discord_entropic_bell(f) - discord_entropic_bell(s)), std::abs(g_closed(f) - g_closed(s))});
      }
    }
    return make_report("measures.pairwise_sign_flip_invariance", {worst}, {0.0}, 1e-12);
  });

  // rsp-engine -------------------------------------------------------------
  one([=] {
    std::mt19937_64 eng(seed + 14);
    const auto states = draw(seed + 14, n.g_pairs);
    double worst = 0;
    for (const auto& s : states) {
      const GreatCircle c(random_unit(eng));
      worst = std::max(worst, std::abs(pq_av_quadrature(s, c) - pq_av_formula(s, c) / 2.0));
    }
    return make_report("rsp.circle_average_is_half_formula", {worst}, {0.0}, 1e-9);
  });
  one([=] {
    const auto states = draw(seed + 15, n.states);
    double worst_d = 0, worst_e = 0;
    for (const auto& s : states) {
      const double m = min_over_beta(s, opt).value;
      const auto mag = s.sorted_magnitudes();
      worst_e = std::max(worst_e, std::abs(m - (mag[1] * mag[1] + mag[2] * mag[2])));
      worst_d = std::max(worst_d, std::abs(m - 2.0 * std::pow(discord_bell_formula(s), 2)));
    }
    return make_report("rsp.min_over_beta_is_two_discord_squared", {worst_e, worst_d}, {0.0, 0.0}, 1e-8);
  });
  one([=] {
    const auto states = draw(seed + 16, n.g_pairs);
    double worst = 0;
    for (const auto& s : states) worst = std::max(worst, std::abs(g_quadrature(s) - 2.0 / 3.0 * s.norm2()));
    return make_report("rsp.g_quadrature_vs_closed", {worst}, {0.0}, 1e-6);
  });
  one([=] {
    std::mt19937_64 eng(seed + 17);
    const auto targets = target_grid();
    double pq_viol = 0, g_viol = 0;
    for (std::size_t k = 0; k < n.ordering_pairs; ++k) {
      BellDiagonalState big, small;
      do {
        big = {uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
        small = {big.e1 * uniform(eng, -1, 1), big.e2 * uniform(eng, -1, 1), big.e3 * uniform(eng, -1, 1)};
      } while (!tetrahedron_check(big) || !tetrahedron_check(small));
      for (const auto& [circle, t] : targets)
        if (pq_max(big.fano(), t, circle, opt).pq < pq_max(small.fano(), t, circle, opt).pq - 1e-9) ++pq_viol;
      if (g_closed(big) < g_closed(small)) ++g_viol;
    }
    return make_report("rsp.ordering_by_squared_correlations", {pq_viol, g_viol}, {0.0, 0.0}, 0.0);
  });
  one([=] {
    const auto states = draw(seed + 18, n.monotone);
    double worst = 0;
    for (const auto& s : states) worst = std::max(worst, std::abs(c3_from_g(g_closed(s)) - c3_bell_closed(s)));
    return make_report("rsp.c3_from_g_matches_closed", {worst}, {0.0}, 1e-12);
  });
  one([=] {
    auto states = draw(seed + 19, n.monotone);
    std::sort(states.begin(), states.end(), [](const auto& l, const auto& r) { return g_closed(l) < g_closed(r); });
    double drops = 0;
    for (std::size_t i = 1; i < states.size(); ++i)
      if (c3_bell_closed(states[i]) < c3_bell_closed(states[i - 1]) - 1e-14) ++drops;
    return make_report("rsp.c3_nondecreasing_in_g", {drops}, {0.0}, 0.0);
  });
  one([=] {
    std::vector<double> inside(n.mc_runs, 0.0);
    parallel_for(n.mc_runs, [&](std::size_t k) {
      std::mt19937_64 eng(seed + 20 + 7919 * k);
      const auto s = BellDiagonalSampler(seed + 20 + k).next();
      FanoState f = s.fano();
      const Vec3 alpha = random_unit(eng);
      const GreatCircle circle(random_unit(eng));
      const auto mc = mc_simulate(f, alpha, circle, TargetState::from_bloch(any_orthogonal(circle.beta)), n.mc_events, seed + k);
      const Vec3 exact = prepared_bloch(f, alpha, circle).p;
      bool ok = true;
      for (int c = 0; c < 3; ++c) ok = ok && std::abs(mc.mean(c) - exact(c)) <= 4.0 * mc.std_error(c) + 1e-12;
      inside[k] = ok ? 1.0 : 0.0;
    }, 1);
    const double frac = std::accumulate(inside.begin(), inside.end(), 0.0) / double(n.mc_runs);
    auto r = make_report("rsp.mc_within_4_sigma_fraction", {frac}, {1.0}, 0.01);
    return r;
  });
  one([=] {
    std::mt19937_64 eng(seed + 21);
    const auto states = draw(seed + 21, 20);
    double worst = 0;
    for (const auto& s : states) {
      const GreatCircle c(random_unit(eng));
      const Vec3 u = any_orthogonal(c.beta);
      const Vec3 t = Eigen::AngleAxisd(uniform(eng, 0, 2 * std::numbers::pi), c.beta) * u;
      worst = std::max(worst, std::abs(pq_max(s.fano(), TargetState::from_bloch(t.normalized()), c, opt).pq - pq_max_bell(s, t)));
    }
    return make_report("rsp.pq_max_vs_analytic_optimum", {worst}, {0.0}, 1e-6);
  });

  // oracle-verify ----------------------------------------------------------
  one([=] {
    const auto states = draw(seed + 22, 20);
    double worst = 0;
    for (const auto& s : states) {
      const auto r = appendix_integral_check(s);
      worst = std::max(worst, std::abs(r.observed[0] - r.expected[0]));
    }
    return make_report("oracle.appendix_integral", {worst}, {0.0}, 1e-9);
  });
  jobs.emplace_back([=] {
    const std::vector<double> ps{0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    auto reps = counterexample_scan(ps, opt);
    const double gc = g_closed(rho_c(0.2)), gg = g_closed(rho_g(0.2));
    reps.push_back(make_report("scan.p=0.2.g_spot_values", {gc, gg}, {0.72, 0.88 / 3.0}, 1e-12));
    reps.push_back(make_report("scan.p=0.2.dent_spot_values",
                               {discord_entropic(rho_c(0.2).fano(), opt).value, discord_entropic(rho_g(0.2).fano(), opt).value},
                               {1.0 - oracle::h2(0.6), 0.2}, 1e-6));
    return reps;
  });
  one([=] { return zero_discord_usefulness_check(0.8, opt); });

  // Known discrepancies, recorded but never failing the suite.
  jobs.emplace_back([=] {
    std::vector<CheckReport> reps;
    auto info = [&](CheckReport r) {
      r.informational = true;
      reps.push_back(std::move(r));
    };
    info(make_report("ledger.printed_rho_g_fidelity_negative", {printed_fidelity_rho_g(0.2, std::numbers::pi / 2)},
                     {0.5 * (0.6 - 0.8 - 1.0)}, 1e-12, "printed per-target optimum for rho_g(0.2) at theta=pi/2 is below 0"));
    double worst = 0;
    for (double p = 0.0; p <= 1.0 / 3.0 + 1e-12; p += 1.0 / 30.0)
      worst = std::max(worst, std::abs(discord_bell_formula(rho_c(p)) - discord_bell_formula(rho_g(p))));
    info(make_report("ledger.discord_formula_ties_rho_c_rho_g", {worst}, {0.0}, 1e-12,
                     "formula discord of rho_c(p) equals rho_g(p) = p on p <= 1/3; no strict ordering"));
    info(make_report("ledger.rho_c_is_entangled",
                     {ppt_entanglement_check(rho_c(0.2).fano()).verdict == Separability::entangled ? 1.0 : 0.0}, {1.0}, 0.0,
                     "rho_c(p) fails the PPT test for every p > 0"));
    const auto s = rho_c(0.2);
    info(make_report("ledger.worst_circle_is_two_discord_squared",
                     {min_over_beta(s, opt).value, 2.0 * std::pow(discord_bell_formula(s), 2), discord_bell_formula(s)},
                     {0.08, 0.08, 0.2}, 1e-8, "min over beta equals 2 D^2, not D"));
    return reps;
  });

  std::vector<std::vector<CheckReport>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    results[i] = jobs[i]();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : results[i]) r.runtime_s = dt / double(results[i].size());
  });

  SuiteResult out;
  for (auto& group : results)
    for (auto& r : group) out.checks.push_back(std::move(r));
  std::stable_sort(out.checks.begin(), out.checks.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
  for (const auto& r : out.checks)
    if (!r.informational && !r.passed) out.ok = false;
  return out;
}

}  // namespace rspcorr
