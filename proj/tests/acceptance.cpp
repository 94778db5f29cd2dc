// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rspcorr/rspcorr.hpp"

using namespace rspcorr;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string f(double v) { return format_number(v); }

std::vector<BellDiagonalState> draw(std::uint64_t seed, int n) {
  BellDiagonalSampler s(seed);
  std::vector<BellDiagonalState> out(std::size_t(n), BellDiagonalState{});
  for (auto& x : out) x = s.next();
  return out;
}

double h(double x) {
  if (x <= 0 || x >= 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_c3_closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto states = draw(101, 100);
  std::vector<double> diff(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    const double closed = 1.0 - h((1.0 + std::sqrt(states[i].norm2() / 3.0)) / 2.0);
    diff[i] = std::abs(c3(states[i].fano()).value - closed);
  });
  const double worst = *std::max_element(diff.begin(), diff.end());
  const double singlet_closed = c3_bell_closed({-1, -1, -1});
  const double singlet_num = c3(FanoState::bell_diagonal(-1, -1, -1)).value;
  std::mt19937_64 eng(102);
  double product_max = 0;
  for (int i = 0; i < 10; ++i) product_max = std::max(product_max, c3(random_product_state(eng)).value);
  const double rt = seconds_since(t0);
  report(1, "C3 closed form", worst <= 1e-3 && singlet_closed == 1.0 && std::abs(singlet_num - 1) <= 1e-9 &&
                                  product_max <= 1e-6 && rt <= 60,
         "100 states worst |diff| " + f(worst) + ", singlet " + f(singlet_closed) + " (numerical " + f(singlet_num) +
             "), product max " + f(product_max) + ", " + f(rt) + " s");
}

void criterion_appendix_integral() {
  double worst = 0;
  for (const auto& s : draw(201, 20)) {
    const auto r = appendix_integral_check(s);
    worst = std::max(worst, std::abs(r.observed[0] - r.expected[0]));
  }
  report(2, "Hemisphere integral = ||E||^2/3", worst <= 1e-9, "20 states worst |diff| " + f(worst));
}

void criterion_g() {
  double worst_g = 0;
  for (const auto& s : draw(301, 20)) {
    const double expected = 2.0 / 3.0 * (s.e1 * s.e1 + s.e2 * s.e2 + s.e3 * s.e3);
    worst_g = std::max(worst_g, std::abs(g_quadrature(s) - expected));
  }
  std::mt19937_64 eng(302);
  double worst_half = 0;
  for (const auto& s : draw(303, 50)) {
    const GreatCircle c(random_unit(eng));
    worst_half = std::max(worst_half, std::abs(pq_av_quadrature(s, c) - pq_av_formula(s, c) / 2));
  }
  report(3, "G = (2/3) sum e^2; circle average = formula/2", worst_g <= 1e-6 && worst_half <= 1e-9,
         "G worst |diff| " + f(worst_g) + "; half-factor worst |diff| " + f(worst_half) + " on 50 pairs");
}

void criterion_worst_circle() {
  const auto states = draw(401, 100);
  std::vector<double> diff(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    const auto m = states[i].sorted_magnitudes();
    const double d = discord_bell_formula(states[i]);
    const double v = min_over_beta(states[i]).value;
    diff[i] = std::max(std::abs(v - (m[1] * m[1] + m[2] * m[2])), std::abs(v - 2 * d * d));
  });
  const double worst = *std::max_element(diff.begin(), diff.end());
  report(4, "min over beta = E2^2+E3^2 = 2 D^2", worst <= 1e-8, "100 states worst |diff| " + f(worst));
}

void criterion_counterexample() {
  std::vector<double> ps;
  for (int k = 1; k <= 6; ++k) ps.push_back(0.05 * k);
  const auto checks = counterexample_scan(ps);
  int failed = 0;
  std::string first;
  for (const auto& r : checks)
    if (!r.informational && !r.passed) {
      ++failed;
      if (first.empty()) first = " first: " + r.name;
    }
  const double gc = g_closed(rho_c(0.2)), gg = g_closed(rho_g(0.2));
  const double dc = discord_entropic(rho_c(0.2).fano()).value, dg = discord_entropic(rho_g(0.2).fano()).value;
  const bool spots = std::abs(gc - 0.72) <= 1e-12 && std::abs(gg - 0.88 / 3) <= 1e-12 &&
                     std::abs(dc - 0.0290494055453) <= 1e-6 && std::abs(dg - 0.2) <= 1e-6;
  report(5, "rho_c vs rho_g scan", failed == 0 && spots,
         std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed" + first + "; p=0.2 G " + f(gc) +
             " vs " + f(gg) + ", entropic discord " + f(dc) + " vs " + f(dg));
}

void criterion_zero_discord() {
  const BellDiagonalState s{0.8, 0, 0};
  const double d = discord_bell_formula(s);
  const double c3_expected = 1.0 - h((1.0 + 0.8 / std::sqrt(3.0)) / 2.0);
  const double c3_num = c3(s.fano()).value;
  const double pq = pq_max(s.fano(), TargetState::from_bloch(unit_x()), GreatCircle(unit_z())).pq;
  const double dead = pq_av_formula(s, GreatCircle(unit_x()));
  report(6, "Zero-discord state (0.8,0,0)",
         d == 0 && std::abs(c3_num - c3_expected) <= 1e-6 && std::abs(c3_bell_closed(s) - c3_expected) <= 1e-6 &&
             std::abs(pq - 0.64) <= 1e-6 && std::abs(dead) <= 1e-6,
         "D " + f(d) + ", C3 " + f(c3_num) + " (analytic " + f(c3_expected) + "), pq_max " + f(pq) +
             ", pq_av at beta=x " + f(dead));
}

void criterion_c3_g_link() {
  auto states = draw(701, 500);
  double worst = 0;
  for (const auto& s : states) worst = std::max(worst, std::abs(c3_from_g(g_closed(s)) - c3_bell_closed(s)));
  std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) { return g_closed(a) < g_closed(b); });
  int drops = 0;
  for (std::size_t i = 1; i < states.size(); ++i)
    if (c3_bell_closed(states[i]) < c3_bell_closed(states[i - 1])) ++drops;
  report(7, "C3 monotone in G", worst <= 1e-12 && drops == 0,
         "500 states worst |diff| " + f(worst) + ", decreasing steps " + std::to_string(drops));
}

void criterion_monte_carlo() {
  const int runs = 100;
  const std::uint64_t n = 100000;
  std::vector<int> inside(runs);
  parallel_for(runs, [&](std::size_t i) {
    std::mt19937_64 eng(800 + i);
    const auto s = random_bell_diagonal(900 + i).fano();
    const GreatCircle c(random_unit(eng));
    const Vec3 alpha = random_unit(eng);
    const auto t = TargetState::from_bloch(any_orthogonal(c.beta));
    const auto mc = mc_simulate(s, alpha, c, t, n, 1000 + i);
    const Vec3 exact = prepared_bloch(s, alpha, c).p;
    bool ok = true;
    for (int k = 0; k < 3; ++k) ok = ok && std::abs(mc.mean(k) - exact(k)) <= 4 * mc.std_error(k) + 1e-15;
    inside[i] = ok;
  });
  const int hits = std::count(inside.begin(), inside.end(), 1);
  report(8, "Monte Carlo within 4 standard errors", hits >= 99,
         std::to_string(hits) + "/" + std::to_string(runs) + " runs of 1e5 events");
}

void criterion_hierarchy() {
  const auto states = draw(1001, 100);
  std::vector<double> slack(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    const auto s = states[i].fano();
    const double v1 = c1(s).value, v2 = c2(s).value, v3 = c3(s).value;
    slack[i] = std::min(v1 - v2, v2 - v3);
  });
  const double worst = *std::min_element(slack.begin(), slack.end());
  std::mt19937_64 eng(1002);
  double lo = 1, hi = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = holevo_chi(random_fano_state(eng), random_unit(eng));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  report(9, "C1 >= C2 >= C3, chi in [0,1]", worst >= -2e-6 && lo >= 0 && hi <= 1,
         "100 states min slack " + f(worst) + "; chi range [" + f(lo) + ", " + f(hi) + "] on 1e4 samples");
}

void criterion_ledger() {
  const auto suite = full_suite(1, SuiteLevel::smoke);
  auto find = [&](const std::string& key) {
    return std::find_if(suite.checks.begin(), suite.checks.end(),
                        [&](const auto& r) { return r.name.find(key) != std::string::npos; });
  };
  const auto neg = find("printed_rho_g_fidelity_negative");
  const auto ties = find("discord_formula_ties");
  const bool ok = neg != suite.checks.end() && ties != suite.checks.end() && neg->informational && ties->informational;
  std::string detail = ok ? neg->name + " (" + neg->detail + "); " + ties->name + " (" + ties->detail + ")"
                          : std::string("ledger checks missing");
  report(10, "Discrepancy ledger recorded", ok, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_c3_closed_form();
  criterion_appendix_integral();
  criterion_g();
  criterion_worst_circle();
  criterion_counterexample();
  criterion_zero_discord();
  criterion_c3_g_link();
  criterion_monte_carlo();
  criterion_hierarchy();
  criterion_ledger();
  std::printf("%d of 10 criteria failed, %.1f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
