#pragma once

// Subcommand bodies of the rspcorr command-line tool. Each writes its result
// to `out`, diagnostics to `err`, and returns the process exit code.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rspcorr/format.hpp"
#include "rspcorr/report.hpp"
#include "rspcorr/rspcorr.hpp"

namespace rspcorr::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2, kUnphysical = 3 };

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  OptimizerOptions optimizer;
  std::uint64_t seed = 0;
  std::string format = "json";
};

using json = nlohmann::ordered_json;

// Targets typed with six decimals (theta=0.785398) miss the circle by ~3e-7;
// inputs this close are projected onto the circle, anything further is rejected.
inline constexpr double kCliCircleTol = 1e-6;

inline const std::vector<std::string>& all_measures() {
  static const std::vector<std::string> names{"c1", "c2", "c3", "c3_closed", "discord_eq3", "discord_entropic", "g"};
  return names;
}

inline json num(double v) { return round_significant(v); }

inline json vec(const Vec3& v) { return json::array({num(v.x()), num(v.y()), num(v.z())}); }

/// State from a spec string, or from a file holding either a spec string or
/// a JSON object {"a":[3], "b":[3], "E":[[3],[3],[3]]} / {"bell":[3]}.
inline FanoState load_state(const std::string& spec) {
  if (spec.starts_with("bell:") || spec.starts_with("fano:")) return parse_state_spec(spec);
  std::ifstream in(spec);
  if (!in) throw usage_error("state '" + spec + "' is neither a bell:/fano: spec nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      if (j.contains("bell")) {
        const auto e = j.at("bell").get<std::vector<double>>();
        if (e.size() != 3) throw usage_error("state file: \"bell\" needs 3 numbers");
        return FanoState::bell_diagonal(e[0], e[1], e[2]);
      }
      FanoState s;
      const auto a = j.value("a", std::vector<double>{0, 0, 0});
      const auto b = j.value("b", std::vector<double>{0, 0, 0});
      const auto e = j.at("E").get<std::vector<std::vector<double>>>();
      if (a.size() != 3 || b.size() != 3 || e.size() != 3) throw usage_error("state file: a, b need 3 numbers, E 3 rows");
      s.a = {a[0], a[1], a[2]};
      s.b = {b[0], b[1], b[2]};
      for (int i = 0; i < 3; ++i) {
        if (e[std::size_t(i)].size() != 3) throw usage_error("state file: each E row needs 3 numbers");
        for (int k = 0; k < 3; ++k) s.E(i, k) = e[std::size_t(i)][std::size_t(k)];
      }
      return s;
    } catch (const nlohmann::json::exception& ex) {
      throw usage_error(std::string("state file: ") + ex.what());
    }
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    return parse_state_spec(t);
  }
  throw usage_error("state file '" + spec + "' is empty");
}

// Parses and checks physicality; returns kOk or kUnphysical.
inline int load_physical_state(const std::string& spec, FanoState& s, std::ostream& err) {
  s = load_state(spec);
  const auto rep = is_physical(s);
  if (!rep.physical) {
    err << "unphysical: min eigenvalue " << format_number(rep.min_eigenvalue) << "\n";
    return kUnphysical;
  }
  return kOk;
}

inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  for (auto part : detail::split(s, ',')) {
    const auto t = detail::trim(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

/// Axis name ("x", "-y"), "x,y,z" (normalized) or "theta=..,phi=.." (polar
/// angle from z, azimuth measured from y as in
/// beta = (sin t sin p, sin t cos p, cos t)).
inline Vec3 parse_direction(const std::string& s) {
  const auto name = detail::trim(s);
  const bool neg = name.starts_with('-');
  const auto axis = neg ? name.substr(1) : name;
  if (axis == "x" || axis == "y" || axis == "z") {
    const Vec3 d = axis == "x" ? unit_x() : axis == "y" ? unit_y() : unit_z();
    return neg ? Vec3(-d) : d;
  }
  if (s.find('=') != std::string::npos) {
    double theta = 0, phi = 0;
    for (auto part : detail::split(s, ',')) {
      const auto kv = detail::split(part, '=');
      if (kv.size() != 2) throw usage_error("expected theta=..,phi=.. in '" + s + "'");
      const auto key = detail::trim(kv[0]);
      if (key == "theta") theta = detail::parse_real(kv[1]);
      else if (key == "phi") phi = detail::parse_real(kv[1]);
      else throw usage_error("unknown angle '" + std::string(key) + "'");
    }
    return bloch_from_angles(theta, phi);
  }
  const auto v = detail::parse_list(s);
  if (v.size() != 3) throw usage_error("direction needs 3 components: '" + s + "'");
  const Vec3 d(v[0], v[1], v[2]);
  if (d.norm() < 1e-12) throw usage_error("direction must be nonzero");
  return d.normalized();
}

/// "theta=..,phi=.." for |psi> = cos(theta)|0> + e^{i phi} sin(theta)|1>, or a
/// Bloch triple.
inline TargetState parse_target(const std::string& s) {
  if (s.find('=') != std::string::npos) {
    double theta = 0, phi = 0;
    for (auto part : detail::split(s, ',')) {
      const auto kv = detail::split(part, '=');
      if (kv.size() != 2) throw usage_error("expected theta=..,phi=.. in '" + s + "'");
      const auto key = detail::trim(kv[0]);
      if (key == "theta") theta = detail::parse_real(kv[1]);
      else if (key == "phi") phi = detail::parse_real(kv[1]);
      else throw usage_error("unknown angle '" + std::string(key) + "'");
    }
    return TargetState::from_angles(theta, phi);
  }
  return TargetState::from_bloch(parse_direction(s));
}

struct ScanRange {
  double start = 0, stop = 0, step = 0;

  std::vector<double> values() const {
    std::vector<double> out;
    const long count = long(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(start + double(k) * step);
    return out;
  }
};

inline ScanRange parse_range(const std::string& s) {
  const auto parts = detail::split(s, ':');
  if (parts.size() != 3) throw usage_error("range must be start:stop:step, got '" + s + "'");
  ScanRange r;
  try {
    r = {detail::parse_real(parts[0]), detail::parse_real(parts[1]), detail::parse_real(parts[2])};
  } catch (const parse_error& e) {
    throw usage_error(std::string("range: ") + e.what());
  }
  if (!(r.step > 0)) throw usage_error("range step must be positive");
  if (r.stop < r.start) throw usage_error("range stop must not be below start");
  if (r.start < 0 || r.stop > 1 + 1e-12) throw usage_error("p must lie in [0, 1]");
  return r;
}

// ---------------------------------------------------------------------------

inline int cmd_measures(const std::string& state_spec, const std::string& which, const CommonOptions& common,
                        std::ostream& out, std::ostream& err) {
  FanoState s;
  if (int rc = load_physical_state(state_spec, s, err)) return rc;

  auto names = which.empty() ? all_measures() : split_names(which);
  for (const auto& n : names)
    if (std::find(all_measures().begin(), all_measures().end(), n) == all_measures().end())
      throw usage_error("unknown measure '" + n + "' (known: c1,c2,c3,c3_closed,discord_eq3,discord_entropic,g)");

  const bool bell = s.is_bell_diagonal();
  const auto bd = bell ? BellDiagonalState::from_fano(s) : BellDiagonalState{};
  const auto& opt = common.optimizer;

  std::map<std::string, std::optional<double>> values;
  json diagnostics = json::object();
  for (const auto& n : names) {
    if (n == "c1") {
      const auto r = c1(s, opt);
      values[n] = r.value;
      diagnostics[n] = {{"witness", vec(r.witness)}, {"iterations", r.iterations}, {"converged", r.converged}};
    } else if (n == "c2") {
      const auto r = c2(s, opt);
      values[n] = r.value;
      diagnostics[n] = {{"witness", json::array({vec(r.witness.u), vec(r.witness.v)})},
                        {"iterations", r.iterations}, {"converged", r.converged}};
    } else if (n == "c3") {
      const auto r = c3(s, opt);
      values[n] = r.value;
      diagnostics[n] = {{"witness", json::array({vec(r.witness.u1), vec(r.witness.u2), vec(r.witness.u3)})},
                        {"iterations", r.iterations}, {"converged", r.converged}};
    } else if (n == "discord_entropic") {
      const auto r = discord_entropic(s, opt);
      values[n] = r.value;
      diagnostics[n] = {{"closed_form", r.closed_form ? num(*r.closed_form) : json(nullptr)},
                        {"mutual_information", num(r.mutual_information)},
                        {"classical_correlation", num(r.classical_correlation)},
                        {"iterations", r.iterations}, {"converged", r.converged}};
    } else if (!bell) {
      values[n] = std::nullopt;  // closed forms exist for Bell-diagonal states only
    } else if (n == "c3_closed") {
      values[n] = c3_bell_closed(bd);
    } else if (n == "discord_eq3") {
      values[n] = discord_bell_formula(bd);
    } else if (n == "g") {
      values[n] = g_closed(bd);
    }
  }

  if (common.format == "csv") {
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& v = values[names[i]];
      out << (i ? "," : "") << (v ? format_number(*v) : std::string());
    }
    out << "\n# convention: " << kConvention << "\n";
  } else {
    json j;
    j["convention"] = kConvention;
    j["state"] = state_spec;
    for (const auto& n : names) j[n] = values[n] ? num(*values[n]) : json(nullptr);
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    out << j.dump(2) << "\n";
  }
  return kOk;
}

inline int cmd_rsp(const std::string& state_spec, const std::string& beta_spec, const std::string& target_spec,
                   const std::string& alpha_spec, std::uint64_t mc_events, const CommonOptions& common,
                   std::ostream& out, std::ostream& err) {
  FanoState s;
  if (int rc = load_physical_state(state_spec, s, err)) return rc;
  const GreatCircle circle(parse_direction(beta_spec));
  TargetState target = parse_target(target_spec);

  const double off = std::abs(target.t.dot(circle.beta));
  if (off > kCliCircleTol)
    throw usage_error("target not on the great circle: |t.beta| = " + format_number(off) + " > 1e-06");
  if (off > 0.0) {
    const Vec3 projected = (target.t - target.t.dot(circle.beta) * circle.beta).normalized();
    target = TargetState::from_bloch(projected);
  }

  const auto rep = pq_max(s, target, circle, common.optimizer);
  const bool bell = s.is_bell_diagonal();

  json j;
  j["convention"] = kConvention;
  j["state"] = state_spec;
  j["beta"] = vec(circle.beta);
  j["target"] = {{"theta", num(target.theta)}, {"phi", num(target.phi)}, {"t", vec(target.t)}};
  j["pq_max"] = num(rep.pq);
  j["pl_at_argmax"] = num(rep.pl);
  j["argmax_alpha"] = vec(rep.argmax_alpha);
  j["prepared"] = vec(rep.prepared.p);
  j["iterations"] = rep.iterations;
  j["converged"] = rep.converged;
  if (bell) {
    const auto bd = BellDiagonalState::from_fano(s);
    j["pq_max_analytic"] = num(pq_max_bell(bd, target.t));
    j["pq_av_eq14"] = num(pq_av_formula(bd, circle));
    j["pq_av_quadrature"] = num(pq_av_quadrature(bd, circle));
  } else {
    j["pq_max_analytic"] = nullptr;
    j["pq_av_eq14"] = nullptr;
    j["pq_av_quadrature"] = nullptr;
  }
  if (mc_events > 0) {
    const Vec3 alpha = alpha_spec.empty() ? rep.argmax_alpha : parse_direction(alpha_spec);
    const auto mc = mc_simulate(s, alpha, circle, target, mc_events, common.seed);
    const auto exact = prepared_bloch(s, alpha, circle);
    j["mc"] = {{"events", mc.events},          {"seed", common.seed},          {"alpha", vec(alpha)},
               {"mean", vec(mc.mean)},         {"std_error", vec(mc.std_error)}, {"exact_prepared", vec(exact.p)},
               {"pq", num(mc.payoff.pq)},      {"pl", num(mc.payoff.pl)}};
  }

  if (common.format == "csv") {
    std::vector<std::pair<std::string, std::string>> cols;
    for (const auto& [k, v] : j.items()) {
      if (k == "convention" || k == "state" || v.is_structured()) continue;
      cols.emplace_back(k, v.is_null() ? "" : v.is_number_float() ? format_number(v.get<double>()) : v.dump());
    }
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].first;
    out << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].second;
    out << "\n# convention: " << kConvention << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kOk;
}

struct ScanRow {
  double p = 0;
  double g_c = 0, g_g = 0, c3_c = 0, c3_g = 0, d3_c = 0, d3_g = 0, dent_c = 0, dent_g = 0;
  Separability sep_c = Separability::separable, sep_g = Separability::separable;
};

inline constexpr const char* kScanHeader = "p,g_c,g_g,c3_c,c3_g,d3_c,d3_g,dent_c,dent_g,sep_c,sep_g";

inline ScanRow scan_row(double p, const OptimizerOptions& opt) {
  const auto c = rho_c(p), g = rho_g(p);
  return {p,
          g_closed(c),
          g_closed(g),
          c3_bell_closed(c),
          c3_bell_closed(g),
          discord_bell_formula(c),
          discord_bell_formula(g),
          discord_entropic(c.fano(), opt).value,
          discord_entropic(g.fano(), opt).value,
          ppt_entanglement_check(c.fano()).verdict,
          ppt_entanglement_check(g.fano()).verdict};
}

inline int cmd_scan(const std::string& family, const std::string& range, const std::string& plot_dir,
                    const CommonOptions& common, std::ostream& out, std::ostream&) {
  if (family != "cg") throw usage_error("unknown family '" + family + "' (only 'cg' is defined)");
  const auto ps = parse_range(range).values();
  std::vector<ScanRow> rows(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) { rows[i] = scan_row(ps[i], common.optimizer); });

  out << kScanHeader << "\n";
  for (const auto& r : rows) {
    out << format_number(r.p) << ',' << format_number(r.g_c) << ',' << format_number(r.g_g) << ','
        << format_number(r.c3_c) << ',' << format_number(r.c3_g) << ',' << format_number(r.d3_c) << ','
        << format_number(r.d3_g) << ',' << format_number(r.dent_c) << ',' << format_number(r.dent_g) << ','
        << to_string(r.sep_c) << ',' << to_string(r.sep_g) << "\n";
  }
  out << "# convention: " << kConvention << "\n";

  if (!plot_dir.empty()) {
    std::filesystem::create_directories(plot_dir);
    const std::vector<std::pair<std::string, double ScanRow::*>> cols{
        {"g_c", &ScanRow::g_c},       {"g_g", &ScanRow::g_g},       {"c3_c", &ScanRow::c3_c},
        {"c3_g", &ScanRow::c3_g},     {"d3_c", &ScanRow::d3_c},     {"d3_g", &ScanRow::d3_g},
        {"dent_c", &ScanRow::dent_c}, {"dent_g", &ScanRow::dent_g}};
    for (const auto& [name, member] : cols) {
      std::ofstream f(std::filesystem::path(plot_dir) / (name + ".dat"), std::ios::binary);
      f << "# p " << name << "\n";
      for (const auto& r : rows) f << format_number(r.p) << ' ' << format_number(r.*member) << "\n";
    }
  }
  return kOk;
}

inline int cmd_verify(std::uint64_t seed, const std::string& level, const std::string& report_path,
                      const CommonOptions& common, std::ostream& out, std::ostream& err) {
  SuiteLevel lv;
  try {
    lv = parse_level(level);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  const auto result = full_suite(seed, lv, common.optimizer);
  out << summary_text(result);
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) {
      err << "cannot write report to " << report_path << "\n";
      return kUsage;
    }
    f << to_json(result, seed, level).dump(2) << "\n";
  }
  return result.ok ? kOk : kCheckFailure;
}

}  // namespace rspcorr::cli
