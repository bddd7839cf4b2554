/*
 * Copyright (c) 2026 The heckop authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Command-line front end over the heckop C API. */

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heckop.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

struct SpaceCloser {
  void operator()(heckop_space *sp) const { heckop_space_close(sp); }
};
struct SectionCloser {
  void operator()(heckop_section *s) const { heckop_section_close(s); }
};
using SpacePtr = std::unique_ptr<heckop_space, SpaceCloser>;
using SectionPtr = std::unique_ptr<heckop_section, SectionCloser>;

struct StringCloser {
  void operator()(char *s) const { heckop_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringCloser>;

[[noreturn]] void die(const std::string &msg, int code = 2) {
  std::cerr << "heckop: " << msg << "\n";
  std::exit(code);
}

std::vector<double> parse_csv_doubles(const std::string &s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_csv_ints(const std::string &s) {
  std::vector<int> out;
  for (double v : parse_csv_doubles(s)) out.push_back((int)v);
  return out;
}

SpacePtr open_space_checked(const std::string &key,
                            const std::string &catalog) {
  SpacePtr sp(heckop_space_open(key.c_str(),
                                catalog.empty() ? nullptr : catalog.c_str()));
  if (!sp) die(heckop_last_error());
  return sp;
}

void write_file(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) die("cannot write " + path);
  out << content;
}

std::string sidecar_path(const std::string &csv_path) {
  auto dot = csv_path.rfind('.');
  std::string base =
      dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
  return base + ".json";
}

void write_section(const heckop_space *sp, const heckop_section *sec,
                   const std::string &path, double support_radius, int l) {
  int n = heckop_space_rank(sp);
  int N = heckop_section_grid_size(sec);
  int pts = heckop_section_points(sec);
  std::vector<double> re(pts), im(pts);
  heckop_section_values(sec, re.data(), im.data());
  std::ostringstream csv;
  csv.setf(std::ios::fmtflags(0));
  for (int i = 0; i < pts; ++i) {
    // row-major grid order, last axis fastest
    int idx = i;
    std::vector<double> y(n);
    for (int j = n - 1; j >= 0; --j) {
      y[j] = 2.0 * 3.14159265358979323846 * (idx % N) / N;
      idx /= N;
    }
    for (int j = 0; j < n; ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.12g", y[j]);
      csv << buf << ',';
    }
    char b1[32], b2[32];
    std::snprintf(b1, sizeof(b1), "%.17g", re[i]);
    std::snprintf(b2, sizeof(b2), "%.17g", im[i]);
    csv << b1 << ',' << b2 << '\n';
  }
  write_file(path, csv.str());
  if (path.empty() || path == "-") return;
  ordered_json meta;
  meta["l"] = l;
  meta["N"] = N;
  meta["rank"] = n;
  meta["support_radius"] = support_radius;
  meta["norm_convention"] = "euclidean-Y";
  write_file(sidecar_path(path), meta.dump(2) + "\n");
}

SectionPtr read_section(const heckop_space *sp, int l,
                        const std::string &path) {
  std::ifstream in(path);
  if (!in) die("cannot read " + path);
  int n = heckop_space_rank(sp);
  std::vector<double> re, im;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto vals = parse_csv_doubles(line);
    if ((int)vals.size() != n + 2) die("bad section row in " + path);
    re.push_back(vals[n]);
    im.push_back(vals[n + 1]);
  }
  double support = -1.0;
  int N = 0;
  std::ifstream meta(sidecar_path(path));
  if (meta) {
    ordered_json j;
    meta >> j;
    N = j.value("N", 0);
    support = j.value("support_radius", -1.0);
  }
  if (N == 0) {
    // infer N from the point count
    size_t pts = re.size();
    N = (int)std::llround(std::pow(double(pts), 1.0 / n));
  }
  SectionPtr sec(heckop_section_from_values(sp, l, N, re.data(), im.data(),
                                            support));
  if (!sec) die(heckop_last_error());
  return sec;
}

int status_exit(heckop_status st) {
  if (st == HECKOP_OK) return 0;
  if (st == HECKOP_E_VERIFY) return 1;
  return 2;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Numerical spherical harmonic analysis on BC_n root systems"};
  app.require_subcommand(1);

  std::string space = "AIII:p=1,q=1";
  std::string catalog;
  int threads = 0;
  app.add_option("--space", space, "catalog key, e.g. AIII:p=1,q=2 or CI:j=2");
  app.add_option("--catalog", catalog, "catalog JSON file");
  app.add_option("--threads", threads, "parallelism cap (HECKOP_THREADS)");

  // roots
  auto *roots = app.add_subcommand("roots", "print the positive root system");
  std::string roots_out;
  roots->add_option("--out", roots_out, "output path (default stdout)");

  // lattice
  auto *lattice = app.add_subcommand("lattice", "enumerate the weight lattice");
  int lat_l = 0, lat_height = 10;
  std::string lat_out;
  lattice->add_option("--l", lat_l, "bundle index");
  lattice->add_option("--max-height", lat_height, "height cap");
  lattice->add_option("--out", lat_out, "output path (default stdout)");

  // eval-f
  auto *evalf = app.add_subcommand("eval-f", "evaluate the hypergeometric F");
  std::string f_input, f_lre, f_lim, f_x, f_y, f_backend = "series";
  std::string f_shift = "none";
  int f_l = 0;
  double f_tol = 1e-11;
  std::vector<double> f_mult;
  evalf->add_option("--input", f_input, "JSON input file");
  evalf->add_option("--lambda-re", f_lre, "comma-separated Re(lambda)");
  evalf->add_option("--lambda-im", f_lim, "comma-separated Im(lambda)");
  evalf->add_option("--x", f_x, "comma-separated X");
  evalf->add_option("--y", f_y, "comma-separated Y");
  evalf->add_option("--mult", f_mult, "multiplicity m_s,m_m,m_l")
      ->expected(3);
  evalf->add_option("--shift", f_shift, "plus|minus|none multiplicity shift");
  evalf->add_option("--l", f_l, "bundle index for the shift");
  evalf->add_option("--tol", f_tol, "series tolerance");
  evalf->add_option("--backend", f_backend, "series|rank1");

  // eval-psi
  auto *evalpsi = app.add_subcommand("eval-psi", "evaluate psi_{mu,l}");
  std::string p_mu, p_y;
  int p_l = 0;
  evalpsi->add_option("--l", p_l, "bundle index");
  evalpsi->add_option("--mu", p_mu, "comma-separated integer weight")
      ->required();
  evalpsi->add_option("--y", p_y, "comma-separated torus point")->required();

  // transform
  auto *tr = app.add_subcommand("transform", "spherical Fourier transform");
  std::string tr_in, tr_out;
  int tr_l = 0, tr_height = 12;
  tr->add_option("--section", tr_in, "input section CSV")->required();
  tr->add_option("--l", tr_l, "bundle index");
  tr->add_option("--max-height", tr_height, "lattice height cap");
  tr->add_option("--out", tr_out, "output path (default stdout)");

  // synthesize
  auto *sy = app.add_subcommand("synthesize", "sum d(mu) c(mu) psi_mu");
  std::string sy_coeffs, sy_out;
  int sy_l = 0, sy_N = 512;
  sy->add_option("--coeffs", sy_coeffs, "coefficient JSON file")->required();
  sy->add_option("--l", sy_l, "bundle index");
  sy->add_option("--N", sy_N, "grid points per axis");
  sy->add_option("--out", sy_out, "output section CSV")->required();

  // verify
  auto *ver = app.add_subcommand("verify", "run verification suites");
  std::string ver_suite = "all", ver_out, ver_format = "json", ver_only;
  unsigned long long ver_seed = 7;
  int ver_N = 512, ver_l = 1;
  double ver_eps = 0.3;
  std::string ver_space;
  ver->add_option("suite", ver_suite,
                  "all|plancherel|estimate|pw-type|lattice|... ");
  ver->add_option("--only", ver_only, "restrict 'all' to one suite");
  ver->add_option("--seed", ver_seed, "deterministic seed");
  ver->add_option("--N", ver_N, "rank-1 grid size");
  ver->add_option("--eps", ver_eps, "torus-domain margin");
  ver->add_option("--l", ver_l, "bundle index");
  ver->add_option("--space", ver_space, "space override for suites");
  ver->add_option("--out", ver_out, "write the report here");
  ver->add_option("--format", ver_format, "json|csv");
  std::string ver_grid_out;
  ver->add_option("--grid-out", ver_grid_out,
                  "estimate suite: per-point CSV (lambda, X, Y, |F|, bound, "
                  "ratio)");

  // report
  auto *rep = app.add_subcommand("report", "run every suite and save a report");
  std::string rep_out = "report.json";
  unsigned long long rep_seed = 7;
  rep->add_option("--out", rep_out, "report path");
  rep->add_option("--seed", rep_seed, "deterministic seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0)
    setenv("HECKOP_THREADS", std::to_string(threads).c_str(), 1);

  // an eval-f input file may define the space explicitly
  SpacePtr sp;
  if (evalf->parsed() && !f_input.empty()) {
    std::ifstream in(f_input);
    if (!in) die("cannot read " + f_input);
    ordered_json j;
    in >> j;
    if (j.contains("rank") && j.contains("case")) {
      int rank = j["rank"].get<int>();
      std::string cs = j["case"].get<std::string>();
      double ms = 0, mm = 0, ml = 0;
      if (j.contains("mult")) {
        auto mv = j["mult"].get<std::vector<double>>();
        ms = mv[0], mm = mv[1], ml = mv[2];
      }
      sp.reset(heckop_space_open_explicit(
          rank, cs == "I" ? HECKOP_CASE_I : HECKOP_CASE_II, ms, mm, ml));
      if (!sp) die(heckop_last_error());
    }
  }
  if (!sp) sp = open_space_checked(space, catalog);

  if (roots->parsed()) {
    int n = heckop_space_rank(sp.get());
    int count = heckop_space_positive_roots(sp.get(), nullptr, nullptr,
                                            nullptr, 0);
    std::vector<int> coords(count * n), orbit(count);
    std::vector<double> mult(count);
    heckop_space_positive_roots(sp.get(), coords.data(), orbit.data(),
                                mult.data(), count);
    std::ostringstream os;
    os << "coords,orbit,multiplicity\n";
    const char *names[3] = {"short", "medium", "long"};
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < n; ++j) os << coords[i * n + j] << (j + 1 < n ? " " : "");
      os << ',' << names[orbit[i]] << ',' << mult[i] << '\n';
    }
    double rho[8], rho_t[8], rho_s[8];
    heckop_space_rho(sp.get(), HECKOP_RHO, nullptr, rho);
    heckop_space_rho(sp.get(), HECKOP_RHO_TILDE, nullptr, rho_t);
    heckop_space_rho(sp.get(), HECKOP_RHO_S, nullptr, rho_s);
    os << "# rank " << n << " case "
       << (heckop_space_case(sp.get()) == 1 ? "I" : "II") << " |W| "
       << heckop_space_weyl_order(sp.get()) << "\n# rho";
    for (int j = 0; j < n; ++j) os << ' ' << rho[j];
    os << "\n# rho~";
    for (int j = 0; j < n; ++j) os << ' ' << rho_t[j];
    os << "\n# rho_s";
    for (int j = 0; j < n; ++j) os << ' ' << rho_s[j];
    os << "\n";
    write_file(roots_out, os.str());
    return 0;
  }

  if (lattice->parsed()) {
    ApiString out;
    char *raw = nullptr;
    heckop_status st =
        heckop_lattice_enumerate(sp.get(), lat_l, lat_height, &raw);
    out.reset(raw);
    if (st != HECKOP_OK) die(heckop_last_error());
    ordered_json j = ordered_json::parse(out.get());
    std::ostringstream os;
    os << "mu,l,mu0,height\n";
    for (const auto &p : j["points"]) {
      std::string mu;
      for (const auto &v : p["mu"]) {
        if (!mu.empty()) mu += ' ';
        mu += std::to_string(v.get<int>());
      }
      os << mu << ',' << p["l"] << ',' << p["mu0"] << ',' << p["height"]
         << '\n';
    }
    write_file(lat_out, os.str());
    return 0;
  }

  if (evalf->parsed()) {
    double mult[3];
    heckop_space_multiplicity(sp.get(), mult);
    std::vector<double> lre, lim, X, Y;
    if (!f_input.empty()) {
      std::ifstream in(f_input);
      if (!in) die("cannot read " + f_input);
      ordered_json j;
      in >> j;
      lre = j.value("lambda_re", std::vector<double>{});
      lim = j.value("lambda_im", std::vector<double>{});
      X = j.value("X", std::vector<double>{});
      Y = j.value("Y", std::vector<double>{});
      f_tol = j.value("tol", f_tol);
      if (j.contains("mult")) {
        auto mv = j["mult"].get<std::vector<double>>();
        for (int k = 0; k < 3; ++k) mult[k] = mv[k];
      }
    }
    if (!f_lre.empty()) lre = parse_csv_doubles(f_lre);
    if (!f_lim.empty()) lim = parse_csv_doubles(f_lim);
    if (!f_x.empty()) X = parse_csv_doubles(f_x);
    if (!f_y.empty()) Y = parse_csv_doubles(f_y);
    if (f_mult.size() == 3)
      for (int k = 0; k < 3; ++k) mult[k] = f_mult[k];
    if (f_shift != "none") {
      double shifted[3];
      heckop_mult_shift(mult, f_l, f_shift == "plus" ? +1 : -1, shifted);
      for (int k = 0; k < 3; ++k) mult[k] = shifted[k];
    }
    int n = heckop_space_rank(sp.get());
    lre.resize(n, 0.0);
    lim.resize(n, 0.0);
    X.resize(n, 0.0);
    Y.resize(n, 0.0);
    double out[2], achieved = 0;
    int perturbed = 0;
    heckop_status st;
    if (f_backend == "rank1") {
      st = heckop_eval_f_rank1(sp.get(), mult, lre[0], lim[0], X[0], Y[0],
                               out);
    } else {
      st = heckop_eval_f(sp.get(), mult, lre.data(), lim.data(), X.data(),
                         Y.data(), f_tol, out, &achieved, &perturbed);
    }
    if (st != HECKOP_OK) die(heckop_last_error());
    ordered_json j = {{"re", out[0]},
                      {"im", out[1]},
                      {"achieved_tol", achieved},
                      {"perturbed", perturbed != 0}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (evalpsi->parsed()) {
    auto mu = parse_csv_ints(p_mu);
    auto y = parse_csv_doubles(p_y);
    int n = heckop_space_rank(sp.get());
    if ((int)mu.size() != n || (int)y.size() != n)
      die("mu and y must have " + std::to_string(n) + " entries");
    double out[2];
    heckop_status st = heckop_eval_psi(sp.get(), p_l, mu.data(), y.data(),
                                       out);
    if (st != HECKOP_OK) die(heckop_last_error());
    ordered_json j = {{"re", out[0]}, {"im", out[1]}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (tr->parsed()) {
    SectionPtr sec = read_section(sp.get(), tr_l, tr_in);
    char *raw = nullptr;
    heckop_status st = heckop_forward_transform(sec.get(), tr_height, &raw);
    ApiString out(raw);
    if (st != HECKOP_OK) die(heckop_last_error());
    write_file(tr_out, out.get());
    return 0;
  }

  if (sy->parsed()) {
    std::ifstream in(sy_coeffs);
    if (!in) die("cannot read " + sy_coeffs);
    std::stringstream ss;
    ss << in.rdbuf();
    SectionPtr sec(heckop_synthesize(sp.get(), sy_l, sy_N, ss.str().c_str()));
    if (!sec) die(heckop_last_error());
    write_section(sp.get(), sec.get(), sy_out, -1.0, sy_l);
    return 0;
  }

  if (ver->parsed() || rep->parsed()) {
    std::string suite = rep->parsed() ? "all" : ver_suite;
    if (!ver_only.empty()) suite = ver_only;
    ordered_json cfg;
    cfg["seed"] = rep->parsed() ? rep_seed : ver_seed;
    cfg["N"] = ver_N;
    cfg["eps"] = ver_eps;
    cfg["l"] = ver_l;
    if (!ver_space.empty()) cfg["space"] = ver_space;
    if (!catalog.empty()) cfg["catalog"] = catalog;
    if (!ver_grid_out.empty()) cfg["grid_out"] = ver_grid_out;
    char *raw = nullptr;
    heckop_status st = heckop_verify(suite.c_str(), cfg.dump().c_str(), &raw);
    ApiString out(raw);
    if (!raw) die(heckop_last_error());
    ordered_json report = ordered_json::parse(out.get());
    for (const auto &s : report["suites"])
      for (const auto &c : s["checks"])
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                  << (c["asserted"].get<bool>() ? "" : "(report-only) ")
                  << s["suite"].get<std::string>() << "/"
                  << c["name"].get<std::string>() << "  measured "
                  << c["measured"].get<std::string>() << "  bound "
                  << c["bound"].get<std::string>() << "\n";
    std::cout << "summary: " << report["summary"].dump() << "\n";
    std::string path = rep->parsed() ? rep_out : ver_out;
    if (!path.empty()) {
      if (ver_format == "csv" && !rep->parsed()) {
        std::ostringstream csv;
        csv << "suite,check,anchor,measured,bound,pass,asserted\n";
        for (const auto &s : report["suites"])
          for (const auto &c : s["checks"]) {
            std::string anchor = c["anchor"].get<std::string>();
            for (char &ch : anchor)
              if (ch == ',') ch = ';';
            csv << s["suite"].get<std::string>() << ','
                << c["name"].get<std::string>() << ',' << anchor << ','
                << c["measured"].get<std::string>() << ','
                << c["bound"].get<std::string>() << ','
                << (c["pass"].get<bool>() ? 1 : 0) << ','
                << (c["asserted"].get<bool>() ? 1 : 0) << '\n';
          }
        write_file(path, csv.str());
      } else {
        write_file(path, out.get());
      }
    }
    return status_exit(st);
  }

  return 2;
}
