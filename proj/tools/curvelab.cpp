#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvelab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) {
  throw CliError{code, msg};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(int status) {
  if (status == CLB_OK) return;
  int code = status == CLB_PARSE_ERROR ? kExitUsage : kExitAssertion;
  die(code, clb_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  clb_string_free(s);
  return out;
}

double parse_dimension(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF")
    return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  die(kExitUsage, "bad dimension '" + text + "'");
}

std::pair<long, long> parse_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) die(kExitUsage, "range must look like a..b");
  try {
    long a = std::stol(text.substr(0, sep));
    long b = std::stol(text.substr(sep + 2));
    return {a, b};
  } catch (const std::exception&) {
    die(kExitUsage, "bad range '" + text + "'");
  }
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      die(kExitUsage, "bad number '" + item + "'");
    }
  }
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (double v : parse_doubles(text)) out.push_back(long(v));
  return out;
}

struct GraphHandle {
  clb_graph* g = nullptr;
  ~GraphHandle() { clb_graph_free(g); }
};

struct RootedHandle {
  clb_rooted* rg = nullptr;
  ~RootedHandle() { clb_rooted_free(rg); }
};

void load_graph(const std::string& path, GraphHandle& h) {
  check(clb_graph_parse(read_file(path).c_str(), &h.g));
}

void load_rooted(const std::string& path, RootedHandle& h) {
  check(clb_rooted_parse(read_file(path).c_str(), &h.rg));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) die(kExitUsage, "cannot write " + out_path);
  out << text << "\n";
}

int report_rows(const std::vector<std::string>& rows, bool all_pass) {
  std::cout << "x0,R,value,bound,pass\n";
  for (const auto& row : rows) std::cout << row << "\n";
  return all_pass ? kExitOk : kExitAssertion;
}

std::string csv_row(long x0, long r, double value, double bound, bool pass) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g,%d", x0, r, value, bound,
                pass ? 1 : 0);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"weighted linear graph curvature toolkit"};
  app.set_version_flag("--version", clb_version());
  app.require_subcommand(1);
  long threads = 1;
  app.add_option("--threads", threads, "parallelism cap")
      ->envname("CURVELAB_THREADS");

  std::string spec, spec2, out_path, dim_text = "inf", range_text = "0..50";
  double curvature_k = 0.0;
  long center = 0, radius = 8, rmax = 16, hi = 50;
  std::string centers_text, dim_fn_text;

  auto* analyze = app.add_subcommand("analyze", "full report for a graph spec");
  analyze->add_option("spec", spec)->required();
  analyze->add_option("--out", out_path);

  auto* curv = app.add_subcommand("curvature", "curvature profile CSV");
  curv->add_option("spec", spec)->required();
  curv->add_option("--dimension", dim_text);
  curv->add_option("--range", range_text);

  auto* chk = app.add_subcommand("check", "verify a single property");
  chk->require_subcommand(1);
  std::vector<CLI::App*> chks;
  for (const char* name :
       {"cd", "vd", "sd", "poincare", "cheeger", "ellipticity", "series"}) {
    auto* c = chk->add_subcommand(name);
    c->add_option("spec", spec)->required();
    c->add_option("--dimension", dim_text);
    c->add_option("--range", range_text);
    c->add_option("--curvature", curvature_k);
    c->add_option("--center", center);
    c->add_option("--centers", centers_text);
    c->add_option("--radius", radius);
    c->add_option("--rmax", rmax);
    chks.push_back(c);
  }

  auto* cmp = app.add_subcommand("compare", "model comparison report");
  cmp->add_option("model_spec", spec)->required();
  cmp->add_option("spec", spec2)->required();
  cmp->add_option("--dimension-fn", dim_fn_text)->required();
  cmp->add_option("--hi", hi);

  auto* gen = app.add_subcommand("generate", "emit a graph spec");
  gen->require_subcommand(1);
  double gen_d = 4.0, gen_omega = 2.0, gen_mu = 4.0;
  long gen_len = 50;
  std::string gen_samples, gen_branching, gen_weights, gen_measures;
  auto* gen_model = gen->add_subcommand("model-space");
  gen_model->add_option("--D", gen_d)->required();
  gen_model->add_option("--len", gen_len);
  auto* gen_exp = gen->add_subcommand("exp");
  gen_exp->add_option("--omega", gen_omega)->required();
  gen_exp->add_option("--mu", gen_mu)->required();
  auto* gen_concave = gen->add_subcommand("concave");
  gen_concave->add_option("--samples", gen_samples, "x:y,x:y,...")->required();
  auto* gen_tree = gen->add_subcommand("tree");
  gen_tree->add_option("--branching", gen_branching)->required();
  gen_tree->add_option("--weights", gen_weights)->required();
  gen_tree->add_option("--measures", gen_measures)->required();

  auto* proj = app.add_subcommand("project", "project a rooted graph");
  proj->add_option("spec", spec)->required();

  auto* prod = app.add_subcommand("product", "Cartesian product");
  prod->add_option("a", spec)->required();
  prod->add_option("b", spec2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) {
    GraphHandle h;
    load_graph(spec, h);
    char* out = nullptr;
    check(clb_analyze_json(h.g, &out));
    emit(take_string(out), out_path);
    return kExitOk;
  }

  if (curv->parsed()) {
    GraphHandle h;
    load_graph(spec, h);
    auto [lo, b] = parse_range(range_text);
    char* out = nullptr;
    check(clb_curvature_profile_csv(h.g, lo, b, parse_dimension(dim_text), &out));
    std::cout << take_string(out);
    return kExitOk;
  }

  if (chk->parsed()) {
    GraphHandle h;
    load_graph(spec, h);
    double d = parse_dimension(dim_text);
    auto [lo, b] = parse_range(range_text);

    if (chks[0]->parsed()) {  // cd
      int found = 0;
      long vertex = 0;
      double slack = 0.0;
      check(clb_find_cd_violation(h.g, curvature_k, d, lo, b, &found, &vertex,
                                  &slack));
      std::cout << "n,slack,pass\n";
      if (found)
        std::cout << vertex << "," << slack << ",0\n";
      else
        std::cout << lo << ".." << b << ",,1\n";
      return found ? kExitAssertion : kExitOk;
    }
    if (chks[1]->parsed() || chks[2]->parsed()) {  // vd, sd
      std::vector<long> centers =
          centers_text.empty() ? std::vector<long>{center}
                               : parse_longs(centers_text);
      double c_sd = 0.0, c_vd = 0.0;
      check(clb_doubling(h.g, centers.data(), long(centers.size()), rmax, &c_sd,
                         &c_vd));
      bool sd_mode = chks[2]->parsed();
      double value = sd_mode ? c_sd : c_vd;
      double bound = std::isinf(d)
                         ? std::numeric_limits<double>::infinity()
                         : std::pow(2.0, sd_mode ? d - 2.0 : d - 1.0);
      bool pass = value <= bound + 1e-9;
      return report_rows({csv_row(centers.front(), rmax, value, bound, pass)},
                         pass);
    }
    if (chks[3]->parsed()) {  // poincare
      double value = 0.0;
      check(clb_poincare_best_constant(h.g, center, radius, &value));
      bool pass = value <= 16.0 + 1e-9;
      return report_rows({csv_row(center, radius, value, 16.0, pass)}, pass);
    }
    if (chks[4]->parsed()) {  // cheeger
      GraphHandle restricted;
      check(clb_graph_restrict(h.g, lo, b, 0, &restricted.g));
      double h_val = 0.0, lambda = 0.0;
      check(clb_cheeger(restricted.g, &h_val));
      check(clb_spectral_gap(restricted.g, &lambda));
      double bound = 1.0 / (2.0 * double(b - lo));
      bool pass = lambda >= 0.5 * h_val * h_val - 1e-9;
      std::cout << "A,B,h,h_bound,lambda1,pass\n"
                << lo << "," << b << "," << h_val << "," << bound << ","
                << lambda << "," << (pass ? 1 : 0) << "\n";
      return pass ? kExitOk : kExitAssertion;
    }
    if (chks[5]->parsed()) {  // ellipticity
      double alpha = 0.0;
      check(clb_ellipticity(h.g, lo, b, &alpha));
      double bound = std::isinf(d) ? 0.0 : 1.0 / d;
      bool pass = alpha >= bound - 1e-12;
      return report_rows({csv_row(lo, b, alpha, bound, pass)}, pass);
    }
    // series
    char* out = nullptr;
    check(clb_series_json(h.g, &out));
    std::cout << take_string(out) << "\n";
    return kExitOk;
  }

  if (cmp->parsed()) {
    GraphHandle model, g;
    load_graph(spec, model);
    load_graph(spec2, g);
    char* out = nullptr;
    check(clb_compare_json(model.g, g.g, nullptr, 0,
                           parse_dimension(dim_fn_text), hi, &out));
    std::cout << take_string(out) << "\n";
    return kExitOk;
  }

  if (gen->parsed()) {
    GraphHandle h;
    RootedHandle rh;
    if (gen_model->parsed()) {
      check(clb_graph_model_space(gen_d, gen_len, &h.g));
    } else if (gen_exp->parsed()) {
      check(clb_graph_exp_family(gen_omega, gen_mu, &h.g));
    } else if (gen_concave->parsed()) {
      std::vector<double> xs, ys;
      std::stringstream ss(gen_samples);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto sep = item.find(':');
        if (sep == std::string::npos)
          die(kExitUsage, "samples must look like x:y,x:y");
        xs.push_back(std::stod(item.substr(0, sep)));
        ys.push_back(std::stod(item.substr(sep + 1)));
      }
      check(clb_graph_from_concave(xs.data(), ys.data(), long(xs.size()), &h.g));
    } else {
      std::vector<long> branching = parse_longs(gen_branching);
      std::vector<double> ws = parse_doubles(gen_weights);
      std::vector<double> ms = parse_doubles(gen_measures);
      if (ws.size() != branching.size() || ms.size() != branching.size())
        die(kExitUsage, "branching, weights, measures must have equal length");
      check(clb_rooted_tree(branching.data(), ws.data(), ms.data(),
                            long(branching.size()), 1.0, &rh.rg));
      char* out = nullptr;
      check(clb_rooted_to_json(rh.rg, &out));
      std::cout << take_string(out) << "\n";
      return kExitOk;
    }
    char* out = nullptr;
    check(clb_graph_to_json(h.g, &out));
    std::cout << take_string(out) << "\n";
    return kExitOk;
  }

  if (proj->parsed()) {
    RootedHandle rh;
    load_rooted(spec, rh);
    GraphHandle h;
    int phys = 0, norm = 0;
    check(clb_rooted_project(rh.rg, &h.g, &phys, &norm));
    char* out = nullptr;
    check(clb_graph_to_json(h.g, &out));
    std::cout << take_string(out) << "\n";
    std::cerr << "physical_symmetric=" << phys
              << " normalized_symmetric=" << norm << "\n";
    return kExitOk;
  }

  if (prod->parsed()) {
    RootedHandle a, b, p;
    load_rooted(spec, a);
    load_rooted(spec2, b);
    check(clb_rooted_product(a.rg, b.rg, &p.rg));
    char* out = nullptr;
    check(clb_rooted_to_json(p.rg, &out));
    std::cout << take_string(out) << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
}
