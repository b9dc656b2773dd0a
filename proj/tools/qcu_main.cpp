// Command-line front end. Talks to the library only through qcu.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qcu/qcu.h"

namespace {

struct Options {
  std::string field;
  std::uint64_t seed = 0;
  std::string format = "text";
  int degree_cap = -1;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

int exit_code_for(qcu_status s) {
  switch (s) {
    case QCU_OK: return 0;
    case QCU_ERR_VERIFICATION:
    case QCU_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

int report_error(qcu_status s) {
  std::fprintf(stderr, "error (%s): %s\n", qcu_status_name(s), qcu_last_error());
  return exit_code_for(s);
}

// Takes the report by reference so it is read after the call that fills it.
int finish(qcu_status s, qcu_report* const& report) {
  if (s != QCU_OK) return report_error(s);
  std::fputs(qcu_report_text(report), stdout);
  const int code = qcu_report_passed(report) ? 0 : 1;
  qcu_report_free(report);
  return code;
}

struct Params {
  std::vector<const char*> keys, values;
  explicit Params(const KeyValues& kv) {
    for (const auto& [k, v] : kv) {
      keys.push_back(k.c_str());
      values.push_back(v.c_str());
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions for pencils of quadrics, matrix factorizations and Ulrich modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--field", opt.field, "Q or an odd prime (default 10009)")->envname("FIELD");
  app.add_option("--seed", opt.seed, "seed for randomized checks")->envname("SEED");
  app.add_option("--format", opt.format, "text or json")->envname("FORMAT");
  app.add_option("--degree-cap", opt.degree_cap, "cap on degrees in kernel computations")->envname("DEGREE_CAP");

  // Parameter storage shared by all subcommands; only passed options are forwarded.
  std::string g, n, i_set, j_set, n0, n1, lo, hi, r, d, roots, a, c, q1, q2, vars, samples, trials, style;

  struct Sub {
    CLI::App* app;
    std::vector<std::pair<std::string, CLI::Option*>> opts;
    std::vector<std::string*> targets;
    void add(const std::string& flag, const std::string& key, std::string* target, const std::string& help) {
      opts.emplace_back(key, app->add_option(flag, *target, help));
      targets.push_back(target);
    }
    KeyValues gather() const {
      KeyValues out;
      for (std::size_t k = 0; k < opts.size(); ++k)
        if (opts[k].second->count() > 0) out.emplace_back(opts[k].first, *targets[k]);
      return out;
    }
  };

  Sub pencil{app.add_subcommand("pencil", "discriminant, smoothness and diagonal form of s*q1 + t*q2"), {}, {}};
  pencil.add("--q1", "q1", &q1, "first quadric");
  pencil.add("--q2", "q2", &q2, "second quadric");
  pencil.add("--vars", "vars", &vars, "comma-separated variable order");
  pencil.add("--roots", "roots", &roots, "build f from roots instead");

  std::string mf_action = "line-bundle";
  Sub mf{app.add_subcommand("mf", "line bundles as matrix factorizations on y^2 = f"), {}, {}};
  mf.app->add_option("action", mf_action, "line-bundle | group-law | cohomology | raynaud");
  mf.add("--g", "g", &g, "genus");
  mf.add("--I", "I", &i_set, "subset, e.g. 1,2");
  mf.add("--J", "J", &j_set, "second subset");
  mf.add("--n0", "n0", &n0, "first twist");
  mf.add("--n1", "n1", &n1, "last twist");

  std::string cl_action = "y";
  Sub clifford{app.add_subcommand("clifford", "graded Clifford algebra of the pencil"), {}, {}};
  clifford.app->add_option("action", cl_action, "y | multiply | decompose | bgg");
  clifford.add("--g", "g", &g, "genus");
  clifford.add("--I", "I", &i_set, "subset");
  clifford.add("--J", "J", &j_set, "second subset");
  clifford.add("--lo", "lo", &lo, "window start");
  clifford.add("--hi", "hi", &hi, "window end");

  std::string betti_action = "table";
  Sub betti{app.add_subcommand("betti", "Betti and cohomology tables of F_U"), {}, {}};
  betti.app->add_option("action", betti_action, "table | chi | fu | cohomology");
  betti.add("--g", "g", &g, "genus");
  betti.add("--r", "r", &r, "rank of G");
  betti.add("--d", "d", &d, "degree of G");
  betti.add("--n0", "n0", &n0, "first twist");
  betti.add("--n1", "n1", &n1, "last twist");
  betti.add("--style", "style", &style, "text or latex");

  std::string ul_action, candidate_file;
  Sub ulrich{app.add_subcommand("ulrich", "Ulrich modules on complete intersections of two quadrics"), {}, {}};
  ulrich.app->add_option("action", ul_action, "construct | for-roots | targets | verify")->required();
  ulrich.app->add_option("file", candidate_file, "candidate JSON for verify");
  ulrich.add("--n", "n", &n, "Knorrer size parameter");
  ulrich.add("--d", "d", &d, "diagonal Lambda entries d_0..d_n");
  ulrich.add("--roots", "roots", &roots, "prescribed discriminant roots");
  ulrich.add("--a", "a", &a, "targets a_0..a_n");
  ulrich.add("--c", "c", &c, "targets c_1..c_n");
  ulrich.add("--trials", "trials", &trials, "Hilbert check trials");
  bool emit = false;
  ulrich.app->add_flag("--emit", emit, "print the presentation matrix");

  std::string suite_name;
  Sub suite{app.add_subcommand("suite", "verification suites"), {}, {}};
  suite.app->add_option("name", suite_name, "grouplaw | clifford | betti | knorrer | ulrich-e2e")->required();
  suite.add("--g", "g", &g, "genus");
  suite.add("--n", "n", &n, "size parameter");
  suite.add("--roots", "roots", &roots, "discriminant roots");
  suite.add("--samples", "samples", &samples, "random samples");
  suite.add("--trials", "trials", &trials, "Hilbert check trials");

  std::string object, path, export_format;
  Sub exp{app.add_subcommand("export", "write a table or candidate to a file"), {}, {}};
  exp.app->add_option("object", object, "betti | cohomology | candidate")->required();
  exp.app->add_option("--out", path, "output path")->required();
  exp.app->add_option("--as", export_format, "text | latex | json (default: --format)");
  exp.add("--g", "g", &g, "genus");
  exp.add("--n0", "n0", &n0, "first twist");
  exp.add("--n1", "n1", &n1, "last twist");
  exp.add("--n", "n", &n, "Knorrer size parameter");
  exp.add("--d", "d", &d, "diagonal Lambda entries");
  exp.add("--roots", "roots", &roots, "prescribed discriminant roots");
  exp.add("--trials", "trials", &trials, "Hilbert check trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  qcu_config* cfg = nullptr;
  qcu_status s = qcu_config_new(opt.field.empty() ? nullptr : opt.field.c_str(), opt.seed, &cfg);
  if (s != QCU_OK) return report_error(s);
  s = qcu_config_set_format(cfg, opt.format.c_str());
  if (s == QCU_OK) s = qcu_config_set_degree_cap(cfg, opt.degree_cap);
  if (s != QCU_OK) {
    qcu_config_free(cfg);
    return report_error(s);
  }

  qcu_report* report = nullptr;
  int code = 0;
  auto run = [&](const char* command, KeyValues kv) {
    Params p(kv);
    return finish(qcu_run_command(cfg, command, p.keys.data(), p.values.data(), p.keys.size(), &report), report);
  };

  if (pencil.app->parsed()) {
    code = run("pencil", pencil.gather());
  } else if (mf.app->parsed()) {
    KeyValues kv = mf.gather();
    kv.emplace_back("action", mf_action);
    code = run("mf", kv);
  } else if (clifford.app->parsed()) {
    KeyValues kv = clifford.gather();
    kv.emplace_back("action", cl_action);
    code = run("clifford", kv);
  } else if (betti.app->parsed()) {
    KeyValues kv = betti.gather();
    kv.emplace_back("action", betti_action);
    code = run("betti", kv);
  } else if (ulrich.app->parsed()) {
    KeyValues kv = ulrich.gather();
    kv.emplace_back("action", ul_action);
    if (emit) kv.emplace_back("emit", "1");
    if (ul_action == "verify") {
      if (candidate_file.empty()) {
        std::fprintf(stderr, "error: ulrich verify needs a candidate file\n");
        qcu_config_free(cfg);
        return 2;
      }
      std::ifstream in(candidate_file, std::ios::binary);
      if (!in) {
        std::fprintf(stderr, "error (i/o error): cannot open '%s'\n", candidate_file.c_str());
        qcu_config_free(cfg);
        return 2;
      }
      std::ostringstream body;
      body << in.rdbuf();
      kv.emplace_back("json", body.str());
    }
    code = run("ulrich", kv);
  } else if (suite.app->parsed()) {
    KeyValues kv = suite.gather();
    Params p(kv);
    code = finish(qcu_run_suite(cfg, suite_name.c_str(), p.keys.data(), p.values.data(), p.keys.size(), &report), report);
  } else if (exp.app->parsed()) {
    KeyValues kv = exp.gather();
    if (object == "candidate") kv.emplace_back("action", roots.empty() ? "construct" : "for-roots");
    Params p(kv);
    const std::string fmt = export_format.empty() ? opt.format : export_format;
    code = finish(qcu_export(cfg, object.c_str(), p.keys.data(), p.values.data(), p.keys.size(), path.c_str(), fmt.c_str(),
                             &report),
                  report);
  }
  qcu_config_free(cfg);
  return code;
}
