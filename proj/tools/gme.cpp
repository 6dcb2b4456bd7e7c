// Command-line front end for the geometric entanglement measure library.
//
// Exit codes: 0 success / quantitative PASS, 1 quantitative FAIL,
// 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gme/bipartite.hpp"
#include "gme/classify.hpp"
#include "gme/locc.hpp"
#include "gme/product_opt.hpp"
#include "gme/state_io.hpp"
#include "gme/states.hpp"
#include "gme/tangle.hpp"
#include "gme/wclass.hpp"

using json = nlohmann::ordered_json;

namespace {

gme::Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw gme::DomainError("expected complex as re,im: " + s);
  }
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::vector<double> parse_reals(const std::string& s, size_t n) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    out.push_back(std::stod(s.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != n) {
    throw gme::DomainError("expected " + std::to_string(n) + " values: " + s);
  }
  return out;
}

json state_to_json(const gme::PureState& s) {
  json j;
  j["dims"] = s.dims;
  json amps = json::array();
  for (long g = 0; g < s.total_dim(); ++g) {
    amps.push_back({s.amps[g].real(), s.amps[g].imag()});
  }
  j["amps"] = amps;
  return j;
}

gme::PureState load_state(const std::string& path) {
  gme::PureState s = gme::read_state_file(path);
  double dev = std::abs(s.norm() - 1.0);
  if (dev > 1e-6) {
    std::cerr << "gme: state in " << path << " deviates from unit norm by "
              << dev << ", renormalizing\n";
  }
  return gme::normalize(s);
}

bool set_is_closed_form(const gme::SISetId& set) {
  using Kind = gme::SISetId::Kind;
  switch (set.kind) {
    case Kind::Product:
    case Kind::WClosure:
      return false;
    case Kind::CutSet:
    case Kind::RankK:
    case Kind::GhzClosure:
      return true;
    case Kind::Union:
      for (const auto& m : set.members) {
        if (!set_is_closed_form(m)) return false;
      }
      return true;
  }
  return false;
}

struct Table1Row {
  std::string name;
  double psi_value, psi_expected, psi_tol;
  double phi_value, phi_expected, phi_tol;
  char expected_order;  // '<' or '>' between the psi and phi columns
};

int run_table1(int starts, std::uint64_t seed) {
  gme::OptConfig cfg;
  cfg.n_starts = starts;
  cfg.seed = seed;
  gme::PureState psi = gme::table1_psi();
  gme::PureState phi = gme::table1_phi();

  auto cut_e = [](const gme::PureState& s, std::vector<int> left) {
    return gme::e_rank_k(s, gme::Cut{std::move(left)}, 1);
  };

  std::vector<Table1Row> rows;
  rows.push_back({"E(S_A-B-C)", gme::nearest_product(psi, cfg).e_value, 0.1,
                  1e-3, gme::nearest_product(phi, cfg).e_value, 0.5143, 2e-3,
                  '<'});
  rows.push_back({"E(S_AB-C)", cut_e(psi, {0, 1}), 0.1, 1e-9,
                  cut_e(phi, {0, 1}), 0.3643, 1e-4, '<'});
  rows.push_back({"E(S_AC-B)", cut_e(psi, {0, 2}), 0.1, 1e-9,
                  cut_e(phi, {0, 2}), 0.3643, 1e-4, '<'});
  rows.push_back({"E(S_A-BC)", cut_e(psi, {0}), 0.1, 1e-9, cut_e(phi, {0}),
                  0.3643, 1e-4, '<'});
  rows.push_back({"E(S_W)", gme::e_w(psi, cfg).e_value, 0.09, 5e-3,
                  gme::e_w(phi, cfg).e_value, 0.0464, 2e-3, '>'});
  rows.push_back({"tau", gme::three_tangle(psi), 0.36, 1e-9,
                  gme::three_tangle(phi), 0.6175, 1e-4, '<'});

  bool all_pass = true;
  std::printf("%-12s %12s %12s      %12s %12s  order  status\n", "measure",
              "psi", "expected", "phi", "expected");
  for (const auto& r : rows) {
    bool psi_ok = std::abs(r.psi_value - r.psi_expected) <= r.psi_tol;
    bool phi_ok = std::abs(r.phi_value - r.phi_expected) <= r.phi_tol;
    char order = (r.psi_value < r.phi_value) ? '<' : '>';
    bool order_ok = (order == r.expected_order);
    bool ok = psi_ok && phi_ok && order_ok;
    all_pass = all_pass && ok;
    std::printf("%-12s %12.6f %12.4f      %12.6f %12.4f    %c    %s\n",
                r.name.c_str(), r.psi_value, r.psi_expected, r.phi_value,
                r.phi_expected, order, ok ? "PASS" : "FAIL");
    if (!ok) {
      std::printf("    psi diff %.3e (tol %.1e), phi diff %.3e (tol %.1e), "
                  "order %c expected %c\n",
                  std::abs(r.psi_value - r.psi_expected), r.psi_tol,
                  std::abs(r.phi_value - r.phi_expected), r.phi_tol, order,
                  r.expected_order);
    }
  }
  std::printf("table1: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}

int run_conj_pair(gme::Complex z, const std::vector<double>& c, int starts,
                  std::uint64_t seed) {
  gme::OptConfig cfg;
  cfg.n_starts = starts;
  cfg.seed = seed;
  gme::PureState a = gme::phi_z_state(z, c[0], c[1], c[2]);
  gme::PureState b = gme::phi_z_state(std::conj(z), c[0], c[1], c[2]);

  struct Entry {
    std::string name;
    double va, vb, tol;
  };
  std::vector<Entry> entries;
  entries.push_back({"E(S_A-B-C)", gme::nearest_product(a, cfg).e_value,
                     gme::nearest_product(b, cfg).e_value, 5e-3});
  const char* cut_names[3] = {"E(S_A-BC)", "E(S_B-AC)", "E(S_AB-C)"};
  const std::vector<std::vector<int>> lefts = {{0}, {1}, {2}};
  for (int j = 0; j < 3; ++j) {
    entries.push_back({cut_names[j],
                       gme::e_rank_k(a, gme::Cut{lefts[j]}, 1),
                       gme::e_rank_k(b, gme::Cut{lefts[j]}, 1), 5e-3});
  }
  entries.push_back({"E(S_W)", gme::e_w(a, cfg).e_value,
                     gme::e_w(b, cfg).e_value, 5e-3});
  entries.push_back(
      {"tau", gme::three_tangle(a), gme::three_tangle(b), 1e-10});

  bool all_pass = true;
  std::printf("%-12s %16s %16s %12s  status\n", "measure", "Phi(z)",
              "Phi(z*)", "diff");
  for (const auto& e : entries) {
    bool ok = std::abs(e.va - e.vb) <= e.tol;
    all_pass = all_pass && ok;
    std::printf("%-12s %16.9f %16.9f %12.3e  %s\n", e.name.c_str(), e.va, e.vb,
                std::abs(e.va - e.vb), ok ? "PASS" : "FAIL");
  }
  std::printf("conj-pair: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric measures of entanglement for multipartite pure states"};
  app.require_subcommand(1);

  // measure
  std::string m_state, m_set;
  int m_starts = 32;
  std::uint64_t m_seed = 1;
  double m_tol = 1e-12;
  bool m_json = false;
  auto* measure_cmd = app.add_subcommand("measure", "Compute E(psi,S) and d(psi,S)");
  measure_cmd->add_option("--state", m_state, "state file")->required();
  measure_cmd->add_option("--set", m_set,
                          "set spec: product | w | ghz | cut:<left> | "
                          "rank:<left>:<k> | union:<spec>,<spec>,...")
      ->required();
  measure_cmd->add_option("--starts", m_starts, "optimizer starts");
  measure_cmd->add_option("--seed", m_seed, "random seed");
  measure_cmd->add_option("--tol", m_tol, "convergence tolerance");
  measure_cmd->add_flag("--json", m_json, "machine-readable output");

  // gen
  std::string g_kind, g_out, g_z = "1,0", g_c = "0,0,0";
  double g_eps = 0.1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a state file");
  gen_cmd->add_option("kind", g_kind,
                      "ghz | w | phi | eps-seq | table1-psi | table1-phi")
      ->required();
  gen_cmd->add_option("-o,--output", g_out, "output file")->required();
  gen_cmd->add_option("--z", g_z, "phi: complex z as re,im");
  gen_cmd->add_option("--c", g_c, "phi: c1,c2,c3");
  gen_cmd->add_option("--eps", g_eps, "eps-seq: epsilon > 0");

  // table1
  int t_starts = 32;
  std::uint64_t t_seed = 1;
  auto* table1_cmd = app.add_subcommand("table1", "Reproduce the reference table");
  table1_cmd->add_option("--starts", t_starts, "optimizer starts");
  table1_cmd->add_option("--seed", t_seed, "random seed");

  // conj-pair
  std::string cp_z = "0,1", cp_c = "0.5,0.5,0.5";
  int cp_starts = 32;
  std::uint64_t cp_seed = 1;
  auto* conj_cmd = app.add_subcommand(
      "conj-pair", "Compare all monotones of Phi(z;c) and Phi(z*;c)");
  conj_cmd->add_option("--z", cp_z, "complex z as re,im");
  conj_cmd->add_option("--c", cp_c, "c1,c2,c3");
  conj_cmd->add_option("--starts", cp_starts, "optimizer starts");
  conj_cmd->add_option("--seed", cp_seed, "random seed");

  // fuzz
  std::string f_set;
  int f_trials = 200, f_starts = 16;
  std::uint64_t f_seed = 1;
  bool f_json = false;
  auto* fuzz_cmd =
      app.add_subcommand("fuzz", "Fuzz-test monotonicity under instruments");
  fuzz_cmd->add_option("--measure", f_set, "set spec")->required();
  fuzz_cmd->add_option("--trials", f_trials, "number of trials");
  fuzz_cmd->add_option("--seed", f_seed, "random seed");
  fuzz_cmd->add_option("--starts", f_starts, "optimizer starts per evaluation");
  fuzz_cmd->add_flag("--json", f_json, "machine-readable output");

  // classify
  std::string cl_state;
  bool cl_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Three-qubit SLOCC class");
  classify_cmd->add_option("--state", cl_state, "state file")->required();
  classify_cmd->add_flag("--json", cl_json, "machine-readable output");

  // schmidt
  std::string s_state, s_cut;
  bool s_json = false;
  auto* schmidt_cmd =
      app.add_subcommand("schmidt", "Schmidt coefficients across a cut");
  schmidt_cmd->add_option("--state", s_state, "state file")->required();
  schmidt_cmd->add_option("--cut", s_cut, "left parties, e.g. 0 or 01")
      ->required();
  schmidt_cmd->add_flag("--json", s_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; any parse failure is usage error
  }

  try {
    if (measure_cmd->parsed()) {
      gme::PureState s = load_state(m_state);
      gme::SISetId set = gme::SISetId::parse(m_set, s.n_parties());
      gme::OptConfig cfg;
      cfg.n_starts = m_starts;
      cfg.seed = m_seed;
      cfg.conv_tol = m_tol;
      gme::MeasureResult r = gme::measure(s, set, cfg);
      if (m_json) {
        json j;
        j["set"] = set.name();
        j["E"] = r.e_value;
        j["d"] = r.d_value;
        j["starts_agreeing"] = r.starts_agreeing;
        j["iterations"] = r.iterations;
        j["witness"] = state_to_json(r.witness);
        std::cout << j.dump() << "\n";
      } else {
        std::printf("set = %s\nE = %.6f\nd = %.6f\n", set.name().c_str(),
                    r.e_value, r.d_value);
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      gme::PureState s;
      if (g_kind == "ghz") {
        s = gme::ghz_state();
      } else if (g_kind == "w") {
        s = gme::w_state();
      } else if (g_kind == "phi") {
        gme::Complex z = parse_complex(g_z);
        auto c = parse_reals(g_c, 3);
        s = gme::phi_z_state(z, c[0], c[1], c[2]);
      } else if (g_kind == "eps-seq") {
        gme::GhzSequenceParam p;
        p.epsilon = g_eps;
        for (int j = 0; j < 3; ++j) {
          p.alpha[j] = gme::Vector::Zero(2);
          p.alpha[j][0] = 1.0;
          p.beta[j] = gme::Vector::Zero(2);
          p.beta[j][1] = 1.0;
        }
        s = gme::ghz_eps_state(p);
      } else if (g_kind == "table1-psi") {
        s = gme::table1_psi();
      } else if (g_kind == "table1-phi") {
        s = gme::table1_phi();
      } else {
        throw gme::DomainError("gen: unknown kind '" + g_kind + "'");
      }
      gme::write_state_file(g_out, s, "generated by gme gen " + g_kind);
      return 0;
    }

    if (table1_cmd->parsed()) {
      return run_table1(t_starts, t_seed);
    }

    if (conj_cmd->parsed()) {
      return run_conj_pair(parse_complex(cp_z), parse_reals(cp_c, 3), cp_starts,
                           cp_seed);
    }

    if (fuzz_cmd->parsed()) {
      std::vector<int> dims = {2, 2, 2};
      gme::SISetId set = gme::SISetId::parse(f_set, 3);
      gme::OptConfig cfg;
      cfg.n_starts = f_starts;
      cfg.seed = f_seed;
      gme::OptConfig retry_cfg = cfg;
      retry_cfg.n_starts = 4 * f_starts;
      double tol = set_is_closed_form(set) ? 1e-9 : 5e-4;
      gme::FuzzReport rep = gme::monotonicity_fuzz(
          gme::make_measure_fn(set, cfg), gme::make_measure_fn(set, retry_cfg),
          dims, f_trials, gme::RandomSource(f_seed), tol);
      if (f_json) {
        json j;
        j["set"] = set.name();
        j["trials"] = rep.trials;
        j["violations"] = rep.violations;
        j["worst_margin"] = rep.worst_margin;
        j["flagged"] = rep.flagged;
        std::cout << j.dump() << "\n";
      } else {
        std::printf("set = %s\ntrials = %d\nviolations = %d\nworst_margin = %.3e\n"
                    "flagged = %zu\n",
                    set.name().c_str(), rep.trials, rep.violations,
                    rep.worst_margin, rep.flagged.size());
      }
      return rep.violations == 0 ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      gme::PureState s = load_state(cl_state);
      gme::SloccClassification c = gme::slocc_class(s);
      if (cl_json) {
        json j;
        j["class"] = gme::to_string(c.label);
        j["local_ranks"] = c.local_ranks;
        j["tau"] = c.tau;
        j["borderline"] = c.borderline;
        std::cout << j.dump() << "\n";
      } else {
        std::printf("%s\n", gme::to_string(c.label));
      }
      return 0;
    }

    if (schmidt_cmd->parsed()) {
      gme::PureState s = load_state(s_state);
      gme::Cut cut;
      for (char ch : s_cut) {
        if (ch < '0' || ch > '9') throw gme::DomainError("schmidt: bad cut spec");
        cut.left.push_back(ch - '0');
      }
      gme::SchmidtDecomposition sd = gme::schmidt(s, cut);
      if (s_json) {
        json j;
        j["lambdas"] = std::vector<double>(sd.lambdas.data(),
                                           sd.lambdas.data() + sd.lambdas.size());
        std::cout << j.dump() << "\n";
      } else {
        for (int i = 0; i < sd.lambdas.size(); ++i) {
          std::printf("%s%g", i ? " " : "", sd.lambdas[i]);
        }
        std::printf("\n");
      }
      return 0;
    }
  } catch (const gme::Error& e) {
    std::cerr << "gme: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gme: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
