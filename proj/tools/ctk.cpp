// Command-line front end: surveys, classification, witness replay, braiding
// analysis, Lie data queries, certificate verification.
//
// Exit codes: 0 success, 1 claim/verification failure, 2 usage errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctk/braiding.hpp"
#include "ctk/jordan.hpp"
#include "ctk/json_io.hpp"
#include "ctk/lie.hpp"
#include "ctk/rack.hpp"
#include "ctk/witness.hpp"

using nlohmann::json;
using namespace ctk;

namespace {

struct Caps {
  std::size_t enum_cap = grp::kEnumCap;
  std::size_t orbit_cap = rack::Budget{}.orbit_cap;
  std::size_t pair_budget = rack::Budget{}.pair_budget;
  unsigned long long seed = 0;
};

json caps_json(const Caps& c) {
  return json{{"enum_cap", c.enum_cap},
              {"orbit_cap", c.orbit_cap},
              {"pair_budget", c.pair_budget},
              {"seed", c.seed}};
}

void add_cap_flags(CLI::App* cmd, Caps& c) {
  cmd->add_option("--enum-cap", c.enum_cap, "group enumeration cap");
  cmd->add_option("--orbit-cap", c.orbit_cap, "subgroup-orbit size cap");
  cmd->add_option("--pair-budget", c.pair_budget, "pairs examined per scan");
  cmd->add_option("--seed", c.seed, "seed for the randomized search phases");
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
  }
}

// ---------------------------------------------------------------------------

int run_survey(const std::string& spec_str, bool mixed_only,
               const std::string& out_path, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  auto G = grp::make_group(spec_str);
  auto classes = grp::conjugacy_classes(G, caps.enum_cap);
  // deterministic order: class size ascending, then canonical representative
  std::stable_sort(classes.begin(), classes.end(),
                   [](const grp::ConjClass& a, const grp::ConjClass& b) {
                     if (a.members.size() != b.members.size())
                       return a.members.size() < b.members.size();
                     return a.rep < b.rep;
                   });
  long long total = 0;
  for (const auto& cl : classes) total += (long long)cl.members.size();

  rack::Budget budget;
  budget.pair_budget = caps.pair_budget;
  budget.orbit_cap = caps.orbit_cap;
  budget.seed = caps.seed;

  bool all_mixed_certified = true;
  json out_classes = json::array();
  for (const auto& cl : classes) {
    auto kind = jordan::classify_element(G, cl.rep);
    bool mixed = kind == jordan::ElementKind::Mixed;
    if (mixed_only && !mixed) continue;
    json entry{{"representative", json_io::mat_to_json(cl.rep)},
               {"size", cl.members.size()},
               {"kind", jordan::kind_name(kind)}};
    if (kind == jordan::ElementKind::UnipotentNontrivial) {
      // the canonical rep (and its p-part, when working modulo the center)
      // may differ from a genuine unipotent matrix by a central scalar
      grp::Mat pu = jordan::p_decompose(G, cl.rep).g_u;
      for (const grp::Mat& z : G.center_scalars) {
        try {
          entry["label"] = jordan::jordan_partition(z * pu);
          break;
        } catch (const jordan::JordanError&) {
        }
      }
      entry["label_ambiguous"] = jordan::label_ambiguous(G.spec);
    }
    if (mixed) {
      rack::ClassRack O;
      O.G = &G;
      O.rep = cl.rep;
      O.members = cl.members;
      auto rep = rack::kthulhu_scan(O, budget);
      entry["completeness"] = json{{"d_complete", rep.d_complete},
                                   {"f_complete", rep.f_complete},
                                   {"c_heuristic", rep.c_heuristic}};
      if (rep.cert && rack::verify_certificate(G, *rep.cert, caps.orbit_cap)) {
        entry["verdict"] =
            std::string("collapses (type ") + rep.cert->kind + ")";
        entry["certificate"] = json_io::cert_to_json(*rep.cert);
      } else {
        entry["verdict"] = "no verified certificate found";
        all_mixed_certified = false;
      }
    } else {
      entry["verdict"] = "not scanned (only mixed classes are in scope)";
    }
    out_classes.push_back(entry);
  }

  json report{{"command", "survey"},
              {"group", G.spec.str()},
              {"config", caps_json(caps)},
              {"mixed_only", mixed_only},
              {"group_order", G.spec.mod_center ? G.quotient_order()
                                                : G.order_formula},
              {"class_size_total", total},
              {"classes", out_classes}};
  emit(report, out_path);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "survey " << G.spec.str() << ": " << out_classes.size()
            << " classes listed, " << ms << " ms\n";
  return all_mixed_certified ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_classify(const std::string& spec_str, const std::string& rep_path,
                 const std::string& out_path) {
  auto G = grp::make_group(spec_str);
  std::ifstream in(rep_path);
  if (!in) throw CLI::ValidationError("cannot open " + rep_path);
  json jm;
  in >> jm;
  grp::Mat m = json_io::mat_from_json(jm);
  json report{{"command", "classify"}, {"group", G.spec.str()}};
  if (m.F != G.F || (int)m.n != G.spec.n || !G.member(m)) {
    report["member"] = false;
    emit(report, out_path);
    return 1;
  }
  report["member"] = true;
  grp::Mat g = G.canon(m);
  auto kind = jordan::classify_element(G, g);
  auto dec = jordan::p_decompose(G, g);
  report["kind"] = jordan::kind_name(kind);
  report["order"] = dec.order;
  report["semisimple_part"] = json_io::mat_to_json(dec.g_s);
  report["unipotent_part"] = json_io::mat_to_json(dec.g_u);
  report["unipotent_partition"] = jordan::jordan_partition(dec.g_u);
  report["label_ambiguous"] = jordan::label_ambiguous(G.spec);
  emit(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------

int run_witness(const std::string& id, bool all, bool slow) {
  std::string filter = slow ? "all" : "fast";
  std::vector<witness::WitnessReport> reports;
  if (all) {
    reports = witness::run_all(filter).reports;
  } else {
    reports.push_back(witness::run_witness(id, filter));
  }
  bool ok = true;
  for (const auto& rep : reports) {
    for (const auto& cl : rep.claims) {
      json line{{"witness", rep.id},
                {"group", rep.group},
                {"claim", cl.name},
                {"pass", cl.pass}};
      if (!cl.detail.empty()) line["detail"] = cl.detail;
      std::cout << line.dump() << "\n";
      ok = ok && cl.pass;
    }
    for (const auto& a : rep.assumptions) {
      json line{{"witness", rep.id}, {"assumption", a}};
      std::cout << line.dump() << "\n";
    }
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_braiding(const std::string& out_path) {
  auto sym = braiding::symbolic_braiding(braiding::lemma_uno_subrack(1));
  json table = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(sym.at(i, j).to_string());
    table.push_back(row);
  }
  json products;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
    std::string key = "q" + std::to_string(i) + std::to_string(j) + "*q" +
                      std::to_string(j) + std::to_string(i);
    products[key] = (sym.at(i, j) * sym.at(j, i)).to_string();
  }
  auto verdicts = braiding::lemma_uno_decide();
  json jv = json::array();
  bool all_infinite = true;
  for (const auto& v : verdicts) {
    jv.push_back(json{{"zeta", v.zeta_exp}, {"verdict", v.verdict}});
    all_infinite = all_infinite && v.verdict.rfind("infinite", 0) == 0;
  }
  json report{{"command", "braiding lemma-uno"},
              {"table", table},
              {"products", products},
              {"verdicts", jv},
              {"all_infinite", all_infinite}};
  emit(report, out_path);
  return all_infinite ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_lie(const std::string& what, char type, int rank, long long q,
            int twist, const std::string& out_path) {
  auto kind = lie::kind_from_char(type);
  auto rs = lie::build_root_system(kind, rank);
  json report{{"command", "lie " + what},
              {"type", std::string(1, type)},
              {"rank", rank}};
  if (what == "w0") {
    auto w0 = lie::longest_element(rs);
    report["w0_length"] = w0.letters.size();
    report["w0_is_minus_one"] = lie::is_minus_one(rs);
  } else {
    auto gens = lie::center_table(kind, rank, q, twist);
    report["q"] = q;
    report["twist"] = twist;
    json jg = json::array();
    const gf::Field* F = nullptr;
    for (const auto& g : gens) {
      json exps = json::array();
      F = g.z.field;
      for (gf::Fq e : g.z.exponents)
        exps.push_back(json_io::scalar_to_json(*F, e));
      jg.push_back(json{{"exponents", exps}, {"order", g.order}});
    }
    report["generators"] = jg;
  }
  emit(report, out_path);
  return 0;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& cert_path, const Caps& caps) {
  std::ifstream in(cert_path);
  if (!in) throw CLI::ValidationError("cannot open " + cert_path);
  json j;
  in >> j;
  auto cert = json_io::cert_from_json(j);
  auto G = grp::make_group(cert.group);
  auto res = json_io::verify_named(G, cert, caps.orbit_cap);
  json report{{"command", "verify"},
              {"group", cert.group.str()},
              {"kind", std::string(1, cert.kind)},
              {"ok", res.ok}};
  if (!res.ok) report["violated"] = res.violated;
  emit(report, "");
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for matrix-group racks and braidings"};
  app.require_subcommand(1);
  Caps caps;

  // survey
  std::string s_group, s_out;
  bool s_mixed_only = false;
  auto* survey = app.add_subcommand("survey", "conjugacy-class survey");
  survey->add_option("--group", s_group, "group spec, e.g. sp4:3/z")
      ->required();
  survey->add_flag("--mixed-only", s_mixed_only, "list only mixed classes");
  survey->add_option("--out", s_out, "output file (default stdout)");
  add_cap_flags(survey, caps);

  // classify
  std::string c_group, c_rep, c_out;
  auto* classify = app.add_subcommand("classify", "classify one element");
  classify->add_option("--group", c_group, "group spec")->required();
  classify->add_option("--rep", c_rep, "matrix JSON file")->required();
  classify->add_option("--out", c_out, "output file (default stdout)");

  // witness
  std::string w_id;
  bool w_all = false, w_slow = false;
  auto* witness_cmd = app.add_subcommand("witness", "replay printed witnesses");
  auto* w_run = witness_cmd->add_subcommand("run", "run witnesses");
  w_run->add_option("id", w_id, "witness id, e.g. W-SP4-9");
  w_run->add_flag("--all", w_all, "run the whole catalog");
  w_run->add_flag("--slow", w_slow, "include slow claims");
  witness_cmd->require_subcommand(1);

  // braiding
  std::string b_out;
  auto* braiding_cmd = app.add_subcommand("braiding", "diagonal braidings");
  auto* b_uno =
      braiding_cmd->add_subcommand("lemma-uno", "the full case analysis");
  b_uno->add_option("--out", b_out, "output file (default stdout)");
  braiding_cmd->require_subcommand(1);

  // lie
  std::string l_type, l_out;
  int l_rank = 0, l_twist = 1;
  long long l_q = 0;
  auto* lie_cmd = app.add_subcommand("lie", "root-system data");
  auto* l_centers = lie_cmd->add_subcommand("centers", "center generators");
  l_centers->add_option("--type", l_type, "A..G")->required();
  l_centers->add_option("--rank", l_rank, "rank")->required();
  l_centers->add_option("--q", l_q, "field size")->required();
  l_centers->add_option("--twist", l_twist, "1, 2, or 3 (triality)");
  l_centers->add_option("--out", l_out, "output file (default stdout)");
  auto* l_w0 = lie_cmd->add_subcommand("w0", "longest Weyl element");
  l_w0->add_option("--type", l_type, "A..G")->required();
  l_w0->add_option("--rank", l_rank, "rank")->required();
  l_w0->add_option("--out", l_out, "output file (default stdout)");
  lie_cmd->require_subcommand(1);

  // verify
  std::string v_cert;
  auto* verify = app.add_subcommand("verify", "replay a collapse certificate");
  verify->add_option("certificate", v_cert, "certificate JSON file")
      ->required();
  add_cap_flags(verify, caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*survey) return run_survey(s_group, s_mixed_only, s_out, caps);
    if (*classify) return run_classify(c_group, c_rep, c_out);
    if (*witness_cmd) {
      if (!w_all && w_id.empty()) {
        std::cerr << "witness run: give a witness id or --all\n";
        return 2;
      }
      return run_witness(w_id, w_all, w_slow);
    }
    if (*braiding_cmd) return run_braiding(b_out);
    if (*lie_cmd)
      return run_lie((*l_centers) ? "centers" : "w0",
                     l_type.empty() ? 'A' : l_type[0], l_rank, l_q, l_twist,
                     l_out);
    if (*verify) return run_verify(v_cert, caps);
  } catch (const witness::UnknownWitness& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json_io::JsonIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
