// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: compute and verify the Jacquet-module tables, the
// per-word intertwining-operator rank tables, and the symbolic
// Gindikin-Karpelevich class data.

#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "f4ct/constant_term.hpp"
#include "f4ct/fixtures.hpp"
#include "json.hpp"

using namespace f4ct;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  int parabolic = 0;
  std::string z;
  bool as_json = false;
  bool as_csv = false;
  bool verify = false;
  int truncation = 2;
  std::string fixtures = default_fixture_dir();
  std::string only;
  std::vector<int> word;
  int threads = 0;
};

const WeylGroup& group() {
  static RootSystem rs = RootSystem::f4();
  static WeylGroup w(rs);
  return w;
}

Rat parse_z(const std::string& s) { return rat_parse(s); }

bool known_point(int parabolic, const Rat& z0) {
  return (parabolic == 1 && z0 == Rat(1)) || (parabolic == 2 && z0 == Rat(5, 2)) ||
         (parabolic == 3 && z0 == Rat(1, 2)) || (parabolic == 4 && z0 == Rat(5, 2));
}

std::string fixture_file(const Options& opt, const std::string& kind) {
  if (kind == "jacquet") {
    if (opt.parabolic == 4) return opt.fixtures + "/d1.json";
    if (opt.parabolic == 1) return opt.fixtures + "/d3.json";
  } else if (kind == "images") {
    if (opt.parabolic == 4) return opt.fixtures + "/d2.json";
    if (opt.parabolic == 1) return opt.fixtures + "/d4.json";
  } else if (kind == "gk") {
    if (opt.parabolic == 4) return opt.fixtures + "/e1.json";
    if (opt.parabolic == 1) return opt.fixtures + "/e2.json";
  }
  return "";
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w) a.push_back(rat_str(c));
  return a;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_jacquet(const Options& opt) {
  const WeylGroup& w = group();
  Rat z0 = parse_z(opt.z);
  auto exps = geometric_lemma_exponents(w, opt.parabolic, z0);
  if (opt.as_json) {
    json rows = json::array();
    for (const auto& [e, m] : exps) rows.push_back({{"exp", weight_json(e)}, {"mult", m}});
    std::cout << json{{"parabolic", opt.parabolic}, {"z0", rat_str(z0)}, {"rows", rows}}.dump(1)
              << "\n";
  } else if (opt.as_csv) {
    std::cout << "exp,mult\n";
    for (const auto& [e, m] : exps) std::cout << csv_escape(weight_str(e)) << "," << m << "\n";
  } else {
    std::cout << "Jacquet module exponents for P" << opt.parabolic << " at z0 = " << rat_str(z0)
              << "\n";
    for (const auto& [e, m] : exps) std::cout << "  " << weight_str(e) << "  x" << m << "\n";
  }
  if (opt.verify) {
    std::string file = fixture_file(opt, "jacquet");
    if (file.empty()) {
      std::cerr << "no jacquet fixture for P" << opt.parabolic << "\n";
      return kExitUsage;
    }
    auto fix = load_jacquet_fixture(file);
    auto diff = diff_jacquet(w, fix);
    for (const auto& l : diff.lines) std::cerr << l << "\n";
    if (!diff.ok) return kExitVerifyFail;
    std::cout << "verify " << fix.id << ": OK\n";
  }
  return 0;
}

int cmd_images(const Options& opt) {
  const WeylGroup& w = group();
  Rat z0 = parse_z(opt.z);
  ConstantTermAnalysis an(w, opt.parabolic, z0, opt.threads);
  const auto& ctx = an.ctx();
  Weight chi = ctx.chi_line().base;
  std::vector<WeylElt> reps;
  if (!opt.word.empty()) {
    reps.push_back(w.coset_rep(w.from_word_1based(opt.word), ctx.levi()));
  } else {
    reps = ctx.coset_reps();
    an.compute_all_ranks();
  }
  json rows = json::array();
  for (WeylElt u : reps) {
    int rank = an.rank_of(u);
    Weight exp = w.act(u, chi);
    rows.push_back(
        {{"word", w.word_str(u)}, {"exp", weight_json(exp)}, {"rank", rank}});
  }
  if (opt.as_json) {
    std::cout << json{{"parabolic", opt.parabolic}, {"z0", rat_str(z0)}, {"rows", rows}}.dump(1)
              << "\n";
  } else if (opt.as_csv) {
    std::cout << "word,exp,rank\n";
    for (const auto& r : rows)
      std::cout << csv_escape(r["word"].get<std::string>()) << ","
                << csv_escape(r["exp"].dump()) << "," << r["rank"].get<int>() << "\n";
  } else {
    std::cout << "Images of the normalized intertwining operators, P" << opt.parabolic
              << " at z0 = " << rat_str(z0) << "\n";
    for (const auto& r : rows)
      std::cout << "  " << r["word"].get<std::string>() << "  dim " << r["rank"].get<int>()
                << "  exp " << r["exp"].dump() << "\n";
  }
  if (opt.verify) {
    std::string file = fixture_file(opt, "images");
    if (file.empty()) {
      if (opt.parabolic == 3) {
        // the thesis's P3 table is absent from the text; the computed table
        // is its reconstruction, checked against the prose facts instead
        std::cout << "P3 per-word table has no printed fixture; "
                  << "emitting the reconstruction (prose facts checked by 'verify')\n";
        return 0;
      }
      std::cerr << "no images fixture for P" << opt.parabolic << "\n";
      return kExitUsage;
    }
    auto fix = load_images_fixture(file);
    auto diff = diff_images(an, fix);
    for (const auto& l : diff.lines) std::cerr << l << "\n";
    if (!diff.ok) return kExitVerifyFail;
    std::cout << "verify " << fix.id << ": OK\n";
  }
  return 0;
}

int cmd_gk(const Options& opt) {
  const WeylGroup& w = group();
  Rat z0 = parse_z(opt.z);
  ConstantTermAnalysis an(w, opt.parabolic, z0, opt.threads);
  json rows = json::array();
  for (const auto& cls : an.classes()) {
    ClassReport rep = an.classify_class(cls);
    json members = json::array();
    for (size_t k = 0; k < cls.members.size(); ++k) {
      ZetaProduct p = gk_product(w, opt.parabolic, cls.members[k]);
      members.push_back({{"word", w.word_str(cls.members[k])},
                         {"factor", p.str()},
                         {"ratio", rat_str(rep.ratios[k])}});
    }
    rows.push_back({{"exp", weight_json(cls.exponent)},
                    {"order", rep.c_order},
                    {"label", label_str(rep.label)},
                    {"members", members}});
  }
  if (opt.as_json) {
    std::cout << json{{"parabolic", opt.parabolic}, {"z0", rat_str(z0)}, {"classes", rows}}.dump(1)
              << "\n";
  } else {
    std::cout << "Gindikin-Karpelevich classes, P" << opt.parabolic << " at z0 = " << rat_str(z0)
              << "\n";
    for (const auto& r : rows) {
      std::cout << "  exp " << r["exp"].dump() << "  order " << r["order"].get<int>() << "  "
                << r["label"].get<std::string>() << "\n";
      for (const auto& m : r["members"])
        std::cout << "    " << m["word"].get<std::string>() << "  "
                  << m["factor"].get<std::string>() << "  ratio " << m["ratio"].get<std::string>()
                  << "\n";
    }
  }
  if (opt.verify) {
    std::string file = fixture_file(opt, "gk");
    if (file.empty()) {
      std::cerr << "no gk fixture for P" << opt.parabolic << "\n";
      return kExitUsage;
    }
    auto fix = load_global_fixture(file);
    auto diff = diff_global(an, fix);
    for (const auto& l : diff.lines) std::cerr << l << "\n";
    if (!diff.ok) return kExitVerifyFail;
    std::cout << "verify " << fix.id << ": OK\n";
  }
  return 0;
}

struct VerifySummary {
  int passed = 0, failed = 0;
  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n" << std::flush;
    (ok ? passed : failed) += 1;
  }
};

int cmd_verify(const Options& opt);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of the F4 degenerate-Eisenstein constant-term data"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool need_parabolic) {
    if (need_parabolic) {
      sub->add_option("--parabolic,-p", opt.parabolic, "maximal parabolic index (1-4)")
          ->required()
          ->check(CLI::Range(1, 4));
      sub->add_option("--z", opt.z, "rational evaluation point, e.g. 5/2")->required();
    }
    sub->add_flag("--json", opt.as_json, "JSON output (UTF-8, sorted keys)");
    sub->add_flag("--csv", opt.as_csv, "CSV output");
    sub->add_flag("--verify", opt.verify, "diff against the bundled fixtures");
    sub->add_option("--truncation", opt.truncation, "series truncation order");
    sub->add_option("--fixtures", opt.fixtures, "fixture directory");
    sub->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  };

  CLI::App* jac = app.add_subcommand("jacquet", "Jacquet-module exponent multiset");
  add_common(jac, true);
  CLI::App* img = app.add_subcommand("images", "per-word certified image ranks");
  add_common(img, true);
  img->add_option("--word", opt.word, "single word (1-based letters)");
  CLI::App* gk = app.add_subcommand("gk", "Gindikin-Karpelevich class table");
  add_common(gk, true);
  CLI::App* ver = app.add_subcommand("verify", "run the full verification suite");
  add_common(ver, false);
  ver->add_option("--only", opt.only, "restrict to one module (scalars|jacquet|images|gk|global)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (jac->parsed()) return cmd_jacquet(opt);
    if (img->parsed()) return cmd_images(opt);
    if (gk->parsed()) return cmd_gk(opt);
    if (ver->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}

namespace {

int cmd_verify(const Options& opt) {
  const WeylGroup& w = group();
  VerifySummary sum;
  auto want = [&](const std::string& name) { return opt.only.empty() || opt.only == name; };

  if (want("jacquet")) {
    for (const char* file : {"/d1.json", "/d3.json"}) {
      auto fix = load_jacquet_fixture(opt.fixtures + file);
      auto diff = diff_jacquet(w, fix);
      for (const auto& l : diff.lines) std::cout << "  " << l << "\n";
      sum.report("jacquet " + fix.id, diff.ok);
    }
  }
  if (want("images")) {
    {
      ConstantTermAnalysis an4(w, 4, Rat(5, 2), opt.threads);
      auto fix = load_images_fixture(opt.fixtures + "/d2.json");
      an4.compute_all_ranks();
      auto diff = diff_images(an4, fix);
      for (const auto& l : diff.lines) std::cout << "  " << l << "\n";
      sum.report("images D.2", diff.ok);
    }
    {
      ConstantTermAnalysis an1(w, 1, Rat(1), opt.threads);
      auto fix = load_images_fixture(opt.fixtures + "/d4.json");
      an1.compute_all_ranks();
      auto diff = diff_images(an1, fix);
      for (const auto& l : diff.lines) std::cout << "  " << l << "\n";
      sum.report("images D.4", diff.ok);
    }
  }
  if (want("gk")) {
    {
      ConstantTermAnalysis an4(w, 4, Rat(5, 2), opt.threads);
      auto fix = load_global_fixture(opt.fixtures + "/e1.json");
      auto diff = diff_global(an4, fix);
      for (const auto& l : diff.lines) std::cout << "  " << l << "\n";
      sum.report("gk E.1", diff.ok);
    }
    {
      ConstantTermAnalysis an1(w, 1, Rat(1), opt.threads);
      auto fix = load_global_fixture(opt.fixtures + "/e2.json");
      auto diff = diff_global(an1, fix);
      for (const auto& l : diff.lines) std::cout << "  " << l << "\n";
      sum.report("gk E.2", diff.ok);
    }
  }
  if (want("global")) {
    std::vector<std::tuple<int, Rat, int>> expect{
        {1, Rat(1), 1}, {4, Rat(5, 2), 1}, {3, Rat(1, 2), 2}, {2, Rat(5, 2), 1}};
    for (auto& [p, z0, order] : expect) {
      ConstantTermAnalysis an(w, p, z0, opt.threads);
      int got = an.eisenstein_order();
      sum.report("eisenstein order P" + std::to_string(p), got == order,
                 "computed " + std::to_string(got));
    }
  }
  std::cout << sum.passed << " passed, " << sum.failed << " failed\n";
  return sum.failed ? kExitVerifyFail : 0;
}

}  // namespace
