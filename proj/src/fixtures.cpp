// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace f4ct {

namespace {

using nlohmann::json;

Rat json_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return rat_parse(j.get<std::string>());
}

Weight json_weight(const json& j) {
  Weight w;
  for (const auto& x : j) w.push_back(json_rat(x));
  return w;
}

std::vector<int> json_word(const json& j) {
  std::vector<int> w;
  for (const auto& x : j) w.push_back(x.get<int>());
  return w;
}

std::vector<AffineForm> json_forms(const json& j) {
  std::vector<AffineForm> out;
  for (const auto& f : j) out.push_back(AffineForm{f.at(0).get<long>(), json_rat(f.at(1))});
  std::sort(out.begin(), out.end());
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  json j;
  in >> j;
  return j;
}

std::string word_text(const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (int c : w) os << "w" << c;
  return os.str();
}

}  // namespace

JacquetFixture load_jacquet_fixture(const std::string& path) {
  json j = load_json(path);
  JacquetFixture f;
  f.id = j.at("id").get<std::string>();
  f.parabolic = j.at("parabolic").get<int>();
  f.z0 = json_rat(j.at("z0"));
  for (const auto& row : j.at("rows")) {
    JacquetFixtureRow r;
    r.exp = json_weight(row.at("exp"));
    r.mult = row.at("mult").get<int>();
    r.disputed = row.value("disputed", false);
    r.note = row.value("note", "");
    f.rows.push_back(std::move(r));
  }
  return f;
}

ImagesFixture load_images_fixture(const std::string& path) {
  json j = load_json(path);
  ImagesFixture f;
  f.id = j.at("id").get<std::string>();
  f.parabolic = j.at("parabolic").get<int>();
  f.z0 = json_rat(j.at("z0"));
  for (const auto& row : j.at("rows")) {
    ImagesFixtureRow r;
    r.word = json_word(row.at("word"));
    r.dim = row.at("dim").get<int>();
    r.exp = json_weight(row.at("exp"));
    r.disputed = row.value("disputed", false);
    r.note = row.value("note", "");
    f.rows.push_back(std::move(r));
  }
  return f;
}

GlobalFixture load_global_fixture(const std::string& path) {
  json j = load_json(path);
  GlobalFixture f;
  f.id = j.at("id").get<std::string>();
  f.parabolic = j.at("parabolic").get<int>();
  f.z0 = json_rat(j.at("z0"));
  for (const auto& cls : j.at("classes")) {
    GlobalFixtureClass c;
    c.exp = json_weight(cls.at("exp"));
    c.order = cls.at("order").get<int>();
    c.label = cls.at("label").get<std::string>();
    c.disputed = cls.value("disputed", false);
    c.note = cls.value("note", "");
    for (const auto& m : cls.at("members")) {
      GlobalFixtureMember gm;
      gm.word = json_word(m.at("word"));
      gm.factor_num = json_forms(m.at("num"));
      gm.factor_den = json_forms(m.at("den"));
      c.members.push_back(std::move(gm));
    }
    f.classes.push_back(std::move(c));
  }
  return f;
}

DiffResult diff_jacquet(const WeylGroup& w, const JacquetFixture& fix) {
  DiffResult out;
  ExponentMultiset computed = geometric_lemma_exponents(w, fix.parabolic, fix.z0);
  ExponentMultiset expected;
  for (const auto& r : fix.rows) expected[r.exp] += r.mult;
  for (const auto& [exp, mult] : expected) {
    auto it = computed.find(exp);
    int got = it == computed.end() ? 0 : it->second;
    if (got != mult) {
      bool disputed = false;
      for (const auto& r : fix.rows)
        if (r.exp == exp && r.disputed) disputed = true;
      std::string line = "- " + fix.id + " exp " + weight_str(exp) + ": expected mult " +
                         std::to_string(mult) + ", computed " + std::to_string(got);
      if (disputed)
        out.lines.push_back(line + " [disputed row, not failing]");
      else
        out.mismatch(line);
    }
  }
  for (const auto& [exp, mult] : computed)
    if (!expected.count(exp))
      out.mismatch("+ " + fix.id + " computed extra exp " + weight_str(exp) + " mult " +
                   std::to_string(mult));
  return out;
}

DiffResult diff_images(const ConstantTermAnalysis& an, const ImagesFixture& fix) {
  DiffResult out;
  const auto& ctx = an.ctx();
  const WeylGroup& w = ctx.weyl();
  Weight chi = ctx.chi_line().base;
  std::map<WeylElt, int> seen;
  for (const auto& row : fix.rows) {
    WeylElt e = w.from_word_1based(row.word);
    WeylElt rep = w.coset_rep(e, ctx.levi());
    seen[rep] += 1;
    Weight exp = w.act(rep, chi);
    if (exp != row.exp) {
      out.mismatch("- " + fix.id + " word " + word_text(row.word) + ": fixture exp " +
                   weight_str(row.exp) + ", computed " + weight_str(exp));
      continue;
    }
    int rank = an.rank_of(rep);
    if (rank != row.dim) {
      std::string line = "- " + fix.id + " word " + word_text(row.word) + ": fixture dim " +
                         std::to_string(row.dim) + ", computed " + std::to_string(rank);
      if (row.disputed)
        out.lines.push_back(line + " [disputed row, not failing]");
      else
        out.mismatch(line);
    }
  }
  // every coset representative must be covered exactly once
  for (WeylElt rep : ctx.coset_reps())
    if (seen[rep] != 1)
      out.mismatch("- " + fix.id + " representative " + w.word_str(rep) + " covered " +
                   std::to_string(seen[rep]) + " times");
  return out;
}

DiffResult diff_global(const ConstantTermAnalysis& an, const GlobalFixture& fix) {
  DiffResult out;
  const auto& ctx = an.ctx();
  const WeylGroup& w = ctx.weyl();
  auto classes = an.classes();
  std::map<Weight, const EquivClass*> by_exp;
  for (const auto& c : classes) by_exp[c.exponent] = &c;
  size_t member_total = 0;
  for (const auto& fc : fix.classes) {
    auto it = by_exp.find(fc.exp);
    if (it == by_exp.end()) {
      out.mismatch("- " + fix.id + " class " + weight_str(fc.exp) + ": not found");
      continue;
    }
    const EquivClass& cls = *it->second;
    // member sets agree
    std::vector<WeylElt> fix_members;
    for (const auto& m : fc.members)
      fix_members.push_back(w.coset_rep(w.from_word_1based(m.word), ctx.levi()));
    std::sort(fix_members.begin(), fix_members.end());
    std::vector<WeylElt> got = cls.members;
    std::sort(got.begin(), got.end());
    if (fix_members != got) {
      out.mismatch("- " + fix.id + " class " + weight_str(fc.exp) + ": member sets differ");
      continue;
    }
    member_total += fc.members.size();
    // per-member reduced factors
    for (const auto& m : fc.members) {
      WeylElt e = w.coset_rep(w.from_word_1based(m.word), ctx.levi());
      ZetaProduct p = gk_product(w, fix.parabolic, e);
      if (p.num != m.factor_num || p.den != m.factor_den)
        out.mismatch("- " + fix.id + " word " + word_text(m.word) + ": factor " + p.str() +
                     " differs from fixture");
    }
    // order
    int ord = order_at(gk_product(w, fix.parabolic, cls.shortest), fix.z0);
    if (ord != fc.order)
      out.mismatch("- " + fix.id + " class " + weight_str(fc.exp) + ": order " +
                   std::to_string(ord) + " vs fixture " + std::to_string(fc.order));
    // label
    ClassReport rep = an.classify_class(cls);
    if (label_str(rep.label) != fc.label) {
      std::string line = "- " + fix.id + " class " + weight_str(fc.exp) + ": label " +
                         label_str(rep.label) + " vs fixture " + fc.label;
      if (fc.disputed)
        out.lines.push_back(line + " [disputed row, not failing]");
      else
        out.mismatch(line);
    }
  }
  if (member_total != ctx.coset_reps().size())
    out.mismatch("- " + fix.id + " covers " + std::to_string(member_total) + " of " +
                 std::to_string(ctx.coset_reps().size()) + " representatives");
  return out;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("F4CT_FIXTURES")) return env;
#ifdef F4CT_FIXTURE_DIR
  return F4CT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace f4ct
