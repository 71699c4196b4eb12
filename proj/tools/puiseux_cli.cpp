// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "puiseux/families.hpp"
#include "puiseux/fg.hpp"
#include "puiseux/props.hpp"
#include "puiseux/report.hpp"

using nlohmann::json;
using namespace puiseux;

namespace {

constexpr int kExitYes = 0;      // affirmative
constexpr int kExitNo = 1;       // negative / refuted
constexpr int kExitUnknown = 2;  // unknown / error

/// Either a finitely generated presentation or a family; lexcone allowed
/// only where the subcommand supports it.
struct Monoid {
  std::optional<FgPresentation> fg;
  std::optional<Family> family;
  std::string str() const { return fg ? fg->str() : family->str(); }

  static Monoid parse(const std::string& spec) {
    Monoid m;
    if (spec.rfind("fg:", 0) == 0) {
      m.fg = FgPresentation::parse(spec);
    } else if (spec.rfind("family:", 0) == 0) {
      m.family = Family::parse(spec);
    } else {
      throw std::invalid_argument(
          "monoid spec must start with 'fg:' or 'family:' (position 0): " +
          spec);
    }
    return m;
  }

  MembershipResult member(const Rat& q, std::size_t /*depth*/) const {
    return fg ? fg->member(q) : family->member(q);
  }
  MembershipResult divides(const Rat& a, const Rat& b) const {
    return fg ? fg->divides(a, b) : family->divides(a, b);
  }
};

json certificate_json(const Certificate& cert) {
  json terms = json::array();
  for (const Certificate::Term& t : cert.terms)
    terms.push_back({{"generator", t.generator.str()},
                     {"coefficient", t.coefficient.str()}});
  return terms;
}

json membership_json(const std::string& monoid, const Rat& q,
                     const MembershipResult& r) {
  json j = {{"monoid", monoid}, {"query", q.str()}};
  switch (r.verdict) {
    case Verdict::Member:
      j["verdict"] = "Member";
      j["certificate"] = certificate_json(*r.certificate);
      break;
    case Verdict::NonMember:
      j["verdict"] = "NonMember";
      j["obstruction"] = r.obstruction;
      break;
    case Verdict::Unknown:
      j["verdict"] = "Unknown";
      j["search_bound"] = r.search_bound->str();
      break;
  }
  return j;
}

int membership_exit(const MembershipResult& r) {
  switch (r.verdict) {
    case Verdict::Member: return kExitYes;
    case Verdict::NonMember: return kExitNo;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

void print_membership(const std::string& monoid, const Rat& q,
                      const MembershipResult& r, bool as_json) {
  if (as_json) {
    std::cout << membership_json(monoid, q, r).dump(2) << "\n";
    return;
  }
  switch (r.verdict) {
    case Verdict::Member:
      std::cout << "Member: " << q.str() << " = " << r.certificate->str()
                << "\n";
      break;
    case Verdict::NonMember:
      std::cout << "NonMember: " << r.obstruction << "\n";
      break;
    case Verdict::Unknown:
      std::cout << "Unknown at search bound " << r.search_bound->str()
                << "\n";
      break;
  }
}

/// Integer pair "x,y" for the lex cone.
std::pair<Int, Int> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("lexcone elements are integer pairs 'x,y'");
  return {Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
}

json status_json(const std::string& monoid, const PropertyStatus& st) {
  json j = {{"monoid", monoid},
            {"property", property_name(st.property)},
            {"verdict", verdict_kind_name(st.kind)},
            {"depth", st.depth}};
  if (!st.witness.empty()) {
    json w = json::object();
    for (const auto& [k, v] : st.witness) w[k] = v;
    j["witness"] = w;
  }
  if (!st.sample.empty()) {
    json s = json::array();
    for (const Rat& q : st.sample) s.push_back(q.str());
    j["sample"] = s;
  }
  if (!st.detail.empty()) j["detail"] = st.detail;
  return j;
}

/// TOML-style key=value config file; flags given on the command line win.
void load_config_file(const std::string& path, ReportConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "depth") cfg.depth = std::stoul(val);
    else if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "grid_numerator_max") cfg.grid_numerator_max = Int(val);
    else if (key == "grid_pow2_max") cfg.grid_pow2_max = std::stoi(val);
    else throw std::invalid_argument("unknown config key: " + key);
  }
}

json config_json(const ReportConfig& cfg) {
  json depths = json::array();
  for (std::size_t d : cfg.truncation_depths) depths.push_back(d);
  return {{"depth", cfg.depth},
          {"seed", cfg.seed},
          {"grid_numerator_max", cfg.grid_numerator_max.str()},
          {"grid_pow2_max", cfg.grid_pow2_max},
          {"truncation_depths", depths}};
}

json report_json(const ReportDocument& doc) {
  json claims = json::array();
  for (const ClaimRecord& c : doc.claims)
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"status", c.passed ? "pass" : "fail"},
                      {"evidence", c.evidence}});
  return {{"tool_version", doc.tool_version},
          {"config", config_json(doc.config)},
          {"claims", claims},
          {"all_passed", doc.all_passed()}};
}

std::string report_markdown(const ReportDocument& doc) {
  std::string md = "# Claim report\n\nTool: " + doc.tool_version +
                   " | depth " + std::to_string(doc.config.depth) +
                   " | seed " + std::to_string(doc.config.seed) + "\n\n";
  md += "| claim | status | evidence |\n|---|---|---|\n";
  for (const ClaimRecord& c : doc.claims)
    md += "| " + c.id + " | " + (c.passed ? "pass" : "FAIL") + " | " +
          c.evidence + " |\n";
  md += "\n";
  for (const ClaimRecord& c : doc.claims)
    md += "- **" + c.id + "**: " + c.statement + "\n";
  return md;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Puiseux monoids: membership, "
               "divisibility, atoms, and the Furstenberg property "
               "hierarchy"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string config_path;
  std::size_t depth = 50;
  std::uint64_t seed = ReportConfig{}.seed;
  bool depth_set = false, seed_set = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--config", config_path,
                 "key=value config file (depth, seed, grid_numerator_max, "
                 "grid_pow2_max); flags override");
  app.add_option("--depth", depth, "search/report depth")
      ->each([&](const std::string&) { depth_set = true; });
  app.add_option("--seed", seed, "seed for randomized checks")
      ->each([&](const std::string&) { seed_set = true; });

  std::string spec, q_text, a_text, b_text, out_path, grid_text;
  std::size_t atom_count = 10;

  CLI::App* c_member = app.add_subcommand("member", "membership of q");
  c_member->add_option("spec", spec)->required();
  c_member->add_option("q", q_text)->required();

  CLI::App* c_divides = app.add_subcommand("divides", "does a divide b");
  c_divides->add_option("spec", spec)->required();
  c_divides->add_option("a", a_text)->required();
  c_divides->add_option("b", b_text)->required();

  CLI::App* c_atoms = app.add_subcommand("atoms", "list atoms");
  c_atoms->add_option("spec", spec)->required();
  c_atoms->add_option("--count", atom_count, "atoms to list (families)");

  CLI::App* c_props = app.add_subcommand(
      "props", "property verdicts with verified witnesses");
  c_props->add_option("spec", spec)->required();

  CLI::App* c_report = app.add_subcommand(
      "report", "run the full claim suite, write JSON + markdown");
  c_report->add_option("--out", out_path, "output path base (.json/.md)");

  CLI::App* c_cross = app.add_subcommand(
      "crosscheck", "differential test: oracle vs truncations");
  c_cross->add_option("spec", spec)->required();
  c_cross->add_option("--grid", grid_text, "a_max,pow2_max");

  for (CLI::App* sub : app.get_subcommands(/*filter=*/nullptr))
    sub->fallthrough();  // accept global flags after the subcommand

  CLI11_PARSE(app, argc, argv);

  try {
    ReportConfig cfg;
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (depth_set) cfg.depth = depth;
    if (seed_set) cfg.seed = seed;
    if (!grid_text.empty()) {
      auto comma = grid_text.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--grid expects a_max,pow2_max");
      cfg.grid_numerator_max = Int(grid_text.substr(0, comma));
      cfg.grid_pow2_max = std::stoi(grid_text.substr(comma + 1));
    }

    if (*c_member) {
      Monoid m = Monoid::parse(spec);
      if (m.family && m.family->is_lexcone()) {
        auto [x, y] = parse_pair(q_text);
        bool in = Family::lexcone_member(x, y);
        if (as_json)
          std::cout << json{{"monoid", m.str()},
                            {"query", q_text},
                            {"verdict", in ? "Member" : "NonMember"}}
                           .dump(2)
                    << "\n";
        else
          std::cout << (in ? "Member" : "NonMember") << "\n";
        return in ? kExitYes : kExitNo;
      }
      Rat q = Rat::parse(q_text);
      MembershipResult r = m.member(q, cfg.depth);
      print_membership(m.str(), q, r, as_json);
      return membership_exit(r);
    }

    if (*c_divides) {
      Monoid m = Monoid::parse(spec);
      if (m.family && m.family->is_lexcone()) {
        bool d = Family::lexcone_divides(parse_pair(a_text),
                                         parse_pair(b_text));
        if (as_json)
          std::cout << json{{"monoid", m.str()},
                            {"a", a_text},
                            {"b", b_text},
                            {"verdict", d ? "Member" : "NonMember"}}
                           .dump(2)
                    << "\n";
        else
          std::cout << (d ? "divides" : "does not divide") << "\n";
        return d ? kExitYes : kExitNo;
      }
      Rat a = Rat::parse(a_text), b = Rat::parse(b_text);
      MembershipResult r = m.divides(a, b);
      print_membership(m.str(), b - a, r, as_json);
      return membership_exit(r);
    }

    if (*c_atoms) {
      Monoid m = Monoid::parse(spec);
      std::vector<Rat> atoms =
          m.fg ? m.fg->atoms() : m.family->claimed_atoms(atom_count);
      if (as_json) {
        json arr = json::array();
        for (const Rat& a : atoms) arr.push_back(a.str());
        std::cout << json{{"monoid", m.str()}, {"atoms", arr}}.dump(2)
                  << "\n";
      } else {
        for (const Rat& a : atoms) std::cout << a.str() << "\n";
      }
      return kExitYes;
    }

    if (*c_props) {
      Monoid m = Monoid::parse(spec);
      if (!m.family)
        throw std::invalid_argument(
            "props needs a family spec; finitely generated monoids are "
            "atomic with the listed atom set");
      std::vector<PropertyStatus> statuses =
          property_report(*m.family, cfg.depth);
      if (as_json) {
        json arr = json::array();
        for (const PropertyStatus& st : statuses)
          arr.push_back(status_json(m.str(), st));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const PropertyStatus& st : statuses)
          std::cout << property_name(st.property) << ": "
                    << verdict_kind_name(st.kind)
                    << (st.detail.empty() ? "" : " — " + st.detail) << "\n";
      }
      return kExitYes;
    }

    if (*c_report) {
      ReportDocument doc = run_claim_suite(cfg);
      json j = report_json(doc);
      if (!out_path.empty()) {
        std::ofstream(out_path + ".json") << j.dump(2) << "\n";
        std::ofstream(out_path + ".md") << report_markdown(doc);
      }
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const ClaimRecord& c : doc.claims)
          std::cout << (c.passed ? "pass " : "FAIL ") << c.id << " ("
                    << c.evidence << ")\n";
        std::cout << (doc.all_passed() ? "all claims pass"
                                       : "CLAIM FAILURES PRESENT")
                  << "\n";
      }
      return doc.all_passed() ? kExitYes : kExitNo;
    }

    if (*c_cross) {
      Monoid m = Monoid::parse(spec);
      if (!m.family)
        throw std::invalid_argument("crosscheck needs a family spec");
      CrosscheckResult r = crosscheck_family(*m.family, cfg);
      if (as_json) {
        json j = {{"monoid", m.str()},
                  {"queries", r.queries},
                  {"members", r.members},
                  {"unknown_truncations", r.unknown_truncations},
                  {"disagreements", r.disagreements}};
        if (r.first_counterexample) {
          j["first_counterexample"] = r.first_counterexample->str();
          j["detail"] = r.detail;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r.queries << " queries, " << r.members << " members, "
                  << r.unknown_truncations << " truncation unknowns, "
                  << r.disagreements << " disagreements\n";
        if (r.first_counterexample)
          std::cout << "first counterexample: "
                    << r.first_counterexample->str() << " (" << r.detail
                    << ")\n";
      }
      return r.disagreements == 0 ? kExitYes : kExitNo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitUnknown;
}
