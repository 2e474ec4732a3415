#include "tight/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tight/analysis.hpp"
#include "tight/classification.hpp"
#include "tight/coset_enumeration.hpp"
#include "tight/error.hpp"
#include "tight/families.hpp"
#include "tight/perm_group.hpp"

namespace tight {

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotNormal:
    case ErrorKind::BadParameters: return 1;
    case ErrorKind::Overflow:
    case ErrorKind::BudgetExceeded: return 2;
    case ErrorKind::Parse: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A file path, or inline text with ';' separating lines. Text starting with
// "family" is a family spec, anything else a presentation.
Construction load_input(const std::string& arg) {
  std::string text;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    text = read_file(arg);
  } else {
    text = arg;
    std::replace(text.begin(), text.end(), ';', '\n');
  }
  const std::string body = trim(text);
  if (body.rfind("family", 0) == 0) return build(parse_family_spec(body));
  return single(parse_presentation(text));
}

nlohmann::json orders_json(const Realization& g) {
  const auto o = g.gen_orders();
  return {{"order", g.order()}, {"generator_orders", {o[0], o[1]}}};
}

struct Options {
  std::string input;
  std::string input_b;
  std::vector<std::string> words;
  bool json = false;
  std::size_t max_cosets = 0;
  long max_flags = 2000;
  bool verify = false;
  std::string atlas;
  int p = 0;
  int q = 0;
  long budget = 600;
  std::string dedup = "none";
  int jobs = 1;
};

int analyze(const Options& o, std::ostream& out) {
  const Construction c = load_input(o.input);
  ClassificationReport r;
  if (!c.is_mix()) {
    r = o.max_cosets ? classify(c.parts[0], o.max_cosets) : classify(c.parts[0]);
  } else {
    r = classify(realize(c));
  }
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << to_text(r);
  }
  return 0;
}

int realize_cmd(const Options& o, std::ostream& out) {
  const Construction c = load_input(o.input);
  const Realization g = (!c.is_mix() && o.max_cosets) ? realize(c.parts[0], o.max_cosets) : realize(c);
  if (o.json) {
    out << orders_json(g).dump(2) << "\n";
  } else {
    const auto ord = g.gen_orders();
    out << "order " << g.order() << "\n";
    out << "generator orders " << ord[0] << " " << ord[1] << "\n";
  }
  return 0;
}

int family_cmd(const Options& o, std::ostream& out) {
  std::string text;
  for (const std::string& w : o.words) text += (text.empty() ? "" : " ") + w;
  const FamilySpec spec = parse_family_spec(text);
  const Construction c = build(spec);
  const auto [p, q] = claimed_type(spec);
  if (o.json) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Presentation& pr : c.parts) parts.push_back(format_presentation(pr));
    out << nlohmann::json{{"family", format_family_spec(spec)},
                          {"type", {p, q}},
                          {"construction", describe(c)},
                          {"presentations", parts}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "# " << format_family_spec(spec) << "\n";
  out << "# type {" << p << "," << q << "}\n";
  if (c.is_mix()) out << "# " << describe(c) << "\n";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (c.is_mix()) out << "# part " << i + 1 << "\n";
    out << format_presentation(c.parts[i]);
  }
  return 0;
}

int mix_cmd(const Options& o, std::ostream& out) {
  const Construction a = load_input(o.input);
  const Construction b = load_input(o.input_b);
  const Realization g1 = realize(a);
  const Realization g2 = realize(b);
  const Realization m = mix(g1, g2);
  nlohmann::json j = orders_json(m);
  j["orders"] = {g1.order(), g2.order()};
  if (!a.is_mix() && !b.is_mix()) {
    const Realization c = realize(comix(a.parts[0], b.parts[0]));
    j["comix_order"] = c.order();
    j["identity_holds"] = m.order() * c.order() == g1.order() * g2.order();
  } else {
    j["comix_order"] = nullptr;
    j["identity_holds"] = nullptr;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return 0;
  }
  const auto ord = m.gen_orders();
  out << "mix order " << m.order() << "\n";
  out << "generator orders " << ord[0] << " " << ord[1] << "\n";
  out << "factor orders " << g1.order() << " " << g2.order() << "\n";
  if (j["comix_order"].is_null()) {
    out << "comix order n/a\n";
  } else {
    out << "comix order " << j["comix_order"].get<std::uint64_t>() << "\n";
    out << "mix-size identity " << (j["identity_holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  }
  return 0;
}

int census_cmd(const Options& o, std::ostream& out) {
  const auto entries = census(o.max_flags, o.verify ? CensusMode::Verified : CensusMode::Predicate, o.jobs);
  std::optional<AtlasComparison> cmp;
  if (!o.atlas.empty()) cmp = compare_with_atlas(entries, read_atlas_csv(read_file(o.atlas)));
  if (o.json) {
    nlohmann::json j{{"max_flags", o.max_flags}, {"verified_mode", o.verify}, {"entries", to_json(entries)}};
    if (cmp) j["atlas"] = to_json(*cmp);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << census_table(entries);
  std::size_t failures = 0;
  for (const CensusEntry& e : entries) {
    if (e.verification && !e.verification->verified) {
      ++failures;
      out << "unverified {" << e.type.p << "," << e.type.q << "}: " << e.verification->reason << "\n";
    }
  }
  out << entries.size() << " types";
  if (o.verify) out << ", " << entries.size() - failures << " verified";
  out << "\n";
  if (cmp) {
    out << "atlas " << (cmp->equal() ? "matches" : "differs") << "\n";
    for (const auto& t : cmp->missing_from_census) out << "missing {" << t.p << "," << t.q << "}\n";
    for (const auto& t : cmp->extra_in_census) out << "extra {" << t.p << "," << t.q << "}\n";
  }
  return 0;
}

int search_cmd(const Options& o, std::ostream& out) {
  SearchOptions so;
  so.dedup = parse_dedup(o.dedup);
  so.budget = o.budget;
  so.jobs = o.jobs;
  const SearchResult r = exhaustive_search({o.p, o.q}, so);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
    return 0;
  }
  out << "type {" << o.p << "," << o.q << "} dedup " << to_string(r.dedup) << "\n";
  out << r.buckets.size() << " group buckets\n";
  for (std::size_t i = 0; i < r.buckets.size(); ++i) {
    const SearchBucket& b = r.buckets[i];
    const Tuple& t = b.representative;
    out << "[" << i << "] gp " << o.p << " " << o.q << " : " << t.i1 << " " << t.j1 << " " << t.i2 << " "
        << t.j2 << "  members " << b.members.size() << "  enantiomorph [" << b.enantiomorph << "]\n";
  }
  return 0;
}

int atlas_compare_cmd(const Options& o, std::ostream& out) {
  const auto entries = census(o.max_flags, CensusMode::Predicate, 1);
  const AtlasComparison cmp = compare_with_atlas(entries, read_atlas_csv(read_file(o.input)));
  if (o.json) {
    out << to_json(cmp).dump(2) << "\n";
  } else {
    out << "atlas " << (cmp.equal() ? "matches" : "differs") << "\n";
    for (const auto& t : cmp.missing_from_census) out << "missing {" << t.p << "," << t.q << "}\n";
    for (const auto& t : cmp.extra_in_census) out << "extra {" << t.p << "," << t.q << "}\n";
  }
  return cmp.equal() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight chiral polyhedra: rotation groups, families and census"};
  app.require_subcommand(1, 1);
  Options o;

  auto* analyze_c = app.add_subcommand("analyze", "Classify a presentation or family member");
  analyze_c->add_option("input", o.input, "File or inline text")->required();
  analyze_c->add_flag("--json", o.json);
  analyze_c->add_option("--max-cosets", o.max_cosets, "Coset bound (default 4pq+64)");

  auto* realize_c = app.add_subcommand("realize", "Print the group order and generator orders");
  realize_c->add_option("input", o.input, "File or inline text")->required();
  realize_c->add_flag("--json", o.json);
  realize_c->add_option("--max-cosets", o.max_cosets, "Coset bound (default 4pq+64)");

  auto* family_c = app.add_subcommand("family", "Print the presentation of a family member");
  family_c->add_option("spec", o.words, "e.g. odd-atomic m=3 beta=2 k=1")->required();
  family_c->add_flag("--json", o.json);

  auto* mix_c = app.add_subcommand("mix", "Mix two groups and check the mix-size identity");
  mix_c->add_option("a", o.input, "File or inline text")->required();
  mix_c->add_option("b", o.input_b, "File or inline text")->required();
  mix_c->add_flag("--json", o.json);

  auto* census_c = app.add_subcommand("census", "Admissible types with at most N flags");
  census_c->add_option("--max-flags", o.max_flags)->required()->check(CLI::Range(4L, 100000000L));
  census_c->add_flag("--verify", o.verify, "Realize and check every witness");
  census_c->add_option("--atlas", o.atlas, "CSV with header p,q to compare against");
  census_c->add_flag("--json", o.json);
  census_c->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* search_c = app.add_subcommand("search", "Exhaustive search over family tuples");
  search_c->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  search_c->add_option("--q", o.q)->required()->check(CLI::PositiveNumber);
  search_c->add_option("--budget", o.budget, "Largest p*q searched");
  search_c->add_option("--dedup", o.dedup, "none | enantiomorph | enantiomorph-and-dual");
  search_c->add_flag("--json", o.json);
  search_c->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* atlas_c = app.add_subcommand("atlas-compare", "Compare an atlas CSV with the census");
  atlas_c->add_option("csv", o.input)->required();
  atlas_c->add_option("--max-flags", o.max_flags);
  atlas_c->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 3;
  }

  try {
    if (*analyze_c) return analyze(o, out);
    if (*realize_c) return realize_cmd(o, out);
    if (*family_c) return family_cmd(o, out);
    if (*mix_c) return mix_cmd(o, out);
    if (*census_c) return census_cmd(o, out);
    if (*search_c) return search_cmd(o, out);
    if (*atlas_c) return atlas_compare_cmd(o, out);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 4;
  }
  return 4;
}

}  // namespace tight
