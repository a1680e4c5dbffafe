#include "dimon/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/factorize.hpp"
#include "dimon/formulas.hpp"
#include "dimon/generators.hpp"
#include "dimon/io.hpp"
#include "dimon/monoid.hpp"
#include "dimon/rank.hpp"
#include "dimon/verify.hpp"

namespace dimon {

namespace {

using nlohmann::json;

struct Options {
  std::string kind;
  int n = 0;
  std::string element;
  unsigned workers = 0;
  bool json = false;
  bool enumerate = false;
  bool certify = false;
  std::string out_file;
  std::string format = "jsonl";
  bool gzip = false;
  std::string relation = "J";
  int max_n = 12;
  int inject_failure = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
};

void emit_json(std::ostream& out, json payload) {
  payload["schema_version"] = kSchemaVersion;
  out << payload.dump() << '\n';
}

MonoidKind studied_kind(std::string const& token) {
  MonoidKind const kind = parse_kind(token);
  if (kind == MonoidKind::DI) {
    throw DomainError("kind di is only accepted by enumerate and greens");
  }
  return kind;
}

void require_degree(int n) {
  if (n < 3 || n > kMaxDegree) {
    throw DomainError("n must lie in 3.." + std::to_string(kMaxDegree) +
                      ", got " + std::to_string(n));
  }
}

EnumeratedMonoid standard_closure(MonoidKind kind, int n, unsigned workers) {
  auto const gens = standard_generators(kind, n).values();
  return close(n, gens, workers);
}

int cmd_card(Options const& o, std::ostream& out) {
  MonoidKind const kind = studied_kind(o.kind);
  require_degree(o.n);
  std::uint64_t const formula = card(kind, o.n);
  if (!o.enumerate) {
    if (o.json) {
      emit_json(out, {{"kind", to_string(kind)}, {"n", o.n}, {"formula", formula}});
    } else {
      out << "formula=" << formula << '\n';
    }
    return kExitOk;
  }
  std::uint64_t const enumerated = standard_closure(kind, o.n, o.workers).size();
  bool const pass = enumerated == formula;
  if (o.json) {
    emit_json(out, {{"kind", to_string(kind)},
                    {"n", o.n},
                    {"formula", formula},
                    {"enumerated", enumerated},
                    {"pass", pass}});
  } else {
    out << "formula=" << formula << " enumerated=" << enumerated << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailure;
}

int cmd_enumerate(Options const& o, std::ostream& out) {
  MonoidKind const kind = parse_kind(o.kind);
  require_degree(o.n);
  ExportFormat const format = parse_export_format(o.format);
  if (o.gzip && o.out_file.empty()) {
    throw ParseError("--gzip requires --out");
  }
  auto const m = standard_closure(kind, o.n, o.workers);
  if (o.out_file.empty()) {
    out << format_elements(m.elements(), format);
  } else {
    write_elements_file(o.out_file, m.elements(), format, o.gzip);
  }
  return kExitOk;
}

int cmd_greens(Options const& o, std::ostream& out) {
  MonoidKind const kind = parse_kind(o.kind);
  require_degree(o.n);
  static std::map<std::string, GreenRelation> const relations = {
      {"J", GreenRelation::D},
      {"D", GreenRelation::D},
      {"L", GreenRelation::L},
      {"R", GreenRelation::R},
      {"H", GreenRelation::H}};
  auto const it = relations.find(o.relation);
  if (it == relations.end()) {
    throw ParseError("unknown relation '" + o.relation + "' (expected J|L|R|H)");
  }
  auto const m = standard_closure(kind, o.n, o.workers);
  auto const g = green_structural(m);
  std::vector<std::uint32_t> const* classes = &g.d_class;
  std::size_t count = g.d_count;
  switch (it->second) {
    case GreenRelation::L: classes = &g.l_class; count = g.l_count; break;
    case GreenRelation::R: classes = &g.r_class; count = g.r_count; break;
    case GreenRelation::H: classes = &g.h_class; count = g.h_count; break;
    case GreenRelation::D: break;
  }
  std::vector<std::size_t> size(count, 0);
  std::vector<int> rank(count, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    ++size[(*classes)[i]];
    rank[(*classes)[i]] = m.elements()[i].rank();
  }
  // (rank, class size) -> number of classes
  std::map<std::pair<int, std::size_t>, std::size_t> histogram;
  for (std::size_t c = 0; c < count; ++c) ++histogram[{rank[c], size[c]}];

  if (o.json) {
    json rows = json::array();
    for (auto const& [key, number] : histogram) {
      rows.push_back({{"rank", key.first},
                      {"class_size", key.second},
                      {"classes", number}});
    }
    emit_json(out, {{"kind", to_string(kind)},
                    {"n", o.n},
                    {"relation", o.relation},
                    {"classes", count},
                    {"histogram", rows}});
    return kExitOk;
  }
  out << "relation=" << o.relation << " classes=" << count << '\n';
  out << "rank,class_size,classes\n";
  for (auto const& [key, number] : histogram) {
    out << key.first << ',' << key.second << ',' << number << '\n';
  }
  return kExitOk;
}

int cmd_classify(Options const& o, std::ostream& out) {
  PartialPerm const a = parse_partial_perm(o.element);
  OrderFlags const flags = classify_order(a);
  MembershipReport const report = classify(a);
  std::vector<std::pair<std::string, bool>> const rows = {
      {"order_preserving", flags.order_preserving},
      {"order_reversing", flags.order_reversing},
      {"orientation_preserving", flags.orientation_preserving},
      {"orientation_reversing", flags.orientation_reversing},
      {"in_DI", report.in_DI},
      {"in_ODI", report.in_ODI},
      {"in_MDI", report.in_MDI},
      {"in_OPDI", report.in_OPDI}};
  if (o.json) {
    json payload = {{"element", to_string(a)},
                    {"extensions", report.extensions.size()}};
    for (auto const& [key, value] : rows) payload[key] = value;
    emit_json(out, payload);
    return kExitOk;
  }
  out << "element=" << to_string(a) << '\n';
  for (auto const& [key, value] : rows) {
    out << key << '=' << (value ? "true" : "false") << '\n';
  }
  out << "extensions=" << report.extensions.size() << '\n';
  return kExitOk;
}

int cmd_extensions(Options const& o, std::ostream& out) {
  PartialPerm const a = parse_partial_perm(o.element);
  if (a.degree() < 3) throw DomainError("dihedral extensions need n >= 3");
  auto const ext = extensions(a);
  if (o.json) {
    json list = json::array();
    for (auto const& s : ext) list.push_back(to_string(s));
    emit_json(out, {{"element", to_string(a)},
                    {"count", ext.size()},
                    {"extensions", list}});
    return kExitOk;
  }
  out << "count=" << ext.size() << '\n';
  for (auto const& s : ext) out << to_string(s) << '\n';
  return kExitOk;
}

int cmd_factorize(Options const& o, std::ostream& out) {
  MonoidKind const kind = studied_kind(o.kind);
  PartialPerm const a = parse_partial_perm(o.element);
  require_degree(a.degree());
  Word const w = factorize(a, kind);
  bool const roundtrip = evaluate(w, a.degree()) == a;
  if (o.json) {
    emit_json(out, {{"element", to_string(a)},
                    {"kind", to_string(kind)},
                    {"word", to_string(w)},
                    {"length", w.size()},
                    {"roundtrip", roundtrip}});
  } else {
    out << "word=" << to_string(w) << '\n';
    out << "roundtrip=" << (roundtrip ? "PASS" : "FAIL") << '\n';
  }
  return roundtrip ? kExitOk : kExitVerificationFailure;
}

int cmd_gens(Options const& o, std::ostream& out) {
  MonoidKind const kind = studied_kind(o.kind);
  require_degree(o.n);
  GeneratorSet const set = standard_generators(kind, o.n);
  if (o.json) {
    json list = json::array();
    for (auto const& g : set.generators) {
      list.push_back({{"name", to_string(g.name)}, {"element", to_string(g.value)}});
    }
    emit_json(out, {{"kind", to_string(kind)}, {"n", o.n}, {"generators", list}});
    return kExitOk;
  }
  out << "name,element\n";
  for (auto const& g : set.generators) {
    out << to_string(g.name) << ",\"" << to_string(g.value) << "\"\n";
  }
  return kExitOk;
}

json requirements_json(std::vector<Requirement> const& reqs) {
  json list = json::array();
  for (auto const& r : reqs) {
    list.push_back({{"requirement", r.description}, {"witnessed", r.witnessed}});
  }
  return list;
}

int cmd_rank(Options const& o, std::ostream& out) {
  MonoidKind const kind = studied_kind(o.kind);
  require_degree(o.n);
  if (!o.certify) {
    int const r = rank_formula(kind, o.n);
    if (o.json) {
      emit_json(out, {{"kind", to_string(kind)}, {"n", o.n}, {"rank", r}});
    } else {
      out << "rank=" << r << '\n';
    }
    return kExitOk;
  }
  RankCertification const c = certify_rank(kind, o.n, o.workers);
  if (o.json) {
    json payload = {{"kind", to_string(kind)},
                    {"n", o.n},
                    {"rank", c.formula},
                    {"upper_bound", c.upper_bound},
                    {"lower_bound", c.lower_bound},
                    {"method", c.method},
                    {"certified", c.certified}};
    if (c.certificate) {
      payload["rank2"] = requirements_json(c.certificate->rank2);
      payload["corank1"] = requirements_json(c.certificate->corank1);
      payload["permutations"] = requirements_json(c.certificate->permutations);
    }
    emit_json(out, payload);
  } else {
    out << "rank=" << c.formula << ' '
        << (c.certified ? "CERTIFIED" : "UNCERTIFIED") << '\n';
  }
  return c.certified ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(Options const& o, std::ostream& out) {
  if (o.max_n < 3) {
    throw DomainError("--max-n must be at least 3");
  }
  if (o.inject_failure < 0 || o.inject_failure > kCriterionCount) {
    throw DomainError("--inject-failure must lie in 0.." +
                      std::to_string(kCriterionCount));
  }
  VerifyOptions options;
  options.max_n = o.max_n;
  options.workers = o.workers;
  options.seed = o.seed;
  options.inject_failure = o.inject_failure;
  auto const results = run_acceptance(options, [&](CriterionResult const& r) {
    if (!o.json) out << format_result_line(r) << std::endl;
  });
  auto const first_failure =
      std::find_if(results.begin(), results.end(),
                   [](CriterionResult const& r) { return !r.passed; });
  if (o.json) {
    json list = json::array();
    for (auto const& r : results) {
      list.push_back({{"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"skipped", r.skipped},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    }
    emit_json(out, {{"max_n", o.max_n},
                    {"passed", first_failure == results.end()},
                    {"criteria", list}});
  } else if (first_failure == results.end()) {
    out << "all " << results.size() << " criteria passed\n";
  } else {
    out << "first failure: [" << first_failure->id << "] "
        << first_failure->detail << '\n';
  }
  return first_failure == results.end() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Partial isometries of the cycle graph: enumeration, Green's "
               "relations, generators and rank."};
  app.name("dimon");
  app.require_subcommand(1);
  Options o;

  auto add_kind_n = [&](CLI::App* sub) {
    sub->add_option("kind", o.kind, "odi, mdi or opdi")->required();
    sub->add_option("n", o.n, "degree")->required();
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers,
                    "closure worker threads (0 = available parallelism)");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit a JSON payload");
  };

  auto* card = app.add_subcommand("card", "closed-form cardinality");
  add_kind_n(card);
  card->add_flag("--enumerate", o.enumerate, "compare with the enumerated size");
  add_workers(card);
  add_json(card);

  auto* enumerate = app.add_subcommand("enumerate", "list all elements");
  add_kind_n(enumerate);
  enumerate->add_option("--out", o.out_file, "output file (default stdout)");
  enumerate->add_option("--format", o.format, "jsonl or txt");
  enumerate->add_flag("--gzip", o.gzip, "gzip the output file");
  add_workers(enumerate);

  auto* greens = app.add_subcommand("greens", "Green's classes and sizes");
  add_kind_n(greens);
  greens->add_option("--relation", o.relation, "J, L, R or H");
  add_workers(greens);
  add_json(greens);

  auto* classify_cmd = app.add_subcommand("classify", "order flags and membership");
  classify_cmd->add_option("element", o.element, "e.g. n=5;2>1,4>3")->required();
  add_json(classify_cmd);

  auto* extensions_cmd =
      app.add_subcommand("extensions", "dihedral permutations extending an element");
  extensions_cmd->add_option("element", o.element)->required();
  add_json(extensions_cmd);

  auto* factorize_cmd =
      app.add_subcommand("factorize", "word over the standard generators");
  factorize_cmd->add_option("kind", o.kind)->required();
  factorize_cmd->add_option("element", o.element)->required();
  add_json(factorize_cmd);

  auto* gens = app.add_subcommand("gens", "standard generating set");
  add_kind_n(gens);
  add_json(gens);

  auto* rank = app.add_subcommand("rank", "rank, optionally certified");
  add_kind_n(rank);
  rank->add_flag("--certify", o.certify, "verify upper and lower bounds");
  add_workers(rank);
  add_json(rank);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--max-n", o.max_n, "largest degree to check");
  verify->add_option("--inject-failure", o.inject_failure,
                     "force criterion K to fail");
  verify->add_option("--seed", o.seed, "sampling seed");
  add_workers(verify);
  add_json(verify);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (card->parsed()) return cmd_card(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (greens->parsed()) return cmd_greens(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (extensions_cmd->parsed()) return cmd_extensions(o, out);
    if (factorize_cmd->parsed()) return cmd_factorize(o, out);
    if (gens->parsed()) return cmd_gens(o, out);
    if (rank->parsed()) return cmd_rank(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace dimon
