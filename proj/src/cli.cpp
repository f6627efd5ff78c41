#include "permfact/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "permfact/closed_forms.hpp"

namespace permfact {

namespace {

CycleType parse_class(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  if (parts.empty()) throw UsageError("empty cycle type");
  return CycleType(parts);
}

Signature parse_signature(const std::vector<std::string>& entries) {
  Signature b;
  for (const auto& e : entries) {
    auto pos = e.find(':');
    if (pos == std::string::npos) throw UsageError("signature entries use k:count");
    b.add(std::stoi(e.substr(0, pos)), std::stoll(e.substr(pos + 1)));
  }
  return b;
}

void check_soft_bounds(int n, int order, bool force) {
  if (force) return;
  if (n > 5)
    throw ResourceLimit("n > 5 requires --force (conservative default bound)");
  if (order > 8)
    throw ResourceLimit("order > 8 requires --force (conservative default bound)");
}

struct Options {
  // count / enumerate
  std::string mode = "inequivalent";
  std::string klass;
  std::vector<std::string> signature;
  long long genus = 0;
  bool genus_set = false;
  long long length = 0;
  bool length_set = false;
  long long depth = 0;
  bool depth_set = false;
  bool transitive = false;
  long long r = 0;
  bool r_set = false;
  std::string formula;
  int jobs = 1;
  long long limit = 1000;
  int k = 2;
  // series
  std::string family = "icgs";
  int m = 1;
  int order = 3;
  std::vector<std::string> qspec;
  // map
  std::string input_file;
  std::string input_json;
  bool dot = false;
  bool serialize = false;
  // verify
  std::string suite = "connections";
  int max_n = 4;
  int n = 3;
  long long degree = 4;
  int instances = 100;
  // global
  bool force = false;
  std::string out_file;
};

Json count_command(const Options& o) {
  Json j;
  if (!o.formula.empty()) {
    if (o.formula == "hurwitz") {
      j["count"] = int_to_json(hurwitz_count(parse_class(o.klass)));
    } else if (o.formula == "fullcycle") {
      j["count"] = int_to_json(fullcycle_signature_count(o.n, parse_signature(o.signature)));
    } else if (o.formula == "springer") {
      j["count"] = int_to_json(springer_count(o.n, parse_signature(o.signature)));
    } else if (o.formula == "eidswick-longyear") {
      j["count"] = int_to_json(eidswick_longyear(o.n));
    } else if (o.formula == "two-part") {
      j["count"] = int_to_json(two_part_transpositions(o.n, o.m));
    } else if (o.formula == "constellation") {
      j["count"] = rat_to_json(constellation_count(parse_class(o.klass), o.r));
    } else if (o.formula == "goulden-monotone") {
      j["count"] = int_to_json(goulden_monotone(parse_class(o.klass)));
    } else {
      throw UsageError("unknown formula: " + o.formula);
    }
    j["formula"] = o.formula;
    return j;
  }
  CycleType alpha = parse_class(o.klass);
  long long g = o.genus_set ? o.genus : 0;
  j["alpha"] = alpha.parts();
  j["genus"] = g;
  if (o.mode == "inequivalent") {
    Signature beta = parse_signature(o.signature);
    j["beta"] = signature_to_json(beta);
    j["count"] = count_inequivalent(alpha, beta, g, o.jobs);
  } else if (o.mode == "ordinary") {
    Signature beta = parse_signature(o.signature);
    j["beta"] = signature_to_json(beta);
    j["count"] = count_ordinary_cycle(alpha, beta, g, o.jobs);
  } else if (o.mode == "monotone") {
    j["count"] = count_monotone(alpha, g);
  } else if (o.mode == "proper") {
    if (!o.length_set) throw UsageError("count --mode proper requires --length");
    j["length"] = o.length;
    j["count"] = count_proper(alpha, o.length, g);
  } else if (o.mode == "all") {
    if (!o.r_set) throw UsageError("count --mode all requires --r");
    j["r"] = o.r;
    j["count"] = rat_to_json(count_all(alpha, o.r, g));
  } else if (o.mode == "all-direct") {
    if (!o.r_set) throw UsageError("count --mode all-direct requires --r");
    j["r"] = o.r;
    j["count"] = count_all_direct(alpha, o.r, g);
  } else {
    throw UsageError("unknown count mode: " + o.mode);
  }
  return j;
}

Json enumerate_command(const Options& o) {
  CycleType alpha = parse_class(o.klass);
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.transitive_only = o.transitive;
  if (o.genus_set) {
    spec.genus = o.genus;
    spec.transitive_only = true;
  }
  if (!o.signature.empty()) spec.signature = parse_signature(o.signature);
  if (o.length_set) spec.length = o.length;
  if (o.depth_set) spec.depth = o.depth;
  bool cycles = true;
  if (o.mode == "cycles") {
    spec.kind = FactorKind::Cycles;
  } else if (o.mode == "transpositions") {
    spec.kind = FactorKind::Transpositions;
  } else if (o.mode == "monotone") {
    spec.kind = FactorKind::Transpositions;
    spec.monotone_only = true;
  } else if (o.mode == "kcycles") {
    spec.kind = FactorKind::KCycles;
    spec.k = o.k;
  } else if (o.mode == "proper") {
    spec.kind = FactorKind::ProperPerms;
    cycles = false;
  } else if (o.mode == "all") {
    spec.kind = FactorKind::AnyPerms;
    cycles = false;
  } else {
    throw UsageError("unknown enumerate mode: " + o.mode);
  }
  Json out;
  out["alpha"] = alpha.parts();
  Json arr = Json::array();
  long long count = 0;
  bool truncated = false;
  if (cycles) {
    enumerate_cycle_factorizations(spec, [&](const CycleFactorization& f) {
      if (count >= o.limit) {
        truncated = true;
        return false;
      }
      ++count;
      arr.push_back(cycle_factorization_to_json(f));
      return true;
    });
  } else {
    enumerate_general_factorizations(spec, [&](const GeneralFactorization& f) {
      if (count >= o.limit) {
        truncated = true;
        return false;
      }
      ++count;
      arr.push_back(general_factorization_to_json(f));
      return true;
    });
  }
  out["factorizations"] = arr;
  out["count"] = count;
  out["truncated"] = truncated;
  return out;
}

Json series_command(const Options& o) {
  Family fam = family_from_name(o.family);
  SeriesBuildResult r = build_series(fam, o.m, o.order, o.k);
  if (!o.qspec.empty()) {
    if (!r.symbolic_q) throw UsageError("--spec applies only to symbolic-q families");
    std::vector<Rat> values(static_cast<size_t>(o.order) + 2, Rat(0));
    for (const auto& e : o.qspec) {
      auto pos = e.find('=');
      if (pos == std::string::npos || e[0] != 'q')
        throw UsageError("series --spec entries use qK=value");
      int k = std::stoi(e.substr(1, pos - 1));
      if (k < 2) throw UsageError("series --spec variables start at q2");
      Rat v(e.substr(pos + 1));
      v.canonicalize();
      if (k - 2 >= static_cast<int>(values.size())) values.resize(k - 1, Rat(0));
      values[k - 2] = v;
    }
    r.series = r.series.substitute_q(values);
    r.symbolic_q = false;
  }
  return series_table_to_json(r);
}

Json map_command(const Options& o) {
  std::string text = o.input_json;
  if (!o.input_file.empty()) {
    std::ifstream in(o.input_file);
    if (!in) throw UsageError("cannot open input file: " + o.input_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw UsageError("map requires --in <file> or --json <text>");
  CycleFactorization f = cycle_factorization_from_json(Json::parse(text));
  AlternatingMap m = build_map(f);
  Json j;
  j["stats"] = map_stats_to_json(map_stats(m));
  if (o.serialize) j["serialization"] = canonical_serialization(m, evaluate(f));
  if (o.dot) j["rotation"] = rotation_dump(m);
  return j;
}

Json verify_command(const Options& o, bool& ok) {
  Json j;
  j["suite"] = o.suite;
  ok = true;
  if (o.suite == "connections") {
    Json cases = Json::array();
    for (int n = 1; n <= o.max_n; ++n)
      for (const auto& parts : compositions_of(n)) {
        ConnectionsReport rep = verify_connections(CycleType(parts), o.genus);
        ok = ok && rep.ok;
        cases.push_back(connections_report_to_json(rep));
      }
    j["cases"] = cases;
  } else if (o.suite == "cartier-foata") {
    IdentityReport rep = verify_qidentity(o.n, o.degree);
    ok = rep.ok;
    j["report"] = identity_report_to_json(rep);
  } else if (o.suite == "monotone") {
    IdentityReport rep = verify_uidentity(o.n, o.degree);
    ok = rep.ok;
    j["report"] = identity_report_to_json(rep);
  } else if (o.suite == "jm") {
    JMReport rep = jm_elementary_check(o.n);
    ok = rep.ok;
    j["report"] = jm_report_to_json(rep);
  } else if (o.suite == "bijection") {
    BijectionReport rep =
        verify_bijection(parse_class(o.klass), parse_signature(o.signature), o.genus);
    ok = rep.ok;
    j["report"] = bijection_report_to_json(rep);
  } else if (o.suite == "appendix") {
    AppendixReport rep = verify_appendix(o.instances);
    ok = rep.ok;
    j["report"] = appendix_report_to_json(rep);
  } else if (o.suite == "kcycle") {
    KCycleReport rep = kcycle_specialize(o.m, o.k, o.order);
    // comparison report: printed-form disagreement is recorded, not an error
    j["report"] = kcycle_report_to_json(rep);
  } else {
    throw UsageError("unknown verify suite: " + o.suite);
  }
  j["status"] = ok ? "ok" : "mismatch";
  return j;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact permutation-factorization toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--force", o.force, "allow sizes beyond the conservative defaults");
  app.add_option("--out", o.out_file, "write the JSON output to a file");

  auto* count = app.add_subcommand("count", "count factorizations or evaluate closed formulas");
  count->add_option("--mode", o.mode,
                    "inequivalent|ordinary|monotone|proper|all|all-direct");
  count->add_option("--class", o.klass, "cycle type, comma separated");
  count->add_option("--signature", o.signature, "factor signature entries k:count");
  count->add_option("--genus", o.genus)->each([&](const std::string&) { o.genus_set = true; });
  count->add_option("--length", o.length)->each([&](const std::string&) { o.length_set = true; });
  count->add_option("--r", o.r)->each([&](const std::string&) { o.r_set = true; });
  count->add_option("--formula", o.formula,
                    "hurwitz|fullcycle|springer|eidswick-longyear|two-part|constellation|goulden-"
                    "monotone");
  count->add_option("--n", o.n);
  count->add_option("--m", o.m);
  count->add_option("--jobs", o.jobs);

  auto* en = app.add_subcommand("enumerate", "stream factorizations as JSON");
  en->add_option("--mode", o.mode, "cycles|transpositions|monotone|kcycles|proper|all");
  en->add_option("--class", o.klass, "cycle type, comma separated");
  en->add_option("--signature", o.signature, "factor signature entries k:count");
  en->add_option("--genus", o.genus)->each([&](const std::string&) { o.genus_set = true; });
  en->add_option("--length", o.length)->each([&](const std::string&) { o.length_set = true; });
  en->add_option("--depth", o.depth)->each([&](const std::string&) { o.depth_set = true; });
  en->add_flag("--transitive", o.transitive);
  en->add_option("--k", o.k);
  en->add_option("--limit", o.limit);

  auto* se = app.add_subcommand("series", "build a generating series coefficient table");
  se->add_option("--family", o.family,
                 "icgs|icgs4-transpositions|ocgs|ocgs3-conjecture|monotone|hurwitz|kcycle");
  se->add_option("--m", o.m);
  se->add_option("--order", o.order);
  se->add_option("--k", o.k);
  se->add_option("--spec", o.qspec, "substitutions qK=value");

  auto* mp = app.add_subcommand("map", "alternating-map statistics of a factorization");
  mp->add_option("--in", o.input_file, "JSON file with the factorization");
  mp->add_option("--json", o.input_json, "factorization JSON inline");
  mp->add_flag("--dot", o.dot, "include a rotation-system dump");
  mp->add_flag("--serialize", o.serialize, "include the canonical serialization");

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", o.suite,
                 "connections|cartier-foata|monotone|jm|bijection|appendix|kcycle");
  ve->add_option("--max-n", o.max_n);
  ve->add_option("--genus", o.genus);
  ve->add_option("--n", o.n);
  ve->add_option("--degree", o.degree);
  ve->add_option("--class", o.klass);
  ve->add_option("--signature", o.signature);
  ve->add_option("--instances", o.instances);
  ve->add_option("--m", o.m);
  ve->add_option("--k", o.k);
  ve->add_option("--order", o.order);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  CliResult res;
  try {
    app.parse(argv);
    if (count->parsed()) {
      // closed formulas are O(1); soft bounds guard only the enumerations
      if (o.formula.empty() && !o.klass.empty())
        check_soft_bounds(parse_class(o.klass).size(), 0, o.force);
      res.output = count_command(o);
    } else if (en->parsed()) {
      check_soft_bounds(parse_class(o.klass).size(), 0, o.force);
      res.output = enumerate_command(o);
    } else if (se->parsed()) {
      check_soft_bounds(0, o.order, o.force);
      res.output = series_command(o);
    } else if (mp->parsed()) {
      res.output = map_command(o);
    } else if (ve->parsed()) {
      check_soft_bounds(std::max(o.n, o.max_n), o.order, o.force);
      bool ok = true;
      res.output = verify_command(o, ok);
      res.exit_code = ok ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.output = Json{{"error", {{"kind", "usage-error"}, {"message", e.what()}}}};
    return res;
  } catch (const Error& e) {
    res.exit_code = 2;
    res.output = Json{{"error", {{"kind", e.kind}, {"message", e.what()}}}};
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.output = Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    return res;
  }
  if (!o.out_file.empty()) {
    std::ofstream out(o.out_file);
    out << res.output.dump(2) << "\n";
  }
  return res;
}

}  // namespace permfact
