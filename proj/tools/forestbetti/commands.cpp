#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "forestbetti/betti_table.hpp"
#include "forestbetti/error.hpp"
#include "forestbetti/forest_betti.hpp"
#include "forestbetti/random_forest.hpp"
#include "forestbetti/simplicial_complex.hpp"
#include "forestbetti/taylor.hpp"
#include "json.hpp"

namespace forestbetti::cli {

namespace {

using nlohmann::json;

// The ideal to work on, plus its facet complex when it has one.
struct Problem {
  MonomialIdeal ideal;
  std::optional<SimplicialComplex> complex;
};

std::string read_text(const RunConfig& config, std::istream& in) {
  if (config.inline_text) {
    std::string text = *config.inline_text;
    std::replace(text.begin(), text.end(), ';', '\n');
    return text;
  }
  std::ostringstream buffer;
  if (config.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(config.input);
    if (!file) throw Error(ErrorCode::kParse, "cannot open " + config.input);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Problem load(const RunConfig& config, std::istream& in) {
  auto parsed = parse_input(read_text(config, in), config.as);
  Problem p;
  if (auto* g = std::get_if<SimplicialComplex>(&parsed)) {
    p.ideal = facet_ideal(*g);
    p.complex = std::move(*g);
  } else {
    p.ideal = std::get<MonomialIdeal>(std::move(parsed));
    const bool unit =
        p.ideal.num_generators() == 1 && p.ideal.generators()[0].is_one();
    if (p.ideal.is_squarefree() && !unit) p.complex = facet_complex(p.ideal);
  }
  return p;
}

bool is_forest_problem(const Problem& p) {
  return p.complex && is_forest(*p.complex);
}

OracleOptions oracle_options(const RunConfig& config) {
  OracleOptions options;
  options.max_generators = config.max_generators;
  return options;
}

// Macaulay2-style layout: columns are homological degrees i, rows are
// j - i, zeros print as '.'.
std::string render_table(const BettiTable& table) {
  if (table.empty()) return "(zero ideal)\n";
  int max_i = 0;
  int min_row = table.entries().begin()->first.second;
  int max_row = min_row;
  for (const auto& [key, value] : table.entries()) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  const auto totals = total_betti(table);
  auto cell = [&](int row, int i) -> std::string {
    const auto v = table.at(i, row + i);
    return v == 0 ? "." : std::to_string(v);
  };

  std::vector<std::size_t> width(static_cast<std::size_t>(max_i) + 1, 1);
  for (int i = 0; i <= max_i; ++i) {
    auto& w = width[static_cast<std::size_t>(i)];
    w = std::max(w, std::to_string(i).size());
    if (auto it = totals.find(i); it != totals.end()) {
      w = std::max(w, std::to_string(it->second).size());
    }
    for (int row = min_row; row <= max_row; ++row) {
      w = std::max(w, cell(row, i).size());
    }
  }
  std::size_t label = std::string("total:").size();
  for (int row = min_row; row <= max_row; ++row) {
    label = std::max(label, std::to_string(row).size() + 1);
  }

  std::ostringstream out;
  auto line = [&](const std::string& head, auto&& value_of) {
    out << std::setw(static_cast<int>(label)) << head;
    for (int i = 0; i <= max_i; ++i) {
      out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)]))
          << value_of(i);
    }
    out << '\n';
  };
  line("", [](int i) { return std::to_string(i); });
  line("total:", [&](int i) {
    auto it = totals.find(i);
    return it == totals.end() ? std::string(".") : std::to_string(it->second);
  });
  for (int row = min_row; row <= max_row; ++row) {
    line(std::to_string(row) + ":", [&](int i) { return cell(row, i); });
  }
  return out.str();
}

json table_json(const BettiTable& table) {
  json graded = json::array();
  for (const auto& [key, value] : table.entries()) {
    graded.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  }
  json totals = json::array();
  for (const auto& [i, value] : total_betti(table)) {
    totals.push_back({{"i", i}, {"value", value}});
  }
  return {{"graded", graded}, {"total", totals}};
}

json column_json(const BettiColumn& column) {
  json out = json::object();
  for (const auto& [i, value] : column) out[std::to_string(i)] = value;
  return out;
}

struct MultigradedLine {
  int i;
  Monomial m;
  std::uint64_t value;
};

std::vector<MultigradedLine> sorted_lines(const MultigradedBettiMap& map,
                                          const std::vector<std::string>& names) {
  std::vector<MultigradedLine> lines;
  for (const auto& [key, value] : map.entries()) {
    lines.push_back({key.first, key.second, value});
  }
  std::sort(lines.begin(), lines.end(),
            [&](const MultigradedLine& a, const MultigradedLine& b) {
              if (a.m.degree() != b.m.degree()) return a.m.degree() < b.m.degree();
              if (a.m != b.m) return named_lex_before(a.m, b.m, names);
              return a.i < b.i;
            });
  return lines;
}

MultigradedBettiMap forest_multigraded_map(const SimplicialComplex& g) {
  MultigradedBettiMap out;
  if (g.empty()) return out;
  BettiMemo memo;
  for (const auto& m : lcm_lattice(facet_ideal(g))) {
    for (const auto& [i, value] : forest_multigraded_betti(g, m, &memo)) {
      out.add(i, m, value);
    }
  }
  return out;
}

std::string describe_column(const BettiColumn& column) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, value] : column) {
    out += (first ? "" : ", ") + std::to_string(i) + ": " + std::to_string(value);
    first = false;
  }
  return out + "}";
}

void render_facets(std::ostream& out, const SimplicialComplex& g,
                   const std::vector<std::size_t>& indices) {
  const auto names = g.facet_names();
  for (std::size_t k : indices) {
    out << ' ';
    for (const auto& name : names[k]) out << ' ' << name;
    out << '\n';
  }
}

json facets_json(const SimplicialComplex& g,
                 const std::vector<std::size_t>& indices) {
  json out = json::array();
  const auto names = g.facet_names();
  for (std::size_t k : indices) out.push_back(names[k]);
  return out;
}

struct VerifyRun {
  std::string label;
  Problem problem;
};

}  // namespace

void validate(const RunConfig& config) {
  if (config.fields.empty()) {
    throw Error(ErrorCode::kParse, "at least one field characteristic needed");
  }
  for (auto p : config.fields) static_cast<void>(PrimeField(p));
  if (config.max_generators == 0 || config.count == 0) {
    throw Error(ErrorCode::kParse, "caps and counts must be positive");
  }
  if (config.max_vertices == 0 || config.max_facets == 0) {
    throw Error(ErrorCode::kParse, "caps and counts must be positive");
  }
}

int cmd_betti(const RunConfig& config, std::istream& in, std::ostream& out) {
  const auto problem = load(config, in);
  const bool forest = is_forest_problem(problem);
  if (config.fast && !forest) {
    throw Error(ErrorCode::kNotAForest, "--fast needs a forest facet ideal");
  }
  const bool use_fast = !config.oracle && forest;

  std::vector<std::pair<std::uint32_t, BettiTable>> results;
  if (use_fast) {
    const auto table = forest_graded_betti(*problem.complex);
    for (auto p : config.fields) results.emplace_back(p, table);
  } else {
    for (auto p : config.fields) {
      BettiTable table;
      if (!problem.ideal.is_zero()) {
        table = graded_betti(all_multigraded_betti(
            problem.ideal, PrimeField(p), oracle_options(config)));
      }
      results.emplace_back(p, std::move(table));
    }
  }

  const char* method = use_fast ? "forest-recursion" : "taylor-oracle";
  if (config.format == OutputFormat::kJson) {
    json doc = {{"method", method}, {"results", json::array()}};
    for (const auto& [p, table] : results) {
      json entry = table_json(table);
      entry["field"] = p;
      doc["results"].push_back(entry);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [p, table] : results) {
    if (results.size() > 1) out << "-- GF(" << p << ")\n";
    out << render_table(table);
  }
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (!(results[k].second == results[0].second)) {
      out << "note: Betti numbers depend on the characteristic\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_multigraded(const RunConfig& config, std::istream& in,
                    std::ostream& out) {
  const auto problem = load(config, in);
  const bool forest = is_forest_problem(problem);
  if (config.fast && !forest) {
    throw Error(ErrorCode::kNotAForest, "--fast needs a forest facet ideal");
  }
  const bool use_fast = !config.oracle && forest;
  const auto& names = problem.ideal.variables();

  json doc = {{"method", use_fast ? "forest-recursion" : "taylor-oracle"},
              {"results", json::array()}};
  for (auto p : config.fields) {
    MultigradedBettiMap map;
    if (use_fast) {
      map = forest_multigraded_map(*problem.complex);
    } else if (!problem.ideal.is_zero()) {
      map = all_multigraded_betti(problem.ideal, PrimeField(p),
                                  oracle_options(config));
    }
    const auto lines = sorted_lines(map, names);
    if (config.format == OutputFormat::kJson) {
      json entries = json::array();
      for (const auto& l : lines) {
        entries.push_back({{"i", l.i},
                           {"multidegree", format_monomial(l.m, names)},
                           {"degree", l.m.degree()},
                           {"value", l.value}});
      }
      doc["results"].push_back({{"field", p}, {"entries", entries}});
      continue;
    }
    if (config.fields.size() > 1) out << "-- GF(" << p << ")\n";
    for (const auto& l : lines) {
      out << l.i << ' ' << format_monomial(l.m, names) << ' ' << l.value
          << '\n';
    }
  }
  if (config.format == OutputFormat::kJson) out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_forest_check(const RunConfig& config, std::istream& in,
                     std::ostream& out) {
  const auto problem = load(config, in);
  if (!problem.complex) {
    throw Error(ErrorCode::kNotSquarefree,
                "forest-check needs a complex or a squarefree ideal");
  }
  const auto& g = *problem.complex;
  const auto order = leaf_order(g);
  std::optional<std::vector<std::size_t>> witness;
  bool witness_searched = false;
  if (!order && g.num_facets() <= kDefaultBruteForceFacetCap) {
    witness = find_leafless_subcollection(g);
    witness_searched = true;
  }

  if (config.format == OutputFormat::kJson) {
    json doc = {{"forest", order.has_value()}};
    if (order) doc["leaf_order"] = facets_json(g, order->order);
    if (witness) doc["leafless_subcollection"] = facets_json(g, *witness);
    out << doc.dump(2) << '\n';
  } else if (order) {
    out << "forest: yes\nleaf order:\n";
    render_facets(out, g, order->order);
  } else {
    out << "forest: no\n";
    if (witness) {
      out << "leafless subcollection:\n";
      render_facets(out, g, *witness);
    } else if (!witness_searched) {
      out << "leafless subcollection: not searched (more than "
          << kDefaultBruteForceFacetCap << " facets)\n";
    }
  }
  return order ? kExitOk : kExitViolation;
}

int cmd_leaf_order(const RunConfig& config, std::istream& in,
                   std::ostream& out) {
  const auto problem = load(config, in);
  if (!problem.complex) {
    throw Error(ErrorCode::kNotSquarefree,
                "leaf-order needs a complex or a squarefree ideal");
  }
  const auto& g = *problem.complex;
  const auto order = leaf_order(g);
  if (!order) throw Error(ErrorCode::kNotAForest, "complex is not a forest");
  if (config.format == OutputFormat::kJson) {
    out << json{{"leaf_order", facets_json(g, order->order)}}.dump(2) << '\n';
    return kExitOk;
  }
  const auto names = g.facet_names();
  for (std::size_t k : order->order) {
    for (std::size_t v = 0; v < names[k].size(); ++v) {
      out << (v ? " " : "") << names[k][v];
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::istream& in, std::ostream& out) {
  std::vector<VerifyRun> runs;
  if (config.random_input) {
    for (std::size_t k = 0; k < config.count; ++k) {
      const auto seed = config.seed + k;
      auto g = random_forest(seed, {config.max_vertices, config.max_facets});
      Problem p{facet_ideal(g), std::move(g)};
      runs.push_back({"random forest (seed " + std::to_string(seed) + ")",
                      std::move(p)});
    }
  } else {
    runs.push_back({"input", load(config, in)});
  }

  VerifyOptions options;
  options.use_oracle = config.oracle;
  options.max_generators = config.max_generators;
  options.candidates = config.all_subsets ? CandidateMode::kAllSubsets
                                          : CandidateMode::kLcmLattice;

  bool all_hold = true;
  bool all_agree = true;
  json doc = {{"runs", json::array()}};
  for (const auto& run : runs) {
    const auto& p = run.problem;
    const bool forest = is_forest_problem(p);
    if (!config.oracle_only && !forest) {
      throw Error(ErrorCode::kNotAForest,
                  run.label + " is not a forest (use --oracle-only to inspect "
                              "it with the Taylor oracle)");
    }
    for (auto field_p : config.fields) {
      const PrimeField field(field_p);
      TheoremReport report;
      if (config.oracle_only) {
        if (!p.ideal.is_zero()) {
          report = oracle_theorem_report(p.ideal, field, oracle_options(config));
        }
      } else {
        report = verify_main_theorem(*p.complex, field, options);
      }
      all_hold = all_hold && report.holds();
      all_agree = all_agree && report.oracle_agrees();

      const auto& names = p.ideal.variables();
      const std::string mode = config.oracle_only ? "oracle-only"
                               : report.oracle    ? "fast+oracle"
                                                  : "fast";
      if (config.format == OutputFormat::kJson) {
        json records = json::array();
        for (const auto& r : report.records) {
          json rec = {{"multidegree", format_monomial(r.m, names)},
                      {"zero_one", r.zero_one},
                      {"concentrated", r.concentrated},
                      {"agrees", r.agrees}};
          if (r.fast) rec["fast"] = column_json(*r.fast);
          if (r.oracle) rec["oracle"] = column_json(*r.oracle);
          records.push_back(rec);
        }
        doc["runs"].push_back({{"label", run.label},
                               {"field", field_p},
                               {"mode", mode},
                               {"holds", report.holds()},
                               {"oracle_agrees", report.oracle_agrees()},
                               {"records", records}});
        continue;
      }
      out << run.label << ", GF(" << field_p << "), " << mode << ": "
          << report.records.size() << " multidegrees, "
          << (report.holds() ? "holds" : "VIOLATED");
      if (report.oracle) {
        out << ", " << (report.oracle_agrees() ? "oracle agrees"
                                               : "ORACLE DISAGREES");
      }
      out << '\n';
      for (const auto& r : report.records) {
        const auto& column = r.fast ? *r.fast : *r.oracle;
        const auto m = format_monomial(r.m, names);
        if (!r.zero_one) {
          for (const auto& [i, value] : column) {
            if (value > 1) {
              out << "  violation at " << m << ": b_" << i << " = " << value
                  << '\n';
            }
          }
        }
        if (!r.concentrated) {
          out << "  violation at " << m << ": nonzero in degrees";
          for (const auto& [i, value] : column) out << ' ' << i;
          out << '\n';
        }
        if (!r.agrees) {
          out << "  mismatch at " << m << ": fast " << describe_column(*r.fast)
              << ", oracle " << describe_column(*r.oracle) << '\n';
        }
      }
    }
  }

  const bool ok = all_hold && all_agree;
  if (config.format == OutputFormat::kJson) {
    doc["verdict"] = ok ? "holds" : "violated";
    out << doc.dump(2) << '\n';
  } else {
    out << "verdict: " << (ok ? "holds" : "violated") << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_random_forest(const RunConfig& config, std::ostream& out) {
  out << format_complex(
      random_forest(config.seed, {config.max_vertices, config.max_facets}));
  return kExitOk;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    validate(config);
    if (config.subcommand == "betti") return cmd_betti(config, in, out);
    if (config.subcommand == "multigraded") {
      return cmd_multigraded(config, in, out);
    }
    if (config.subcommand == "forest-check") {
      return cmd_forest_check(config, in, out);
    }
    if (config.subcommand == "leaf-order") {
      return cmd_leaf_order(config, in, out);
    }
    if (config.subcommand == "verify") return cmd_verify(config, in, out);
    if (config.subcommand == "random-forest") {
      return cmd_random_forest(config, out);
    }
    err << "unknown subcommand '" << config.subcommand << "'\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kTooLarge:
        return kExitTooLarge;
      case ErrorCode::kNotAForest:
      case ErrorCode::kNotATree:
        return kExitViolation;
      default:
        return kExitParse;
    }
  }
}

}  // namespace forestbetti::cli
