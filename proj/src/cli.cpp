#include "gvpt/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gvpt/correspond.hpp"
#include "gvpt/localp2.hpp"
#include "gvpt/monodromy.hpp"
#include "gvpt/symprod.hpp"

namespace gvpt::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Emitted {
  json data;
  std::string csv;
  std::string text;
  bool pass = true;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

Emitted emit_row(const IntRow& row, const std::string& index_name, const std::string& label) {
  Emitted e;
  e.data = to_json(row);
  std::ostringstream csv;
  std::ostringstream text;
  csv << "degree," << index_name << ",value\n";
  text << label << " degree " << row.degree << "\n";
  for (const auto& [k, v] : row.values) {
    csv << row.degree << "," << k << "," << v.get_str() << "\n";
    text << "  " << index_name << "=" << k << ": " << v.get_str() << "\n";
  }
  e.csv = csv.str();
  e.text = text.str();
  return e;
}

Emitted emit_deg2(const Deg2Report& r) {
  Emitted e;
  e.data = to_json(r);
  e.pass = r.pass;
  std::ostringstream csv;
  csv << "k,lhs_matches_closed_form,rhs_matches_series,rhs_equals_l_times_lhs,systems_match_oracles\n";
  int failed = 0;
  for (const auto& row : r.rows) {
    csv << row.k << "," << bool_str(row.lhs_matches_closed_form) << ","
        << bool_str(row.rhs_matches_series) << "," << bool_str(row.rhs_equals_l_times_lhs) << ","
        << bool_str(row.systems_match_oracles) << "\n";
    if (!row.pass()) ++failed;
  }
  e.csv = csv.str();
  std::ostringstream text;
  text << "degree-2 verification, k = 0.." << (r.rows.empty() ? -1 : r.rows.back().k) << ": "
       << (r.pass ? "PASS" : "FAIL") << " (" << failed << " failing rows)\n";
  e.text = text.str();
  return e;
}

Emitted emit_crosscheck(const CrosscheckReport& r) {
  Emitted e;
  e.data = to_json(r);
  e.pass = r.pass;
  std::ostringstream csv;
  csv << "d,n,value,matches\n";
  for (const auto& c : r.checked) {
    bool bad = false;
    for (const auto& m : r.mismatches) bad = bad || (m.d == c.d && m.n == c.n);
    csv << c.d << "," << c.n << "," << c.value.get_str() << "," << bool_str(!bad) << "\n";
  }
  e.csv = csv.str();
  std::ostringstream text;
  text << "product formula cross-check: " << r.checked.size() << " values, " << r.mismatches.size()
       << " mismatches: " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& m : r.mismatches) {
    text << "  d=" << m.d << " n=" << m.n << " expected " << m.expected.get_str() << " got "
         << m.got.get_str() << "\n";
  }
  e.text = text.str();
  return e;
}

std::string series_lines(const LaurentSeries& s, const std::string& prefix) {
  std::ostringstream os;
  for (const auto& [m, c] : s.terms()) {
    os << prefix;
    for (std::size_t i = 0; i < s.context().size(); ++i) os << m[i] << ",";
    os << c.get_str() << "\n";
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw UsageError(std::string("malformed JSON in ") + path + ": " + ex.what());
  }
}

Emitted emit_refined(const json& input) {
  if (!input.is_object()) throw UsageError("refined input must be a JSON object");
  int degree = input.value("degree", 0);
  RefinedTable table;
  LaurentSeries rbps;
  if (input.contains("values")) {
    table = refined_from_json(input);
    rbps = rbps_from_refined(table);
  } else if (input.contains("rbps")) {
    rbps = series_from_json(input.at("rbps"));
    table = refined_from_rbps(rbps);
  } else {
    throw UsageError("refined input needs \"values\" (a table) or \"rbps\" (a polynomial)");
  }
  IntRow gv{degree, unrefine(table)};
  Emitted e;
  e.data = {{"degree", degree},
            {"refined", to_json(table, degree).at("values")},
            {"rbps", to_json(rbps)},
            {"unrefined", to_json(gv).at("values")}};
  std::ostringstream csv;
  csv << "kind,index,value\n";
  for (const auto& [s, n] : table.entries()) {
    csv << "refined,\"" << s.first << "," << s.second << "\"," << n.get_str() << "\n";
  }
  for (const auto& [g, n] : gv.values) csv << "unrefined," << g << "," << n.get_str() << "\n";
  e.csv = csv.str();
  std::ostringstream text;
  text << "refined BPS numbers, degree " << degree << " (2jL, 2jR): N\n";
  for (const auto& [s, n] : table.entries()) {
    text << "  (" << s.first << ", " << s.second << "): " << n.get_str() << "\n";
  }
  text << "unrefined GV numbers\n";
  for (const auto& [g, n] : gv.values) text << "  g=" << g << ": " << n.get_str() << "\n";
  e.text = text.str();
  return e;
}

Emitted emit_sym(const GradedDims& h, int n) {
  GradedDims sym = graded_sym(h, n);
  GradedDims alt = graded_alt(h, n);
  // Cross-check both against the product formula.
  bool pass = true;
  for (PowerKind kind : {PowerKind::Sym, PowerKind::Alt}) {
    LaurentSeries closed = sym_poincare_closed(h, n, kind);
    const GradedDims& direct = kind == PowerKind::Sym ? sym : alt;
    GradedDims from_closed;
    for (const auto& [m, c] : closed.terms()) {
      if (m[0] == n) from_closed.add(m[1], c);
    }
    pass = pass && from_closed == direct;
  }
  Emitted e;
  e.pass = pass;
  e.data = {{"n", n},
            {"input", to_json(h)},
            {"sym", to_json(sym)},
            {"alt", to_json(alt)},
            {"closed_form_matches", pass}};
  std::ostringstream csv;
  csv << "kind,degree,dim\n";
  for (const auto& [d, c] : sym.dims()) csv << "sym," << d << "," << c.get_str() << "\n";
  for (const auto& [d, c] : alt.dims()) csv << "alt," << d << "," << c.get_str() << "\n";
  e.csv = csv.str();
  std::ostringstream text;
  auto line = [&](const char* name, const GradedDims& g) {
    text << name << "^" << n << ":";
    for (const auto& [d, c] : g.dims()) text << " h^" << d << "=" << c.get_str();
    text << "\n";
  };
  line("Sym", sym);
  line("Alt", alt);
  text << "closed form: " << (pass ? "matches" : "MISMATCH") << "\n";
  e.text = text.str();
  return e;
}

Emitted emit_macdonald(int genus, int n_curves, int order) {
  LaurentSeries s = macdonald_series(genus, n_curves, order);
  NaiveReport naive = naive_check(genus, n_curves, order);
  Emitted e;
  e.pass = naive.pass;
  e.data = {{"genus", genus},
            {"n_curves", n_curves},
            {"order", order},
            {"series", to_json(s)},
            {"naive_check", naive.pass}};
  e.csv = "t,x,coefficient\n" + series_lines(s, "");
  std::ostringstream text;
  for (int k = 0; k <= order; ++k) {
    text << "t^" << k << ":";
    for (const auto& [m, c] : s.terms()) {
      if (m[0] == k) text << " " << c.get_str() << "x^" << m[1];
    }
    text << "\n";
  }
  text << "naive GV/PT check: " << (naive.pass ? "PASS" : "FAIL") << "\n";
  e.text = text.str();
  return e;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GV/PT computations for local P^2", "gvpt"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;

  int degree = 0;
  int k_max = 0;
  int d_max = 0;
  int q_max = 12;
  std::string in_path;
  std::string dims_arg;
  int power = 0;
  int genus = 0;
  int order = 0;
  int n_curves = 1;

  auto* pt = app.add_subcommand("pt", "PT invariants P(d, n), 0 <= n <= d + 1");
  pt->add_option("--degree", degree)->required();
  auto* gv = app.add_subcommand("gv", "GV invariants n^g_d for d <= 5");
  gv->add_option("--degree", degree)->required();
  auto* deg2 = app.add_subcommand("deg2-verify", "Degree-2 monodromy verification");
  deg2->add_option("--max", k_max)->required();
  auto* cross = app.add_subcommand("crosscheck", "Product formula against PT invariants");
  cross->add_option("--dmax", d_max)->required();
  cross->add_option("--qmax", q_max, "Upper end of the q window");
  auto* refined = app.add_subcommand("refined", "Refined BPS basis change");
  refined->add_option("--in", in_path)->required();
  auto* sym = app.add_subcommand("sym", "Graded symmetric and alternating powers");
  sym->add_option("--dims", dims_arg, "JSON object of degree: dim, or @file")->required();
  sym->add_option("--n", power)->required();
  auto* mac = app.add_subcommand("macdonald", "Hilbert schemes of points on a smooth curve");
  mac->add_option("--genus", genus)->required();
  mac->add_option("--order", order)->required();
  mac->add_option("--curves", n_curves, "Number of curves");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", output, "Write output to this file instead of stdout");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }

  Emitted e;
  try {
    if (pt->parsed()) {
      require(degree >= 1, "degree must be at least 1");
      e = emit_row(pt_row(degree), "n", "PT invariants");
    } else if (gv->parsed()) {
      require(degree >= 1, "degree must be at least 1");
      require(degree <= 5, "degree must be ≤ 5");
      e = emit_row(gv_solve(degree), "genus", "GV invariants");
    } else if (deg2->parsed()) {
      require(k_max >= 0, "--max must be nonnegative");
      e = emit_deg2(verify_deg2(k_max));
    } else if (cross->parsed()) {
      require(d_max >= 1 && d_max <= 5, "--dmax must lie in 1..5");
      require(q_max >= 4, "--qmax must be at least 4");
      e = emit_crosscheck(crosscheck_unrefined(d_max, q_max));
    } else if (refined->parsed()) {
      e = emit_refined(read_json_file(in_path));
    } else if (sym->parsed()) {
      require(power >= 0, "--n must be nonnegative");
      json parsed;
      try {
        parsed = dims_arg.starts_with("@") ? read_json_file(dims_arg.substr(1)) : json::parse(dims_arg);
      } catch (const json::parse_error& ex) {
        throw UsageError(std::string("malformed --dims JSON: ") + ex.what());
      }
      e = emit_sym(dims_from_json(parsed), power);
    } else if (mac->parsed()) {
      require(genus >= 0, "--genus must be nonnegative");
      require(order >= 0, "--order must be nonnegative");
      e = emit_macdonald(genus, n_curves, order);
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const json::exception& ex) {
    err << "error: malformed input: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }

  std::string payload;
  if (format == "json") payload = e.data.dump() + "\n";
  else if (format == "csv") payload = e.csv;
  else payload = e.text;

  if (output.empty()) {
    out << payload;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kUsage;
    }
    file << payload;
  }
  if (!e.pass) err << "verification failed\n";
  return e.pass ? kOk : kVerificationFailed;
}

}  // namespace gvpt::cli
