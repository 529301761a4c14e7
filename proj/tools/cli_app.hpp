#pragma once

// Command-line front end. Kept in a header so the unit tests can drive it
// without spawning processes.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tropical/agreement.hpp"
#include "tropical/io.hpp"

namespace tropical::cli {

using io::json;

enum Exit : int { ok = 0, domain_error = 1, budget_exhausted = 2, malformed_input = 3 };

struct Options {
  std::string command;
  std::string input = "-";
  std::optional<std::string> semifield;
  std::optional<std::size_t> budget_dim;
  bool parallel = false;
  std::string format = "json";
  double scale = 1.0;
  std::uint64_t seed = agreement::Config{}.seed;
};

inline json read_document(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw ParseError("cannot open input file " + opt.input);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// The semifield named by the document, or by --semifield; both present
/// and different is a domain mismatch.
inline SemifieldKind resolve_semifield(const Options& opt, const json& doc) {
  const auto flag = opt.semifield ? parse_semifield_kind(*opt.semifield) : SemifieldKind::maxplus;
  const auto kind = io::semifield_of(doc, flag);
  if (opt.semifield && kind != flag)
    throw DomainMismatch("input is " + to_string(kind) + " but --semifield " + to_string(flag) + " was given");
  return kind;
}

inline DetOptions det_options(const Options& opt) {
  DetOptions d;
  d.parallel = opt.parallel;
  if (opt.budget_dim) d.enumeration_bound = *opt.budget_dim;
  return d;
}

inline RankBudget rank_budget(const Options& opt) {
  RankBudget b;
  if (opt.budget_dim) b.max_dim = *opt.budget_dim;
  return b;
}

template <TotallyOrdered K>
std::vector<Vector<K>> family_from_json(const json& doc, std::size_t& n) {
  if (doc.contains("family")) {
    const auto& f = io::require(doc, "family");
    if (!f.is_array()) throw ParseError("\"family\" must be an array of vectors");
    std::vector<Vector<K>> out;
    for (const auto& v : f) out.push_back(io::vector_from_json<K>(v));
    n = doc.contains("n") ? io::require_size(doc, "n") : (out.empty() ? 0 : out.front().size());
    for (const auto& v : out)
      if (v.size() != n) throw DimensionMismatch("family vectors must all have length n");
    return out;
  }
  const auto m = io::matrix_from_json<K>(doc);
  n = m.rows();
  return m.columns();
}

template <TotallyOrdered K>
LinearForm<K> form_from_json(const json& doc) {
  if (doc.contains("coeffs")) return LinearForm<K>{io::vector_from_json<K>(doc.at("coeffs"))};
  const auto m = io::matrix_from_json<K>(doc);
  if (m.rows() != 1) throw DimensionMismatch("kernel expects a single row vector (1 x n matrix)");
  return LinearForm<K>{Vector<K>(m.row(0).begin(), m.row(0).end())};
}

template <TotallyOrdered K>
json classify_rectangular(const Matrix<K>& a) {
  const auto gm = decide_gm_dependence(a);
  json out{{"rows", a.rows()},
           {"cols", a.cols()},
           {"definitional_singular", is_definitionally_singular(a)},
           {"gm_dependent", gm.dependent},
           {"gm_basis", to_string(gm.basis)}};
  if (gm.basis == GmBasis::bounded_search) out["gm_candidates_searched"] = gm.candidates_searched;
  if (out["definitional_singular"].get<bool>()) {
    const auto w = singular_witness(a);
    out["witness"] = json{{"x", io::vector_to_json(w.x)},
                          {"a1", io::matrix_to_json(w.a1)},
                          {"a2", io::matrix_to_json(w.a2)}};
  } else {
    out["witness"] = nullptr;
  }
  if (gm.witness)
    out["gm_witness"] = json{{"x1", io::vector_to_json(gm.witness->x1)}, {"x2", io::vector_to_json(gm.witness->x2)}};
  else
    out["gm_witness"] = nullptr;
  return out;
}

template <TotallyOrdered K>
json run_typed(const Options& opt, const json& doc) {
  const auto& cmd = opt.command;
  if (cmd == "det") {
    const auto a = io::matrix_from_json<K>(doc);
    auto out = io::det_report_to_json(det_report(a, det_options(opt)));
    out["singular"] = {{"d", is_d_singular(a)}, {"D", out["det_plus"] == out["det_minus"]}};
    return out;
  }
  if (cmd == "classify") {
    const auto a = io::matrix_from_json<K>(doc);
    if (!a.is_square()) return classify_rectangular(a);
    return io::singularity_report_to_json(a, classify(a, det_options(opt)));
  }
  if (cmd == "rank") {
    const auto a = io::matrix_from_json<K>(doc);
    auto out = io::family_report_to_json(tropical_dimension(a.columns(), rank_budget(opt)));
    out["rank"] = out["tropical_dimension"];
    return out;
  }
  if (cmd == "kernel") {
    const auto l = form_from_json<K>(doc);
    if (l.size() < 2 && !l.is_zero()) return json{{"generators", json::array()}};
    return json{{"generators", io::family_to_json(kernel_generators(l))}};
  }
  if (cmd == "complete-basis") {
    std::size_t n = 0;
    const auto family = family_from_json<K>(doc, n);
    return json{{"n", n}, {"family", io::family_to_json(complete_to_tropical_basis(family, n))}};
  }
  if (cmd == "check-rank-theorem") {
    const auto a = io::matrix_from_json<K>(doc);
    const auto r = rank_theorem_check_detailed(a, rank_budget(opt));
    return json{{"status", to_string(r.status)},
                {"columns", r.columns},
                {"rank", r.rank},
                {"kernel_dimension", r.kernel_dimension},
                {"kernel_family", io::family_to_json(r.kernel_basis)}};
  }
  if (cmd == "roots") {
    if constexpr (RationalMagnitude<K>) {
      return json{{"roots", io::roots_to_json(roots(io::polynomial_from_json<K>(doc)))}};
    } else {
      throw DomainError("roots needs a max-plus or min-plus polynomial");
    }
  }
  throw ParseError("unknown command " + cmd);
}

inline json run_char(const json& doc) {
  const auto t = io::table_from_json(doc);
  const std::size_t p = characteristic(t);
  json out{{"characteristic", p}};
  out["pure"] = p > 0 ? json(is_pure_characteristic(t)) : json(nullptr);
  return out;
}

inline json run_check(const Options& opt, bool& all_passed) {
  agreement::Config cfg;
  cfg.scale = opt.scale;
  cfg.seed = opt.seed;
  json rows = json::array();
  all_passed = true;
  for (const auto& r : agreement::run_all(cfg)) {
    all_passed = all_passed && r.passed;
    rows.push_back(json{{"id", r.id},
                        {"criterion", r.name},
                        {"result", r.passed ? "PASS" : "FAIL"},
                        {"checks", r.checked},
                        {"failures", r.failures},
                        {"detail", r.detail}});
  }
  return json{{"seed", cfg.seed}, {"scale", cfg.scale}, {"criteria", rows}};
}

// ---------------------------------------------------------------------------
// Plain-text rendering for --format table

inline std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline bool is_flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

inline void render(const json& v, std::ostream& out, const std::string& indent) {
  if (v.is_object()) {
    if (v.contains("entries") && v.contains("rows")) {
      for (const auto& row : v["entries"]) {
        out << indent;
        for (const auto& x : row) out << std::setw(8) << scalar_text(x);
        out << "\n";
      }
      return;
    }
    for (const auto& [key, val] : v.items()) {
      if (val.is_primitive() || is_flat_array(val) || (val.is_object() && val.size() == 1 && val.contains("ghost"))) {
        out << indent << key << ": ";
        if (val.is_array()) {
          for (std::size_t i = 0; i < val.size(); ++i) out << (i ? " " : "") << scalar_text(val[i]);
        } else {
          out << scalar_text(val.is_object() ? val["ghost"] : val) << (val.is_object() ? " (ghost)" : "");
        }
        out << "\n";
      } else {
        out << indent << key << ":\n";
        render(val, out, indent + "  ");
      }
    }
    return;
  }
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_primitive()) {
        out << indent << scalar_text(x) << "\n";
      } else if (is_flat_array(x)) {
        out << indent;
        for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << scalar_text(x[i]);
        out << "\n";
      } else if (x.is_array()) {
        // a vector that mixes tangible and ghost coordinates
        out << indent;
        for (std::size_t i = 0; i < x.size(); ++i)
          out << (i ? " " : "") << (x[i].is_object() ? scalar_text(x[i]["ghost"]) + "*" : scalar_text(x[i]));
        out << "\n";
      } else {
        out << indent << "-\n";
        render(x, out, indent + "  ");
      }
    }
    return;
  }
  out << indent << scalar_text(v) << "\n";
}

inline void render_check_table(const json& report, std::ostream& out) {
  for (const auto& r : report["criteria"]) {
    out << r["result"].get<std::string>() << "  " << std::setw(2) << r["id"].get<int>() << "  "
        << std::left << std::setw(44) << r["criterion"].get<std::string>() << std::right << "  "
        << r["detail"].get<std::string>() << "\n";
  }
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"det",  "classify", "rank", "kernel", "complete-basis", "roots",
                                             "char", "check",    "check-rank-theorem"};
  return c;
}

/// Runs one invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical linear algebra"};
  app.set_help_all_flag("--help-all");
  Options opt;
  app.add_option("command", opt.command, "det | classify | rank | kernel | complete-basis | roots | char | check | check-rank-theorem")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("input", opt.input, "input JSON file, or - for stdin")->capture_default_str();
  app.add_option("--semifield", opt.semifield, "maxplus | minplus | f1 (default maxplus, or the input's own field)")
      ->check(CLI::IsMember({"maxplus", "minplus", "f1"}));
  app.add_option("--budget-dim", opt.budget_dim, "largest dimension for enumeration-based algorithms")
      ->check(CLI::Range(std::size_t(1), RankBudget::hard_cap));
  app.add_flag("--parallel", opt.parallel, "parallel permutation census for n >= 6");
  app.add_option("--format", opt.format, "json | table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--scale", opt.scale, "check: multiplier on sample counts")->check(CLI::Range(0.0001, 10.0));
  app.add_option("--seed", opt.seed, "check: random seed");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  }

  try {
    json result;
    int status = ok;
    if (opt.command == "check") {
      bool passed = false;
      result = run_check(opt, passed);
      if (!passed) status = domain_error;
      if (opt.format == "table") {
        render_check_table(result, out);
        return status;
      }
    } else {
      const json doc = read_document(opt, in);
      if (opt.command == "char") {
        result = run_char(doc);
      } else {
        switch (resolve_semifield(opt, doc)) {
          case SemifieldKind::maxplus: result = run_typed<MaxPlus>(opt, doc); break;
          case SemifieldKind::minplus: result = run_typed<MinPlus>(opt, doc); break;
          case SemifieldKind::f1: result = run_typed<F1>(opt, doc); break;
        }
      }
    }
    if (opt.format == "table") render(result, out, "");
    else out << result.dump(2) << "\n";
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return malformed_input;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return malformed_input;
  } catch (const BudgetExhausted& e) {
    err << "error: budget exhausted: " << e.what() << "\n";
    return budget_exhausted;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
}

}  // namespace tropical::cli
