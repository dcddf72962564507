#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordkit/bijection.hpp"
#include "chordkit/counting.hpp"
#include "chordkit/diagram.hpp"
#include "chordkit/enumeration.hpp"
#include "chordkit/recurrence.hpp"
#include "chordkit/render.hpp"

namespace {

using namespace chordkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Every subcommand writes its stdout payload through here so --out FILE can
// redirect it.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Residual report rendering lives here: the library reports, the CLI formats.
int emit_residuals(const ResidualReport& report, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    nlohmann::json j;
    j["passed"] = report.passed;
    j["residuals"] = nlohmann::json::array();
    for (const auto& [n, r] : report.residuals)
      j["residuals"].push_back(
          {{"n", n}, {"residual", r.get_num().get_str() +
                                      (r.get_den() == 1
                                           ? ""
                                           : "/" + r.get_den().get_str())}});
    out << j.dump(2) << "\n";
  } else {
    const long first = report.residuals.empty() ? 0 : report.residuals.front().first;
    const long last = report.residuals.empty() ? 0 : report.residuals.back().first;
    out << "check-recurrence: " << (report.passed ? "PASS" : "FAIL") << " ("
        << report.residuals.size() << " residuals, n=" << first << ".." << last
        << (report.passed ? ", all zero" : "") << ")\n";
    if (!report.passed)
      for (const auto& [n, r] : report.residuals)
        if (r != 0) out << "  n=" << n << ": residual " << r.get_str() << "\n";
  }
  return report.passed ? 0 : 2;
}

void emit_fit(const FitOutcome& outcome, std::ostream& out) {
  if (outcome.verdict == FitVerdict::fitted) {
    nlohmann::json j = nlohmann::json::parse(spec_to_json(*outcome.spec));
    j["verdict"] = "fitted";
    out << j.dump(2) << "\n";
  } else if (outcome.verdict == FitVerdict::underdetermined) {
    nlohmann::json j;
    j["verdict"] = "underdetermined";
    j["nullity"] = outcome.nullity;
    out << j.dump(2) << "\n";
  } else {
    out << "{\"verdict\": \"none\"}\n";
  }
}

// Row of counts for fixed k over n = 1..max_n (leading zeros included), the
// shape the recurrence examples use.
std::vector<BigCount> full_row(int k, int max_n) {
  if (k < 1) throw DomainError("k must be positive");
  if (max_n < k) throw DomainError("need max-n >= k");
  std::vector<BigCount> row;
  row.reserve(static_cast<size_t>(max_n));
  for (int n = 1; n <= max_n; ++n)
    row.push_back(n < k ? BigCount(0) : count_dp(n, k));
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear chord diagrams with a minimum chord length: exact counts,"
               " enumeration, the diagonal correspondence, recurrences, figures."};
  app.require_subcommand(1);

  // count
  auto* cmd_count = app.add_subcommand("count", "Count diagrams with all chords of length >= k");
  int count_n = 0, count_k = 0;
  std::string count_method = "dp", count_out;
  cmd_count->add_option("--n", count_n, "number of chords")->required();
  cmd_count->add_option("--k", count_k, "minimum chord length")->required();
  cmd_count->add_option("--method", count_method, "dp or brute (enumeration oracle)")
      ->check(CLI::IsMember({"dp", "brute"}));
  cmd_count->add_option("--out", count_out, "write output to a file");

  // table
  auto* cmd_table = app.add_subcommand("table", "Counts for all 1 <= k <= n <= max-n");
  int table_max_n = 0;
  std::string table_format = "csv", table_out;
  cmd_table->add_option("--max-n", table_max_n, "largest size")->required();
  cmd_table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_table->add_option("--out", table_out, "write output to a file");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "List the diagrams, one per line");
  int enum_n = 0, enum_k = 0;
  std::string enum_out;
  cmd_enum->add_option("--n", enum_n, "number of chords")->required();
  cmd_enum->add_option("--k", enum_k, "minimum chord length")->required();
  cmd_enum->add_option("--out", enum_out, "write output to a file");

  // alpha
  auto* cmd_alpha = app.add_subcommand(
      "alpha", "Insert-and-swap map into the (n+1, k+1) class with class index i");
  std::string alpha_diagram, alpha_out;
  int alpha_k = 0, alpha_i = 0;
  cmd_alpha->add_option("--diagram", alpha_diagram, "diagram text, e.g. \"1-3,2-5,4-6\"")
      ->required();
  cmd_alpha->add_option("--k", alpha_k, "minimum chord length of the input")->required();
  cmd_alpha->add_option("--i", alpha_i, "target class index")->required();
  cmd_alpha->add_option("--out", alpha_out, "write output to a file");

  // beta
  auto* cmd_beta = app.add_subcommand(
      "beta", "Swap-and-delete map onto the (n-1, k-1) class");
  std::string beta_diagram, beta_out;
  int beta_k = 0;
  cmd_beta->add_option("--diagram", beta_diagram, "diagram text")->required();
  cmd_beta->add_option("--k", beta_k, "minimum chord length of the input")->required();
  cmd_beta->add_option("--out", beta_out, "write output to a file");

  // class-index
  auto* cmd_class = app.add_subcommand("class-index",
                                       "Side starts left of the removable chord");
  std::string class_diagram, class_out;
  int class_k = 0;
  cmd_class->add_option("--diagram", class_diagram, "diagram text")->required();
  cmd_class->add_option("--k", class_k, "minimum chord length of the input")->required();
  cmd_class->add_option("--out", class_out, "write output to a file");

  // verify-theorem
  auto* cmd_verify = app.add_subcommand(
      "verify-theorem", "Check the diagonal identity at one (n, k) cell");
  int verify_n = 0, verify_k = 0;
  std::string verify_mode = "counts", verify_format = "text", verify_out;
  cmd_verify->add_option("--n", verify_n, "source size")->required();
  cmd_verify->add_option("--k", verify_k, "source minimum length")->required();
  cmd_verify->add_option("--mode", verify_mode, "counts or exhaustive")
      ->check(CLI::IsMember({"counts", "exhaustive"}));
  cmd_verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_option("--out", verify_out, "write output to a file");

  // check-recurrence
  auto* cmd_check = app.add_subcommand("check-recurrence",
                                       "Evaluate a recurrence's residuals on a row");
  std::string check_spec, check_csv, check_format = "text", check_out;
  int check_row_k = 0, check_max_n = 0;
  long check_from_n = 0;
  cmd_check->add_option("--spec", check_spec, "recurrence JSON file")->required();
  auto* check_csv_opt =
      cmd_check->add_option("--csv", check_csv, "sequence file of n,value lines");
  auto* check_row_opt = cmd_check->add_option(
      "--row", check_row_k, "use the counts row for this k (n from 1)");
  auto* check_maxn_opt =
      cmd_check->add_option("--max-n", check_max_n, "last n of the row");
  cmd_check->add_option("--from-n", check_from_n,
                        "ignore residuals for n below this");
  cmd_check->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_check->add_option("--out", check_out, "write output to a file");
  check_csv_opt->excludes(check_row_opt);
  check_row_opt->needs(check_maxn_opt);

  // fit-recurrence
  auto* cmd_fit = app.add_subcommand("fit-recurrence",
                                     "Fit polynomial-coefficient recurrences to a row");
  std::string fit_csv, fit_out;
  int fit_row_k = 0, fit_max_n = 0, fit_order = 0, fit_degree = 0;
  int fit_max_order = 0, fit_max_degree = 0, fit_validation = 3;
  long fit_from_n = 0;
  bool fit_search = false;
  auto* fit_csv_opt =
      cmd_fit->add_option("--csv", fit_csv, "sequence file of n,value lines");
  auto* fit_row_opt = cmd_fit->add_option(
      "--row", fit_row_k, "use the counts row for this k (n from 1)");
  auto* fit_maxn_opt = cmd_fit->add_option("--max-n", fit_max_n, "last n of the row");
  auto* fit_order_opt = cmd_fit->add_option("--order", fit_order, "recurrence order");
  auto* fit_degree_opt =
      cmd_fit->add_option("--degree", fit_degree, "coefficient polynomial degree");
  auto* fit_search_opt = cmd_fit->add_flag(
      "--search", fit_search, "try (order, degree) pairs in increasing order+degree");
  auto* fit_maxorder_opt =
      cmd_fit->add_option("--max-order", fit_max_order, "search bound on order");
  auto* fit_maxdegree_opt =
      cmd_fit->add_option("--max-degree", fit_max_degree, "search bound on degree");
  cmd_fit->add_option("--validation", fit_validation, "held-out terms (default 3)");
  cmd_fit->add_option("--from-n", fit_from_n,
                      "first row term the fit may reference (default: k with "
                      "--row, else the sequence start)");
  cmd_fit->add_option("--out", fit_out, "write output to a file");
  fit_csv_opt->excludes(fit_row_opt);
  fit_row_opt->needs(fit_maxn_opt);
  fit_order_opt->needs(fit_degree_opt);
  fit_order_opt->excludes(fit_search_opt);
  fit_maxorder_opt->needs(fit_search_opt);
  fit_maxdegree_opt->needs(fit_search_opt);

  // render
  auto* cmd_render = app.add_subcommand("render", "Draw a diagram as SVG or TikZ");
  std::string render_diagram, render_format = "svg", render_out;
  int render_highlight_k = 0;
  bool render_mark = false;
  cmd_render->add_option("--diagram", render_diagram, "diagram text")->required();
  cmd_render->add_option("--format", render_format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  auto* render_hl_opt = cmd_render->add_option(
      "--highlight-k", render_highlight_k,
      "bold the chords touching the middle region of this split");
  cmd_render->add_flag("--mark", render_mark,
                       "dash the chord ending just right of the middle region");
  cmd_render->add_option("--out", render_out, "write output to a file");
  (void)render_hl_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_count)) {
      OutputSink sink(count_out);
      const BigCount value = count_method == "brute"
                                 ? count_brute(count_n, count_k)
                                 : count_dp(count_n, count_k);
      sink.stream() << value.get_str() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_table)) {
      OutputSink sink(table_out);
      const CountTable table = build_table(table_max_n);
      sink.stream() << (table_format == "json" ? table.to_json() : table.to_csv());
      return 0;
    }

    if (app.got_subcommand(cmd_enum)) {
      OutputSink sink(enum_out);
      DiagramEnumerator en(enum_n, enum_k);
      while (auto d = en.next()) sink.stream() << to_text(*d) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_alpha)) {
      OutputSink sink(alpha_out);
      const ChordDiagram d = parse_diagram(alpha_diagram);
      sink.stream() << to_text(alpha(d, alpha_k, alpha_i)) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_beta)) {
      OutputSink sink(beta_out);
      const ChordDiagram d = parse_diagram(beta_diagram);
      sink.stream() << to_text(beta(d, beta_k)) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_class)) {
      OutputSink sink(class_out);
      const ChordDiagram d = parse_diagram(class_diagram);
      sink.stream() << class_index(d, class_k) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      OutputSink sink(verify_out);
      const TheoremReport report =
          verify_mode == "exhaustive" ? verify_theorem_exhaustive(verify_n, verify_k)
                                      : verify_theorem_counts(verify_n, verify_k);
      sink.stream() << (verify_format == "json" ? to_json(report) : to_text(report));
      return report.passed ? 0 : 2;
    }

    if (app.got_subcommand(cmd_check)) {
      OutputSink sink(check_out);
      const RecurrenceSpec spec = spec_from_json(read_file(check_spec));
      std::vector<BigCount> seq;
      long offset = 0;
      if (check_row_opt->count()) {
        seq = full_row(check_row_k, check_max_n);
        offset = 1;
      } else if (check_csv_opt->count()) {
        std::tie(seq, offset) = sequence_from_csv(read_file(check_csv));
      } else {
        throw DomainError("check-recurrence needs --csv or --row");
      }
      ResidualReport report = check_recurrence(spec, seq, offset);
      if (cmd_check->count("--from-n")) {
        std::erase_if(report.residuals,
                      [&](const auto& p) { return p.first < check_from_n; });
        report.passed = true;
        for (const auto& [n, r] : report.residuals)
          if (r != 0) report.passed = false;
      }
      return emit_residuals(report, check_format, sink.stream());
    }

    if (app.got_subcommand(cmd_fit)) {
      OutputSink sink(fit_out);
      std::vector<BigCount> seq;
      long offset = 0;
      std::optional<long> first_term;
      if (fit_row_opt->count()) {
        seq = full_row(fit_row_k, fit_max_n);
        offset = 1;
        // Skip the leading zeros: the usable row starts at n = k, so a fit of
        // order r trains on equations from n = k + r.
        first_term = static_cast<long>(fit_row_k);
      } else if (fit_csv_opt->count()) {
        std::tie(seq, offset) = sequence_from_csv(read_file(fit_csv));
      } else {
        throw DomainError("fit-recurrence needs --csv or --row");
      }
      if (cmd_fit->count("--from-n")) first_term = fit_from_n;

      FitOutcome outcome;
      if (fit_search) {
        if (!fit_maxorder_opt->count() || !fit_maxdegree_opt->count())
          throw DomainError("--search needs --max-order and --max-degree");
        outcome = search_recurrence(seq, offset, fit_max_order, fit_max_degree,
                                    fit_validation, first_term);
      } else {
        if (!fit_order_opt->count())
          throw DomainError("fit-recurrence needs --order/--degree or --search");
        outcome = fit_recurrence(seq, offset, fit_order, fit_degree,
                                 fit_validation, first_term);
      }
      emit_fit(outcome, sink.stream());
      return 0;
    }

    if (app.got_subcommand(cmd_render)) {
      OutputSink sink(render_out);
      const ChordDiagram d = parse_diagram(render_diagram);
      RenderOptions options;
      options.format =
          render_format == "tikz" ? RenderFormat::tikz : RenderFormat::svg;
      if (render_hl_opt->count()) options.highlight_k = render_highlight_k;
      options.mark_chord = render_mark;
      sink.stream() << render_figure(d, options);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
