// zc1 - torsion-unit analysis of integral group rings from ordinary
// character tables via the Luthar-Passi constraint method.
//
// Exit codes: 0 success (an open verdict is a result, not an error),
// 1 validation failure or engine failure, 2 usage / parse / io errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zc1/report.hpp"

namespace {

using namespace zc1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source_text(const std::string& source) {
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A table source is a built-in name, a file path, or "-" for stdin.
CharacterTable load_table(const std::string& source) {
  if (is_builtin_table(source)) return builtin_table(source);
  return parse_table(read_source_text(source));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

int cmd_list() {
  for (const auto& name : builtin_table_names()) {
    const CharacterTable& t = builtin_table(name);
    std::cout << name << " (order " << t.group_order << ", " << t.class_count()
              << " classes)\n";
  }
  std::cout << "psl2 --p <prime>  (generic PSL(2,p) table, odd prime p >= 5)\n";
  return 0;
}

int cmd_validate(const std::string& source) {
  CharacterTable t;
  if (is_builtin_table(source)) {
    t = builtin_table(source);
  } else {
    // structural problems exit 2, semantic violations exit 1
    t = parse_table_unchecked(read_source_text(source));
  }
  ValidationReport rep = validate(t);
  if (!rep.ok()) {
    std::cout << rep.str();
    std::cout << "FAIL: table '" << t.name << "' violates " << rep.issues.size()
              << " invariant(s)\n";
    return 1;
  }
  std::cout << "OK: table '" << t.name << "' passes validation\n";
  return 0;
}

struct AnalyzeArgs {
  std::string source;
  std::vector<std::int64_t> orders;
  std::string fusion_path;
  std::string quotient_source;
  bool quotient_zc1_known = false;
  bool c2_sign = false;
  bool factor_zc1_known = false;
  bool trivial_priors = false;
  std::string format = "text";
  std::string output;
};

int cmd_analyze(const AnalyzeArgs& args) {
  CharacterTable table = load_table(args.source);

  FilterConfig config;
  config.analyze.orders = args.orders;
  config.analyze.trivial_priors = args.trivial_priors;
  config.c2_sign = args.c2_sign;
  config.factor_zc1_known = args.factor_zc1_known;
  config.quotient_zc1_known = args.quotient_zc1_known;

  if (!args.fusion_path.empty()) {
    config.fusion = parse_fusion(read_source_text(args.fusion_path));
    std::string quotient_source =
        args.quotient_source.empty() ? config.fusion->target : args.quotient_source;
    if (args.quotient_source.empty() && !is_builtin_table(quotient_source))
      throw UsageError("fusion target '" + quotient_source +
                       "' is not a built-in table; pass --quotient");
    config.quotient = load_table(quotient_source);
  }

  FullAnalysis analysis = analyze_with_filters(table, config);
  write_output(args.output,
               args.format == "json" ? render_json(analysis) : render_text(analysis));
  return 0;
}

int cmd_psl2(std::int64_t p, const std::string& action, const std::string& format,
             const std::string& output) {
  if (action == "table") {
    write_output(output, serialize_table(psl2_table(p)));
    return 0;
  }
  OrderPReport report = order_p_analysis(p);
  Verdict verdict = p_zc3_for_psl2(p);
  write_output(output, format == "json" ? render_psl2_json(report, verdict)
                                        : render_psl2_text(report, verdict));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Luthar-Passi analysis of torsion units in integral group rings"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List built-in character tables");

  std::string validate_source;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a character table");
  validate_cmd->add_option("source", validate_source,
                           "Built-in name, file path, or '-' for stdin")
      ->required();

  AnalyzeArgs analyze_args;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Run the constraint analysis and report verdicts");
  analyze_cmd->add_option("source", analyze_args.source,
                          "Built-in name, file path, or '-' for stdin")
      ->required();
  analyze_cmd->add_option("--orders", analyze_args.orders,
                          "Restrict the report to these unit orders")
      ->delimiter(',');
  analyze_cmd->add_option("--fusion", analyze_args.fusion_path,
                          "Class-fusion JSON file for the quotient filter");
  analyze_cmd->add_option("--quotient", analyze_args.quotient_source,
                          "Quotient table source (defaults to the fusion target)");
  analyze_cmd->add_flag("--quotient-zc1-known", analyze_args.quotient_zc1_known,
                        "Assert ZC-1 for the quotient group (restricts images to "
                        "trivial units)");
  analyze_cmd->add_flag("--c2-sign", analyze_args.c2_sign,
                        "Apply the C2 sign filter (tables of the form G x C2)");
  analyze_cmd->add_flag("--factor-zc1-known", analyze_args.factor_zc1_known,
                        "Assert ZC-1 for the direct factor G");
  analyze_cmd->add_flag("--trivial-priors", analyze_args.trivial_priors,
                        "Assume the conjecture below each order (restrict profile "
                        "candidates to trivial solutions)");
  analyze_cmd->add_option("--format", analyze_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  analyze_cmd->add_option("-o,--output", analyze_args.output, "Write the report here");

  std::int64_t psl2_p = 0;
  std::string psl2_action, psl2_format = "text", psl2_output;
  auto* psl2_cmd = app.add_subcommand("psl2", "Generic PSL(2,p) table and order-p analysis");
  psl2_cmd->add_option("--p", psl2_p, "Odd prime >= 5")->required();
  psl2_cmd->add_option("action", psl2_action, "'table' or 'analyze'")
      ->required()
      ->check(CLI::IsMember({"table", "analyze"}));
  psl2_cmd->add_option("--format", psl2_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  psl2_cmd->add_option("-o,--output", psl2_output, "Write the output here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("validate")) return cmd_validate(validate_source);
    if (app.got_subcommand("analyze")) return cmd_analyze(analyze_args);
    if (app.got_subcommand("psl2"))
      return cmd_psl2(psl2_p, psl2_action, psl2_format, psl2_output);
  } catch (const TableValidationError& e) {
    std::cerr << e.report.str() << "error: table fails validation\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
