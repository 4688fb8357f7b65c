// Command-line front end: evaluate truncations, verify identities, sweep
// depths to CSV/SVG, and parse/pretty-print radical expressions.
//
// Exit codes: 0 success, 1 verification failure, 2 argument or syntax error,
// 3 numeric domain error, 4 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radix/radix.hpp"

namespace {

using namespace radix;

constexpr unsigned kMinPrecision = 16;

unsigned default_precision() {
  const char* env = std::getenv("RADIX_PRECISION");
  if (env == nullptr || *env == '\0') return 128;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < long(kMinPrecision) || v > 1 << 20)
    throw std::invalid_argument(
        std::string("RADIX_PRECISION must be an integer >= 16, got '") + env +
        "'");
  return static_cast<unsigned>(v);
}

rational flag_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument("invalid " + name + " '" + text +
                                "': " + e.what());
  }
}

rational start_rational(const std::string& text) {
  try {
    rational v = parse_rational(text);
    if (v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(
      "invalid --start '" + text +
      "': the family needs an exact rational x >= 1 (e.g. 3/2, not 1.5)");
}

void check_precision(unsigned precision) {
  if (precision < kMinPrecision)
    throw std::invalid_argument("precision must be >= 16");
}

tail_policy tail_from_name(const std::string& name, const rational& q) {
  if (name == "zero") return tail_policy::zero();
  if (name == "fixed") return tail_policy::fixed_point();
  if (name == "scaled") return tail_policy::scaled(q);
  throw std::invalid_argument("unknown tail policy '" + name +
                              "' (expected zero, fixed, scaled or enclose)");
}

void print_interval(const interval& v, unsigned digits) {
  std::cout << "lower = " << to_decimal_string(v.lo(), digits, round_dir::down)
            << "\n";
  std::cout << "upper = " << to_decimal_string(v.hi(), digits, round_dir::up)
            << "\n";
  std::cout << "width = "
            << to_decimal_string(v.width(), digits, round_dir::up) << "\n";
}

std::string rational_text(const rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

struct eval_options {
  unsigned order = 3;
  std::string start = "1";
  std::int64_t depth = 16;
  unsigned precision = 0;
  std::string tail = "fixed";
  std::string q = "3/2";
  unsigned digits = 12;
};

int cmd_eval(const eval_options& opt) {
  check_precision(opt.precision);
  rational start = start_rational(opt.start);
  rational q = flag_rational("--q", opt.q);
  general_spec spec(opt.order, start);

  std::cout << "order = " << opt.order << "\n";
  std::cout << "start = " << rational_text(start) << "\n";
  std::cout << "depth = " << opt.depth << "\n";
  std::cout << "precision = " << opt.precision << "\n";

  const bool scaled_like = opt.tail == "scaled" || opt.tail == "enclose";
  if (scaled_like && opt.order != 3)
    std::cout << "note = conditional enclosure: the scaled upper tail factor "
                 "2^q is derived for order 3; other orders use q = "
              << rational_text(q) << " as a heuristic\n";

  interval value = [&] {
    if (opt.tail == "enclose") {
      std::cout << "tail = enclose\n";
      return enclose(spec, opt.depth, opt.precision, q);
    }
    tail_policy policy = tail_from_name(opt.tail, q);
    std::cout << "tail = " << policy.name() << "\n";
    return truncated_eval(spec, opt.depth, policy, opt.precision).value;
  }();

  std::cout << "limit = " << rational_text(limit_value(spec)) << "\n";
  print_interval(value, opt.digits);
  return 0;
}

struct entry4_options {
  std::string x = "2", nprime = "1", a = "0";
  std::int64_t depth = 16;
  unsigned precision = 0;
  std::string tail = "fixed";
  std::string q = "3/2";
  unsigned digits = 12;
};

int cmd_entry4(const entry4_options& opt) {
  check_precision(opt.precision);
  entry4_spec spec{flag_rational("--x", opt.x),
                   flag_rational("--nprime", opt.nprime),
                   flag_rational("--a", opt.a)};
  rational q = flag_rational("--q", opt.q);

  std::cout << "x = " << rational_text(spec.x) << "\n";
  std::cout << "nprime = " << rational_text(spec.nprime) << "\n";
  std::cout << "a = " << rational_text(spec.a) << "\n";
  std::cout << "depth = " << opt.depth << "\n";
  std::cout << "precision = " << opt.precision << "\n";

  tail_policy policy = tail_from_name(opt.tail, q);
  std::cout << "tail = " << policy.name() << "\n";
  auto res = truncated_eval(spec, opt.depth, policy, opt.precision);
  std::cout << "limit = " << rational_text(limit_value(spec)) << "\n";
  print_interval(res.value, opt.digits);
  return 0;
}

int cmd_verify(unsigned max_order, bool ansatz_only) {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << name << " = " << (pass ? "PASS" : "FAIL") << "\n";
    ok = ok && pass;
  };

  if (!ansatz_only) {
    for (unsigned n = 2; n <= max_order; ++n)
      report("identity_order_" + std::to_string(n),
             functional_identity_check(n));
    for (unsigned n = 2; n <= std::min(max_order, 10u); ++n) {
      bool pass = false;
      try {
        pass = infer_degree(n) == 1;
      } catch (const no_integer_degree_error&) {
        pass = false;
      }
      report("degree_order_" + std::to_string(n), pass);
    }
  }

  auto candidates = solve_linear_ansatz();
  int winners = 0;
  rational win_a, win_b;
  for (const auto& c : candidates) {
    std::ostringstream name;
    name << "ansatz_a" << c.a << "_b" << c.b << "_relations";
    std::cout << name.str() << " = " << (c.satisfied[0] ? 1 : 0)
              << (c.satisfied[1] ? 1 : 0) << (c.satisfied[2] ? 1 : 0)
              << (c.satisfied[3] ? 1 : 0) << "\n";
    if (c.all_satisfied()) {
      ++winners;
      win_a = c.a;
      win_b = c.b;
    }
  }
  report("ansatz_unique", winners == 1);
  if (winners == 1) {
    std::cout << "ansatz_a = " << rational_text(win_a) << "\n";
    std::cout << "ansatz_b = " << rational_text(win_b) << "\n";
    report("ansatz_solution", win_a == 1 && win_b == 1);
  }
  return ok ? 0 : 1;
}

struct sweep_options {
  unsigned order = 3;
  std::string start = "1";
  std::int64_t max_depth = 8;
  unsigned precision = 0;
  std::string tail = "zero";
  std::string q = "3/2";
  unsigned digits = 12;
  std::string csv_path;
  std::string svg_path;
};

int cmd_sweep(const sweep_options& opt) {
  check_precision(opt.precision);
  general_spec spec(opt.order, start_rational(opt.start));
  tail_policy policy = tail_from_name(opt.tail, flag_rational("--q", opt.q));

  auto results = depth_sweep(spec, opt.max_depth, policy, opt.precision);
  auto rows = make_rows(results, opt.digits);

  if (!opt.csv_path.empty()) {
    std::string csv = to_csv(rows);
    if (opt.csv_path == "-") {
      std::cout << csv;
    } else {
      std::ofstream out(opt.csv_path, std::ios::binary);
      if (!out || !(out << csv))
        throw std::ios_base::failure("cannot write '" + opt.csv_path + "'");
    }
  }
  if (!opt.svg_path.empty()) {
    std::string svg = to_svg(rows, limit_value(spec));
    if (opt.svg_path == "-") {
      std::cout << svg;
    } else {
      std::ofstream out(opt.svg_path, std::ios::binary);
      if (!out || !(out << svg))
        throw std::ios_base::failure("cannot write '" + opt.svg_path + "'");
    }
  }
  return 0;
}

int cmd_parse(const std::string& input, bool latex) {
  rad_expr e = radix::parse(input);
  std::cout << (latex ? print_latex(e) : print_text(e)) << "\n";
  return 0;
}

int cmd_bracket(unsigned order, std::int64_t k_max, unsigned precision,
                const std::string& q0_text, unsigned digits) {
  check_precision(precision);
  rational q0 = flag_rational("--q0", q0_text);
  std::cout << "order = " << order << "\n";
  std::cout << "q0 = " << rational_text(q0) << "\n";
  auto constants = bracket_constants(order, k_max, precision, q0);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    auto b = refine_bracket(order, k, q0);
    std::cout << "exponent_" << k << " = " << rational_text(b.hi_exponent)
              << "\n";
    std::cout << "constant_" << k << " = ["
              << to_decimal_string(constants[std::size_t(k)].lo(), digits,
                                   round_dir::down)
              << ", "
              << to_decimal_string(constants[std::size_t(k)].hi(), digits,
                                   round_dir::up)
              << "]\n";
  }
  return 0;
}

void print_caret_diagnostic(const std::string& input, const syntax_error& e) {
  std::cerr << "error: " << e.what() << " at " << e.line() << ":" << e.column()
            << "\n";
  std::istringstream lines(input);
  std::string line;
  for (int i = 0; i < e.line() && std::getline(lines, line); ++i) {
  }
  std::cerr << "  " << line << "\n";
  std::cerr << "  " << std::string(std::size_t(e.column() > 0 ? e.column() - 1
                                                              : 0),
                                   ' ')
            << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested radical evaluator with certified interval enclosures"};
  app.require_subcommand(1);

  eval_options ev;
  entry4_options e4;
  sweep_options sw;
  unsigned verify_max_order = 64;
  std::string parse_input;
  bool parse_latex = false;
  unsigned bracket_order = 3;
  std::int64_t bracket_kmax = 10;
  unsigned bracket_precision = 0;
  std::string bracket_q0 = "3/2";
  unsigned bracket_digits = 12;

  auto* eval_cmd =
      app.add_subcommand("eval", "Evaluate one truncation of the family");
  eval_cmd->add_option("--order", ev.order, "Root order (>= 2)");
  eval_cmd->add_option("--start", ev.start, "Starting value x (rational >= 1)");
  eval_cmd->add_option("--depth", ev.depth, "Truncation depth (>= 1)");
  eval_cmd->add_option("--precision", ev.precision, "Working precision, bits");
  eval_cmd->add_option("--tail", ev.tail, "zero | fixed | scaled | enclose");
  eval_cmd->add_option("--q", ev.q, "Scaled-tail exponent q (rational)");
  eval_cmd->add_option("--digits", ev.digits, "Output significant digits");

  auto* verify_cmd =
      app.add_subcommand("verify", "Check the layer identity and the ansatz");
  verify_cmd->add_option("--max-order", verify_max_order,
                         "Largest root order to check (>= 2)");
  auto* ansatz_cmd =
      app.add_subcommand("ansatz", "Check only the linear ansatz candidates");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate depths 1..N to CSV/SVG");
  sweep_cmd->add_option("--order", sw.order, "Root order (>= 2)");
  sweep_cmd->add_option("--start", sw.start, "Starting value x (rational >= 1)");
  sweep_cmd->add_option("--max-depth", sw.max_depth, "Deepest truncation");
  sweep_cmd->add_option("--precision", sw.precision, "Working precision, bits");
  sweep_cmd->add_option("--tail", sw.tail, "zero | fixed | scaled");
  sweep_cmd->add_option("--q", sw.q, "Scaled-tail exponent q (rational)");
  sweep_cmd->add_option("--digits", sw.digits, "Rendered significant digits");
  sweep_cmd->add_option("--csv", sw.csv_path, "CSV output path ('-' = stdout)");
  sweep_cmd->add_option("--svg", sw.svg_path, "SVG output path ('-' = stdout)");

  auto* entry4_cmd = app.add_subcommand(
      "entry4", "Evaluate the square-root family with parameters x, n', a");
  entry4_cmd->add_option("--x", e4.x, "Parameter x (rational)");
  entry4_cmd->add_option("--nprime", e4.nprime, "Parameter n' (rational)");
  entry4_cmd->add_option("--a", e4.a, "Parameter a (rational)");
  entry4_cmd->add_option("--depth", e4.depth, "Truncation depth (>= 1)");
  entry4_cmd->add_option("--precision", e4.precision, "Working precision");
  entry4_cmd->add_option("--tail", e4.tail, "zero | fixed | scaled");
  entry4_cmd->add_option("--q", e4.q, "Scaled-tail exponent q (rational)");
  entry4_cmd->add_option("--digits", e4.digits, "Output significant digits");

  auto* parse_cmd =
      app.add_subcommand("parse", "Parse an expression and print it back");
  parse_cmd->add_option("input", parse_input, "Expression text")->required();
  parse_cmd->add_flag("--latex", parse_latex, "Emit LaTeX instead of text");

  auto* bracket_cmd = app.add_subcommand(
      "bracket", "Print the shrinking exponent bracket and its constants");
  bracket_cmd->add_option("--order", bracket_order, "Root order (>= 2)");
  bracket_cmd->add_option("--k-max", bracket_kmax, "Last refinement step");
  bracket_cmd->add_option("--precision", bracket_precision,
                          "Working precision, bits");
  bracket_cmd->add_option("--q0", bracket_q0, "Initial exponent (rational)");
  bracket_cmd->add_option("--digits", bracket_digits, "Output digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    unsigned env_precision = default_precision();
    if (ev.precision == 0) ev.precision = env_precision;
    if (e4.precision == 0) e4.precision = env_precision;
    if (sw.precision == 0) sw.precision = env_precision;
    if (bracket_precision == 0)
      bracket_precision = env_precision == 128 ? 64 : env_precision;

    if (eval_cmd->parsed()) return cmd_eval(ev);
    if (verify_cmd->parsed()) {
      if (verify_max_order < 2)
        throw std::invalid_argument("--max-order must be >= 2");
      return cmd_verify(verify_max_order, false);
    }
    if (ansatz_cmd->parsed()) return cmd_verify(2, true);
    if (sweep_cmd->parsed()) return cmd_sweep(sw);
    if (entry4_cmd->parsed()) return cmd_entry4(e4);
    if (parse_cmd->parsed()) {
      try {
        return cmd_parse(parse_input, parse_latex);
      } catch (const syntax_error& e) {
        print_caret_diagnostic(parse_input, e);
        return 2;
      }
    }
    if (bracket_cmd->parsed())
      return cmd_bracket(bracket_order, bracket_kmax, bracket_precision,
                         bracket_q0, bracket_digits);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const negative_radicand_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tail_placement_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
