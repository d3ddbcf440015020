#include "qtrace/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace qtrace {

namespace {

Command command_from_name(const std::string& name) {
  if (name == "frobenius") return Command::frobenius;
  if (name == "main") return Command::main_check;
  if (name == "count") return Command::count;
  if (name == "positivity") return Command::positivity;
  if (name == "sn-trace") return Command::sn_trace;
  if (name == "rho-oracle") return Command::rho_oracle;
  if (name == "qbinom") return Command::qbinom;
  if (name == "suite") return Command::suite;
  throw UsageError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::frobenius: return "frobenius";
    case Command::main_check: return "main";
    case Command::count: return "count";
    case Command::positivity: return "positivity";
    case Command::sn_trace: return "sn-trace";
    case Command::rho_oracle: return "rho-oracle";
    case Command::qbinom: return "qbinom";
    case Command::suite: return "suite";
  }
  return "?";
}

int parse_int(const std::string& flag, const std::string& value) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("flag " + flag + " needs an integer, got '" + value + "'");
  }
}

void check_word(const std::string& word) {
  if (word.empty()) throw UsageError("invalid word '': pattern must match ^[UL]+$");
  for (char ch : word)
    if (ch != 'U' && ch != 'L')
      throw UsageError("invalid word '" + word + "': pattern must match ^[UL]+$");
}

// Shared by parse_args and the per-line suite validation.
void validate_config(RunConfig& cfg) {
  auto need_n = [&](int min, const char* what) {
    if (!cfg.n) throw UsageError(std::string("missing --n for ") + command_name(cfg.command));
    if (*cfg.n < min)
      throw UsageError(std::string("--n must be >= ") + std::to_string(min) + " for " + what);
  };
  auto need_word = [&] {
    if (!cfg.word) throw UsageError(std::string("missing --word for ") + command_name(cfg.command));
    check_word(*cfg.word);
  };
  auto forbid = [&](bool present, const char* flag) {
    if (present)
      throw UsageError(std::string("unexpected ") + flag + " for " + command_name(cfg.command));
  };

  switch (cfg.command) {
    case Command::frobenius:
      need_n(2, "frobenius");
      if (!cfg.m) throw UsageError("missing --m for frobenius");
      if (*cfg.m < 1) throw UsageError("--m must be >= 1");
      forbid(cfg.word.has_value(), "--word");
      break;
    case Command::main_check:
      need_word();
      need_n(1, "main");
      if (!cfg.m) throw UsageError("missing --m for main");
      if (!valid_root_pair(*cfg.n, *cfg.m))
        throw UsageError("invalid (n, m) pair: need m = 2n, or m = n with n odd");
      break;
    case Command::count:
      need_word();
      need_n(1, "count");
      forbid(cfg.m.has_value(), "--m");
      break;
    case Command::positivity:
      need_word();
      need_n(1, "positivity");
      forbid(cfg.m.has_value(), "--m");
      break;
    case Command::sn_trace:
      need_n(0, "sn-trace");
      forbid(cfg.m.has_value(), "--m");
      forbid(cfg.word.has_value(), "--word");
      break;
    case Command::rho_oracle:
      if (!cfg.word || (*cfg.word != "U" && *cfg.word != "L"))
        throw UsageError("rho-oracle needs --word U or --word L");
      need_n(0, "rho-oracle");
      forbid(cfg.m.has_value(), "--m");
      break;
    case Command::qbinom:
      need_n(2, "qbinom");
      forbid(cfg.m.has_value(), "--m");
      forbid(cfg.word.has_value(), "--word");
      break;
    case Command::suite:
      if (!cfg.suite_path) throw UsageError("missing --suite PATH");
      forbid(cfg.word.has_value(), "--word");
      forbid(cfg.n.has_value(), "--n");
      forbid(cfg.m.has_value(), "--m");
      break;
  }
  if (cfg.command != Command::suite && cfg.suite_path)
    throw UsageError("--suite is only valid with the suite command");
}

Report run_one(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::frobenius: return check_frobenius(*cfg.n, *cfg.m);
    case Command::main_check: return check_main(WordSpec(*cfg.word), *cfg.n, *cfg.m);
    case Command::count: return check_count(WordSpec(*cfg.word), *cfg.n);
    case Command::positivity: return check_positivity(WordSpec(*cfg.word), *cfg.n);
    case Command::sn_trace: return check_sn_trace(*cfg.n);
    case Command::rho_oracle: return check_rho_oracle((*cfg.word)[0], *cfg.n);
    case Command::qbinom: return check_qbinom_vanishing(*cfg.n);
    case Command::suite: break;
  }
  throw std::logic_error("run_one: not a single check");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  if (argv.size() < 2) throw UsageError("missing command");
  RunConfig cfg;
  cfg.command = command_from_name(argv[1]);
  for (std::size_t i = 2; i < argv.size(); ++i) {
    std::string flag = argv[i];
    std::string value;
    bool has_value = false;
    if (auto eq = flag.find('='); eq != std::string::npos) {
      value = flag.substr(eq + 1);
      flag.erase(eq);
      has_value = true;
    }
    auto take = [&]() -> std::string {
      if (has_value) return value;
      if (++i >= argv.size()) throw UsageError("flag " + flag + " needs a value");
      return argv[i];
    };
    if (flag == "--word") {
      cfg.word = take();
    } else if (flag == "--n") {
      cfg.n = parse_int(flag, take());
    } else if (flag == "--m") {
      cfg.m = parse_int(flag, take());
    } else if (flag == "--suite") {
      cfg.suite_path = take();
    } else if (flag == "--output") {
      std::string v = take();
      if (v == "text")
        cfg.output = OutputMode::text;
      else if (v == "json")
        cfg.output = OutputMode::json;
      else
        throw UsageError("--output must be 'text' or 'json', got '" + v + "'");
    } else {
      throw UsageError("unknown flag '" + flag + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == Command::suite) return run_suite(*cfg.suite_path, cfg.output, out);
  Report report = run_one(cfg);
  if (cfg.output == OutputMode::json)
    out << to_json_string(report) << "\n";
  else
    out << to_text(report);
  out.flush();
  if (!out) {
    std::cerr << "error: failed to write report\n";
    return 2;
  }
  return report.pass ? 0 : 1;
}

int run_suite(const std::string& path, OutputMode output, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open suite file '" << path << "'\n";
    return 2;
  }
  std::vector<RunConfig> items;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RunConfig cfg;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      if (!j.is_object()) throw UsageError("expected a JSON object");
      for (const auto& [key, value] : j.items()) {
        if (key == "check") {
          cfg.command = command_from_name(value.get<std::string>());
        } else if (key == "word") {
          cfg.word = value.get<std::string>();
        } else if (key == "n") {
          cfg.n = value.get<int>();
        } else if (key == "m") {
          cfg.m = value.get<int>();
        } else {
          throw UsageError("unknown key '" + key + "'");
        }
      }
      if (!j.contains("check")) throw UsageError("missing 'check'");
      if (cfg.command == Command::suite) throw UsageError("nested suites are not supported");
      validate_config(cfg);
    } catch (const std::exception& e) {
      std::cerr << "error: suite line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
    items.push_back(std::move(cfg));
  }

  std::vector<Report> reports;
  reports.reserve(items.size());
  bool all_pass = true;
  for (const auto& item : items) {
    reports.push_back(run_one(item));
    all_pass = all_pass && reports.back().pass;
  }
  if (output == OutputMode::json) {
    out << to_json_string(reports) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
  }
  out.flush();
  if (!out) {
    std::cerr << "error: failed to write report\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

std::string usage_text() {
  return R"(usage: qtrace <command> [options]

commands:
  frobenius    --n N --m M          (X+Y)^n vs X^n + Y^n with q of order m
  main         --word W --n N --m M Chebyshev power identity for a matrix word
  count        --word W --n N       monomial count of T_n(trace) at generic q
  positivity   --word W --n N       sign check of T_n(trace) and S_n(trace)
  sn-trace     --n N                trace of the degree-n action vs S_n(a+d)
  rho-oracle   --word U|L --n N     closed-form action matrix vs substitution
  qbinom       --n N                vanishing of [n k]_q at a primitive n-th root

  suite        --suite PATH         run a JSON-lines batch of the checks above

options:
  --output text|json                report format (default text)

exit status: 0 all checks pass, 1 some check fails, 2 usage or I/O error
)";
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << usage_text();
    return 2;
  }
  try {
    return run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qtrace
