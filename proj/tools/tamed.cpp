#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "tamed/report.hpp"

using namespace tamed;

namespace {

// exit codes: 0 Exists, 1 NotExists, 2 Unknown, >2 errors
constexpr int kError = 3;
constexpr int kUsage = 4;

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

ParamMap parse_params(const std::vector<std::string>& raw) {
  ParamMap out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidArgument, "--param expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tamed: invariant taming and SKT structures on Lie algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool as_json = false, as_text = false;
  auto add_common = [&](CLI::App* sub, bool format) {
    sub->add_option("--seed", seed, "seed for randomized restarts")->default_val(0);
    sub->add_option("--tol", tol, "floating tolerance for weights")->default_val(1e-9);
    if (format) {
      auto* j = sub->add_flag("--json", as_json, "JSON output");
      auto* t = sub->add_flag("--text", as_text, "plain text output");
      j->excludes(t);
    }
  };

  std::string file;
  auto* check = app.add_subcommand("check", "structure facts of an algebra document");
  check->add_option("file", file, "algebra document (- for stdin)")->required();
  add_common(check, true);

  bool taming = false, skt = false;
  auto* decide = app.add_subcommand("decide", "decide existence of a taming form or an SKT metric");
  decide->add_option("file", file, "algebra document with J (- for stdin)")->required();
  auto* ft = decide->add_flag("--taming", taming, "closed forms taming J (default)");
  auto* fs = decide->add_flag("--skt", skt, "dd^c-closed positive (1,1)-forms");
  ft->excludes(fs);
  add_common(decide, true);

  auto* cat = app.add_subcommand("catalog", "built-in example algebras");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list entries and parameters");
  std::string entry;
  std::vector<std::string> params;
  auto* emit = cat->add_subcommand("emit", "emit an entry as an algebra document");
  emit->add_option("id", entry, "entry id")->required();
  emit->add_option("--param", params, "parameter key=value")->take_all();

  std::string only;
  bool corrupt = false;
  auto* table = app.add_subcommand("paper-table", "regression table of expected verdicts");
  table->add_option("--only", only, "keep entries whose id or label contains this");
  table->add_flag("--corrupt-fixture", corrupt, "flip the first expectation (self-test)")->group("");
  add_common(table, false);

  auto* verify = app.add_subcommand("verify-report", "re-verify the certificates in a JSON report");
  verify->add_option("file", file, "report (- for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  DecideOptions opt;
  opt.seed = seed;
  opt.tolerance = tol;

  try {
    if (*check) {
      VerdictReport r = check_report(parse_document(slurp(file)), opt);
      std::cout << (as_json ? report_json(r) : report_text(r));
      return 0;
    }
    if (*decide) {
      if (!skt) taming = true;
      VerdictReport r = decide_report(parse_document(slurp(file)), taming, skt, opt);
      std::cout << (as_json ? report_json(r) : report_text(r));
      const Verdict& v = taming ? *r.taming : *r.skt;
      switch (v.kind) {
        case VerdictKind::Exists: return 0;
        case VerdictKind::NotExists: return 1;
        case VerdictKind::Unknown: return 2;
      }
      return 2;
    }
    if (*list) {
      for (const auto& s : catalog()) {
        std::cout << s.id << "  " << s.description << "\n";
        for (const auto& p : s.params) {
          std::cout << "    --param " << p.name << "=<" << p.kind << ">";
          if (!p.default_value.empty()) std::cout << "  default " << p.default_value;
          if (!p.constraint.empty()) std::cout << "  (" << p.constraint << ")";
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (*emit) {
      std::cout << emit_document(document_from_entry(build_entry(entry, parse_params(params))));
      return 0;
    }
    if (*table) {
      auto entries = regression_table_entries(only);
      if (corrupt && !entries.empty()) {
        for (auto& e : entries) {
          if (e.expected.empty()) continue;
          auto& x = e.expected.front();
          x.kind = x.kind == VerdictKind::Exists ? VerdictKind::NotExists : VerdictKind::Exists;
          e.label += "*";
          break;
        }
      }
      RegressionTable t = regression_table(entries, opt);
      std::cout << t.text();
      return t.all_match() ? 0 : 1;
    }
    if (*verify) {
      auto problems = verify_report(slurp(file));
      if (problems.empty()) {
        std::cout << "OK: every certificate re-verified\n";
        return 0;
      }
      for (const auto& p : problems) std::cout << "FAIL: " << p << "\n";
      return 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}
