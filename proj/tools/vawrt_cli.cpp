#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vawrt/presets.hpp"
#include "vawrt/report.hpp"

namespace {

using vawrt::kExitInput;

/// Writes through a temporary file in the target directory, then renames.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw vawrt::InputError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw vawrt::InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

struct Global {
  bool decimal = false;
  bool cross_check = false;
  std::string quals = "diagnostic";
  std::string output;
};

int emit(const vawrt::RunResult& r, const Global& g) {
  for (const std::string& w : r.warnings) std::cerr << "warning: oracle disagreement in " << w << "\n";
  const std::string text = vawrt::render(r.report);
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_atomic(g.output, text);
  }
  return r.exit_code;
}

vawrt::RunOptions options(const Global& g, std::string source) {
  vawrt::RunOptions o;
  o.source = std::move(source);
  o.decimal = g.decimal;
  o.cross_check = g.cross_check;
  o.quals = g.quals == "strict" ? vawrt::QualsMode::kStrict : vawrt::QualsMode::kDiagnostic;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal cones, coderivatives and calculus rules wrt a set for polyhedral data"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--decimal", g.decimal, "Append decimal approximations to rational entries");
  app.add_flag("--cross-check", g.cross_check, "Validate results with floating-point sampling");
  app.add_option("--quals", g.quals, "Rule behaviour when hypotheses are not all Holds")
      ->check(CLI::IsMember({"strict", "diagnostic"}));
  app.add_option("-o,--output", g.output, "Write the report to this file atomically");

  struct FileCommand {
    std::string file;
    std::string query;
  };
  std::map<std::string, FileCommand> files;
  std::map<std::string, CLI::App*> subs;
  for (const char* op : {"normal-cone", "coderivative", "subdiff", "check-aubin", "check-lipschitz", "check-lqc",
                         "check-normal-densed", "mpec-check", "run"}) {
    const std::string help = std::string(op) == "run" ? "Run every query in a problem file"
                                                      : std::string("Run the ") + op + " queries of a problem file";
    CLI::App* s = app.add_subcommand(op, help);
    s->add_option("file", files[op].file, "Problem file")->required();
    s->add_option("--query", files[op].query, "Run only the query with this name");
    subs[op] = s;
  }
  std::string rule_kind;
  FileCommand rule_file;
  CLI::App* rule = app.add_subcommand("rule", "Run calculus-rule queries of one kind");
  rule->add_option("kind", rule_kind, "Rule")
      ->required()
      ->check(CLI::IsMember({"product", "mixed-product", "intersection", "preimage", "sum", "chain"}));
  rule->add_option("file", rule_file.file, "Problem file")->required();
  rule->add_option("--query", rule_file.query, "Run only the query with this name");

  std::string preset_id;
  bool list = false, dump = false;
  CLI::App* paper = app.add_subcommand("paper-example", "Run a built-in example");
  paper->add_option("id", preset_id, "Example id (see --list)");
  paper->add_flag("--list", list, "List example ids");
  paper->add_flag("--dump", dump, "Print the example's problem file instead of running it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (paper->parsed()) {
      if (list) {
        for (const vawrt::Preset& p : vawrt::presets()) {
          std::cout << p.id << "  " << vawrt::parse_problem(p.text).description << "\n";
        }
        return vawrt::kExitOk;
      }
      if (preset_id.empty()) throw vawrt::InputError("paper-example needs an id (see --list)");
      const vawrt::Preset* p = vawrt::find_preset(preset_id);
      if (!p) throw vawrt::InputError("unknown example \"" + preset_id + "\" (see --list)");
      if (dump) {
        std::cout << p->text;
        return vawrt::kExitOk;
      }
      return emit(vawrt::run_problem(vawrt::parse_problem(p->text), options(g, "paper-example " + p->id)), g);
    }
    if (rule->parsed()) {
      vawrt::RunOptions o = options(g, rule_file.file);
      o.op = "rule";
      o.rule = rule_kind;
      if (!rule_file.query.empty()) o.query = rule_file.query;
      return emit(vawrt::run_problem(vawrt::load_problem(rule_file.file), o), g);
    }
    for (const auto& [op, s] : subs) {
      if (!s->parsed()) continue;
      const FileCommand& fc = files[op];
      vawrt::RunOptions o = options(g, fc.file);
      if (op != "run") o.op = op;
      if (!fc.query.empty()) o.query = fc.query;
      return emit(vawrt::run_problem(vawrt::load_problem(fc.file), o), g);
    }
  } catch (const vawrt::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
