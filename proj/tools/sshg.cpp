// sshg: verify the defect model, canonicalize expression files, print model objects.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sshg/cli.hpp"
#include "sshg/document.hpp"
#include "sshg/text.hpp"

namespace {

constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sshg::cli::ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// a file without any "label:" line holds a single expression
bool is_labelled_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    if (line[b] == '@' || line.find(':') != std::string::npos) return true;
  }
  return false;
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b != std::string::npos && line[b] == '#') continue;
    out += line + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic checks for the supersymmetric sinh-Gordon defect model"};
  app.require_subcommand(1);

  std::vector<std::string> checks;
  std::string mode = "solve", format = "text", golden;
  bool strict = false, no_normalization = false, list = false, builtin = false;
  auto* verify = app.add_subcommand("verify", "run checks and print a report");
  verify->add_option("checks", checks, "check names or 'all'")->required();
  verify->add_option("--mode", mode, "posit or solve")->check(CLI::IsMember({"posit", "solve"}));
  verify->add_flag("--strict", strict, "non-blocking checks also set the exit status");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--golden", golden, "directory of <object>.expr files overriding built-in objects")
      ->default_str(SSHG_DEFAULT_GOLDEN_DIR);
  verify->add_flag("--builtin", builtin, "ignore golden files")->excludes("--golden");
  verify->add_flag("--no-normalization", no_normalization, "forbid the global normalization constant");

  std::string file;
  auto* simplify = app.add_subcommand("simplify", "print the canonical form of an expression file");
  simplify->add_option("file", file, "one expression, or a labelled list")->required();

  std::string object, print_golden;
  auto* print = app.add_subcommand("print", "render a model object in the text format");
  print->add_option("name", object, "object name");
  print->add_flag("--list", list, "list object names");
  print->add_option("--golden", print_golden, "read the object from this directory when present");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      sshg::cli::SuiteConfig cfg;
      cfg.checks = sshg::cli::resolve_checks(checks);
      cfg.options.mode = *sshg::verifier::parse_mode(mode);
      cfg.options.allow_normalization = !no_normalization;
      cfg.strict = strict;
      cfg.format = *sshg::cli::parse_format(format);
      if (!golden.empty())
        cfg.golden = golden;
      else if (!builtin && std::filesystem::is_directory(SSHG_DEFAULT_GOLDEN_DIR))
        cfg.golden = SSHG_DEFAULT_GOLDEN_DIR;
      auto reports = sshg::cli::run_suite(cfg);
      std::cout << sshg::cli::emit(reports, cfg.format);
      return sshg::cli::exit_status(reports, cfg.strict);
    }
    if (simplify->parsed()) {
      std::string text = read_file(file);
      if (is_labelled_list(text))
        std::cout << sshg::render_document(sshg::parse_document(text));
      else
        std::cout << sshg::render_expression(sshg::parse_expression(strip_comments(text))) << "\n";
      return 0;
    }
    if (print->parsed()) {
      if (list) {
        for (const auto& n : sshg::verifier::Sources::object_names()) std::cout << n << "\n";
        return 0;
      }
      if (object.empty()) throw sshg::cli::ConfigError("print needs an object name or --list");
      std::optional<std::filesystem::path> dir;
      if (!print_golden.empty()) dir = print_golden;
      std::cout << sshg::render_document(sshg::verifier::Sources(dir).document(object));
      return 0;
    }
  } catch (const sshg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
