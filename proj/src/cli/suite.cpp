#include <algorithm>
#include <future>

#include "sshg/cli.hpp"

namespace sshg::cli {

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
  const auto& known = verifier::check_names();
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.insert(out.end(), known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), n) != known.end()) {
      out.push_back(n);
    } else {
      throw ConfigError("unknown check '" + n + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<verifier::ResidualReport> run_suite(const SuiteConfig& cfg) {
  if (cfg.golden && !std::filesystem::is_directory(*cfg.golden))
    throw ConfigError("golden directory not found: " + cfg.golden->string());
  verifier::Sources src(cfg.golden);
  std::vector<std::future<verifier::ResidualReport>> jobs;
  for (const auto& name : cfg.checks) {
    jobs.push_back(std::async(std::launch::async, [&src, &cfg, name] {
      try {
        return verifier::run_check(name, src, cfg.options);
      } catch (const ParseError&) {
        throw;  // malformed golden input is a usage error
      } catch (const std::exception& ex) {
        verifier::ResidualReport r;
        r.check = name;
        r.status = verifier::Status::Fail;
        r.notes.push_back(std::string("error: ") + ex.what());
        return r;
      }
    }));
  }
  std::vector<verifier::ResidualReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  return verifier::build_report(std::move(reports));
}

int exit_status(const std::vector<verifier::ResidualReport>& reports, bool strict) {
  return std::any_of(reports.begin(), reports.end(), [&](const auto& r) { return r.failing(strict); }) ? 1 : 0;
}

}  // namespace sshg::cli
