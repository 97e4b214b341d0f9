#include <json.hpp>
#include <sstream>

#include "sshg/cli.hpp"
#include "sshg/text.hpp"

namespace sshg::cli {

using verifier::ResidualReport;

std::string emit_text(const std::vector<ResidualReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.check << ": " << verifier::status_name(r.status) << (r.blocking ? "" : " (non-blocking)") << "\n";
    if (!(r.normalization == Expression(1)))
      out << "  normalization: " << render_expression(r.normalization) << "\n";
    for (const auto& a : r.assignments) out << "  assign " << a.label << " = " << render_expression(a.value) << "\n";
    for (const auto& x : r.residuals)
      out << "  residual " << x.label << " [" << x.value.size() << " terms]: " << render_expression(x.value) << "\n";
    if (r.recombination) {
      const auto& rc = *r.recombination;
      out << "  recombination (printed rows over derived columns:";
      for (const auto& c : rc.columns) out << " " << c;
      out << ")\n";
      for (std::size_t i = 0; i < rc.rows.size(); ++i) {
        out << "    " << rc.rows[i] << ":";
        for (const auto& e : rc.matrix[i]) out << " [" << render_expression(e) << "]";
        out << "\n";
      }
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  std::size_t failing = 0;
  for (const auto& r : reports) failing += r.passed() ? 0 : 1;
  out << reports.size() << " check(s), " << failing << " not passing\n";
  return out.str();
}

std::string emit_json(const std::vector<ResidualReport>& reports) {
  nlohmann::ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["status"] = verifier::status_name(r.status);
    j["blocking"] = r.blocking;
    j["residuals"] = nlohmann::ordered_json::array();
    for (const auto& x : r.residuals)
      j["residuals"].push_back({{"label", x.label}, {"value", render_expression(x.value)}, {"terms", x.value.size()}});
    j["free_symbols"] = r.free_symbols;
    j["assignments"] = nlohmann::ordered_json::array();
    for (const auto& a : r.assignments)
      j["assignments"].push_back({{"symbol", a.label}, {"value", render_expression(a.value)}});
    j["normalization"] = render_expression(r.normalization);
    if (r.recombination) {
      nlohmann::ordered_json rc;
      rc["rows"] = r.recombination->rows;
      rc["columns"] = r.recombination->columns;
      rc["matrix"] = nlohmann::ordered_json::array();
      for (const auto& row : r.recombination->matrix) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& e : row) jr.push_back(render_expression(e));
        rc["matrix"].push_back(jr);
      }
      j["recombination"] = rc;
    }
    j["notes"] = r.notes;
    root["reports"].push_back(j);
  }
  return root.dump(2) + "\n";
}

std::string emit(const std::vector<ResidualReport>& reports, Format f) {
  return f == Format::Json ? emit_json(reports) : emit_text(reports);
}

}  // namespace sshg::cli
