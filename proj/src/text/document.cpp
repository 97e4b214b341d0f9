#include "sshg/document.hpp"

#include <fstream>
#include <sstream>

#include "sshg/error.hpp"
#include "sshg/text.hpp"

namespace sshg {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const DocumentEntry* Document::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

std::optional<std::string> Document::directive(const std::string& key) const {
  for (const auto& [k, v] : directives)
    if (k == key) return v;
  return std::nullopt;
}

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s[0] == '@') {
      auto sp = s.find_first_of(" \t");
      std::string key = s.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
      std::string value = sp == std::string::npos ? "" : trim(s.substr(sp));
      if (key.empty()) throw ParseError("empty directive", line, 1);
      doc.directives.emplace_back(key, value);
      continue;
    }
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'label: expression'", line, 1);
    DocumentEntry entry;
    entry.label = trim(raw.substr(0, colon));
    entry.line = line;
    if (entry.label.empty()) throw ParseError("empty label", line, 1);
    if (doc.find(entry.label)) throw ParseError("duplicate label '" + entry.label + "'", line, 1);
    std::string body = raw.substr(colon + 1);
    int body_col = static_cast<int>(colon) + 2;
    auto eq = body.find("==");
    if (eq == std::string::npos) {
      entry.lhs = parse_expression(body, line, body_col);
    } else {
      entry.lhs = parse_expression(body.substr(0, eq), line, body_col);
      entry.rhs = parse_expression(body.substr(eq + 2), line, body_col + static_cast<int>(eq) + 2);
    }
    doc.entries.push_back(std::move(entry));
  }
  return doc;
}

std::string render_document(const Document& doc) {
  std::string out;
  for (const auto& [k, v] : doc.directives) out += "@" + k + (v.empty() ? "" : " " + v) + "\n";
  for (const auto& e : doc.entries) {
    out += e.label + ": " + render_expression(e.lhs);
    if (e.rhs) out += " == " + render_expression(*e.rhs);
    out += "\n";
  }
  return out;
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what(), e.line(), e.column());
  }
}

void write_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << render_document(doc);
}

Document matrix_document(const SuperMatrix& m) {
  Document doc;
  std::string grading;
  for (Parity p : m.grading()) grading += std::string(grading.empty() ? "" : " ") + (p == Parity::Odd ? "odd" : "even");
  doc.directives.emplace_back("matrix", std::to_string(m.dim()));
  doc.directives.emplace_back("grading", grading);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      doc.entries.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", m(i, j), std::nullopt, 0});
  return doc;
}

SuperMatrix document_matrix(const Document& doc) {
  auto dim = doc.directive("matrix");
  if (!dim) throw ParseError("missing @matrix directive", 1, 1);
  std::size_t n = std::stoul(*dim);
  std::vector<Parity> grading;
  if (auto g = doc.directive("grading")) {
    std::istringstream in(*g);
    std::string w;
    while (in >> w) {
      if (w == "even")
        grading.push_back(Parity::Even);
      else if (w == "odd")
        grading.push_back(Parity::Odd);
      else
        throw ParseError("bad grading word '" + w + "'", 1, 1);
    }
  } else {
    grading.assign(n, Parity::Even);
  }
  if (grading.size() != n) throw ParseError("grading length does not match @matrix", 1, 1);
  SuperMatrix m(grading);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string label = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      const DocumentEntry* e = doc.find(label);
      if (!e) throw ParseError("missing matrix entry " + label, 1, 1);
      if (e->rhs) throw ParseError("matrix entry " + label + " must not be an equation", e->line, 1);
      m.set(i, j, e->lhs);
    }
  }
  return m;
}

}  // namespace sshg
