#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sshg/expression.hpp"
#include "sshg/supermatrix.hpp"

namespace sshg {

// Labelled-list file:
//   # comment
//   @key value...          directive
//   label: expression
//   label: lhs == rhs      equation
struct DocumentEntry {
  std::string label;
  Expression lhs;
  std::optional<Expression> rhs;
  int line = 0;
};

struct Document {
  std::vector<std::pair<std::string, std::string>> directives;
  std::vector<DocumentEntry> entries;

  const DocumentEntry* find(const std::string& label) const;
  std::optional<std::string> directive(const std::string& key) const;
};

Document parse_document(const std::string& text);
std::string render_document(const Document& doc);
Document read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Document& doc);

// "@matrix" documents: entries labelled (i,j), 1-based, and "@grading even even odd".
Document matrix_document(const SuperMatrix& m);
SuperMatrix document_matrix(const Document& doc);

}  // namespace sshg
