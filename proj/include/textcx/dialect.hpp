#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace textcx {

struct BlockComment {
  std::string open;
  std::string close;
};

// Lexical conventions of a programming-language family: enough to find
// comments and string literals, nothing more.
struct CodeDialect {
  std::string name;
  std::vector<std::string> line_comments;
  std::vector<BlockComment> block_comments;
  // Each character opens and closes a literal of its own kind.
  std::string string_delimiters;
  // '\0' disables backslash-style escapes inside literals.
  char escape = '\\';
  // A doubled delimiter inside a literal stands for the delimiter ("" in Basic).
  bool doubled_delimiter_escape = false;
  // A delimiter directly after an operand is an operator, not a literal
  // opener (Matlab's transpose A').
  bool delimiter_after_operand_is_operator = false;

  // Throws Error when markers are empty or delimiters are not ASCII.
  void validate() const;
};

// Maps file extensions to dialects, with a fallback for unknown extensions.
class DialectTable {
 public:
  // C, C++, C#, Java, Basic, Matlab, HTML, PHP, plus a comment-free "plain".
  static DialectTable builtin();
  static DialectTable from_json(std::string_view json_text);
  static DialectTable load(const std::filesystem::path& path);

  void add(CodeDialect dialect, const std::vector<std::string>& extensions);
  void set_default(const std::string& name);

  const CodeDialect& by_name(const std::string& name) const;
  bool has(const std::string& name) const;
  // `ext` includes the leading dot; comparison is case-insensitive.
  const CodeDialect& for_extension(std::string ext) const;
  bool knows_extension(std::string ext) const;
  const CodeDialect& fallback() const { return by_name(default_name_); }

  std::vector<std::string> names() const;

 private:
  std::map<std::string, CodeDialect> dialects_;
  std::map<std::string, std::string> by_extension_;
  std::string default_name_ = "plain";
};

}  // namespace textcx
