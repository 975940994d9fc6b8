#include "textcx/dialect.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "textcx/error.hpp"

namespace textcx {

namespace {

std::string lower_ascii(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

CodeDialect c_like(std::string name) {
  return CodeDialect{std::move(name), {"//"}, {{"/*", "*/"}}, "\"'", '\\', false, false};
}

}  // namespace

void CodeDialect::validate() const {
  if (name.empty()) throw Error("dialect without a name");
  for (const auto& m : line_comments)
    if (m.empty()) throw Error("dialect '" + name + "': empty line-comment marker");
  for (const auto& b : block_comments)
    if (b.open.empty() || b.close.empty())
      throw Error("dialect '" + name + "': block comment markers must come in open/close pairs");
  for (char c : string_delimiters)
    if (static_cast<unsigned char>(c) >= 0x80 || std::isspace(static_cast<unsigned char>(c)))
      throw Error("dialect '" + name + "': string delimiters must be printable ASCII");
}

DialectTable DialectTable::builtin() {
  DialectTable t;
  t.add(c_like("c"), {".c", ".h"});
  t.add(c_like("cpp"), {".cpp", ".cc", ".cxx", ".hpp", ".hh", ".hxx"});
  t.add(c_like("csharp"), {".cs"});
  t.add(c_like("java"), {".java"});
  t.add(CodeDialect{"basic", {"'", "REM", "Rem", "rem"}, {}, "\"", '\0', true, false},
        {".bas", ".vb", ".vbs", ".frm", ".cls"});
  t.add(CodeDialect{"matlab", {"%"}, {{"%{", "%}"}}, "'\"", '\0', true, true}, {".m"});
  t.add(CodeDialect{"html", {}, {{"<!--", "-->"}}, "\"", '\0', false, false},
        {".html", ".htm", ".xhtml"});
  t.add(CodeDialect{"php", {"//", "#"}, {{"/*", "*/"}}, "\"'", '\\', false, false},
        {".php", ".phtml"});
  t.add(CodeDialect{"plain", {}, {}, "\"", '\0', false, false}, {".log"});
  t.set_default("plain");
  return t;
}

void DialectTable::add(CodeDialect dialect, const std::vector<std::string>& extensions) {
  dialect.validate();
  for (const auto& ext : extensions) by_extension_[lower_ascii(ext)] = dialect.name;
  dialects_[dialect.name] = std::move(dialect);
}

void DialectTable::set_default(const std::string& name) {
  if (!has(name)) throw Error("unknown default dialect '" + name + "'");
  default_name_ = name;
}

const CodeDialect& DialectTable::by_name(const std::string& name) const {
  auto it = dialects_.find(name);
  if (it == dialects_.end()) throw Error("unknown dialect '" + name + "'");
  return it->second;
}

bool DialectTable::has(const std::string& name) const { return dialects_.count(name) != 0; }

const CodeDialect& DialectTable::for_extension(std::string ext) const {
  auto it = by_extension_.find(lower_ascii(std::move(ext)));
  return it == by_extension_.end() ? fallback() : by_name(it->second);
}

bool DialectTable::knows_extension(std::string ext) const {
  return by_extension_.count(lower_ascii(std::move(ext))) != 0;
}

std::vector<std::string> DialectTable::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : dialects_) out.push_back(name);
  return out;
}

// {
//   "default": "plain",
//   "dialects": [
//     {"name": "c", "extensions": [".c"], "line_comments": ["//"],
//      "block_comments": [["/*", "*/"]], "string_delimiters": "\"'",
//      "escape": "\\", "doubled_delimiter_escape": false,
//      "delimiter_after_operand_is_operator": false}
//   ]
// }
DialectTable DialectTable::from_json(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("dialect table: ") + e.what());
  }
  DialectTable t;
  try {
    for (const auto& d : doc.at("dialects")) {
      CodeDialect cd;
      cd.name = d.at("name").get<std::string>();
      cd.line_comments = d.value("line_comments", std::vector<std::string>{});
      for (const auto& pair : d.value("block_comments", json::array())) {
        if (!pair.is_array() || pair.size() != 2)
          throw Error("dialect '" + cd.name + "': block comment markers must come in open/close pairs");
        cd.block_comments.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
      }
      cd.string_delimiters = d.value("string_delimiters", std::string("\""));
      const auto esc = d.value("escape", std::string("\\"));
      if (esc.size() > 1) throw Error("dialect '" + cd.name + "': escape must be one character");
      cd.escape = esc.empty() ? '\0' : esc[0];
      cd.doubled_delimiter_escape = d.value("doubled_delimiter_escape", false);
      cd.delimiter_after_operand_is_operator = d.value("delimiter_after_operand_is_operator", false);
      t.add(std::move(cd), d.value("extensions", std::vector<std::string>{}));
    }
    if (!t.has("plain")) t.add(CodeDialect{"plain", {}, {}, "\"", '\0', false, false}, {});
    t.set_default(doc.value("default", std::string("plain")));
  } catch (const json::exception& e) {
    throw Error(std::string("dialect table: ") + e.what());
  }
  return t;
}

DialectTable DialectTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read dialect table " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace textcx
