#include "textcx/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "textcx/error.hpp"
#include "textcx/utf8.hpp"

namespace textcx {

namespace {

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_ident_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

// ---------------------------------------------------------------------------
// Natural language

struct RawToken {
  std::string text;
  bool word;
};

std::vector<RawToken> split_natural(std::string_view text) {
  std::vector<RawToken> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out.push_back({std::move(word), true});
    word.clear();
  };

  char32_t prev = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto cp = utf8::decode_at(text, i);
    const std::size_t next_pos = i + cp.length;
    if (utf8::is_space(cp.value)) {
      flush();
    } else if (utf8::is_punctuation(cp.value)) {
      const bool decimal_mark = (cp.value == U'.' || cp.value == U',') && is_ascii_digit(prev) &&
                                !word.empty() && next_pos < text.size() &&
                                is_ascii_digit(static_cast<unsigned char>(text[next_pos]));
      if (decimal_mark) {
        word.append(text.substr(i, cp.length));
      } else {
        flush();
        out.push_back({std::string(text.substr(i, cp.length)), false});
      }
    } else {
      word.append(text.substr(i, cp.length));
    }
    prev = cp.value;
    i = next_pos;
  }
  flush();
  return out;
}

// First code point upper case, none of the others.
bool is_title_case(std::string_view word) {
  std::size_t i = 0;
  bool first = true;
  while (i < word.size()) {
    const auto cp = utf8::decode_at(word, i);
    const bool upper = utf8::is_upper(cp.value);
    if (first != upper) return false;
    first = false;
    i += cp.length;
  }
  return !word.empty();
}

std::string lower_first(std::string_view word) {
  const auto cp = utf8::decode_at(word, 0);
  return utf8::encode(utf8::to_lower(cp.value)) + std::string(word.substr(cp.length));
}

bool is_inverted_mark(std::string_view t) { return t == "¿" || t == "¡"; }

// ---------------------------------------------------------------------------
// Source code

enum class SegmentKind { code, literal, comment };

struct Segment {
  SegmentKind kind;
  std::string_view text;
  bool block = false;
};

struct Marker {
  std::string open;
  std::string close;  // empty for line comments
};

bool matches_marker(std::string_view src, std::size_t i, const std::string& m) {
  if (src.compare(i, m.size(), m) != 0) return false;
  const auto front = static_cast<unsigned char>(m.front());
  const auto back = static_cast<unsigned char>(m.back());
  if (std::isalpha(front) && i > 0 && is_ident_byte(src[i - 1])) return false;
  if (std::isalpha(back) && i + m.size() < src.size() && is_ident_byte(src[i + m.size()]))
    return false;
  return true;
}

// Returns the end (one past the closing delimiter) of a literal opened at
// `i`, or npos when it is not closed on the same line.
std::size_t literal_end(std::string_view src, std::size_t i, const CodeDialect& d) {
  const char q = src[i];
  std::size_t j = i + 1;
  while (j < src.size()) {
    const char c = src[j];
    if (c == '\n') return std::string_view::npos;
    if (d.escape != '\0' && c == d.escape) {
      j += 2;
      continue;
    }
    if (c == q) {
      if (d.doubled_delimiter_escape && j + 1 < src.size() && src[j + 1] == q) {
        j += 2;
        continue;
      }
      return j + 1;
    }
    ++j;
  }
  return std::string_view::npos;
}

bool follows_operand(std::string_view src, std::size_t i) {
  if (i == 0) return false;
  const char p = src[i - 1];
  return is_ident_byte(p) || p == ')' || p == ']' || p == '}' || p == '.' || p == '\'';
}

std::vector<Segment> scan_source(std::string_view src, const CodeDialect& d, Diagnostics* diag) {
  std::vector<Marker> markers;
  for (const auto& b : d.block_comments) markers.push_back({b.open, b.close});
  for (const auto& l : d.line_comments) markers.push_back({l, {}});
  std::stable_sort(markers.begin(), markers.end(),
                   [](const Marker& a, const Marker& b) { return a.open.size() > b.open.size(); });

  std::vector<Segment> out;
  std::size_t code_start = 0;
  auto emit_code = [&](std::size_t end) {
    if (end > code_start) out.push_back({SegmentKind::code, src.substr(code_start, end - code_start)});
  };

  std::size_t i = 0;
  while (i < src.size()) {
    const Marker* hit = nullptr;
    for (const auto& m : markers) {
      if (matches_marker(src, i, m.open)) {
        hit = &m;
        break;
      }
    }
    if (hit) {
      emit_code(i);
      std::size_t end;
      bool terminated = true;
      if (hit->close.empty()) {
        end = src.find('\n', i);
        if (end == std::string_view::npos) end = src.size();
      } else {
        const auto close = src.find(hit->close, i + hit->open.size());
        if (close == std::string_view::npos) {
          if (diag) {
            diag->push_back("unterminated block comment '" + hit->open + "' at byte offset " +
                            std::to_string(i) + "; stripped to end of input");
          }
          end = src.size();
          terminated = false;
        } else {
          end = close + hit->close.size();
        }
      }
      out.push_back({SegmentKind::comment, src.substr(i, end - i), !hit->close.empty() && terminated});
      i = end;
      code_start = i;
      continue;
    }
    if (d.string_delimiters.find(src[i]) != std::string::npos &&
        !(d.delimiter_after_operand_is_operator && follows_operand(src, i))) {
      const auto end = literal_end(src, i, d);
      if (end != std::string_view::npos) {
        emit_code(i);
        out.push_back({SegmentKind::literal, src.substr(i, end - i)});
        i = end;
        code_start = i;
        continue;
      }
    }
    ++i;
  }
  emit_code(src.size());
  return out;
}

void split_code(std::string_view code, std::vector<std::string>& tokens) {
  std::size_t i = 0;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  while (i < code.size()) {
    const auto cp = utf8::decode_at(code, i);
    if (utf8::is_space(cp.value)) {
      flush();
      i += cp.length;
      continue;
    }
    if (cp.value != U'_' && utf8::is_punctuation(cp.value)) {
      flush();
      tokens.emplace_back(code.substr(i, cp.length));
      i += cp.length;
      continue;
    }
    if (word.empty() && is_ascii_digit(cp.value)) {
      // numeric literal
      std::size_t j = i;
      const bool hex = code.compare(i, 2, "0x") == 0 || code.compare(i, 2, "0X") == 0;
      while (j < code.size()) {
        const char c = code[j];
        const bool next_digit = j + 1 < code.size() && std::isdigit(static_cast<unsigned char>(code[j + 1]));
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
          ++j;
        } else if (c == '.' && next_digit) {
          ++j;
        } else if ((c == '+' || c == '-') && !hex && next_digit && j > i &&
                   (code[j - 1] == 'e' || code[j - 1] == 'E')) {
          ++j;
        } else {
          break;
        }
      }
      tokens.emplace_back(code.substr(i, j - i));
      i = j;
      continue;
    }
    word.append(code.substr(i, cp.length));
    i += cp.length;
  }
  flush();
}

std::string collapse_literal(std::string_view lit) {
  std::string out;
  std::size_t i = 0;
  while (i < lit.size()) {
    const auto cp = utf8::decode_at(lit, i);
    if (!utf8::is_space(cp.value)) out.append(lit.substr(i, cp.length));
    i += cp.length;
  }
  return out;
}

std::string comment_replacement(std::string_view comment, bool block) {
  if (!block) return {};
  const auto newlines = static_cast<std::size_t>(std::count(comment.begin(), comment.end(), '\n'));
  return newlines == 0 ? std::string(" ") : std::string(newlines, '\n');
}

}  // namespace

TokenStream tokenize_natural(std::string_view text, Language lang, std::string source_name) {
  utf8::validate(text);
  auto raw = split_natural(text);

  std::vector<bool> after_period(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::size_t k = i;
    if (lang == Language::spanish)
      while (k > 0 && is_inverted_mark(raw[k - 1].text)) --k;
    after_period[i] = (k == 0) || raw[k - 1].text == ".";
  }

  std::set<std::string, std::less<>> proper;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i].word && !after_period[i] && is_title_case(raw[i].text)) proper.insert(raw[i].text);

  TokenStream ts;
  ts.mode = TextMode::natural;
  ts.source_name = std::move(source_name);
  ts.tokens.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto& t = raw[i];
    if (t.word && after_period[i] && is_title_case(t.text) && !proper.count(t.text))
      ts.tokens.push_back(lower_first(t.text));
    else
      ts.tokens.push_back(std::move(t.text));
  }
  return ts;
}

std::string strip_comments(std::string_view source, const CodeDialect& dialect, Diagnostics* diag) {
  utf8::validate(source);
  std::string out;
  out.reserve(source.size());
  for (const auto& seg : scan_source(source, dialect, diag)) {
    if (seg.kind == SegmentKind::comment)
      out += comment_replacement(seg.text, seg.block);
    else
      out.append(seg.text);
  }
  return out;
}

TokenStream tokenize_artificial(std::string_view source, const CodeDialect& dialect,
                                Diagnostics* diag, std::string source_name) {
  utf8::validate(source);
  TokenStream ts;
  ts.mode = TextMode::artificial;
  ts.source_name = std::move(source_name);
  for (const auto& seg : scan_source(source, dialect, diag)) {
    switch (seg.kind) {
      case SegmentKind::code:
        split_code(seg.text, ts.tokens);
        break;
      case SegmentKind::literal:
        ts.tokens.push_back(collapse_literal(seg.text));
        break;
      case SegmentKind::comment:
        break;
    }
  }
  return ts;
}

std::string to_string(TextMode mode) { return mode == TextMode::natural ? "natural" : "artificial"; }

std::string to_string(Language lang) {
  switch (lang) {
    case Language::english:
      return "english";
    case Language::spanish:
      return "spanish";
    default:
      return "other";
  }
}

TextMode parse_mode(std::string_view s) {
  if (s == "natural") return TextMode::natural;
  if (s == "artificial") return TextMode::artificial;
  throw Error("unknown mode '" + std::string(s) + "' (expected natural|artificial)");
}

Language parse_language(std::string_view s) {
  if (s == "english") return Language::english;
  if (s == "spanish") return Language::spanish;
  if (s == "other") return Language::other;
  throw Error("unknown language '" + std::string(s) + "' (expected english|spanish|other)");
}

}  // namespace textcx
