#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "textcx/dialect.hpp"

namespace textcx {

enum class TextMode { natural, artificial };
enum class Language { english, spanish, other };

// Non-fatal findings (unterminated block comment, skipped file, ...).
using Diagnostics = std::vector<std::string>;

// Symbol sequence of one text. Tokens are never empty and never contain
// whitespace or line breaks.
struct TokenStream {
  std::vector<std::string> tokens;
  TextMode mode = TextMode::natural;
  std::string source_name;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

// Natural-language tokenization:
//  * whitespace separates words; every punctuation sign is a symbol of its own,
//    except '.' or ',' with a digit on both sides, which stays inside the number;
//  * a title-case word at text start or right after "." is lowercased unless the
//    same form also occurs somewhere not following a period;
//  * everything else (case, accents, digits) is preserved verbatim.
// Spanish inverted marks (¿ ¡) are transparent to the "after a period" test.
TokenStream tokenize_natural(std::string_view text, Language lang = Language::other,
                             std::string source_name = {});

// Removes line and block comments, honoring string literals. A removed block
// comment leaves its line breaks behind (or one space if it had none) so that
// no new token or marker can form across the gap. Unterminated block comments
// run to end of input and add a warning to `diag`.
std::string strip_comments(std::string_view source, const CodeDialect& dialect,
                           Diagnostics* diag = nullptr);

// Source-code tokenization: comments dropped, each string literal becomes one
// token with its whitespace removed (delimiters kept), the rest splits on
// whitespace and on punctuation/operator characters. Numeric literals stay
// whole ("3.14", "0x1F", "1e-5").
TokenStream tokenize_artificial(std::string_view source, const CodeDialect& dialect,
                                Diagnostics* diag = nullptr, std::string source_name = {});

std::string to_string(TextMode mode);
std::string to_string(Language lang);
TextMode parse_mode(std::string_view s);
Language parse_language(std::string_view s);

}  // namespace textcx
