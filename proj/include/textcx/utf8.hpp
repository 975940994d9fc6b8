#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace textcx::utf8 {

// Throws DecodeError naming the offset of the first malformed sequence.
void validate(std::string_view bytes);

struct CodePoint {
  char32_t value;
  std::size_t length;  // encoded length in bytes, 1..4
};

// Decodes the code point starting at `pos`. `text` must already be valid.
CodePoint decode_at(std::string_view text, std::size_t pos);

std::string encode(char32_t cp);

bool is_space(char32_t cp);
bool is_punctuation(char32_t cp);
bool is_upper(char32_t cp);
char32_t to_lower(char32_t cp);

}  // namespace textcx::utf8
