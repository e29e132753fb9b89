/*
   Copyright 2026 The assocclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

// UTF-8 helpers for the tokenizer. Only Latin, Greek and Cyrillic letters are
// classified as letters; every other non-ASCII code point is a separator.

#include <cstddef>
#include <string>
#include <string_view>

namespace assocclass::detail {

inline constexpr char32_t kReplacementChar = 0xFFFD;

/// Decodes one code point starting at `pos` and advances `pos`. Malformed
/// sequences yield U+FFFD and consume one byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_word_char(char32_t cp) { return is_letter(cp) || is_digit(cp); }

char32_t to_lower(char32_t cp);

/// ASCII lowercase plus the letter ranges above.
std::string lowercase(std::string_view text);

std::size_t code_point_count(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace assocclass::detail
