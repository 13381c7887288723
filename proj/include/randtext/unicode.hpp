#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace randtext::uni {

// Thrown on malformed UTF-8; carries the byte offset of the bad sequence.
class DecodeError : public std::runtime_error {
public:
    DecodeError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Decodes the code point starting at `pos` and advances `pos` past it.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(char32_t cp, std::string& out);

// Unicode White_Space property (complete list as of Unicode 15).
bool is_whitespace(char32_t cp);

// Unicode P* categories over the blocks this library covers: ASCII,
// Latin-1, General Punctuation, Supplemental Punctuation, CJK symbols,
// and fullwidth/halfwidth forms, plus scattered singletons. Uncovered
// scripts fall through as letters.
bool is_punctuation(char32_t cp);

// Simple one-to-one case folding for ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Other code points fold to themselves.
char32_t fold_case(char32_t cp);

}  // namespace randtext::uni
