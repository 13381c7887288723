#include "randtext/unicode.hpp"

#include <algorithm>
#include <array>

namespace randtext::uni {

char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    const auto byte = [&](std::size_t i) -> std::uint8_t {
        return static_cast<std::uint8_t>(text[i]);
    };
    const std::uint8_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int extra;
    char32_t cp;
    if ((b0 & 0xe0) == 0xc0) {
        extra = 1;
        cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
        extra = 2;
        cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        throw DecodeError(start, "invalid UTF-8 lead byte");
    }
    if (pos + extra + 1 > text.size()) {
        throw DecodeError(start, "truncated UTF-8 sequence");
    }
    for (int i = 1; i <= extra; ++i) {
        const std::uint8_t b = byte(pos + i);
        if ((b & 0xc0) != 0x80) {
            throw DecodeError(start, "invalid UTF-8 continuation byte");
        }
        cp = (cp << 6) | (b & 0x3f);
    }
    // Reject overlong encodings and surrogate range.
    static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
        throw DecodeError(start, "invalid UTF-8 scalar value");
    }
    pos += extra + 1;
    return cp;
}

void append_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d:
        case 0x20: case 0x85: case 0xa0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202f: case 0x205f: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200a;
    }
}

namespace {

struct Range {
    char32_t lo;
    char32_t hi;
};

// Sorted P* ranges for the covered blocks.
constexpr std::array<Range, 42> kPunctRanges{{
    {0x0021, 0x0023}, {0x0025, 0x002a}, {0x002c, 0x002f},
    {0x003a, 0x003b}, {0x003f, 0x0040}, {0x005b, 0x005d},
    {0x005f, 0x005f}, {0x007b, 0x007b}, {0x007d, 0x007d},
    {0x00a1, 0x00a1}, {0x00a7, 0x00a7}, {0x00ab, 0x00ab},
    {0x00b6, 0x00b7}, {0x00bb, 0x00bb}, {0x00bf, 0x00bf},
    {0x037e, 0x037e}, {0x0387, 0x0387}, {0x055a, 0x055f},
    {0x0589, 0x058a}, {0x05be, 0x05be}, {0x05c0, 0x05c0},
    {0x060c, 0x060d}, {0x061b, 0x061f}, {0x066a, 0x066d},
    {0x2010, 0x2027}, {0x2030, 0x2043}, {0x2045, 0x2051},
    {0x2053, 0x205e}, {0x2e00, 0x2e7f}, {0x3001, 0x3003},
    {0x3008, 0x3011}, {0x3014, 0x301f}, {0xff01, 0xff03},
    {0xff05, 0xff0a}, {0xff0c, 0xff0f}, {0xff1a, 0xff1b},
    {0xff1f, 0xff20}, {0xff3b, 0xff3d}, {0xff3f, 0xff3f},
    {0xff5b, 0xff5b}, {0xff5d, 0xff5d}, {0xff5f, 0xff65},
}};

}  // namespace

bool is_punctuation(char32_t cp) {
    const auto it = std::upper_bound(
        kPunctRanges.begin(), kPunctRanges.end(), cp,
        [](char32_t v, const Range& r) { return v < r.lo; });
    return it != kPunctRanges.begin() && cp <= (it - 1)->hi;
}

char32_t fold_case(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return cp + 32;  // Latin-1
    if (cp >= 0x100 && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x178) return 0xff;  // Y with diaeresis
    if (cp >= 0x179 && cp <= 0x17e) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x391 && cp <= 0x3ab && cp != 0x3a2) return cp + 32;  // Greek
    if (cp >= 0x410 && cp <= 0x42f) return cp + 32;  // Cyrillic
    if (cp >= 0x400 && cp <= 0x40f) return cp + 80;
    return cp;
}

}  // namespace randtext::uni
