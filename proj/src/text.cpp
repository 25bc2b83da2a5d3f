#include "docsum/text.hpp"

namespace docsum::text {

char32_t next_codepoint(std::string_view s, std::size_t& pos) noexcept {
  const auto lead = static_cast<unsigned char>(s[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    ++pos;
    return kInvalidCodepoint;
  }
  if (pos + len > s.size()) {
    ++pos;
    return kInvalidCodepoint;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kInvalidCodepoint;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  // Overlong forms, surrogates and out-of-range values.
  static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kInvalidCodepoint;
  }
  pos += len;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_valid_utf8(std::string_view s) noexcept {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_codepoint(s, pos);
    if (cp == kInvalidCodepoint && pos == start + 1 &&
        static_cast<unsigned char>(s[start]) >= 0x80) {
      return false;
    }
  }
  return true;
}

std::size_t codepoint_count(std::string_view s) noexcept {
  std::size_t pos = 0;
  std::size_t n = 0;
  while (pos < s.size()) {
    next_codepoint(s, pos);
    ++n;
  }
  return n;
}

namespace {

constexpr bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }
constexpr bool even(char32_t cp) { return (cp & 1) == 0; }

}  // namespace

// Only maps between code points of equal UTF-8 width, so folded strings keep
// their byte offsets.
char32_t fold_case(char32_t cp) noexcept {
  if (cp < 0x80) return in(cp, 'A', 'Z') ? cp + 32 : cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (cp < 0x100) return cp;
  if (in(cp, 0x100, 0x137) || in(cp, 0x14A, 0x177)) return even(cp) ? cp + 1 : cp;
  if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) return even(cp) ? cp : cp + 1;
  if (cp == 0x178) return 0xFF;
  if (in(cp, 0x391, 0x3AB) && cp != 0x3A2) return cp + 32;
  if (cp == 0x386) return 0x3AC;
  if (in(cp, 0x388, 0x38A)) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (in(cp, 0x38E, 0x38F)) return cp + 63;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x460, 0x481) || in(cp, 0x48A, 0x4BF) || in(cp, 0x4D0, 0x52F)) {
    return even(cp) ? cp + 1 : cp;
  }
  if (cp == 0x4C0) return 0x4CF;
  if (in(cp, 0x4C1, 0x4CE)) return even(cp) ? cp : cp + 1;
  return cp;
}

bool is_letter(char32_t cp) noexcept {
  if (cp < 0x80) return in(cp, 'a', 'z') || in(cp, 'A', 'Z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (in(cp, 0xC0, 0x2AF)) return cp != 0xD7 && cp != 0xF7;
  if (in(cp, 0x370, 0x3FF)) return cp != 0x37E && cp != 0x387 && cp != 0x375;
  if (in(cp, 0x400, 0x52F)) return !in(cp, 0x482, 0x489);
  return in(cp, 0x1E00, 0x1FFF);
}

bool is_upper(char32_t cp) noexcept { return fold_case(cp) != cp; }

bool is_digit(char32_t cp) noexcept { return in(cp, '0', '9'); }

bool is_space(char32_t cp) noexcept {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return in(cp, 0x2000, 0x200A);
  }
}

bool is_word_char(char32_t cp) noexcept {
  return is_letter(cp) || is_digit(cp) || in(cp, 0x300, 0x36F) || in(cp, 0x483, 0x489);
}

bool is_apostrophe(char32_t cp) noexcept {
  return cp == '\'' || cp == 0x2019 || cp == 0x02BC;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_codepoint(s, pos);
    if (cp == kInvalidCodepoint && pos == start + 1) {
      out.push_back(s[start]);
    } else {
      append_utf8(out, fold_case(cp));
    }
  }
  return out;
}

std::string_view trim(std::string_view s) noexcept {
  std::size_t begin = 0;
  while (begin < s.size()) {
    std::size_t next = begin;
    if (!is_space(next_codepoint(s, next))) break;
    begin = next;
  }
  std::size_t end = s.size();
  while (end > begin) {
    // Step back to the lead byte of the last code point.
    std::size_t lead = end - 1;
    while (lead > begin && (static_cast<unsigned char>(s[lead]) & 0xC0) == 0x80) --lead;
    std::size_t probe = lead;
    if (!is_space(next_codepoint(s, probe))) break;
    end = lead;
  }
  return s.substr(begin, end - begin);
}

std::size_t find_folded(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return 0;
  return to_lower(haystack).find(to_lower(needle));
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t nl = s.find('\n', start);
    std::string_view line =
        s.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

}  // namespace docsum::text
