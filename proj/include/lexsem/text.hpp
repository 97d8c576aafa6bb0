#ifndef LEXSEM_TEXT_HPP
#define LEXSEM_TEXT_HPP

// Small UTF-8 helpers. Only what German text needs: codepoint walking,
// umlaut-aware case of the initial letter, codepoint counting.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexsem::text {

inline std::size_t cp_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;  // treat stray continuation bytes as single units
}

inline std::uint32_t decode_cp(std::string_view s, std::size_t pos,
                               std::size_t* width = nullptr) {
  unsigned char lead = static_cast<unsigned char>(s[pos]);
  std::size_t n = cp_len(lead);
  if (pos + n > s.size()) n = 1;
  if (width) *width = n;
  switch (n) {
    case 1:
      return lead;
    case 2:
      return ((lead & 0x1Fu) << 6) |
             (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu);
    case 3:
      return ((lead & 0x0Fu) << 12) |
             ((static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 6) |
             (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu);
    default:
      return ((lead & 0x07u) << 18) |
             ((static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 12) |
             ((static_cast<unsigned char>(s[pos + 2]) & 0x3Fu) << 6) |
             (static_cast<unsigned char>(s[pos + 3]) & 0x3Fu);
  }
}

inline std::size_t count_codepoints(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += cp_len(static_cast<unsigned char>(s[i]))) ++n;
  return n;
}

inline std::vector<std::string> codepoints(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t n = cp_len(static_cast<unsigned char>(s[i]));
    if (i + n > s.size()) n = 1;
    out.emplace_back(s.substr(i, n));
    i += n;
  }
  return out;
}

inline bool is_upper_cp(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  return cp == 0xC4 || cp == 0xD6 || cp == 0xDC;  // Ä Ö Ü
}

inline bool is_lower_cp(std::uint32_t cp) {
  if (cp >= 'a' && cp <= 'z') return true;
  return cp == 0xE4 || cp == 0xF6 || cp == 0xFC || cp == 0xDF;  // ä ö ü ß
}

inline bool is_letter_cp(std::uint32_t cp) {
  return is_upper_cp(cp) || is_lower_cp(cp);
}

inline bool is_digit_cp(std::uint32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  return is_upper_cp(decode_cp(s, 0));
}

inline bool starts_lower(std::string_view s) {
  if (s.empty()) return false;
  return is_lower_cp(decode_cp(s, 0));
}

inline std::string encode_cp(std::uint32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

inline std::uint32_t to_lower_cp(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp == 0xC4) return 0xE4;
  if (cp == 0xD6) return 0xF6;
  if (cp == 0xDC) return 0xFC;
  return cp;
}

inline std::uint32_t to_upper_cp(std::uint32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 32;
  if (cp == 0xE4) return 0xC4;
  if (cp == 0xF6) return 0xD6;
  if (cp == 0xFC) return 0xDC;
  return cp;
}

inline std::string to_lower(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t w;
    std::uint32_t cp = decode_cp(s, i, &w);
    out += encode_cp(to_lower_cp(cp));
    i += w;
  }
  return out;
}

/// Toggle only the first letter's case; identity for non-letters.
inline std::string decapitalize(std::string_view s) {
  if (s.empty()) return std::string(s);
  std::size_t w;
  std::uint32_t cp = decode_cp(s, 0, &w);
  return encode_cp(to_lower_cp(cp)) + std::string(s.substr(w));
}

inline std::string capitalize(std::string_view s) {
  if (s.empty()) return std::string(s);
  std::size_t w;
  std::uint32_t cp = decode_cp(s, 0, &w);
  return encode_cp(to_upper_cp(cp)) + std::string(s.substr(w));
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (b < e && ws(s[b])) ++b;
  while (e > b && ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

/// Expand umlauts: ä→ae, ö→oe, ü→ue (and uppercase variants). ß is left alone.
inline std::string expand_umlauts(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t w;
    std::uint32_t cp = decode_cp(s, i, &w);
    switch (cp) {
      case 0xE4: out += "ae"; break;
      case 0xF6: out += "oe"; break;
      case 0xFC: out += "ue"; break;
      case 0xC4: out += "Ae"; break;
      case 0xD6: out += "Oe"; break;
      case 0xDC: out += "Ue"; break;
      default: out += std::string(s.substr(i, w));
    }
    i += w;
  }
  return out;
}

}  // namespace lexsem::text

#endif
