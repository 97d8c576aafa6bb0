#ifndef LEXSEM_CORPUS_HPP
#define LEXSEM_CORPUS_HPP

// Corpus ingestion: tokenizer for raw sectioned text, parser for the flat
// POS-tagged element stream, the candidate filter, and word-type extraction.

#include <array>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexsem/errors.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

enum class SectionKind { Findings, Background, Discussion, Other };

inline std::string to_string(SectionKind k) {
  switch (k) {
    case SectionKind::Findings: return "Findings";
    case SectionKind::Background: return "Background";
    case SectionKind::Discussion: return "Discussion";
    case SectionKind::Other: return "Other";
  }
  return "?";
}

inline std::optional<SectionKind> parse_section_kind(std::string_view s) {
  if (s == "Findings") return SectionKind::Findings;
  if (s == "Background") return SectionKind::Background;
  if (s == "Discussion") return SectionKind::Discussion;
  if (s == "Other") return SectionKind::Other;
  return std::nullopt;
}

constexpr std::array<SectionKind, 4> kAllSections = {
    SectionKind::Findings, SectionKind::Background, SectionKind::Discussion,
    SectionKind::Other};

struct Token {
  std::string surface;
  std::size_t offset = 0;
  std::optional<std::string> pos;
  std::optional<std::string> stem;
  bool sentence_initial = false;
};

struct Document {
  std::string id;
  std::vector<std::pair<SectionKind, std::vector<Token>>> sections;
};

namespace detail {

inline bool is_token_char(std::uint32_t cp) {
  return text::is_letter_cp(cp) || text::is_digit_cp(cp) || cp == '-';
}

inline bool is_roman(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::string_view("IVXLCDM").find(c) == std::string_view::npos)
      return false;
  return true;
}

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Enumeration tokens like "II." or "3." that structure a document without
/// being content words.
inline bool is_implicit_markup(std::string_view surface) {
  if (surface.size() < 2 || surface.back() != '.') return false;
  std::string_view body = surface.substr(0, surface.size() - 1);
  return detail::is_digits(body) || detail::is_roman(body);
}

/// Maximal runs of letters/digits/hyphens; a trailing period is kept when the
/// run is an enumeration body (digits or roman numerals); a leading hyphen is
/// kept when a letter follows (truncated forms like "-aussenseite").
inline std::vector<Token> tokenize(std::string_view txt) {
  std::vector<Token> tokens;
  bool sentence_start = true;  // beginning of text starts a sentence
  bool pending_boundary = false;
  bool saw_space_since_boundary = false;

  std::size_t i = 0;
  while (i < txt.size()) {
    std::size_t w;
    std::uint32_t cp = text::decode_cp(txt, i, &w);
    if (detail::is_token_char(cp)) {
      std::size_t start = i;
      while (i < txt.size()) {
        std::size_t w2;
        std::uint32_t c2 = text::decode_cp(txt, i, &w2);
        if (!detail::is_token_char(c2)) break;
        i += w2;
      }
      std::string surface(txt.substr(start, i - start));
      bool attached_period = false;
      if (i < txt.size() && txt[i] == '.' &&
          (detail::is_digits(surface) || detail::is_roman(surface))) {
        surface += '.';
        ++i;
        attached_period = true;
      }
      Token tok;
      tok.surface = std::move(surface);
      tok.offset = start;
      bool initial = sentence_start ||
                     (pending_boundary && saw_space_since_boundary &&
                      text::starts_upper(tok.surface));
      tok.sentence_initial = initial;
      tokens.push_back(std::move(tok));
      sentence_start = false;
      pending_boundary = false;
      saw_space_since_boundary = false;
      (void)attached_period;
    } else {
      if (cp == '.' || cp == '!' || cp == '?') {
        pending_boundary = true;
        saw_space_since_boundary = false;
      } else if (pending_boundary &&
                 (cp == ' ' || cp == '\n' || cp == '\t' || cp == '\r')) {
        saw_space_since_boundary = true;
      }
      i += w;
    }
  }
  return tokens;
}

/// Split raw text into sections at `== FINDINGS ==` style marker lines
/// (case-insensitive, surrounding whitespace ignored). Text before the first
/// marker goes to Other. Markerless text yields a single Other section.
inline Document parse_raw(std::string_view txt, std::string id = "") {
  Document doc;
  doc.id = std::move(id);

  auto marker_kind = [](std::string line) -> std::optional<SectionKind> {
    line = text::trim(line);
    if (line.size() < 5 || line.substr(0, 2) != "==" ||
        line.substr(line.size() - 2) != "==")
      return std::nullopt;
    std::string name = text::trim(line.substr(2, line.size() - 4));
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == "FINDINGS") return SectionKind::Findings;
    if (name == "BACKGROUND") return SectionKind::Background;
    if (name == "DISCUSSION") return SectionKind::Discussion;
    return std::nullopt;
  };

  SectionKind current = SectionKind::Other;
  std::string buffer;
  bool any_section = false;
  auto flush = [&](bool force) {
    if (!force && buffer.empty() && any_section) return;
    doc.sections.emplace_back(current, tokenize(buffer));
    any_section = true;
    buffer.clear();
  };

  std::istringstream iss{std::string(txt)};
  std::string line;
  bool first_marker_seen = false;
  while (std::getline(iss, line)) {
    if (auto kind = marker_kind(line)) {
      if (first_marker_seen || !text::trim(buffer).empty()) flush(true);
      first_marker_seen = true;
      current = *kind;
      buffer.clear();
      continue;
    }
    buffer += line;
    buffer += '\n';
  }
  flush(!any_section || first_marker_seen);
  return doc;
}

/// Parse the flat element stream `<TAG [STEM="..."]>text</TAG> ...`.
inline std::vector<Token> parse_tagged(std::string_view txt) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < txt.size() && std::isspace(static_cast<unsigned char>(txt[i]))) ++i;
  };
  skip_ws();
  while (i < txt.size()) {
    if (txt[i] != '<')
      throw TaggedFormatError(i, "expected element start '<'");
    std::size_t elem_start = i;
    ++i;
    std::size_t name_start = i;
    while (i < txt.size() && txt[i] != '>' && txt[i] != ' ' && txt[i] != '/')
      ++i;
    if (i >= txt.size()) throw TaggedFormatError(elem_start, "unterminated tag");
    std::string tag(txt.substr(name_start, i - name_start));
    if (tag.empty() || txt[name_start] == '/')
      throw TaggedFormatError(elem_start, "unexpected closing tag");

    std::optional<std::string> stem;
    while (txt[i] == ' ') {
      skip_ws();
      std::size_t attr_start = i;
      while (i < txt.size() && txt[i] != '=' && txt[i] != '>') ++i;
      if (i >= txt.size() || txt[i] != '=')
        throw TaggedFormatError(attr_start, "malformed attribute");
      std::string attr(txt.substr(attr_start, i - attr_start));
      ++i;
      if (i >= txt.size() || txt[i] != '"')
        throw TaggedFormatError(i, "attribute value must be quoted");
      ++i;
      std::size_t val_start = i;
      while (i < txt.size() && txt[i] != '"') ++i;
      if (i >= txt.size()) throw TaggedFormatError(val_start, "unterminated attribute value");
      std::string value(txt.substr(val_start, i - val_start));
      ++i;
      if (attr == "STEM") stem = value;
      if (i >= txt.size()) throw TaggedFormatError(elem_start, "unterminated tag");
    }
    if (txt[i] != '>') throw TaggedFormatError(i, "expected '>'");
    ++i;

    std::size_t text_start = i;
    while (i < txt.size() && txt[i] != '<') ++i;
    if (i >= txt.size())
      throw TaggedFormatError(elem_start, "unclosed element <" + tag + ">");
    std::string content = text::trim(txt.substr(text_start, i - text_start));

    std::string close = "</" + tag + ">";
    if (txt.substr(i, close.size()) != close)
      throw TaggedFormatError(i, "expected " + close);
    i += close.size();

    Token tok;
    tok.surface = content;
    tok.offset = elem_start;
    tok.pos = tag;
    tok.stem = stem;
    tokens.push_back(std::move(tok));
    skip_ws();
  }
  return tokens;
}

inline std::set<std::string> load_stoplist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stoplist: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = text::trim(line);
    if (!w.empty() && w[0] != '#') words.insert(text::to_lower(w));
  }
  return words;
}

/// The candidate filter: drops stoplist members (case-insensitive), implicit
/// markup, and tokens of three or fewer characters.
inline std::vector<Token> candidate_filter(const std::vector<Token>& tokens,
                                           const std::set<std::string>& stoplist) {
  std::vector<Token> out;
  for (const auto& tok : tokens) {
    if (is_implicit_markup(tok.surface)) continue;
    if (text::count_codepoints(tok.surface) <= 3) continue;
    if (stoplist.count(text::to_lower(tok.surface))) continue;
    out.push_back(tok);
  }
  return out;
}

/// Distinct surfaces in first-occurrence order; case-sensitive.
inline std::vector<std::string> word_types(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& tok : tokens)
    if (seen.insert(tok.surface).second) out.push_back(tok.surface);
  return out;
}

}  // namespace lexsem

#endif
