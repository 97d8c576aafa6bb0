#ifndef LEXSEM_SEMTAG_HPP
#define LEXSEM_SEMTAG_HPP

// The semantic tagger: POS-tagged token streams are annotated with hypernym
// information in the inline XML shape
//   <CONCEPT TYPE="...">surface</CONCEPT>  |  <XXX><TAG>surface</TAG></XXX>
// Every input token appears exactly once in the output.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsem/corpus.hpp"
#include "lexsem/disambig.hpp"
#include "lexsem/lexnet.hpp"

namespace lexsem {

inline std::string xml_escape_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string xml_unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '&') {
      if (s.substr(i, 5) == "&amp;") { out += '&'; i += 5; continue; }
      if (s.substr(i, 6) == "&quot;") { out += '"'; i += 6; continue; }
      if (s.substr(i, 4) == "&lt;") { out += '<'; i += 4; continue; }
      if (s.substr(i, 4) == "&gt;") { out += '>'; i += 4; continue; }
    }
    out += s[i++];
  }
  return out;
}

/// Join hypernym literal lists: ", " within a sense, "; " between senses.
inline std::string format_type_attr(
    const std::vector<std::vector<std::string>>& senses) {
  std::string out;
  for (std::size_t i = 0; i < senses.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < senses[i].size(); ++j) {
      if (j) out += ", ";
      out += senses[i][j];
    }
  }
  return out;
}

struct SemtagConfig {
  std::size_t hypernym_depth = 1;
};

namespace detail {

inline std::string original_element(const Token& tok) {
  std::string out = "<" + tok.pos.value_or("XXX");
  if (tok.stem) out += " STEM=\"" + *tok.stem + "\"";
  out += ">" + tok.surface + "</" + tok.pos.value_or("XXX") + ">";
  return out;
}

}  // namespace detail

/// Annotate a parse_tagged token stream. Content tokens (N/V/ADJ/ADV) with a
/// covered lookup become CONCEPT elements; everything else is re-emitted in
/// original form inside <XXX>. Elements are joined by single spaces.
inline std::string tag_semantic(const LexNet& net,
                                const std::vector<Token>& tokens,
                                const FieldProfile* profile = nullptr,
                                SectionKind section = SectionKind::Other,
                                const SemtagConfig& config = {}) {
  std::string out;
  bool first = true;
  for (const auto& tok : tokens) {
    if (!first) out += " ";
    first = false;

    std::optional<WordClass> wc =
        tok.pos ? parse_word_class(*tok.pos) : std::nullopt;
    std::vector<std::vector<std::string>> senses;
    if (wc) {
      LookupOptions opts;
      opts.class_filter = std::set<WordClass>{*wc};
      opts.use_morph = !tok.stem.has_value();
      const std::string& key = tok.stem ? *tok.stem : tok.surface;
      SenseCandidateSet cands = net.lookup(key, opts);
      std::vector<SenseCandidate> ordered =
          profile ? resolve_sense(net, cands, *profile, section) : cands.all();
      for (const auto& cand : ordered) {
        std::vector<std::string> literals;
        for (const auto& level :
             net.hypernym_levels(cand.synset_id, config.hypernym_depth))
          for (const auto& id : level)
            for (const auto& lit : net.synset(id).literals)
              literals.push_back(lit.display());
        if (!literals.empty()) senses.push_back(std::move(literals));
      }
    }

    if (!senses.empty()) {
      out += "<CONCEPT TYPE=\"" + xml_escape_attr(format_type_attr(senses)) +
             "\">" + tok.surface + "</CONCEPT>";
    } else {
      out += "<XXX>" + detail::original_element(tok) + "</XXX>";
    }
  }
  return out;
}

/// Recover the surface token sequence from tagger output.
inline std::vector<std::string> detag(std::string_view annotated) {
  std::vector<std::string> surfaces;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < annotated.size() &&
           std::isspace(static_cast<unsigned char>(annotated[i])))
      ++i;
  };
  auto expect = [&](std::string_view s) {
    if (annotated.substr(i, s.size()) != s)
      throw MalformedAnnotation("expected '" + std::string(s) + "' at offset " +
                                std::to_string(i));
    i += s.size();
  };
  skip_ws();
  while (i < annotated.size()) {
    if (annotated.substr(i, 9) == "<CONCEPT ") {
      std::size_t close = annotated.find('>', i);
      if (close == std::string_view::npos)
        throw MalformedAnnotation("unterminated CONCEPT tag");
      i = close + 1;
      std::size_t end = annotated.find("</CONCEPT>", i);
      if (end == std::string_view::npos)
        throw MalformedAnnotation("missing </CONCEPT>");
      surfaces.emplace_back(annotated.substr(i, end - i));
      i = end + 10;
    } else if (annotated.substr(i, 5) == "<XXX>") {
      i += 5;
      expect("<");
      std::size_t inner_close = annotated.find('>', i);
      if (inner_close == std::string_view::npos)
        throw MalformedAnnotation("unterminated element inside XXX");
      std::size_t name_end = annotated.find_first_of(" >", i);
      std::string tag(annotated.substr(i, name_end - i));
      i = inner_close + 1;
      std::string close_tag = "</" + tag + ">";
      std::size_t end = annotated.find(close_tag, i);
      if (end == std::string_view::npos)
        throw MalformedAnnotation("missing " + close_tag);
      surfaces.emplace_back(annotated.substr(i, end - i));
      i = end + close_tag.size();
      expect("</XXX>");
    } else {
      throw MalformedAnnotation("unexpected content at offset " +
                                std::to_string(i));
    }
    skip_ws();
  }
  return surfaces;
}

}  // namespace lexsem

#endif
