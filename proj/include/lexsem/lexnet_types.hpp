#ifndef LEXSEM_LEXNET_TYPES_HPP
#define LEXSEM_LEXNET_TYPES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexsem {

enum class WordClass { Noun, Verb, Adjective, Adverb };

inline std::string to_string(WordClass wc) {
  switch (wc) {
    case WordClass::Noun: return "N";
    case WordClass::Verb: return "V";
    case WordClass::Adjective: return "ADJ";
    case WordClass::Adverb: return "ADV";
  }
  return "?";
}

inline std::optional<WordClass> parse_word_class(std::string_view s) {
  if (s == "N") return WordClass::Noun;
  if (s == "V") return WordClass::Verb;
  if (s == "ADJ") return WordClass::Adjective;
  if (s == "ADV") return WordClass::Adverb;
  return std::nullopt;
}

enum class RelationType { Hypernym, Hyponym, Meronym, Holonym };

inline RelationType inverse_of(RelationType t) {
  switch (t) {
    case RelationType::Hypernym: return RelationType::Hyponym;
    case RelationType::Hyponym: return RelationType::Hypernym;
    case RelationType::Meronym: return RelationType::Holonym;
    case RelationType::Holonym: return RelationType::Meronym;
  }
  return t;
}

inline std::string to_string(RelationType t) {
  switch (t) {
    case RelationType::Hypernym: return "hypernym";
    case RelationType::Hyponym: return "hyponym";
    case RelationType::Meronym: return "meronym";
    case RelationType::Holonym: return "holonym";
  }
  return "?";
}

/// A lexical unit of a synset. The marker ("*o" suffix, "?" prefix, ...) is
/// kept verbatim for display but never enters the lookup key.
struct Literal {
  std::string surface;
  std::string marker;

  /// Display form with the marker applied: "?" markers are prefixes,
  /// everything else is a suffix.
  std::string display() const {
    if (marker.empty()) return surface;
    if (marker.front() == '?') return marker + surface;
    return surface + marker;
  }
};

struct FrameEnrichmentRecord {
  std::string frame_code;
  std::string slot;
  std::map<std::string, std::string> features;
};

struct Synset {
  std::string id;
  WordClass word_class = WordClass::Noun;
  std::string field;  // e.g. "nomen.Koerper"
  std::vector<Literal> literals;
  std::vector<std::string> frame_codes;               // V synsets only
  std::vector<FrameEnrichmentRecord> enrichments;     // V synsets only
};

}  // namespace lexsem

#endif
