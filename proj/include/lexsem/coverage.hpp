#ifndef LEXSEM_COVERAGE_HPP
#define LEXSEM_COVERAGE_HPP

// Coverage and ambiguity measurement over word types, plus the classifier
// for uncovered terms. All percentages are truncated (floored) at two
// decimals, never rounded.

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "lexsem/compound.hpp"
#include "lexsem/corpus.hpp"
#include "lexsem/lexnet.hpp"
#include "lexsem/normalize.hpp"

namespace lexsem {

/// Fixed-point percentage with two decimals, truncation semantics.
struct Percent {
  long long hundredths = 0;

  static Percent ratio(long long num, long long den) {
    Percent p;
    if (den > 0) p.hundredths = num * 10000 / den;
    return p;
  }

  /// Mean with two-decimal truncation (not a percentage): num/den * 100.
  static Percent mean(long long num, long long den) {
    Percent p;
    if (den > 0) p.hundredths = num * 100 / den;
    return p;
  }

  std::string str() const {
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac = "0" + frac;
    return std::to_string(hundredths / 100) + "." + frac;
  }

  double value() const { return static_cast<double>(hundredths) / 100.0; }

  bool operator==(const Percent&) const = default;
};

struct CoverageRow {
  SectionKind section = SectionKind::Other;
  long long types = 0;
  long long matches = 0;
  Percent pct;
};

inline Percent coverage_percentage(long long types, long long matches) {
  return Percent::ratio(matches, types);
}

inline CoverageRow coverage_row(const LexNet& net,
                                const std::vector<std::string>& types,
                                SectionKind section,
                                const LookupOptions& opts = {}) {
  CoverageRow row;
  row.section = section;
  row.types = static_cast<long long>(types.size());
  for (const auto& type : types)
    if (!net.lookup(type, opts).empty()) ++row.matches;
  row.pct = coverage_percentage(row.types, row.matches);
  return row;
}

struct ClassBreakdownRow {
  SectionKind section = SectionKind::Other;
  long long nouns = 0;
  long long verbs = 0;
  long long adjectives = 0;
};

/// A type increments the counter of every word class in which it has a sense;
/// the row sum can therefore exceed the match count.
inline ClassBreakdownRow class_breakdown(const LexNet& net,
                                         const std::vector<std::string>& types,
                                         SectionKind section,
                                         const LookupOptions& opts = {}) {
  ClassBreakdownRow row;
  row.section = section;
  for (const auto& type : types) {
    auto classes = net.lookup(type, opts).classes();
    if (classes.count(WordClass::Noun)) ++row.nouns;
    if (classes.count(WordClass::Verb)) ++row.verbs;
    if (classes.count(WordClass::Adjective)) ++row.adjectives;
  }
  return row;
}

struct PosAmbiguityRow {
  SectionKind section = SectionKind::Other;
  long long matches = 0;
  long long ambiguous = 0;
  long long noun_verb = 0;
  long long noun_adj = 0;
  long long verb_adj = 0;
  long long noun_verb_adj = 0;

  Percent pct_of_matches(long long count) const {
    return Percent::ratio(count, matches);
  }
  Percent pct_of_ambiguous(long long count) const {
    return Percent::ratio(count, ambiguous);
  }
};

inline PosAmbiguityRow pos_ambiguity_stats(const LexNet& net,
                                           const std::vector<std::string>& types,
                                           SectionKind section,
                                           const LookupOptions& opts = {}) {
  PosAmbiguityRow row;
  row.section = section;
  for (const auto& type : types) {
    auto classes = net.lookup(type, opts).classes();
    if (classes.empty()) continue;
    ++row.matches;
    bool n = classes.count(WordClass::Noun) > 0;
    bool v = classes.count(WordClass::Verb) > 0;
    bool a = classes.count(WordClass::Adjective) > 0;
    int k = (n ? 1 : 0) + (v ? 1 : 0) + (a ? 1 : 0);
    if (classes.size() < 2) continue;
    ++row.ambiguous;
    if (n && v && a && k == 3)
      ++row.noun_verb_adj;
    else if (n && v)
      ++row.noun_verb;
    else if (n && a)
      ++row.noun_adj;
    else if (v && a)
      ++row.verb_adj;
    else
      ++row.noun_verb;  // combinations with ADV fold into the N/V bucket
  }
  return row;
}

struct SenseAmbiguityStats {
  SectionKind section = SectionKind::Other;
  long long matches = 0;
  long long ambiguous = 0;  // matched types with >1 sense in some class
  Percent pct;              // ambiguous / matches
  std::map<WordClass, Percent> class_averages;
  Percent overall_average;
};

inline SenseAmbiguityStats sense_ambiguity_stats(
    const LexNet& net, const std::vector<std::string>& types,
    SectionKind section, const LookupOptions& opts = {}) {
  SenseAmbiguityStats stats;
  stats.section = section;
  std::map<WordClass, std::pair<long long, long long>> sums;  // senses, pairs
  long long total_senses = 0, total_pairs = 0;
  for (const auto& type : types) {
    SenseCandidateSet senses = net.lookup(type, opts);
    if (senses.empty()) continue;
    ++stats.matches;
    bool multi = false;
    for (const auto& [wc, v] : senses.by_class) {
      if (v.empty()) continue;
      if (v.size() > 1) multi = true;
      sums[wc].first += static_cast<long long>(v.size());
      sums[wc].second += 1;
      total_senses += static_cast<long long>(v.size());
      total_pairs += 1;
    }
    if (multi) ++stats.ambiguous;
  }
  stats.pct = Percent::ratio(stats.ambiguous, stats.matches);
  for (const auto& [wc, p] : sums)
    stats.class_averages[wc] = Percent::mean(p.first, p.second);
  stats.overall_average = Percent::mean(total_senses, total_pairs);
  return stats;
}

struct CombinedAmbiguity {
  SectionKind section = SectionKind::Other;
  long long matches = 0;
  long long count = 0;  // ambiguous in both dimensions
  Percent pct;          // count / matches
};

inline CombinedAmbiguity combined_ambiguity(const LexNet& net,
                                            const std::vector<std::string>& types,
                                            SectionKind section,
                                            const LookupOptions& opts = {}) {
  CombinedAmbiguity result;
  result.section = section;
  for (const auto& type : types) {
    SenseCandidateSet senses = net.lookup(type, opts);
    if (senses.empty()) continue;
    ++result.matches;
    bool multi_sense = false;
    for (const auto& [wc, v] : senses.by_class)
      if (v.size() > 1) multi_sense = true;
    if (senses.classes().size() >= 2 && multi_sense) ++result.count;
  }
  result.pct = Percent::ratio(result.count, result.matches);
  return result;
}

enum class UncoveredClass {
  Measure,
  NamedEntity,
  Truncation,
  Compound,
  Inflected,
  Misspelling,
  Other
};

inline std::string to_string(UncoveredClass c) {
  switch (c) {
    case UncoveredClass::Measure: return "measure";
    case UncoveredClass::NamedEntity: return "named_entity";
    case UncoveredClass::Truncation: return "truncation";
    case UncoveredClass::Compound: return "compound";
    case UncoveredClass::Inflected: return "inflected";
    case UncoveredClass::Misspelling: return "misspelling";
    case UncoveredClass::Other: return "other";
  }
  return "?";
}

inline std::set<std::string> load_gazetteer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gazetteer: " + path);
  std::set<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = text::trim(line);
    if (!w.empty() && w[0] != '#') entries.insert(w);
  }
  return entries;
}

/// Deterministic, first-match-wins classification of a term the lexicon does
/// not cover. Precondition: lookup(surface) is empty.
inline UncoveredClass classify_uncovered(const LexNet& net,
                                         const AffixTable& affixes,
                                         const std::set<std::string>& gazetteer,
                                         const std::string& surface) {
  (void)affixes;
  static const std::regex measure_re(
      R"(\d+([.,]\d+)?(cm|mm|ml|g|kg|l)?)");
  static const std::regex range_re(R"(\d+-\d+)");
  if (std::regex_match(surface, measure_re) ||
      std::regex_match(surface, range_re))
    return UncoveredClass::Measure;

  if (!surface.empty() && surface.front() == '-')
    return UncoveredClass::Truncation;

  auto is_named_entity = [&] {
    if (gazetteer.count(surface)) return true;
    static const std::regex code_re(R"([A-Z]+\d+)");
    if (std::regex_match(surface, code_re)) return true;
    // hyphenated proper-name pattern: capital segments after the first hyphen
    if (text::starts_upper(surface)) {
      auto dash = surface.find('-');
      while (dash != std::string::npos && dash + 1 < surface.size()) {
        if (text::starts_upper(std::string_view(surface).substr(dash + 1)))
          return true;
        dash = surface.find('-', dash + 1);
      }
    }
    return false;
  };
  if (is_named_entity()) return UncoveredClass::NamedEntity;

  LookupOptions morph_opts;
  morph_opts.use_morph = true;
  if (!net.lookup(surface, morph_opts).empty()) return UncoveredClass::Inflected;

  if (!split_candidates(net, surface).empty()) return UncoveredClass::Compound;

  std::size_t surface_cp = text::count_codepoints(surface);
  for (const auto& lit : net.all_surfaces()) {
    std::size_t lit_cp = text::count_codepoints(lit);
    if (lit_cp < 6) continue;
    std::size_t diff = lit_cp > surface_cp ? lit_cp - surface_cp
                                           : surface_cp - lit_cp;
    if (diff > 2) continue;
    if (edit_distance(surface, lit) <= 2) return UncoveredClass::Misspelling;
  }
  return UncoveredClass::Other;
}

}  // namespace lexsem

#endif
