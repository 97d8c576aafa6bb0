#ifndef LEXSEM_COMPOUND_HPP
#define LEXSEM_COMPOUND_HPP

// Corpus-evidence compound segmentation. Candidate splits are validated
// against the lexicon (with linking elements at the boundaries); ranking
// combines affix-family frequencies from the corpus with a semantic
// compatibility bonus between adjacent parts.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsem/lexnet.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

struct AffixTable {
  std::map<std::string, int> suffixes;
  std::map<std::string, int> prefixes;

  int suffix_count(const std::string& s) const {
    auto it = suffixes.find(s);
    return it == suffixes.end() ? 0 : it->second;
  }
  int prefix_count(const std::string& s) const {
    auto it = prefixes.find(s);
    return it == prefixes.end() ? 0 : it->second;
  }
};

/// Count, over distinct corpus types of length >= 8, every prefix and suffix
/// of length 4..len-4 (in codepoints).
inline AffixTable build_affix_table(const std::vector<std::string>& types) {
  AffixTable table;
  std::set<std::string> seen;
  for (const auto& type : types) {
    if (!seen.insert(type).second) continue;
    std::vector<std::string> cps = text::codepoints(type);
    const std::size_t len = cps.size();
    if (len < 8) continue;
    for (std::size_t k = 4; k + 4 <= len; ++k) {
      std::string prefix, suffix;
      for (std::size_t i = 0; i < k; ++i) prefix += cps[i];
      for (std::size_t i = len - k; i < len; ++i) suffix += cps[i];
      ++table.prefixes[prefix];
      ++table.suffixes[suffix];
    }
  }
  return table;
}

struct CompoundPart {
  std::string segment;  // slice of the input word, casing preserved
  std::string lexeme;   // lexicon form the segment validated against
  std::string link;     // linking element consumed after this segment
};

struct CompoundSplit {
  std::vector<CompoundPart> parts;
  double score = 0.0;

  std::string reassemble() const {
    std::string out;
    for (const auto& p : parts) {
      out += p.segment;
      out += p.link;
    }
    return out;
  }
};

struct CompatRule {
  std::string left;   // semantic field name or synset id / hypernym literal
  std::string right;
};

inline std::vector<CompatRule> load_compat_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open compatibility rules: " + path);
  std::vector<CompatRule> rules;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error("compatibility rule needs two tab-separated classes: " + line);
    rules.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return rules;
}

namespace detail {

inline const std::vector<std::string>& linking_elements() {
  static const std::vector<std::string> kLinks = {"", "es", "en", "er",
                                                  "s", "n", "e"};
  return kLinks;
}

/// Lexicon validation of one segment: try as-is and capitalized, with
/// morphology. Returns the matched lexicon form.
inline std::optional<std::string> validate_part(const LexNet& net,
                                                const std::string& segment) {
  LookupOptions opts;
  opts.use_morph = true;
  for (const std::string& form : {segment, text::capitalize(segment)}) {
    SenseCandidateSet senses = net.lookup(form, opts);
    if (!senses.empty()) {
      for (const auto& [wc, v] : senses.by_class)
        if (!v.empty()) return v.front().matched_stem;
    }
  }
  return std::nullopt;
}

inline void split_rec(const LexNet& net, const std::vector<std::string>& cps,
                      std::size_t from, std::size_t min_part, int depth,
                      std::vector<CompoundPart>& prefix,
                      std::vector<CompoundSplit>& out) {
  const std::size_t len = cps.size() - from;
  auto slice = [&](std::size_t b, std::size_t e) {
    std::string s;
    for (std::size_t i = b; i < e; ++i) s += cps[i];
    return s;
  };

  for (std::size_t p = min_part; p + min_part <= len; ++p) {
    std::string left = slice(from, from + p);
    auto left_lex = validate_part(net, left);
    if (!left_lex) continue;
    for (const auto& link : linking_elements()) {
      std::size_t rest_from = from + p + text::count_codepoints(link);
      if (rest_from + min_part > cps.size()) continue;
      if (!link.empty() && slice(from + p, rest_from) != link) continue;
      std::string right = slice(rest_from, cps.size());
      prefix.push_back({left, *left_lex, link});

      if (auto right_lex = validate_part(net, right)) {
        CompoundSplit split;
        split.parts = prefix;
        split.parts.push_back({right, *right_lex, ""});
        out.push_back(std::move(split));
      }
      if (depth > 1)
        split_rec(net, cps, rest_from, min_part, depth - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace detail

/// All lexicon-validated segmentations into 2..depth+1 parts, allowing a
/// linking element {s, es, n, en, e, er} at each boundary.
inline std::vector<CompoundSplit> split_candidates(const LexNet& net,
                                                   const std::string& word,
                                                   std::size_t min_part = 4,
                                                   int depth = 3) {
  std::vector<CompoundSplit> out;
  std::vector<std::string> cps = text::codepoints(word);
  if (cps.size() < 2 * min_part) return out;
  std::vector<CompoundPart> prefix;
  detail::split_rec(net, cps, 0, min_part, depth, prefix, out);
  return out;
}

struct CompoundScoring {
  double compat_bonus = 5.0;   // B
  double part_penalty = 2.0;   // P per part beyond two
  double threshold = 1.0;      // T: reject splits scoring below this
  std::size_t reach_depth = 4; // hypernym search depth for rule classes
};

namespace detail {

inline bool lexeme_in_class(const LexNet& net, const std::string& lexeme,
                            const std::string& cls, std::size_t reach_depth) {
  LookupOptions opts;
  opts.use_morph = true;
  SenseCandidateSet senses = net.lookup(lexeme, opts);
  std::string cls_expanded = text::expand_umlauts(cls);
  // The rule class may name a semantic field, a synset id, or a literal of a
  // hypernym synset; all three notations are accepted.
  std::set<std::string> class_ids;
  if (net.contains(cls)) class_ids.insert(cls);
  for (const auto& id : net.ids_for_surface(cls)) class_ids.insert(id);
  for (const auto& cand : senses.all()) {
    const Synset& s = net.synset(cand.synset_id);
    if (text::expand_umlauts(s.field) == cls_expanded) return true;
    for (const auto& cid : class_ids)
      if (net.hypernym_reachable(cand.synset_id, cid, reach_depth)) return true;
  }
  return false;
}

}  // namespace detail

/// Score candidates and pick the best one, or nothing when no candidate
/// clears the evidence threshold.
inline std::optional<CompoundSplit> rank_splits(
    std::vector<CompoundSplit> cands, const AffixTable& affixes,
    const std::vector<CompatRule>& rules, const LexNet& net,
    const CompoundScoring& scoring = {}) {
  if (cands.empty()) return std::nullopt;
  for (auto& split : cands) {
    double score = 0.0;
    score += affixes.prefix_count(split.parts.front().segment);
    score += affixes.suffix_count(split.parts.back().segment);
    bool compat = false;
    for (std::size_t i = 0; i + 1 < split.parts.size() && !compat; ++i)
      for (const auto& rule : rules) {
        if (detail::lexeme_in_class(net, split.parts[i].lexeme, rule.left,
                                    scoring.reach_depth) &&
            detail::lexeme_in_class(net, split.parts[i + 1].lexeme, rule.right,
                                    scoring.reach_depth)) {
          compat = true;
          break;
        }
      }
    if (compat) score += scoring.compat_bonus;
    score -= scoring.part_penalty *
             static_cast<double>(split.parts.size() - 2);
    split.score = score;
  }

  auto key = [](const CompoundSplit& s) {
    std::string lex;
    for (const auto& p : s.parts) lex += p.segment + "|";
    return std::tuple(s.parts.size(),
                      -static_cast<long long>(
                          text::count_codepoints(s.parts.back().segment)),
                      lex);
  };
  const CompoundSplit* best = nullptr;
  for (const auto& split : cands) {
    if (split.score < scoring.threshold) continue;
    if (!best || split.score > best->score ||
        (split.score == best->score && key(split) < key(*best)))
      best = &split;
  }
  if (!best) return std::nullopt;
  return *best;
}

}  // namespace lexsem

#endif
