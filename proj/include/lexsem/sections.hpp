#ifndef LEXSEM_SECTIONS_HPP
#define LEXSEM_SECTIONS_HPP

// Shallow section recognition from semantic-field distributions and
// word-class ratios.

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexsem/corpus.hpp"
#include "lexsem/lexnet.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

struct RatioRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct SectionProfile {
  std::vector<std::string> indicative;
  std::vector<std::string> contra;
  std::map<WordClass, RatioRange> ratios;
  bool require_adj_ge_verb = false;
};

struct SectionProfileSpec {
  std::map<SectionKind, SectionProfile> kinds;
};

/// Built-in spec: the typical per-section field lists as indicative sets;
/// Findings additionally expects its adjective share to reach its verb share.
inline SectionProfileSpec default_section_spec() {
  SectionProfileSpec spec;
  SectionProfile findings;
  findings.indicative = {"nomen.Körper", "verb.Lokation", "verb.Veränderung",
                         "adj.Körper", "adj.Perzeption"};
  findings.require_adj_ge_verb = true;
  spec.kinds[SectionKind::Findings] = std::move(findings);

  SectionProfile background;
  background.indicative = {"nomen.Geschehen", "adj.Zeit", "adj.Lokation"};
  background.contra = {"nomen.Körper"};
  spec.kinds[SectionKind::Background] = std::move(background);

  SectionProfile discussion;
  discussion.indicative = {"nomen.Geschehen", "nomen.Körper", "verb.Lokation",
                           "verb.Veränderung", "adj.Relation"};
  spec.kinds[SectionKind::Discussion] = std::move(discussion);
  return spec;
}

inline SectionProfileSpec load_section_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open section spec: " + path);
  nlohmann::json j;
  in >> j;
  SectionProfileSpec spec;
  for (auto& [name, body] : j.items()) {
    auto kind = parse_section_kind(name);
    if (!kind) throw Error("unknown section in spec: " + name);
    SectionProfile profile;
    for (auto& f : body.value("indicative", nlohmann::json::array()))
      profile.indicative.push_back(f.get<std::string>());
    for (auto& f : body.value("contra", nlohmann::json::array()))
      profile.contra.push_back(f.get<std::string>());
    if (body.contains("ratios")) {
      static const std::map<std::string, WordClass> kNames = {
          {"noun", WordClass::Noun},
          {"adj", WordClass::Adjective},
          {"verb", WordClass::Verb}};
      for (auto& [cls, range] : body["ratios"].items()) {
        auto it = kNames.find(cls);
        if (it == kNames.end()) throw Error("unknown ratio class: " + cls);
        profile.ratios[it->second] = {range.at(0).get<double>(),
                                      range.at(1).get<double>()};
      }
    }
    profile.require_adj_ge_verb = body.value("adj_ge_verb", false);
    spec.kinds[*kind] = std::move(profile);
  }
  return spec;
}

struct SectionScores {
  std::optional<SectionKind> kind;  // nullopt = Unknown
  std::map<SectionKind, double> scores;
};

/// Score each kind by indicative-minus-contra field proportions plus a
/// word-class ratio term, and return the argmax. Ties and non-positive
/// maxima yield Unknown, as does a token stream with no lexicon matches.
inline SectionScores classify_section(const LexNet& net,
                                      const std::vector<Token>& tokens,
                                      const SectionProfileSpec& spec,
                                      const LookupOptions& opts = {}) {
  std::map<std::string, double> field_counts;
  double field_total = 0.0;
  std::map<WordClass, double> class_counts;
  double class_total = 0.0;

  for (const auto& tok : tokens) {
    SenseCandidateSet senses = net.lookup(tok.surface, opts);
    if (senses.empty()) continue;
    for (const auto& cand : senses.all()) {
      field_counts[text::expand_umlauts(net.synset(cand.synset_id).field)] += 1.0;
      field_total += 1.0;
    }
    for (WordClass wc : senses.classes()) {
      class_counts[wc] += 1.0;
      class_total += 1.0;
    }
  }

  SectionScores result;
  if (field_total == 0.0) return result;

  auto proportion = [&](const std::string& field) {
    auto it = field_counts.find(text::expand_umlauts(field));
    return it == field_counts.end() ? 0.0 : it->second / field_total;
  };
  auto share = [&](WordClass wc) {
    auto it = class_counts.find(wc);
    return (class_total == 0.0 || it == class_counts.end())
               ? 0.0
               : it->second / class_total;
  };

  for (const auto& [kind, profile] : spec.kinds) {
    double score = 0.0;
    for (const auto& f : profile.indicative) score += proportion(f);
    for (const auto& f : profile.contra) score -= proportion(f);
    bool ratios_ok = true;
    for (const auto& [wc, range] : profile.ratios) {
      double s = share(wc);
      if (s < range.lo || s > range.hi) ratios_ok = false;
    }
    if (profile.require_adj_ge_verb &&
        share(WordClass::Adjective) < share(WordClass::Verb))
      ratios_ok = false;
    if (ratios_ok) score += 1.0;
    result.scores[kind] = score;
  }

  double best = 0.0;
  std::optional<SectionKind> best_kind;
  bool tie = false;
  for (const auto& [kind, score] : result.scores) {
    if (!best_kind || score > best) {
      best = score;
      best_kind = kind;
      tie = false;
    } else if (score == best) {
      tie = true;
    }
  }
  if (best_kind && best > 0.0 && !tie) result.kind = best_kind;
  return result;
}

}  // namespace lexsem

#endif
