#ifndef LEXSEM_DISAMBIG_HPP
#define LEXSEM_DISAMBIG_HPP

// Ambiguity resolution: POS filtering (tag, capitalization, section
// preference) and sense ranking against per-section semantic-field profiles.

#include <algorithm>
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

enum class ProfileProvenance { Learned, Configured };

struct FieldProfile {
  std::map<SectionKind, std::map<std::string, double>> weights;
  ProfileProvenance provenance = ProfileProvenance::Learned;

  double weight(SectionKind section, const std::string& field) const {
    auto sit = weights.find(section);
    if (sit == weights.end()) return 0.0;
    // field names match across umlaut spellings (nomen.Körper == nomen.Koerper)
    std::string key = text::expand_umlauts(field);
    for (const auto& [f, w] : sit->second)
      if (text::expand_umlauts(f) == key) return w;
    return 0.0;
  }
};

/// POS disambiguation, applied in order: explicit tag, capitalization rule,
/// Findings adjective-over-verb preference. Never invents senses.
inline SenseCandidateSet pos_filter(const SenseCandidateSet& cands,
                                    const std::optional<std::string>& pos_tag,
                                    bool sentence_initial, SectionKind section) {
  SenseCandidateSet out = cands;

  if (pos_tag) {
    if (auto wc = parse_word_class(*pos_tag)) {
      std::map<WordClass, std::vector<SenseCandidate>> kept;
      auto it = out.by_class.find(*wc);
      if (it != out.by_class.end()) kept[*wc] = it->second;
      out.by_class = std::move(kept);
      return out;
    }
  }

  if (!sentence_initial) {
    if (text::starts_upper(out.surface)) {
      if (out.by_class.count(WordClass::Noun)) {
        auto nouns = out.by_class[WordClass::Noun];
        out.by_class.clear();
        out.by_class[WordClass::Noun] = std::move(nouns);
      }
    } else if (text::starts_lower(out.surface)) {
      if (out.classes().size() > 1 || !out.by_class.count(WordClass::Noun))
        out.by_class.erase(WordClass::Noun);
    }
  }

  if (section == SectionKind::Findings &&
      out.by_class.count(WordClass::Adjective) &&
      out.by_class.count(WordClass::Verb))
    out.by_class.erase(WordClass::Verb);

  return out;
}

/// Learn per-section field weights: weight(field) = number of
/// (matched type, sense) pairs carrying that field.
inline FieldProfile learn_profile(const LexNet& net,
                                  const std::vector<Document>& corpus,
                                  const LookupOptions& opts = {}) {
  if (corpus.empty()) throw EmptyCorpus();
  bool any_section = false;
  FieldProfile profile;
  profile.provenance = ProfileProvenance::Learned;
  std::set<std::string> stoplist_none;
  for (const auto& doc : corpus) {
    for (const auto& [kind, tokens] : doc.sections) {
      any_section = true;
      profile.weights.try_emplace(kind);
      for (const auto& type : word_types(tokens)) {
        for (const auto& cand : net.lookup(type, opts).all()) {
          const Synset& s = net.synset(cand.synset_id);
          profile.weights[kind][s.field] += 1.0;
        }
      }
    }
  }
  if (!any_section) throw EmptyCorpus();
  return profile;
}

/// Rank senses by the profile weight of their semantic field (descending),
/// synset id ascending as the deterministic tie-break.
inline std::vector<SenseCandidate> resolve_sense(const LexNet& net,
                                                 const SenseCandidateSet& cands,
                                                 const FieldProfile& profile,
                                                 SectionKind section) {
  std::vector<SenseCandidate> senses = cands.all();
  std::stable_sort(senses.begin(), senses.end(),
                   [&](const SenseCandidate& a, const SenseCandidate& b) {
                     double wa = profile.weight(section, net.synset(a.synset_id).field);
                     double wb = profile.weight(section, net.synset(b.synset_id).field);
                     if (wa != wb) return wa > wb;
                     return a.synset_id < b.synset_id;
                   });
  return senses;
}

inline void save_profile(const FieldProfile& profile, const std::string& path) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [kind, fields] : profile.weights) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [field, w] : fields) obj[field] = w;
    j[to_string(kind)] = obj;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write profile: " + path);
  out << j.dump(2) << "\n";
}

inline FieldProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profile: " + path);
  nlohmann::json j;
  in >> j;
  FieldProfile profile;
  profile.provenance = ProfileProvenance::Configured;
  for (auto& [section, fields] : j.items()) {
    auto kind = parse_section_kind(section);
    if (!kind) throw Error("unknown section in profile: " + section);
    for (auto& [field, w] : fields.items())
      profile.weights[*kind][field] = w.get<double>();
  }
  return profile;
}

/// Built-in profile seeded with the typical per-section field lists at
/// uniform weight, for disambiguation without a training corpus.
inline FieldProfile default_profile() {
  FieldProfile p;
  p.provenance = ProfileProvenance::Configured;
  p.weights[SectionKind::Findings] = {{"nomen.Körper", 1.0},
                                      {"verb.Lokation", 1.0},
                                      {"verb.Veränderung", 1.0},
                                      {"adj.Körper", 1.0},
                                      {"adj.Perzeption", 1.0}};
  p.weights[SectionKind::Background] = {{"nomen.Geschehen", 1.0},
                                        {"adj.Zeit", 1.0},
                                        {"adj.Lokation", 1.0}};
  p.weights[SectionKind::Discussion] = {{"nomen.Geschehen", 1.0},
                                        {"nomen.Körper", 1.0},
                                        {"verb.Lokation", 1.0},
                                        {"verb.Veränderung", 1.0},
                                        {"adj.Relation", 1.0}};
  return p;
}

}  // namespace lexsem

#endif
