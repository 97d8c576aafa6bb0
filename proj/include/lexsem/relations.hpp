#ifndef LEXSEM_RELATIONS_HPP
#define LEXSEM_RELATIONS_HPP

// Noun-phrase relation extraction (prop / gen-attribute), refinement of
// gen-attribute into part-of via meronym/holonym evidence, and verb-frame
// matching with enrichment constraints.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexsem/errors.hpp"
#include "lexsem/lexnet.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

enum class NPRelKind { Prop, GenAttribute, PartOf, Part, Patient, Location };

inline std::string to_string(NPRelKind k) {
  switch (k) {
    case NPRelKind::Prop: return "prop";
    case NPRelKind::GenAttribute: return "gen-attribute";
    case NPRelKind::PartOf: return "part-of";
    case NPRelKind::Part: return "part";
    case NPRelKind::Patient: return "patient";
    case NPRelKind::Location: return "location";
  }
  return "?";
}

struct NPRelation {
  NPRelKind kind = NPRelKind::GenAttribute;
  std::string head;       // stem of the first argument
  std::string dependent;  // stem of the second argument

  bool operator==(const NPRelation&) const = default;
};

namespace detail {

inline bool is_genitive_det(const std::string& w) {
  return w == "der" || w == "des";
}

/// Best-effort stem: the lexicon's matched stem for the wanted class, the
/// plain surface otherwise.
inline std::string np_stem(const LexNet& net, const std::string& surface,
                           WordClass wc) {
  LookupOptions opts;
  opts.class_filter = std::set<WordClass>{wc};
  opts.use_morph = true;
  SenseCandidateSet senses = net.lookup(surface, opts);
  auto it = senses.by_class.find(wc);
  if (it != senses.by_class.end() && !it->second.empty())
    return it->second.front().matched_stem;
  return surface;
}

}  // namespace detail

/// Parse a flat noun phrase [ADJ]* N ( der/des [ADJ]* N )* into prop and
/// gen-attribute relations. Capitalized words are nouns, der/des genitive
/// determiners, everything else adjectives.
inline std::vector<NPRelation> parse_np(const LexNet& net,
                                        const std::vector<std::string>& words) {
  std::vector<NPRelation> relations;
  std::vector<std::string> noun_stems;
  std::vector<std::string> pending_adjs;
  bool expect_noun_group = true;

  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (detail::is_genitive_det(w)) {
      if (expect_noun_group || noun_stems.empty())
        throw NPGrammarError(i, "determiner without preceding noun");
      expect_noun_group = true;
      continue;
    }
    if (text::starts_upper(w)) {
      if (!expect_noun_group)
        throw NPGrammarError(i, "noun without genitive determiner: " + w);
      std::string noun = detail::np_stem(net, w, WordClass::Noun);
      for (const auto& adj : pending_adjs)
        relations.push_back({NPRelKind::Prop, adj, noun});
      pending_adjs.clear();
      noun_stems.push_back(noun);
      expect_noun_group = false;
    } else {
      if (!expect_noun_group)
        throw NPGrammarError(i, "adjective after completed noun group: " + w);
      pending_adjs.push_back(detail::np_stem(net, w, WordClass::Adjective));
    }
  }
  if (expect_noun_group && !words.empty())
    throw NPGrammarError(words.size(), "phrase does not end in a noun");
  if (!pending_adjs.empty())
    throw NPGrammarError(words.size(), "dangling adjectives");

  for (std::size_t i = 0; i + 1 < noun_stems.size(); ++i)
    relations.push_back({NPRelKind::GenAttribute, noun_stems[i], noun_stems[i + 1]});
  return relations;
}

inline std::vector<std::string> split_words(const std::string& phrase) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : phrase) {
    if (c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

/// Turn a gen-attribute edge into part-of when any head/dependent sense pair
/// is connected by a holonym chain of length <= max_depth. Unknown nouns and
/// missing evidence leave the edge unchanged.
inline NPRelation refine_gen_attribute(const LexNet& net, NPRelation edge,
                                       std::size_t max_depth = 1) {
  if (edge.kind != NPRelKind::GenAttribute) return edge;
  LookupOptions opts;
  opts.class_filter = std::set<WordClass>{WordClass::Noun};
  opts.use_morph = true;
  SenseCandidateSet part = net.lookup(edge.head, opts);
  SenseCandidateSet whole = net.lookup(edge.dependent, opts);
  for (const auto& p : part.all())
    for (const auto& w : whole.all())
      if (net.holonym_path_exists(p.synset_id, w.synset_id, max_depth)) {
        edge.kind = NPRelKind::PartOf;
        return edge;
      }
  return edge;
}

// ---------------------------------------------------------------------------
// Verb frames

struct FrameSlot {
  std::string code;       // two characters, e.g. "NN", "BL", "Pp"
  bool optional_ = false; // lowercase second character
};

/// Split a dot-separated frame code into slots; a lowercase second character
/// marks the slot optional ("Pp").
inline std::vector<FrameSlot> parse_frame_code(const std::string& code) {
  if (code.empty()) throw FrameCodeError(code);
  std::vector<FrameSlot> slots;
  std::size_t start = 0;
  while (start <= code.size()) {
    std::size_t dot = code.find('.', start);
    std::string group = code.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (group.size() != 2 ||
        !std::isalpha(static_cast<unsigned char>(group[0])) ||
        !std::isalpha(static_cast<unsigned char>(group[1])))
      throw FrameCodeError(code);
    slots.push_back(
        {group, std::islower(static_cast<unsigned char>(group[1])) != 0});
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return slots;
}

enum class ComplementForm { NP, PP };
enum class CaseTag { Nom, Acc, Dat, Gen, Unknown };
enum class NumberTag { Sg, Pl, Unknown };

inline std::optional<ComplementForm> parse_form(std::string_view s) {
  if (s == "NP") return ComplementForm::NP;
  if (s == "PP") return ComplementForm::PP;
  return std::nullopt;
}

inline CaseTag parse_case(std::string_view s) {
  if (s == "nom") return CaseTag::Nom;
  if (s == "acc") return CaseTag::Acc;
  if (s == "dat") return CaseTag::Dat;
  if (s == "gen") return CaseTag::Gen;
  return CaseTag::Unknown;
}

inline NumberTag parse_number(std::string_view s) {
  if (s == "sg") return NumberTag::Sg;
  if (s == "pl") return NumberTag::Pl;
  return NumberTag::Unknown;
}

struct Complement {
  ComplementForm form = ComplementForm::NP;
  CaseTag case_ = CaseTag::Unknown;
  std::string prep;  // for PP complements
  std::string head;  // head noun (or pronoun) surface
  NumberTag number = NumberTag::Unknown;
};

struct Clause {
  std::string verb;     // surface or stem; resolved via lookup
  bool passive = false;
  std::vector<Complement> complements;
};

struct SlotConstraint {
  std::optional<std::string> role_class;  // synset id or hypernym literal
  std::optional<std::string> prep;
  std::optional<CaseTag> case_;
  std::optional<NumberTag> number;
  bool subject_plural_if_absent = false;
};

struct VerbFrame {
  std::string code;
  std::vector<FrameSlot> slots;
  std::map<std::string, SlotConstraint> constraints;  // keyed by slot code
};

/// Build VerbFrame values for a verb from the net's frame codes and
/// enrichment records.
inline std::vector<VerbFrame> frames_for_verb(const LexNet& net,
                                              const std::string& verb) {
  LookupOptions opts;
  opts.class_filter = std::set<WordClass>{WordClass::Verb};
  opts.use_morph = true;
  opts.case_fold = true;
  SenseCandidateSet senses = net.lookup(verb, opts);
  if (senses.empty()) throw UnknownVerb(verb);

  std::vector<VerbFrame> frames;
  std::set<std::string> seen;
  for (const auto& cand : senses.all()) {
    const Synset& s = net.synset(cand.synset_id);
    for (const auto& code : s.frame_codes) {
      if (!seen.insert(code).second) continue;
      VerbFrame frame;
      frame.code = code;
      frame.slots = parse_frame_code(code);
      for (const auto& rec : s.enrichments) {
        if (rec.frame_code != code) continue;
        SlotConstraint c;
        for (const auto& [key, val] : rec.features) {
          if (key == "role") c.role_class = val;
          else if (key == "prep") c.prep = val;
          else if (key == "case") c.case_ = parse_case(val);
          else if (key == "number") c.number = parse_number(val);
          else if (key == "subject_plural_if_absent")
            c.subject_plural_if_absent = (val == "true" || val == "1");
          else
            throw Error("unknown enrichment feature: " + key);
        }
        frame.constraints[rec.slot] = c;
      }
      frames.push_back(std::move(frame));
    }
  }
  return frames;
}

struct FrameAssignment {
  std::string frame_code;
  std::map<std::string, std::size_t> slot_fill;  // slot code -> complement idx

  bool operator==(const FrameAssignment&) const = default;
  bool operator<(const FrameAssignment& other) const {
    return std::tie(frame_code, slot_fill) <
           std::tie(other.frame_code, other.slot_fill);
  }
};

struct MatchResult {
  enum class Kind { Match, Ambiguous, NoMatch };
  Kind kind = Kind::NoMatch;
  std::vector<FrameAssignment> assignments;
};

namespace detail {

inline bool case_compatible(CaseTag have, CaseTag want) {
  return have == want || have == CaseTag::Unknown;
}

/// Can this complement fill this slot? Surface-form rules first (with the
/// passive re-mapping for NN/AN), then enrichment constraints.
inline bool slot_accepts(const LexNet& net, const Clause& clause,
                         const Complement& comp, const FrameSlot& slot,
                         const SlotConstraint* constraint,
                         std::size_t reach_depth) {
  std::string code = slot.code;
  code[1] = static_cast<char>(std::toupper(static_cast<unsigned char>(code[1])));

  bool form_ok = false;
  if (code == "NN") {
    form_ok = clause.passive
                  ? (comp.form == ComplementForm::PP && comp.prep == "von")
                  : (comp.form == ComplementForm::NP &&
                     case_compatible(comp.case_, CaseTag::Nom));
  } else if (code == "AN") {
    form_ok = clause.passive
                  ? (comp.form == ComplementForm::NP &&
                     case_compatible(comp.case_, CaseTag::Nom))
                  : (comp.form == ComplementForm::NP &&
                     case_compatible(comp.case_, CaseTag::Acc));
  } else if (code == "DN") {
    form_ok = comp.form == ComplementForm::NP &&
              case_compatible(comp.case_, CaseTag::Dat);
  } else if (code == "GN") {
    form_ok = comp.form == ComplementForm::NP &&
              case_compatible(comp.case_, CaseTag::Gen);
  } else if (code == "PP" || code == "BL") {
    form_ok = comp.form == ComplementForm::PP;
  }
  if (!form_ok) return false;

  if (!constraint) return true;
  if (constraint->prep && comp.prep != *constraint->prep) return false;
  if (constraint->case_ && !case_compatible(comp.case_, *constraint->case_))
    return false;
  if (constraint->number && comp.number != NumberTag::Unknown &&
      comp.number != *constraint->number)
    return false;
  if (constraint->role_class) {
    LookupOptions opts;
    opts.use_morph = true;
    opts.case_fold = true;
    SenseCandidateSet senses = net.lookup(comp.head, opts);
    std::set<std::string> class_ids;
    if (net.contains(*constraint->role_class))
      class_ids.insert(*constraint->role_class);
    for (const auto& id : net.ids_for_surface(*constraint->role_class))
      class_ids.insert(id);
    bool reached = false;
    for (const auto& cand : senses.all())
      for (const auto& cid : class_ids)
        if (net.hypernym_reachable(cand.synset_id, cid, reach_depth)) {
          reached = true;
          break;
        }
    if (!reached) return false;
  }
  return true;
}

inline void enumerate(const LexNet& net, const Clause& clause,
                      const VerbFrame& frame, std::size_t slot_idx,
                      std::vector<int>& comp_to_slot,
                      std::map<std::string, std::size_t>& fill,
                      std::vector<FrameAssignment>& out,
                      std::size_t reach_depth) {
  if (slot_idx == frame.slots.size()) {
    out.push_back({frame.code, fill});
    return;
  }
  const FrameSlot& slot = frame.slots[slot_idx];
  const SlotConstraint* constraint = nullptr;
  if (auto it = frame.constraints.find(slot.code); it != frame.constraints.end())
    constraint = &it->second;

  for (std::size_t c = 0; c < clause.complements.size(); ++c) {
    if (comp_to_slot[c] >= 0) continue;
    if (!slot_accepts(net, clause, clause.complements[c], slot, constraint,
                      reach_depth))
      continue;
    comp_to_slot[c] = static_cast<int>(slot_idx);
    fill[slot.code] = c;
    enumerate(net, clause, frame, slot_idx + 1, comp_to_slot, fill, out,
              reach_depth);
    fill.erase(slot.code);
    comp_to_slot[c] = -1;
  }

  // A slot may stay empty when it is declared optional, or when passive
  // usage demotes the deep subject (NN -> optional von-PP).
  std::string code = slot.code;
  code[1] = static_cast<char>(std::toupper(static_cast<unsigned char>(code[1])));
  bool may_skip = slot.optional_ || (clause.passive && code == "NN");
  if (may_skip)
    enumerate(net, clause, frame, slot_idx + 1, comp_to_slot, fill, out,
              reach_depth);
}

}  // namespace detail

struct FrameMatchConfig {
  std::size_t role_reach_depth = 4;
};

/// Enumerate injective complement->slot assignments for every frame, keep the
/// assignments covering the most complements, and report Match / Ambiguous /
/// NoMatch.
inline MatchResult match_frame(const LexNet& net, const Clause& clause,
                               const std::vector<VerbFrame>& frames,
                               const FrameMatchConfig& config = {}) {
  std::vector<FrameAssignment> all;
  for (const auto& frame : frames) {
    std::vector<int> comp_to_slot(clause.complements.size(), -1);
    std::map<std::string, std::size_t> fill;
    detail::enumerate(net, clause, frame, 0, comp_to_slot, fill, all,
                      config.role_reach_depth);
  }
  if (all.empty()) return {MatchResult::Kind::NoMatch, {}};

  std::size_t best_cover = 0;
  for (const auto& a : all) best_cover = std::max(best_cover, a.slot_fill.size());
  std::vector<FrameAssignment> maximal;
  for (auto& a : all)
    if (a.slot_fill.size() == best_cover) maximal.push_back(std::move(a));
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

  if (maximal.size() == 1) return {MatchResult::Kind::Match, std::move(maximal)};
  return {MatchResult::Kind::Ambiguous, std::move(maximal)};
}

enum class NumberCheck { Ok, Violation };

/// Conditional number constraint: when an optional slot flagged with
/// subject_plural_if_absent is unfilled, the subject must be plural.
inline NumberCheck check_number_constraint(const Clause& clause,
                                           const VerbFrame& frame,
                                           const FrameAssignment& assignment) {
  for (const auto& slot : frame.slots) {
    auto cit = frame.constraints.find(slot.code);
    if (cit == frame.constraints.end() ||
        !cit->second.subject_plural_if_absent)
      continue;
    if (assignment.slot_fill.count(slot.code)) continue;  // slot is present

    NumberTag subject_number = NumberTag::Unknown;
    if (auto it = assignment.slot_fill.find("NN");
        it != assignment.slot_fill.end()) {
      subject_number = clause.complements[it->second].number;
    } else {
      for (const auto& comp : clause.complements)
        if (comp.form == ComplementForm::NP && comp.case_ == CaseTag::Nom)
          subject_number = comp.number;
    }
    if (subject_number != NumberTag::Pl) return NumberCheck::Violation;
  }
  return NumberCheck::Ok;
}

struct EnrichmentCandidate {
  std::string slot;
  std::string prep;
  std::string head;
  std::vector<std::string> hypernym_classes;  // level-1 hypernym literals
  std::size_t frequency = 0;
};

/// Corpus-based curation aid: for each slot of the frame, the distinct
/// (preposition, head noun, hypernym class) fillers observed in matching
/// clauses of the verb, with frequencies, sorted by frequency descending.
inline std::vector<EnrichmentCandidate> learn_frame_enrichment(
    const LexNet& net, const std::vector<Clause>& corpus,
    const std::string& verb, const VerbFrame& frame,
    const FrameMatchConfig& config = {}) {
  std::map<std::tuple<std::string, std::string, std::string>,
           EnrichmentCandidate>
      acc;
  for (const auto& clause : corpus) {
    if (clause.verb != verb) continue;
    MatchResult result = match_frame(net, clause, {frame}, config);
    if (result.kind == MatchResult::Kind::NoMatch) continue;
    for (const auto& assignment : result.assignments) {
      for (const auto& [slot, comp_idx] : assignment.slot_fill) {
        const Complement& comp = clause.complements[comp_idx];
        auto key = std::tuple(slot, comp.prep, comp.head);
        auto [it, inserted] = acc.try_emplace(key);
        EnrichmentCandidate& cand = it->second;
        if (inserted) {
          cand.slot = slot;
          cand.prep = comp.prep;
          cand.head = comp.head;
          LookupOptions opts;
          opts.use_morph = true;
          opts.case_fold = true;
          SenseCandidateSet senses = net.lookup(comp.head, opts);
          std::set<std::string> classes;
          for (const auto& sense : senses.all())
            for (const auto& hyper : net.relation_targets(
                     RelationType::Hypernym, sense.synset_id))
              for (const auto& lit : net.synset(hyper).literals)
                classes.insert(lit.display());
          cand.hypernym_classes.assign(classes.begin(), classes.end());
        }
        ++cand.frequency;
      }
    }
  }
  std::vector<EnrichmentCandidate> out;
  for (auto& [key, cand] : acc) out.push_back(std::move(cand));
  std::stable_sort(out.begin(), out.end(),
                   [](const EnrichmentCandidate& a, const EnrichmentCandidate& b) {
                     if (a.frequency != b.frequency)
                       return a.frequency > b.frequency;
                     return std::tie(a.slot, a.prep, a.head) <
                            std::tie(b.slot, b.prep, b.head);
                   });
  return out;
}

}  // namespace lexsem

#endif
