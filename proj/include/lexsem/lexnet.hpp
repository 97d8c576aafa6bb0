#ifndef LEXSEM_LEXNET_HPP
#define LEXSEM_LEXNET_HPP

// The lexical-semantic net: loader for the LSN-TSV format, validation
// (inverse closure, hypernym acyclicity, dangling references), the literal
// index, and the lookup chain exact -> variant -> umlaut -> morphology.
// A LexNet is immutable after load; concurrent reads are safe.

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexsem/errors.hpp"
#include "lexsem/lexnet_types.hpp"
#include "lexsem/normalize.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

struct SenseCandidate {
  std::string synset_id;
  std::string matched_stem;

  bool operator==(const SenseCandidate&) const = default;
};

struct SenseCandidateSet {
  std::string surface;
  std::map<WordClass, std::vector<SenseCandidate>> by_class;

  bool empty() const {
    for (const auto& [wc, v] : by_class)
      if (!v.empty()) return false;
    return true;
  }

  std::set<WordClass> classes() const {
    std::set<WordClass> out;
    for (const auto& [wc, v] : by_class)
      if (!v.empty()) out.insert(wc);
    return out;
  }

  std::vector<SenseCandidate> all() const {
    std::vector<SenseCandidate> out;
    for (const auto& [wc, v] : by_class) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.synset_id < b.synset_id;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) {
                            return a.synset_id == b.synset_id;
                          }),
              out.end());
    return out;
  }

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [wc, v] : by_class) n += v.size();
    return n;
  }
};

struct LookupOptions {
  std::optional<std::set<WordClass>> class_filter;
  bool use_morph = false;
  bool use_umlauts = true;
  bool case_fold = false;  // sentence-initial fallback: retry with toggled initial
};

class LexNet {
 public:
  using EdgeMap = std::map<std::string, std::vector<std::string>>;

  const std::map<std::string, Synset>& synsets() const { return synsets_; }

  const Synset& synset(const std::string& id) const {
    auto it = synsets_.find(id);
    if (it == synsets_.end()) throw UnknownSynset(id);
    return it->second;
  }

  bool contains(const std::string& id) const { return synsets_.count(id) > 0; }

  const std::vector<std::string>& relation_targets(RelationType type,
                                                   const std::string& src) const {
    static const std::vector<std::string> kEmpty;
    const EdgeMap& m = edges_[static_cast<std::size_t>(type)];
    auto it = m.find(src);
    return it == m.end() ? kEmpty : it->second;
  }

  const EdgeMap& edges(RelationType type) const {
    return edges_[static_cast<std::size_t>(type)];
  }

  const std::map<std::string, std::string>& variants() const { return variants_; }

  std::size_t literal_count() const {
    std::size_t n = 0;
    for (const auto& [id, s] : synsets_) n += s.literals.size();
    return n;
  }

  std::size_t edge_count(RelationType type) const {
    std::size_t n = 0;
    for (const auto& [src, v] : edges_[static_cast<std::size_t>(type)])
      n += v.size();
    return n;
  }

  /// All distinct marker-stripped literal surfaces in the net.
  std::vector<std::string> all_surfaces() const {
    std::vector<std::string> out;
    out.reserve(index_.size());
    for (const auto& [surface, m] : index_) out.push_back(surface);
    return out;
  }

  SenseCandidateSet lookup(const std::string& surface,
                           const LookupOptions& opts = {}) const {
    SenseCandidateSet result;
    result.surface = surface;
    collect(surface, opts, result);
    if (result.empty() && opts.case_fold) {
      std::string toggled = text::starts_upper(surface)
                                ? text::decapitalize(surface)
                                : text::capitalize(surface);
      if (toggled != surface) collect(toggled, opts, result);
    }
    finalize(result, opts);
    return result;
  }

  SenseCandidateSet lookup(const std::string& surface,
                           std::optional<std::set<WordClass>> class_filter,
                           bool use_morph) const {
    LookupOptions opts;
    opts.class_filter = std::move(class_filter);
    opts.use_morph = use_morph;
    return lookup(surface, opts);
  }

  /// Level k holds every synset reachable by exactly k hypernym edges,
  /// deduplicated and ordered by id. Trailing empty levels are omitted.
  std::vector<std::vector<std::string>> hypernym_levels(const std::string& id,
                                                        std::size_t depth) const {
    if (!contains(id)) throw UnknownSynset(id);
    std::vector<std::vector<std::string>> levels;
    std::set<std::string> frontier = {id};
    for (std::size_t k = 0; k < depth; ++k) {
      std::set<std::string> next;
      for (const auto& src : frontier)
        for (const auto& dst : relation_targets(RelationType::Hypernym, src))
          next.insert(dst);
      if (next.empty()) break;
      levels.emplace_back(next.begin(), next.end());
      frontier = std::move(next);
    }
    return levels;
  }

  /// True iff a holonym chain of length <= max_depth leads from part to whole.
  bool holonym_path_exists(const std::string& part, const std::string& whole,
                           std::size_t max_depth) const {
    if (!contains(part)) throw UnknownSynset(part);
    if (!contains(whole)) throw UnknownSynset(whole);
    std::set<std::string> frontier = {part};
    std::set<std::string> seen = {part};
    for (std::size_t k = 0; k < max_depth && !frontier.empty(); ++k) {
      std::set<std::string> next;
      for (const auto& src : frontier)
        for (const auto& dst : relation_targets(RelationType::Holonym, src)) {
          if (dst == whole) return true;
          if (seen.insert(dst).second) next.insert(dst);
        }
      frontier = std::move(next);
    }
    return false;
  }

  /// True iff `ancestor` is reachable from `id` via hypernym edges within
  /// max_depth levels (id itself counts at depth 0).
  bool hypernym_reachable(const std::string& id, const std::string& ancestor,
                          std::size_t max_depth) const {
    if (!contains(id) || !contains(ancestor)) return false;
    if (id == ancestor) return true;
    std::set<std::string> frontier = {id};
    std::set<std::string> seen = {id};
    for (std::size_t k = 0; k < max_depth && !frontier.empty(); ++k) {
      std::set<std::string> next;
      for (const auto& src : frontier)
        for (const auto& dst : relation_targets(RelationType::Hypernym, src)) {
          if (dst == ancestor) return true;
          if (seen.insert(dst).second) next.insert(dst);
        }
      frontier = std::move(next);
    }
    return false;
  }

  /// Synset ids (any class) whose marker-stripped literal equals `surface`.
  std::set<std::string> ids_for_surface(const std::string& surface) const {
    std::set<std::string> out;
    auto it = index_.find(surface);
    if (it == index_.end()) return out;
    for (const auto& [wc, ids] : it->second) out.insert(ids.begin(), ids.end());
    return out;
  }

  static LexNet load(const std::string& path);

 private:
  void collect(const std::string& surface, const LookupOptions& opts,
               SenseCandidateSet& result) const {
    if (match_stage(surface, opts, result)) return;
    if (!opts.use_morph) return;
    for (const auto& cand : strip_inflection(surface)) {
      if (cand.rule == "identity") continue;
      match_stage(cand.stem, opts, result);
      std::string decap = text::decapitalize(cand.stem);
      if (decap != cand.stem) match_stage(decap, opts, result);
    }
  }

  // Exact -> variant -> umlaut de-expansion, stopping at the first hit.
  bool match_stage(const std::string& key, const LookupOptions& opts,
                   SenseCandidateSet& result) const {
    if (add_from_index(key, key, result)) return true;
    auto vit = variants_.find(key);
    if (vit != variants_.end() &&
        add_from_index(vit->second, vit->second, result))
      return true;
    if (opts.use_umlauts) {
      bool hit = false;
      for (const auto& cand : deexpand_umlauts(key)) {
        if (cand == key) continue;
        if (add_from_index(cand, cand, result)) hit = true;
        auto cvit = variants_.find(cand);
        if (cvit != variants_.end() &&
            add_from_index(cvit->second, cvit->second, result))
          hit = true;
      }
      if (hit) return true;
    }
    return false;
  }

  bool add_from_index(const std::string& key, const std::string& stem,
                      SenseCandidateSet& result) const {
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    for (const auto& [wc, ids] : it->second)
      for (const auto& id : ids) result.by_class[wc].push_back({id, stem});
    return true;
  }

  void finalize(SenseCandidateSet& result, const LookupOptions& opts) const {
    std::map<WordClass, std::vector<SenseCandidate>> kept;
    for (auto& [wc, v] : result.by_class) {
      if (opts.class_filter && !opts.class_filter->count(wc)) continue;
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.synset_id < b.synset_id;
      });
      std::vector<SenseCandidate> dedup;
      for (auto& c : v)
        if (dedup.empty() || dedup.back().synset_id != c.synset_id)
          dedup.push_back(std::move(c));
      if (!dedup.empty()) kept[wc] = std::move(dedup);
    }
    result.by_class = std::move(kept);
  }

  std::map<std::string, Synset> synsets_;
  std::array<EdgeMap, 4> edges_;
  std::map<std::string, std::map<WordClass, std::set<std::string>>> index_;
  std::map<std::string, std::string> variants_;

  friend class LexNetLoader;
};

class LexNetLoader {
 public:
  static LexNet load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lexicon file: " + path);
    LexNetLoader loader;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      loader.parse_line(line, lineno);
    }
    loader.link();
    return std::move(loader.net_);
  }

 private:
  struct RawRelation {
    RelationType type;
    std::string src, dst;
    std::size_t line;
  };

  void parse_line(const std::string& line, std::size_t lineno) {
    if (line.empty() || line[0] == '#') return;
    std::vector<std::string> f = split_tabs(line);
    const std::string& kind = f[0];
    if (kind == "S") {
      if (f.size() != 4) throw ParseError(lineno, "S record needs 4 fields");
      if (net_.synsets_.count(f[1])) throw DuplicateSynsetId(f[1]);
      auto wc = parse_word_class(f[2]);
      if (!wc) throw ParseError(lineno, "unknown word class: " + f[2]);
      validate_field(f[3], *wc, lineno);
      Synset s;
      s.id = f[1];
      s.word_class = *wc;
      s.field = f[3];
      net_.synsets_.emplace(s.id, std::move(s));
    } else if (kind == "L") {
      if (f.size() != 3 && f.size() != 4)
        throw ParseError(lineno, "L record needs 3 or 4 fields");
      if (f[2].empty()) throw ParseError(lineno, "empty literal surface");
      literals_.push_back({f[1], f[2], f.size() == 4 ? f[3] : "", lineno});
    } else if (kind == "R") {
      if (f.size() != 4) throw ParseError(lineno, "R record needs 4 fields");
      RelationType type;
      if (f[1] == "hyper")
        type = RelationType::Hypernym;
      else if (f[1] == "mero")
        type = RelationType::Meronym;
      else
        throw ParseError(lineno, "unknown relation type: " + f[1]);
      relations_.push_back({type, f[2], f[3], lineno});
    } else if (kind == "V") {
      if (f.size() != 3) throw ParseError(lineno, "V record needs 3 fields");
      net_.variants_[f[1]] = f[2];
    } else if (kind == "F") {
      if (f.size() != 3) throw ParseError(lineno, "F record needs 3 fields");
      frames_.push_back({f[1], f[2], "", "", lineno});
    } else if (kind == "X") {
      if (f.size() != 5) throw ParseError(lineno, "X record needs 5 fields");
      frames_.push_back({f[1], f[2], f[3], f[4], lineno});
    } else {
      throw ParseError(lineno, "unknown record kind: " + kind);
    }
  }

  static void validate_field(const std::string& field, WordClass wc,
                             std::size_t lineno) {
    auto dot = field.find('.');
    if (dot == std::string::npos || dot + 1 >= field.size())
      throw ParseError(lineno, "semantic field must be prefix.label: " + field);
    std::string prefix = field.substr(0, dot);
    static const std::map<std::string, WordClass> kPrefixes = {
        {"nomen", WordClass::Noun},
        {"verb", WordClass::Verb},
        {"adj", WordClass::Adjective},
        {"adv", WordClass::Adverb}};
    auto it = kPrefixes.find(prefix);
    if (it == kPrefixes.end())
      throw ParseError(lineno, "unknown semantic-field prefix: " + prefix);
    if (it->second != wc)
      throw ParseError(lineno, "semantic-field prefix " + prefix +
                                   " does not match word class " + to_string(wc));
  }

  void link() {
    for (const auto& lit : literals_) {
      auto it = net_.synsets_.find(lit.id);
      if (it == net_.synsets_.end()) throw DanglingReference(lit.id);
      it->second.literals.push_back({lit.surface, lit.marker});
    }
    for (const auto& [id, s] : net_.synsets_)
      if (s.literals.empty())
        throw Error("synset without literals: " + id);

    for (const auto& fr : frames_) {
      auto it = net_.synsets_.find(fr.id);
      if (it == net_.synsets_.end()) throw DanglingReference(fr.id);
      if (it->second.word_class != WordClass::Verb)
        throw ParseError(fr.line, "verb frame on non-verb synset " + fr.id);
      if (fr.slot.empty()) {
        it->second.frame_codes.push_back(fr.code);
      } else {
        FrameEnrichmentRecord rec;
        rec.frame_code = fr.code;
        rec.slot = fr.slot;
        for (const auto& kv : split_on(fr.features, ',')) {
          auto eq = kv.find('=');
          if (eq == std::string::npos)
            throw ParseError(fr.line, "enrichment feature needs key=val: " + kv);
          rec.features[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        it->second.enrichments.push_back(std::move(rec));
      }
    }

    for (const auto& rel : relations_) {
      auto src = net_.synsets_.find(rel.src);
      if (src == net_.synsets_.end()) throw DanglingReference(rel.src);
      auto dst = net_.synsets_.find(rel.dst);
      if (dst == net_.synsets_.end()) throw DanglingReference(rel.dst);
      if (rel.type == RelationType::Hypernym &&
          src->second.word_class != dst->second.word_class)
        throw ParseError(rel.line, "hypernym edge crosses word classes: " +
                                       rel.src + " -> " + rel.dst);
      add_edge(rel.type, rel.src, rel.dst);
      add_edge(inverse_of(rel.type), rel.dst, rel.src);
    }
    for (auto& m : net_.edges_)
      for (auto& [src, v] : m) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }

    check_acyclic();
    build_index();

    for (const auto& [surface, canonical] : net_.variants_)
      if (!net_.index_.count(canonical)) throw DanglingReference(canonical);
  }

  void add_edge(RelationType type, const std::string& src,
                const std::string& dst) {
    net_.edges_[static_cast<std::size_t>(type)][src].push_back(dst);
  }

  void check_acyclic() {
    // DFS over hypernym edges; a back edge yields the offending cycle.
    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<std::string> stack;
    for (const auto& [id, s] : net_.synsets_) {
      if (state[id] == 0) dfs(id, state, stack);
    }
  }

  void dfs(const std::string& id, std::map<std::string, int>& state,
           std::vector<std::string>& stack) {
    state[id] = 1;
    stack.push_back(id);
    for (const auto& dst : net_.relation_targets(RelationType::Hypernym, id)) {
      if (state[dst] == 1) {
        auto it = std::find(stack.begin(), stack.end(), dst);
        throw CycleDetected(std::vector<std::string>(it, stack.end()));
      }
      if (state[dst] == 0) dfs(dst, state, stack);
    }
    stack.pop_back();
    state[id] = 2;
  }

  void build_index() {
    for (const auto& [id, s] : net_.synsets_)
      for (const auto& lit : s.literals)
        net_.index_[lit.surface][s.word_class].insert(id);
  }

  static std::vector<std::string> split_tabs(const std::string& line) {
    return split_on(line, '\t');
  }

  static std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream iss(s);
    while (std::getline(iss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
  }

  struct RawLiteral {
    std::string id, surface, marker;
    std::size_t line;
  };
  struct RawFrame {
    std::string id, code, slot, features;
    std::size_t line;
  };

  LexNet net_;
  std::vector<RawLiteral> literals_;
  std::vector<RawRelation> relations_;
  std::vector<RawFrame> frames_;
};

inline LexNet LexNet::load(const std::string& path) {
  return LexNetLoader::load(path);
}

inline LexNet load_lexnet(const std::string& path) { return LexNet::load(path); }

}  // namespace lexsem

#endif
