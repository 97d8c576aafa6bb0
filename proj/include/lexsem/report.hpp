#ifndef LEXSEM_REPORT_HPP
#define LEXSEM_REPORT_HPP

// JSON and plain-table rendering of analysis results, plus the line-oriented
// clause input format used by the frame matcher.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexsem/compound.hpp"
#include "lexsem/coverage.hpp"
#include "lexsem/relations.hpp"
#include "lexsem/sections.hpp"

namespace lexsem {

using json = nlohmann::json;

struct SectionReport {
  CoverageRow row;
  std::optional<ClassBreakdownRow> classes;
  std::optional<PosAmbiguityRow> pos;
  std::optional<SenseAmbiguityStats> senses;
  std::optional<CombinedAmbiguity> combined;
  std::optional<std::map<UncoveredClass, long long>> uncovered;
};

inline json to_json(const SectionReport& r) {
  json j;
  j["section"] = to_string(r.row.section);
  j["types"] = r.row.types;
  j["matches"] = r.row.matches;
  j["pct"] = r.row.pct.value();
  if (r.classes) {
    j["classes"] = {{"N", r.classes->nouns},
                    {"V", r.classes->verbs},
                    {"ADJ", r.classes->adjectives}};
  }
  if (r.pos) {
    j["pos_ambiguity"] = {
        {"ambiguous", r.pos->ambiguous},
        {"pct_of_matches", r.pos->pct_of_matches(r.pos->ambiguous).value()},
        {"N_V", r.pos->noun_verb},
        {"N_ADJ", r.pos->noun_adj},
        {"V_ADJ", r.pos->verb_adj},
        {"N_V_ADJ", r.pos->noun_verb_adj}};
  }
  if (r.senses) {
    json averages = json::object();
    for (const auto& [wc, avg] : r.senses->class_averages)
      averages[to_string(wc)] = avg.value();
    j["senses"] = {{"ambiguous", r.senses->ambiguous},
                   {"pct", r.senses->pct.value()},
                   {"class_averages", averages},
                   {"overall_average", r.senses->overall_average.value()}};
  }
  if (r.combined) {
    j["combined_ambiguity"] = {{"count", r.combined->count},
                               {"pct", r.combined->pct.value()}};
  }
  if (r.uncovered) {
    json u = json::object();
    for (const auto& [cls, n] : *r.uncovered) u[to_string(cls)] = n;
    j["uncovered"] = u;
  }
  return j;
}

inline std::string render_table(const std::vector<SectionReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "section" << std::right << std::setw(10)
      << "types" << std::setw(10) << "matches" << std::setw(10) << "pct"
      << "\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(12) << to_string(r.row.section) << std::right
        << std::setw(10) << r.row.types << std::setw(10) << r.row.matches
        << std::setw(10) << r.row.pct.str() << "\n";
    if (r.classes)
      out << "  classes: N=" << r.classes->nouns << " V=" << r.classes->verbs
          << " ADJ=" << r.classes->adjectives << "\n";
    if (r.pos)
      out << "  pos-ambiguous: " << r.pos->ambiguous << " ("
          << r.pos->pct_of_matches(r.pos->ambiguous).str()
          << ")  N+V=" << r.pos->noun_verb << " N+ADJ=" << r.pos->noun_adj
          << " V+ADJ=" << r.pos->verb_adj << " N+V+ADJ=" << r.pos->noun_verb_adj
          << "\n";
    if (r.senses)
      out << "  sense-ambiguous: " << r.senses->ambiguous << " ("
          << r.senses->pct.str() << ")  avg=" << r.senses->overall_average.str()
          << "\n";
    if (r.combined)
      out << "  combined: " << r.combined->count << " ("
          << r.combined->pct.str() << ")\n";
    if (r.uncovered) {
      out << "  uncovered:";
      for (const auto& [cls, n] : *r.uncovered)
        out << " " << to_string(cls) << "=" << n;
      out << "\n";
    }
  }
  return out.str();
}

inline json to_json(const NPRelation& edge) {
  return {{"kind", to_string(edge.kind)},
          {"head", edge.head},
          {"dependent", edge.dependent}};
}

inline json to_json(const CompoundSplit& split) {
  json parts = json::array();
  for (const auto& p : split.parts)
    parts.push_back({{"segment", p.segment}, {"lexeme", p.lexeme}, {"link", p.link}});
  return {{"parts", parts}, {"score", split.score}};
}

inline json split_result_json(const std::string& word,
                              const std::optional<CompoundSplit>& split) {
  if (!split) return {{"word", word}, {"split", nullptr}};
  json j = to_json(*split);
  j["word"] = word;
  return j;
}

inline Clause clause_from_json(const json& j) {
  Clause clause;
  clause.verb = j.at("verb").get<std::string>();
  clause.passive = j.value("voice", "active") == "passive";
  for (const auto& c : j.value("complements", json::array())) {
    Complement comp;
    auto form = parse_form(c.value("form", "NP"));
    if (!form) throw Error("unknown complement form");
    comp.form = *form;
    comp.case_ = parse_case(c.value("case", ""));
    comp.prep = c.value("prep", "");
    comp.head = c.value("head", "");
    comp.number = parse_number(c.value("number", ""));
    clause.complements.push_back(std::move(comp));
  }
  return clause;
}

inline std::vector<Clause> load_clauses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open clause file: " + path);
  std::vector<Clause> clauses;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    clauses.push_back(clause_from_json(json::parse(trimmed)));
  }
  return clauses;
}

inline json to_json(const MatchResult& result, const Clause& clause) {
  json j;
  switch (result.kind) {
    case MatchResult::Kind::Match: j["result"] = "match"; break;
    case MatchResult::Kind::Ambiguous: j["result"] = "ambiguous"; break;
    case MatchResult::Kind::NoMatch: j["result"] = "no_match"; break;
  }
  json alts = json::array();
  for (const auto& a : result.assignments) {
    json fill = json::object();
    for (const auto& [slot, idx] : a.slot_fill) {
      const Complement& comp = clause.complements[idx];
      std::string text = comp.prep.empty() ? comp.head : comp.prep + " " + comp.head;
      fill[slot] = text;
    }
    alts.push_back({{"frame", a.frame_code}, {"slots", fill}});
  }
  j["assignments"] = alts;
  return j;
}

}  // namespace lexsem

#endif
