#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lexsem/relations.hpp"
#include "lexsem/report.hpp"
#include "test_util.hpp"

using namespace lexsem;
using testutil::enriched_net;
using testutil::fixture;
using testutil::main_net;

TEST_CASE("noun phrase parsing: prop and gen-attribute") {
  auto rels = parse_np(main_net(),
                       split_words("unauffaelliger Vorhof des Herzens"));
  REQUIRE(rels.size() == 2);
  REQUIRE(rels[0] == NPRelation{NPRelKind::Prop, "unauffaellig", "Vorhof"});
  REQUIRE(rels[1] == NPRelation{NPRelKind::GenAttribute, "Vorhof", "Herz"});
}

TEST_CASE("gen-attribute refines to part-of with holonym evidence") {
  auto rels = parse_np(main_net(),
                       split_words("unauffaelliger Vorhof des Herzens"));
  NPRelation refined = refine_gen_attribute(main_net(), rels[1]);
  REQUIRE(refined.kind == NPRelKind::PartOf);
  REQUIRE(to_string(refined.kind) == "part-of");
}

TEST_CASE("gen-attribute stays when the net offers no part evidence") {
  auto rels = parse_np(
      main_net(),
      split_words("dunkelrote Unterblutung der Schleimhaut der Niere"));
  REQUIRE(rels.size() == 3);
  REQUIRE(rels[0] == NPRelation{NPRelKind::Prop, "dunkelrot", "Unterblutung"});
  REQUIRE(rels[1] ==
          NPRelation{NPRelKind::GenAttribute, "Unterblutung", "Schleimhaut"});
  REQUIRE(rels[2] ==
          NPRelation{NPRelKind::GenAttribute, "Schleimhaut", "Niere"});
  for (std::size_t i = 1; i < rels.size(); ++i)
    REQUIRE(refine_gen_attribute(main_net(), rels[i]).kind ==
            NPRelKind::GenAttribute);
}

TEST_CASE("noun phrase grammar errors") {
  REQUIRE_THROWS_AS(parse_np(main_net(), split_words("des Herzens")),
                    NPGrammarError);
  REQUIRE_THROWS_AS(parse_np(main_net(), split_words("Vorhof Herz")),
                    NPGrammarError);
  REQUIRE_THROWS_AS(parse_np(main_net(), split_words("unauffaelliger")),
                    NPGrammarError);
  REQUIRE_THROWS_AS(parse_np(main_net(), split_words("Vorhof unauffaellig")),
                    NPGrammarError);
}

TEST_CASE("frame codes") {
  auto slots = parse_frame_code("NN.AN.BL");
  REQUIRE(slots.size() == 3);
  REQUIRE(slots[0].code == "NN");
  REQUIRE(!slots[0].optional_);
  auto opt = parse_frame_code("NN.Pp");
  REQUIRE(opt[1].optional_);
  REQUIRE_THROWS_AS(parse_frame_code(""), FrameCodeError);
  REQUIRE_THROWS_AS(parse_frame_code("N"), FrameCodeError);
  REQUIRE_THROWS_AS(parse_frame_code("NN..AN"), FrameCodeError);
  REQUIRE_THROWS_AS(parse_frame_code("N1"), FrameCodeError);
}

TEST_CASE("frames_for_verb resolves inflected and capitalized forms") {
  auto frames = frames_for_verb(main_net(), "operieren");
  REQUIRE(frames.size() == 2);
  REQUIRE(frames[0].code == "NN.AN");
  REQUIRE(frames[1].code == "NN.AN.BL");
  REQUIRE(frames_for_verb(main_net(), "operierte").size() == 2);
  REQUIRE(frames_for_verb(main_net(), "Operieren").size() == 2);
  REQUIRE_THROWS_AS(frames_for_verb(main_net(), "tanzen"), UnknownVerb);
}

static std::vector<Clause> fixture_clauses() {
  return load_clauses(fixture("clauses.jsonl"));
}

TEST_CASE("passive clause with a locative PP matches NN.AN.BL uniquely") {
  auto clauses = fixture_clauses();
  auto frames = frames_for_verb(main_net(), "operieren");
  MatchResult result = match_frame(main_net(), clauses[0], frames);
  REQUIRE(result.kind == MatchResult::Kind::Match);
  REQUIRE(result.assignments.front().frame_code == "NN.AN.BL");
  REQUIRE(result.assignments.front().slot_fill.at("AN") == 0);
  REQUIRE(result.assignments.front().slot_fill.at("BL") == 1);
}

TEST_CASE("two adjunct PPs are ambiguous without enrichment") {
  auto clauses = fixture_clauses();
  auto frames = frames_for_verb(main_net(), "operieren");
  MatchResult result = match_frame(main_net(), clauses[1], frames);
  REQUIRE(result.kind == MatchResult::Kind::Ambiguous);
  REQUIRE(result.assignments.size() == 2);
  for (const auto& a : result.assignments)
    REQUIRE(a.frame_code == "NN.AN.BL");
}

TEST_CASE("enrichment constraints disambiguate the BL slot") {
  auto clauses = fixture_clauses();
  auto frames = frames_for_verb(enriched_net(), "operieren");
  MatchResult result = match_frame(enriched_net(), clauses[1], frames);
  REQUIRE(result.kind == MatchResult::Kind::Match);
  const auto& a = result.assignments.front();
  REQUIRE(a.frame_code == "NN.AN.BL");
  // BL must be the "am Arm" complement (index 2), not "im Krankenhaus"
  REQUIRE(a.slot_fill.at("BL") == 2);
  // role constraint: the enriched frame also still accepts the Kopf clause
  REQUIRE(match_frame(enriched_net(), clauses[0], frames).kind ==
          MatchResult::Kind::Match);
}

TEST_CASE("conditional subject-plural constraint") {
  auto clauses = fixture_clauses();
  auto frames = frames_for_verb(main_net(), "kollidieren");
  REQUIRE(frames.size() == 1);

  MatchResult plural = match_frame(main_net(), clauses[2], frames);
  REQUIRE(plural.kind == MatchResult::Kind::Match);
  REQUIRE(check_number_constraint(clauses[2], frames[0],
                                  plural.assignments.front()) ==
          NumberCheck::Ok);

  MatchResult singular = match_frame(main_net(), clauses[3], frames);
  REQUIRE(singular.kind == MatchResult::Kind::Match);
  REQUIRE(check_number_constraint(clauses[3], frames[0],
                                  singular.assignments.front()) ==
          NumberCheck::Violation);
}

// Independent oracle: enumerate every complement->slot mapping by brute
// force (including leaving slots empty), then apply the same acceptance
// predicate and maximal-coverage filter.
static std::vector<FrameAssignment> oracle_assignments(
    const LexNet& net, const Clause& clause,
    const std::vector<VerbFrame>& frames) {
  std::vector<FrameAssignment> all;
  for (const auto& frame : frames) {
    const std::size_t s = frame.slots.size();
    const std::size_t c = clause.complements.size();
    // choice[i] in [0, c]: complement index or "empty" (== c)
    std::vector<std::size_t> choice(s, 0);
    while (true) {
      bool ok = true;
      std::set<std::size_t> used;
      FrameAssignment a{frame.code, {}};
      for (std::size_t i = 0; i < s && ok; ++i) {
        const FrameSlot& slot = frame.slots[i];
        std::string code = slot.code;
        code[1] = static_cast<char>(std::toupper(
            static_cast<unsigned char>(code[1])));
        if (choice[i] == c) {
          if (!(slot.optional_ || (clause.passive && code == "NN"))) ok = false;
          continue;
        }
        if (!used.insert(choice[i]).second) ok = false;
        const SlotConstraint* constraint = nullptr;
        if (auto it = frame.constraints.find(slot.code);
            it != frame.constraints.end())
          constraint = &it->second;
        if (ok && !detail::slot_accepts(net, clause,
                                        clause.complements[choice[i]], slot,
                                        constraint, 4))
          ok = false;
        if (ok) a.slot_fill[slot.code] = choice[i];
      }
      if (ok) all.push_back(a);
      // odometer increment
      std::size_t i = 0;
      for (; i < s; ++i) {
        if (++choice[i] <= c) break;
        choice[i] = 0;
      }
      if (i == s) break;
    }
  }
  std::size_t best = 0;
  for (const auto& a : all) best = std::max(best, a.slot_fill.size());
  std::vector<FrameAssignment> maximal;
  for (const auto& a : all)
    if (a.slot_fill.size() == best) maximal.push_back(a);
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  return maximal;
}

TEST_CASE("match_frame agrees with the brute-force oracle") {
  for (const auto& [net, label] :
       {std::pair<const LexNet*, const char*>{&main_net(), "plain"},
        std::pair<const LexNet*, const char*>{&enriched_net(), "enriched"}}) {
    INFO(label);
    for (const auto& verb : {std::string("operieren"), std::string("kollidieren")}) {
      auto frames = frames_for_verb(*net, verb);
      for (const auto& clause : fixture_clauses()) {
        if (clause.verb != verb) continue;
        MatchResult result = match_frame(*net, clause, frames);
        auto expected = oracle_assignments(*net, clause, frames);
        REQUIRE(result.assignments == expected);
      }
    }
  }
}

TEST_CASE("enrichment learning aggregates slot fillers by frequency") {
  auto clauses = load_clauses(fixture("learn_clauses.jsonl"));
  auto frames = frames_for_verb(main_net(), "operieren");
  const VerbFrame* bl_frame = nullptr;
  for (const auto& f : frames)
    if (f.code == "NN.AN.BL") bl_frame = &f;
  REQUIRE(bl_frame != nullptr);
  auto cands =
      learn_frame_enrichment(main_net(), clauses, "operieren", *bl_frame);
  REQUIRE(cands.size() == 4);
  REQUIRE(cands[0].frequency == 2);
  REQUIRE(cands[1].frequency == 2);
  REQUIRE(cands[2].frequency == 1);
  // frequency ties break on (slot, prep, head)
  REQUIRE(cands[0].slot == "AN");
  REQUIRE(cands[1].slot == "BL");
  REQUIRE(cands[1].prep == "am");
  REQUIRE(cands[1].head == "Kopf");
  REQUIRE(cands[1].hypernym_classes ==
          std::vector<std::string>{"Körperteil"});
}
