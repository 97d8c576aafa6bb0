#include <catch2/catch_amalgamated.hpp>

#include "lexsem/disambig.hpp"
#include "test_util.hpp"

using namespace lexsem;
using testutil::fixture;
using testutil::main_net;
using testutil::temp_file;

TEST_CASE("pos_filter honors an explicit tag") {
  LookupOptions morph;
  morph.use_morph = true;
  auto cands = main_net().lookup("Herzens", morph);  // N + V readings
  auto out = pos_filter(cands, std::string("V"), false, SectionKind::Other);
  REQUIRE(out.classes() == std::set<WordClass>{WordClass::Verb});
  // unknown tags leave the candidate set to the later rules
  auto unk = pos_filter(cands, std::string("FOO"), true, SectionKind::Other);
  REQUIRE(unk.classes().size() == 2);
}

TEST_CASE("capitalization rule applies only mid-sentence") {
  LookupOptions morph;
  morph.use_morph = true;
  auto cands = main_net().lookup("Herzens", morph);
  auto mid = pos_filter(cands, std::nullopt, false, SectionKind::Other);
  REQUIRE(mid.classes() == std::set<WordClass>{WordClass::Noun});
  auto initial = pos_filter(cands, std::nullopt, true, SectionKind::Other);
  REQUIRE(initial.classes().size() == 2);
}

TEST_CASE("lowercase surfaces drop the noun reading when another exists") {
  // build a synthetic candidate set with a lowercase surface in two classes
  auto cands = main_net().lookup("modern");
  REQUIRE(cands.classes() ==
          std::set<WordClass>{WordClass::Verb, WordClass::Adjective});
  auto out = pos_filter(cands, std::nullopt, false, SectionKind::Other);
  REQUIRE(out.classes().size() == 2);  // no noun reading to drop

  SenseCandidateSet mixed;
  mixed.surface = "becken";
  mixed.by_class[WordClass::Noun] = {{"s015", "Becken"}};
  mixed.by_class[WordClass::Verb] = {{"s040", "becken"}};
  auto filtered = pos_filter(mixed, std::nullopt, false, SectionKind::Other);
  REQUIRE(filtered.classes() == std::set<WordClass>{WordClass::Verb});
}

TEST_CASE("Findings prefers adjectives over verbs") {
  auto cands = main_net().lookup("modern");
  auto out = pos_filter(cands, std::nullopt, false, SectionKind::Findings);
  REQUIRE(out.classes() == std::set<WordClass>{WordClass::Adjective});
  // the preference never invents senses
  REQUIRE(pos_filter(cands, std::nullopt, false, SectionKind::Background)
              .classes()
              .size() == 2);
}

TEST_CASE("pos_filter is idempotent") {
  LookupOptions morph;
  morph.use_morph = true;
  for (const std::string& w : {"Herzens", "modern", "Herz", "viereckig"}) {
    auto cands = main_net().lookup(w, morph);
    for (SectionKind kind : kAllSections) {
      auto once = pos_filter(cands, std::nullopt, false, kind);
      auto twice = pos_filter(once, std::nullopt, false, kind);
      REQUIRE(once.classes() == twice.classes());
      REQUIRE(once.all().size() == twice.all().size());
    }
  }
}

TEST_CASE("learn_profile counts (type, sense) pairs per field") {
  Document doc;
  doc.sections.emplace_back(SectionKind::Background,
                            tokenize("Unfall zeitig Unfall"));
  FieldProfile profile = learn_profile(main_net(), {doc});
  REQUIRE(profile.provenance == ProfileProvenance::Learned);
  // Unfall is one type with one sense; the repeat token does not count
  REQUIRE(profile.weight(SectionKind::Background, "nomen.Geschehen") == 1.0);
  REQUIRE(profile.weight(SectionKind::Background, "adj.Zeit") == 1.0);
  REQUIRE(profile.weight(SectionKind::Background, "nomen.Koerper") == 0.0);
}

TEST_CASE("learn_profile rejects an empty corpus") {
  REQUIRE_THROWS_AS(learn_profile(main_net(), {}), EmptyCorpus);
  Document empty_doc;
  REQUIRE_THROWS_AS(learn_profile(main_net(), {empty_doc}), EmptyCorpus);
}

TEST_CASE("profile field names match across umlaut spellings") {
  FieldProfile p;
  p.weights[SectionKind::Findings]["nomen.Körper"] = 3.0;
  REQUIRE(p.weight(SectionKind::Findings, "nomen.Koerper") == 3.0);
  REQUIRE(p.weight(SectionKind::Findings, "nomen.Körper") == 3.0);
}

TEST_CASE("resolve_sense ranks by field weight, then synset id") {
  auto cands = main_net().lookup("Becken");
  FieldProfile profile = default_profile();
  auto findings =
      resolve_sense(main_net(), cands, profile, SectionKind::Findings);
  REQUIRE(findings.size() == 2);
  REQUIRE(findings[0].synset_id == "s016");  // nomen.Koerper preferred
  auto other = resolve_sense(main_net(), cands, profile, SectionKind::Other);
  REQUIRE(other[0].synset_id == "s015");  // tie on weight -> id order
}

TEST_CASE("resolve_sense order is invariant under positive weight scaling") {
  auto cands = main_net().lookup("Becken");
  FieldProfile profile = default_profile();
  FieldProfile scaled = profile;
  for (auto& [kind, fields] : scaled.weights)
    for (auto& [field, w] : fields) w *= 17.5;
  for (SectionKind kind : kAllSections) {
    auto a = resolve_sense(main_net(), cands, profile, kind);
    auto b = resolve_sense(main_net(), cands, scaled, kind);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      REQUIRE(a[i].synset_id == b[i].synset_id);
  }
}

TEST_CASE("profile save/load round trip") {
  Document doc;
  doc.sections.emplace_back(SectionKind::Findings, tokenize("Leber Niere"));
  FieldProfile learned = learn_profile(main_net(), {doc});
  std::string path = temp_file("profile.json", "");
  save_profile(learned, path);
  FieldProfile loaded = load_profile(path);
  REQUIRE(loaded.provenance == ProfileProvenance::Configured);
  REQUIRE(loaded.weights == learned.weights);
  REQUIRE_THROWS_AS(load_profile(fixture("does_not_exist.json")), Error);
}
