#include <catch2/catch_amalgamated.hpp>

#include "lexsem/corpus.hpp"
#include "test_util.hpp"

using namespace lexsem;
using testutil::fixture;
using testutil::read_file;

static std::vector<std::string> surfaces(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.surface);
  return out;
}

TEST_CASE("tokenizer emits letter/digit/hyphen runs") {
  auto toks = tokenize("Das Herz, und 4-9 mm!");
  REQUIRE(surfaces(toks) ==
          std::vector<std::string>{"Das", "Herz", "und", "4-9", "mm"});
  REQUIRE(toks[0].offset == 0);
  REQUIRE(toks[1].offset == 4);
}

TEST_CASE("enumeration tokens keep their period") {
  auto toks = tokenize("II. Innere Besichtigung 3. Abschnitt");
  REQUIRE(toks[0].surface == "II.");
  REQUIRE(toks[3].surface == "3.");
  REQUIRE(is_implicit_markup("II."));
  REQUIRE(is_implicit_markup("3."));
  REQUIRE(!is_implicit_markup("mm."));
  REQUIRE(!is_implicit_markup("3"));
}

TEST_CASE("measures and truncated forms survive tokenization") {
  auto toks = tokenize("Gewicht 300g, -aussenseite");
  REQUIRE(surfaces(toks) ==
          std::vector<std::string>{"Gewicht", "300g", "-aussenseite"});
}

TEST_CASE("sentence-initial flags") {
  auto toks = tokenize("Das Herz ist gesund. Die Leber auch. aber nicht Er");
  REQUIRE(toks[0].sentence_initial);        // Das: text start
  REQUIRE(!toks[1].sentence_initial);       // Herz
  REQUIRE(toks[4].sentence_initial);        // Die: after ". " + capital
  REQUIRE(!toks[7].sentence_initial);       // aber: lowercase after boundary
}

TEST_CASE("umlauts are token characters") {
  auto toks = tokenize("linke Herzhälfte");
  REQUIRE(surfaces(toks) == std::vector<std::string>{"linke", "Herzhälfte"});
}

TEST_CASE("parse_raw splits at section markers") {
  Document doc = parse_raw(read_file(fixture("corpus/doc1.txt")), "doc1");
  REQUIRE(doc.id == "doc1");
  REQUIRE(doc.sections.size() == 3);
  REQUIRE(doc.sections[0].first == SectionKind::Findings);
  REQUIRE(doc.sections[1].first == SectionKind::Background);
  REQUIRE(doc.sections[2].first == SectionKind::Discussion);
  REQUIRE(!doc.sections[0].second.empty());
}

TEST_CASE("parse_raw marker variants and Other text") {
  Document doc = parse_raw("vorab\n==  findings ==\nHerz\n== DISCUSSION ==\n");
  REQUIRE(doc.sections.size() == 3);
  REQUIRE(doc.sections[0].first == SectionKind::Other);
  REQUIRE(surfaces(doc.sections[0].second) == std::vector<std::string>{"vorab"});
  REQUIRE(doc.sections[1].first == SectionKind::Findings);
  // an empty trailing section is still reported
  REQUIRE(doc.sections[2].first == SectionKind::Discussion);
  REQUIRE(doc.sections[2].second.empty());
}

TEST_CASE("markerless text is a single Other section") {
  Document doc = parse_raw("Herz und Niere\n");
  REQUIRE(doc.sections.size() == 1);
  REQUIRE(doc.sections[0].first == SectionKind::Other);
}

TEST_CASE("parse_tagged reads the element stream") {
  auto toks = parse_tagged(read_file(fixture("tagged/listing_gewicht.xml")));
  REQUIRE(toks.size() == 3);
  REQUIRE(toks[0].surface == "Gewicht");
  REQUIRE(toks[0].pos == "N");
  REQUIRE(toks[0].stem == "Gewicht");
  REQUIRE(toks[1].pos == "DETD");
  REQUIRE(!toks[1].stem.has_value());
  REQUIRE(toks[2].surface == "Herzens");
  REQUIRE(toks[2].stem == "Herz");
}

TEST_CASE("parse_tagged rejects malformed input") {
  REQUIRE_THROWS_AS(parse_tagged("<N>Herz"), TaggedFormatError);
  REQUIRE_THROWS_AS(parse_tagged("Herz</N>"), TaggedFormatError);
  REQUIRE_THROWS_AS(parse_tagged("<N>Herz</V>"), TaggedFormatError);
  REQUIRE_THROWS_AS(parse_tagged("<N STEM=Herz>Herz</N>"), TaggedFormatError);
  try {
    parse_tagged("<N>Leber</N> <N>Herz");
    FAIL("expected TaggedFormatError");
  } catch (const TaggedFormatError& e) {
    REQUIRE(e.offset == 13);
  }
}

TEST_CASE("candidate filter") {
  auto stoplist = load_stoplist(fixture("stoplist.txt"));
  REQUIRE(stoplist.count("und") == 1);
  auto toks = tokenize("II. Das Herz und die Arm Niere");
  auto kept = candidate_filter(toks, stoplist);
  // "II." implicit markup, "Das"/"und"/"die" stoplisted (case-insensitive),
  // "Arm" too short
  REQUIRE(surfaces(kept) == std::vector<std::string>{"Herz", "Niere"});
}

TEST_CASE("word types are distinct, case-sensitive, first-occurrence order") {
  auto toks = tokenize("Herz herz Herz Niere herz");
  REQUIRE(word_types(toks) ==
          std::vector<std::string>{"Herz", "herz", "Niere"});
}
