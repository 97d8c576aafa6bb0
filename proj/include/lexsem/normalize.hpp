#ifndef LEXSEM_NORMALIZE_HPP
#define LEXSEM_NORMALIZE_HPP

// Orthographic and light morphological normalization: umlaut de-expansion
// (ae/oe/ue -> umlaut), a fixed inflection suffix table, and Levenshtein
// distance for spelling-variant checks. Stem candidates are hypotheses only;
// they become real only when the lexicon lookup validates them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsem/lexnet_types.hpp"
#include "lexsem/text.hpp"

namespace lexsem {

/// All spellings reachable by replacing any subset of ae/oe/ue sites with
/// ä/ö/ü. A "ue" is not a site when the preceding letter is q, a, e or o
/// (Quelle, Bauer, Feuer, ...). Always contains the input itself.
inline std::set<std::string> deexpand_umlauts(std::string_view surface) {
  struct Site {
    std::size_t pos;
    const char* replacement;
  };
  std::vector<Site> sites;
  for (std::size_t i = 0; i + 1 < surface.size();) {
    std::string_view two = surface.substr(i, 2);
    if (two == "ae") {
      sites.push_back({i, "ä"});
      i += 2;
      continue;
    }
    if (two == "oe") {
      sites.push_back({i, "ö"});
      i += 2;
      continue;
    }
    if (two == "ue") {
      char prev = i > 0 ? static_cast<char>(std::tolower(
                              static_cast<unsigned char>(surface[i - 1])))
                        : '\0';
      if (prev != 'q' && prev != 'a' && prev != 'e' && prev != 'o') {
        sites.push_back({i, "ü"});
        i += 2;
        continue;
      }
    }
    ++i;
  }

  std::set<std::string> out;
  const std::size_t n = sites.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string cand;
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask & (std::size_t{1} << k))) continue;
      cand.append(surface.substr(cursor, sites[k].pos - cursor));
      cand.append(sites[k].replacement);
      cursor = sites[k].pos + 2;
    }
    cand.append(surface.substr(cursor));
    out.insert(std::move(cand));
  }
  return out;
}

struct StemCandidate {
  std::string stem;
  std::string rule;
  std::optional<WordClass> word_class_hint;

  bool operator==(const StemCandidate&) const = default;
};

/// Ordered suffix-rule stripping. The table is the contract:
///   nouns:      -ern -ens -es -en -em -er -s -n -e
///   verbs:      -test -tet -ten -te -st -t -en -e  (each also tried as
///               infinitive reconstruction stem+"en"), plus the participle
///               circumfixes ge..t / ge..en
///   adjectives: -em -en -er -es -e
/// The unmodified surface is always the first candidate.
inline std::vector<StemCandidate> strip_inflection(std::string_view surface) {
  std::vector<StemCandidate> out;
  std::set<std::pair<std::string, int>> seen;
  auto hint_key = [](std::optional<WordClass> h) {
    return h ? static_cast<int>(*h) + 1 : 0;
  };
  auto add = [&](std::string stem, std::string rule,
                 std::optional<WordClass> hint) {
    if (text::count_codepoints(stem) < 2 && stem != surface) return;
    if (!seen.insert({stem, hint_key(hint)}).second) return;
    out.push_back({std::move(stem), std::move(rule), hint});
  };

  add(std::string(surface), "identity", std::nullopt);

  static const std::vector<std::string> noun_suffixes = {
      "ern", "ens", "es", "en", "em", "er", "s", "n", "e"};
  static const std::vector<std::string> verb_suffixes = {
      "test", "tet", "ten", "te", "st", "t", "en", "e"};
  static const std::vector<std::string> adj_suffixes = {"em", "en", "er", "es",
                                                        "e"};

  for (const auto& suf : noun_suffixes) {
    if (text::ends_with(surface, suf) && surface.size() > suf.size())
      add(std::string(surface.substr(0, surface.size() - suf.size())),
          "noun -" + suf, WordClass::Noun);
  }
  for (const auto& suf : verb_suffixes) {
    if (!text::ends_with(surface, suf) || surface.size() <= suf.size())
      continue;
    std::string stem(surface.substr(0, surface.size() - suf.size()));
    add(stem, "verb -" + suf, WordClass::Verb);
    add(stem + "en", "verb -" + suf + "+inf", WordClass::Verb);
  }
  if (text::starts_with(surface, "ge") && surface.size() > 4) {
    if (text::ends_with(surface, "en"))
      add(std::string(surface.substr(2)), "verb ge..en", WordClass::Verb);
    if (text::ends_with(surface, "t"))
      add(std::string(surface.substr(2, surface.size() - 3)) + "en",
          "verb ge..t", WordClass::Verb);
  }
  for (const auto& suf : adj_suffixes) {
    if (text::ends_with(surface, suf) && surface.size() > suf.size())
      add(std::string(surface.substr(0, surface.size() - suf.size())),
          "adj -" + suf, WordClass::Adjective);
  }
  return out;
}

/// Levenshtein distance over Unicode scalar values.
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::string> ca = text::codepoints(a);
  std::vector<std::string> cb = text::codepoints(b);
  const std::size_t n = ca.size(), m = cb.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace lexsem

#endif
