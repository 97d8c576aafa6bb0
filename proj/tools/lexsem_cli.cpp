// lexsem command-line driver: lexicon validation, corpus coverage and
// ambiguity reports, semantic tagging, NP relations, verb-frame matching,
// compound splitting, section classification and profile learning.
//
// Exit codes: 0 ok, 1 validation failure, 2 input failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lexsem/lexsem.hpp"

namespace fs = std::filesystem;
using namespace lexsem;

namespace {

struct RunConfig {
  std::string lexicon;
  std::string stoplist;
  std::string gazetteer;
  std::string profile;
  std::string section_spec;
  bool morph = false;
  bool umlauts = true;
  std::size_t hypernym_depth = 1;
  std::string format = "json";
  unsigned jobs = 1;
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config: " + path);
  json j;
  in >> j;
  cfg.lexicon = j.value("lexicon", cfg.lexicon);
  cfg.stoplist = j.value("stoplist", cfg.stoplist);
  cfg.gazetteer = j.value("gazetteer", cfg.gazetteer);
  cfg.profile = j.value("profile", cfg.profile);
  cfg.section_spec = j.value("spec", cfg.section_spec);
  cfg.morph = j.value("morph", cfg.morph);
  cfg.umlauts = j.value("umlauts", cfg.umlauts);
  cfg.hypernym_depth = j.value("hypernym_depth", cfg.hypernym_depth);
  cfg.format = j.value("format", cfg.format);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Document> load_corpus_dir(const std::string& dir, unsigned jobs) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no corpus files in " + dir);

  std::vector<Document> docs(files.size());
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < files.size(); i += stride)
      docs[i] = parse_raw(read_file(files[i].string()), files[i].filename().string());
  };
  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t, jobs);
    for (auto& th : threads) th.join();
  }
  return docs;
}

LookupOptions lookup_opts(const RunConfig& cfg) {
  LookupOptions opts;
  opts.use_morph = cfg.morph;
  opts.use_umlauts = cfg.umlauts;
  return opts;
}

/// Candidate word types per section, merged across documents.
std::map<SectionKind, std::vector<std::string>> section_types(
    const std::vector<Document>& docs, const std::set<std::string>& stoplist) {
  std::map<SectionKind, std::vector<Token>> merged;
  for (const auto& doc : docs)
    for (const auto& [kind, tokens] : doc.sections) {
      auto filtered = candidate_filter(tokens, stoplist);
      auto& dst = merged[kind];
      dst.insert(dst.end(), filtered.begin(), filtered.end());
    }
  std::map<SectionKind, std::vector<std::string>> types;
  for (auto& [kind, tokens] : merged) types[kind] = word_types(tokens);
  return types;
}

int cmd_check(const RunConfig& cfg) {
  try {
    LexNet net = load_lexnet(cfg.lexicon);
    std::cout << "synsets: " << net.synsets().size() << "\n"
              << "literals: " << net.literal_count() << "\n"
              << "variants: " << net.variants().size() << "\n";
    for (RelationType t :
         {RelationType::Hypernym, RelationType::Hyponym, RelationType::Meronym,
          RelationType::Holonym})
      std::cout << to_string(t) << " edges: " << net.edge_count(t) << "\n";
    std::cout << "ok\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "invalid lexicon: " << e.what() << "\n";
    return 1;
  }
}

int cmd_coverage(const RunConfig& cfg, const std::string& corpus_dir,
                 bool by_class, bool ambiguity, bool uncovered) {
  LexNet net = load_lexnet(cfg.lexicon);
  std::set<std::string> stoplist =
      cfg.stoplist.empty() ? std::set<std::string>{} : load_stoplist(cfg.stoplist);
  std::set<std::string> gazetteer =
      cfg.gazetteer.empty() ? std::set<std::string>{} : load_gazetteer(cfg.gazetteer);

  std::vector<Document> docs;
  try {
    docs = load_corpus_dir(corpus_dir, cfg.jobs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  LookupOptions opts = lookup_opts(cfg);
  auto types = section_types(docs, stoplist);

  std::vector<SectionReport> reports;
  for (SectionKind kind : kAllSections) {
    auto it = types.find(kind);
    if (it == types.end()) continue;
    SectionReport report;
    report.row = coverage_row(net, it->second, kind, opts);
    if (by_class) report.classes = class_breakdown(net, it->second, kind, opts);
    if (ambiguity) {
      report.pos = pos_ambiguity_stats(net, it->second, kind, opts);
      report.senses = sense_ambiguity_stats(net, it->second, kind, opts);
      report.combined = combined_ambiguity(net, it->second, kind, opts);
    }
    if (uncovered) {
      std::vector<std::string> all_types;
      for (const auto& [k, t] : types)
        all_types.insert(all_types.end(), t.begin(), t.end());
      AffixTable affixes = build_affix_table(all_types);
      std::map<UncoveredClass, long long> counts;
      for (const auto& type : it->second)
        if (net.lookup(type, opts).empty())
          ++counts[classify_uncovered(net, affixes, gazetteer, type)];
      report.uncovered = counts;
    }
    reports.push_back(std::move(report));
  }

  if (cfg.format == "table") {
    std::cout << render_table(reports);
  } else {
    json j = json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_tag(const RunConfig& cfg, const std::string& input) {
  LexNet net = load_lexnet(cfg.lexicon);
  std::string txt = read_file(input);
  FieldProfile profile;
  bool have_profile = false;
  if (!cfg.profile.empty()) {
    profile = load_profile(cfg.profile);
    have_profile = true;
  }
  SemtagConfig tag_cfg;
  tag_cfg.hypernym_depth = cfg.hypernym_depth;
  try {
    auto tokens = parse_tagged(txt);
    std::cout << tag_semantic(net, tokens, have_profile ? &profile : nullptr,
                              SectionKind::Other, tag_cfg)
              << "\n";
    return 0;
  } catch (const TaggedFormatError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_np(const RunConfig& cfg, const std::string& phrase,
           std::size_t max_depth) {
  LexNet net = load_lexnet(cfg.lexicon);
  try {
    auto relations = parse_np(net, split_words(phrase));
    json j = json::array();
    for (auto& edge : relations)
      j.push_back(to_json(refine_gen_attribute(net, edge, max_depth)));
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const NPGrammarError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_frames(const RunConfig& cfg, const std::string& clause_file,
               const std::string& learn_verb, const std::string& learn_frame) {
  LexNet net = load_lexnet(cfg.lexicon);
  std::vector<Clause> clauses;
  try {
    clauses = load_clauses(clause_file);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (!learn_verb.empty()) {
    std::vector<VerbFrame> frames = frames_for_verb(net, learn_verb);
    const VerbFrame* target = nullptr;
    for (const auto& f : frames)
      if (f.code == learn_frame) target = &f;
    if (!target) {
      std::cerr << "verb " << learn_verb << " has no frame " << learn_frame << "\n";
      return 2;
    }
    json j = json::array();
    for (const auto& cand :
         learn_frame_enrichment(net, clauses, learn_verb, *target))
      j.push_back({{"slot", cand.slot},
                   {"prep", cand.prep},
                   {"head", cand.head},
                   {"classes", cand.hypernym_classes},
                   {"freq", cand.frequency}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  json out = json::array();
  for (const auto& clause : clauses) {
    try {
      std::vector<VerbFrame> frames = frames_for_verb(net, clause.verb);
      MatchResult result = match_frame(net, clause, frames);
      json j = to_json(result, clause);
      j["verb"] = clause.verb;
      if (result.kind == MatchResult::Kind::Match) {
        const VerbFrame* frame = nullptr;
        for (const auto& f : frames)
          if (f.code == result.assignments.front().frame_code) frame = &f;
        j["number_constraint"] =
            check_number_constraint(clause, *frame, result.assignments.front()) ==
                    NumberCheck::Ok
                ? "ok"
                : "violation";
      }
      out.push_back(std::move(j));
    } catch (const UnknownVerb& e) {
      out.push_back({{"verb", clause.verb}, {"error", e.what()}});
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_split(const RunConfig& cfg, const std::string& corpus_dir,
              const std::string& word, const std::string& rules_path,
              const CompoundScoring& scoring, std::size_t min_part) {
  LexNet net = load_lexnet(cfg.lexicon);
  std::vector<Document> docs;
  try {
    docs = load_corpus_dir(corpus_dir, cfg.jobs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::vector<std::string> all_types;
  for (const auto& doc : docs)
    for (const auto& [kind, tokens] : doc.sections)
      for (const auto& type : word_types(tokens)) all_types.push_back(type);
  AffixTable affixes = build_affix_table(all_types);
  std::vector<CompatRule> rules =
      rules_path.empty() ? std::vector<CompatRule>{} : load_compat_rules(rules_path);

  auto cands = split_candidates(net, word, min_part);
  auto best = rank_splits(cands, affixes, rules, net, scoring);
  std::cout << split_result_json(word, best).dump(2) << "\n";
  return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& input) {
  LexNet net = load_lexnet(cfg.lexicon);
  SectionProfileSpec spec = cfg.section_spec.empty()
                                ? default_section_spec()
                                : load_section_spec(cfg.section_spec);
  std::string txt;
  try {
    txt = read_file(input);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  Document doc = parse_raw(txt, input);
  std::vector<Token> tokens;
  for (const auto& [kind, toks] : doc.sections)
    tokens.insert(tokens.end(), toks.begin(), toks.end());
  SectionScores result = classify_section(net, tokens, spec, lookup_opts(cfg));
  json scores = json::object();
  for (const auto& [kind, score] : result.scores)
    scores[to_string(kind)] = score;
  json j = {{"kind", result.kind ? to_string(*result.kind) : "Unknown"},
            {"scores", scores}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_profile(const RunConfig& cfg, const std::string& corpus_dir,
                const std::string& output) {
  LexNet net = load_lexnet(cfg.lexicon);
  std::vector<Document> docs;
  try {
    docs = load_corpus_dir(corpus_dir, cfg.jobs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  FieldProfile profile = learn_profile(net, docs, lookup_opts(cfg));
  if (output.empty() || output == "-") {
    json j = json::object();
    for (const auto& [kind, fields] : profile.weights) {
      json obj = json::object();
      for (const auto& [field, w] : fields) obj[field] = w;
      j[to_string(kind)] = obj;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    save_profile(profile, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexical-semantic net analysis toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--lexicon", cfg.lexicon, "LSN-TSV lexicon file");
  app.add_option("--stoplist", cfg.stoplist, "stoplist file (one word per line)");
  app.add_option("--gazetteer", cfg.gazetteer, "gazetteer file for named entities");
  app.add_option("--profile", cfg.profile, "semantic-field profile (JSON)");
  app.add_option("--spec", cfg.section_spec, "section profile spec (JSON)");
  app.add_flag("--morph,!--no-morph", cfg.morph, "inflection-aware lookup");
  app.add_flag("--umlauts,!--no-umlauts", cfg.umlauts,
               "umlaut de-expansion in lookup (default on)");
  app.add_option("--depth", cfg.hypernym_depth, "hypernym depth for tagging");
  app.add_option("--format", cfg.format, "output format: json|table");
  app.add_option("--jobs", cfg.jobs, "parallel document workers");

  auto* check = app.add_subcommand("check", "validate a lexicon file");

  std::string corpus_dir;
  bool by_class = false, with_ambiguity = false, with_uncovered = false;
  auto* coverage = app.add_subcommand("coverage", "corpus coverage report");
  coverage->add_option("corpus", corpus_dir, "corpus directory")->required();
  coverage->add_flag("--by-class", by_class, "per word class breakdown");
  coverage->add_flag("--ambiguity", with_ambiguity, "POS/sense ambiguity stats");
  coverage->add_flag("--uncovered", with_uncovered, "classify uncovered types");

  std::string amb_corpus_dir;
  auto* ambiguity = app.add_subcommand("ambiguity", "ambiguity statistics");
  ambiguity->add_option("corpus", amb_corpus_dir, "corpus directory")->required();

  std::string tag_input;
  auto* tag = app.add_subcommand("tag", "semantic tagging of POS-tagged input");
  tag->add_option("input", tag_input, "tagged input file")->required();

  std::string np_phrase;
  std::size_t np_depth = 1;
  auto* np = app.add_subcommand("np", "noun phrase relations");
  np->add_option("phrase", np_phrase, "noun phrase")->required();
  np->add_option("--max-depth", np_depth, "holonym search depth");

  std::string clause_file, learn_verb, learn_frame;
  auto* frames = app.add_subcommand("frames", "verb frame matching");
  frames->add_option("clauses", clause_file, "clause file (JSON lines)")->required();
  frames->add_option("--learn", learn_verb, "learn enrichment for this verb");
  frames->add_option("--frame", learn_frame, "frame code for --learn");

  std::string split_dir, split_word, rules_path;
  CompoundScoring scoring;
  std::size_t min_part = 4;
  auto* split = app.add_subcommand("split", "compound segmentation");
  split->add_option("corpus", split_dir, "corpus directory")->required();
  split->add_option("word", split_word, "word to segment")->required();
  split->add_option("--rules", rules_path, "compatibility rules file");
  split->add_option("--bonus", scoring.compat_bonus, "compatibility bonus");
  split->add_option("--penalty", scoring.part_penalty, "per-extra-part penalty");
  split->add_option("--threshold", scoring.threshold, "acceptance threshold");
  split->add_option("--min-part", min_part, "minimum part length");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify-section",
                                      "recognize the section of a text");
  classify->add_option("input", classify_input, "text file")->required();

  std::string profile_dir, profile_out;
  auto* profile = app.add_subcommand("profile", "learn a semantic-field profile");
  profile->add_option("corpus", profile_dir, "corpus directory")->required();
  profile->add_option("-o,--output", profile_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (cfg.lexicon.empty()) {
      std::cerr << "--lexicon is required\n";
      return 2;
    }
    if (check->parsed()) return cmd_check(cfg);
    if (coverage->parsed())
      return cmd_coverage(cfg, corpus_dir, by_class, with_ambiguity,
                          with_uncovered);
    if (ambiguity->parsed())
      return cmd_coverage(cfg, amb_corpus_dir, true, true, false);
    if (tag->parsed()) return cmd_tag(cfg, tag_input);
    if (np->parsed()) return cmd_np(cfg, np_phrase, np_depth);
    if (frames->parsed()) return cmd_frames(cfg, clause_file, learn_verb, learn_frame);
    if (split->parsed())
      return cmd_split(cfg, split_dir, split_word, rules_path, scoring, min_part);
    if (classify->parsed()) return cmd_classify(cfg, classify_input);
    if (profile->parsed()) return cmd_profile(cfg, profile_dir, profile_out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const CycleDetected& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const DanglingReference& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const DuplicateSynsetId& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
