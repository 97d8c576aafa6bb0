#ifndef LEXSEM_ERRORS_HPP
#define LEXSEM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexsem {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& reason)
      : Error("parse error at line " + std::to_string(line_) + ": " + reason),
        line(line_) {}
};

struct DuplicateSynsetId : Error {
  std::string id;
  explicit DuplicateSynsetId(std::string id_)
      : Error("duplicate synset id: " + id_), id(std::move(id_)) {}
};

struct DanglingReference : Error {
  std::string id;
  explicit DanglingReference(std::string id_)
      : Error("dangling reference: " + id_), id(std::move(id_)) {}
};

struct CycleDetected : Error {
  std::vector<std::string> cycle;
  explicit CycleDetected(std::vector<std::string> cycle_)
      : Error(describe(cycle_)), cycle(std::move(cycle_)) {}

  static std::string describe(const std::vector<std::string>& ids) {
    std::string msg = "cycle detected:";
    for (const auto& id : ids) msg += " " + id;
    return msg;
  }
};

struct UnknownSynset : Error {
  std::string id;
  explicit UnknownSynset(std::string id_)
      : Error("unknown synset: " + id_), id(std::move(id_)) {}
};

struct TaggedFormatError : Error {
  std::size_t offset;
  TaggedFormatError(std::size_t offset_, const std::string& reason)
      : Error("tagged input error at offset " + std::to_string(offset_) +
              ": " + reason),
        offset(offset_) {}
};

struct MalformedAnnotation : Error {
  using Error::Error;
};

struct NPGrammarError : Error {
  std::size_t position;
  NPGrammarError(std::size_t position_, const std::string& reason)
      : Error("noun phrase error at token " + std::to_string(position_) +
              ": " + reason),
        position(position_) {}
};

struct FrameCodeError : Error {
  std::string code;
  explicit FrameCodeError(std::string code_)
      : Error("bad verb frame code: " + code_), code(std::move(code_)) {}
};

struct UnknownVerb : Error {
  std::string verb;
  explicit UnknownVerb(std::string verb_)
      : Error("unknown verb: " + verb_), verb(std::move(verb_)) {}
};

struct EmptyCorpus : Error {
  EmptyCorpus() : Error("empty corpus") {}
};

}  // namespace lexsem

#endif
