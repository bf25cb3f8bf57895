#ifndef MAPCHECK_CORPUS_HPP
#define MAPCHECK_CORPUS_HPP

#include <string>
#include <vector>

#include "mapcheck/Litmus.hpp"

namespace mapcheck {

/// A bundled litmus test: the corpus/*.lit sources are embedded at build
/// time, parsed and validated on first access.
struct CorpusEntry {
  std::string file;  // basename under corpus/
  std::string text;
  LitmusTest test;
};

const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpusEntry(const std::string& name);  // by test name

}  // namespace mapcheck

#endif  // MAPCHECK_CORPUS_HPP
