#include "mapcheck/Corpus.hpp"

#include <stdexcept>

#include "mapcheck/Parser.hpp"

namespace mapcheck {

namespace {

struct RawEntry {
  const char* file;
  const char* text;
};

const RawEntry kRawCorpus[] = {
#include "CorpusData.inc"
};

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const RawEntry& raw : kRawCorpus) {
      CorpusEntry entry;
      entry.file = raw.file;
      entry.text = raw.text;
      try {
        entry.test = parseLitmus(entry.text);
      } catch (const ParseError& e) {
        throw std::logic_error(std::string("bundled corpus file ") + raw.file +
                               " is invalid: " + e.what());
      }
      out.push_back(std::move(entry));
    }
    return out;
  }();
  return entries;
}

const CorpusEntry& corpusEntry(const std::string& name) {
  for (const CorpusEntry& entry : corpus())
    if (testName(entry.test) == name) return entry;
  throw std::out_of_range("no corpus test named '" + name + "'");
}

}  // namespace mapcheck
