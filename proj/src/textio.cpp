#include "cocseg/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cocseg/errors.hpp"

namespace cocseg {

Pos pos_from_string(const std::string& tag) {
  static const std::map<std::string, Pos> tags = {
      {"VERB", Pos::Verb}, {"NOUN", Pos::Noun},   {"PRON", Pos::Pron},
      {"DET", Pos::Det},   {"ADJ", Pos::Adj},     {"ADV", Pos::Adv},
      {"ADP", Pos::Adp},   {"PUNCT", Pos::Punct}, {"OTHER", Pos::Other}};
  auto it = tags.find(tag);
  if (it == tags.end()) throw InputError("unknown POS tag: '" + tag + "'");
  return it->second;
}

std::string pos_to_string(Pos pos) {
  switch (pos) {
    case Pos::Verb: return "VERB";
    case Pos::Noun: return "NOUN";
    case Pos::Pron: return "PRON";
    case Pos::Det: return "DET";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Adp: return "ADP";
    case Pos::Punct: return "PUNCT";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

const std::vector<AnnotatedToken>& AnnotatedCorpus::sentence(
    int index_1based) const {
  if (index_1based < 1 || index_1based > sentence_count())
    throw InputError("sentence index " + std::to_string(index_1based) +
                     " out of range [1, " + std::to_string(sentence_count()) +
                     "]");
  return sentences[index_1based - 1];
}

namespace {

std::string lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

AnnotatedCorpus parse_corpus(std::istream& in) {
  AnnotatedCorpus corpus;
  std::vector<AnnotatedToken> sentence;
  std::string line;
  int line_number = 0;
  auto flush = [&] {
    if (!sentence.empty()) {
      corpus.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError("expected 3 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_number);
    if (fields[1].empty()) throw ParseError("empty lemma", line_number);
    Pos pos;
    try {
      pos = pos_from_string(fields[2]);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line_number);
    }
    sentence.push_back({fields[0], lowercased(fields[1]), pos});
  }
  flush();
  if (corpus.sentences.empty())
    throw ParseError("empty corpus: no annotated tokens", line_number);
  return corpus;
}

AnnotatedCorpus parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return parse_corpus(in);
}

AnnotatedCorpus parse_corpus_text(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

std::vector<VerbNounPair> extract_pairs(const AnnotatedCorpus& corpus,
                                        int window) {
  if (window < 1) throw InputError("window must be >= 1");
  std::vector<VerbNounPair> pairs;
  for (int s = 0; s < corpus.sentence_count(); ++s) {
    const auto& tokens = corpus.sentences[s];
    const int size = static_cast<int>(tokens.size());
    for (int v = 0; v < size; ++v) {
      if (tokens[v].pos != Pos::Verb) continue;
      std::string last_noun;
      bool in_run = false;
      for (int offset = 1; offset <= window && v + offset < size; ++offset) {
        const AnnotatedToken& token = tokens[v + offset];
        if (token.pos == Pos::Noun) {
          in_run = true;
          last_noun = token.lemma;
          continue;
        }
        if (in_run) break;  // the noun run ends at the first non-noun token
        if (token.pos == Pos::Verb || token.pos == Pos::Adp ||
            token.pos == Pos::Punct)
          break;
        // PRON/DET/ADJ/ADV/OTHER are skipped while looking for the run.
      }
      if (in_run) pairs.push_back({tokens[v].lemma, last_noun, s + 1});
    }
  }
  return pairs;
}

FrequentTerms filter_frequent(const std::vector<VerbNounPair>& pairs,
                              int min_freq) {
  if (min_freq < 1) throw InputError("min_freq must be >= 1");
  std::map<std::string, int> verb_count, noun_count;
  for (const auto& pair : pairs) {
    ++verb_count[pair.verb_lemma];
    ++noun_count[pair.noun_lemma];
  }
  FrequentTerms result;
  for (const auto& [verb, count] : verb_count)
    if (count >= min_freq) result.verbs.push_back(verb);
  for (const auto& [noun, count] : noun_count)
    if (count >= min_freq) result.nouns.push_back(noun);
  for (const auto& pair : pairs) {
    if (std::binary_search(result.verbs.begin(), result.verbs.end(),
                           pair.verb_lemma) &&
        std::binary_search(result.nouns.begin(), result.nouns.end(),
                           pair.noun_lemma))
      result.kept.push_back(pair);
  }
  return result;
}

FormalContext build_context(const std::vector<VerbNounPair>& kept_pairs,
                            const std::vector<std::string>& nouns,
                            const std::vector<std::string>& verbs) {
  std::vector<std::string> objects = nouns;
  std::vector<std::string> attributes = verbs;
  std::sort(objects.begin(), objects.end());
  std::sort(attributes.begin(), attributes.end());

  std::vector<std::vector<bool>> incidence(
      objects.size(), std::vector<bool>(attributes.size(), false));
  for (const auto& pair : kept_pairs) {
    auto obj = std::lower_bound(objects.begin(), objects.end(), pair.noun_lemma);
    auto attr =
        std::lower_bound(attributes.begin(), attributes.end(), pair.verb_lemma);
    if (obj == objects.end() || *obj != pair.noun_lemma)
      throw InputError("pair noun '" + pair.noun_lemma + "' not in object set");
    if (attr == attributes.end() || *attr != pair.verb_lemma)
      throw InputError("pair verb '" + pair.verb_lemma +
                       "' not in attribute set");
    incidence[obj - objects.begin()][attr - attributes.begin()] = true;
  }
  return FormalContext::create(std::move(objects), std::move(attributes),
                               std::move(incidence));
}

void write_pairs_tsv(const std::vector<VerbNounPair>& pairs, std::ostream& out) {
  for (const auto& pair : pairs)
    out << pair.verb_lemma << '\t' << pair.noun_lemma << '\t'
        << pair.sentence_index << '\n';
}

void write_pairs_file(const std::vector<VerbNounPair>& pairs,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_pairs_tsv(pairs, out);
}

std::vector<VerbNounPair> read_pairs_tsv(std::istream& in) {
  std::vector<VerbNounPair> pairs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError("expected verb<TAB>noun<TAB>sentence_index", line_number);
    try {
      pairs.push_back({fields[0], fields[1], std::stoi(fields[2])});
    } catch (const std::exception&) {
      throw ParseError("bad sentence index: '" + fields[2] + "'", line_number);
    }
  }
  return pairs;
}

std::vector<VerbNounPair> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_pairs_tsv(in);
}

}  // namespace cocseg
