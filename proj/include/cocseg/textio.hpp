#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cocseg/fca.hpp"

namespace cocseg {

enum class Pos { Verb, Noun, Pron, Det, Adj, Adv, Adp, Punct, Other };

Pos pos_from_string(const std::string& tag);  // InputError on unknown tags
std::string pos_to_string(Pos pos);

struct AnnotatedToken {
  std::string surface;
  std::string lemma;  // lowercased
  Pos pos;
};

/// Sentences of annotated tokens; sentence indexing is 1-based throughout.
struct AnnotatedCorpus {
  std::vector<std::vector<AnnotatedToken>> sentences;

  int sentence_count() const { return static_cast<int>(sentences.size()); }
  const std::vector<AnnotatedToken>& sentence(int index_1based) const;
};

/// Parse the annotated-corpus interchange format: UTF-8 TSV with one
/// `surface<TAB>lemma<TAB>pos` token per line, blank lines between sentences
/// and '#' comment lines. Lemmas are lowercased. ParseError (with the line
/// number) on malformed lines; an input without any token is also an error.
AnnotatedCorpus parse_corpus(std::istream& in);
AnnotatedCorpus parse_corpus_file(const std::string& path);
AnnotatedCorpus parse_corpus_text(const std::string& text);

struct VerbNounPair {
  std::string verb_lemma;
  std::string noun_lemma;
  int sentence_index;  // 1-based

  friend bool operator==(const VerbNounPair&, const VerbNounPair&) = default;
};

/// Verb/direct-object candidates: after each VERB, scan up to `window`
/// tokens; a run of NOUN tokens found before any VERB, ADP or PUNCT yields
/// one pair with the run's last noun. PRON/DET/ADJ/ADV/OTHER tokens before
/// the run are skipped; the run itself ends at the first non-NOUN token.
std::vector<VerbNounPair> extract_pairs(const AnnotatedCorpus& corpus,
                                        int window = 5);

struct FrequentTerms {
  std::vector<std::string> verbs;  // sorted: attribute set M
  std::vector<std::string> nouns;  // sorted: object set G
  std::vector<VerbNounPair> kept;  // pairs with both terms frequent
};

/// Keep verbs and nouns whose pair occurrence count (token occurrences, not
/// distinct sentences) reaches min_freq, and the pairs made of kept terms.
FrequentTerms filter_frequent(const std::vector<VerbNounPair>& pairs,
                              int min_freq = 2);

/// Formal context with the nouns as objects, verbs as attributes (each
/// sorted) and (noun, verb) incident iff some kept pair (verb, noun) exists.
FormalContext build_context(const std::vector<VerbNounPair>& kept_pairs,
                            const std::vector<std::string>& nouns,
                            const std::vector<std::string>& verbs);

void write_pairs_tsv(const std::vector<VerbNounPair>& pairs, std::ostream& out);
void write_pairs_file(const std::vector<VerbNounPair>& pairs,
                      const std::string& path);
std::vector<VerbNounPair> read_pairs_tsv(std::istream& in);
std::vector<VerbNounPair> read_pairs_file(const std::string& path);

}  // namespace cocseg
