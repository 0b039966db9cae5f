#pragma once

#include <string>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

// Ordered sequence of generator indices.
using Word = std::vector<Gen>;

Word parse_word(const PresentationGraph& g, const std::string& text);
std::string word_to_string(const PresentationGraph& g, const Word& w);

GenSet lett(const Word& w);

// True iff no sequence of commutations and ss->1 deletions shortens w.
// Left-to-right scan: a letter kills the word iff its previous occurrence
// has only commuting letters in between; this scan is complete for right-angled groups.
bool is_geodesic(const PresentationGraph& g, const Word& w);

// ShortLex-canonical geodesic representative of an element of W.
// The canonical word is geodesic and lexicographically least (in declaration
// order) among all its rearrangements.
class GroupElement {
 public:
  GroupElement() = default;

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  bool operator==(const GroupElement& o) const { return word_ == o.word_; }
  bool operator!=(const GroupElement& o) const { return word_ != o.word_; }
  bool operator<(const GroupElement& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

  // Only normal_form / append may mint elements; the word is trusted canonical.
  static GroupElement from_canonical(Word w) { return GroupElement(std::move(w)); }

 private:
  explicit GroupElement(Word w) : word_(std::move(w)) {}
  Word word_;
};

GroupElement normal_form(const PresentationGraph& g, const Word& w);

// Normal form of e*s by the radel right-to-left scan; no full renormalization.
GroupElement append(const PresentationGraph& g, const GroupElement& e, Gen s);

GroupElement multiply(const PresentationGraph& g, const GroupElement& a,
                      const GroupElement& b);
GroupElement inverse(const PresentationGraph& g, const GroupElement& e);

// {s : |e*s| < |e|}; always a clique of Gamma.
GenSet back_set(const PresentationGraph& g, const GroupElement& e);
GenSet back_set_word(const PresentationGraph& g, const Word& geodesic);

// All geodesic representatives of e (up to cap), in lexicographic order.
std::vector<Word> geodesic_words(const PresentationGraph& g,
                                 const GroupElement& e, size_t cap);

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (Gen g : w) h = (h ^ static_cast<size_t>(g + 1)) * 1099511628211ull;
    return h;
  }
};
struct ElementHash {
  size_t operator()(const GroupElement& e) const { return WordHash{}(e.word()); }
};

}  // namespace racg
