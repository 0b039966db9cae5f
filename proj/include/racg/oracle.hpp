#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/presentation.hpp"
#include "racg/words.hpp"

// Brute-force ground truth.  Element identity comes from the integer Tits
// reflection representation and distances from plain BFS layering, so this
// code path shares no geodesic logic with the words module it validates.
namespace racg::oracle {

struct BallCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Matrix = std::vector<std::int64_t>;  // N x N, row major

Matrix generator_matrix(const PresentationGraph& g, Gen s);
Matrix matrix_of_word(const PresentationGraph& g, const Word& w);

// All elements of W of length <= radius, BFS layered.  Canonical words are
// the lexicographically first geodesic words, discovered in BFS order.
class CayleyBall {
 public:
  CayleyBall(const PresentationGraph& g, int radius,
             std::size_t element_cap = 5'000'000, bool keep_matrices = true);

  const PresentationGraph& graph() const { return graph_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(words_.size()); }

  const Word& canonical(int i) const { return words_[i]; }
  int layer(int i) const { return layers_[i]; }
  // neighbor index of element i under generator s, or -1 when outside the ball
  int neighbor(int i, Gen s) const { return adj_[i][s]; }

  int index_of(const Word& canonical_word) const;  // -1 when absent
  const std::vector<int>& layer_sizes() const { return layer_sizes_; }
  const Matrix& matrix(int i) const;

 private:
  PresentationGraph graph_;
  int radius_;
  std::vector<Word> words_;
  std::vector<int> layers_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> layer_sizes_;
  std::unordered_map<Word, int, WordHash> index_;
  std::vector<Matrix> mats_;  // empty when keep_matrices = false
};

CayleyBall ball(const PresentationGraph& g, int radius,
                std::size_t element_cap = 5'000'000, bool keep_matrices = true);

// BFS layer of the element of w; every prefix must stay inside the ball.
int oracle_distance(const CayleyBall& b, const Word& w);

struct BallEdge {
  int from;   // lower-layer endpoint index
  Gen label;  // neighbor(from, label) is the other endpoint
  bool operator==(const BallEdge& o) const {
    return from == o.from && label == o.label;
  }
};

// All ball edges fixed setwise by base * label * base^-1 (the definitional
// wall condition), base given by its canonical word.
std::vector<BallEdge> oracle_wall(const CayleyBall& b, const Word& base,
                                  Gen label);

struct LemmaReport {
  std::string lemma;
  long long instances = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  unsigned seed = 0;
  std::string to_text(const PresentationGraph& g) const;
  std::string to_json() const;
};

struct VerifyBounds {
  int radius = 4;
  int max_word_len = 6;
  long long sample_limit = 2000;  // per-lemma cap on sampled instances
  unsigned seed = 12345;
  std::size_t element_cap = 5'000'000;
};

extern const std::vector<std::string> kLemmaIds;

// lemma in {sameletters, deletion, finiteback, radel, differentletters,
// wallprops, shortback, diamond, doublediamond, backprops, twodir,
// avoidlink, filterprops}
LemmaReport verify_lemma(const PresentationGraph& g, const std::string& lemma,
                         const VerifyBounds& bounds);

}  // namespace racg::oracle
