#include "racg/oracle.hpp"

#include <algorithm>

namespace racg::oracle {

Matrix generator_matrix(const PresentationGraph& g, Gen s) {
  const int n = g.size();
  Matrix m(n * n, 0);
  for (int t = 0; t < n; ++t) {
    m[t * n + t] = 1;
    // sigma_s(e_t) = e_t - 2B(e_s,e_t) e_s with B = 1, 0, -1 for m = 1, 2, inf
    if (t == s)
      m[s * n + s] = -1;
    else if (!g.commutes(s, t))
      m[s * n + t] = 2;
  }
  return m;
}

namespace {

Matrix mat_mul(const Matrix& a, const Matrix& b, int n) {
  Matrix c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

struct MatrixHash {
  size_t operator()(const Matrix& m) const {
    size_t h = 1469598103934665603ull;
    for (auto v : m) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Matrix matrix_of_word(const PresentationGraph& g, const Word& w) {
  const int n = g.size();
  Matrix m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  for (Gen s : w) m = mat_mul(m, generator_matrix(g, s), n);
  return m;
}

CayleyBall::CayleyBall(const PresentationGraph& g, int radius,
                       std::size_t element_cap, bool keep_matrices)
    : graph_(g), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const int n = g.size();
  std::vector<Matrix> gens(n);
  for (int s = 0; s < n; ++s) gens[s] = generator_matrix(g, s);

  std::vector<Matrix> mats;
  std::unordered_map<Matrix, int, MatrixHash> seen;
  Matrix id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;

  words_.push_back({});
  layers_.push_back(0);
  adj_.push_back(std::vector<int>(n, -1));
  mats.push_back(id);
  seen.emplace(id, 0);
  layer_sizes_.push_back(1);

  int layer_begin = 0, layer_end = 1;
  for (int k = 0; k < radius; ++k) {
    for (int i = layer_begin; i < layer_end; ++i) {
      for (int s = 0; s < n; ++s) {
        if (adj_[i][s] != -1) continue;
        Matrix m = mat_mul(mats[i], gens[s], n);
        auto it = seen.find(m);
        if (it != seen.end()) {
          adj_[i][s] = it->second;
          adj_[it->second][s] = i;
        } else {
          if (words_.size() >= element_cap)
            throw BallCapExceeded("element cap exceeded at " +
                                  std::to_string(words_.size()));
          int j = static_cast<int>(words_.size());
          Word w = words_[i];
          w.push_back(s);
          words_.push_back(std::move(w));
          layers_.push_back(k + 1);
          adj_.push_back(std::vector<int>(n, -1));
          adj_[i][s] = j;
          adj_[j][s] = i;
          seen.emplace(m, j);
          mats.push_back(std::move(m));
        }
      }
    }
    layer_begin = layer_end;
    layer_end = static_cast<int>(words_.size());
    layer_sizes_.push_back(layer_end - layer_begin);
  }
  // edges between elements already present (last layer siblings at k+-1
  // were linked above; remaining last-layer pairs need one more sweep)
  for (int i = layer_begin; i < layer_end; ++i) {
    for (int s = 0; s < n; ++s) {
      if (adj_[i][s] != -1) continue;
      Matrix m = mat_mul(mats[i], gens[s], n);
      auto it = seen.find(m);
      if (it != seen.end()) {
        adj_[i][s] = it->second;
        adj_[it->second][s] = i;
      }
    }
  }
  for (int i = 0; i < size(); ++i) index_.emplace(words_[i], i);
  if (keep_matrices) mats_ = std::move(mats);
}

CayleyBall ball(const PresentationGraph& g, int radius, std::size_t element_cap,
                bool keep_matrices) {
  return CayleyBall(g, radius, element_cap, keep_matrices);
}

int CayleyBall::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

const Matrix& CayleyBall::matrix(int i) const {
  if (mats_.empty())
    throw std::logic_error("ball was built without matrices");
  return mats_[i];
}

int oracle_distance(const CayleyBall& b, const Word& w) {
  int cur = 0;
  for (Gen s : w) {
    if (s < 0 || s >= b.graph().size())
      throw std::invalid_argument("invalid generator index");
    cur = b.neighbor(cur, s);
    if (cur < 0) throw std::out_of_range("word leaves the ball");
  }
  return b.layer(cur);
}

std::vector<BallEdge> oracle_wall(const CayleyBall& b, const Word& base,
                                  Gen label) {
  const int n = b.graph().size();
  // reflection = base * label * base^-1 (generators are involutions)
  Word refl_word = base;
  refl_word.push_back(label);
  refl_word.insert(refl_word.end(), base.rbegin(), base.rend());
  Matrix r = matrix_of_word(b.graph(), refl_word);

  // base vertex must be inside the ball
  {
    int cur = 0;
    for (Gen s : base) {
      cur = b.neighbor(cur, s);
      if (cur < 0) throw std::out_of_range("edge base outside the ball");
    }
  }

  std::vector<BallEdge> out;
  for (int u = 0; u < b.size(); ++u) {
    Matrix ru = mat_mul(r, b.matrix(u), n);
    for (Gen s = 0; s < n; ++s) {
      int v = b.neighbor(u, s);
      if (v < 0 || b.layer(v) < b.layer(u)) continue;  // canonical orientation
      if (ru == b.matrix(v)) out.push_back({u, s});
    }
  }
  return out;
}

}  // namespace racg::oracle
