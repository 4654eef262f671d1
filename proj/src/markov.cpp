#include "ipd/markov.hpp"

#include <algorithm>
#include <cassert>

namespace ipd {

namespace {

constexpr Real kEdgeThreshold = 1e-15;

// Tarjan strongly-connected components; n is at most 16 here.
struct Tarjan {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit Tarjan(const std::vector<std::vector<int>>& a)
      : adj(a), index(a.size(), -1), lowlink(a.size(), 0),
        on_stack(a.size(), false) {}

  void run() {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if (index[v] < 0) strongconnect(v);
  }

  void strongconnect(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  }
};

}  // namespace

ChainDecomposition decompose_chain(const MatrixX& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) > kEdgeThreshold) adj[i].push_back(j);

  Tarjan t(adj);
  t.run();

  ChainDecomposition dec;
  dec.is_recurrent.assign(n, false);
  for (const auto& comp : t.components) {
    // A component is recurrent iff no edge leaves it.
    bool closed = true;
    for (int v : comp) {
      for (int w : adj[v]) {
        if (!std::binary_search(comp.begin(), comp.end(), w)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) {
      for (int v : comp) dec.is_recurrent[v] = true;
      dec.recurrent_classes.push_back(comp);
    }
  }
  std::sort(dec.recurrent_classes.begin(), dec.recurrent_classes.end());
  return dec;
}

VectorX class_stationary(const MatrixX& m, const std::vector<int>& cls) {
  const int k = static_cast<int>(cls.size());
  VectorX full = VectorX::Zero(m.rows());
  if (k == 1) {
    full[cls[0]] = 1;
    return full;
  }
  // Solve pi (M_C - I) = 0 with sum(pi) = 1: transpose system with the last
  // equation replaced by the normalization row.
  MatrixX a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      a(i, j) = m(cls[j], cls[i]) - (i == j ? Real(1) : Real(0));
  VectorX b = VectorX::Zero(k);
  for (int j = 0; j < k; ++j) a(k - 1, j) = 1;
  b[k - 1] = 1;
  VectorX pi = a.partialPivLu().solve(b);
  for (int i = 0; i < k; ++i) full[cls[i]] = pi[i];
  return full;
}

std::vector<Real> absorption_probabilities(const MatrixX& m,
                                           const ChainDecomposition& dec,
                                           const VectorX& v0) {
  const int n = static_cast<int>(m.rows());
  const int nc = static_cast<int>(dec.recurrent_classes.size());
  std::vector<int> class_of(n, -1);
  for (int c = 0; c < nc; ++c)
    for (int v : dec.recurrent_classes[c]) class_of[v] = c;

  std::vector<int> transient;
  for (int i = 0; i < n; ++i)
    if (!dec.is_recurrent[i]) transient.push_back(i);

  std::vector<Real> prob(nc, 0);
  for (int i = 0; i < n; ++i)
    if (class_of[i] >= 0) prob[class_of[i]] += v0[i];

  if (transient.empty()) return prob;

  const int t = static_cast<int>(transient.size());
  MatrixX a(t, t);          // I - M_TT
  MatrixX r(t, nc);         // one-step mass into each class
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j)
      a(i, j) = (i == j ? Real(1) : Real(0)) - m(transient[i], transient[j]);
    for (int c = 0; c < nc; ++c) r(i, c) = 0;
    for (int j = 0; j < n; ++j)
      if (class_of[j] >= 0) r(i, class_of[j]) += m(transient[i], j);
  }
  MatrixX h = a.partialPivLu().solve(r);  // h(i,c) = P[absorb in c | start i]
  for (int i = 0; i < t; ++i)
    for (int c = 0; c < nc; ++c) prob[c] += v0[transient[i]] * h(i, c);
  return prob;
}

}  // namespace ipd
