#include "glcp/independence.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "glcp/errors.h"

namespace glcp {
namespace {

using Mask = std::uint64_t;

Mask bit(int k) { return Mask{1} << k; }

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nbr(g.num_vertices());
  for (Vertex v = 1; v <= g.num_vertices(); ++v) nbr[v - 1] = g.neighbor_mask(v);
  return nbr;
}

std::vector<Mask> complement_masks(const Graph& g) {
  const int n = g.num_vertices();
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  std::vector<Mask> nbr = neighbor_masks(g);
  for (int k = 0; k < n; ++k) nbr[k] = all & ~nbr[k] & ~bit(k);
  return nbr;
}

// Lexicographic comparison of the sorted label sequences encoded by masks.
bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = __builtin_ctzll(a);
    const int lb = __builtin_ctzll(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Enumerates all maximum independent sets. Branches on the lowest candidate
// vertex, include-first, so witnesses arrive in lexicographic order.
class AllMaximumSearch {
 public:
  explicit AllMaximumSearch(std::vector<Mask> nbr) : nbr_(std::move(nbr)) {}

  void run(Mask chosen, int size, Mask candidates) {
    if (size + __builtin_popcountll(candidates) < best_) return;
    if (candidates == 0) {
      if (size > best_) {
        best_ = size;
        found_.clear();
      }
      found_.push_back(chosen);
      return;
    }
    const int v = __builtin_ctzll(candidates);
    run(chosen | bit(v), size + 1, candidates & ~nbr_[v] & ~bit(v));
    // Without a neighbor among the candidates, dropping v can only lose.
    if (candidates & nbr_[v]) run(chosen, size, candidates & ~bit(v));
  }

  int best() const { return best_; }
  const std::vector<Mask>& found() const { return found_; }

 private:
  std::vector<Mask> nbr_;
  int best_ = 0;
  std::vector<Mask> found_;
};

class WeightedSearch {
 public:
  WeightedSearch(std::vector<Mask> nbr, std::span<const double> w)
      : nbr_(std::move(nbr)), w_(w.begin(), w.end()) {
    double total = 0.0;
    for (double x : w_) total += x;
    eps_ = 1e-12 * std::max(1.0, total);
  }

  void run(Mask chosen, double value, Mask candidates) {
    double bound = value;
    for (Mask c = candidates; c; c &= c - 1) bound += w_[__builtin_ctzll(c)];
    if (bound < best_ - eps_) return;
    if (candidates == 0) {
      consider(chosen, value);
      return;
    }
    const int v = __builtin_ctzll(candidates);
    run(chosen | bit(v), value + w_[v], candidates & ~nbr_[v] & ~bit(v));
    if ((candidates & nbr_[v]) || w_[v] <= 0.0) {
      run(chosen, value, candidates & ~bit(v));
    }
  }

  double best() const { return best_; }
  Mask best_set() const { return best_set_; }

 private:
  void consider(Mask chosen, double value) {
    if (value > best_ + eps_) {
      best_ = value;
      best_set_ = chosen;
    } else if (value >= best_ - eps_ && lex_less(chosen, best_set_)) {
      best_ = std::max(best_, value);
      best_set_ = chosen;
    }
  }

  std::vector<Mask> nbr_;
  std::vector<double> w_;
  double eps_ = 0.0;
  double best_ = -1.0;
  Mask best_set_ = 0;
};

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.num_vertices() > cap || g.num_vertices() > 64) {
    throw CapExceeded(what, g.num_vertices(), std::min(cap, 64));
  }
}

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

}  // namespace

MaximumIndependentSets alpha(const Graph& g, int cap) {
  check_cap(g, cap, "alpha");
  AllMaximumSearch search(neighbor_masks(g));
  search.run(0, 0, all_vertices(g.num_vertices()));
  MaximumIndependentSets out;
  out.size = search.best();
  for (Mask m : search.found()) out.witnesses.push_back(VertexSet::FromMask(m));
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

WeightedIndependentSet weighted_alpha(const Graph& g,
                                      std::span<const double> weights,
                                      int cap) {
  check_cap(g, cap, "weighted_alpha");
  if (static_cast<int>(weights.size()) != g.num_vertices()) {
    throw std::invalid_argument("weight vector has " +
                                std::to_string(weights.size()) +
                                " entries, graph has " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
  }
  WeightedSearch search(neighbor_masks(g), weights);
  search.run(0, 0.0, all_vertices(g.num_vertices()));
  WeightedIndependentSet out;
  out.witness = VertexSet::FromMask(search.best_set());
  double value = 0.0;
  for (Vertex v : out.witness) value += weights[v - 1];
  out.value = value;
  return out;
}

int omega(const Graph& g, int cap) {
  check_cap(g, cap, "omega");
  AllMaximumSearch search(complement_masks(g));
  search.run(0, 0, all_vertices(g.num_vertices()));
  return search.best();
}

VertexSet first_maximum_independent_set(const Graph& g, int cap) {
  return alpha(g, cap).witnesses.front();
}

std::optional<VertexSet> unique_maximum_independent_set(const Graph& g,
                                                        int cap) {
  auto result = alpha(g, cap);
  if (result.witnesses.size() != 1) return std::nullopt;
  return result.witnesses.front();
}

bool has_unique_maximum_independent_set(const Graph& g, int cap) {
  return unique_maximum_independent_set(g, cap).has_value();
}

}  // namespace glcp
