#ifndef IZETA_WALK_ORACLE_HPP
#define IZETA_WALK_ORACLE_HPP

#include "izeta/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace izeta {

/// One letter of a walk: the vertex (0 is the root) and whether it is a
/// generalized (bracketed) letter, i.e. a red step followed by a mute return.
struct Letter {
  int vertex = 0;
  bool generalized = false;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Closed walk of k generalized steps written as k + 1 letters.
///
/// The walker sits on the last ordinary letter.  An ordinary letter moves it
/// (blue step); a generalized letter draws a red edge from the current vertex
/// and returns.  Every step targets a vertex other than the current one, new
/// vertices appear in alphabet order, and the walker ends on the root.
struct Walk {
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()) - 1; }
  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

/// "v1 v2 [v3] v1" style text, vertices numbered from 1.
std::string to_string(const Walk& walk);
Walk parse_walk(std::string_view text);

struct DiagramEdge {
  int from = 0;
  int to = 0;
  bool red = false;
};

/// Skeleton edge {a, b} (a < b) with its blue and red multiplicities.
struct SkeletonEdge {
  int a = 0;
  int b = 0;
  int blue = 0;
  int red = 0;
  int ell() const { return blue / 2; }
};

struct Diagram {
  int vertex_count = 0;
  std::vector<DiagramEdge> edges;      // e_1..e_k in walk order
  std::vector<SkeletonEdge> skeleton;  // in order of first appearance
};

/// Chronological construction of the colored multigraph of a walk; throws
/// std::invalid_argument on a malformed walk.
Diagram diagram_of_walk(const Walk& walk);

/// Skeleton acyclic and every skeleton edge of even blue multiplicity.
bool is_tree_type(const Diagram& diagram);

/// Number of steps (blue or red) taken while the walker sits on the root.
int root_out_steps(const Walk& walk);

/// Valid walk whose diagram is tree-type.
bool is_tree_type_walk(const Walk& walk);

/// prod_e v^{2(ell + red)} / phi1^{ell + red - 1}; throws for non-tree-type diagrams.
template <typename Scalar>
Scalar weight(const Diagram& diagram, const Scalar& v, const Scalar& phi1) {
  if (!is_tree_type(diagram)) throw std::invalid_argument("weight is defined for tree-type diagrams only");
  Scalar total(1);
  const Scalar v2 = v * v;
  for (const auto& e : diagram.skeleton) {
    const int passages = e.ell() + e.red;
    total *= ipow(v2, passages) / ipow(phi1, passages - 1);
  }
  return total;
}

/// Enumeration limits: k <= 8 by default, k <= 10 when extended.
struct WalkBudget {
  bool extended = false;
  int max_length() const { return extended ? 10 : 8; }
};

/// Visits every tree-type walk of k steps in lexicographic order.
void for_each_tree_walk(int k, const std::function<void(const Walk&)>& visit, WalkBudget budget = {});

/// All tree-type walks of k steps in lexicographic order.
std::vector<Walk> enumerate_walks(int k, WalkBudget budget = {});

/// Tree-type walks of every length 1..k_max grouped by weight signature.
///
/// A tree-type walk with E skeleton edges and A = sum_e (ell + red) has weight
/// v^{2A} / phi1^{A - E}, so the census keeps one count per (k, r, A, E) and
/// evaluates oracle sums for any (v, phi1) without re-enumerating.
class WalkCensus {
 public:
  /// Subtrees below the first two steps are enumerated on up to `threads` threads.
  explicit WalkCensus(int k_max, WalkBudget budget = {}, unsigned threads = 1);

  int k_max() const { return k_max_; }

  /// Number of tree-type walks with k steps and r root steps.
  std::uint64_t walk_count(int k, int r) const;

  /// Sum of weights of walks with k steps and r steps out of the root.
  template <typename Scalar>
  Scalar theta(int k, int r, const Scalar& v, const Scalar& phi1) const {
    check_range(k);
    if (k == 0) return Scalar(r == 0 ? 1 : 0);
    Scalar total(0);
    const Scalar v2 = v * v;
    for (const auto& [key, count] : signatures_[k]) {
      const auto& [root_steps, passages, edges] = key;
      if (root_steps != r) continue;
      total += Scalar(static_cast<long long>(count)) * ipow(v2, passages) / ipow(phi1, passages - edges);
    }
    return total;
  }

  template <typename Scalar>
  Scalar moment(int k, const Scalar& v, const Scalar& phi1) const {
    if (k == 0) return Scalar(1);
    Scalar total(0);
    for (int r = 1; r <= k; ++r) total += theta(k, r, v, phi1);
    return total;
  }

  /// True when every enumerated walk satisfied sum_e (2 ell + red) = k with an even blue count.
  bool step_accounting_consistent() const { return accounting_ok_; }

 private:
  void check_range(int k) const;

  using Signature = std::tuple<int, int, int>;  // (root steps, passages, skeleton edges)
  int k_max_;
  std::vector<std::map<Signature, std::uint64_t>> signatures_;
  bool accounting_ok_ = true;
};

/// Sum over enumerated tree-type walks of k steps with r root steps.
double oracle_theta(int k, int r, double v, double phi1, WalkBudget budget = {});

}  // namespace izeta

#endif  // IZETA_WALK_ORACLE_HPP
