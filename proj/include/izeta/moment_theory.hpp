#ifndef IZETA_MOMENT_THEORY_HPP
#define IZETA_MOMENT_THEORY_HPP

#include "izeta/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace izeta {

// ---------------------------------------------------------------------------
// Generalized binomial coefficient

/// Ordinary C(a, b) for a >= b >= 0; 1 for b == 0 (this covers a == -1);
/// 0 for a == b - 1 with b > 0.  Any other pair with a >= -1 is 0 and is
/// reported as out of domain by star_binomial_in_domain.
long long star_binomial(int a, int b);

/// True when (a, b) falls in one of the three defined cases above.
bool star_binomial_in_domain(int a, int b);

using StarBinomialFn = long long (*)(int, int);

struct RecurrenceOptions {
  /// Replaceable for mutation testing only.
  StarBinomialFn star = &star_binomial;
};

/// Triangular table t[k][r], 0 <= r <= k <= k_max.
template <typename Scalar>
using Triangle = std::vector<std::vector<Scalar>>;

namespace detail {

template <typename Scalar>
Triangle<Scalar> make_triangle(int k_max) {
  Triangle<Scalar> t(static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) t[k].assign(static_cast<std::size_t>(k + 1), Scalar(0));
  return t;
}

inline long long binomial(int a, int b) { return star_binomial(a, b); }

// v^{2e} / phi1^{e-1}: the weight of one skeleton edge carrying e passages.
template <typename Scalar>
class EdgeWeights {
 public:
  EdgeWeights(const Scalar& v, const Scalar& phi1, int max_exponent) {
    const Scalar v2 = v * v;
    weights_.reserve(static_cast<std::size_t>(max_exponent + 1));
    for (int e = 0; e <= max_exponent; ++e) weights_.push_back(ipow(v2, e) / ipow(phi1, e - 1));
  }
  const Scalar& operator()(int exponent) const { return weights_.at(static_cast<std::size_t>(exponent)); }

 private:
  std::vector<Scalar> weights_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Theta(k, r): total weight of tree-type walks of k steps with r steps out of the root

/// Theta(k, r) from the closed five-fold recurrence, memoized for k <= k_max.
template <typename Scalar>
class ThetaTable {
 public:
  ThetaTable(Scalar v, Scalar phi1, int k_max, RecurrenceOptions options = {})
      : v_(v), phi1_(phi1), k_max_(k_max), options_(options), table_(detail::make_triangle<Scalar>(k_max)) {
    if (!(phi1 > Scalar(0))) throw std::invalid_argument("phi1 must be positive");
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    build();
  }

  const Scalar& operator()(int k, int r) const {
    if (k < 0 || k > k_max_) throw std::out_of_range("k outside the memoized range");
    if (r < 0 || r > k) throw std::invalid_argument("theta needs 0 <= r <= k");
    return table_[k][r];
  }

  /// m_k = sum_{r=1}^{k} Theta(k, r); m_0 = 1.
  Scalar moment(int k) const {
    if (k == 0) return Scalar(1);
    Scalar sum(0);
    for (int r = 1; r <= k; ++r) sum += (*this)(k, r);
    return sum;
  }

  int k_max() const { return k_max_; }
  const Scalar& v() const { return v_; }
  const Scalar& phi1() const { return phi1_; }
  const Triangle<Scalar>& triangle() const { return table_; }
  /// Number of generalized-binomial evaluations outside the defined cases.
  std::size_t out_of_domain_star_calls() const { return out_of_domain_; }

 private:
  long long star(int a, int b) {
    if (!star_binomial_in_domain(a, b)) ++out_of_domain_;
    return options_.star(a, b);
  }

  void build() {
    table_[0][0] = Scalar(1);
    const detail::EdgeWeights<Scalar> weight(v_, phi1_, k_max_ + 1);
    for (int k = 1; k <= k_max_; ++k) {
      for (int r = 1; r <= k; ++r) {
        Scalar total(0);
        for (int g = 1; g <= r; ++g) {
          const long long choose_a = detail::binomial(r - 1, g - 1);
          for (int s = r - g; s <= k - g; ++s) {
            const Scalar& lower = table_[s][r - g];
            if (lower == Scalar(0)) continue;
            Scalar inner(0);
            for (int w = 0; w <= g; ++w) {
              const long long choose_w = detail::binomial(g, w);
              for (int h = 0; h <= k - s - g - w; ++h) {
                const long long star_h = star(w + h - 1, h);
                if (star_h == 0) continue;
                for (int t = 0; t <= k - s - g - w - h; ++t) {
                  const long long star_t = star(w + h + t - 1, t);
                  if (star_t == 0) continue;
                  const Scalar& upper = table_[k - s - g - w - h][t];
                  if (upper == Scalar(0)) continue;
                  inner += weight(g + h) * Scalar(choose_w * star_h * star_t) * upper;
                }
              }
            }
            total += Scalar(choose_a) * lower * inner;
          }
        }
        table_[k][r] = total;
      }
    }
  }

  Scalar v_;
  Scalar phi1_;
  int k_max_;
  RecurrenceOptions options_;
  Triangle<Scalar> table_;
  std::size_t out_of_domain_ = 0;
};

/// Theta rebuilt through the first-edge decomposition: Theta(k, r) as a
/// convolution of Upsilon(k - s, g) with Theta(s, r - g), where Upsilon
/// counts walks whose root has a single neighbour.  Independent of ThetaTable.
template <typename Scalar>
class DecompositionTable {
 public:
  DecompositionTable(Scalar v, Scalar phi1, int k_max, RecurrenceOptions options = {})
      : v_(v),
        phi1_(phi1),
        k_max_(k_max),
        options_(options),
        theta_(detail::make_triangle<Scalar>(k_max)),
        upsilon_(detail::make_triangle<Scalar>(k_max)) {
    if (!(phi1 > Scalar(0))) throw std::invalid_argument("phi1 must be positive");
    build();
  }

  const Scalar& theta(int k, int r) const {
    if (k < 0 || k > k_max_ || r < 0 || r > k) throw std::out_of_range("theta index out of range");
    return theta_[k][r];
  }

  /// Upsilon(ks, g) for 1 <= g <= ks.
  const Scalar& upsilon(int ks, int g) const {
    if (g < 1) throw std::invalid_argument("upsilon needs g >= 1");
    if (g > ks) throw std::invalid_argument("upsilon needs g <= ks");
    if (ks > k_max_) throw std::out_of_range("ks outside the memoized range");
    return upsilon_[ks][g];
  }

  int k_max() const { return k_max_; }
  std::size_t out_of_domain_star_calls() const { return out_of_domain_; }

 private:
  long long star(int a, int b) {
    if (!star_binomial_in_domain(a, b)) ++out_of_domain_;
    return options_.star(a, b);
  }

  Scalar compute_upsilon(int ks, int g, const detail::EdgeWeights<Scalar>& weight) {
    Scalar total(0);
    for (int w = 0; w <= g; ++w) {
      const long long choose_w = detail::binomial(g, w);
      for (int h = 0; h <= ks - g; ++h) {
        const long long star_h = star(w + h - 1, h);
        for (int t = 0; t <= ks - g - w - h; ++t) {
          const long long star_t = star(w + h + t - 1, t);
          const long long factor = choose_w * star_h * star_t;
          if (factor == 0) continue;
          total += weight(g + h) * Scalar(factor) * theta_[ks - g - w - h][t];
        }
      }
    }
    return total;
  }

  void build() {
    theta_[0][0] = Scalar(1);
    const detail::EdgeWeights<Scalar> weight(v_, phi1_, k_max_ + 1);
    for (int k = 1; k <= k_max_; ++k) {
      for (int g = 1; g <= k; ++g) upsilon_[k][g] = compute_upsilon(k, g, weight);
      for (int r = 1; r <= k; ++r) {
        Scalar total(0);
        for (int g = 1; g <= r; ++g) {
          const Scalar choose(detail::binomial(r - 1, g - 1));
          for (int s = r - g; s <= k - g; ++s) total += choose * upsilon_[k - s][g] * theta_[s][r - g];
        }
        theta_[k][r] = total;
      }
    }
  }

  Scalar v_;
  Scalar phi1_;
  int k_max_;
  RecurrenceOptions options_;
  Triangle<Scalar> theta_;
  Triangle<Scalar> upsilon_;  // upsilon_[ks][g]
  std::size_t out_of_domain_ = 0;
};

// ---------------------------------------------------------------------------
// Lambda(p, r): adjacency-matrix moments

template <typename Scalar>
class LambdaTable {
 public:
  LambdaTable(Scalar v, Scalar phi1, int p_max)
      : v_(v), phi1_(phi1), p_max_(p_max), table_(detail::make_triangle<Scalar>(p_max)) {
    if (!(phi1 > Scalar(0))) throw std::invalid_argument("phi1 must be positive");
    build();
  }

  const Scalar& operator()(int p, int r) const {
    if (p < 0 || p > p_max_) throw std::out_of_range("p outside the memoized range");
    if (r < 0 || r > p) throw std::invalid_argument("lambda needs 0 <= r <= p");
    return table_[p][r];
  }

  /// L_p = sum_{r=1}^{p} Lambda(p, r); L_0 = 1.
  Scalar moment(int p) const {
    if (p == 0) return Scalar(1);
    Scalar sum(0);
    for (int r = 1; r <= p; ++r) sum += (*this)(p, r);
    return sum;
  }

  /// ell_k: zero for odd k, L_{k/2} for even k.
  Scalar ell(int k) const {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k % 2 != 0) return Scalar(0);
    return moment(k / 2);
  }

  /// Auxiliary sums sum_r C(r + i - 1, i - 1) Lambda(p, r), i >= 1.
  Scalar frak_l(int i, int p) const {
    if (i < 1) throw std::invalid_argument("frak_L needs i >= 1");
    Scalar sum(0);
    for (int r = 0; r <= p; ++r) sum += Scalar(detail::binomial(r + i - 1, i - 1)) * (*this)(p, r);
    return sum;
  }

  /// Right-hand side of the convolution identity for frak_l(1, p).
  Scalar frak_l_convolution(int p) const {
    const detail::EdgeWeights<Scalar> weight(v_, phi1_, p);
    Scalar sum(0);
    for (int g = 1; g <= p; ++g) {
      Scalar inner(0);
      for (int j = 0; j <= p - g; ++j) inner += frak_l(g, p - g - j) * frak_l(g, j);
      sum += weight(g) * inner;
    }
    return sum;
  }

  int p_max() const { return p_max_; }

 private:
  void build() {
    table_[0][0] = Scalar(1);
    const detail::EdgeWeights<Scalar> weight(v_, phi1_, p_max_ + 1);
    for (int p = 1; p <= p_max_; ++p) {
      for (int r = 1; r <= p; ++r) {
        Scalar total(0);
        for (int g = 1; g <= r; ++g) {
          Scalar over_s(0);
          for (int s = r - g; s <= p - g; ++s) {
            Scalar over_t(0);
            for (int t = 0; t <= p - s - g; ++t) {
              over_t += Scalar(detail::binomial(g + t - 1, t)) * table_[p - s - g][t];
            }
            over_s += table_[s][r - g] * over_t;
          }
          total += weight(g) * Scalar(detail::binomial(r - 1, g - 1)) * over_s;
        }
        table_[p][r] = total;
      }
    }
  }

  Scalar v_;
  Scalar phi1_;
  int p_max_;
  Triangle<Scalar> table_;
};

// ---------------------------------------------------------------------------
// Infinite mean-degree limits

/// theta(k, r) = lim Theta(k, r) as phi1 grows without bound.
template <typename Scalar>
Triangle<Scalar> theta_limit_table(Scalar v, int k_max) {
  Triangle<Scalar> t = detail::make_triangle<Scalar>(k_max);
  t[0][0] = Scalar(1);
  const Scalar v2 = v * v;
  for (int k = 1; k <= k_max; ++k) {
    for (int r = 1; r <= k; ++r) {
      Scalar second(0);
      for (int s = r - 1; s <= k - 1; ++s) {
        Scalar closing(0);
        for (int t_ = 0; t_ <= k - s - 2; ++t_) closing += t[k - s - 2][t_];
        second += t[s][r - 1] * closing;
      }
      t[k][r] = v2 * t[k - 1][r - 1] + v2 * second;
    }
  }
  return t;
}

/// mu_0..mu_{k_max}: moments of the semicircle law of radius 2|v| centred at v^2.
template <typename Scalar>
std::vector<Scalar> mu_sequence(Scalar v, int k_max) {
  std::vector<Scalar> mu(static_cast<std::size_t>(k_max + 1), Scalar(0));
  const Scalar v2 = v * v;
  mu[0] = Scalar(1);
  if (k_max >= 1) mu[1] = v2;
  for (int k = 2; k <= k_max; ++k) {
    Scalar convolution(0);
    for (int j = 0; j <= k - 2; ++j) convolution += mu[j] * mu[k - j - 2];
    mu[k] = v2 * mu[k - 1] + v2 * convolution;
  }
  return mu;
}

/// v^{2p} (2p)! / (p! (p+1)!), the semicircle moments of the rescaled adjacency matrix.
template <typename Scalar>
Scalar catalan_moment(int p, Scalar v) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  Integer catalan(1);
  for (int i = 0; i < p; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
  return Scalar(catalan.convert_to<long long>()) * ipow(Scalar(v * v), p);
}

/// Catalan moments through the convolution L_p = v^2 sum_j L_{p-1-j} L_j.
template <typename Scalar>
std::vector<Scalar> catalan_sequence(Scalar v, int p_max) {
  std::vector<Scalar> l(static_cast<std::size_t>(p_max + 1), Scalar(0));
  l[0] = Scalar(1);
  for (int p = 1; p <= p_max; ++p) {
    Scalar convolution(0);
    for (int j = 0; j <= p - 1; ++j) convolution += l[p - 1 - j] * l[j];
    l[p] = v * v * convolution;
  }
  return l;
}

// ---------------------------------------------------------------------------
// Convenience evaluations (double precision)

double theta(int k, int r, double v, double phi1);
double limit_moment_m(int k, double v, double phi1);
double upsilon_weight(int ks, int g, double v, double phi1);
double lambda_adj(int p, int r, double v, double phi1);
double adjacency_moment_ell(int k, double v, double phi1);
double mu(int k, double v);
double theta_limit(int k, int r, double v);
double frak_L(int i, int p, double v, double phi1);

/// Limiting moments for one (v, phi1) point.
struct MomentTable {
  double v = 0.0;
  double phi1 = 0.0;
  std::vector<double> m;    // m_k
  std::vector<double> ell;  // ell_k
  std::vector<double> mu;   // mu_k
  Triangle<double> theta;   // Theta(k, r)
};

MomentTable moment_table(double v, double phi1, int k_max);

// ---------------------------------------------------------------------------
// Growth bounds

struct BoundRow {
  int order = 0;
  double value = 0.0;  // max over r of the table entry (or the moment)
  double bound = 0.0;
  double ratio = 0.0;  // value / bound
};

struct BoundReport {
  std::string name;
  double C = 0.0;
  double v = 0.0;
  double phi1 = 0.0;
  std::vector<BoundRow> rows;
  /// Moment corollary rows (check_bound_theta only).
  std::vector<BoundRow> moment_rows;
  double tightest_ratio = 0.0;
  bool passed = false;
};

/// Both admissibility expressions for check_bound_theta; admissible when each is <= 1.
std::pair<double, double> theta_bound_admissibility(double C, double v, double phi1);

/// Smallest C satisfying both admissibility inequalities, by bisection.  The
/// returned value is itself admissible.
double smallest_admissible_theta_C(double v, double phi1);

/// max_r Lambda(p, r) <= (C v^2)^p p^{2p} for 1 <= p <= p_max; needs C >= 1 and C phi1 >= 1.
BoundReport check_bound_lambda(int p_max, double C, double v, double phi1);

/// max_r Theta(k, r) <= (C v^2 k)^k and m_k <= (C v^2)^k k^{k+1} for 1 <= k <= k_max.
BoundReport check_bound_theta(int k_max, double C, double v, double phi1);

}  // namespace izeta

#endif  // IZETA_MOMENT_THEORY_HPP
