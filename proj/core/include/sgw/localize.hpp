#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "sgw/exact/rational.hpp"
#include "sgw/exact/ratfunc.hpp"
#include "sgw/graphs.hpp"
#include "sgw/invariant.hpp"

namespace sgw {

/// <SGW_{0,k}^{P^n, d}>(Lambda^{a_1}, ..., Lambda^{a_k}).
struct LocalizationJob {
  int n = 1;
  int k = 1;
  int d = 1;
  std::vector<int> classes;

  /// Validates k in {1,2,3} and 0 <= a_i <= n.
  static LocalizationJob make(int n, int k, std::vector<int> classes);

  [[nodiscard]] int dimension() const { return n + d * (n + 1) + k - 3; }
  [[nodiscard]] int rank() const { return d * (n + 1) + k - 2; }
  [[nodiscard]] int class_degree() const;
  [[nodiscard]] int codegree() const { return dimension() - class_degree(); }
  [[nodiscard]] int kappa_exp() const { return -rank() - dimension() + class_degree(); }
  [[nodiscard]] bool graded_zero() const { return codegree() < 0; }
};

enum class Strategy { Evaluate, Symbolic };

struct EvaluateOptions {
  int samples = 3;
  std::uint64_t seed = 0;
};

struct GraphTerm {
  FixedGraph graph;
  Rational value;
};

/// Per-sample record of an Evaluate run.
struct TauSample {
  std::vector<Rational> tau;
  std::vector<GraphTerm> terms;
  Rational total;
};

struct LocalizationTrace {
  std::vector<TauSample> samples;
};

/// Draws `count` pairwise distinct integers in [-1000, 1000].
std::vector<Rational> draw_tau(std::size_t count, std::uint64_t& state);

/// Runs the fixed-point sum. Euler data is cached per (n, k); all members
/// are safe to call concurrently.
class Localizer {
 public:
  /// Integral over the fixed locus of g at the torus point tau, with the
  /// kappa power stripped. Throws ResampleRequired when tau hits a pole.
  Rational graph_contribution(const FixedGraph& g, const LocalizationJob& job,
                              const std::vector<Rational>& tau);

  /// Same integral as a rational function of t_0..t_n.
  RatFunc graph_contribution_symbolic(const FixedGraph& g, const LocalizationJob& job);

  /// Throws InconsistencyError when tau samples disagree or the symbolic sum
  /// is not constant.
  Invariant invariant(const LocalizationJob& job, Strategy strategy = Strategy::Evaluate,
                      const EvaluateOptions& options = {}, LocalizationTrace* trace = nullptr);

 private:
  static Rational contribution(const FixedGraph& g, const EulerData& data, const LocalizationJob& job,
                               const std::vector<Rational>& tau);
  const std::vector<std::pair<FixedGraph, EulerData>>& fixed_loci(int n, int k);

  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<std::pair<FixedGraph, EulerData>>> cache_;
};

Rational graph_contribution(const FixedGraph& g, const LocalizationJob& job,
                            const std::vector<Rational>& tau);

Invariant invariant(int n, int k, const std::vector<int>& classes,
                    Strategy strategy = Strategy::Evaluate, const EvaluateOptions& options = {});

/// True iff a codegree-zero three-point invariant equals kappa^{-rank}.
/// Throws DomainError unless k = 3, sum a_i = dimension and a_i <= n.
bool check_extension(int n, int k, const std::vector<int>& classes);

}  // namespace sgw
