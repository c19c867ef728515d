#include "sgw/localize.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "sgw/errors.hpp"
#include "sgw/exact/symmetric.hpp"

namespace sgw {

namespace {

constexpr int kMaxResample = 64;

Rational sign_pow(int c) { return c % 2 == 0 ? Rational(1) : Rational(-1); }

Localizer& shared_localizer() {
  static Localizer loc;
  return loc;
}

}  // namespace

LocalizationJob LocalizationJob::make(int n, int k, std::vector<int> classes) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (k < 1 || k > 3) throw UnsupportedError("localization supports k in {1,2,3}, got " + std::to_string(k));
  if (classes.size() != static_cast<std::size_t>(k)) {
    throw DomainError("expected " + std::to_string(k) + " classes, got " + std::to_string(classes.size()));
  }
  for (int a : classes) {
    if (a < 0 || a > n) {
      throw DomainError("class exponent " + std::to_string(a) + " outside [0, " + std::to_string(n) + "]");
    }
  }
  return {n, k, 1, std::move(classes)};
}

int LocalizationJob::class_degree() const { return std::accumulate(classes.begin(), classes.end(), 0); }

std::vector<Rational> draw_tau(std::size_t count, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  std::set<std::int64_t> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    // modulo keeps the stream identical across standard libraries
    const auto v = static_cast<std::int64_t>(rng() % 2001) - 1000;
    if (seen.insert(v).second) out.emplace_back(v);
  }
  state = rng();
  return out;
}

const std::vector<std::pair<FixedGraph, EulerData>>& Localizer::fixed_loci(int n, int k) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace({n, k});
  if (inserted) {
    for (const FixedGraph& g : enumerate(n, k)) it->second.emplace_back(g, euler_data(g));
  }
  return it->second;
}

Rational Localizer::graph_contribution(const FixedGraph& g, const LocalizationJob& job,
                                       const std::vector<Rational>& tau) {
  if (job.graded_zero()) return Rational(0);
  const auto& loci = fixed_loci(g.n, g.k);
  const auto it = std::find_if(loci.begin(), loci.end(), [&](const auto& e) { return e.first == g; });
  if (it == loci.end()) return contribution(g, euler_data(g), job, tau);
  return contribution(g, it->second, job, tau);
}

Rational Localizer::contribution(const FixedGraph& g, const EulerData& data,
                                 const LocalizationJob& job, const std::vector<Rational>& tau) {
  const int c = job.codegree();
  std::vector<DualRational> w;
  w.reserve(data.susy_weights.size());
  for (const LinForm& f : data.susy_weights) w.push_back(f.eval_tau(tau));
  const DualRational h = complete_homogeneous(static_cast<unsigned>(c), w);
  const Rational ev = ev_pullback(g, job.classes).eval(tau, Rational(0));

  DualRational inv;
  try {
    inv = data.et_factored.eval_tau(tau);
  } catch (const ArithmeticError&) {
    throw ResampleRequired("torus point hits a pole of " + g.to_string());
  }
  const DualRational total = DualRational{sign_pow(c) * ev, Rational(0)} * h * inv;
  return geometry(g).moduli_kind == ModuliKind::M04 ? total.lambda : total.value;
}

RatFunc Localizer::graph_contribution_symbolic(const FixedGraph& g, const LocalizationJob& job) {
  const std::size_t nt = g.num_tau();
  if (job.graded_zero()) return RatFunc(nt);
  const EulerData data = euler_data(g);
  const int c = job.codegree();
  Poly top = complete_homogeneous(static_cast<unsigned>(c), data.susy_weights, nt);
  top *= ev_pullback(g, job.classes) * sign_pow(c);
  const RatFunc full = RatFunc(top) * data.et_inverse;
  return full.lambda_coefficient(geometry(g).moduli_kind == ModuliKind::M04 ? 1 : 0);
}

Invariant Localizer::invariant(const LocalizationJob& job, Strategy strategy,
                               const EvaluateOptions& options, LocalizationTrace* trace) {
  if (job.graded_zero()) return Invariant::zero();
  const auto& loci = fixed_loci(job.n, job.k);

  if (strategy == Strategy::Symbolic) {
    if (job.n > 2) throw UnsupportedError("symbolic strategy supports n <= 2");
    RatFunc sum(static_cast<std::size_t>(job.n) + 1);
    for (const auto& [g, data] : loci) sum += graph_contribution_symbolic(g, job);
    if (!sum.is_constant()) {
      throw InconsistencyError("symbolic localization sum is not constant: " + sum.to_string());
    }
    return Invariant(sum.constant_value(), job.kappa_exp());
  }

  if (options.samples < 1) throw DomainError("need at least one tau sample");
  std::uint64_t state = options.seed;
  std::optional<Rational> agreed;
  for (int s = 0; s < options.samples; ++s) {
    TauSample sample;
    for (int attempt = 0;; ++attempt) {
      sample = {draw_tau(static_cast<std::size_t>(job.n) + 1, state), {}, Rational(0)};
      try {
        for (const auto& [g, data] : loci) {
          Rational v = contribution(g, data, job, sample.tau);
          sample.total += v;
          if (trace) sample.terms.push_back({g, std::move(v)});
        }
        break;
      } catch (const ResampleRequired&) {
        if (attempt + 1 >= kMaxResample) throw;
      }
    }
    if (agreed && *agreed != sample.total) {
      throw InconsistencyError("localization sum depends on the torus weights: " + agreed->to_string() +
                               " vs " + sample.total.to_string());
    }
    agreed = sample.total;
    if (trace) trace->samples.push_back(std::move(sample));
  }
  return Invariant(*agreed, job.kappa_exp());
}

Rational graph_contribution(const FixedGraph& g, const LocalizationJob& job,
                            const std::vector<Rational>& tau) {
  return shared_localizer().graph_contribution(g, job, tau);
}

Invariant invariant(int n, int k, const std::vector<int>& classes, Strategy strategy,
                    const EvaluateOptions& options) {
  return shared_localizer().invariant(LocalizationJob::make(n, k, classes), strategy, options);
}

bool check_extension(int n, int k, const std::vector<int>& classes) {
  const LocalizationJob job = LocalizationJob::make(n, k, classes);
  if (k != 3) throw DomainError("extension check needs k = 3");
  if (job.codegree() != 0) throw DomainError("extension check needs codegree zero");
  return shared_localizer().invariant(job) == Invariant(Rational(1), -job.rank());
}

}  // namespace sgw
