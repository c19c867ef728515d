#pragma once

#include <string>
#include <vector>

#include "sgw/invariant.hpp"
#include "sgw/localize.hpp"

namespace sgw {

enum class ReferenceKind { Point, Taut, Localized };
enum class ReferenceStatus { Exact, Suspect };

/// A published value: a point invariant (k), a tautological integral
/// (k, exponents i_4..i_k) or a degree-one invariant of P^n (n, k, classes).
struct ReferenceValue {
  ReferenceKind kind = ReferenceKind::Localized;
  std::string table;  // "point", "taut", "one-point", "two-point", "three-point"
  int n = 0;
  int k = 0;
  std::vector<int> args;
  /// Value as printed. Tautological integrals use kappa exponent 0.
  Invariant expected;
  std::string printed;
  ReferenceStatus status = ReferenceStatus::Exact;
  /// Grading-consistent reading of a Suspect entry.
  Invariant corrected;
  std::string note;

  /// e.g. "two-point P^3 (L^2, L)"
  [[nodiscard]] std::string label() const;
};

/// All reference values, in print order.
const std::vector<ReferenceValue>& reference_values();

/// Recomputes a reference value with this library.
Invariant recompute(const ReferenceValue& v, Localizer& loc, const EvaluateOptions& options = {});

enum class ReferenceOutcome { Pass, Fail, Skip };

/// Exact entries pass iff the recomputed value equals the printed one.
/// Suspect entries are skipped when the recomputed value equals their
/// corrected reading and fail otherwise.
ReferenceOutcome judge(const ReferenceValue& v, const Invariant& computed);

const char* to_string(ReferenceOutcome outcome);

}  // namespace sgw
