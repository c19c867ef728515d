#include "sgw/reference_tables.hpp"

#include "sgw/point_sgw.hpp"
#include "sgw/taut0.hpp"

namespace sgw {

namespace {

struct RawRow {
  ReferenceKind kind;
  const char* table;
  int n;
  int k;
  std::vector<int> args;
  const char* coefficient;
  int kappa_exp;
};

struct Correction {
  const char* table;
  int n;
  std::vector<int> args;
  const char* coefficient;
  int kappa_exp;
  const char* note;
};

std::string class_name(int power) {
  if (power == 0) return "1";
  if (power == 1) return "L";
  return "L^" + std::to_string(power);
}

std::vector<ReferenceValue> build() {
  // Values as printed, in print order. A zero is stored with exponent 0.
  const std::vector<RawRow> raw = {
      {ReferenceKind::Point, "point", 0, 3, {}, "1", -1},
      {ReferenceKind::Point, "point", 0, 4, {}, "-1/2", -3},
      {ReferenceKind::Point, "point", 0, 5, {}, "3/4", -5},
      {ReferenceKind::Point, "point", 0, 6, {}, "-3/2", -7},
      {ReferenceKind::Taut, "taut", 0, 4, {1}, "1", 0},
      {ReferenceKind::Taut, "taut", 0, 5, {1, 1}, "2", 0},
      {ReferenceKind::Taut, "taut", 0, 5, {0, 2}, "1", 0},
      {ReferenceKind::Taut, "taut", 0, 6, {1, 1, 1}, "6", 0},
      {ReferenceKind::Taut, "taut", 0, 6, {1, 0, 2}, "2", 0},
      {ReferenceKind::Taut, "taut", 0, 6, {0, 1, 2}, "3", 0},
      {ReferenceKind::Taut, "taut", 0, 6, {0, 0, 3}, "1", 0},
      {ReferenceKind::Localized, "one-point", 1, 1, {1}, "1", -1},
      {ReferenceKind::Localized, "one-point", 1, 1, {0}, "-1", -2},
      {ReferenceKind::Localized, "one-point", 2, 1, {2}, "2", -3},
      {ReferenceKind::Localized, "one-point", 2, 1, {1}, "3/4", -4},
      {ReferenceKind::Localized, "one-point", 2, 1, {0}, "-3/2", -5},
      {ReferenceKind::Localized, "one-point", 3, 1, {3}, "7/2", -5},
      {ReferenceKind::Localized, "one-point", 3, 1, {2}, "5", -6},
      {ReferenceKind::Localized, "one-point", 3, 1, {1}, "15/8", -7},
      {ReferenceKind::Localized, "one-point", 3, 1, {0}, "-35/8", -8},
      {ReferenceKind::Localized, "one-point", 4, 1, {4}, "25/4", -7},
      {ReferenceKind::Localized, "one-point", 4, 1, {3}, "245/16", -8},
      {ReferenceKind::Localized, "one-point", 4, 1, {2}, "35/2", -9},
      {ReferenceKind::Localized, "one-point", 4, 1, {1}, "105/16", -10},
      {ReferenceKind::Localized, "one-point", 4, 1, {0}, "-525/32", -11},
      {ReferenceKind::Localized, "one-point", 5, 1, {5}, "91/8", -9},
      {ReferenceKind::Localized, "one-point", 5, 1, {4}, "315/8", -10},
      {ReferenceKind::Localized, "one-point", 5, 1, {3}, "2205/32", -11},
      {ReferenceKind::Localized, "one-point", 5, 1, {2}, "1155/16", -12},
      {ReferenceKind::Localized, "one-point", 5, 1, {1}, "3465/128", -12},
      {ReferenceKind::Localized, "one-point", 5, 1, {0}, "-9009/128", -12},
      {ReferenceKind::Localized, "two-point", 1, 2, {1, 1}, "1", -2},
      {ReferenceKind::Localized, "two-point", 1, 2, {1, 0}, "-1/2", -3},
      {ReferenceKind::Localized, "two-point", 1, 2, {0, 0}, "0", 0},
      {ReferenceKind::Localized, "two-point", 2, 2, {2, 2}, "1", -3},
      {ReferenceKind::Localized, "two-point", 2, 2, {2, 1}, "3/2", -4},
      {ReferenceKind::Localized, "two-point", 2, 2, {1, 1}, "3/4", -5},
      {ReferenceKind::Localized, "two-point", 2, 2, {2, 0}, "-3/4", -5},
      {ReferenceKind::Localized, "two-point", 2, 2, {1, 0}, "-3/4", -6},
      {ReferenceKind::Localized, "two-point", 2, 2, {0, 0}, "0", 0},
      {ReferenceKind::Localized, "two-point", 3, 2, {3, 3}, "1", -4},
      {ReferenceKind::Localized, "two-point", 3, 2, {3, 2}, "2", -5},
      {ReferenceKind::Localized, "two-point", 3, 2, {3, 1}, "5/2", -6},
      {ReferenceKind::Localized, "two-point", 3, 2, {2, 2}, "5", -6},
      {ReferenceKind::Localized, "two-point", 3, 2, {3, 0}, "-5/4", -7},
      {ReferenceKind::Localized, "two-point", 3, 2, {2, 1}, "-15/4", -7},
      {ReferenceKind::Localized, "two-point", 3, 2, {2, 0}, "-5/2", -8},
      {ReferenceKind::Localized, "two-point", 3, 2, {1, 1}, "15/8", -8},
      {ReferenceKind::Localized, "two-point", 3, 2, {1, 0}, "-35/16", -9},
      {ReferenceKind::Localized, "two-point", 3, 2, {0, 0}, "0", 0},
      {ReferenceKind::Localized, "two-point", 4, 2, {4, 4}, "1", -5},
      {ReferenceKind::Localized, "two-point", 4, 2, {4, 3}, "5/2", -6},
      {ReferenceKind::Localized, "two-point", 4, 2, {4, 2}, "15/4", -7},
      {ReferenceKind::Localized, "two-point", 4, 2, {3, 3}, "15/2", -7},
      {ReferenceKind::Localized, "two-point", 4, 2, {4, 1}, "35/8", -8},
      {ReferenceKind::Localized, "two-point", 4, 2, {3, 2}, "105/8", -8},
      {ReferenceKind::Localized, "two-point", 4, 2, {4, 0}, "-35/16", -9},
      {ReferenceKind::Localized, "two-point", 4, 2, {3, 1}, "175/16", -9},
      {ReferenceKind::Localized, "two-point", 4, 2, {2, 2}, "315/16", -9},
      {ReferenceKind::Localized, "two-point", 4, 2, {3, 0}, "-105/16", -10},
      {ReferenceKind::Localized, "two-point", 4, 2, {2, 1}, "105/8", -10},
      {ReferenceKind::Localized, "two-point", 4, 2, {2, 0}, "-315/32", -11},
      {ReferenceKind::Localized, "two-point", 4, 2, {1, 1}, "-525/64", -11},
      {ReferenceKind::Localized, "two-point", 4, 2, {1, 0}, "-35/16", -12},
      {ReferenceKind::Localized, "two-point", 4, 2, {0, 0}, "0", 0},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 5}, "1", -6},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 4}, "3", -7},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 3}, "21/4", -8},
      {ReferenceKind::Localized, "two-point", 5, 2, {4, 4}, "21/2", -8},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 2}, "7", -9},
      {ReferenceKind::Localized, "two-point", 5, 2, {4, 3}, "21", -9},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 1}, "63/8", -10},
      {ReferenceKind::Localized, "two-point", 5, 2, {4, 2}, "63/2", -10},
      {ReferenceKind::Localized, "two-point", 5, 2, {3, 3}, "189/4", -10},
      {ReferenceKind::Localized, "two-point", 5, 2, {5, 0}, "-63/16", -11},
      {ReferenceKind::Localized, "two-point", 5, 2, {4, 1}, "441/16", -11},
      {ReferenceKind::Localized, "two-point", 5, 2, {3, 2}, "1071/16", -11},
      {ReferenceKind::Localized, "two-point", 5, 2, {4, 0}, "-63/4", -12},
      {ReferenceKind::Localized, "two-point", 5, 2, {3, 1}, "1575/316", -12},
      {ReferenceKind::Localized, "two-point", 5, 2, {2, 2}, "1365/16", -12},
      {ReferenceKind::Localized, "two-point", 5, 2, {3, 0}, "-2079/64", -13},
      {ReferenceKind::Localized, "two-point", 5, 2, {2, 1}, "3465/64", -13},
      {ReferenceKind::Localized, "two-point", 5, 2, {2, 0}, "-693/16", -14},
      {ReferenceKind::Localized, "two-point", 5, 2, {1, 1}, "-3465/128", -14},
      {ReferenceKind::Localized, "two-point", 5, 2, {1, 0}, "-9009/2566", -15},
      {ReferenceKind::Localized, "two-point", 5, 2, {0, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 1, 3, {1, 1, 1}, "1", -3},
      {ReferenceKind::Localized, "three-point", 1, 3, {1, 1, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 1, 3, {1, 0, 0}, "-1/4", -5},
      {ReferenceKind::Localized, "three-point", 1, 3, {0, 0, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 2, 3, {2, 2, 1}, "1", -4},
      {ReferenceKind::Localized, "three-point", 2, 3, {2, 2, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 2, 3, {2, 1, 1}, "3/2", -5},
      {ReferenceKind::Localized, "three-point", 2, 3, {2, 1, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 2, 3, {1, 1, 1}, "3/2", -6},
      {ReferenceKind::Localized, "three-point", 2, 3, {2, 0, 0}, "-3/8", -7},
      {ReferenceKind::Localized, "three-point", 2, 3, {1, 1, 0}, "-3/8", -7},
      {ReferenceKind::Localized, "three-point", 2, 3, {1, 0, 0}, "-3/8", -7},
      {ReferenceKind::Localized, "three-point", 2, 3, {0, 0, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 3, 1}, "1", -5},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 2, 2}, "1", -5},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 3, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 2, 1}, "2", -6},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 2, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 1, 1}, "5/2", -7},
      {ReferenceKind::Localized, "three-point", 3, 3, {2, 2, 1}, "5", -7},
      {ReferenceKind::Localized, "three-point", 3, 3, {3, 1, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 3, 3, {2, 2, 0}, "0", 0},
      {ReferenceKind::Localized, "three-point", 3, 3, {2, 1, 1}, "5", -8},
      {ReferenceKind::Localized, "three-point", 3, 3, {2, 1, 0}, "-5/8", -9},
      {ReferenceKind::Localized, "three-point", 3, 3, {1, 1, 1}, "15/4", -9},
      {ReferenceKind::Localized, "three-point", 3, 3, {2, 0, 0}, "-5/4", -10},
      {ReferenceKind::Localized, "three-point", 3, 3, {1, 1, 0}, "-5/4", -10},
      {ReferenceKind::Localized, "three-point", 3, 3, {1, 0, 0}, "-35/32", -11},
      {ReferenceKind::Localized, "three-point", 3, 3, {0, 0, 0}, "0", 0},
  };

  // Printed entries that contradict the grading exponent or carry an
  // evident typesetting slip, with their grading-consistent reading.
  const std::vector<Correction> corrections = {
      {"one-point", 5, {1}, "3465/128", -13, "printed exponent 12; grading forces 13"},
      {"one-point", 5, {0}, "-9009/128", -14, "printed exponent 12; grading forces 14"},
      {"two-point", 5, {3, 1}, "1575/32", -12, "printed denominator 316; read as 32"},
      {"two-point", 5, {1, 0}, "-9009/256", -15, "printed denominator 2566; read as 256"},
  };

  std::vector<ReferenceValue> out;
  out.reserve(raw.size());
  for (const RawRow& r : raw) {
    ReferenceValue v;
    v.kind = r.kind;
    v.table = r.table;
    v.n = r.n;
    v.k = r.k;
    v.args = r.args;
    v.expected = Invariant(Rational::parse(r.coefficient), r.kappa_exp);
    v.printed = r.kind == ReferenceKind::Taut ? v.expected.coefficient().to_string() : v.expected.to_string();
    for (const Correction& c : corrections) {
      if (v.table == c.table && v.n == c.n && v.args == c.args) {
        v.status = ReferenceStatus::Suspect;
        v.corrected = Invariant(Rational::parse(c.coefficient), c.kappa_exp);
        v.note = c.note;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string ReferenceValue::label() const {
  std::string args_text;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) args_text += kind == ReferenceKind::Localized ? ", " : ",";
    args_text += kind == ReferenceKind::Localized ? class_name(args[i]) : std::to_string(args[i]);
  }
  switch (kind) {
    case ReferenceKind::Point:
      return "point k=" + std::to_string(k);
    case ReferenceKind::Taut:
      return "taut k=" + std::to_string(k) + " exps=" + args_text;
    case ReferenceKind::Localized:
      break;
  }
  return table + " P^" + std::to_string(n) + " (" + args_text + ")";
}

const std::vector<ReferenceValue>& reference_values() {
  static const std::vector<ReferenceValue> values = build();
  return values;
}

Invariant recompute(const ReferenceValue& v, Localizer& loc, const EvaluateOptions& options) {
  switch (v.kind) {
    case ReferenceKind::Point:
      return sgw_point(v.k);
    case ReferenceKind::Taut: {
      const std::vector<unsigned> exps(v.args.begin(), v.args.end());
      return Invariant(integrate(TautExpr(TautMonomial::chain(static_cast<unsigned>(v.k), exps))), 0);
    }
    case ReferenceKind::Localized:
      break;
  }
  return loc.invariant(LocalizationJob::make(v.n, v.k, v.args), Strategy::Evaluate, options);
}

ReferenceOutcome judge(const ReferenceValue& v, const Invariant& computed) {
  if (v.status == ReferenceStatus::Suspect) {
    return computed == v.corrected ? ReferenceOutcome::Skip : ReferenceOutcome::Fail;
  }
  return computed == v.expected ? ReferenceOutcome::Pass : ReferenceOutcome::Fail;
}

const char* to_string(ReferenceOutcome outcome) {
  switch (outcome) {
    case ReferenceOutcome::Pass: return "PASS";
    case ReferenceOutcome::Fail: return "FAIL";
    case ReferenceOutcome::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace sgw
