#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "abstree/tree.hpp"

namespace abstree {

inline constexpr double kDefaultTolerance = 1e-9;

// 3 <= k <= floor((n + 2) / 3).
bool in_theorem_range(std::size_t n, int k) noexcept;

// Closed-form minimum ABS over trees with n vertices and k leaves:
//   k (sqrt(1/3) + sqrt(3/5)) + (n - 3k + 2) sqrt(1/2) + (k - 3) sqrt(2/3)
// Throws OutOfRange outside in_theorem_range.
double formula_min_abs(std::size_t n, int k);

struct BruteForceMinimum {
  std::size_t n = 0;
  int k = 0;
  bool chemical = false;
  double minimum = 0.0;
  std::set<CanonicalCode> argmin;  // every class within the tie tolerance
  std::uint64_t class_size = 0;
  bool formula_applicable = false;
};

// Exhaustive minimum over all non-isomorphic trees with n vertices and k
// leaves (max degree <= 4 when chemical). threads == 0 uses every core; the
// result does not depend on the thread count. Throws OutOfRange.
BruteForceMinimum min_abs_bruteforce(std::size_t n, int k, bool chemical,
                                     unsigned threads = 0,
                                     double tie_tolerance = kDefaultTolerance);

enum class Verdict { Pass, Fail };

struct VerificationReport {
  std::size_t n = 0;
  int k = 0;
  bool chemical = false;
  double formula_value = 0.0;
  double bruteforce_min = 0.0;
  std::set<CanonicalCode> argmin_codes;
  std::set<CanonicalCode> tstar_codes;
  std::uint64_t class_size = 0;
  double tolerance = kDefaultTolerance;
  Verdict verdict = Verdict::Fail;
  std::string reason;
};

// Pass iff |formula - brute-force minimum| <= tolerance and the argmin set is
// exactly the extremal family. Throws OutOfRange outside in_theorem_range.
VerificationReport verify_theorem(std::size_t n, int k, bool chemical,
                                  double tolerance = kDefaultTolerance,
                                  unsigned threads = 0);

enum class LemmaId {
  GapMonotonicity,       // 2.1
  InteriorDegreeTwo,     // 2.2
  ShortPendentEdge,      // 2.3
  DegreeFourReplace,     // 2.4
  HighDegreeReplace,     // 2.5
  E2CountBound,          // 2.6
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::GapMonotonicity,   LemmaId::InteriorDegreeTwo, LemmaId::ShortPendentEdge,
    LemmaId::DegreeFourReplace, LemmaId::HighDegreeReplace, LemmaId::E2CountBound,
};

// "2.1" .. "2.6"
std::string_view lemma_label(LemmaId id) noexcept;
// Throws UnknownLemma.
LemmaId parse_lemma_id(std::string_view label);

struct LemmaCheckRecord {
  LemmaId lemma = LemmaId::GapMonotonicity;
  std::string instance;  // no commas; safe as a CSV field
  double lhs = 0.0;
  double rhs = 0.0;
  bool strict = false;
  bool pass = false;
};

struct OrderRange {
  std::size_t min_n = 1;
  std::size_t max_n = 12;
};

// Strict checks require lhs - rhs above this margin.
inline constexpr double kStrictMargin = 1e-9;
// Non-strict checks allow rhs to exceed lhs by at most this much.
inline constexpr double kWeakSlack = 1e-12;

// f(x) = sqrt(1 - 2/(x + k)) - sqrt(1 - 2/x)
double gap_function(double x, int k);

// Runs one lemma over every qualifying instance among the trees whose order
// lies in `range` (the grid lemma ignores the range):
//   2.1  f(x) > f(x + 0.1) for k = 1..6, x = 3.0..19.9
//   2.2  degree-2 vertex with both neighbors of degree >= 2: contract one
//        of its edges, lengthen a pendent edge; ABS must not increase
//   2.3  E_2 non-empty, a leaf hanging on a vertex of degree >= 3: contract
//        an E_2 edge, lengthen that leaf's edge; ABS must drop
//   2.4  E_2 non-empty, degree-4 vertex with neighbor degrees
//        d1 <= d2 <= d3 <= 3, d4 <= 5: contract an E_2 edge, replace the
//        vertex by a (4,3)-regular tree; ABS must drop
//   2.5  vertex of degree s >= 4 with |E_2| >= s - 3 and either s >= 5,
//        d(u_{s-1}) <= 3 or s >= 12, d(u_{s-1}) <= 4: contract s - 3 E_2
//        edges, replace the vertex; ABS must drop
//   2.6  3 <= k <= floor((n+2)/3) and E_2 inside the pendent paths:
//        |E_2| >= sum_{i >= 4} (i - 3) n_i
// Every choice of edges, pendent vertex, shape and leaf assignment is swept
// (shapes and assignments only for s <= 6); each record covers one site and
// reports the largest ABS reached over its sweep.
std::vector<LemmaCheckRecord> lemma_suite(LemmaId id, OrderRange range);

// psi(r) = sqrt(1/2) + (r-1) sqrt((r+2)/(r+4)) - 3 sqrt(3/4) - (r-3) sqrt(r/(r+2)),
// the bound closing the degree-6/7 case of the minimality argument.
struct PsiCheck {
  int r = 0;
  double value = 0.0;
  bool nonnegative = false;
};

double psi(int r);
// r = 6, 7, 8.
std::vector<PsiCheck> psi_checks();

}  // namespace abstree
