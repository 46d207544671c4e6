#include "abstree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

#include "abstree/enumerate.hpp"
#include "abstree/families.hpp"
#include "abstree/indices.hpp"
#include "abstree/transforms.hpp"

namespace abstree {

bool in_theorem_range(std::size_t n, int k) noexcept { return tstar_parameters_valid(n, k); }

double formula_min_abs(std::size_t n, int k) {
  if (!in_theorem_range(n, k)) {
    throw Error(ErrorCode::OutOfRange, "closed form needs 3 <= k <= floor((n+2)/3), got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
  }
  const double kd = k;
  const double nd = static_cast<double>(n);
  return kd * (std::sqrt(1.0 / 3.0) + std::sqrt(3.0 / 5.0)) + (nd - 3 * kd + 2) * std::sqrt(0.5) +
         (kd - 3) * std::sqrt(2.0 / 3.0);
}

namespace {

struct MinAccumulator {
  double minimum = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, CanonicalCode>> candidates;
  std::uint64_t seen = 0;

  void prune(double tol) {
    std::erase_if(candidates, [&](const auto& c) { return c.first > minimum + tol; });
  }

  void offer(const Tree& t, double tol) {
    ++seen;
    const double value = abs_index(t).value;
    if (value > minimum + tol) return;
    if (value < minimum) {
      minimum = value;
      prune(tol);
    }
    candidates.emplace_back(value, canonical_code(t));
  }

  void merge(MinAccumulator&& other, double tol) {
    seen += other.seen;
    if (other.minimum < minimum) minimum = other.minimum;
    for (auto& c : other.candidates) candidates.push_back(std::move(c));
    prune(tol);
  }
};

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

BruteForceMinimum min_abs_bruteforce(std::size_t n, int k, bool chemical, unsigned threads,
                                     double tie_tolerance) {
  const EnumSpec spec{n, k, chemical ? std::optional<int>(4) : std::nullopt};
  validate(spec);
  const unsigned workers = resolve_threads(threads);
  constexpr std::size_t kBatch = 8192;

  MinAccumulator total;
  std::vector<Tree> batch;
  const auto drain = [&] {
    if (batch.empty()) return;
    const std::size_t parts = std::min<std::size_t>(workers, batch.size());
    if (parts <= 1) {
      for (const auto& t : batch) total.offer(t, tie_tolerance);
    } else {
      std::vector<MinAccumulator> partial(parts);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < parts; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += parts) {
            partial[w].offer(batch[i], tie_tolerance);
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& p : partial) total.merge(std::move(p), tie_tolerance);
    }
    batch.clear();
  };
  for_each_tree(spec, [&](const Tree& t) {
    batch.push_back(t);
    if (batch.size() == kBatch) drain();
    return true;
  });
  drain();

  BruteForceMinimum out;
  out.n = n;
  out.k = k;
  out.chemical = chemical;
  out.class_size = total.seen;
  out.formula_applicable = in_theorem_range(n, k);
  out.minimum = total.minimum;
  for (auto& [value, code] : total.candidates) {
    if (value <= total.minimum + tie_tolerance) out.argmin.insert(std::move(code));
  }
  return out;
}

VerificationReport verify_theorem(std::size_t n, int k, bool chemical, double tolerance,
                                  unsigned threads) {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::BadParameters, "tolerance must be a finite non-negative number");
  }
  VerificationReport report;
  report.n = n;
  report.k = k;
  report.chemical = chemical;
  report.tolerance = tolerance;
  report.formula_value = formula_min_abs(n, k);

  BruteForceMinimum brute = min_abs_bruteforce(n, k, chemical, threads, tolerance);
  report.bruteforce_min = brute.minimum;
  report.argmin_codes = std::move(brute.argmin);
  report.class_size = brute.class_size;
  for (const Tree& t : tstar_family(n, k)) report.tstar_codes.insert(canonical_code(t));

  const double gap = std::abs(report.formula_value - report.bruteforce_min);
  if (gap > tolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "|formula - minimum| = %.3e exceeds tolerance %.3e", gap,
                  tolerance);
    report.verdict = Verdict::Fail;
    report.reason = buf;
    return report;
  }
  if (report.argmin_codes != report.tstar_codes) {
    std::vector<CanonicalCode> extra;
    std::vector<CanonicalCode> missing;
    std::set_difference(report.argmin_codes.begin(), report.argmin_codes.end(),
                        report.tstar_codes.begin(), report.tstar_codes.end(),
                        std::back_inserter(extra));
    std::set_difference(report.tstar_codes.begin(), report.tstar_codes.end(),
                        report.argmin_codes.begin(), report.argmin_codes.end(),
                        std::back_inserter(missing));
    report.verdict = Verdict::Fail;
    report.reason = "argmin set differs from the extremal family: " +
                    std::to_string(extra.size()) + " extra, " + std::to_string(missing.size()) +
                    " missing";
    return report;
  }
  report.verdict = Verdict::Pass;
  report.reason = "minimum matches the closed form; argmin is the extremal family (" +
                  std::to_string(report.tstar_codes.size()) + " trees)";
  return report;
}

std::string_view lemma_label(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::GapMonotonicity: return "2.1";
    case LemmaId::InteriorDegreeTwo: return "2.2";
    case LemmaId::ShortPendentEdge: return "2.3";
    case LemmaId::DegreeFourReplace: return "2.4";
    case LemmaId::HighDegreeReplace: return "2.5";
    case LemmaId::E2CountBound: return "2.6";
  }
  return "?";
}

LemmaId parse_lemma_id(std::string_view label) {
  for (LemmaId id : kAllLemmas) {
    if (lemma_label(id) == label) return id;
  }
  throw Error(ErrorCode::UnknownLemma, "unknown lemma '" + std::string(label) +
                                           "' (expected 2.1 .. 2.6)");
}

double gap_function(double x, int k) {
  return std::sqrt(1.0 - 2.0 / (x + k)) - std::sqrt(1.0 - 2.0 / x);
}

double psi(int r) {
  const double rd = r;
  return std::sqrt(0.5) + (rd - 1) * std::sqrt((rd + 2) / (rd + 4)) - 3 * std::sqrt(0.75) -
         (rd - 3) * std::sqrt(rd / (rd + 2));
}

std::vector<PsiCheck> psi_checks() {
  std::vector<PsiCheck> out;
  for (int r : {6, 7, 8}) {
    const double value = psi(r);
    out.push_back(PsiCheck{r, value, value >= 0.0});
  }
  return out;
}

namespace {

std::size_t leaf_count(const Tree& t) {
  std::size_t k = 0;
  for (std::size_t x = 0; x < t.vertex_count(); ++x) k += t.degree(static_cast<Vertex>(x)) == 1;
  return k;
}

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Tree identity shared by all instances: order, position in the generation
// sequence, canonical code.
std::string tree_text(const Tree& t, std::size_t index) {
  return "n=" + std::to_string(t.vertex_count()) + " tree=" + std::to_string(index) +
         " code=" + canonical_code(t).value;
}

LemmaCheckRecord make_record(LemmaId id, std::string instance, double lhs, double rhs,
                             bool strict, bool same_class) {
  LemmaCheckRecord r;
  r.lemma = id;
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.strict = strict;
  const bool holds = strict ? (lhs - rhs > kStrictMargin) : (lhs >= rhs - kWeakSlack);
  r.pass = holds && same_class;
  if (!same_class) r.instance += " left-class";
  return r;
}

void validate_range(OrderRange range) {
  if (range.min_n < 1 || range.max_n > kMaxEnumerationOrder || range.min_n > range.max_n) {
    throw Error(ErrorCode::OutOfRange, "lemma order range must lie in 1.." +
                                           std::to_string(kMaxEnumerationOrder));
  }
}

template <typename Visit>
void for_each_tree_in(OrderRange range, Visit&& visit) {
  for (std::size_t n = range.min_n; n <= range.max_n; ++n) {
    std::size_t index = 0;
    for_each_tree(EnumSpec{n, std::nullopt, std::nullopt}, [&](const Tree& t) {
      visit(t, index++);
      return true;
    });
  }
}

std::vector<LemmaCheckRecord> gap_grid() {
  std::vector<LemmaCheckRecord> out;
  for (int k = 1; k <= 6; ++k) {
    for (int step = 30; step < 200; ++step) {
      const double x0 = step / 10.0;
      const double x1 = (step + 1) / 10.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "k=%d x=%.1f->%.1f", k, x0, x1);
      out.push_back(make_record(LemmaId::GapMonotonicity, buf, gap_function(x0, k),
                                gap_function(x1, k), true, true));
    }
  }
  return out;
}

// Contract edge `through` (one of v's two edges), then hang a new leaf on x.
std::vector<LemmaCheckRecord> interior_degree_two(OrderRange range) {
  std::vector<LemmaCheckRecord> out;
  for_each_tree_in(range, [&](const Tree& t, std::size_t index) {
    const std::size_t n = t.vertex_count();
    const double before = abs_index(t).value;
    const auto leaves = pendent_vertices(t);
    for (std::size_t vi = 0; vi < n; ++vi) {
      const auto v = static_cast<Vertex>(vi);
      if (t.degree(v) != 2) continue;
      const auto nbrs = t.neighbors(v);
      if (t.degree(nbrs[0]) < 2 || t.degree(nbrs[1]) < 2) continue;
      for (Vertex u : nbrs) {
        const Contraction c = contract_edge(t, Edge(u, v));
        for (Vertex x : leaves) {
          const Tree after = add_pendent_vertex(c.tree, c.label_map[x]);
          const bool same = after.vertex_count() == n && leaf_count(after) == leaves.size();
          out.push_back(make_record(
              LemmaId::InteriorDegreeTwo,
              tree_text(t, index) + " v=" + std::to_string(v) + " u=" + std::to_string(u) +
                  " x=" + std::to_string(x),
              before, abs_index(after).value, false, same));
        }
      }
    }
  });
  return out;
}

std::vector<LemmaCheckRecord> short_pendent_edge(OrderRange range) {
  std::vector<LemmaCheckRecord> out;
  for_each_tree_in(range, [&](const Tree& t, std::size_t index) {
    const auto e2 = e2_edges(t);
    if (e2.empty()) return;
    const double before = abs_index(t).value;
    const auto leaves = pendent_vertices(t);
    for (Vertex leaf : leaves) {
      if (t.degree(t.neighbors(leaf)[0]) < 3) continue;
      for (const Edge& e : e2) {
        const Contraction c = contract_edge(t, e);
        const Tree after = add_pendent_vertex(c.tree, c.label_map[leaf]);
        const bool same =
            after.vertex_count() == t.vertex_count() && leaf_count(after) == leaves.size();
        out.push_back(make_record(LemmaId::ShortPendentEdge,
                                  tree_text(t, index) + " leaf=" + std::to_string(leaf) +
                                      " e2=" + edge_text(e),
                                  before, abs_index(after).value, true, same));
      }
    }
  });
  return out;
}

std::vector<int> sorted_neighbor_degrees(const Tree& t, Vertex v) {
  std::vector<int> d;
  for (Vertex y : t.neighbors(v)) d.push_back(t.degree(y));
  std::sort(d.begin(), d.end());
  return d;
}

struct SweepResult {
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t combinations = 0;
  bool same_class = true;
};

// Replaces v by every shape and every leaf assignment (or just the defaults
// when s > 6) and keeps the largest ABS reached.
SweepResult replacement_sweep(const Tree& t, Vertex v, std::size_t n, std::size_t k) {
  SweepResult r;
  const int s = t.degree(v);
  const auto check = [&](const Tree& after) {
    r.worst = std::max(r.worst, abs_index(after).value);
    r.same_class = r.same_class && after.vertex_count() == n && leaf_count(after) == k;
    ++r.combinations;
  };
  if (s > 6) {
    check(replace_with_3regular(t, v));
    return r;
  }
  std::vector<Vertex> nbrs(t.neighbors(v).begin(), t.neighbors(v).end());
  for (const Tree& shape : k3_regular_shapes(s)) {
    const auto leaves = shape_leaves(shape);
    std::vector<Vertex> perm = nbrs;
    do {
      LeafAssignment a;
      for (std::size_t i = 0; i < leaves.size(); ++i) a.emplace_back(leaves[i], perm[i]);
      check(replace_with_3regular(t, v, shape, a));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

std::vector<LemmaCheckRecord> degree_four_replace(OrderRange range) {
  std::vector<LemmaCheckRecord> out;
  for_each_tree_in(range, [&](const Tree& t, std::size_t index) {
    const auto e2 = e2_edges(t);
    if (e2.empty()) return;
    const double before = abs_index(t).value;
    const std::size_t k = leaf_count(t);
    for (std::size_t vi = 0; vi < t.vertex_count(); ++vi) {
      const auto v = static_cast<Vertex>(vi);
      if (t.degree(v) != 4) continue;
      const auto d = sorted_neighbor_degrees(t, v);
      if (d[2] > 3 || d[3] > 5) continue;
      for (const Edge& e : e2) {
        const Contraction c = contract_edge(t, e);
        const SweepResult r = replacement_sweep(c.tree, c.label_map[v], t.vertex_count(), k);
        out.push_back(make_record(LemmaId::DegreeFourReplace,
                                  tree_text(t, index) + " v=" + std::to_string(v) +
                                      " e2=" + edge_text(e) +
                                      " combinations=" + std::to_string(r.combinations),
                                  before, r.worst, true, r.same_class));
      }
    }
  });
  return out;
}

// Contracts the given E_2 edges one after another, following labels.
Contraction contract_all(const Tree& t, const std::vector<Edge>& edges) {
  std::vector<Vertex> map(t.vertex_count());
  std::iota(map.begin(), map.end(), 0);
  Tree cur = t;
  for (const Edge& e : edges) {
    Contraction c = contract_edge(cur, Edge(map[e.u], map[e.v]));
    for (auto& m : map) m = c.label_map[m];
    cur = std::move(c.tree);
  }
  return Contraction{std::move(cur), std::move(map)};
}

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<LemmaCheckRecord> high_degree_replace(OrderRange range) {
  std::vector<LemmaCheckRecord> out;
  for_each_tree_in(range, [&](const Tree& t, std::size_t index) {
    const auto e2 = e2_edges(t);
    const double before = abs_index(t).value;
    const std::size_t k = leaf_count(t);
    for (std::size_t vi = 0; vi < t.vertex_count(); ++vi) {
      const auto v = static_cast<Vertex>(vi);
      const int s = t.degree(v);
      if (s < 4 || e2.size() < static_cast<std::size_t>(s - 3)) continue;
      const auto d = sorted_neighbor_degrees(t, v);
      const int second_largest = d[d.size() - 2];
      const bool case_i = s >= 5 && second_largest <= 3;
      const bool case_ii = s >= 12 && second_largest <= 4;
      if (!case_i && !case_ii) continue;
      for_each_subset(e2.size(), static_cast<std::size_t>(s - 3),
                      [&](const std::vector<std::size_t>& pick) {
                        std::vector<Edge> chosen;
                        std::string label;
                        for (std::size_t i : pick) {
                          chosen.push_back(e2[i]);
                          label += (label.empty() ? "" : "+") + edge_text(e2[i]);
                        }
                        const Contraction c = contract_all(t, chosen);
                        const SweepResult r =
                            replacement_sweep(c.tree, c.label_map[v], t.vertex_count(), k);
                        out.push_back(make_record(
                            LemmaId::HighDegreeReplace,
                            tree_text(t, index) + " v=" + std::to_string(v) + " s=" +
                                std::to_string(s) + " e2=" + label +
                                " combinations=" + std::to_string(r.combinations),
                            before, r.worst, true, r.same_class));
                      });
    }
  });
  return out;
}

std::vector<LemmaCheckRecord> e2_count_bound(OrderRange range) {
  std::vector<LemmaCheckRecord> out;
  for_each_tree_in(range, [&](const Tree& t, std::size_t index) {
    const int k = static_cast<int>(leaf_count(t));
    if (!in_theorem_range(t.vertex_count(), k)) return;
    const auto e2 = e2_edges(t);
    const auto on_paths = pendent_path_edges(t);
    if (!std::includes(on_paths.begin(), on_paths.end(), e2.begin(), e2.end())) return;
    std::size_t excess = 0;
    for (const auto& [deg, count] : degree_counts(t)) {
      if (deg >= 4) excess += static_cast<std::size_t>(deg - 3) * count;
    }
    out.push_back(make_record(LemmaId::E2CountBound, tree_text(t, index),
                              static_cast<double>(e2.size()), static_cast<double>(excess), false,
                              true));
  });
  return out;
}

}  // namespace

std::vector<LemmaCheckRecord> lemma_suite(LemmaId id, OrderRange range) {
  if (id == LemmaId::GapMonotonicity) return gap_grid();
  validate_range(range);
  switch (id) {
    case LemmaId::InteriorDegreeTwo: return interior_degree_two(range);
    case LemmaId::ShortPendentEdge: return short_pendent_edge(range);
    case LemmaId::DegreeFourReplace: return degree_four_replace(range);
    case LemmaId::HighDegreeReplace: return high_degree_replace(range);
    case LemmaId::E2CountBound: return e2_count_bound(range);
    case LemmaId::GapMonotonicity: break;
  }
  return gap_grid();
}

}  // namespace abstree
