#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "abstree/tree.hpp"

namespace abstree {

// Multiset of unordered endpoint-degree pairs {a, b}, keyed with a <= b.
// Every index below is a sum of per-edge terms that depend only on the
// pair, so the histogram is all they need. It can also be filled by hand to
// score graphs that are not trees.
class EdgeTypeHistogram {
 public:
  using Key = std::pair<int, int>;

  static EdgeTypeHistogram from_tree(const Tree& tree);

  // Throws DegenerateEdge when a degree is below 1.
  void add(int a, int b, std::uint64_t count = 1);

  std::uint64_t count(int a, int b) const;
  std::uint64_t total() const noexcept;
  const std::map<Key, std::uint64_t>& counts() const noexcept { return counts_; }

  EdgeTypeHistogram& operator+=(const EdgeTypeHistogram& other);
  friend EdgeTypeHistogram operator+(EdgeTypeHistogram a, const EdgeTypeHistogram& b) {
    a += b;
    return a;
  }
  friend bool operator==(const EdgeTypeHistogram&, const EdgeTypeHistogram&) = default;

 private:
  std::map<Key, std::uint64_t> counts_;
};

enum class IndexFamily {
  ABS,
  Randic,
  SumConnectivity,
  GeneralSumConnectivity,
  Harmonic,
  ABC,
};

class IndexKind {
 public:
  static IndexKind abs() { return IndexKind(IndexFamily::ABS, 0.0); }
  static IndexKind randic() { return IndexKind(IndexFamily::Randic, 0.0); }
  static IndexKind sum_connectivity() { return IndexKind(IndexFamily::SumConnectivity, 0.0); }
  static IndexKind harmonic() { return IndexKind(IndexFamily::Harmonic, 0.0); }
  static IndexKind abc() { return IndexKind(IndexFamily::ABC, 0.0); }
  // Throws BadParameters for a non-finite alpha.
  static IndexKind general_sum_connectivity(double alpha);

  IndexFamily family() const noexcept { return family_; }
  double alpha() const noexcept { return alpha_; }

  // CLI spelling: abs, randic, sumconn, gensumconn, harmonic, abc.
  std::string_view name() const noexcept;

  friend bool operator==(const IndexKind&, const IndexKind&) = default;

 private:
  IndexKind(IndexFamily family, double alpha) : family_(family), alpha_(alpha) {}

  IndexFamily family_;
  double alpha_;
};

// alpha is required for gensumconn and rejected otherwise.
IndexKind parse_index_kind(std::string_view name, std::optional<double> alpha = std::nullopt);

struct IndexValue {
  double value = 0.0;
  IndexKind kind = IndexKind::abs();
};

// Contribution of a single edge whose endpoints have degrees a and b.
double edge_term(int a, int b, const IndexKind& kind);

// Kahan-compensated sum of count * edge_term over the histogram.
IndexValue index_value(const EdgeTypeHistogram& histogram, const IndexKind& kind);

IndexValue index_value(const Tree& tree, const IndexKind& kind);

IndexValue abs_index(const Tree& tree);

// Values closer than this are treated as equal.
inline constexpr double kIndexTolerance = 1e-9;

}  // namespace abstree
