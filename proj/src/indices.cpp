#include "abstree/indices.hpp"

#include <cmath>

namespace abstree {

EdgeTypeHistogram EdgeTypeHistogram::from_tree(const Tree& tree) {
  EdgeTypeHistogram h;
  for (const auto& e : tree.edges()) h.add(tree.degree(e.u), tree.degree(e.v));
  return h;
}

void EdgeTypeHistogram::add(int a, int b, std::uint64_t count) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::DegenerateEdge,
                "edge degrees must be at least 1, got {" + std::to_string(a) +
                    "," + std::to_string(b) + "}");
  }
  if (count == 0) return;
  if (b < a) std::swap(a, b);
  counts_[{a, b}] += count;
}

std::uint64_t EdgeTypeHistogram::count(int a, int b) const {
  if (b < a) std::swap(a, b);
  auto it = counts_.find({a, b});
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t EdgeTypeHistogram::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : counts_) sum += c;
  return sum;
}

EdgeTypeHistogram& EdgeTypeHistogram::operator+=(const EdgeTypeHistogram& other) {
  for (const auto& [key, c] : other.counts_) counts_[key] += c;
  return *this;
}

IndexKind IndexKind::general_sum_connectivity(double alpha) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::BadParameters, "alpha must be finite");
  }
  return IndexKind(IndexFamily::GeneralSumConnectivity, alpha);
}

std::string_view IndexKind::name() const noexcept {
  switch (family_) {
    case IndexFamily::ABS: return "abs";
    case IndexFamily::Randic: return "randic";
    case IndexFamily::SumConnectivity: return "sumconn";
    case IndexFamily::GeneralSumConnectivity: return "gensumconn";
    case IndexFamily::Harmonic: return "harmonic";
    case IndexFamily::ABC: return "abc";
  }
  return "unknown";
}

IndexKind parse_index_kind(std::string_view name, std::optional<double> alpha) {
  if (name == "gensumconn") {
    if (!alpha) {
      throw Error(ErrorCode::BadParameters, "gensumconn requires alpha");
    }
    return IndexKind::general_sum_connectivity(*alpha);
  }
  if (alpha) {
    throw Error(ErrorCode::BadParameters,
                "alpha only applies to gensumconn, not " + std::string(name));
  }
  if (name == "abs") return IndexKind::abs();
  if (name == "randic") return IndexKind::randic();
  if (name == "sumconn") return IndexKind::sum_connectivity();
  if (name == "harmonic") return IndexKind::harmonic();
  if (name == "abc") return IndexKind::abc();
  throw Error(ErrorCode::BadParameters, "unknown index kind '" + std::string(name) + "'");
}

double edge_term(int a, int b, const IndexKind& kind) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::DegenerateEdge, "edge degrees must be at least 1");
  }
  const double sum = static_cast<double>(a) + static_cast<double>(b);
  const double product = static_cast<double>(a) * static_cast<double>(b);
  switch (kind.family()) {
    case IndexFamily::ABS: return std::sqrt((sum - 2.0) / sum);
    case IndexFamily::Randic: return 1.0 / std::sqrt(product);
    case IndexFamily::SumConnectivity: return 1.0 / std::sqrt(sum);
    case IndexFamily::GeneralSumConnectivity: return std::pow(sum, kind.alpha());
    case IndexFamily::Harmonic: return 2.0 / sum;
    case IndexFamily::ABC: return std::sqrt((sum - 2.0) / product);
  }
  return 0.0;
}

IndexValue index_value(const EdgeTypeHistogram& histogram, const IndexKind& kind) {
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& [key, count] : histogram.counts()) {
    const double term = static_cast<double>(count) * edge_term(key.first, key.second, kind);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return IndexValue{sum, kind};
}

IndexValue index_value(const Tree& tree, const IndexKind& kind) {
  return index_value(EdgeTypeHistogram::from_tree(tree), kind);
}

IndexValue abs_index(const Tree& tree) {
  return index_value(tree, IndexKind::abs());
}

}  // namespace abstree
