// abstree command-line front end. Talks to the library through the C API only.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abstree/abstree.h"

namespace {

struct TreeDeleter {
  void operator()(abstree_tree* t) const { abstree_tree_free(t); }
};
struct ListDeleter {
  void operator()(abstree_tree_list* l) const { abstree_tree_list_free(l); }
};
struct ReportDeleter {
  void operator()(abstree_report* r) const { abstree_report_free(r); }
};
struct RecordsDeleter {
  void operator()(abstree_lemma_records* r) const { abstree_lemma_records_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { abstree_string_free(s); }
};

using TreePtr = std::unique_ptr<abstree_tree, TreeDeleter>;
using ListPtr = std::unique_ptr<abstree_tree_list, ListDeleter>;
using ReportPtr = std::unique_ptr<abstree_report, ReportDeleter>;
using RecordsPtr = std::unique_ptr<abstree_lemma_records, RecordsDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Library failure; reported with exit code 1.
struct DomainError {
  std::string message;
};

// Bad flag combination caught after parsing; exit code 2.
struct UsageError {
  std::string message;
};

void check(abstree_status status) {
  if (status != ABSTREE_OK) {
    throw DomainError{std::string(abstree_status_name(status)) + ": " + abstree_last_error()};
  }
}

std::string fixed9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

std::string take(char* s) {
  StringPtr owned(s);
  return std::string(owned.get());
}

struct Options {
  std::string in;
  std::string out;
  std::string kind;
  std::optional<double> alpha;
  std::optional<int> n;
  std::optional<int> k;
  bool chemical = false;
  bool count_only = false;
  std::string family;
  std::string legs;
  std::string lemma;
  std::string format = "csv";
  double tolerance = 1e-9;
  unsigned threads = 0;
  long long seed = 0;
  std::string op;
  std::string edge;
  std::optional<int> vertex;
  std::string left;
  int shape = 0;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError{"cannot open input file '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_output(const Options& opt, const std::string& data) {
  if (opt.out.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw DomainError{"cannot open output file '" + opt.out + "'"};
  f << data;
}

std::vector<int32_t> parse_ints(const std::string& csv, const char* flag) {
  std::vector<int32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError{std::string(flag) + ": '" + csv + "' is not a comma-separated integer list"};
    }
  }
  return out;
}

TreePtr load_tree(const Options& opt) {
  const std::string text = read_input(opt.in);
  abstree_tree* raw = nullptr;
  check(abstree_tree_parse(text.c_str(), &raw));
  return TreePtr(raw);
}

std::string list_text(const abstree_tree_list* list) {
  char* raw = nullptr;
  check(abstree_tree_list_to_text(list, &raw));
  return take(raw);
}

int run_index(const Options& opt) {
  std::vector<abstree_index_kind> kinds;
  if (!opt.kind.empty()) {
    abstree_index_kind kind;
    check(abstree_index_kind_parse(opt.kind.c_str(), &kind));
    const bool parametric = kind == ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY;
    if (parametric && !opt.alpha) throw UsageError{"--alpha is required with --kind gensumconn"};
    if (!parametric && opt.alpha) throw UsageError{"--alpha only applies to --kind gensumconn"};
    kinds.push_back(kind);
  } else {
    kinds = {ABSTREE_INDEX_ABS, ABSTREE_INDEX_RANDIC, ABSTREE_INDEX_SUM_CONNECTIVITY,
             ABSTREE_INDEX_HARMONIC, ABSTREE_INDEX_ABC};
    if (opt.alpha) kinds.push_back(ABSTREE_INDEX_GENERAL_SUM_CONNECTIVITY);
  }
  TreePtr tree = load_tree(opt);
  std::string data = opt.format == "csv" ? "kind,value\n" : "";
  for (auto kind : kinds) {
    double value = 0;
    check(abstree_index(tree.get(), kind, opt.alpha.value_or(0.0), &value));
    if (opt.format == "csv") {
      data += std::string(abstree_index_kind_name(kind)) + "," + fixed9(value) + "\n";
    } else {
      char line[96];
      std::snprintf(line, sizeof line, "%-10s %s\n", abstree_index_kind_name(kind),
                    fixed9(value).c_str());
      data += line;
    }
  }
  write_output(opt, data);
  return 0;
}

int run_enumerate(const Options& opt) {
  const int k = opt.k.value_or(-1);
  const int cap = opt.chemical ? 4 : -1;
  if (opt.count_only) {
    uint64_t count = 0;
    check(abstree_enumerate_count(static_cast<size_t>(*opt.n), k, cap, &count));
    write_output(opt, std::to_string(count) + "\n");
    return 0;
  }
  abstree_tree_list* raw = nullptr;
  check(abstree_enumerate(static_cast<size_t>(*opt.n), k, cap, &raw));
  ListPtr list(raw);
  write_output(opt, list_text(list.get()));
  return 0;
}

int run_family(const Options& opt) {
  const auto need_n = [&] {
    if (!opt.n) throw UsageError{"--family " + opt.family + " requires --n"};
    return static_cast<size_t>(*opt.n);
  };
  const auto need_k = [&] {
    if (!opt.k) throw UsageError{"--family " + opt.family + " requires --k"};
    return *opt.k;
  };
  std::string data;
  if (opt.family == "path" || opt.family == "star" || opt.family == "spider") {
    abstree_tree* raw = nullptr;
    if (opt.family == "path") {
      check(abstree_make_path(need_n(), &raw));
    } else if (opt.family == "star") {
      check(abstree_make_star(need_n(), &raw));
    } else {
      if (opt.legs.empty()) throw UsageError{"--family spider requires --legs"};
      const auto legs = parse_ints(opt.legs, "--legs");
      check(abstree_make_spider(legs.data(), legs.size(), &raw));
    }
    TreePtr tree(raw);
    char* text = nullptr;
    check(abstree_tree_to_text(tree.get(), &text));
    data = take(text);
  } else {
    abstree_tree_list* raw = nullptr;
    if (opt.family == "k3regular") {
      check(abstree_k3_regular_shapes(need_k(), &raw));
    } else {
      check(abstree_tstar_family(need_n(), need_k(), &raw));
    }
    ListPtr list(raw);
    data = list_text(list.get());
  }
  write_output(opt, data);
  return 0;
}

int run_transform(const Options& opt) {
  TreePtr tree = load_tree(opt);
  abstree_tree* raw = nullptr;
  if (opt.op == "contract") {
    if (opt.edge.empty()) throw UsageError{"--op contract requires --edge U,V"};
    const auto e = parse_ints(opt.edge, "--edge");
    if (e.size() != 2) throw UsageError{"--edge expects exactly two labels"};
    check(abstree_contract_edge(tree.get(), e[0], e[1], &raw));
  } else if (opt.op == "split") {
    if (!opt.vertex || opt.left.empty()) {
      throw UsageError{"--op split requires --vertex and --left"};
    }
    const auto left = parse_ints(opt.left, "--left");
    // The right side is every other neighbor.
    int32_t degree = 0;
    check(abstree_tree_degree(tree.get(), *opt.vertex, &degree));
    std::vector<int32_t> edges(2 * abstree_tree_edge_count(tree.get()));
    abstree_tree_edges(tree.get(), edges.data(), edges.size());
    std::vector<int32_t> right;
    for (size_t i = 0; i < edges.size(); i += 2) {
      int32_t other = -1;
      if (edges[i] == *opt.vertex) other = edges[i + 1];
      if (edges[i + 1] == *opt.vertex) other = edges[i];
      if (other >= 0 && std::find(left.begin(), left.end(), other) == left.end()) {
        right.push_back(other);
      }
    }
    check(abstree_split_vertex(tree.get(), *opt.vertex, left.data(), left.size(), right.data(),
                               right.size(), &raw));
  } else {
    if (!opt.vertex) throw UsageError{"--op replace requires --vertex"};
    int32_t degree = 0;
    check(abstree_tree_degree(tree.get(), *opt.vertex, &degree));
    if (opt.shape == 0) {
      check(abstree_replace_with_3regular(tree.get(), *opt.vertex, nullptr, nullptr, 0, &raw));
    } else {
      abstree_tree_list* shapes_raw = nullptr;
      check(abstree_k3_regular_shapes(degree, &shapes_raw));
      ListPtr shapes(shapes_raw);
      const abstree_tree* shape = abstree_tree_list_get(shapes.get(), static_cast<size_t>(opt.shape));
      if (!shape) {
        throw DomainError{"OutOfRange: only " + std::to_string(abstree_tree_list_size(shapes.get())) +
                          " shapes exist for degree " + std::to_string(degree)};
      }
      check(abstree_replace_with_3regular(tree.get(), *opt.vertex, shape, nullptr, 0, &raw));
    }
  }
  TreePtr result(raw);
  char* text = nullptr;
  check(abstree_tree_to_text(result.get(), &text));
  write_output(opt, take(text));
  return 0;
}

int run_verify(const Options& opt) {
  const size_t n = static_cast<size_t>(*opt.n);
  std::vector<int> ks;
  if (opt.k) {
    ks.push_back(*opt.k);
  } else {
    for (int k = 3; abstree_in_theorem_range(n, k); ++k) ks.push_back(k);
    if (ks.empty()) throw DomainError{"OutOfRange: no k satisfies 3 <= k <= floor((n+2)/3)"};
  }
  const bool csv = opt.format == "csv";
  std::string data = csv ? "n,k,formula,bruteforce,verdict\n" : "";
  for (int k : ks) {
    if (!abstree_in_theorem_range(n, k)) {
      double minimum = 0;
      size_t argmin = 0;
      check(abstree_min_abs_bruteforce(n, k, opt.chemical, opt.threads, opt.tolerance, &minimum,
                                       &argmin));
      if (csv) {
        data += std::to_string(n) + "," + std::to_string(k) + ",NA," + fixed9(minimum) +
                ",not-applicable\n";
      } else {
        data += "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                (opt.chemical ? " (chemical)" : "") + "\n  formula      not applicable\n" +
                "  bruteforce   " + fixed9(minimum) + "\n  argmin       " +
                std::to_string(argmin) + " trees\n  verdict      not-applicable\n";
      }
      continue;
    }
    abstree_report* raw = nullptr;
    check(abstree_verify(n, k, opt.chemical, opt.tolerance, opt.threads, &raw));
    ReportPtr report(raw);
    const char* verdict = abstree_report_pass(report.get()) ? "pass" : "fail";
    if (csv) {
      data += std::to_string(n) + "," + std::to_string(k) + "," +
              fixed9(abstree_report_formula(report.get())) + "," +
              fixed9(abstree_report_bruteforce(report.get())) + "," + verdict + "\n";
    } else {
      data += "n=" + std::to_string(n) + " k=" + std::to_string(k) +
              (opt.chemical ? " (chemical)" : "") + "\n" +
              "  trees        " + std::to_string(abstree_report_class_size(report.get())) + "\n" +
              "  formula      " + fixed9(abstree_report_formula(report.get())) + "\n" +
              "  bruteforce   " + fixed9(abstree_report_bruteforce(report.get())) + "\n" +
              "  argmin       " + std::to_string(abstree_report_argmin_count(report.get())) +
              " trees, extremal family " +
              std::to_string(abstree_report_tstar_count(report.get())) + " trees\n" +
              "  verdict      " + verdict + " (" + abstree_report_reason(report.get()) + ")\n";
    }
  }
  write_output(opt, data);
  return 0;
}

int run_lemmas(const Options& opt) {
  const size_t max_n = opt.n ? static_cast<size_t>(*opt.n) : 12;
  abstree_lemma_records* raw = nullptr;
  check(abstree_lemma_suite(opt.lemma.c_str(), 1, max_n, &raw));
  RecordsPtr records(raw);
  const size_t count = abstree_lemma_records_size(records.get());
  const bool csv = opt.format == "csv";
  std::string data = csv ? "lemma,instance,lhs,rhs,outcome\n" : "";
  size_t passed = 0;
  for (size_t i = 0; i < count; ++i) {
    const bool pass = abstree_lemma_record_pass(records.get(), i);
    passed += pass;
    const std::string lhs = fixed9(abstree_lemma_record_lhs(records.get(), i));
    const std::string rhs = fixed9(abstree_lemma_record_rhs(records.get(), i));
    if (csv) {
      data += std::string(abstree_lemma_record_lemma(records.get(), i)) + "," +
              abstree_lemma_record_instance(records.get(), i) + "," + lhs + "," + rhs + "," +
              (pass ? "pass" : "fail") + "\n";
    } else if (!pass) {
      data += std::string("FAIL ") + abstree_lemma_record_instance(records.get(), i) + "  lhs=" +
              lhs + " rhs=" + rhs + (abstree_lemma_record_strict(records.get(), i) ? " (strict)" : "") +
              "\n";
    }
  }
  if (!csv) {
    data += "lemma " + opt.lemma + ": " + std::to_string(passed) + "/" + std::to_string(count) +
            " instances hold (orders up to " + std::to_string(max_n) + ")\n";
  }
  write_output(opt, data);
  return 0;
}

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out, "Write output to FILE instead of stdout");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "text"}));
  cmd->add_option("--seed", opt.seed, "Reserved; output is deterministic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological indices of trees and extremal ABS verification"};
  app.require_subcommand(1, 1);
  Options opt;

  auto* index = app.add_subcommand("index", "Compute topological indices of a tree");
  index->add_option("--in", opt.in, "Edge-list file (default: stdin)");
  index->add_option("--kind", opt.kind, "Index kind (default: all)")
      ->check(CLI::IsMember({"abs", "randic", "sumconn", "gensumconn", "harmonic", "abc"}));
  index->add_option("--alpha", opt.alpha, "Exponent for gensumconn");
  add_output_flags(index, opt);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate non-isomorphic trees");
  enumerate->add_option("--n", opt.n, "Vertex count")->required();
  enumerate->add_option("--k", opt.k, "Number of pendent vertices");
  enumerate->add_flag("--chemical", opt.chemical, "Only trees with maximum degree <= 4");
  enumerate->add_flag("--count-only", opt.count_only, "Print only the number of trees");
  add_output_flags(enumerate, opt);

  auto* family = app.add_subcommand("family", "Emit a named tree family");
  family->add_option("--family", opt.family, "Family name")
      ->required()
      ->check(CLI::IsMember({"path", "star", "spider", "k3regular", "tstar"}));
  family->add_option("--n", opt.n, "Vertex count");
  family->add_option("--k", opt.k, "Leaf count");
  family->add_option("--legs", opt.legs, "Spider leg lengths, e.g. 2,2,2");
  add_output_flags(family, opt);

  auto* transform = app.add_subcommand("transform", "Apply a tree transformation");
  transform->add_option("--in", opt.in, "Edge-list file (default: stdin)");
  transform->add_option("--op", opt.op, "Transformation")
      ->required()
      ->check(CLI::IsMember({"contract", "split", "replace"}));
  transform->add_option("--edge", opt.edge, "Edge U,V to contract");
  transform->add_option("--vertex", opt.vertex, "Vertex to split or replace");
  transform->add_option("--left", opt.left, "Neighbors kept by the split vertex, e.g. 1,2");
  transform->add_option("--shape", opt.shape, "Index into the (s,3)-regular shapes (0 = path backbone)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(transform, opt);

  auto* verify = app.add_subcommand("verify", "Check the minimum-ABS closed form by brute force");
  verify->add_option("--n", opt.n, "Vertex count")->required();
  verify->add_option("--k", opt.k, "Leaf count (default: every k in range)");
  verify->add_flag("--chemical", opt.chemical, "Restrict to chemical trees");
  verify->add_option("--tolerance", opt.tolerance, "Absolute tolerance")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  add_output_flags(verify, opt);

  auto* lemmas = app.add_subcommand("lemmas", "Run a lemma check suite");
  lemmas->add_option("--lemma", opt.lemma, "Lemma id")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "2.4", "2.5", "2.6"}));
  lemmas->add_option("--n", opt.n, "Largest tree order to sweep (default 12)");
  add_output_flags(lemmas, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*index) return run_index(opt);
    if (*enumerate) return run_enumerate(opt);
    if (*family) return run_family(opt);
    if (*transform) return run_transform(opt);
    if (*verify) return run_verify(opt);
    if (*lemmas) return run_lemmas(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
