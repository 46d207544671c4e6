#include "abstree/edgelist.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>

namespace abstree {
namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  // Returns nullopt at end of input.
  std::optional<std::int64_t> next_integer(const char* what) {
    skip_blank();
    if (pos_ >= text_.size()) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '#') {
      ++pos_;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_) + ": expected " + what +
                      ", got '" + std::string(token) + "'");
    }
    return value;
  }

  std::int64_t require_integer(const char* what) {
    auto v = next_integer(what);
    if (!v) {
      throw Error(ErrorCode::ParseError,
                  std::string("unexpected end of input, expected ") + what);
    }
    return *v;
  }

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  std::size_t line() const noexcept { return line_; }

 private:
  static bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

Tree read_block(TokenReader& in) {
  const std::size_t header_line = in.line();
  std::int64_t n = in.require_integer("vertex count n");
  std::int64_t m = in.require_integer("edge count m");
  if (n < 1 || m < 0 || n > (std::int64_t{1} << 24) || m > (std::int64_t{1} << 24)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(header_line) +
                                           ": bad header '" + std::to_string(n) +
                                           " " + std::to_string(m) + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t u = in.require_integer("vertex label");
    std::int64_t v = in.require_integer("vertex label");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::BadLabel, "line " + std::to_string(in.line()) +
                                           ": label out of range in edge " +
                                           std::to_string(u) + " " +
                                           std::to_string(v));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Tree::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  TokenReader in(text);
  if (in.at_end()) throw Error(ErrorCode::ParseError, "empty edge list");
  Tree tree = read_block(in);
  if (!in.at_end()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(in.line()) +
                    ": trailing data after the first tree");
  }
  return tree;
}

std::vector<Tree> parse_edge_lists(std::string_view text) {
  TokenReader in(text);
  std::vector<Tree> trees;
  while (!in.at_end()) trees.push_back(read_block(in));
  if (trees.empty()) throw Error(ErrorCode::ParseError, "empty edge list");
  return trees;
}

std::string format_edge_list(const Tree& tree) {
  std::string out = std::to_string(tree.vertex_count()) + " " +
                    std::to_string(tree.edge_count()) + "\n";
  for (const auto& e : tree.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string format_edge_lists(std::span<const Tree> trees) {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) out += '\n';
    out += format_edge_list(trees[i]);
  }
  return out;
}

}  // namespace abstree
