#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stralg/error.hpp"

namespace stralg {

struct ArrowSpec {
  std::string name;
  std::string from;
  std::string to;
};

/// A finite quiver: ordered vertex names and ordered arrows with tail and
/// head. Names are unique across vertices and across arrows. Immutable.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  int num_vertices() const { return (int)vertices_.size(); }
  int num_arrows() const { return (int)names_.size(); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const std::string& arrow_name(int a) const { return names_[a]; }
  int tail(int a) const { return tails_[a]; }
  int head(int a) const { return heads_[a]; }

  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;

  std::vector<int> arrows_with_tail(int v) const;
  std::vector<int> arrows_with_head(int v) const;
  /// Per-vertex (in-degree, out-degree).
  std::vector<std::pair<int, int>> vertex_degrees() const;

  /// Same vertex and arrow lists in the same order.
  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && names_ == o.names_ && tails_ == o.tails_ &&
           heads_ == o.heads_;
  }
  bool operator!=(const Quiver& o) const { return !(*this == o); }

private:
  std::vector<std::string> vertices_;
  std::vector<std::string> names_;
  std::vector<int> tails_, heads_;
  std::map<std::string, int> vertex_by_name_, arrow_by_name_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path: trivial e_v, or a word of composable arrows stored in written
/// order a_n ... a_1 (index 0 is the left arrow, the one applied last).
class Path {
public:
  static Path trivial(const Quiver& Q, int v);
  static Path of_arrow(const Quiver& Q, int a);
  static Path of_word(const Quiver& Q, const std::vector<uint16_t>& word);

  bool is_trivial() const { return word_.empty(); }
  int length() const { return (int)word_.size(); }
  int head() const { return head_; }
  int tail() const { return tail_; }
  const std::vector<uint16_t>& word() const { return word_; }

  /// Left arrow a_n; throws on trivial paths.
  int left_arrow() const;
  /// Right arrow a_1; throws on trivial paths.
  int right_arrow() const;

  /// Degree-first order, then lexicographic on the written word; trivial
  /// paths ordered by vertex.
  bool operator<(const Path& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    if (word_.empty()) return tail_ < o.tail_;
    return word_ < o.word_;
  }
  bool operator==(const Path& o) const {
    return tail_ == o.tail_ && word_ == o.word_;
  }
  bool operator!=(const Path& o) const { return !(*this == o); }

  std::string str(const Quiver& Q) const;

private:
  int tail_ = 0, head_ = 0;
  std::vector<uint16_t> word_;
};

/// pq ("first q, then p") when t(p) = h(q); empty optional marks the zero
/// product in the path algebra.
std::optional<Path> compose(const Quiver& Q, const Path& p, const Path& q);

struct PathParts {
  int right_arrow;
  int left_arrow;
  std::vector<Path> right_subpaths; // length ascending, up to p itself
  std::vector<Path> left_subpaths;
};

PathParts path_parts(const Quiver& Q, const Path& p);

/// The same word read backwards, as a path of the reversed quiver.
Path reverse_path(const Quiver& reversed, const Path& p);

struct PathHash {
  size_t operator()(const Path& p) const {
    size_t h = (size_t)p.tail() * 1000003u + 17;
    for (uint16_t a : p.word()) h = h * 1000003u + a + 1;
    return h;
  }
};

} // namespace stralg
