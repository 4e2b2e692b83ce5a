#include "stralg/quiver.hpp"

#include <algorithm>
#include <cassert>

namespace stralg {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw Error(Errc::empty_quiver, "quiver needs at least one vertex");
  for (int i = 0; i < (int)vertices_.size(); ++i) {
    if (vertices_[i].empty())
      throw Error(Errc::bad_input, "empty vertex name");
    if (!vertex_by_name_.emplace(vertices_[i], i).second)
      throw Error(Errc::bad_input, "duplicate vertex name '" + vertices_[i] + "'");
  }
  for (const auto& a : arrows) {
    if (a.name.empty()) throw Error(Errc::bad_input, "empty arrow name");
    if (vertex_by_name_.count(a.name) || arrow_by_name_.count(a.name))
      throw Error(Errc::bad_input, "duplicate name '" + a.name + "'");
    auto from = vertex_by_name_.find(a.from);
    auto to = vertex_by_name_.find(a.to);
    if (from == vertex_by_name_.end())
      throw Error(Errc::unknown_name, "arrow '" + a.name + "': unknown vertex '" + a.from + "'");
    if (to == vertex_by_name_.end())
      throw Error(Errc::unknown_name, "arrow '" + a.name + "': unknown vertex '" + a.to + "'");
    arrow_by_name_.emplace(a.name, (int)names_.size());
    names_.push_back(a.name);
    tails_.push_back(from->second);
    heads_.push_back(to->second);
  }
  if (names_.size() > 0xffff)
    throw Error(Errc::bad_input, "too many arrows");
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::arrows_with_tail(int v) const {
  std::vector<int> r;
  for (int a = 0; a < num_arrows(); ++a)
    if (tails_[a] == v) r.push_back(a);
  return r;
}

std::vector<int> Quiver::arrows_with_head(int v) const {
  std::vector<int> r;
  for (int a = 0; a < num_arrows(); ++a)
    if (heads_[a] == v) r.push_back(a);
  return r;
}

std::vector<std::pair<int, int>> Quiver::vertex_degrees() const {
  std::vector<std::pair<int, int>> deg(num_vertices(), {0, 0});
  for (int a = 0; a < num_arrows(); ++a) {
    deg[heads_[a]].first++;
    deg[tails_[a]].second++;
  }
  return deg;
}

Path Path::trivial(const Quiver& Q, int v) {
  assert(v >= 0 && v < Q.num_vertices());
  (void)Q;
  Path p;
  p.tail_ = p.head_ = v;
  return p;
}

Path Path::of_arrow(const Quiver& Q, int a) {
  Path p;
  p.word_ = {(uint16_t)a};
  p.tail_ = Q.tail(a);
  p.head_ = Q.head(a);
  return p;
}

Path Path::of_word(const Quiver& Q, const std::vector<uint16_t>& word) {
  if (word.empty()) throw Error(Errc::bad_input, "empty word; use trivial()");
  Path p;
  p.word_ = word;
  p.head_ = Q.head(word.front());
  p.tail_ = Q.tail(word.back());
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (Q.tail(word[i]) != Q.head(word[i + 1]))
      throw Error(Errc::bad_input, "word is not composable");
  return p;
}

int Path::left_arrow() const {
  if (word_.empty())
    throw Error(Errc::trivial_path_has_no_arrows, "trivial path has no arrows");
  return word_.front();
}

int Path::right_arrow() const {
  if (word_.empty())
    throw Error(Errc::trivial_path_has_no_arrows, "trivial path has no arrows");
  return word_.back();
}

std::string Path::str(const Quiver& Q) const {
  if (word_.empty()) return "e_" + Q.vertex_name(tail_);
  std::string s;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += "*";
    s += Q.arrow_name(word_[i]);
  }
  return s;
}

std::optional<Path> compose(const Quiver& Q, const Path& p, const Path& q) {
  if (p.tail() != q.head()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<uint16_t> word = p.word();
  word.insert(word.end(), q.word().begin(), q.word().end());
  return Path::of_word(Q, word);
}

PathParts path_parts(const Quiver& Q, const Path& p) {
  if (p.is_trivial())
    throw Error(Errc::trivial_path_has_no_arrows, "trivial path has no subpath parts");
  PathParts parts;
  parts.right_arrow = p.right_arrow();
  parts.left_arrow = p.left_arrow();
  const auto& w = p.word();
  for (size_t len = 1; len <= w.size(); ++len) {
    parts.right_subpaths.push_back(
        Path::of_word(Q, std::vector<uint16_t>(w.end() - len, w.end())));
    parts.left_subpaths.push_back(
        Path::of_word(Q, std::vector<uint16_t>(w.begin(), w.begin() + len)));
  }
  return parts;
}

Path reverse_path(const Quiver& reversed, const Path& p) {
  if (p.is_trivial()) return Path::trivial(reversed, p.tail());
  std::vector<uint16_t> w(p.word().rbegin(), p.word().rend());
  return Path::of_word(reversed, w);
}

} // namespace stralg
