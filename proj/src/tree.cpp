#include "hopfrt/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "hopfrt/errors.hpp"

namespace hopfrt {

RootedTree::RootedTree() {
  static const std::shared_ptr<const Node> leaf = [] {
    auto n = std::make_shared<Node>();
    n->repr = "[]";
    return n;
  }();
  node_ = leaf;
}

RootedTree RootedTree::from_children(std::vector<RootedTree> children) {
  std::sort(children.begin(), children.end(), [](const RootedTree& a, const RootedTree& b) {
    return tree_order(a, b) == std::strong_ordering::greater;
  });
  auto n = std::make_shared<Node>();
  n->max_fertility = children.size();
  n->repr.reserve(2);
  n->repr.push_back('[');
  for (const auto& c : children) {
    n->vertex_count += c.vertex_count();
    n->max_fertility = std::max(n->max_fertility, c.max_fertility());
    n->repr += c.str();
  }
  n->repr.push_back(']');
  n->children = std::move(children);
  return RootedTree(std::move(n));
}

std::strong_ordering tree_order(const RootedTree& a, const RootedTree& b) {
  if (auto c = a.vertex_count() <=> b.vertex_count(); c != 0) return c;
  if (a.str() == b.str()) return std::strong_ordering::equal;
  const auto& ca = a.children();
  const auto& cb = b.children();
  const std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = tree_order(ca[i], cb[i]); c != 0) return c;
  }
  return ca.size() <=> cb.size();
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) { return tree_order(a, b); }

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(), std::greater<>());
  for (const auto& t : trees_) degree_ += t.vertex_count();
}

Forest operator*(const Forest& a, const Forest& b) {
  Forest r;
  r.trees_.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(r.trees_),
             std::greater<>());
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

std::string Forest::str() const {
  if (trees_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += '*';
    s += trees_[i].str();
  }
  return s;
}

namespace {

struct PartialCut {
  std::vector<EdgePath> edges;
  std::vector<RootedTree> pruned;
  RootedTree root;
};

// Every admissible cut except the full one; the first entry is the empty cut.
std::vector<PartialCut> non_full_cuts(const RootedTree& t) {
  std::vector<PartialCut> acc{PartialCut{{}, {}, RootedTree{}}};
  std::vector<std::vector<RootedTree>> root_children{{}};
  const auto& children = t.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    auto below = non_full_cuts(children[i]);
    std::vector<PartialCut> next;
    std::vector<std::vector<RootedTree>> next_children;
    for (std::size_t a = 0; a < acc.size(); ++a) {
      // Keep the edge above child i and cut inside it.
      for (const auto& b : below) {
        PartialCut pc = acc[a];
        for (auto e : b.edges) {
          e.insert(e.begin(), i);
          pc.edges.push_back(std::move(e));
        }
        pc.pruned.insert(pc.pruned.end(), b.pruned.begin(), b.pruned.end());
        auto rc = root_children[a];
        rc.push_back(b.root);
        next.push_back(std::move(pc));
        next_children.push_back(std::move(rc));
      }
      // Cut the edge above child i.
      PartialCut pc = acc[a];
      pc.edges.push_back(EdgePath{i});
      pc.pruned.push_back(children[i]);
      next.push_back(std::move(pc));
      next_children.push_back(root_children[a]);
    }
    acc = std::move(next);
    root_children = std::move(next_children);
  }
  for (std::size_t a = 0; a < acc.size(); ++a) acc[a].root = RootedTree::from_children(std::move(root_children[a]));
  return acc;
}

}  // namespace

std::vector<AdmissibleCut> admissible_cuts(const RootedTree& t) {
  auto partial = non_full_cuts(t);
  std::vector<AdmissibleCut> out;
  out.reserve(partial.size() + 1);
  out.push_back({Cut{Cut::Kind::empty, {}}, Forest{}, Forest{t}});
  out.push_back({Cut{Cut::Kind::full, {}}, Forest{t}, Forest{}});
  for (std::size_t k = 1; k < partial.size(); ++k) {
    auto& pc = partial[k];
    std::sort(pc.edges.begin(), pc.edges.end());
    out.push_back({Cut{Cut::Kind::proper, std::move(pc.edges)}, Forest{std::move(pc.pruned)}, Forest{pc.root}});
  }
  return out;
}

RootedTree canonicalize(const RootedTree& raw) {
  std::vector<RootedTree> kids;
  kids.reserve(raw.children().size());
  for (const auto& c : raw.children()) kids.push_back(canonicalize(c));
  return RootedTree::from_children(std::move(kids));
}

namespace {

std::mutex enum_mutex;
std::map<std::size_t, std::vector<RootedTree>> enum_cache{{0, {}}, {1, {RootedTree{}}}};

// Multisets of trees (as non-increasing sequences) with total degree `rem`,
// drawing from `pool` (ascending) at indices <= `max_index`.
void multisets(const std::vector<RootedTree>& pool, std::size_t rem, std::size_t max_index,
               std::vector<RootedTree>& prefix, std::vector<std::vector<RootedTree>>& out) {
  if (rem == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = max_index + 1; i-- > 0;) {
    if (pool[i].vertex_count() > rem) continue;
    prefix.push_back(pool[i]);
    multisets(pool, rem - pool[i].vertex_count(), i, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<RootedTree>> tree_multisets(std::size_t degree) {
  std::vector<RootedTree> pool;
  for (std::size_t k = 1; k <= degree; ++k) {
    auto ts = enumerate_trees(k);
    pool.insert(pool.end(), ts.begin(), ts.end());
  }
  std::vector<std::vector<RootedTree>> out;
  std::vector<RootedTree> prefix;
  if (pool.empty()) {
    out.emplace_back();
    return out;
  }
  multisets(pool, degree, pool.size() - 1, prefix, out);
  return out;
}

}  // namespace

std::vector<RootedTree> enumerate_trees(std::size_t n) {
  {
    std::lock_guard lock(enum_mutex);
    if (auto it = enum_cache.find(n); it != enum_cache.end()) return it->second;
  }
  std::vector<RootedTree> result;
  for (auto& kids : tree_multisets(n - 1)) result.push_back(RootedTree::from_children(std::move(kids)));
  std::sort(result.begin(), result.end());
  std::lock_guard lock(enum_mutex);
  return enum_cache.emplace(n, std::move(result)).first->second;
}

std::vector<Forest> enumerate_forests(std::size_t n) {
  std::vector<Forest> result;
  for (auto& ts : tree_multisets(n)) result.emplace_back(std::move(ts));
  std::sort(result.begin(), result.end());
  return result;
}

RootedTree b_plus(const Forest& f) { return RootedTree::from_children(f.trees()); }

Forest b_minus(const RootedTree& t) { return Forest{t.children()}; }

RootedTree ladder(std::size_t n) {
  RootedTree t;
  for (std::size_t k = 1; k < n; ++k) t = RootedTree::from_children({t});
  return t;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s, std::size_t pos = 0) : s_(s), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  RootedTree tree() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    std::vector<RootedTree> kids;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) throw ParseError("unterminated tree, expected ']'", pos_);
      if (s_[pos_] == ']') {
        ++pos_;
        break;
      }
      kids.push_back(tree());
    }
    return RootedTree::from_children(std::move(kids));
  }

  Forest forest() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return Forest{};
    }
    std::vector<RootedTree> ts{tree()};
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '*') break;
      ++pos_;
      ts.push_back(tree());
    }
    return Forest{std::move(ts)};
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_;
};

}  // namespace

RootedTree parse_tree(std::string_view text) {
  TreeParser p(text);
  auto t = p.tree();
  p.finish();
  return t;
}

Forest parse_forest(std::string_view text) {
  TreeParser p(text);
  auto f = p.forest();
  p.finish();
  return f;
}

RootedTree parse_tree_at(std::string_view text, std::size_t& pos) {
  TreeParser p(text, pos);
  auto t = p.tree();
  pos = p.pos();
  return t;
}

Forest parse_forest_at(std::string_view text, std::size_t& pos) {
  TreeParser p(text, pos);
  auto f = p.forest();
  pos = p.pos();
  return f;
}

}  // namespace hopfrt
