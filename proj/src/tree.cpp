#include "rotkit/tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rotkit/errors.hpp"

namespace rotkit {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

int BinaryTree::left(NodeAddress node) const {
  if (node < 0 || node >= size())
    throw std::out_of_range("node address " + std::to_string(node) + " out of range");
  return left_[node];
}

int BinaryTree::right(NodeAddress node) const {
  if (node < 0 || node >= size())
    throw std::out_of_range("node address " + std::to_string(node) + " out of range");
  return right_[node];
}

BinaryTree BinaryTree::node(const BinaryTree& left_tree, const BinaryTree& right_tree) {
  int l = left_tree.size();
  int r = right_tree.size();
  int shift = l + 1;
  auto shifted = [&](int child) {
    return child >= 0 ? child + shift : ~(~child + shift);
  };
  BinaryTree out;
  out.left_.resize(l + r + 1);
  out.right_.resize(l + r + 1);
  std::copy(left_tree.left_.begin(), left_tree.left_.end(), out.left_.begin());
  std::copy(left_tree.right_.begin(), left_tree.right_.end(), out.right_.begin());
  for (int j = 0; j < r; ++j) {
    out.left_[shift + j] = shifted(right_tree.left_[j]);
    out.right_[shift + j] = shifted(right_tree.right_[j]);
  }
  out.left_[l] = left_tree.root_;
  out.right_[l] = shifted(right_tree.root_);
  out.root_ = l;
  return out;
}

BinaryTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
      ++pos;
  };
  int opens = static_cast<int>(std::count(text.begin(), text.end(), '('));

  BinaryTree out;
  out.left_.resize(opens);
  out.right_.resize(opens);
  int leaves = 0;

  std::function<int()> parse_expr = [&]() -> int {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == 'L') {
      ++pos;
      return ~(leaves++);
    }
    if (c == '(') {
      ++pos;
      int l = parse_expr();
      int rank = leaves - 1;  // in-order slot between the left and right subtree
      int r = parse_expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      out.left_[rank] = l;
      out.right_[rank] = r;
      return rank;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  };

  out.root_ = parse_expr();
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
  return out;
}

std::string render_tree(const BinaryTree& tree) {
  std::string out;
  std::function<void(int)> emit = [&](int child) {
    if (BinaryTree::is_leaf(child)) {
      out += 'L';
      return;
    }
    out += '(';
    emit(tree.left(child));
    emit(tree.right(child));
    out += ')';
  };
  emit(tree.root());
  return out;
}

BinaryTree rotate_left(const BinaryTree& tree, NodeAddress at) {
  if (at < 0 || at >= tree.size())
    throw std::out_of_range("rotate_left: node address " + std::to_string(at) +
                            " out of range for size " + std::to_string(tree.size()));
  int promoted = tree.right_[at];
  if (BinaryTree::is_leaf(promoted))
    throw std::invalid_argument("rotate_left: right child of node " + std::to_string(at) +
                                " is a leaf");
  BinaryTree out = tree;
  out.right_[at] = out.left_[promoted];
  out.left_[promoted] = at;
  if (tree.root_ == at) {
    out.root_ = promoted;
  } else {
    for (int v = 0; v < tree.size(); ++v) {
      if (tree.left_[v] == at && v != promoted) out.left_[v] = promoted;
      if (tree.right_[v] == at && v != promoted) out.right_[v] = promoted;
    }
  }
  return out;
}

BinaryTree rotate_right(const BinaryTree& tree, NodeAddress at) {
  if (at < 0 || at >= tree.size())
    throw std::out_of_range("rotate_right: node address " + std::to_string(at) +
                            " out of range for size " + std::to_string(tree.size()));
  int promoted = tree.left_[at];
  if (BinaryTree::is_leaf(promoted))
    throw std::invalid_argument("rotate_right: left child of node " + std::to_string(at) +
                                " is a leaf");
  BinaryTree out = tree;
  out.left_[at] = out.right_[promoted];
  out.right_[promoted] = at;
  if (tree.root_ == at) {
    out.root_ = promoted;
  } else {
    for (int v = 0; v < tree.size(); ++v) {
      if (tree.left_[v] == at && v != promoted) out.left_[v] = promoted;
      if (tree.right_[v] == at && v != promoted) out.right_[v] = promoted;
    }
  }
  return out;
}

BinaryTree remy_sample(int size, SplitMix64& rng) {
  if (size < 1) throw std::invalid_argument("remy_sample: size must be >= 1");

  constexpr int kRoot = std::numeric_limits<int>::max();
  // Creation-order ids: internal nodes 0..size-1, leaves 0..size (encoded ~k).
  std::vector<int> left(size), right(size);
  std::vector<int> parent(size), leaf_parent(size + 1);
  std::vector<int> nodes;
  nodes.reserve(2 * size + 1);
  nodes.push_back(~0);
  leaf_parent[0] = kRoot;
  int root = ~0;

  for (int k = 1; k <= size; ++k) {
    int u = k - 1;
    int v = nodes[static_cast<std::size_t>(rng.below(2 * k - 1))];
    bool leaf_on_left = rng.below(2) == 0;

    int vp = v < 0 ? leaf_parent[~v] : parent[v];
    if (vp == kRoot)
      root = u;
    else if (left[vp] == v)
      left[vp] = u;
    else
      right[vp] = u;
    parent[u] = vp;

    if (leaf_on_left) {
      left[u] = ~k;
      right[u] = v;
    } else {
      left[u] = v;
      right[u] = ~k;
    }
    if (v < 0)
      leaf_parent[~v] = u;
    else
      parent[v] = u;
    leaf_parent[k] = u;

    nodes.push_back(u);
    nodes.push_back(~k);
  }

  // Relabel creation ids into in-order ranks.
  std::vector<int> internal_rank(size, -1), leaf_order(size + 1, -1);
  int next_leaf = 0;
  std::vector<std::pair<int, bool>> stack;  // (child encoding, children visited)
  stack.push_back({root, false});
  while (!stack.empty()) {
    auto [node, visited] = stack.back();
    stack.pop_back();
    if (node < 0) {
      leaf_order[~node] = next_leaf++;
      continue;
    }
    if (visited) {
      internal_rank[node] = next_leaf - 1;
      stack.push_back({right[node], false});
    } else {
      stack.push_back({node, true});
      stack.push_back({left[node], false});
    }
  }

  auto relabel = [&](int child) {
    return child < 0 ? ~leaf_order[~child] : internal_rank[child];
  };
  BinaryTree out;
  out.left_.resize(size);
  out.right_.resize(size);
  for (int u = 0; u < size; ++u) {
    out.left_[internal_rank[u]] = relabel(left[u]);
    out.right_[internal_rank[u]] = relabel(right[u]);
  }
  out.root_ = relabel(root);
  return out;
}

void enumerate_trees(int size, const std::function<void(const BinaryTree&)>& fn) {
  if (size < 1) throw std::invalid_argument("enumerate_trees: size must be >= 1");
  std::function<void(int, const std::function<void(const BinaryTree&)>&)> gen =
      [&](int n, const std::function<void(const BinaryTree&)>& yield) {
        if (n == 0) {
          yield(BinaryTree());
          return;
        }
        for (int l = 0; l < n; ++l) {
          gen(l, [&](const BinaryTree& left_tree) {
            gen(n - 1 - l, [&](const BinaryTree& right_tree) {
              yield(BinaryTree::node(left_tree, right_tree));
            });
          });
        }
      };
  gen(size, fn);
}

std::vector<BinaryTree> all_trees(int size) {
  std::vector<BinaryTree> out;
  enumerate_trees(size, [&](const BinaryTree& t) { out.push_back(t); });
  return out;
}

Triangulation tree_to_triangulation(const BinaryTree& tree) {
  int n = tree.size();
  if (n < 1) throw std::invalid_argument("tree_to_triangulation: tree must have size >= 1");

  // Leaf spans by post-order walk: node at rank v spans leaves lo[v]..hi[v].
  std::vector<int> lo(n), hi(n);
  std::vector<std::pair<int, bool>> stack;
  stack.push_back({tree.root(), false});
  while (!stack.empty()) {
    auto [node, visited] = stack.back();
    stack.pop_back();
    if (BinaryTree::is_leaf(node)) continue;
    if (visited) {
      int l = tree.left(node);
      int r = tree.right(node);
      lo[node] = BinaryTree::is_leaf(l) ? BinaryTree::leaf_rank(l) : lo[l];
      hi[node] = BinaryTree::is_leaf(r) ? BinaryTree::leaf_rank(r) : hi[r];
    } else {
      stack.push_back({node, true});
      stack.push_back({tree.left(node), false});
      stack.push_back({tree.right(node), false});
    }
  }

  std::vector<Diagonal> diags;
  diags.reserve(n - 1);
  for (int v = 0; v < n; ++v)
    if (v != tree.root()) diags.push_back({lo[v], hi[v] + 1});
  return Triangulation(n + 2, std::move(diags));
}

BinaryTree triangulation_to_tree(const Triangulation& tri) {
  auto errors = validate(tri);
  if (!errors.empty())
    throw std::invalid_argument("triangulation_to_tree: invalid triangulation: " + join(errors));
  int m = tri.vertex_count();

  BinaryTree out;
  out.left_.resize(m - 2);
  out.right_.resize(m - 2);
  auto is_edge = [&](int x, int y) { return y - x == 1 || tri.contains({x, y}); };
  // Region with hull chord (i, j) maps to the node whose triangle on that
  // chord has apex k; the node's rank is k-1.
  std::function<int(int, int)> build = [&](int i, int j) -> int {
    if (j - i == 1) return ~i;
    for (int k = i + 1; k < j; ++k) {
      if (is_edge(i, k) && is_edge(k, j)) {
        int rank = k - 1;
        out.left_[rank] = build(i, k);
        out.right_[rank] = build(k, j);
        return rank;
      }
    }
    throw std::logic_error("triangulation_to_tree: no apex in region " + std::to_string(i) +
                           ".." + std::to_string(j));
  };
  out.root_ = build(0, m - 1);
  return out;
}

}  // namespace rotkit
