#include "tanabe/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tanabe {

namespace {

constexpr int kMaxEnumerateK = 4;  // Bell(8) = 4140 diagrams

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return blocks;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Partition of a row (as sorted blocks of unprimed labels) for interface checks.
std::vector<std::vector<int>> rowPartition(const Diagram& d, bool bottom) {
  int K = d.size();
  std::vector<std::vector<int>> out;
  for (const auto& block : d.blocks()) {
    std::vector<int> part;
    for (int v : block) {
      if (bottom && v > K) part.push_back(v - K);
      if (!bottom && v <= K) part.push_back(v);
    }
    if (!part.empty()) out.push_back(std::move(part));
  }
  return canonicalize(std::move(out));
}

}  // namespace

Diagram::Diagram(int K, std::vector<std::vector<int>> blocks) : K_(K) {
  if (K < 0) throw DimensionError("diagram size must be nonnegative");
  std::vector<bool> seen(static_cast<size_t>(2 * K), false);
  for (const auto& b : blocks) {
    if (b.empty()) throw DimensionError("empty block in diagram");
    for (int v : b) {
      if (v < 1 || v > 2 * K)
        throw DimensionError("diagram vertex out of range");
      if (seen[static_cast<size_t>(v - 1)])
        throw DimensionError("diagram vertex repeated");
      seen[static_cast<size_t>(v - 1)] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw DimensionError("diagram blocks do not cover all vertices");
  blocks_ = canonicalize(std::move(blocks));
}

Diagram Diagram::identity(int K) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= K; ++i) blocks.push_back({i, K + i});
  return Diagram(K, std::move(blocks));
}

int Diagram::topCount(const std::vector<int>& block) const {
  int c = 0;
  for (int v : block)
    if (v <= K_) ++c;
  return c;
}

int Diagram::bottomCount(const std::vector<int>& block) const {
  return static_cast<int>(block.size()) - topCount(block);
}

bool Diagram::lastStrandJoined() const {
  if (K_ == 0) throw DimensionError("empty diagram has no last strand");
  for (const auto& b : blocks_) {
    bool hasTop = std::find(b.begin(), b.end(), K_) != b.end();
    bool hasBottom = std::find(b.begin(), b.end(), 2 * K_) != b.end();
    if (hasTop || hasBottom) return hasTop && hasBottom;
  }
  return false;
}

bool Diagram::operator<(const Diagram& o) const {
  if (K_ != o.K_) return K_ < o.K_;
  return blocks_ < o.blocks_;
}

std::string Diagram::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ";";
    os << "{";
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ",";
      int v = blocks_[i][j];
      if (v <= K_)
        os << v;
      else
        os << (v - K_) << "'";
    }
    os << "}";
  }
  return os.str();
}

Diagram Diagram::parse(const std::string& text) {
  // Grammar: blocks joined by ';', each "{v,v,...}", bottom vertices with a
  // trailing apostrophe. K is inferred from the largest label.
  struct Vertex {
    int label;
    bool bottom;
  };
  std::vector<std::vector<Vertex>> raw;
  size_t i = 0;
  auto skipSpace = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skipSpace();
  if (i >= text.size()) throw ParseError("empty diagram text");
  int maxLabel = 0;
  while (i < text.size()) {
    skipSpace();
    if (text[i] != '{') throw ParseError("expected '{' in diagram text");
    ++i;
    std::vector<Vertex> block;
    while (true) {
      skipSpace();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) throw ParseError("expected vertex label in diagram text");
      int label = std::stoi(text.substr(start, i - start));
      bool bottom = false;
      if (i < text.size() && text[i] == '\'') {
        bottom = true;
        ++i;
      }
      if (label < 1) throw ParseError("vertex labels start at 1");
      maxLabel = std::max(maxLabel, label);
      block.push_back({label, bottom});
      skipSpace();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}' in diagram text");
    }
    raw.push_back(std::move(block));
    skipSpace();
    if (i < text.size()) {
      if (text[i] != ';') throw ParseError("expected ';' between blocks");
      ++i;
    }
  }
  int K = maxLabel;
  std::vector<std::vector<int>> blocks;
  for (const auto& b : raw) {
    std::vector<int> block;
    for (const Vertex& v : b) block.push_back(v.bottom ? K + v.label : v.label);
    blocks.push_back(std::move(block));
  }
  try {
    return Diagram(K, std::move(blocks));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid diagram: ") + e.what());
  }
}

CompositionResult compose(const Diagram& d1, const Diagram& d2) {
  if (d1.size() != d2.size())
    throw DimensionError("composition of diagrams of different size");
  const int K = d1.size();
  // Nodes: top of d1 = 0..K-1, middle = K..2K-1, bottom of d2 = 2K..3K-1.
  UnionFind uf(3 * K);
  for (const auto& b : d1.blocks())
    for (size_t j = 1; j < b.size(); ++j) {
      auto node = [&](int v) { return v <= K ? v - 1 : K + (v - K - 1); };
      uf.unite(node(b[0]), node(b[j]));
    }
  for (const auto& b : d2.blocks())
    for (size_t j = 1; j < b.size(); ++j) {
      auto node = [&](int v) { return v <= K ? K + (v - 1) : 2 * K + (v - K - 1); };
      uf.unite(node(b[0]), node(b[j]));
    }
  // Collect components on the outer rows; count middle-only components.
  std::vector<std::vector<int>> byRoot(static_cast<size_t>(3 * K));
  for (int v = 0; v < 3 * K; ++v)
    byRoot[static_cast<size_t>(uf.find(v))].push_back(v);
  std::vector<std::vector<int>> blocks;
  int internal = 0;
  for (const auto& comp : byRoot) {
    if (comp.empty()) continue;
    std::vector<int> block;
    for (int v : comp) {
      if (v < K)
        block.push_back(v + 1);  // top vertex
      else if (v >= 2 * K)
        block.push_back(K + (v - 2 * K) + 1);  // bottom vertex
    }
    if (block.empty())
      ++internal;
    else
      blocks.push_back(std::move(block));
  }
  return CompositionResult{Diagram(K, std::move(blocks)), internal};
}

bool bottomMatchesTop(const Diagram& d1, const Diagram& d2) {
  if (d1.size() != d2.size())
    throw DimensionError("interface check on diagrams of different size");
  return rowPartition(d1, /*bottom=*/true) == rowPartition(d2, /*bottom=*/false);
}

bool coarserOrEqual(const Diagram& dPrime, const Diagram& d) {
  if (dPrime.size() != d.size())
    throw DimensionError("coarsening comparison on diagrams of different size");
  const int n = 2 * d.size();
  std::vector<int> blockOf(static_cast<size_t>(n) + 1, -1);
  for (size_t i = 0; i < dPrime.blocks().size(); ++i)
    for (int v : dPrime.blocks()[i]) blockOf[static_cast<size_t>(v)] = static_cast<int>(i);
  for (const auto& b : d.blocks())
    for (size_t j = 1; j < b.size(); ++j)
      if (blockOf[static_cast<size_t>(b[j])] != blockOf[static_cast<size_t>(b[0])])
        return false;
  return true;
}

std::vector<Diagram> coarsenings(const Diagram& d) {
  const auto& blocks = d.blocks();
  const int s = static_cast<int>(blocks.size());
  if (s > 12 && !guardOverrideActive())
    throw GuardError("coarsening enumeration guard exceeded (" +
                     std::to_string(s) + " blocks, Bell = " +
                     bellNumber(s).get_str() +
                     "); set TANABE_GUARD_OVERRIDE to lift");
  std::vector<Diagram> out;
  // Restricted growth strings over the block indices enumerate set partitions
  // of the block list; merging each group yields one coarsening.
  std::vector<int> rgs(static_cast<size_t>(std::max(s, 1)), 0);
  while (true) {
    int groups = s == 0 ? 0 : *std::max_element(rgs.begin(), rgs.begin() + s) + 1;
    std::vector<std::vector<int>> merged(static_cast<size_t>(std::max(groups, 0)));
    for (int i = 0; i < s; ++i)
      for (int v : blocks[static_cast<size_t>(i)])
        merged[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(v);
    out.emplace_back(d.size(), std::move(merged));
    // Advance the restricted growth string.
    int i = s - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[static_cast<size_t>(i)] < cap) {
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.begin() + s, 0);
        break;
      }
    }
    if (i <= 0) break;
  }
  return out;
}

std::vector<Diagram> enumerateDiagrams(const Level& level) {
  const int K = level.ambientSize();
  if (K > kMaxEnumerateK && !guardOverrideActive())
    throw GuardError("diagram enumeration guard exceeded (K = " +
                     std::to_string(K) + ", Bell(" + std::to_string(2 * K) +
                     ") = " + bellNumber(2 * K).get_str() +
                     "); set TANABE_GUARD_OVERRIDE to lift");
  std::vector<Diagram> out;
  if (K == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  const int n = 2 * K;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    int groups = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(groups));
    for (int v = 0; v < n; ++v)
      blocks[static_cast<size_t>(rgs[static_cast<size_t>(v)])].push_back(v + 1);
    Diagram d(K, std::move(blocks));
    if (!level.isHalf() || d.lastStrandJoined()) out.push_back(std::move(d));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[static_cast<size_t>(i)] < cap) {
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i <= 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tanabe
