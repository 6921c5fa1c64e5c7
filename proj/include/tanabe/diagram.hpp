#pragma once
// Set-partition diagrams: partitions of {1..K, 1'..K'} with composition,
// the coarsening partial order, enumeration by (possibly half-integer) level,
// and the text grammar "{1,2,1'};{2'}".
#include <string>
#include <vector>

#include "tanabe/rational.hpp"

namespace tanabe {

// A level is an integer k or half-integer k+1/2, stored as twice its value.
class Level {
 public:
  static Level integer(int k) { return Level(2 * k); }
  static Level half(int k) { return Level(2 * k + 1); }  // value k + 1/2
  static Level fromTwice(int twoL) { return Level(twoL); }

  int twice() const { return two_l_; }
  bool isHalf() const { return two_l_ % 2 != 0; }
  // Number of top vertices of the ambient diagram algebra: k for level k,
  // k+1 for level k+1/2.
  int ambientSize() const { return (two_l_ + 1) / 2; }
  std::string str() const {
    return isHalf() ? std::to_string(two_l_ / 2) + "+1/2"
                    : std::to_string(two_l_ / 2);
  }
  bool operator==(const Level& o) const { return two_l_ == o.two_l_; }

 private:
  explicit Level(int twoL) : two_l_(twoL) {
    if (twoL < 0) throw DimensionError("negative level");
  }
  int two_l_;
};

// Vertices are encoded 1..K for the top row and K+1..2K for the bottom row
// (bottom vertex j' is K+j). Blocks are stored in canonical form: each block
// sorted ascending, blocks ordered by least element.
class Diagram {
 public:
  Diagram(int K, std::vector<std::vector<int>> blocks);
  static Diagram identity(int K);

  int size() const { return K_; }  // K (number of top vertices)
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  long blockCount() const { return static_cast<long>(blocks_.size()); }
  // Number of top / bottom vertices in a block.
  int topCount(const std::vector<int>& block) const;
  int bottomCount(const std::vector<int>& block) const;
  // True when vertices K (top) and 2K (bottom) share a block; such diagrams
  // form the half-level subalgebra inside the ambient algebra.
  bool lastStrandJoined() const;

  bool operator==(const Diagram& o) const {
    return K_ == o.K_ && blocks_ == o.blocks_;
  }
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  bool operator<(const Diagram& o) const;

  std::string str() const;
  static Diagram parse(const std::string& text);

 private:
  int K_;
  std::vector<std::vector<int>> blocks_;
};

struct CompositionResult {
  Diagram result;
  int internalBlocks;  // blocks removed from the middle row
};

// Diagram concatenation d1 above d2; internalBlocks counts middle-row-only
// components (each contributes a factor n in the algebra product).
CompositionResult compose(const Diagram& d1, const Diagram& d2);

// True when the bottom-row partition of d1 equals the top-row partition of d2.
bool bottomMatchesTop(const Diagram& d1, const Diagram& d2);

// True when every block of d is contained in a block of dPrime (dPrime is
// coarser than or equal to d).
bool coarserOrEqual(const Diagram& dPrime, const Diagram& d);

// All diagrams coarser than or equal to d (merging blocks of d in every way).
std::vector<Diagram> coarsenings(const Diagram& d);

// All diagrams of the given level: every partition of 2K points for integer
// levels; for half levels, those with the last strand joined (inside A_{k+1}).
std::vector<Diagram> enumerateDiagrams(const Level& level);

}  // namespace tanabe
