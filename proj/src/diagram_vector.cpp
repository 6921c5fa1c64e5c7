#include "tanabe/diagram_vector.hpp"

#include <functional>
#include <sstream>

namespace tanabe {

namespace {

// Memoized expansion of one orbit basis element in the diagram basis:
// x_d = d - sum over strictly coarser d' of x_{d'}.
const std::map<Diagram, Rational>& xUnitInDiagramBasis(const Diagram& d) {
  static std::map<Diagram, std::map<Diagram, Rational>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::map<Diagram, Rational> out;
  out[d] = 1;
  for (const Diagram& coarser : coarsenings(d)) {
    if (coarser == d) continue;
    for (const auto& [dd, c] : xUnitInDiagramBasis(coarser)) {
      Rational& t = out[dd];
      t -= c;
      if (isZero(t)) out.erase(dd);
    }
  }
  return cache.emplace(d, std::move(out)).first->second;
}

// All ways to merge some top-row-only blocks of d1 with distinct
// bottom-row-only blocks of d2 inside the composite (including merging none).
void enumerateJoins(const std::vector<std::vector<int>>& tops,
                    const std::vector<std::vector<int>>& bots, size_t i,
                    std::vector<int>& match, std::vector<bool>& used,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (i == tops.size()) {
    emit(match);
    return;
  }
  match[i] = -1;  // leave tops[i] unmerged
  enumerateJoins(tops, bots, i + 1, match, used, emit);
  for (size_t j = 0; j < bots.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    match[i] = static_cast<int>(j);
    enumerateJoins(tops, bots, i + 1, match, used, emit);
    used[j] = false;
  }
  match[i] = -1;
}

}  // namespace

void DiagramVector::add(const Diagram& d, const Rational& c) {
  if (d.size() != K_) throw DimensionError("diagram size mismatch in vector");
  if (isZero(c)) return;
  Rational& t = terms_[d];
  t += c;
  if (isZero(t)) terms_.erase(d);
}

DiagramVector DiagramVector::operator+(const DiagramVector& o) const {
  if (basis_ != o.basis_ || K_ != o.K_)
    throw DimensionError("vector addition across bases or sizes");
  DiagramVector v = *this;
  for (const auto& [d, c] : o.terms_) v.add(d, c);
  return v;
}

DiagramVector DiagramVector::operator-(const DiagramVector& o) const {
  return *this + o.scaled(-1);
}

DiagramVector DiagramVector::scaled(const Rational& s) const {
  DiagramVector v(K_, basis_);
  if (isZero(s)) return v;
  for (const auto& [d, c] : terms_) v.terms_[d] = c * s;
  return v;
}

bool DiagramVector::operator==(const DiagramVector& o) const {
  return K_ == o.K_ && basis_ == o.basis_ && terms_ == o.terms_;
}

std::string DiagramVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << " * " << d.str();
  }
  return os.str();
}

DiagramVector DiagramVector::parse(const std::string& text, BasisKind basis) {
  // Terms are separated by '+' outside braces; each is [coeff ['*']] diagram.
  std::vector<std::string> termTexts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == '+' && depth == 0) {
      termTexts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  termTexts.push_back(cur);
  int K = -1;
  std::vector<std::pair<Diagram, Rational>> parsed;
  for (std::string t : termTexts) {
    size_t brace = t.find('{');
    if (brace == std::string::npos)
      throw ParseError("term without a diagram: '" + t + "'");
    std::string head = t.substr(0, brace);
    // Strip whitespace and an optional trailing '*'.
    std::string coeffText;
    for (char ch : head)
      if (!std::isspace(static_cast<unsigned char>(ch))) coeffText.push_back(ch);
    if (!coeffText.empty() && coeffText.back() == '*') coeffText.pop_back();
    Rational coeff(1);
    if (coeffText == "-") {
      coeff = -1;
    } else if (!coeffText.empty()) {
      try {
        coeff = Rational(coeffText);
        coeff.canonicalize();
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient '" + coeffText + "'");
      }
    }
    Diagram d = Diagram::parse(t.substr(brace));
    if (K < 0) K = d.size();
    if (d.size() != K) throw ParseError("terms with different diagram sizes");
    parsed.emplace_back(std::move(d), coeff);
  }
  DiagramVector v(K, basis);
  for (const auto& [d, c] : parsed) v.add(d, c);
  return v;
}

DiagramVector changeBasis(const DiagramVector& v, BasisKind target) {
  if (v.basis() == target) return v;
  DiagramVector out(v.size(), target);
  if (target == BasisKind::X) {
    // d = sum of x_{d'} over every d' coarser than or equal to d.
    for (const auto& [d, c] : v.terms())
      for (const Diagram& coarser : coarsenings(d)) out.add(coarser, c);
  } else {
    for (const auto& [d, c] : v.terms())
      for (const auto& [dd, cc] : xUnitInDiagramBasis(d)) out.add(dd, c * cc);
  }
  return out;
}

DiagramVector multiplyDiagram(const DiagramVector& v1, const DiagramVector& v2,
                              long n) {
  if (v1.basis() != BasisKind::Diagram || v2.basis() != BasisKind::Diagram)
    throw DimensionError("multiplyDiagram requires diagram-basis operands");
  DiagramVector out(v1.size(), BasisKind::Diagram);
  for (const auto& [d1, c1] : v1.terms())
    for (const auto& [d2, c2] : v2.terms()) {
      CompositionResult comp = compose(d1, d2);
      Rational factor(1);
      for (int i = 0; i < comp.internalBlocks; ++i) factor *= n;
      out.add(comp.result, c1 * c2 * factor);
    }
  return out;
}

DiagramVector multiplyX(const DiagramVector& v1, const DiagramVector& v2,
                        long n) {
  if (v1.basis() != BasisKind::X || v2.basis() != BasisKind::X)
    throw DimensionError("multiplyX requires orbit-basis operands");
  const int K = v1.size();
  DiagramVector out(K, BasisKind::X);
  for (const auto& [d1, c1] : v1.terms())
    for (const auto& [d2, c2] : v2.terms()) {
      if (!bottomMatchesTop(d1, d2)) continue;
      CompositionResult comp = compose(d1, d2);
      // Blocks of d1 entirely in its top row and blocks of d2 entirely in its
      // bottom row survive unchanged as blocks of the composite; merging some
      // of the former with some of the latter enumerates exactly the diagrams
      // carrying nonzero structure constants.
      std::vector<std::vector<int>> tops, bots;
      for (const auto& b : d1.blocks())
        if (d1.bottomCount(b) == 0) tops.push_back(b);
      for (const auto& b : d2.blocks())
        if (d2.topCount(b) == 0) bots.push_back(b);
      std::vector<int> match(tops.size(), -1);
      std::vector<bool> used(bots.size(), false);
      const Rational pairCoeff = c1 * c2;
      enumerateJoins(tops, bots, 0, match, used,
                     [&](const std::vector<int>& m) {
        // Build the merged diagram for this matching.
        std::vector<std::vector<int>> blocks;
        std::vector<bool> botUsed(bots.size(), false);
        for (const auto& b : comp.result.blocks()) {
          bool skip = false;
          for (const auto& t : tops)
            if (b == t) skip = true;
          for (const auto& bb : bots)
            if (b == bb) skip = true;
          if (!skip) blocks.push_back(b);
        }
        for (size_t i = 0; i < tops.size(); ++i) {
          std::vector<int> block = tops[i];
          if (m[i] >= 0) {
            const auto& bb = bots[static_cast<size_t>(m[i])];
            block.insert(block.end(), bb.begin(), bb.end());
            botUsed[static_cast<size_t>(m[i])] = true;
          }
          blocks.push_back(std::move(block));
        }
        for (size_t j = 0; j < bots.size(); ++j)
          if (!botUsed[j]) blocks.push_back(bots[j]);
        Diagram d(K, std::move(blocks));
        Rational coeff(
            fallingFactorial(Integer(n) - d.blockCount(), comp.internalBlocks));
        out.add(d, pairCoeff * coeff);
      });
    }
  return out;
}

DiagramVector embedIntoNext(const DiagramVector& v) {
  if (v.basis() != BasisKind::Diagram)
    throw DimensionError("embedding expects a diagram-basis vector");
  const int K = v.size();
  DiagramVector out(K + 1, BasisKind::Diagram);
  for (const auto& [d, c] : v.terms()) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : d.blocks()) {
      std::vector<int> shifted;
      for (int x : b) shifted.push_back(x <= K ? x : x + 1);
      blocks.push_back(std::move(shifted));
    }
    blocks.push_back({K + 1, 2 * (K + 1)});
    out.add(Diagram(K + 1, std::move(blocks)), c);
  }
  return out;
}

}  // namespace tanabe
