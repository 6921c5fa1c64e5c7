#include "tanabe/necklace.hpp"

#include <algorithm>
#include <sstream>

namespace tanabe {

long diagramBoxes(const YoungDiagram& d) {
  long s = 0;
  for (int row : d) s += row;
  return s;
}

std::vector<int> removableRows(const YoungDiagram& d) {
  std::vector<int> out;
  for (size_t i = 0; i < d.size(); ++i)
    if (i + 1 == d.size() || d[i] > d[i + 1]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> addableRows(const YoungDiagram& d) {
  std::vector<int> out;
  for (size_t i = 0; i <= d.size(); ++i)
    if (i == 0 || i == d.size() || d[i - 1] > d[i])
      out.push_back(static_cast<int>(i));
  return out;
}

YoungDiagram withBoxRemoved(const YoungDiagram& d, int row) {
  YoungDiagram out = d;
  out[static_cast<size_t>(row)] -= 1;
  if (out[static_cast<size_t>(row)] == 0) out.erase(out.begin() + row);
  return out;
}

YoungDiagram withBoxAdded(const YoungDiagram& d, int row) {
  YoungDiagram out = d;
  if (row == static_cast<int>(d.size()))
    out.push_back(1);
  else
    out[static_cast<size_t>(row)] += 1;
  return out;
}

long removedBoxContent(const YoungDiagram& d, int row) {
  return (d[static_cast<size_t>(row)] - 1) - row;
}

long addedBoxContent(const YoungDiagram& d, int row) {
  int len = row == static_cast<int>(d.size()) ? 0 : d[static_cast<size_t>(row)];
  return len - row;
}

Integer hookCount(const YoungDiagram& d) {
  long n = diagramBoxes(d);
  Integer denom = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (int j = 0; j < d[i]; ++j) {
      long arm = d[i] - j - 1;
      long leg = 0;
      for (size_t ii = i + 1; ii < d.size(); ++ii)
        if (d[ii] > j) ++leg;
      denom *= (arm + leg + 1);
    }
  return factorial(n) / denom;
}

long tupleBoxes(const DiagramTuple& t) {
  long s = 0;
  for (const YoungDiagram& d : t) s += diagramBoxes(d);
  return s;
}

Integer tabCount(const DiagramTuple& t) {
  std::vector<long> sizes;
  for (const YoungDiagram& d : t) sizes.push_back(diagramBoxes(d));
  Integer out = multinomial(tupleBoxes(t), sizes);
  for (const YoungDiagram& d : t) out *= hookCount(d);
  return out;
}

DiagramTuple shiftOnce(const DiagramTuple& t) {
  DiagramTuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[(i + 1) % t.size()] = t[i];
  return out;
}

DiagramTuple shiftBy(const DiagramTuple& t, long steps) {
  long r = static_cast<long>(t.size());
  long s = ((steps % r) + r) % r;
  DiagramTuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i)
    out[(i + static_cast<size_t>(s)) % t.size()] = t[i];
  return out;
}

std::string tupleStr(const DiagramTuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < t[i].size(); ++j) {
      if (j) os << ",";
      os << t[i][j];
    }
    os << "]";
  }
  os << ")";
  return os.str();
}

ShiftOrbit shiftOrbit(const DiagramTuple& t, long m, long p) {
  long b = p;
  for (long i = 1; i <= p; ++i)
    if (shiftBy(t, i * m) == t) {
      b = i;
      break;
    }
  return ShiftOrbit{b, p / b};
}

DiagramTuple canonicalNecklace(const DiagramTuple& t, long m, long p) {
  DiagramTuple best = t;
  for (long i = 1; i < p; ++i) best = std::min(best, shiftBy(t, i * m));
  return best;
}

ColoredNecklace canonicalColored(const DiagramTuple& t, long color, long m,
                                 long p) {
  long r = static_cast<long>(t.size());
  ColoredNecklace best{t, color};
  for (long i = 1; i < p; ++i) {
    ColoredNecklace cand{shiftBy(t, i * m), (color - 1 + i * m) % r + 1};
    best = std::min(best, cand);
  }
  return best;
}

}  // namespace tanabe
