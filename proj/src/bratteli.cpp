#include "tanabe/bratteli.hpp"

#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tanabe {

std::string TowerNode::label() const {
  std::string out = tupleStr(tuple);
  if (color > 0) out += "|c=" + std::to_string(color);
  if (color == 0 && u > 1) out += "|d=" + std::to_string(delta);
  return out;
}

BratteliTower buildTower(const AlgebraParams& params, int kmax) {
  params.validate();
  const long r = params.r, p = params.p, m = params.m(), n = params.n;
  if (kmax < 0) throw DimensionError("tower depth must be nonnegative");
  if (2 * kmax > n && !guardOverrideActive())
    throw GuardError("tower depth guard exceeded (k > n/2); set "
                     "TANABE_GUARD_OVERRIDE to lift");
  BratteliTower tower;
  tower.params = params;
  // Root: all boxes in one row on the first component.
  DiagramTuple root(static_cast<size_t>(r));
  root[0] = YoungDiagram{static_cast<int>(n)};
  root = canonicalNecklace(root, m, p);
  TowerLevel level0;
  level0.level = Level::integer(0);
  ShiftOrbit rootOrbit = shiftOrbit(root, m, p);
  level0.nodes.push_back(TowerNode{root, 0, 0, rootOrbit.u});
  level0.pathCounts.push_back(1);
  tower.levels.push_back(std::move(level0));
  for (int step = 0; step < 2 * kmax; ++step) {
    const TowerLevel& prev = tower.levels.back();
    TowerLevel next;
    next.level = Level::fromTwice(step + 1);
    std::map<TowerNode, size_t> index;
    std::set<std::pair<size_t, size_t>> edgeSeen;
    auto addEdge = [&](size_t from, const TowerNode& node, long content) {
      auto [it, inserted] = index.emplace(node, next.nodes.size());
      if (inserted) {
        next.nodes.push_back(node);
        next.pathCounts.push_back(0);
      }
      size_t to = it->second;
      if (edgeSeen.emplace(from, to).second) {
        next.edgesFromPrevious.push_back(TowerEdge{from, to, content});
        next.pathCounts[to] += prev.pathCounts[from];
      }
    };
    if (!next.level.isHalf()) {
      // Up step: uncolor and add a box at the successor component.
      for (size_t from = 0; from < prev.nodes.size(); ++from) {
        const TowerNode& cn = prev.nodes[from];
        long succ = (cn.color % r) + 1;
        const YoungDiagram& comp = cn.tuple[static_cast<size_t>(succ - 1)];
        for (int row : addableRows(comp)) {
          DiagramTuple grown = cn.tuple;
          grown[static_cast<size_t>(succ - 1)] = withBoxAdded(comp, row);
          long content = addedBoxContent(comp, row);
          DiagramTuple canon = canonicalNecklace(grown, m, p);
          ShiftOrbit orbit = shiftOrbit(canon, m, p);
          for (long delta = 0; delta < orbit.u; ++delta)
            addEdge(from, TowerNode{canon, 0, delta, orbit.u}, content);
        }
      }
    } else {
      // Down step: delete an inner corner and color its component; the twist
      // index does not influence the branching.
      for (size_t from = 0; from < prev.nodes.size(); ++from) {
        const TowerNode& node = prev.nodes[from];
        for (size_t c = 0; c < node.tuple.size(); ++c) {
          const YoungDiagram& comp = node.tuple[c];
          for (int row : removableRows(comp)) {
            DiagramTuple shrunk = node.tuple;
            shrunk[c] = withBoxRemoved(comp, row);
            long content = removedBoxContent(comp, row);
            ColoredNecklace canon =
                canonicalColored(shrunk, static_cast<long>(c) + 1, m, p);
            addEdge(from, TowerNode{canon.tuple, canon.color, 0, 1}, content);
          }
        }
      }
    }
    tower.levels.push_back(std::move(next));
  }
  return tower;
}

namespace {

Integer nodeIrrepDim(const TowerNode& node) {
  Integer t = tabCount(node.tuple);
  if (node.color == 0) {
    if (t % node.u != 0)
      throw DimensionError("tableau count not divisible by the twist count");
    return t / node.u;
  }
  return t;
}

}  // namespace

DimsTable dims(const BratteliTower& tower, const Level& level) {
  if (level.twice() >= static_cast<int>(tower.levels.size()))
    throw DimensionError("tower too shallow for the requested level");
  const TowerLevel& tl = tower.levels[static_cast<size_t>(level.twice())];
  DimsTable table;
  table.sumDimTimesPaths = 0;
  table.sumPathsSquared = 0;
  for (size_t i = 0; i < tl.nodes.size(); ++i) {
    DimsRow row;
    row.label = tl.nodes[i].label();
    row.irrepDim = nodeIrrepDim(tl.nodes[i]);
    row.pathCount = tl.pathCounts[i];
    table.sumDimTimesPaths += row.irrepDim * row.pathCount;
    table.sumPathsSquared += row.pathCount * row.pathCount;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::map<std::vector<Rational>, Integer> predictJMSpectrum(
    const BratteliTower& tower, int k) {
  if (2 * k >= static_cast<int>(tower.levels.size()))
    throw DimensionError("tower too shallow for the requested level");
  // Adjacency from each level to the next.
  std::map<std::vector<Rational>, Integer> out;
  std::vector<Rational> tuple;
  std::function<void(int, size_t)> walk = [&](int twice, size_t node) {
    if (twice == 2 * k) {
      out[tuple] += nodeIrrepDim(
          tower.levels[static_cast<size_t>(twice)].nodes[node]);
      return;
    }
    const TowerLevel& next = tower.levels[static_cast<size_t>(twice) + 1];
    for (const TowerEdge& e : next.edgesFromPrevious) {
      if (e.from != node) continue;
      Rational entry;
      if (next.level.isHalf())
        // The first half step carries the constant eigenvalue of the identity
        // element; later half steps carry minus the removed content.
        entry = (twice == 0) ? Rational(1) : Rational(-e.content);
      else
        entry = Rational(e.content);
      tuple.push_back(entry);
      walk(twice + 1, e.to);
      tuple.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

std::string towerToDot(const BratteliTower& tower) {
  std::ostringstream os;
  os << "digraph tower {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t l = 0; l < tower.levels.size(); ++l) {
    const TowerLevel& tl = tower.levels[l];
    os << "  { rank=same;";
    for (size_t i = 0; i < tl.nodes.size(); ++i)
      os << " n" << l << "_" << i << ";";
    os << " }\n";
    for (size_t i = 0; i < tl.nodes.size(); ++i)
      os << "  n" << l << "_" << i << " [label=\"" << tl.nodes[i].label()
         << "\\npaths=" << tl.pathCounts[i].get_str() << "\"];\n";
    for (const TowerEdge& e : tl.edgesFromPrevious)
      os << "  n" << (l - 1) << "_" << e.from << " -> n" << l << "_" << e.to
         << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string towerToJson(const BratteliTower& tower) {
  nlohmann::json j;
  j["r"] = tower.params.r;
  j["p"] = tower.params.p;
  j["n"] = tower.params.n;
  j["levels"] = nlohmann::json::array();
  for (const TowerLevel& tl : tower.levels) {
    nlohmann::json jl;
    jl["level"] = tl.level.str();
    jl["nodes"] = nlohmann::json::array();
    for (size_t i = 0; i < tl.nodes.size(); ++i) {
      const TowerNode& node = tl.nodes[i];
      nlohmann::json jn;
      jn["tuple"] = node.tuple;
      if (node.color > 0) jn["color"] = node.color;
      if (node.color == 0) {
        jn["delta"] = node.delta;
        jn["twists"] = node.u;
      }
      jn["pathCount"] = tl.pathCounts[i].get_str();
      jn["irrepDim"] = nodeIrrepDim(node).get_str();
      jl["nodes"].push_back(std::move(jn));
    }
    jl["edges"] = nlohmann::json::array();
    for (const TowerEdge& e : tl.edgesFromPrevious)
      jl["edges"].push_back({{"from", e.from}, {"to", e.to},
                             {"content", e.content}});
    j["levels"].push_back(std::move(jl));
  }
  return j.dump(2);
}

}  // namespace tanabe
