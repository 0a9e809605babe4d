#include "wsift/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsift {

namespace {

struct Arc {
  std::size_t a;
  std::size_t b;
  Weight w;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Arc> collect_arcs(const Volume& vol) {
  const Dims d = vol.dims();
  auto at = [&](std::size_t x, std::size_t y, std::size_t z) { return x + d.x * (y + d.y * z); };
  std::vector<Arc> arcs;
  for (std::size_t z = 0; z < d.z; ++z)
    for (std::size_t y = 0; y < d.y; ++y)
      for (std::size_t x = 0; x < d.x; ++x) {
        const std::size_t here = at(x, y, z);
        const int fh = vol.values()[here];
        auto link = [&](std::size_t there) {
          const int ft = vol.values()[there];
          arcs.push_back({here, there, static_cast<Weight>(fh > ft ? fh - ft : ft - fh)});
        };
        if (x + 1 < d.x) link(at(x + 1, y, z));
        if (y + 1 < d.y) link(at(x, y + 1, z));
        if (z + 1 < d.z) link(at(x, y, z + 1));
      }
  return arcs;
}

}  // namespace

const char* to_string(Decision d) noexcept {
  switch (d) {
    case Decision::in: return "IN";
    case Decision::out: return "OUT";
    case Decision::tie: return "TIE";
  }
  return "?";
}

OracleResult brute_force_costs(const Volume& vol, const MarkerSet& markers) {
  const std::size_t n = vol.size();
  if (n > kOracleMaxVoxels)
    throw Error(Errc::oracle_too_large,
                "oracle is limited to " + std::to_string(kOracleMaxVoxels) + " voxels, got " + std::to_string(n));
  validate_markers(vol, markers);

  std::vector<Arc> arcs = collect_arcs(vol);
  std::sort(arcs.begin(), arcs.end(), [](const Arc& l, const Arc& r) { return l.w < r.w; });
  std::vector<Weight> levels{0};
  for (const Arc& a : arcs) levels.push_back(a.w);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  OracleResult r;
  r.best_in_cost.assign(n, kUnreachable);
  r.best_out_cost.assign(n, kUnreachable);
  DisjointSets sets(n);
  std::size_t next_arc = 0;
  for (Weight t : levels) {
    for (; next_arc < arcs.size() && arcs[next_arc].w <= t; ++next_arc) sets.join(arcs[next_arc].a, arcs[next_arc].b);
    std::vector<char> root_in(n, 0), root_out(n, 0);
    for (VoxelIndex v : markers.in) root_in[sets.find(v)] = 1;
    for (VoxelIndex v : markers.out) root_out[sets.find(v)] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t root = sets.find(v);
      if (root_in[root] && r.best_in_cost[v] == kUnreachable) r.best_in_cost[v] = t;
      if (root_out[root] && r.best_out_cost[v] == kUnreachable) r.best_out_cost[v] = t;
    }
  }

  r.decided_label.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Weight in = r.best_in_cost[v], out = r.best_out_cost[v];
    r.decided_label[v] = in < out ? Decision::in : out < in ? Decision::out : Decision::tie;
  }
  return r;
}

OracleReport check_against_engine(const Volume& vol, const MarkerSet& markers, const LabelField& engine_labels,
                                  const CostField& engine_costs) {
  const OracleResult oracle = brute_force_costs(vol, markers);
  OracleReport rep;
  rep.voxels = vol.size();
  for (VoxelIndex v = 0; v < rep.voxels; ++v) {
    const Decision want = oracle.decided_label[v];
    const bool cost_bad = engine_costs[v] != oracle.best_cost(v);
    bool label_bad = false;
    if (want == Decision::tie)
      ++rep.ties;
    else
      label_bad = (want == Decision::in) != (engine_labels[v] == Label::in);
    rep.cost_mismatches += cost_bad;
    rep.label_mismatches += label_bad;
    if (cost_bad || label_bad) rep.diffs.push_back({v, engine_costs[v], oracle.best_cost(v), engine_labels[v], want});
  }
  return rep;
}

std::string OracleReport::describe(Dims dims) const {
  std::ostringstream os;
  os << cost_mismatches << " cost and " << label_mismatches << " label mismatches over " << voxels << " voxels ("
     << ties << " ties)\n";
  for (const VoxelDiff& d : diffs) {
    const Coord c = coord_of(d.voxel, dims);
    os << "  voxel " << d.voxel << " (" << c.x << "," << c.y << "," << c.z << "): engine cost " << d.engine_cost
       << " label " << (d.engine_label == Label::in ? "IN" : "OUT") << ", oracle cost " << d.oracle_cost
       << " label " << to_string(d.oracle_label) << '\n';
  }
  return os.str();
}

}  // namespace wsift
