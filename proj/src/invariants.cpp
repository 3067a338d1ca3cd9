#include "nakayama/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nakayama {

int StableK0::index_of(UniserialModule m) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) return -1;
  return static_cast<int>(it - basis.begin());
}

StableK0 stable_k0(const Algebra& a) {
  StableK0 k;
  for (UniserialModule m : indecomposables(a)) {
    if (!is_projective(a, m)) k.basis.push_back(m);
  }
  k.omega.assign(k.basis.size(), -1);
  for (size_t i = 0; i < k.basis.size(); ++i) {
    UniserialModule s = *syzygy(a, k.basis[i]);  // nonzero: basis is nonprojective
    k.omega[i] = k.index_of(s);                  // -1 when the syzygy is projective
  }
  return k;
}

std::vector<std::vector<long long>> stable_matrix(const StableK0& k) {
  const size_t dim = k.basis.size();
  std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
  for (size_t i = 0; i < dim; ++i) {
    if (k.omega[i] >= 0) m[static_cast<size_t>(k.omega[i])][i] = 1;
  }
  return m;
}

int integer_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const size_t nr = rows.size();
  const size_t nc = rows[0].size();
  int rank = 0;
  long long prev = 1;  // Bareiss: previous pivot, divisions are exact
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t p = r;
    while (p < nr && rows[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < nr; ++i) {
      for (size_t j = c + 1; j < nc; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

namespace {

// L applied to a coordinate vector: e_i -> e_{omega[i]} (dropped when -1).
std::vector<long long> apply_stable_l(const StableK0& k, const std::vector<long long>& v) {
  std::vector<long long> w(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && k.omega[i] >= 0) w[static_cast<size_t>(k.omega[i])] += v[i];
  }
  return w;
}

}  // namespace

PhiProfile phi_profile(const Algebra& a, const std::vector<UniserialModule>& mods) {
  const StableK0 k = stable_k0(a);

  // Distinct stable classes of the nonprojective members.
  std::set<int> family;
  for (UniserialModule m : mods) {
    if (!is_projective(a, m)) family.insert(k.index_of(m));
  }

  // Horizon: once every basis class has been pushed into its orbit cycle,
  // L permutes the cycle classes and ranks stay constant.
  int horizon = 0;
  for (UniserialModule m : k.basis) {
    horizon = std::max(horizon, syzygy_orbit(a, m).preperiod);
  }

  std::vector<std::vector<long long>> vecs;
  for (int idx : family) {
    std::vector<long long> e(k.basis.size(), 0);
    e[static_cast<size_t>(idx)] = 1;
    vecs.push_back(std::move(e));
  }

  PhiProfile profile;
  for (int t = 0; t <= horizon; ++t) {
    profile.ranks.push_back(integer_rank(vecs));
    if (t < horizon) {
      for (auto& v : vecs) v = apply_stable_l(k, v);
    }
  }
  const int stable_rank = profile.ranks.back();
  for (int t = 0; t <= horizon; ++t) {
    if (profile.ranks[static_cast<size_t>(t)] == stable_rank) {
      profile.phi = t;
      break;
    }
  }
  return profile;
}

int phi_of_set(const Algebra& a, const std::vector<UniserialModule>& mods) {
  return phi_profile(a, mods).phi;
}

int phi_dim(const Algebra& a) { return phi_of_set(a, indecomposables(a)); }

GlFin gldim_findim(const Algebra& a) {
  GlFin result;
  result.gldim = Dim(0);
  for (Vertex v = 1; v <= a.rank(); ++v) {
    result.gldim = max(result.gldim, pdim(a, {v, 1}));
  }
  result.findim = 0;
  for (UniserialModule m : indecomposables(a)) {
    Dim p = pdim(a, m);
    if (p.is_finite()) result.findim = std::max(result.findim, p.value());
  }
  return result;
}

const std::vector<UniserialModule>& SyzygyImages::at(int d) const {
  if (d < static_cast<int>(sets.size())) return sets[static_cast<size_t>(d)];
  return sets[static_cast<size_t>(preperiod + (d - preperiod) % period)];
}

bool SyzygyImages::contains(int d, UniserialModule m) const {
  const std::vector<UniserialModule>& s = at(d);
  return std::binary_search(s.begin(), s.end(), m);
}

SyzygyImages syzygy_image_sets(const Algebra& a) {
  SyzygyImages images;
  std::vector<UniserialModule> cur = indecomposables(a);  // Im_0, already sorted
  std::map<std::vector<UniserialModule>, int> seen;
  while (true) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      images.preperiod = it->second;
      images.period = static_cast<int>(images.sets.size()) - it->second;
      return images;
    }
    seen.emplace(cur, static_cast<int>(images.sets.size()));
    images.sets.push_back(cur);
    std::set<UniserialModule> next;
    for (UniserialModule m : cur) {
      SyzygyResult s = syzygy(a, m);
      if (s && !is_projective(a, *s)) next.insert(*s);
    }
    cur.assign(next.begin(), next.end());
  }
}

Dim del_module(const Algebra& a, UniserialModule m) {
  return del_module(a, m, syzygy_image_sets(a));
}

Dim del_module(const Algebra& a, UniserialModule m, const SyzygyImages& images) {
  const OrbitInfo orbit = syzygy_orbit(a, m);

  if (!orbit.period) {
    // Finite projective dimension: Ω^pdim(M) is projective, so the search is
    // bounded by pdim and always succeeds.
    for (int d = 0; d < orbit.preperiod; ++d) {
      if (images.contains(d + 1, orbit.visited[static_cast<size_t>(d)])) return Dim(d);
    }
    return Dim(orbit.preperiod);
  }

  // Infinite pdim: both the orbit and the image-set sequence are eventually
  // periodic, so the combined state recurs after lcm of the periods.
  const int orbit_pre = orbit.preperiod;
  const int orbit_per = *orbit.period;
  const int d0 = std::max({orbit_pre, images.preperiod - 1, 0});
  const long long cycle = std::lcm<long long>(orbit_per, images.period);
  for (long long d = 0; d < d0 + cycle; ++d) {
    int pos = d < orbit_pre ? static_cast<int>(d)
                            : orbit_pre + static_cast<int>((d - orbit_pre) % orbit_per);
    if (images.contains(static_cast<int>(d) + 1, orbit.visited[static_cast<size_t>(pos)])) {
      return Dim(static_cast<int>(d));
    }
  }
  return Dim::infinite();
}

std::vector<Dim> del_per_simple(const Algebra& a) {
  const SyzygyImages images = syzygy_image_sets(a);
  std::vector<Dim> out;
  out.reserve(static_cast<size_t>(a.rank()));
  for (Vertex v = 1; v <= a.rank(); ++v) {
    out.push_back(del_module(a, {v, 1}, images));
  }
  return out;
}

Dim del_algebra(const Algebra& a) {
  Dim result(0);
  for (Dim d : del_per_simple(a)) result = max(result, d);
  return result;
}

DimensionReport direct_report(const Algebra& a) {
  DimensionReport report;
  const GlFin gf = gldim_findim(a);
  report.gldim = gf.gldim;
  report.findim = gf.findim;
  report.phi_dim = phi_dim(a);
  report.del_simples = del_per_simple(a);
  report.del = Dim(0);
  for (Dim d : report.del_simples) report.del = max(report.del, d);
  return report;
}

}  // namespace nakayama
