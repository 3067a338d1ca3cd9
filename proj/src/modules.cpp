#include "nakayama/modules.hpp"

#include <map>

namespace nakayama {

UniserialModule make_module(const Algebra& a, Vertex top, int len) {
  if (top < 1 || top > a.rank()) throw BadVertex(top, a.rank());
  if (len < 1 || len > a.c(top)) throw InvalidLength(top, len, a.c(top));
  return {top, len};
}

Vertex socle_vertex(const Algebra& a, UniserialModule m) { return a.next(m.top, m.len - 1); }

bool is_projective(const Algebra& a, UniserialModule m) { return m.len == a.c(m.top); }

bool is_injective(const Algebra& a, UniserialModule m) {
  const std::vector<int> d = injective_lengths(a);
  return m.len == d[static_cast<size_t>(socle_vertex(a, m) - 1)];
}

SyzygyResult syzygy(const Algebra& a, UniserialModule m) {
  if (is_projective(a, m)) return std::nullopt;
  // Kernel of P_top ->> M is rad^len(P_top); admissibility guarantees the
  // result is again a module.
  return make_module(a, a.next(m.top, m.len), a.c(m.top) - m.len);
}

OrbitInfo syzygy_orbit(const Algebra& a, UniserialModule m) {
  OrbitInfo info;
  std::map<UniserialModule, int> position;
  UniserialModule cur = m;
  while (true) {
    auto it = position.find(cur);
    if (it != position.end()) {
      info.preperiod = it->second;
      info.period = static_cast<int>(info.visited.size()) - it->second;
      return info;
    }
    position.emplace(cur, static_cast<int>(info.visited.size()));
    info.visited.push_back(cur);
    if (is_projective(a, cur)) {
      info.preperiod = static_cast<int>(info.visited.size()) - 1;
      return info;
    }
    cur = *syzygy(a, cur);
  }
}

Dim pdim(const Algebra& a, UniserialModule m) {
  OrbitInfo orbit = syzygy_orbit(a, m);
  return orbit.period ? Dim::infinite() : Dim(orbit.preperiod);
}

bool is_periodic(const Algebra& a, UniserialModule m) {
  OrbitInfo orbit = syzygy_orbit(a, m);
  return orbit.period.has_value() && orbit.preperiod == 0;
}

std::vector<UniserialModule> indecomposables(const Algebra& a) {
  std::vector<UniserialModule> out;
  for (Vertex t = 1; t <= a.rank(); ++t) {
    for (int l = 1; l <= a.c(t); ++l) out.push_back({t, l});
  }
  return out;
}

std::vector<Vertex> composition_factors(const Algebra& a, UniserialModule m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<size_t>(m.len));
  for (int k = 0; k < m.len; ++k) out.push_back(a.next(m.top, k));
  return out;
}

}  // namespace nakayama
