#pragma once

// Uniserial module arithmetic over a cyclic Nakayama algebra: construction,
// syzygies, orbits, projective dimension, periodicity.

#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

// Every indecomposable module is uniserial and is determined by its top
// vertex and composition length. The socle sits at top + len - 1 (mod n).
struct UniserialModule {
  Vertex top = 0;
  int len = 0;
  friend auto operator<=>(const UniserialModule&, const UniserialModule&) = default;
};

// nullopt: the syzygy is zero (the input was projective).
using SyzygyResult = std::optional<UniserialModule>;

// The syzygy orbit M, ΩM, Ω²M, ... Either it runs into a projective (next
// syzygy is zero) or it enters a cycle.
struct OrbitInfo {
  int preperiod = 0;                     // steps before the cycle; for a terminating
                                         // orbit, steps until the projective (= pdim)
  std::optional<int> period;             // nullopt iff the orbit terminates in zero
  std::vector<UniserialModule> visited;  // distinct modules in visit order
};

UniserialModule make_module(const Algebra& a, Vertex top, int len);
Vertex socle_vertex(const Algebra& a, UniserialModule m);
bool is_projective(const Algebra& a, UniserialModule m);
bool is_injective(const Algebra& a, UniserialModule m);

// Kernel of the projective cover P_top ->> M.
SyzygyResult syzygy(const Algebra& a, UniserialModule m);

OrbitInfo syzygy_orbit(const Algebra& a, UniserialModule m);
Dim pdim(const Algebra& a, UniserialModule m);
bool is_periodic(const Algebra& a, UniserialModule m);

// All indecomposables { (t, l) : 1 <= t <= n, 1 <= l <= c[t] }, ordered by
// top then length.
std::vector<UniserialModule> indecomposables(const Algebra& a);

// Vertices of the composition series from top to socle, with winding.
std::vector<Vertex> composition_factors(const Algebra& a, UniserialModule m);

}  // namespace nakayama
