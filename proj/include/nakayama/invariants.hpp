#pragma once

// Algebra-level homological invariants: global and finitistic dimension,
// the phi-dimension (stable rank stabilization), and the delooping level.
// All arithmetic is exact; ranks use fraction-free elimination.

#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/modules.hpp"

namespace nakayama {

// The stable Grothendieck lattice: free abelian group on the nonprojective
// indecomposables, with the syzygy operator L[M] = [ΩM] acting on it.
// Columns of L have at most one nonzero entry, equal to 1.
struct StableK0 {
  std::vector<UniserialModule> basis;  // nonprojective indecomposables, (top,len) order
  std::vector<int> omega;              // omega[i] = basis index of Ω(basis[i]), or -1
                                       // when the syzygy is projective

  int index_of(UniserialModule m) const;  // -1 if m is not in the basis
};

StableK0 stable_k0(const Algebra& a);

// Dense matrix of L, column i = class of Ω(basis[i]).
std::vector<std::vector<long long>> stable_matrix(const StableK0& k);

// Rank of the row space over the rationals (= rank of the generated subgroup
// of the free abelian group). Fraction-free Bareiss elimination, no floats.
int integer_rank(std::vector<std::vector<long long>> rows);

// phi of a set of modules together with the witnessing rank sequence
// r_0 .. r_H, where H = max orbit preperiod over the stable basis (ranks are
// constant from H on because L permutes the cycle classes).
struct PhiProfile {
  int phi = 0;
  std::vector<int> ranks;
};

PhiProfile phi_profile(const Algebra& a, const std::vector<UniserialModule>& mods);
int phi_of_set(const Algebra& a, const std::vector<UniserialModule>& mods);
int phi_dim(const Algebra& a);

struct GlFin {
  Dim gldim;
  int findim = 0;
};

// gldim = max pdim over simples (infinite if any is); findim = max finite
// pdim over indecomposables.
GlFin gldim_findim(const Algebra& a);

// The sets Im_d of nonzero nonprojective d-th syzygies, d = 0, 1, 2, ...
// (Im_0 is the full list of indecomposables.) The sequence is eventually
// periodic; sets are stored up to one full period.
struct SyzygyImages {
  std::vector<std::vector<UniserialModule>> sets;  // each sorted; size = preperiod + period
  int preperiod = 0;
  int period = 1;

  const std::vector<UniserialModule>& at(int d) const;
  bool contains(int d, UniserialModule m) const;
};

SyzygyImages syzygy_image_sets(const Algebra& a);

// Delooping level of an indecomposable: least d with Ω^d(M) projective (or
// zero), or Ω^d(M) a (d+1)-st syzygy of some module. Infinite when the
// combined (orbit position, image-set position) state recurs with no hit.
Dim del_module(const Algebra& a, UniserialModule m);
Dim del_module(const Algebra& a, UniserialModule m, const SyzygyImages& images);

std::vector<Dim> del_per_simple(const Algebra& a);
Dim del_algebra(const Algebra& a);

struct DimensionReport {
  Dim gldim;
  int findim = 0;
  int phi_dim = 0;
  Dim del;
  std::vector<Dim> del_simples;  // per-vertex; empty when not computed
};

// The direct (module-by-module) computation of every invariant.
DimensionReport direct_report(const Algebra& a);

}  // namespace nakayama
