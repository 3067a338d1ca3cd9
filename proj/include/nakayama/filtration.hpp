#pragma once

// Syzygy filtration machinery: socle classes, the delta/nabla block sets
// that tile the cycle, block filtrations of modules, the syzygy filtered
// algebra epsilon, its tower, and the structural computation of
// findim/del through the tower.

#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/invariants.hpp"
#include "nakayama/modules.hpp"

namespace nakayama {

// One interval block. Blocks are listed sorted by top; `ordinal` is the
// 1-based position in that order, which is also the cyclic order in which
// blocks tile the cycle.
struct DeltaBlock {
  Vertex top = 0;
  int len = 0;
  int ordinal = 0;
  friend auto operator<=>(const DeltaBlock&, const DeltaBlock&) = default;
};

// Socle vertices of the indecomposable projectives (sorted).
std::vector<Vertex> socle_set(const Algebra& a);

// The same set shifted one step forward (sorted).
std::vector<Vertex> s_prime_set(const Algebra& a);

// Cut the cycle after every projective socle: block tops are s+1 for socles
// s, each block runs to the next socle. The blocks tile the cycle.
std::vector<DeltaBlock> delta_blocks(const Algebra& a);

// Cut after every relation start instead.
std::vector<DeltaBlock> nabla_blocks(const Algebra& a);

// True iff the relation-start set equals the projective-socle set. Also
// verifies that this agrees with set equality of the delta and nabla block
// lists (throws InternalError on disagreement).
bool findim_one_test(const Algebra& a);

// A decomposition of a module into consecutive delta blocks, from the top.
struct Filtration {
  std::vector<int> ordinals;  // 1-based ordinals into delta_blocks(a)
  int block_count() const { return static_cast<int>(ordinals.size()); }
};

std::optional<Filtration> try_b_filtration(const Algebra& a, UniserialModule m);
std::optional<Filtration> try_b_filtration(const std::vector<DeltaBlock>& blocks,
                                           UniserialModule m);
Filtration b_filtration(const Algebra& a, UniserialModule m);  // throws NotFilterable

// The syzygy filtered algebra. New vertex j corresponds to blocks[j-1]; its
// Kupisch entry counts the blocks filtering the projective with top at that
// block's top. On finite-global-dimension input the block counts can drop
// to 1 (a semisimple direct factor), in which case `algebra` is empty and
// only the raw series is reported.
struct EpsilonResult {
  std::vector<int> kupisch;        // raw block counts
  std::vector<DeltaBlock> blocks;  // new vertex j <-> blocks[j-1]
  std::optional<Algebra> algebra;  // set iff the raw series validates
};

EpsilonResult epsilon(const Algebra& a);  // throws SelfinjectiveInput

enum class TowerTerminal { Selfinjective, FiniteGldim, PhiAtMost2 };

// Iterated epsilon. Levels with infinite global dimension and phi >= 3 are
// descended; a phi = 2 level steps once more to exhibit the selfinjective
// algebra underneath it. PhiAtMost2 marks the (never observed) case where
// that final step fails to be selfinjective.
struct TowerReport {
  std::vector<Algebra> levels;  // base algebra first
  TowerTerminal terminal = TowerTerminal::Selfinjective;
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

TowerReport epsilon_tower(const Algebra& a);

// Structural findim/del/phi: +2 per descended tower level, direct values at
// the terminal level (selfinjective: zero; finite gldim: direct; phi = 2:
// the findim-one dichotomy). gldim is taken from the base algebra.
DimensionReport invariants_via_tower(const Algebra& a);

}  // namespace nakayama
