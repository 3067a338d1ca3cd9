#include "nakayama/filtration.hpp"

#include <algorithm>
#include <set>

namespace nakayama {

std::vector<Vertex> socle_set(const Algebra& a) {
  std::set<Vertex> s;
  for (Vertex i = 1; i <= a.rank(); ++i) s.insert(a.next(i, a.c(i) - 1));
  return {s.begin(), s.end()};
}

std::vector<Vertex> s_prime_set(const Algebra& a) {
  std::set<Vertex> s;
  for (Vertex v : socle_set(a)) s.insert(a.next(v));
  return {s.begin(), s.end()};
}

namespace {

// Cut the cycle after each vertex of `cuts` (sorted): the block after cut s
// runs from s+1 to the next cut.
std::vector<DeltaBlock> blocks_from_cuts(const Algebra& a, const std::vector<Vertex>& cuts) {
  const int n = a.rank();
  const int r = static_cast<int>(cuts.size());
  std::vector<DeltaBlock> blocks;
  blocks.reserve(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    Vertex s = cuts[static_cast<size_t>(j)];
    Vertex succ = cuts[static_cast<size_t>((j + 1) % r)];
    long long gap = (succ - s - 1) % n;
    if (gap < 0) gap += n;
    blocks.push_back({a.next(s), static_cast<int>(gap) + 1, 0});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const DeltaBlock& x, const DeltaBlock& y) { return x.top < y.top; });
  for (int j = 0; j < r; ++j) blocks[static_cast<size_t>(j)].ordinal = j + 1;
  return blocks;
}

}  // namespace

std::vector<DeltaBlock> delta_blocks(const Algebra& a) {
  return blocks_from_cuts(a, socle_set(a));
}

std::vector<DeltaBlock> nabla_blocks(const Algebra& a) {
  std::set<Vertex> starts;
  for (const Relation& rel : relations_from_kupisch(a).rels) starts.insert(rel.start);
  return blocks_from_cuts(a, {starts.begin(), starts.end()});
}

bool findim_one_test(const Algebra& a) {
  std::vector<Vertex> starts = relations_from_kupisch(a).starts();
  std::sort(starts.begin(), starts.end());
  const bool sets_equal = starts == socle_set(a);

  auto as_intervals = [](std::vector<DeltaBlock> blocks) {
    std::vector<std::pair<Vertex, int>> out;
    for (const DeltaBlock& b : blocks) out.emplace_back(b.top, b.len);
    std::sort(out.begin(), out.end());
    return out;
  };
  const bool blocks_equal = as_intervals(delta_blocks(a)) == as_intervals(nabla_blocks(a));
  if (sets_equal != blocks_equal) {
    throw InternalError("start/socle set equality disagrees with block set equality");
  }
  return sets_equal;
}

std::optional<Filtration> try_b_filtration(const std::vector<DeltaBlock>& blocks,
                                           UniserialModule m) {
  const int r = static_cast<int>(blocks.size());
  int b = -1;
  for (int j = 0; j < r; ++j) {
    if (blocks[static_cast<size_t>(j)].top == m.top) {
      b = j;
      break;
    }
  }
  if (b < 0) return std::nullopt;

  // Blocks tile the cycle in ordinal order, so consume them consecutively
  // from the one starting at the module's top (winding around as needed).
  Filtration f;
  int remaining = m.len;
  while (true) {
    f.ordinals.push_back(blocks[static_cast<size_t>(b)].ordinal);
    remaining -= blocks[static_cast<size_t>(b)].len;
    if (remaining == 0) return f;
    if (remaining < 0) return std::nullopt;
    b = (b + 1) % r;
  }
}

std::optional<Filtration> try_b_filtration(const Algebra& a, UniserialModule m) {
  return try_b_filtration(delta_blocks(a), m);
}

Filtration b_filtration(const Algebra& a, UniserialModule m) {
  std::optional<Filtration> f = try_b_filtration(a, m);
  if (!f) throw NotFilterable(m.top, m.len);
  return *f;
}

EpsilonResult epsilon(const Algebra& a) {
  if (is_selfinjective(a)) throw SelfinjectiveInput();

  EpsilonResult result;
  result.blocks = delta_blocks(a);
  for (const DeltaBlock& block : result.blocks) {
    // The projective with top at a block top has its socle in the socle set,
    // so it is always block-filtered.
    UniserialModule p = make_module(a, block.top, a.c(block.top));
    std::optional<Filtration> f = try_b_filtration(result.blocks, p);
    if (!f) throw InternalError("projective over a block top must be filterable");
    result.kupisch.push_back(f->block_count());
  }
  try {
    result.algebra = validate_kupisch(static_cast<int>(result.kupisch.size()), result.kupisch);
  } catch (const Error&) {
    // Degenerate (only reachable from finite global dimension): keep the raw
    // series, leave the algebra unset.
  }
  return result;
}

TowerReport epsilon_tower(const Algebra& a) {
  TowerReport report;
  report.levels.push_back(a);
  const int cap = a.rank() + 1;
  while (true) {
    const Algebra& cur = report.levels.back();
    if (is_selfinjective(cur)) {
      report.terminal = TowerTerminal::Selfinjective;
      return report;
    }
    if (gldim_findim(cur).gldim.is_finite()) {
      report.terminal = TowerTerminal::FiniteGldim;
      return report;
    }
    if (static_cast<int>(report.levels.size()) > cap) {
      throw InternalError("epsilon tower exceeded its iteration cap");
    }
    EpsilonResult eps = epsilon(cur);
    if (phi_dim(cur) >= 3) {
      if (!eps.algebra) {
        throw InternalError("epsilon degenerate on an infinite-gldim level");
      }
      report.levels.push_back(*eps.algebra);
      continue;
    }
    // phi = 2: one more step is expected to land on a selfinjective algebra.
    if (eps.algebra && is_selfinjective(*eps.algebra)) {
      report.levels.push_back(*eps.algebra);
      report.terminal = TowerTerminal::Selfinjective;
      return report;
    }
    report.terminal = TowerTerminal::PhiAtMost2;
    return report;
  }
}

DimensionReport invariants_via_tower(const Algebra& a) {
  const TowerReport tower = epsilon_tower(a);
  DimensionReport report;
  report.gldim = gldim_findim(a).gldim;  // a base-level fact, computed directly

  int accum = 0;
  for (const Algebra& level : tower.levels) {
    if (is_selfinjective(level)) {
      report.findim = accum;
      report.del = Dim(accum);
      report.phi_dim = accum;
      return report;
    }
    const GlFin gf = gldim_findim(level);
    if (gf.gldim.is_finite()) {
      Dim del = del_algebra(level);
      report.findim = accum + gf.findim;
      report.del = del.is_finite() ? Dim(accum + del.value()) : Dim::infinite();
      report.phi_dim = accum + phi_dim(level);
      return report;
    }
    if (phi_dim(level) >= 3) {
      accum += 2;  // each descended level contributes two to every dimension
      continue;
    }
    // phi = 2 terminal level: findim and del agree and the findim-one test
    // decides between 1 and 2.
    const int f = findim_one_test(level) ? 1 : 2;
    report.findim = accum + f;
    report.del = Dim(accum + f);
    report.phi_dim = accum + 2;
    return report;
  }
  throw InternalError("tower walk ran past the terminal level");
}

}  // namespace nakayama
