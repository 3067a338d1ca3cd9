#include "nakayama/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nakayama {

std::string to_string(Dim d) { return d.is_finite() ? std::to_string(d.value()) : "inf"; }

int Algebra::max_length() const { return *std::max_element(c_.begin(), c_.end()); }

std::vector<Vertex> RelationSystem::starts() const {
  std::vector<Vertex> out;
  out.reserve(rels.size());
  for (const Relation& rel : rels) out.push_back(rel.start);
  return out;
}

std::vector<Vertex> RelationSystem::socles() const {
  std::vector<Vertex> out;
  out.reserve(rels.size());
  for (int j = 1; j <= r(); ++j) out.push_back(socle(j));
  return out;
}

Algebra validate_kupisch(int n, std::vector<int> series) {
  if (n < 1 || static_cast<int>(series.size()) != n) {
    throw BadRank(n, static_cast<int>(series.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (series[static_cast<size_t>(i)] < 2) throw TooShort(i + 1, series[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n; ++i) {
    int succ = (i + 1) % n;
    if (series[static_cast<size_t>(succ)] < series[static_cast<size_t>(i)] - 1) {
      throw NotAdmissible(succ + 1, series[static_cast<size_t>(succ)],
                          series[static_cast<size_t>(i)] - 1);
    }
  }
  return Algebra(std::move(series));
}

RelationSystem relations_from_kupisch(const Algebra& a) {
  const int n = a.rank();
  RelationSystem rs;
  rs.n = n;
  // Starts are the positions where the chain of radical embeddings breaks,
  // i.e. the minimal-length projectives in their socle class.
  for (Vertex i = 1; i <= n; ++i) {
    if (a.c(a.next(i)) >= a.c(i)) rs.rels.push_back({i, a.c(i)});
  }
  return rs;  // every valid algebra has at least one start
}

Algebra kupisch_from_relations(const RelationSystem& rs) {
  const int n = rs.n;
  if (n < 1 || rs.rels.empty()) throw InconsistentRelations("empty relation system");
  for (size_t j = 0; j < rs.rels.size(); ++j) {
    const Relation& rel = rs.rels[j];
    if (rel.start < 1 || rel.start > n) {
      throw InconsistentRelations("relation start " + std::to_string(rel.start) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (rel.arrows < 2) {
      throw InconsistentRelations("relation at " + std::to_string(rel.start) +
                                  " has fewer than 2 arrows");
    }
    if (j > 0 && rs.rels[j - 1].start >= rel.start) {
      throw InconsistentRelations("relation starts not strictly increasing");
    }
  }

  // c[i] = arrows + (distance to the cyclically next start at or after i).
  std::vector<int> series(static_cast<size_t>(n), 0);
  for (Vertex i = 1; i <= n; ++i) {
    const Relation* best = nullptr;
    long long best_dist = 0;
    for (const Relation& rel : rs.rels) {
      long long dist = (rel.start - i) % n;
      if (dist < 0) dist += n;
      if (best == nullptr || dist < best_dist) {
        best = &rel;
        best_dist = dist;
      }
    }
    series[static_cast<size_t>(i - 1)] = best->arrows + static_cast<int>(best_dist);
  }

  Algebra result = [&] {
    try {
      return validate_kupisch(n, series);
    } catch (const Error& e) {
      throw InconsistentRelations(std::string("derived series invalid: ") + e.what());
    }
  }();
  if (relations_from_kupisch(result).rels != rs.rels) {
    throw InconsistentRelations("relation system does not round-trip");
  }
  return result;
}

std::vector<int> injective_lengths(const Algebra& a) {
  const int n = a.rank();
  const int bound = a.max_length();
  std::vector<int> d(static_cast<size_t>(n), 1);
  for (Vertex j = 1; j <= n; ++j) {
    // Longest module with socle S_j: length l needs l <= c[j - l + 1].
    // The feasible set is downward closed by admissibility.
    int best = 1;
    for (int l = 2; l <= bound; ++l) {
      if (l > a.c(mod1(j - l + 1, n))) break;
      best = l;
    }
    d[static_cast<size_t>(j - 1)] = best;
  }
  return d;
}

Algebra opposite(const Algebra& a) {
  const int n = a.rank();
  const std::vector<int> d = injective_lengths(a);
  std::vector<int> series(static_cast<size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    series[static_cast<size_t>(i - 1)] = d[static_cast<size_t>(mod1(n + 1 - i, n) - 1)];
  }
  return validate_kupisch(n, std::move(series));
}

bool is_selfinjective(const Algebra& a) {
  const std::vector<int>& c = a.kupisch();
  return std::all_of(c.begin(), c.end(), [&](int v) { return v == c.front(); });
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& c) {
  const size_t n = c.size();
  std::vector<int> best = c;
  std::vector<int> rot = c;
  for (size_t k = 1; k < n; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

Algebra canonicalize(const Algebra& a) {
  return validate_kupisch(a.rank(), least_rotation(a.kupisch()));
}

std::vector<Algebra> enumerate_kupisch(const EnumerationSpec& spec) {
  if (spec.rank_min < 1 || spec.rank_min > spec.rank_max) {
    throw BadEnumerationSpec("rank window must satisfy 1 <= rank_min <= rank_max");
  }
  if (spec.max_len < 2) {
    throw BadEnumerationSpec("max_len must be at least 2");
  }

  std::vector<Algebra> out;
  for (int n = spec.rank_min; n <= spec.rank_max; ++n) {
    std::set<std::vector<int>> forms;
    std::vector<int> series(static_cast<size_t>(n));
    std::function<void(int)> grow = [&](int pos) {
      if (pos == n) {
        if (series[0] >= series[static_cast<size_t>(n - 1)] - 1) {
          forms.insert(spec.dedupe ? least_rotation(series) : series);
        }
        return;
      }
      int lo = pos == 0 ? 2 : std::max(2, series[static_cast<size_t>(pos - 1)] - 1);
      for (int v = lo; v <= spec.max_len; ++v) {
        series[static_cast<size_t>(pos)] = v;
        grow(pos + 1);
      }
    };
    grow(0);
    for (const std::vector<int>& form : forms) out.push_back(validate_kupisch(n, form));
  }
  return out;
}

}  // namespace nakayama
