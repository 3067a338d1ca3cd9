#include <algorithm>
#include <set>

#include "doctest.h"
#include "nakayama/algebra.hpp"

using namespace nakayama;

namespace {

Algebra alg(std::vector<int> c) {
  const int n = static_cast<int>(c.size());
  return validate_kupisch(n, std::move(c));
}

}  // namespace

TEST_CASE("validate_kupisch accepts admissible series") {
  CHECK(alg({3, 4, 3, 3, 2}).rank() == 5);
  CHECK(alg({2, 2}).rank() == 2);
  CHECK(alg({4}).rank() == 1);
  // Lengths may grow by more than one across a relation boundary; the only
  // cyclic constraint is c[i+1] >= c[i] - 1.
  CHECK(alg({3, 2, 4}).rank() == 3);
  CHECK(alg({2, 4, 3}).rank() == 3);
}

TEST_CASE("validate_kupisch rejects bad input with the offending index") {
  CHECK_THROWS_AS(validate_kupisch(0, {}), BadRank);
  CHECK_THROWS_AS(validate_kupisch(3, {2, 2}), BadRank);

  try {
    validate_kupisch(3, {3, 1, 2});
    FAIL("expected TooShort");
  } catch (const TooShort& e) {
    CHECK(e.index == 2);
    CHECK(e.value == 1);
  }

  // c[2] = 2 < c[1] - 1 = 3.
  try {
    validate_kupisch(3, {4, 2, 3});
    FAIL("expected NotAdmissible");
  } catch (const NotAdmissible& e) {
    CHECK(e.index == 2);
    CHECK(e.required == 3);
  }

  // Wrap-around violation: c[1] = 2 < c[3] - 1 = 3.
  CHECK_THROWS_AS(validate_kupisch(3, {2, 3, 4}), NotAdmissible);
}

TEST_CASE("relations_from_kupisch finds minimal projectives and socles") {
  // Starts are positions i with c[i+1] >= c[i]; socle_j = start_j + c[start_j] - 1.
  RelationSystem rs = relations_from_kupisch(alg({3, 4, 3, 3, 2}));
  CHECK(rs.starts() == std::vector<Vertex>{1, 3, 5});
  CHECK(rs.rels[0].arrows == 3);
  CHECK(rs.rels[1].arrows == 3);
  CHECK(rs.rels[2].arrows == 2);
  CHECK(rs.socles() == std::vector<Vertex>{3, 5, 1});

  rs = relations_from_kupisch(alg({2, 2}));
  CHECK(rs.starts() == std::vector<Vertex>{1, 2});
  CHECK(rs.socles() == std::vector<Vertex>{2, 1});

  // Winding case: socle_i = i + 6 - 1 = i (mod 5).
  rs = relations_from_kupisch(alg({6, 7, 6, 7, 6}));
  CHECK(rs.starts() == std::vector<Vertex>{1, 3, 5});
  CHECK(rs.rels[0].arrows == 6);
  CHECK(rs.rels[1].arrows == 6);
  CHECK(rs.rels[2].arrows == 6);
  CHECK(rs.socles() == std::vector<Vertex>{1, 3, 5});
}

TEST_CASE("kupisch_from_relations inverts the relation map") {
  RelationSystem rs{5, {{1, 3}, {3, 3}, {5, 2}}};
  CHECK(kupisch_from_relations(rs) == alg({3, 4, 3, 3, 2}));

  // Winding: c[2] = 6 + ((3 - 2) mod 5) = 7.
  rs = RelationSystem{5, {{1, 6}, {3, 6}, {5, 6}}};
  CHECK(kupisch_from_relations(rs) == alg({6, 7, 6, 7, 6}));

  rs = RelationSystem{1, {{1, 4}}};
  CHECK(kupisch_from_relations(rs) == alg({4}));
}

TEST_CASE("kupisch_from_relations rejects systems that do not round-trip") {
  // The derived series [3,2,4] has starts {2}, not {1,2}.
  CHECK_THROWS_AS(kupisch_from_relations(RelationSystem{3, {{1, 3}, {2, 2}}}),
                  InconsistentRelations);
  CHECK_THROWS_AS(kupisch_from_relations(RelationSystem{3, {}}), InconsistentRelations);
  CHECK_THROWS_AS(kupisch_from_relations(RelationSystem{3, {{1, 1}}}),
                  InconsistentRelations);
  CHECK_THROWS_AS(kupisch_from_relations(RelationSystem{3, {{2, 2}, {1, 2}}}),
                  InconsistentRelations);
}

TEST_CASE("injective_lengths") {
  CHECK(injective_lengths(alg({3, 2, 2})) == std::vector<int>{2, 2, 3});
  CHECK(injective_lengths(alg({2, 2})) == std::vector<int>{2, 2});
  CHECK(injective_lengths(alg({3, 3, 2})) == std::vector<int>{3, 2, 3});
}

TEST_CASE("opposite") {
  CHECK(opposite(alg({3, 2, 2})) == alg({3, 2, 2}));
  CHECK(opposite(alg({2, 2, 2})) == alg({2, 2, 2}));
  CHECK(opposite(alg({3, 3, 2})) == alg({3, 2, 3}));
}

TEST_CASE("is_selfinjective iff constant series") {
  CHECK(is_selfinjective(alg({2, 2})));
  CHECK(is_selfinjective(alg({5})));
  CHECK_FALSE(is_selfinjective(alg({3, 4, 3, 3, 2})));
  CHECK_FALSE(is_selfinjective(alg({6, 7, 6, 7, 6})));
}

TEST_CASE("canonicalize picks the least rotation") {
  CHECK(canonicalize(alg({4, 3, 2})) == alg({2, 4, 3}));
  CHECK(canonicalize(alg({2, 2, 2})) == alg({2, 2, 2}));
  CHECK(canonicalize(alg({3, 4, 3, 3, 2})) == alg({2, 3, 4, 3, 3}));
  CHECK(canonicalize(canonicalize(alg({3, 4, 3, 3, 2}))) ==
        canonicalize(alg({3, 4, 3, 3, 2})));
}

TEST_CASE("enumerate_kupisch small windows") {
  std::vector<Algebra> out = enumerate_kupisch({2, 2, 3, true});
  REQUIRE(out.size() == 3);
  CHECK(out[0] == alg({2, 2}));
  CHECK(out[1] == alg({2, 3}));
  CHECK(out[2] == alg({3, 3}));

  out = enumerate_kupisch({1, 1, 2, true});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == alg({2}));

  out = enumerate_kupisch({3, 3, 2, true});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == alg({2, 2, 2}));

  CHECK_THROWS_AS(enumerate_kupisch({0, 2, 3, true}), BadEnumerationSpec);
  CHECK_THROWS_AS(enumerate_kupisch({2, 1, 3, true}), BadEnumerationSpec);
  CHECK_THROWS_AS(enumerate_kupisch({1, 1, 1, true}), BadEnumerationSpec);
}

TEST_CASE("enumeration completeness against a raw brute-force count") {
  // Independent oracle: filter all L^n tuples by the two invariants directly.
  for (int n = 1; n <= 4; ++n) {
    for (int len = 2; len <= 5; ++len) {
      long long raw_count = 0;
      std::set<std::vector<int>> classes;
      std::vector<int> tuple(static_cast<size_t>(n), 2);
      while (true) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          ok = tuple[static_cast<size_t>((i + 1) % n)] >= tuple[static_cast<size_t>(i)] - 1;
        }
        if (ok) {
          ++raw_count;
          std::vector<int> best = tuple;
          std::vector<int> rot = tuple;
          for (int k = 1; k < n; ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            best = std::min(best, rot);
          }
          classes.insert(best);
        }
        int pos = n - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == len) {
          tuple[static_cast<size_t>(pos)] = 2;
          --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
      }

      EnumerationSpec spec{n, n, len, false};
      CHECK(static_cast<long long>(enumerate_kupisch(spec).size()) == raw_count);
      spec.dedupe = true;
      CHECK(enumerate_kupisch(spec).size() == classes.size());
    }
  }
}

TEST_CASE("round trip and opposite properties over an enumeration") {
  for (const Algebra& a : enumerate_kupisch({1, 4, 5, true})) {
    CAPTURE(a.kupisch());
    RelationSystem rs = relations_from_kupisch(a);
    CHECK(kupisch_from_relations(rs) == a);

    Algebra op = opposite(a);  // construction validates the series
    CHECK(op.rank() == a.rank());
    CHECK(relations_from_kupisch(op).r() == rs.r());
    CHECK(canonicalize(opposite(op)) == canonicalize(a));
  }
}

TEST_CASE("Dim ordering and rendering") {
  CHECK(Dim(3) < Dim::infinite());
  CHECK_FALSE(Dim::infinite() < Dim(3));
  CHECK_FALSE(Dim::infinite() < Dim::infinite());
  CHECK(Dim(2) < Dim(5));
  CHECK(max(Dim(2), Dim::infinite()) == Dim::infinite());
  CHECK(to_string(Dim(7)) == "7");
  CHECK(to_string(Dim::infinite()) == "inf");
}
