#pragma once

// Cyclic Nakayama algebras presented by Kupisch series, and the
// combinatorial data derived from them (defining relations, injective
// lengths, opposite algebra, enumeration of all algebras at small rank).

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

using Vertex = int;  // 1-based vertex on the cyclic quiver 1 -> 2 -> ... -> n -> 1

// Reduce a (possibly negative or winding) index into 1..n.
constexpr Vertex mod1(long long x, int n) {
  long long m = (x - 1) % n;
  return static_cast<Vertex>(m < 0 ? m + n + 1 : m + 1);
}

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadRank : Error {
  BadRank(int rank, int series_size)
      : Error("bad rank: n = " + std::to_string(rank) + " with " +
              std::to_string(series_size) + " series entries"),
        rank(rank),
        series_size(series_size) {}
  int rank;
  int series_size;
};

struct TooShort : Error {
  TooShort(int index, int value)
      : Error("projective length " + std::to_string(value) + " < 2 at index " +
              std::to_string(index)),
        index(index),
        value(value) {}
  int index;
  int value;
};

struct NotAdmissible : Error {
  NotAdmissible(int index, int value, int required)
      : Error("series not admissible: c[" + std::to_string(index) + "] = " +
              std::to_string(value) + " < " + std::to_string(required) +
              " = c[predecessor] - 1"),
        index(index),
        value(value),
        required(required) {}
  int index;  // the deficient entry (its predecessor is one position back, cyclically)
  int value;
  int required;
};

struct InconsistentRelations : Error {
  using Error::Error;
};

struct InvalidLength : Error {
  InvalidLength(Vertex top, int len, int max_len)
      : Error("no uniserial module (top=" + std::to_string(top) +
              ", len=" + std::to_string(len) + "); valid lengths are 1.." +
              std::to_string(max_len)),
        top(top),
        len(len),
        max_len(max_len) {}
  Vertex top;
  int len;
  int max_len;
};

struct BadVertex : Error {
  BadVertex(Vertex v, int rank)
      : Error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(rank)),
        vertex(v),
        rank(rank) {}
  Vertex vertex;
  int rank;
};

struct NotFilterable : Error {
  NotFilterable(Vertex top, int len)
      : Error("module (top=" + std::to_string(top) + ", len=" + std::to_string(len) +
              ") has no delta-block filtration"),
        top(top),
        len(len) {}
  Vertex top;
  int len;
};

struct SelfinjectiveInput : Error {
  SelfinjectiveInput() : Error("epsilon is undefined for selfinjective algebras") {}
};

struct BadEnumerationSpec : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Dimension values: a nonnegative integer or infinity.

class Dim {
 public:
  constexpr Dim() = default;
  constexpr Dim(int v) : v_(v) {}  // NOLINT: implicit by design, finite values
  static constexpr Dim infinite() {
    Dim d;
    d.v_ = kInf;
    return d;
  }
  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr int value() const { return v_; }  // meaningful only when finite

  friend constexpr bool operator==(Dim a, Dim b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Dim a, Dim b) {
    if (!b.is_finite()) return a.is_finite();
    if (!a.is_finite()) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(Dim a, Dim b) { return a == b || a < b; }
  friend constexpr bool operator>(Dim a, Dim b) { return b < a; }
  friend constexpr bool operator>=(Dim a, Dim b) { return b <= a; }

 private:
  static constexpr int kInf = -1;
  int v_ = 0;
};

inline Dim max(Dim a, Dim b) { return a < b ? b : a; }
std::string to_string(Dim d);  // "inf" for the infinite value

// ---------------------------------------------------------------------------
// The algebra itself: a validated cyclic Kupisch series.
//
// c[i] is the composition length of the indecomposable projective P_i.
// Invariants: n >= 1, c[i] >= 2, and c[i+1] >= c[i] - 1 cyclically (so the
// radical of every projective is again a module).

class Algebra {
 public:
  int rank() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& kupisch() const { return c_; }
  int c(Vertex i) const { return c_[static_cast<size_t>(i - 1)]; }
  Vertex next(Vertex v, long long steps = 1) const { return mod1(v + steps, rank()); }
  int max_length() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.c_ == b.c_; }
  friend bool operator<(const Algebra& a, const Algebra& b) { return a.c_ < b.c_; }

 private:
  friend Algebra validate_kupisch(int n, std::vector<int> series);
  explicit Algebra(std::vector<int> series) : c_(std::move(series)) {}
  std::vector<int> c_;
};

// ---------------------------------------------------------------------------
// Defining relations: the zero path with `arrows` arrows starting at `start`.
// Starts are exactly the vertices of minimal-length projectives; the socle of
// relation j sits at start_j + arrows_j - 1 (mod n).

struct Relation {
  Vertex start = 0;
  int arrows = 0;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct RelationSystem {
  int n = 0;
  std::vector<Relation> rels;  // nonempty, sorted by start, starts pairwise distinct

  int r() const { return static_cast<int>(rels.size()); }
  Vertex socle(int j) const {  // 1-based relation index
    const Relation& rel = rels[static_cast<size_t>(j - 1)];
    return mod1(rel.start + rel.arrows - 1, n);
  }
  std::vector<Vertex> starts() const;
  std::vector<Vertex> socles() const;  // in relation order (not sorted)

  friend bool operator==(const RelationSystem&, const RelationSystem&) = default;
};

// ---------------------------------------------------------------------------
// Enumeration of all algebras in a rank/length window.

struct EnumerationSpec {
  int rank_min = 1;
  int rank_max = 1;
  int max_len = 2;
  bool dedupe = true;  // keep one representative per rotation class
};

// ---------------------------------------------------------------------------
// Operations

Algebra validate_kupisch(int n, std::vector<int> series);
RelationSystem relations_from_kupisch(const Algebra& a);
Algebra kupisch_from_relations(const RelationSystem& rs);

// d[j] = composition length of the indecomposable injective with socle S_j.
std::vector<int> injective_lengths(const Algebra& a);

// Opposite algebra, relabelled v -> n+1-v so arrows again run i -> i+1.
Algebra opposite(const Algebra& a);

bool is_selfinjective(const Algebra& a);  // constant Kupisch series

// Lexicographically least rotation of the series.
Algebra canonicalize(const Algebra& a);

// All valid algebras in the window, rank-major then lexicographic; one
// representative per rotation class when spec.dedupe is set.
std::vector<Algebra> enumerate_kupisch(const EnumerationSpec& spec);

}  // namespace nakayama
