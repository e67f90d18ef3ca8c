#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

/// A point (b1..b10) of R^10, paired with the class l0 - sum b_i l_i.
struct ChamberPoint {
  std::array<Rational, 10> b;

  static ChamberPoint from(std::span<const Rational> coords);
  /// Exact parse of a comma-separated list of 10 rationals.
  static ChamberPoint parse(std::string_view text);

  LatticeVector class_vector() const { return classes::chamber_class(b); }
  std::string str() const;

  friend bool operator==(const ChamberPoint&, const ChamberPoint&) = default;
};

enum class Region {
  open,    // Delta: b10 > 0
  closed,  // closure of Delta: b10 >= 0
};

/// Exact test of sum b = 3, b1+b2+b3 <= 1, b nonincreasing, and b10 > 0 (open) or >= 0 (closed).
bool in_chamber(const ChamberPoint& p, Region region);

/// Cone membership for an 11-tuple (a, b1..b10): sum b = 3a, b1+b2+b3 <= a,
/// b nonincreasing. Returns the scale a when inside.
std::optional<Rational> in_chamber_cone(std::span<const Rational> a_then_b);

/// Cone membership for a class a l0 - sum b_i l_i given in basis L.
std::optional<Rational> in_chamber_cone(const LatticeVector& v_l);

/// V1..V9 as listed for the chamber.
const std::array<ChamberPoint, 9>& vertices();

/// Independent vertex enumeration of the closed chamber: every choice of 9 of
/// the 11 facet inequalities made tight, together with sum b = 3, is solved
/// exactly and kept when feasible. Ordered by b10 descending, then b
/// lexicographically descending.
std::vector<ChamberPoint> enumerate_vertices_oracle();

/// Every extreme point of the closed chamber: the listed V1..V9 plus the
/// equal point (3/10,...,3/10), which the list omits. Anything that argues by
/// convexity over the chamber uses this set.
const std::vector<ChamberPoint>& extreme_points();

// ---------------------------------------------------------------------------
// Weyl reduction

struct ReductionTrace {
  /// Roots li - lj (transpositions) and l0 - li - lj - lk (Cremona moves), in
  /// basis L, in order of application.
  std::vector<ReflectionDescriptor> word;
  /// The -id diffeomorphism, applied before the word.
  bool sign_flip = false;
  /// The output is the reflected vector divided by this factor.
  Rational scale = 1;

  /// sign flip, then the word, then division by scale.
  LatticeVector replay(const LatticeVector& input_l) const;
  /// Inverse of replay: recovers the input from the output.
  LatticeVector unwind(const LatticeVector& output_l) const;

  std::size_t cremona_moves() const;
};

struct Reduction {
  /// Chamber representative a l0 - sum b_i l_i in basis L; a = 1 when normalized.
  LatticeVector output;
  /// The normalized chamber coordinates b_i / a.
  ChamberPoint point;
  ReductionTrace trace;
};

/// Moves a forward-cone class (v^2 > 0, or v^2 = 0 with v != 0) of Q_S (x) Q
/// into the chamber cone by transpositions and Cremona moves. Accepts basis L
/// (must be orthogonal to k) or basis E (mapped through psi). Deterministic:
/// stable descending sort with adjacent transpositions, Cremona move on the
/// first three coordinates whenever a < b1 + b2 + b3.
Reduction reduce(const LatticeVector& v, bool normalize = true);

enum class Dominance { F_dominates, G_dominates, equal, incomparable };
const char* to_string(Dominance d);

/// Compares (v_i, F) with (v_i, G) at every extreme point. Since the
/// closed chamber is the convex hull of its vertices, F_dominates means
/// (b, F) >= (b, G) on the whole closed chamber.
Dominance compare_on_chamber(const LatticeVector& F, const LatticeVector& G);

}  // namespace enriques
