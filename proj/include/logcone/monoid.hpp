#pragma once

#include "logcone/cone.hpp"
#include "logcone/fan.hpp"

#include <vector>

namespace logcone {

// Finitely generated submonoid of Z^rank, kept with its real cone hull and the
// Hermite basis of the subgroup its generators span.
struct AffineMonoid {
  size_t rank = 0;
  std::vector<Vec> gens;  // sorted, deduped, no zero vector
  Cone hull;
  std::vector<Vec> group;
};

AffineMonoid make_monoid(std::vector<Vec> gens, size_t rank);

struct MonoidFace {
  Cone cone;
  std::vector<size_t> gen_indices;
  AffineMonoid monoid;
};

struct SharpenResult {
  AffineMonoid monoid;
  QuotientMap quotient;
};

struct GroupEmbedding {
  Mat basis;  // rank x group_rank, columns form the group basis
  AffineMonoid monoid;
};

// Generators lying in the lineality of the hull. These generate the unit
// group: any unit u satisfies -g = (c_g - 1)g + rest for each generator g
// appearing in it, so every such g is itself a unit.
std::vector<Vec> unit_generators(const AffineMonoid& m);
std::vector<Vec> unit_group_basis(const AffineMonoid& m);
bool is_sharp(const AffineMonoid& m);

// Quotient of the ambient lattice by the saturation of the unit group.
SharpenResult sharpen(const AffineMonoid& m);

// Exact membership. Units are split off first; the sharp part is searched
// with coefficients bounded by the degree functional summing the hull facet
// normals, which is strictly positive on every non-unit generator.
bool monoid_contains(const AffineMonoid& m, const Vec& v);
bool submonoid(const AffineMonoid& a, const AffineMonoid& b);
bool monoid_equal(const AffineMonoid& a, const AffineMonoid& b);

// Monoid of all lattice points of c in the full ambient lattice.
AffineMonoid monoid_of_lattice_points(const Cone& c);

// Coordinates on the group of m: m.rank x r basis matrix and the rebased
// monoid, whose generators span Z^r as a group.
GroupEmbedding rebase_to_group(const AffineMonoid& m);

// Minimal generating set of the saturation, for sharp m. Unique; sorted.
std::vector<Vec> hilbert_basis(const AffineMonoid& m);

// cone(m) intersected with the group of m, in the same ambient lattice.
AffineMonoid saturation(const AffineMonoid& m);
bool is_saturated(const AffineMonoid& m);

// Faces of the monoid, one per face of the hull, each generated by the
// generators it contains. Sorted by (dim, key).
std::vector<MonoidFace> monoid_faces(const AffineMonoid& m);

AffineMonoid localize_at_face(const AffineMonoid& m, const std::vector<size_t>& gen_indices);
AffineMonoid localize_at_element(const AffineMonoid& m, const Vec& w);

// Lattice points of the dual cone of the hull.
AffineMonoid dual_monoid(const AffineMonoid& m);

// Fan of the faces of the dual cone, in group coordinates. Requires sharp m.
Fan spec_fan(const AffineMonoid& m);

}  // namespace logcone
