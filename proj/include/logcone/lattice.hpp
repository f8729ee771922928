#pragma once

#include "logcone/matrix.hpp"

#include <optional>
#include <vector>

namespace logcone {

// A finitely generated free abelian group with a distinguished basis.
struct Lattice {
  size_t rank = 0;
  bool operator==(const Lattice&) const = default;
};

// Hom of lattices: a target.rank x source.rank matrix acting on columns.
struct LatticeHom {
  Lattice source;
  Lattice target;
  Mat matrix;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

// u * m * v = d with u, v unimodular and d diagonal, nonnegative, each entry
// dividing the next. u_inv and v_inv are the exact inverses.
struct SnfDecomposition {
  Mat u, v, d;
  Mat u_inv, v_inv;
  std::vector<Int> diagonal;  // nonzero entries, in divisibility order
  size_t rank = 0;
};

struct CokernelInvariants {
  size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  bool operator==(const CokernelInvariants&) const = default;
};

// Projection to the quotient of the ambient lattice by the saturation of a
// sublattice, together with a section (proj * section = identity).
struct QuotientMap {
  Mat proj;     // (n - r) x n
  Mat section;  // n x (n - r)
};

SnfDecomposition smith_normal_form(const Mat& m);

CokernelInvariants cokernel_invariants(const Mat& m);

// Basis of ker(m), canonical (Hermite form rows). Always a saturated sublattice.
std::vector<Vec> kernel_basis(const Mat& m);

// Canonical (Hermite form) basis of the sublattice generated by the given
// vectors of Z^rank.
std::vector<Vec> hnf_basis(const std::vector<Vec>& gens, size_t rank);

// Basis of (Q-span of gens) intersected with Z^rank.
std::vector<Vec> saturate_sublattice(const std::vector<Vec>& gens, size_t rank);

// Basis of the intersection of two sublattices given by bases.
std::vector<Vec> lattice_intersection(const std::vector<Vec>& a,
                                      const std::vector<Vec>& b, size_t rank);

// One integer solution of (columns of basis) * x = v, if any.
std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& v,
                                 size_t rank);

// One integer solution of a * x = b, if any.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

// Whether a square matrix has an integer inverse.
bool is_unimodular(const Mat& a);

// Right inverse r with a * r = identity; requires a surjective over Z.
std::optional<Mat> right_inverse(const Mat& a);

// Membership of v in the sublattice generated by gens.
bool in_sublattice(const std::vector<Vec>& gens, const Vec& v, size_t rank);

// Quotient of Z^rank by the saturation of the sublattice generated by gens.
QuotientMap quotient_by_saturation(const std::vector<Vec>& gens, size_t rank);

}  // namespace logcone
