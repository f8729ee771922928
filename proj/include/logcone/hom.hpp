#pragma once

#include <optional>
#include <vector>

#include "logcone/matrix.hpp"
#include "logcone/monoid.hpp"
#include "logcone/vec.hpp"

namespace logcone {

// Monoid homomorphism restricted from the linear map `matrix` on ambient
// lattices; construction checks that every source generator lands in target.
struct MonoidHom {
  AffineMonoid source;
  AffineMonoid target;
  Mat matrix;
};

MonoidHom make_hom(const AffineMonoid& source, const AffineMonoid& target,
                   const Mat& matrix);

MonoidHom identity_hom(const AffineMonoid& m);
MonoidHom multiplication_hom(const AffineMonoid& m, const Int& n);

// Matrix of the induced map between the group coordinates of source and
// target, as produced by rebase_to_group.
Mat hom_group_matrix(const MonoidHom& h);

bool is_injective(const MonoidHom& h);
bool is_local(const MonoidHom& h);
bool is_exact(const MonoidHom& h);

// Exactness of every localized map target face by target face; target must be
// sharp and within the face enumeration guard.
bool is_locally_exact(const MonoidHom& h);

bool is_kummer(const MonoidHom& h);

// Faces G of the target whose preimage face of the source is the unit face;
// requires h local and target sharp.
std::vector<MonoidFace> critical_faces(const MonoidHom& h);
std::vector<MonoidFace> maximal_critical_faces(const MonoidHom& h);

// Pushout of h : P -> Q and k : P -> P' over groups, with the quotient taken
// by the saturation of the antidiagonal so the result lattice is free.
// Coordinates: group coordinates of Q followed by group coordinates of P'.
struct PushoutResult {
  AffineMonoid integral;
  AffineMonoid fs;
  size_t rank = 0;
  Mat quotient;
  Mat section;
  Mat from_q;
  Mat from_pprime;
  GroupEmbedding q_embed;
  GroupEmbedding pprime_embed;
};

PushoutResult integral_pushout(const MonoidHom& h, const MonoidHom& k);

// Sharpened fs pushout together with the composite map from the pair lattice
// (group coordinates of Q then P') and a right inverse of it.
struct SharpPushout {
  AffineMonoid monoid;
  Mat composite;
  Mat section;
};

// Path one: pushout, saturate, sharpen.
SharpPushout sharp_pushout_direct(const MonoidHom& h, const MonoidHom& k);

// Path two: sharpen all three monoids, descend the maps, then pushout.
SharpPushout sharp_pushout_descended(const MonoidHom& h, const MonoidHom& k);

// Whether two sharp pushout presentations define the same quotient: equal
// composite kernels, a unimodular change of coordinates transporting one
// composite to the other, and that change matching the monoids.
bool sharp_pushouts_agree(const SharpPushout& a, const SharpPushout& b);

// Sharpened fs pushout; requires source and both targets saturated.
AffineMonoid sharpened_pushout(const MonoidHom& h, const MonoidHom& k);

// Whether the pushout of h along multiplication by n on its source is
// already saturated.
bool is_pushout_saturated_along_mult(const MonoidHom& h, const Int& n);

struct SaturationCertificate {
  Int exponent;
  PushoutResult witness;
};

// Least n in [1, n_max] whose pushout along multiplication by n is saturated;
// requires h injective, local, and locally exact.
SaturationCertificate find_saturation_exponent(const MonoidHom& h,
                                               const Int& n_max = 64);

// Chart data for the conservativity construction: eta : P -> P ⊕ P sending
// p to (p, np), the same map into P^gp ⊕ P, and the first projection back.
struct ConservCharts {
  AffineMonoid p_double;
  AffineMonoid p_prime;
  MonoidHom eta;
  MonoidHom incl;
  MonoidHom first_proj;
};

ConservCharts build_conserv_charts(const AffineMonoid& p, const Int& n);

}  // namespace logcone
