#pragma once

#include <map>
#include <vector>

#include "logcone/fan.hpp"
#include "logcone/hom.hpp"
#include "logcone/lattice.hpp"
#include "logcone/monoid.hpp"
#include "logcone/report.hpp"

namespace logcone {

// Support of a fan, compared up to subdivision. The representative fan is
// normalized against the coordinate-hyperplane arrangement when the rank is
// within the pan guard; equality never depends on the representative.
struct Pan {
  Lattice lattice;
  Fan rep;
};

Pan pan_of_fan(const Fan& f);
// Pan of a single cone; the cone may contain lines (split along coordinate
// hyperplanes into pointed pieces).
Pan pan_of_cone(const Cone& c);

bool pan_equal(const Pan& a, const Pan& b);
// inner and outer live in the same lattice; support inclusion.
bool is_subpan(const Pan& inner, const Pan& outer);

// Lattice map whose real extension carries the source support into the
// target support; construction checks this cone by cone.
struct PanMorphism {
  LatticeHom map;
  Pan source;
  Pan target;
};

PanMorphism make_pan_morphism(const Pan& source, const Pan& target,
                              const Mat& matrix);
bool is_subpan_inclusion(const PanMorphism& m);

Pan pan_union(const Pan& a, const Pan& b);
Pan pan_intersection(const Pan& a, const Pan& b);

// Fan with support a whose cones inside each subpan form a subfan supported
// on that subpan; built by refining against completions of the subpan reps.
Fan refine_for_subpans(const Pan& a, const std::vector<Pan>& subpans);

bool is_closed_cover(const Pan& a, const std::vector<Pan>& parts);

struct CechCube {
  std::vector<Pan> cover;
  std::map<std::vector<int>, Pan> cells;
};

// Cell at tuple t is the intersection of a with the parts where t is 0.
CechCube cech_cube(const Pan& a, const std::vector<Pan>& parts);

// Support equals a single pointed cone.
bool is_strongly_convex(const Pan& a);
// Lattice points of the dual of the support cone; requires strong convexity.
AffineMonoid monoid_of_pan(const Pan& a);

// Trivial lattice-map kernel and image support equal to the target support.
bool is_isogeny(const PanMorphism& m);

// Union of the faces of the (strongly convex) source support whose extremal
// rays all map to nonzero vectors.
Pan vertical_locus(const PanMorphism& m);

// c intersected with the nonnegative sides of the given dual covectors.
Pan halfspace_region(const Pan& c, const std::vector<Vec>& xs);

// Hypothesis checks for the localization setup: strongly convex supports,
// isogeny of the fiber-product pan onto the product, the half-space cut of
// the dual support by the non-image generators, and the zero-fiber pan.
Report verify_pan7_setup(const MonoidHom& theta, const MonoidFace& g);

}  // namespace logcone
