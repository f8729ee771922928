#include <doctest.h>

#include <vector>

#include "logcone/errors.hpp"
#include "logcone/pan.hpp"
#include "test_util.hpp"

using namespace logcone;
using testutil::rand_int;
using testutil::rand_vec;
using testutil::Rng;

namespace {

Fan units_arrangement(size_t rank) {
  std::vector<Vec> covectors;
  for (size_t i = 0; i < rank; ++i) covectors.push_back(unit_vec(rank, i));
  return arrangement_fan(covectors, rank);
}

Fan random_complete_fan(Rng& rng, size_t rank, int extras, int bound) {
  std::vector<Vec> covectors;
  for (size_t i = 0; i < rank; ++i) covectors.push_back(unit_vec(rank, i));
  for (int k = 0; k < extras; ++k) {
    Vec h = rand_vec(rng, rank, -bound, bound);
    if (!is_zero(h)) covectors.push_back(h);
  }
  return arrangement_fan(covectors, rank);
}

// Random subpan: the pan of a few maximal cones of a complete fan.
Pan random_subpan(Rng& rng, const Fan& f) {
  std::vector<Cone> maximal = f.maximal_cones();
  std::vector<Cone> chosen;
  for (const Cone& c : maximal) {
    if (rand_int(rng, 0, 2) == 0) chosen.push_back(c);
  }
  if (chosen.empty()) chosen.push_back(maximal.front());
  return pan_of_fan(make_fan(chosen, f.rank));
}

Cone quadrant(size_t rank) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < rank; ++i) gens.push_back(unit_vec(rank, i));
  return Cone::from_generators(gens, rank);
}

}  // namespace

TEST_CASE("pan equality ignores the representative subdivision") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    size_t rank = trial < 8 ? 2 : 3;
    Fan f = random_complete_fan(rng, rank, 1, 2);
    Pan p = pan_of_fan(f);
    // Refining the representative changes nothing.
    Fan finer = common_refinement(f, random_complete_fan(rng, rank, 1, 2));
    Pan q = pan_of_fan(finer);
    CHECK(pan_equal(p, q));
    CHECK(is_subpan(p, q));
    CHECK(is_subpan(q, p));
    // Equality is symmetric and reflexive.
    CHECK(pan_equal(p, p));
    CHECK(pan_equal(q, p));
  }
}

TEST_CASE("pan of a cone equals the pan of any fan subdividing it") {
  Cone q = quadrant(2);
  Pan direct = pan_of_cone(q);
  Cone lower = Cone::from_generators({unit_vec(2, 0), Vec{Int(1), Int(1)}}, 2);
  Cone upper = Cone::from_generators({Vec{Int(1), Int(1)}, unit_vec(2, 1)}, 2);
  Pan split = pan_of_fan(make_fan({lower, upper}, 2));
  CHECK(pan_equal(direct, split));

  // A cone with lines still yields a pan.
  Cone half = Cone::from_inequalities({unit_vec(2, 1)}, 2);
  Pan hp = pan_of_cone(half);
  CHECK(is_subpan(direct, hp));
  CHECK_FALSE(is_subpan(hp, direct));
}

TEST_CASE("union and intersection are lattice operations on subpans") {
  Rng rng(72);
  Fan ambient_fan = units_arrangement(2);
  Pan ambient = pan_of_fan(ambient_fan);
  for (int trial = 0; trial < 12; ++trial) {
    Pan a = random_subpan(rng, ambient_fan);
    Pan b = random_subpan(rng, ambient_fan);
    Pan c = random_subpan(rng, ambient_fan);
    Pan ab = pan_union(a, b);
    Pan ba = pan_union(b, a);
    CHECK(pan_equal(ab, ba));
    CHECK(pan_equal(pan_union(a, a), a));
    CHECK(pan_equal(pan_union(pan_union(a, b), c), pan_union(a, pan_union(b, c))));
    CHECK(is_subpan(a, ab));
    CHECK(is_subpan(b, ab));
    CHECK(is_subpan(ab, ambient));

    Pan meet = pan_intersection(a, b);
    CHECK(pan_equal(meet, pan_intersection(b, a)));
    CHECK(pan_equal(pan_intersection(a, a), a));
    CHECK(is_subpan(meet, a));
    CHECK(is_subpan(meet, b));
    Pan meet3 = pan_intersection(pan_intersection(a, b), c);
    CHECK(pan_equal(meet3, pan_intersection(a, pan_intersection(b, c))));

    // Absorption ties the two operations together.
    CHECK(pan_equal(pan_union(a, meet), a));
    CHECK(pan_equal(pan_intersection(a, ab), a));
  }
}

TEST_CASE("subpan inclusions are witnessed by identity morphisms") {
  Rng rng(73);
  Fan ambient_fan = units_arrangement(2);
  Pan ambient = pan_of_fan(ambient_fan);
  for (int trial = 0; trial < 8; ++trial) {
    Pan a = random_subpan(rng, ambient_fan);
    PanMorphism inc = make_pan_morphism(a, ambient, Mat::identity(2));
    CHECK(is_subpan_inclusion(inc));
    // An inclusion is an isogeny only onto the whole ambient pan.
    if (is_isogeny(inc)) CHECK(pan_equal(a, ambient));
  }
  // A non-inclusion morphism: fold the plane onto a line.
  Mat fold(2, 2);
  fold.data = {{Int(1), Int(0)}, {Int(0), Int(0)}};
  PanMorphism pm = make_pan_morphism(ambient, ambient, fold);
  CHECK_FALSE(is_subpan_inclusion(pm));
  CHECK_FALSE(is_isogeny(pm));
}

TEST_CASE("pan morphisms must carry the support into the target") {
  Pan quad = pan_of_cone(quadrant(2));
  Pan line = pan_of_cone(Cone::from_generators({unit_vec(2, 0)}, 2));
  CHECK_THROWS_AS(make_pan_morphism(quad, line, Mat::identity(2)),
                  PreconditionFailed);
}

TEST_CASE("refinement for subpans induces a subfan on each subpan") {
  Rng rng(74);
  for (int trial = 0; trial < 8; ++trial) {
    size_t rank = trial < 6 ? 2 : 3;
    Fan f = random_complete_fan(rng, rank, 1, 1);
    Pan ambient = pan_of_fan(f);
    std::vector<Pan> subpans;
    size_t count = static_cast<size_t>(rand_int(rng, 1, 3));
    for (size_t i = 0; i < count; ++i) subpans.push_back(random_subpan(rng, f));
    Fan refined = refine_for_subpans(ambient, subpans);
    CHECK_NOTHROW(make_fan(refined.cones, rank));
    CHECK(pan_equal(pan_of_fan(refined), ambient));
    for (const Pan& sp : subpans) {
      std::vector<Cone> inside;
      for (const Cone& c : refined.maximal_cones()) {
        if (is_subpan(pan_of_cone(c), sp)) inside.push_back(c);
      }
      Fan induced = make_fan(inside, rank);
      CHECK(is_subfan(induced, refined));
      CHECK(pan_equal(pan_of_fan(induced), sp));
    }
  }
}

TEST_CASE("closed covers are recognized and gaps rejected") {
  Fan f = units_arrangement(2);
  Pan ambient = pan_of_fan(f);
  std::vector<Cone> maximal = f.maximal_cones();
  REQUIRE(maximal.size() == 4);
  std::vector<Pan> parts;
  for (const Cone& c : maximal) parts.push_back(pan_of_cone(c));
  CHECK(is_closed_cover(ambient, parts));
  std::vector<Pan> missing(parts.begin(), parts.end() - 1);
  CHECK_FALSE(is_closed_cover(ambient, missing));
}

TEST_CASE("cech cube cells shrink monotonically") {
  Fan f = units_arrangement(2);
  Pan ambient = pan_of_fan(f);
  std::vector<Cone> maximal = f.maximal_cones();
  std::vector<Pan> parts;
  parts.push_back(pan_of_cone(maximal[0]));
  parts.push_back(pan_of_cone(maximal[1]));
  CechCube cube = cech_cube(ambient, parts);
  REQUIRE(cube.cells.size() == 4);
  // The all-ones cell is the whole pan, the all-zeros cell the intersection.
  Pan whole = cube.cells.at({1, 1});
  CHECK(pan_equal(whole, ambient));
  Pan both = cube.cells.at({0, 0});
  CHECK(pan_equal(both, pan_intersection(parts[0], parts[1])));
  // Setting a coordinate to zero only shrinks the cell.
  CHECK(is_subpan(cube.cells.at({0, 1}), whole));
  CHECK(is_subpan(both, cube.cells.at({0, 1})));
  CHECK(is_subpan(both, cube.cells.at({1, 0})));
  CHECK(pan_equal(cube.cells.at({0, 1}), parts[0]));
  CHECK(pan_equal(cube.cells.at({1, 0}), parts[1]));
}

TEST_CASE("strong convexity gates the monoid of a pan") {
  Pan quad = pan_of_cone(quadrant(2));
  CHECK(is_strongly_convex(quad));
  AffineMonoid m = monoid_of_pan(quad);
  CHECK(is_saturated(m));
  CHECK(is_sharp(m));
  REQUIRE(m.gens.size() == 2);

  // The union of two opposite quadrants is not a cone.
  Cone neg = Cone::from_generators(
      {vec_neg(unit_vec(2, 0)), vec_neg(unit_vec(2, 1))}, 2);
  Pan wedge = pan_union(quad, pan_of_cone(neg));
  CHECK_FALSE(is_strongly_convex(wedge));
  CHECK_THROWS_AS(monoid_of_pan(wedge), NotStronglyConvexError);

  // The full plane is a cone but not pointed.
  Pan plane = pan_of_cone(Cone::full_space(2));
  CHECK_FALSE(is_strongly_convex(plane));
}

TEST_CASE("vertical locus of the identity is everything") {
  Pan quad = pan_of_cone(quadrant(2));
  PanMorphism ident = make_pan_morphism(quad, quad, Mat::identity(2));
  CHECK(pan_equal(vertical_locus(ident), quad));
  CHECK(is_isogeny(ident));
}

TEST_CASE("vertical locus keeps exactly the faces mapping without collapse") {
  // Project the quadrant onto its first axis: the y axis collapses.
  Pan quad = pan_of_cone(quadrant(2));
  Pan axis = pan_of_cone(Cone::from_generators({unit_vec(1, 0)}, 1));
  Mat proj(1, 2);
  proj.data = {{Int(1), Int(0)}};
  PanMorphism pm = make_pan_morphism(quad, axis, proj);
  Pan vert = vertical_locus(pm);
  Pan expected = pan_of_cone(Cone::from_generators({unit_vec(2, 0)}, 2));
  CHECK(pan_equal(vert, expected));
  // Faces of the vertical locus map with no extremal ray collapsing.
  for (const Cone& c : vert.rep.cones) {
    for (const Vec& r : c.rays()) {
      CHECK_FALSE(is_zero(proj.apply(r)));
    }
  }
}

TEST_CASE("halfspace regions slice by signs and stack to a hyperplane cut") {
  Pan plane = pan_of_cone(Cone::full_space(2));
  Vec x = unit_vec(2, 0);
  Pan upper = halfspace_region(plane, {x});
  Pan lower = halfspace_region(plane, {vec_neg(x)});
  Pan slice = pan_intersection(upper, lower);
  Pan expected = pan_of_cone(
      Cone::from_generators({unit_vec(2, 1), vec_neg(unit_vec(2, 1))}, 2));
  CHECK(pan_equal(slice, expected));
  CHECK(pan_equal(pan_union(upper, lower), plane));

  // Two covectors cut down to a quadrant.
  Pan quad = halfspace_region(plane, {unit_vec(2, 0), unit_vec(2, 1)});
  CHECK(pan_equal(quad, pan_of_cone(quadrant(2))));
}

TEST_CASE("localization setup holds for the diagonal embedding") {
  AffineMonoid src = make_monoid({unit_vec(1, 0)}, 1);
  AffineMonoid dst = make_monoid({unit_vec(2, 0), unit_vec(2, 1)}, 2);
  Mat m(2, 1);
  m.data = {{Int(1)}, {Int(1)}};
  MonoidHom theta = make_hom(src, dst, m);
  std::vector<MonoidFace> crit = maximal_critical_faces(theta);
  REQUIRE(!crit.empty());
  for (const MonoidFace& g : crit) {
    Report r = verify_pan7_setup(theta, g);
    CHECK(r.overall());
    CHECK(!r.entries.empty());
  }
}

TEST_CASE("localization setup rejects non-critical faces") {
  AffineMonoid src = make_monoid({unit_vec(2, 0), unit_vec(2, 1)}, 2);
  MonoidHom ident = identity_hom(src);
  // The full face is never critical for the identity.
  std::vector<MonoidFace> faces = monoid_faces(src);
  const MonoidFace* full = nullptr;
  for (const MonoidFace& f : faces) {
    if (f.cone.dim() == 2) full = &f;
  }
  REQUIRE(full != nullptr);
  CHECK_THROWS_AS(verify_pan7_setup(ident, *full), PreconditionFailed);
}

TEST_CASE("pans built from guarded ranks are refused") {
  size_t guard = face_rank_guard();
  if (guard > 8) return;
  size_t rank = guard + 1;
  std::vector<Vec> gens;
  for (size_t i = 0; i < rank; ++i) {
    gens.push_back(unit_vec(rank, i));
    gens.push_back(vec_neg(unit_vec(rank, i)));
  }
  Cone full = Cone::from_generators(gens, rank);
  CHECK_THROWS_AS(pan_of_cone(full), InputTooLargeError);
}
