#include "logcone/pan.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "logcone/errors.hpp"
#include "logcone/guards.hpp"

namespace logcone {

namespace {

Fan orthant_fan(size_t rank) {
  std::vector<Vec> covs;
  for (size_t i = 0; i < rank; ++i) covs.push_back(unit_vec(rank, i));
  return arrangement_fan(covs, rank);
}

// Sign-normalized facet covectors of the maximal cones; any pointed cone's
// inequality list spans the dual space, so an arrangement on these is valid.
void fan_covectors(const Fan& f, std::set<Vec>* seen, std::vector<Vec>* covs) {
  for (const Cone& c : f.maximal_cones()) {
    for (const Vec& h : c.inequalities()) {
      Vec p = primitive_signed(h);
      if (seen->insert(p).second) covs->push_back(p);
    }
  }
}

Cone image_cone(const Mat& m, const Cone& c, size_t target_rank) {
  std::vector<Vec> gens;
  for (const Vec& g : c.generator_list()) gens.push_back(m.apply(g));
  return Cone::from_generators(gens, target_rank);
}

// Hull of the support, and whether the support equals that pointed cone.
bool strongly_convex_support(const Pan& a, Cone* hull_out) {
  std::vector<Vec> gens;
  for (const Cone& c : a.rep.maximal_cones()) {
    for (const Vec& g : c.generator_list()) gens.push_back(g);
  }
  Cone hull = Cone::from_generators(gens, a.lattice.rank);
  if (hull_out != nullptr) *hull_out = hull;
  if (!hull.is_pointed()) return false;
  return supports_equal(a.rep, make_fan({hull}, a.lattice.rank, false));
}

Vec pad_pair(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Cone product_cone(const Cone& a, const Cone& b) {
  std::vector<Vec> gens;
  for (const Vec& g : a.generator_list()) {
    gens.push_back(pad_pair(g, zero_vec(b.rank())));
  }
  for (const Vec& g : b.generator_list()) {
    gens.push_back(pad_pair(zero_vec(a.rank()), g));
  }
  return Cone::from_generators(gens, a.rank() + b.rank());
}

// Preimage {y : m y in c}.
Cone pullback_cone(const Cone& c, const Mat& m) {
  std::vector<Vec> rows;
  for (const Vec& h : c.inequalities()) {
    Vec row(m.cols, Int(0));
    for (size_t j = 0; j < m.cols; ++j) {
      for (size_t i = 0; i < m.rows; ++i) row[j] += h[i] * m.data[i][j];
    }
    rows.push_back(std::move(row));
  }
  return Cone::from_inequalities(rows, m.cols);
}

// Splits every cone by both sides of x; each piece is the cone or a face cut,
// so the result is again a fan.
Fan halfspace_split(const Fan& f, const Vec& x) {
  std::vector<Cone> pieces;
  for (const Cone& c : f.cones) {
    pieces.push_back(c.intersect_halfspace(x));
    pieces.push_back(c.intersect_halfspace(vec_neg(x)));
  }
  return make_fan(pieces, f.rank, false);
}

void require_same_lattice(const Pan& a, const Pan& b) {
  if (a.lattice.rank != b.lattice.rank) {
    throw PreconditionFailed("pan-lattice",
                             "pans live in lattices of different rank");
  }
}

// Common arrangement refinement of both reps. Every facet covector of every
// maximal cone of either rep occurs in the arrangement, so each refined piece
// is a face of an arrangement cell, and pieces from the two sides meet in
// common faces.
Fan refine_pair(const Pan& a, const Pan& b, Fan* ra, Fan* rb) {
  std::set<Vec> seen;
  std::vector<Vec> covs;
  fan_covectors(a.rep, &seen, &covs);
  fan_covectors(b.rep, &seen, &covs);
  Fan t = arrangement_fan(covs, a.lattice.rank);
  *ra = common_refinement(a.rep, t);
  *rb = common_refinement(b.rep, t);
  return t;
}

}  // namespace

Pan pan_of_fan(const Fan& f) {
  Pan p;
  p.lattice = Lattice{f.rank};
  if (f.rank == 0 || static_cast<int>(f.rank) > pan_rank_guard()) {
    p.rep = f;
    return p;
  }
  p.rep = common_refinement(f, orthant_fan(f.rank));
  return p;
}

Pan pan_of_cone(const Cone& c) {
  Pan p;
  p.lattice = Lattice{c.rank()};
  if (c.rank() == 0) {
    p.rep = make_fan({}, 0, false);
    return p;
  }
  if (static_cast<int>(c.rank()) > pan_rank_guard()) {
    if (c.is_pointed()) {
      p.rep = make_fan({c}, c.rank());
      return p;
    }
    throw InputTooLargeError(
        "pan of a cone with lines refused: rank exceeds guard");
  }
  // Pieces cut out by the orthant cells are pointed and meet face to face
  // even when c contains lines.
  std::vector<Cone> pieces;
  for (const Cone& t : orthant_fan(c.rank()).maximal_cones()) {
    pieces.push_back(t.intersect(c));
  }
  p.rep = make_fan(pieces, c.rank(), false);
  return p;
}

bool pan_equal(const Pan& a, const Pan& b) {
  require_same_lattice(a, b);
  return supports_equal(a.rep, b.rep);
}

bool is_subpan(const Pan& inner, const Pan& outer) {
  require_same_lattice(inner, outer);
  return support_subset(inner.rep, outer.rep);
}

PanMorphism make_pan_morphism(const Pan& source, const Pan& target,
                              const Mat& matrix) {
  if (matrix.rows != target.lattice.rank ||
      matrix.cols != source.lattice.rank) {
    throw PreconditionFailed("pan-morphism", "matrix shape does not match");
  }
  for (const Cone& s : source.rep.maximal_cones()) {
    Cone img = image_cone(matrix, s, target.lattice.rank);
    if (!fan_covers_cone(img, target.rep)) {
      throw PreconditionFailed("pan-morphism",
                               "image of a source cone leaves the target");
    }
  }
  PanMorphism m;
  m.map = LatticeHom{source.lattice, target.lattice, matrix};
  m.source = source;
  m.target = target;
  return m;
}

bool is_subpan_inclusion(const PanMorphism& m) {
  if (!is_unimodular(m.map.matrix)) return false;
  for (const Cone& s : m.source.rep.maximal_cones()) {
    Cone img = image_cone(m.map.matrix, s, m.target.lattice.rank);
    if (!fan_covers_cone(img, m.target.rep)) return false;
  }
  return true;
}

Pan pan_union(const Pan& a, const Pan& b) {
  require_same_lattice(a, b);
  size_t rank = a.lattice.rank;
  if (rank == 0) return a;
  if (static_cast<int>(rank) > pan_rank_guard()) {
    throw InputTooLargeError("pan union refused: rank exceeds guard");
  }
  Fan ra, rb;
  refine_pair(a, b, &ra, &rb);
  std::vector<Cone> merged = ra.cones;
  merged.insert(merged.end(), rb.cones.begin(), rb.cones.end());
  Pan out;
  out.lattice = a.lattice;
  out.rep = make_fan(merged, rank, false);
  return out;
}

Pan pan_intersection(const Pan& a, const Pan& b) {
  require_same_lattice(a, b);
  size_t rank = a.lattice.rank;
  if (rank == 0) return a;
  if (static_cast<int>(rank) > pan_rank_guard()) {
    throw InputTooLargeError("pan intersection refused: rank exceeds guard");
  }
  Fan ra, rb;
  refine_pair(a, b, &ra, &rb);
  // A refined piece lies in |b| iff one maximal cone of b contains it: the
  // maximal cones of b are unions of arrangement faces, and the piece is one.
  std::vector<Cone> keep;
  std::vector<Cone> bmax = b.rep.maximal_cones();
  for (const Cone& c : ra.cones) {
    for (const Cone& m : bmax) {
      if (m.contains(c)) {
        keep.push_back(c);
        break;
      }
    }
  }
  Pan out;
  out.lattice = a.lattice;
  out.rep = make_fan(keep, rank, false);
  return out;
}

Fan refine_for_subpans(const Pan& a, const std::vector<Pan>& subpans) {
  if (subpans.size() > static_cast<size_t>(kMaxSubpans)) {
    throw InputTooLargeError("subpan refinement refused: too many subpans");
  }
  if (static_cast<int>(a.lattice.rank) > pan_rank_guard()) {
    throw InputTooLargeError("subpan refinement refused: rank exceeds guard");
  }
  for (const Pan& b : subpans) {
    if (b.lattice.rank != a.lattice.rank || !is_subpan(b, a)) {
      throw PreconditionFailed("subpan",
                               "refinement needs subpans of the ambient pan");
    }
  }
  if (a.lattice.rank == 0) return a.rep;
  // After refining against a completion of b's rep, every cone lies inside or
  // outside |b|, and the cones inside are pieces of cones of the completion,
  // hence form a subfan supported on |b|. Later refinements preserve this.
  Fan sigma = a.rep;
  for (const Pan& b : subpans) {
    sigma = common_refinement(sigma, complete_fan(b.rep));
  }
  return sigma;
}

bool is_closed_cover(const Pan& a, const std::vector<Pan>& parts) {
  for (const Pan& p : parts) {
    if (p.lattice.rank != a.lattice.rank || !is_subpan(p, a)) {
      throw PreconditionFailed("subpan", "cover parts must be subpans");
    }
  }
  if (parts.empty()) {
    Pan empty;
    empty.lattice = a.lattice;
    empty.rep = make_fan({}, a.lattice.rank, false);
    return pan_equal(empty, a);
  }
  Pan u = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) u = pan_union(u, parts[i]);
  return pan_equal(u, a);
}

CechCube cech_cube(const Pan& a, const std::vector<Pan>& parts) {
  if (parts.size() > static_cast<size_t>(kMaxSubpans)) {
    throw InputTooLargeError("cube refused: too many cover parts");
  }
  for (const Pan& p : parts) {
    if (p.lattice.rank != a.lattice.rank || !is_subpan(p, a)) {
      throw PreconditionFailed("subpan", "cover parts must be subpans");
    }
  }
  CechCube cube;
  cube.cover = parts;
  size_t n = parts.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = static_cast<int>((mask >> i) & 1);
    Pan cell = a;
    for (size_t i = 0; i < n; ++i) {
      if (t[i] == 0) cell = pan_intersection(cell, parts[i]);
    }
    cube.cells.emplace(std::move(t), std::move(cell));
  }
  return cube;
}

bool is_strongly_convex(const Pan& a) {
  return strongly_convex_support(a, nullptr);
}

AffineMonoid monoid_of_pan(const Pan& a) {
  Cone hull;
  if (!strongly_convex_support(a, &hull)) {
    throw NotStronglyConvexError("pan support is not a strongly convex cone");
  }
  return monoid_of_lattice_points(hull.dual());
}

bool is_isogeny(const PanMorphism& m) {
  if (!kernel_basis(m.map.matrix).empty()) return false;
  size_t tr = m.target.lattice.rank;
  Pan img;
  img.lattice = m.target.lattice;
  img.rep = make_fan({}, tr, false);
  for (const Cone& s : m.source.rep.maximal_cones()) {
    img = pan_union(img, pan_of_cone(image_cone(m.map.matrix, s, tr)));
  }
  return pan_equal(img, m.target);
}

Pan vertical_locus(const PanMorphism& m) {
  Cone src_hull;
  if (!strongly_convex_support(m.source, &src_hull)) {
    throw NotStronglyConvexError("vertical locus needs a strongly convex source");
  }
  if (!strongly_convex_support(m.target, nullptr)) {
    throw NotStronglyConvexError("vertical locus needs a strongly convex target");
  }
  // A face all of whose extremal rays map to nonzero vectors; the set of such
  // faces is closed under taking faces.
  std::vector<Cone> good;
  for (const Cone& f : src_hull.faces()) {
    bool ok = true;
    for (const Vec& r : f.rays()) {
      if (is_zero(m.map.apply(r))) {
        ok = false;
        break;
      }
    }
    if (ok) good.push_back(f);
  }
  Pan out;
  out.lattice = m.source.lattice;
  out.rep = make_fan(good, m.source.lattice.rank, false);
  return out;
}

Pan halfspace_region(const Pan& c, const std::vector<Vec>& xs) {
  Fan f = c.rep;
  for (const Vec& x : xs) {
    if (x.size() != c.lattice.rank) {
      throw PreconditionFailed("halfspace", "covector length does not match");
    }
    if (is_zero(x)) continue;
    f = halfspace_split(f, x);
  }
  // Every cone now lies on one side of each covector, so keeping the cones
  // whose generators all pair nonnegatively carves the region exactly.
  std::vector<Cone> keep;
  for (const Cone& k : f.cones) {
    bool ok = true;
    for (const Vec& x : xs) {
      for (const Vec& g : k.generator_list()) {
        if (dot(x, g) < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) keep.push_back(k);
  }
  Pan out;
  out.lattice = c.lattice;
  out.rep = make_fan(keep, c.lattice.rank, false);
  return out;
}

Report verify_pan7_setup(const MonoidHom& theta, const MonoidFace& g) {
  if (!is_injective(theta)) {
    throw PreconditionFailed("injective", "setup needs an injective map");
  }
  if (!is_local(theta)) {
    throw PreconditionFailed("local", "setup needs a local map");
  }
  if (!is_locally_exact(theta)) {
    throw PreconditionFailed("locally-exact", "setup needs a locally exact map");
  }
  bool critical = false;
  for (const MonoidFace& f : maximal_critical_faces(theta)) {
    if (f.cone == g.cone) critical = true;
  }
  if (!critical) {
    throw PreconditionFailed("critical",
                             "the face is not a maximal critical face");
  }

  GroupEmbedding ep = rebase_to_group(theta.source);
  GroupEmbedding eq = rebase_to_group(theta.target);
  GroupEmbedding eg = rebase_to_group(g.monoid);
  size_t rp = ep.monoid.rank;
  size_t rq = eq.monoid.rank;
  size_t rg = eg.monoid.rank;

  Cone dual_p = ep.monoid.hull.dual();
  Cone dual_g = eg.monoid.hull.dual();
  Cone dual_q = eq.monoid.hull.dual();
  Pan a = pan_of_cone(dual_p);
  Pan b = pan_of_cone(dual_g);
  Pan d = pan_of_cone(dual_q);

  Report r;
  r.command = "pan7-setup";
  bool convex =
      is_strongly_convex(a) && is_strongly_convex(b) && is_strongly_convex(d);
  r.add("strongly-convex-supports", convex,
        "dual supports of the source, the face, and the target");

  // On dual spaces the pair (theta, inclusion) transposes to a single map
  // from the dual of the target group.
  Mat mtheta = hom_group_matrix(theta);
  MonoidHom incl =
      make_hom(g.monoid, theta.target, Mat::identity(theta.target.rank));
  Mat miota = hom_group_matrix(incl);
  Mat alpha(rp + rg, rq);
  for (size_t i = 0; i < rp; ++i) {
    for (size_t j = 0; j < rq; ++j) alpha.data[i][j] = mtheta.data[j][i];
  }
  for (size_t i = 0; i < rg; ++i) {
    for (size_t j = 0; j < rq; ++j) alpha.data[rp + i][j] = miota.data[j][i];
  }

  Cone prod = product_cone(dual_p, dual_g);
  Pan axb = pan_of_cone(prod);
  Cone c_cone = pullback_cone(prod, alpha);
  Pan c = pan_of_cone(c_cone);
  bool isogeny = false;
  std::string isogeny_note = "fiber pan onto the product of dual supports";
  try {
    PanMorphism to_product = make_pan_morphism(c, axb, alpha);
    isogeny = is_isogeny(to_product);
  } catch (const PreconditionFailed& e) {
    isogeny_note = e.what();
  }
  r.add("isogeny-to-product", isogeny, isogeny_note);

  // Target generators outside the image monoid, in group coordinates; they
  // pair with the dual space the fiber pan lives in.
  std::vector<Vec> image_gens;
  for (const Vec& pg : theta.source.gens) {
    image_gens.push_back(theta.matrix.apply(pg));
  }
  AffineMonoid image = make_monoid(std::move(image_gens), theta.target.rank);
  std::vector<Vec> qcols = eq.basis.columns();
  std::vector<Vec> xs;
  for (const Vec& qg : theta.target.gens) {
    if (!monoid_contains(image, qg)) {
      xs.push_back(*solve_in_span(qcols, qg, theta.target.rank));
    }
  }
  Pan cut = halfspace_region(c, xs);
  r.add("halfspace-cut", pan_equal(cut, d),
        "the non-image generators carve the dual support out of the fiber");

  Cone axzero = product_cone(dual_p, Cone::zero(rg));
  Cone fiber = pullback_cone(axzero, alpha);
  AffineMonoid localized = localize_at_face(theta.target, g.gen_indices);
  GroupEmbedding eql = rebase_to_group(localized);
  Cone dual_localized = eql.monoid.hull.dual();
  r.add("zero-fiber-localization",
        pan_equal(pan_of_cone(fiber), pan_of_cone(dual_localized)),
        "zero fiber equals the dual support of the localized target");

  bool inside = true;
  for (const Vec& y : fiber.generator_list()) {
    for (const Vec& x : xs) {
      if (dot(x, y) < 0) inside = false;
    }
  }
  r.add("zero-fiber-halfspace", inside,
        "zero fiber lies on the nonnegative side of every cut");
  return r;
}

}  // namespace logcone
