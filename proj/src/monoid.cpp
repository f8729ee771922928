#include "logcone/monoid.hpp"

#include "logcone/guards.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace logcone {

namespace {

// Lattice points of the half-open parallelepiped spanned by the columns of a
// full-rank square matrix, nonzero ones only: coset representatives of the
// column lattice, folded into the box by rational floor.
std::vector<Vec> parallelepiped_points(const std::vector<Vec>& cols, size_t d) {
  Mat v = Mat::from_columns(cols, d);
  SnfDecomposition s = smith_normal_form(v);
  Int lcm(1);
  for (const Int& di : s.diagonal) lcm = lcm / int_gcd(lcm, di) * di;

  std::vector<Vec> out;
  Vec k(d, Int(0));
  while (true) {
    Vec rep = s.u_inv.apply(k);
    // t = v^{-1} rep = w (diag 1/d_i) u rep; fold rep by v * floor(t).
    Vec y = s.u.apply(rep);
    Vec num(d, Int(0));
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < d; ++i)
        num[j] += s.v.data[j][i] * y[i] * (lcm / s.diagonal[i]);
    Vec fl(d);
    for (size_t j = 0; j < d; ++j) fl[j] = floor_div(num[j], lcm);
    Vec reduced = vec_sub(rep, v.apply(fl));
    if (!is_zero(reduced)) out.push_back(reduced);

    size_t i = 0;
    while (i < d && k[i] + 1 == s.diagonal[i]) k[i++] = 0;
    if (i == d) break;
    k[i] += 1;
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void pulling_triangulation(const Cone& c, std::vector<std::vector<Vec>>& out) {
  const std::vector<Vec>& rays = c.rays();
  if (rays.size() == c.dim()) {
    out.push_back(rays);
    return;
  }
  const Vec& r0 = rays.front();
  for (const Cone& f : c.facets()) {
    if (f.contains(r0)) continue;
    std::vector<std::vector<Vec>> sub;
    pulling_triangulation(f, sub);
    for (std::vector<Vec>& t : sub) {
      t.push_back(r0);
      out.push_back(std::move(t));
    }
  }
}

// Degree functional: sum of all stored inequalities. Equation pairs cancel,
// facet normals remain, so it is strictly positive on the cone minus its
// lineality and vanishes on the lineality.
Vec degree_functional(const Cone& c) {
  Vec w = zero_vec(c.rank());
  for (const Vec& h : c.inequalities()) w = vec_add(w, h);
  return w;
}

// Hilbert basis of C cap Z^n for a pointed cone C, via a pulling
// triangulation in saturated span coordinates and a greedy irreducibility
// filter in degree order.
std::vector<Vec> hilbert_core(const Cone& c) {
  if (c.dim() == 0) return {};
  size_t n = c.rank();

  std::vector<Vec> span_basis = saturate_sublattice(c.generator_list(), n);
  size_t d = span_basis.size();
  std::vector<Vec> rays_d;
  for (const Vec& r : c.rays()) {
    auto x = solve_in_span(span_basis, r, n);
    rays_d.push_back(*x);
  }
  Cone cd = Cone::from_generators(rays_d, d);

  std::set<Vec> cand(cd.rays().begin(), cd.rays().end());
  std::vector<std::vector<Vec>> simplices;
  pulling_triangulation(cd, simplices);
  for (const std::vector<Vec>& s : simplices)
    for (Vec& p : parallelepiped_points(s, d)) cand.insert(std::move(p));

  Vec w = degree_functional(cd);
  std::vector<Vec> ordered(cand.begin(), cand.end());
  std::sort(ordered.begin(), ordered.end(), [&](const Vec& a, const Vec& b) {
    Int wa = dot(w, a), wb = dot(w, b);
    if (wa != wb) return wa < wb;
    return lex_less(a, b);
  });

  std::vector<Vec> basis_d;
  for (const Vec& x : ordered) {
    bool reducible = false;
    for (const Vec& h : basis_d) {
      Vec r = vec_sub(x, h);
      if (!is_zero(r) && cd.contains(r)) { reducible = true; break; }
    }
    if (!reducible) basis_d.push_back(x);
  }

  Mat back = Mat::from_rows(span_basis, n).transpose();
  std::vector<Vec> out;
  for (const Vec& x : basis_d) out.push_back(back.apply(x));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Mat group_column_matrix(const AffineMonoid& m) {
  return Mat::from_rows(m.group, m.rank).transpose();
}

}  // namespace

AffineMonoid make_monoid(std::vector<Vec> gens, size_t rank) {
  for (const Vec& g : gens)
    if (g.size() != rank) throw PreconditionFailed("monoid generator rank mismatch");
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Vec& g) { return is_zero(g); }),
             gens.end());
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  AffineMonoid m;
  m.rank = rank;
  m.hull = Cone::from_generators(gens, rank);
  m.group = hnf_basis(gens, rank);
  m.gens = std::move(gens);
  return m;
}

std::vector<Vec> unit_generators(const AffineMonoid& m) {
  std::vector<Vec> out;
  for (const Vec& g : m.gens) {
    bool in_lineality = true;
    for (const Vec& h : m.hull.inequalities())
      if (dot(h, g) != 0) { in_lineality = false; break; }
    if (in_lineality) out.push_back(g);
  }
  return out;
}

std::vector<Vec> unit_group_basis(const AffineMonoid& m) {
  return hnf_basis(unit_generators(m), m.rank);
}

bool is_sharp(const AffineMonoid& m) { return unit_generators(m).empty(); }

SharpenResult sharpen(const AffineMonoid& m) {
  SharpenResult r;
  r.quotient = quotient_by_saturation(unit_group_basis(m), m.rank);
  std::vector<Vec> gens;
  for (const Vec& g : m.gens) gens.push_back(r.quotient.proj.apply(g));
  r.monoid = make_monoid(std::move(gens), r.quotient.proj.rows);
  return r;
}

namespace {

bool sharp_part_member(const std::vector<Vec>& gens, const std::vector<Vec>& unit_gens,
                       const Cone& hull, const Vec& w, const Vec& v, size_t idx,
                       std::set<std::pair<size_t, Vec>>& failed, size_t rank) {
  if (!hull.contains(v)) return false;
  if (idx == gens.size())
    return unit_gens.empty() ? is_zero(v) : in_sublattice(unit_gens, v, rank);
  auto key = std::make_pair(idx, v);
  if (failed.count(key)) return false;

  Int wg = dot(w, gens[idx]);
  Int top = floor_div(dot(w, v), wg);
  if (top < 0) top = 0;
  for (Int c = top; c >= 0; --c) {
    if (sharp_part_member(gens, unit_gens, hull, w, vec_sub(v, vec_scale(c, gens[idx])),
                          idx + 1, failed, rank))
      return true;
  }
  failed.insert(key);
  return false;
}

}  // namespace

bool monoid_contains(const AffineMonoid& m, const Vec& v) {
  if (v.size() != m.rank) throw PreconditionFailed("point rank mismatch");
  if (is_zero(v)) return true;
  if (!in_sublattice(m.group, v, m.rank)) return false;

  std::vector<Vec> units = unit_generators(m);
  std::set<Vec> unit_set(units.begin(), units.end());
  std::vector<Vec> sharp_gens;
  for (const Vec& g : m.gens)
    if (!unit_set.count(g)) sharp_gens.push_back(g);

  Vec w = degree_functional(m.hull);
  std::set<std::pair<size_t, Vec>> failed;
  return sharp_part_member(sharp_gens, units, m.hull, w, v, 0, failed, m.rank);
}

bool submonoid(const AffineMonoid& a, const AffineMonoid& b) {
  if (a.rank != b.rank) return false;
  for (const Vec& g : a.gens)
    if (!monoid_contains(b, g)) return false;
  return true;
}

bool monoid_equal(const AffineMonoid& a, const AffineMonoid& b) {
  return submonoid(a, b) && submonoid(b, a);
}

AffineMonoid monoid_of_lattice_points(const Cone& c) {
  size_t n = c.rank();
  std::vector<Vec> unit_lattice =
      kernel_basis(Mat::from_rows(c.inequalities(), n));
  QuotientMap q = quotient_by_saturation(unit_lattice, n);
  std::vector<Vec> proj_gens;
  for (const Vec& g : c.generator_list()) proj_gens.push_back(q.proj.apply(g));
  Cone cq = Cone::from_generators(proj_gens, q.proj.rows);

  std::vector<Vec> gens;
  for (const Vec& l : unit_lattice) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  for (const Vec& h : hilbert_core(cq)) gens.push_back(q.section.apply(h));
  return make_monoid(std::move(gens), n);
}

GroupEmbedding rebase_to_group(const AffineMonoid& m) {
  GroupEmbedding e;
  e.basis = group_column_matrix(m);
  std::vector<Vec> gens;
  for (const Vec& g : m.gens) {
    auto x = solve_in_span(m.group, g, m.rank);
    gens.push_back(*x);
  }
  e.monoid = make_monoid(std::move(gens), m.group.size());
  return e;
}

std::vector<Vec> hilbert_basis(const AffineMonoid& m) {
  if (m.rank > face_rank_guard())
    throw InputTooLargeError("hilbert basis refused: rank exceeds guard");
  if (!is_sharp(m)) throw NotSharpError("hilbert basis needs a sharp monoid");
  GroupEmbedding e = rebase_to_group(m);
  std::vector<Vec> out;
  for (const Vec& h : hilbert_core(e.monoid.hull)) out.push_back(e.basis.apply(h));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

AffineMonoid saturation(const AffineMonoid& m) {
  if (m.rank > face_rank_guard())
    throw InputTooLargeError("saturation refused: rank exceeds guard");
  if (m.gens.empty()) return m;
  GroupEmbedding e = rebase_to_group(m);
  AffineMonoid sat_g = monoid_of_lattice_points(e.monoid.hull);
  std::vector<Vec> gens;
  for (const Vec& g : sat_g.gens) gens.push_back(e.basis.apply(g));
  return make_monoid(std::move(gens), m.rank);
}

bool is_saturated(const AffineMonoid& m) {
  AffineMonoid s = saturation(m);
  for (const Vec& g : s.gens)
    if (!monoid_contains(m, g)) return false;
  return true;
}

std::vector<MonoidFace> monoid_faces(const AffineMonoid& m) {
  if (m.rank > face_rank_guard())
    throw InputTooLargeError("face enumeration refused: rank exceeds guard");
  SharpenResult s = sharpen(m);
  std::vector<Vec> proj_gens;
  for (const Vec& g : m.gens) proj_gens.push_back(s.quotient.proj.apply(g));

  std::vector<MonoidFace> out;
  for (const Cone& f : s.monoid.hull.faces()) {
    MonoidFace mf;
    std::vector<Vec> face_gens;
    for (size_t i = 0; i < m.gens.size(); ++i) {
      if (f.contains(proj_gens[i])) {
        mf.gen_indices.push_back(i);
        face_gens.push_back(m.gens[i]);
      }
    }
    mf.cone = Cone::from_generators(face_gens, m.rank);
    mf.monoid = make_monoid(std::move(face_gens), m.rank);
    out.push_back(std::move(mf));
  }
  std::sort(out.begin(), out.end(), [](const MonoidFace& a, const MonoidFace& b) {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() < b.cone.dim();
    return a.cone.key() < b.cone.key();
  });
  return out;
}

AffineMonoid localize_at_face(const AffineMonoid& m,
                              const std::vector<size_t>& gen_indices) {
  std::vector<Vec> gens = m.gens;
  for (size_t i : gen_indices) {
    if (i >= m.gens.size()) throw PreconditionFailed("face index out of range");
    gens.push_back(vec_neg(m.gens[i]));
  }
  return make_monoid(std::move(gens), m.rank);
}

AffineMonoid localize_at_element(const AffineMonoid& m, const Vec& w) {
  if (!monoid_contains(m, w))
    throw PreconditionFailed("localization element outside the monoid");
  std::vector<Vec> gens = m.gens;
  gens.push_back(vec_neg(w));
  return make_monoid(std::move(gens), m.rank);
}

AffineMonoid dual_monoid(const AffineMonoid& m) {
  if (m.rank > face_rank_guard())
    throw InputTooLargeError("dual monoid refused: rank exceeds guard");
  return monoid_of_lattice_points(m.hull.dual());
}

Fan spec_fan(const AffineMonoid& m) {
  if (!is_sharp(m)) throw NotSharpError("spec fan needs a sharp monoid");
  if (m.rank > face_rank_guard())
    throw InputTooLargeError("spec fan refused: rank exceeds guard");
  GroupEmbedding e = rebase_to_group(m);
  return make_fan({e.monoid.hull.dual()}, e.monoid.rank, false);
}

}  // namespace logcone
