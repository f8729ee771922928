#include "logcone/hom.hpp"

#include "logcone/errors.hpp"
#include "logcone/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace logcone {

namespace {

bool is_unit_of(const AffineMonoid& m, const Vec& v) {
  for (const Vec& h : m.hull.inequalities()) {
    if (dot(h, v) != 0) return false;
  }
  return true;
}

// Pullback of the target hull inequalities along matrix * basis, as rows.
std::vector<Vec> pullback_rows(const Cone& target_hull, const Mat& matrix,
                               const Mat& basis) {
  Mat mb = matrix.mul(basis);
  std::vector<Vec> rows;
  rows.reserve(target_hull.inequalities().size());
  for (const Vec& h : target_hull.inequalities()) {
    Vec row(mb.cols, Int(0));
    for (size_t j = 0; j < mb.cols; ++j) {
      for (size_t i = 0; i < mb.rows; ++i) row[j] += h[i] * mb.data[i][j];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Vec pad_pair(const Vec& left, const Vec& right) {
  Vec v = left;
  v.insert(v.end(), right.begin(), right.end());
  return v;
}

Mat block_diagonal(const Mat& a, const Mat& b) {
  Mat m(a.rows + b.rows, a.cols + b.cols);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < a.cols; ++j) m.data[i][j] = a.data[i][j];
  }
  for (size_t i = 0; i < b.rows; ++i) {
    for (size_t j = 0; j < b.cols; ++j) m.data[a.rows + i][a.cols + j] = b.data[i][j];
  }
  return m;
}

// Group coordinates of matrix * (source group basis) in the target embedding.
Mat group_coordinate_map(const Mat& matrix, const std::vector<Vec>& source_group,
                         const GroupEmbedding& target, size_t target_rank) {
  std::vector<Vec> target_cols = target.basis.columns();
  std::vector<Vec> cols;
  cols.reserve(source_group.size());
  for (const Vec& b : source_group) {
    auto c = solve_in_span(target_cols, matrix.apply(b), target_rank);
    if (!c) {
      throw PreconditionFailed("hom-wellformed",
                               "source group does not map into target group");
    }
    cols.push_back(*c);
  }
  return Mat::from_columns(cols, target.basis.cols);
}

// Descends matrix through sharpening quotients; the unit lattice maps into
// the unit lattice, so qt.proj * matrix factors through qs.proj.
Mat descend_through_sharpening(const Mat& matrix, const QuotientMap& qs,
                               const QuotientMap& qt) {
  Mat bar = qt.proj.mul(matrix).mul(qs.section);
  if (!(bar.mul(qs.proj) == qt.proj.mul(matrix))) {
    throw PreconditionFailed("hom-wellformed",
                             "map does not descend to sharpenings");
  }
  return bar;
}

// Change of group coordinates induced by a sharpening quotient: columns are
// the coordinates of proj(old basis column) in the sharpened group embedding.
Mat sharpening_transport(const GroupEmbedding& before, const QuotientMap& quot,
                         const GroupEmbedding& after, size_t after_rank) {
  std::vector<Vec> after_cols = after.basis.columns();
  std::vector<Vec> cols;
  cols.reserve(before.basis.cols);
  for (size_t j = 0; j < before.basis.cols; ++j) {
    Vec v = quot.proj.apply(before.basis.column(j));
    auto c = solve_in_span(after_cols, v, after_rank);
    if (!c) {
      throw PreconditionFailed("hom-wellformed",
                               "sharpening does not preserve the group");
    }
    cols.push_back(*c);
  }
  return Mat::from_columns(cols, after.basis.cols);
}

}  // namespace

MonoidHom make_hom(const AffineMonoid& source, const AffineMonoid& target,
                   const Mat& matrix) {
  if (matrix.rows != target.rank || matrix.cols != source.rank) {
    throw PreconditionFailed("hom-wellformed", "matrix shape does not match");
  }
  for (const Vec& g : source.gens) {
    if (!monoid_contains(target, matrix.apply(g))) {
      throw PreconditionFailed(
          "hom-wellformed",
          "generator image " + vec_to_string(matrix.apply(g)) + " is not in the target");
    }
  }
  return MonoidHom{source, target, matrix};
}

MonoidHom identity_hom(const AffineMonoid& m) {
  return MonoidHom{m, m, Mat::identity(m.rank)};
}

MonoidHom multiplication_hom(const AffineMonoid& m, const Int& n) {
  Mat mat(m.rank, m.rank);
  for (size_t i = 0; i < m.rank; ++i) mat.data[i][i] = n;
  return make_hom(m, m, mat);
}

Mat hom_group_matrix(const MonoidHom& h) {
  GroupEmbedding target = rebase_to_group(h.target);
  return group_coordinate_map(h.matrix, h.source.group, target, h.target.rank);
}

bool is_injective(const MonoidHom& h) {
  std::vector<Vec> ker = kernel_basis(h.matrix);
  if (ker.empty()) return true;
  return lattice_intersection(ker, h.source.group, h.source.rank).empty();
}

bool is_local(const MonoidHom& h) {
  for (const Vec& g : h.source.gens) {
    if (is_unit_of(h.target, h.matrix.apply(g)) && !is_unit_of(h.source, g)) {
      return false;
    }
  }
  return true;
}

bool is_exact(const MonoidHom& h) {
  GroupEmbedding e = rebase_to_group(h.source);
  std::vector<Vec> rows = pullback_rows(h.target.hull, h.matrix, e.basis);
  Cone preimage = Cone::from_inequalities(rows, e.monoid.rank);
  return preimage == e.monoid.hull;
}

bool is_locally_exact(const MonoidHom& h) {
  if (!is_sharp(h.target)) {
    throw NotSharpError("local exactness needs a sharp target");
  }
  for (const MonoidFace& f : monoid_faces(h.target)) {
    std::vector<size_t> pre;
    for (size_t i = 0; i < h.source.gens.size(); ++i) {
      if (f.cone.contains(h.matrix.apply(h.source.gens[i]))) pre.push_back(i);
    }
    MonoidHom induced = make_hom(localize_at_face(h.source, pre),
                                 localize_at_face(h.target, f.gen_indices),
                                 h.matrix);
    if (!is_exact(induced)) return false;
  }
  return true;
}

bool is_kummer(const MonoidHom& h) {
  if (!is_injective(h)) return false;
  std::vector<Vec> images;
  images.reserve(h.source.gens.size());
  for (const Vec& g : h.source.gens) images.push_back(h.matrix.apply(g));
  return Cone::from_generators(images, h.target.rank) == h.target.hull;
}

std::vector<MonoidFace> critical_faces(const MonoidHom& h) {
  if (!is_local(h)) {
    throw PreconditionFailed("local", "critical faces need a local homomorphism");
  }
  if (!is_sharp(h.target)) {
    throw NotSharpError("critical faces need a sharp target");
  }
  Cone unit_cone =
      Cone::from_generators(unit_generators(h.source), h.source.rank);
  std::vector<MonoidFace> out;
  for (MonoidFace& f : monoid_faces(h.target)) {
    std::vector<Vec> pre;
    for (const Vec& g : h.source.gens) {
      if (f.cone.contains(h.matrix.apply(g))) pre.push_back(g);
    }
    if (Cone::from_generators(pre, h.source.rank) == unit_cone) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<MonoidFace> maximal_critical_faces(const MonoidHom& h) {
  std::vector<MonoidFace> crit = critical_faces(h);
  std::vector<bool> keep(crit.size(), true);
  for (size_t i = 0; i < crit.size(); ++i) {
    for (size_t j = 0; j < crit.size(); ++j) {
      if (j == i || crit[j].cone == crit[i].cone) continue;
      if (crit[j].cone.contains(crit[i].cone)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<MonoidFace> out;
  for (size_t i = 0; i < crit.size(); ++i) {
    if (keep[i]) out.push_back(std::move(crit[i]));
  }
  return out;
}

PushoutResult integral_pushout(const MonoidHom& h, const MonoidHom& k) {
  if (h.source.rank != k.source.rank || h.source.gens != k.source.gens) {
    throw PreconditionFailed("pushout-source", "the two maps must share a source");
  }
  PushoutResult out;
  out.q_embed = rebase_to_group(h.target);
  out.pprime_embed = rebase_to_group(k.target);
  size_t rq = out.q_embed.monoid.rank;
  size_t rp = out.pprime_embed.monoid.rank;

  Mat theta = group_coordinate_map(h.matrix, h.source.group, out.q_embed,
                                   h.target.rank);
  Mat kappa = group_coordinate_map(k.matrix, k.source.group, out.pprime_embed,
                                   k.target.rank);
  std::vector<Vec> antidiagonal;
  antidiagonal.reserve(theta.cols);
  for (size_t j = 0; j < theta.cols; ++j) {
    antidiagonal.push_back(pad_pair(theta.column(j), vec_neg(kappa.column(j))));
  }
  QuotientMap qm = quotient_by_saturation(antidiagonal, rq + rp);
  out.rank = qm.proj.rows;
  out.quotient = qm.proj;
  out.section = qm.section;

  out.from_q = Mat(out.rank, rq);
  out.from_pprime = Mat(out.rank, rp);
  for (size_t i = 0; i < out.rank; ++i) {
    for (size_t j = 0; j < rq; ++j) out.from_q.data[i][j] = qm.proj.data[i][j];
    for (size_t j = 0; j < rp; ++j) {
      out.from_pprime.data[i][j] = qm.proj.data[i][rq + j];
    }
  }

  std::vector<Vec> gens;
  for (const Vec& g : out.q_embed.monoid.gens) gens.push_back(out.from_q.apply(g));
  for (const Vec& g : out.pprime_embed.monoid.gens) {
    gens.push_back(out.from_pprime.apply(g));
  }
  out.integral = make_monoid(std::move(gens), out.rank);
  out.fs = saturation(out.integral);
  return out;
}

SharpPushout sharp_pushout_direct(const MonoidHom& h, const MonoidHom& k) {
  PushoutResult pr = integral_pushout(h, k);
  SharpenResult sh = sharpen(pr.fs);
  SharpPushout out;
  out.monoid = sh.monoid;
  out.composite = sh.quotient.proj.mul(pr.quotient);
  out.section = pr.section.mul(sh.quotient.section);
  return out;
}

SharpPushout sharp_pushout_descended(const MonoidHom& h, const MonoidHom& k) {
  if (h.source.rank != k.source.rank || h.source.gens != k.source.gens) {
    throw PreconditionFailed("pushout-source", "the two maps must share a source");
  }
  GroupEmbedding eq = rebase_to_group(h.target);
  GroupEmbedding ep = rebase_to_group(k.target);

  SharpenResult ss = sharpen(h.source);
  SharpenResult sq = sharpen(h.target);
  SharpenResult sp = sharpen(k.target);
  MonoidHom hbar = make_hom(ss.monoid, sq.monoid,
                            descend_through_sharpening(h.matrix, ss.quotient, sq.quotient));
  MonoidHom kbar = make_hom(ss.monoid, sp.monoid,
                            descend_through_sharpening(k.matrix, ss.quotient, sp.quotient));
  PushoutResult pr = integral_pushout(hbar, kbar);
  SharpenResult sh = sharpen(pr.fs);

  Mat a = sharpening_transport(eq, sq.quotient, pr.q_embed, sq.monoid.rank);
  Mat b = sharpening_transport(ep, sp.quotient, pr.pprime_embed, sp.monoid.rank);
  Mat d = block_diagonal(a, b);

  auto a_inv = right_inverse(a);
  auto b_inv = right_inverse(b);
  if (!a_inv || !b_inv) {
    throw PreconditionFailed("hom-wellformed", "sharpening transport is not onto");
  }

  SharpPushout out;
  out.monoid = sh.monoid;
  out.composite = sh.quotient.proj.mul(pr.quotient).mul(d);
  out.section = block_diagonal(*a_inv, *b_inv).mul(pr.section).mul(sh.quotient.section);
  return out;
}

bool sharp_pushouts_agree(const SharpPushout& a, const SharpPushout& b) {
  if (a.composite.cols != b.composite.cols) return false;
  if (a.composite.rows != b.composite.rows) return false;
  size_t n = a.composite.cols;
  std::vector<Vec> ka = hnf_basis(kernel_basis(a.composite), n);
  std::vector<Vec> kb = hnf_basis(kernel_basis(b.composite), n);
  if (ka != kb) return false;
  Mat t = b.composite.mul(a.section);
  if (!(t.mul(a.composite) == b.composite)) return false;
  if (!is_unimodular(t)) return false;
  std::vector<Vec> mapped;
  mapped.reserve(a.monoid.gens.size());
  for (const Vec& g : a.monoid.gens) mapped.push_back(t.apply(g));
  return monoid_equal(make_monoid(std::move(mapped), b.monoid.rank), b.monoid);
}

AffineMonoid sharpened_pushout(const MonoidHom& h, const MonoidHom& k) {
  if (!is_saturated(h.source)) {
    throw PreconditionFailed("saturated", "pushout source must be saturated");
  }
  if (!is_saturated(h.target) || !is_saturated(k.target)) {
    throw PreconditionFailed("saturated", "pushout targets must be saturated");
  }
  return sharp_pushout_direct(h, k).monoid;
}

bool is_pushout_saturated_along_mult(const MonoidHom& h, const Int& n) {
  PushoutResult pr = integral_pushout(h, multiplication_hom(h.source, n));
  return submonoid(pr.fs, pr.integral);
}

SaturationCertificate find_saturation_exponent(const MonoidHom& h,
                                               const Int& n_max) {
  if (!is_injective(h)) {
    throw PreconditionFailed("injective", "exponent search needs an injective map");
  }
  if (!is_local(h)) {
    throw PreconditionFailed("local", "exponent search needs a local map");
  }
  if (!is_locally_exact(h)) {
    throw PreconditionFailed("locally-exact", "exponent search needs a locally exact map");
  }
  for (Int n = 1; n <= n_max; ++n) {
    PushoutResult pr = integral_pushout(h, multiplication_hom(h.source, n));
    if (submonoid(pr.fs, pr.integral)) {
      return SaturationCertificate{n, std::move(pr)};
    }
  }
  throw ExponentNotFound("no saturation exponent up to " + n_max.str());
}

ConservCharts build_conserv_charts(const AffineMonoid& p, const Int& n) {
  if (!is_sharp(p)) {
    throw PreconditionFailed("sharp", "chart construction needs a sharp monoid");
  }
  if (!is_saturated(p)) {
    throw PreconditionFailed("saturated", "chart construction needs a saturated monoid");
  }
  if (n < 1) {
    throw PreconditionFailed("positive-multiple", "the multiple must be at least 1");
  }
  size_t r = p.rank;
  Vec zero = zero_vec(r);

  std::vector<Vec> double_gens;
  for (const Vec& g : p.gens) {
    double_gens.push_back(pad_pair(g, zero));
    double_gens.push_back(pad_pair(zero, g));
  }
  AffineMonoid p_double = make_monoid(std::move(double_gens), 2 * r);

  std::vector<Vec> prime_gens;
  for (const Vec& b : p.group) {
    prime_gens.push_back(pad_pair(b, zero));
    prime_gens.push_back(pad_pair(vec_neg(b), zero));
  }
  for (const Vec& g : p.gens) prime_gens.push_back(pad_pair(zero, g));
  AffineMonoid p_prime = make_monoid(std::move(prime_gens), 2 * r);

  Mat eta(2 * r, r);
  for (size_t i = 0; i < r; ++i) {
    eta.data[i][i] = 1;
    eta.data[r + i][i] = n;
  }
  Mat proj(r, 2 * r);
  for (size_t i = 0; i < r; ++i) proj.data[i][i] = 1;

  ConservCharts out;
  out.eta = make_hom(p, p_double, eta);
  out.incl = make_hom(p, p_prime, eta);
  out.first_proj = make_hom(p_double, p, proj);
  out.p_double = std::move(p_double);
  out.p_prime = std::move(p_prime);
  return out;
}

}  // namespace logcone
