#include "logcone/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace logcone {

namespace {

size_t rows_rank(const std::vector<Vec>& rows, size_t cols) {
  if (rows.empty()) return 0;
  Mat m(rows.size(), cols);
  m.data = rows;
  return smith_normal_form(m).rank;
}

std::vector<Vec> dedupe_sorted(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Extremality of r in {x : Ax >= 0} with lineality dimension lin_rank: the
// constraints tight at r must cut the span down to lineality plus one.
bool ray_extremal(const Vec& r, const std::vector<Vec>& constraints, size_t rank,
                  size_t lin_rank) {
  std::vector<Vec> tight;
  for (const Vec& h : constraints)
    if (dot(h, r) == 0) tight.push_back(h);
  return rows_rank(tight, rank) + lin_rank + 1 == rank;
}

}  // namespace

GeneratorDesc extreme_rays(const std::vector<Vec>& constraints, size_t rank) {
  std::vector<Vec> lin;
  for (size_t i = 0; i < rank; ++i) lin.push_back(unit_vec(rank, i));
  std::vector<Vec> rays;
  std::vector<Vec> processed;

  for (const Vec& a : constraints) {
    if (is_zero(a)) continue;

    size_t cut = lin.size();
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) { cut = i; break; }

    if (cut < lin.size()) {
      Vec l0 = lin[cut];
      Int al0 = dot(a, l0);
      if (al0 < 0) { l0 = vec_neg(l0); al0 = -al0; }
      std::vector<Vec> nlin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == cut) continue;
        Int ali = dot(a, lin[i]);
        nlin.push_back(primitive_signed(vec_sub(vec_scale(al0, lin[i]), vec_scale(ali, l0))));
      }
      std::vector<Vec> nrays;
      for (const Vec& r : rays) {
        Int ar = dot(a, r);
        Vec pr = primitive(vec_sub(vec_scale(al0, r), vec_scale(ar, l0)));
        if (!is_zero(pr)) nrays.push_back(pr);
      }
      nrays.push_back(primitive(l0));
      lin = std::move(nlin);
      rays = dedupe_sorted(std::move(nrays));
      processed.push_back(a);
      continue;
    }

    std::vector<size_t> pos, zer, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      int s = int_sign(dot(a, rays[i]));
      (s > 0 ? pos : s == 0 ? zer : neg).push_back(i);
    }
    if (neg.empty()) { processed.push_back(a); continue; }

    std::vector<std::set<size_t>> tight(rays.size());
    for (size_t i = 0; i < rays.size(); ++i)
      for (size_t c = 0; c < processed.size(); ++c)
        if (dot(processed[c], rays[i]) == 0) tight[i].insert(c);

    std::vector<Vec> nrays;
    for (size_t i : pos) nrays.push_back(rays[i]);
    for (size_t i : zer) nrays.push_back(rays[i]);
    for (size_t p : pos) {
      for (size_t m : neg) {
        std::set<size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(), tight[m].begin(),
                              tight[m].end(), std::inserter(common, common.begin()));
        bool adjacent = true;
        for (size_t s = 0; s < rays.size() && adjacent; ++s) {
          if (s == p || s == m) continue;
          adjacent = !std::includes(tight[s].begin(), tight[s].end(), common.begin(),
                                    common.end());
        }
        if (!adjacent) continue;
        Vec w = vec_sub(vec_scale(dot(a, rays[p]), rays[m]),
                        vec_scale(dot(a, rays[m]), rays[p]));
        w = primitive(w);
        if (!is_zero(w)) nrays.push_back(w);
      }
    }
    rays = dedupe_sorted(std::move(nrays));
    processed.push_back(a);
  }

  return {hnf_basis(lin, rank), dedupe_sorted(std::move(rays))};
}

std::vector<Vec> Cone::generator_list() const {
  std::vector<Vec> out = rays_;
  for (const Vec& l : lineality_) {
    out.push_back(l);
    out.push_back(vec_neg(l));
  }
  return out;
}

Cone Cone::from_generators(const std::vector<Vec>& gens, size_t rank) {
  for (const Vec& g : gens)
    if (g.size() != rank) throw PreconditionFailed("cone generator rank mismatch");

  GeneratorDesc dual_desc = extreme_rays(gens, rank);

  Cone c;
  c.rank_ = rank;
  c.dim_ = rank - dual_desc.lineality.size();

  // Canonical H-description: dual rays reduced modulo the dual lineality, the
  // dual lineality itself contributing an opposite pair per basis vector.
  QuotientMap dq = quotient_by_saturation(dual_desc.lineality, rank);
  std::vector<Vec> ineqs;
  std::vector<Vec> dual_rays_canon;
  for (const Vec& r : dual_desc.rays) {
    Vec red = dq.section.apply(primitive(dq.proj.apply(r)));
    if (!logcone::is_zero(red)) dual_rays_canon.push_back(red);
  }
  dual_rays_canon = dedupe_sorted(std::move(dual_rays_canon));
  {
    std::vector<Vec> filtered;
    std::vector<Vec> dual_constraints = gens;
    for (const Vec& r : dual_rays_canon)
      if (ray_extremal(r, dual_constraints, rank, dual_desc.lineality.size()))
        filtered.push_back(r);
    dual_rays_canon = std::move(filtered);
  }
  for (const Vec& r : dual_rays_canon) ineqs.push_back(r);
  for (const Vec& l : dual_desc.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(vec_neg(l));
  }
  c.ineqs_ = dedupe_sorted(std::move(ineqs));

  GeneratorDesc self_desc = extreme_rays(c.ineqs_, rank);
  c.lineality_ = self_desc.lineality;

  QuotientMap q = quotient_by_saturation(c.lineality_, rank);
  std::vector<Vec> rays;
  for (const Vec& r : self_desc.rays) {
    Vec red = q.section.apply(primitive(q.proj.apply(r)));
    if (!logcone::is_zero(red) && ray_extremal(red, c.ineqs_, rank, c.lineality_.size()))
      rays.push_back(red);
  }
  c.rays_ = dedupe_sorted(std::move(rays));

  std::ostringstream k;
  k << rank << ";L";
  for (const Vec& l : c.lineality_) k << vec_to_string(l);
  k << ";R";
  for (const Vec& r : c.rays_) k << vec_to_string(r);
  c.key_ = k.str();
  return c;
}

Cone Cone::from_inequalities(const std::vector<Vec>& constraints, size_t rank) {
  for (const Vec& h : constraints)
    if (h.size() != rank) throw PreconditionFailed("cone constraint rank mismatch");
  GeneratorDesc d = extreme_rays(constraints, rank);
  std::vector<Vec> gens = d.rays;
  for (const Vec& l : d.lineality) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  return from_generators(gens, rank);
}

Cone Cone::full_space(size_t rank) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < rank; ++i) {
    gens.push_back(unit_vec(rank, i));
    gens.push_back(vec_neg(unit_vec(rank, i)));
  }
  return from_generators(gens, rank);
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != rank_) throw PreconditionFailed("point rank mismatch");
  for (const Vec& h : ineqs_)
    if (dot(h, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw PreconditionFailed("cone rank mismatch");
  for (const Vec& g : other.generator_list())
    if (!contains(g)) return false;
  return true;
}

Cone Cone::dual() const {
  std::vector<Vec> gens = ineqs_;
  return from_generators(gens, rank_);
}

Cone Cone::intersect(const Cone& other) const {
  if (other.rank_ != rank_) throw PreconditionFailed("cone rank mismatch");
  std::vector<Vec> cons = ineqs_;
  cons.insert(cons.end(), other.ineqs_.begin(), other.ineqs_.end());
  return from_inequalities(cons, rank_);
}

Cone Cone::intersect_halfspace(const Vec& h) const {
  std::vector<Vec> cons = ineqs_;
  cons.push_back(h);
  return from_inequalities(cons, rank_);
}

Vec Cone::interior_point() const {
  Vec p = zero_vec(rank_);
  for (const Vec& r : rays_) p = vec_add(p, r);
  return p;
}

std::vector<Cone> Cone::faces() const {
  if (!lineality_.empty()) throw LinealityError("face enumeration needs a pointed cone");
  if (rank_ > face_rank_guard())
    throw InputTooLargeError("face enumeration refused: rank exceeds guard");

  // Facet-defining inequalities are the dual extremal rays; equations never
  // cut. BFS over intersections of facet hyperplanes, keyed by tight ray sets.
  std::vector<Vec> facets_h;
  for (const Vec& h : ineqs_) {
    bool equation = true;
    for (const Vec& r : rays_)
      if (dot(h, r) != 0) { equation = false; break; }
    if (!equation) facets_h.push_back(h);
  }

  std::map<std::vector<size_t>, std::vector<size_t>> seen;
  std::vector<size_t> all;
  for (size_t i = 0; i < rays_.size(); ++i) all.push_back(i);
  std::vector<std::vector<size_t>> queue = {all};
  seen[all] = all;
  while (!queue.empty()) {
    std::vector<size_t> s = queue.back();
    queue.pop_back();
    for (const Vec& h : facets_h) {
      std::vector<size_t> t;
      for (size_t i : s)
        if (dot(h, rays_[i]) == 0) t.push_back(i);
      if (!seen.count(t)) {
        seen[t] = t;
        queue.push_back(t);
      }
    }
  }
  if (!seen.count({})) seen[{}] = {};

  std::vector<Cone> out;
  for (const auto& [idx, _] : seen) {
    std::vector<Vec> gens;
    for (size_t i : idx) gens.push_back(rays_[i]);
    out.push_back(from_generators(gens, rank_));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Cone& a, const Cone& b) { return a == b; }),
            out.end());
  return out;
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (Cone& f : faces())
    if (f.dim() + 1 == dim_) out.push_back(std::move(f));
  return out;
}

bool Cone::is_face_of(const Cone& c) const {
  if (!c.contains(*this)) return false;
  // The face cut out by every c-inequality tight on this cone must be this
  // cone itself.
  std::vector<Vec> cons = c.ineqs_;
  for (const Vec& h : c.ineqs_) {
    bool tight = true;
    for (const Vec& g : generator_list())
      if (dot(h, g) != 0) { tight = false; break; }
    if (tight) cons.push_back(vec_neg(h));
  }
  return Cone::from_inequalities(cons, rank_) == *this;
}

}  // namespace logcone
