#include "logcone/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logcone {

namespace {

void sort_cones(std::vector<Cone>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  cs.erase(std::unique(cs.begin(), cs.end(),
                       [](const Cone& a, const Cone& b) { return a == b; }),
           cs.end());
}

}  // namespace

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const Cone& c : cones) {
    bool maximal = true;
    for (const Cone& d : cones) {
      if (&c == &d || c == d) continue;
      if (d.contains(c)) { maximal = false; break; }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

bool Fan::has_cone(const Cone& c) const {
  for (const Cone& d : cones)
    if (d == c) return true;
  return false;
}

size_t Fan::support_dim() const {
  size_t d = 0;
  for (const Cone& c : cones) d = std::max(d, c.dim());
  return d;
}

bool Fan::operator==(const Fan& other) const {
  if (rank != other.rank || cones.size() != other.cones.size()) return false;
  for (size_t i = 0; i < cones.size(); ++i)
    if (cones[i] != other.cones[i]) return false;
  return true;
}

Fan make_fan(const std::vector<Cone>& cones, size_t rank, bool validate) {
  Fan f;
  f.rank = rank;
  std::map<std::string, Cone> closure;
  Cone z = Cone::zero(rank);
  closure[z.key()] = z;
  for (const Cone& c : cones) {
    if (c.rank() != rank) throw PreconditionFailed("fan", "cone rank mismatch");
    if (!c.is_pointed()) throw LinealityError("fan cones must be pointed");
    for (Cone& face : c.faces()) closure.emplace(face.key(), std::move(face));
  }
  for (auto& [_, c] : closure) f.cones.push_back(c);
  sort_cones(f.cones);

  if (validate) {
    for (size_t i = 0; i < f.cones.size(); ++i) {
      for (size_t j = i + 1; j < f.cones.size(); ++j) {
        Cone m = f.cones[i].intersect(f.cones[j]);
        if (!m.is_face_of(f.cones[i]) || !m.is_face_of(f.cones[j]))
          throw PreconditionFailed("fan", "cones do not meet in a common face");
      }
    }
  }
  return f;
}

bool fan_covers_cone(const Cone& sigma, const Fan& f) {
  if (sigma.rank() != f.rank) throw PreconditionFailed("cover", "rank mismatch");
  size_t d = sigma.dim();

  std::map<std::string, Cone> piece_map;
  for (const Cone& tau : f.maximal_cones()) {
    Cone p = sigma.intersect(tau);
    piece_map.emplace(p.key(), std::move(p));
  }
  std::vector<Cone> pieces;
  for (auto& [_, p] : piece_map)
    if (p.dim() == d) pieces.push_back(p);
  if (pieces.empty()) return false;

  std::vector<Vec> sigma_facet_normals;
  for (const Vec& h : sigma.inequalities()) {
    bool equation = true;
    for (const Vec& g : sigma.generator_list())
      if (dot(h, g) != 0) { equation = false; break; }
    if (!equation) sigma_facet_normals.push_back(h);
  }

  for (const Cone& p : pieces) {
    for (const Cone& face : p.facets()) {
      bool on_boundary = false;
      for (const Vec& h : sigma_facet_normals) {
        bool tight = true;
        for (const Vec& g : face.generator_list())
          if (dot(h, g) != 0) { tight = false; break; }
        if (tight) { on_boundary = true; break; }
      }
      if (on_boundary) continue;
      size_t shared = 0;
      for (const Cone& q : pieces)
        if (face.dim() + 1 == q.dim() && q.contains(face)) ++shared;
      if (shared < 2) return false;
    }
  }
  return true;
}

bool support_subset(const Fan& f, const Fan& g) {
  for (const Cone& sigma : f.maximal_cones())
    if (!fan_covers_cone(sigma, g)) return false;
  return true;
}

bool supports_equal(const Fan& f, const Fan& g) {
  return support_subset(f, g) && support_subset(g, f);
}

bool is_subfan(const Fan& f, const Fan& g) {
  if (f.rank != g.rank) return false;
  std::set<std::string> keys;
  for (const Cone& c : g.cones) keys.insert(c.key());
  for (const Cone& c : f.cones)
    if (!keys.count(c.key())) return false;
  return true;
}

bool is_subdivision(const Fan& f, const Fan& g) {
  if (f.rank != g.rank) return false;
  if (!supports_equal(f, g)) return false;
  std::vector<Cone> gmax = g.maximal_cones();
  for (const Cone& sigma : f.cones) {
    bool inside = false;
    for (const Cone& tau : gmax)
      if (tau.contains(sigma)) { inside = true; break; }
    if (!inside) return false;
  }
  return true;
}

Fan common_refinement(const Fan& f, const Fan& g) {
  if (f.rank != g.rank) throw PreconditionFailed("refinement", "rank mismatch");
  std::vector<Cone> pieces;
  for (const Cone& sigma : f.maximal_cones())
    for (const Cone& tau : g.maximal_cones())
      pieces.push_back(sigma.intersect(tau));
  return make_fan(pieces, f.rank, false);
}

Fan arrangement_fan(const std::vector<Vec>& covectors, size_t rank) {
  std::vector<Vec> hs;
  for (const Vec& h : covectors) {
    Vec p = primitive_signed(h);
    if (!is_zero(p)) hs.push_back(p);
  }
  std::sort(hs.begin(), hs.end(), lex_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  std::map<std::string, Cone> cells;
  Cone whole = Cone::full_space(rank);
  cells.emplace(whole.key(), std::move(whole));
  for (const Vec& h : hs) {
    std::map<std::string, Cone> next;
    for (const auto& [_, c] : cells) {
      Cone cp = c.intersect_halfspace(h);
      if (cp.dim() == rank) next.emplace(cp.key(), std::move(cp));
      Vec nh = vec_neg(h);
      Cone cm = c.intersect_halfspace(nh);
      if (cm.dim() == rank) next.emplace(cm.key(), std::move(cm));
    }
    cells = std::move(next);
  }
  std::vector<Cone> cs;
  for (auto& [_, c] : cells) cs.push_back(c);
  return make_fan(cs, rank, false);
}

Fan complete_fan(const Fan& f) {
  std::vector<Vec> covectors;
  for (const Cone& c : f.maximal_cones())
    for (const Vec& h : c.inequalities()) covectors.push_back(h);
  for (size_t i = 0; i < f.rank; ++i) covectors.push_back(unit_vec(f.rank, i));
  return arrangement_fan(covectors, f.rank);
}

}  // namespace logcone
