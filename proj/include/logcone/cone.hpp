#pragma once

#include "logcone/errors.hpp"
#include "logcone/guards.hpp"
#include "logcone/lattice.hpp"

#include <string>
#include <vector>

namespace logcone {

// Generator description of a polyhedral region: a lineality basis plus rays.
struct GeneratorDesc {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};

// Double description: generators of {x : <h,x> >= 0 for every h in
// constraints}. Deterministic for a fixed constraint order.
GeneratorDesc extreme_rays(const std::vector<Vec>& constraints, size_t rank);

// Rational polyhedral cone with a canonical V-description (lineality basis in
// Hermite form, extremal rays primitive and reduced modulo lineality) and a
// canonical H-description (equations stored as paired opposite inequalities).
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(const std::vector<Vec>& gens, size_t rank);
  static Cone from_inequalities(const std::vector<Vec>& constraints, size_t rank);
  static Cone zero(size_t rank) { return from_generators({}, rank); }
  static Cone full_space(size_t rank);

  size_t rank() const { return rank_; }
  size_t dim() const { return dim_; }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return dim_ == 0; }

  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  const std::vector<Vec>& inequalities() const { return ineqs_; }

  // rays plus both signs of each lineality basis vector.
  std::vector<Vec> generator_list() const;

  bool contains(const Vec& v) const;
  bool contains(const Cone& other) const;
  bool operator==(const Cone& other) const { return key_ == other.key_; }
  bool operator!=(const Cone& other) const { return key_ != other.key_; }
  const std::string& key() const { return key_; }

  Cone dual() const;
  Cone intersect(const Cone& other) const;
  Cone intersect_halfspace(const Vec& h) const;

  // A point in the relative interior.
  Vec interior_point() const;

  // All faces, the zero face and the cone itself included. Requires a pointed
  // cone and rank within the face guard.
  std::vector<Cone> faces() const;
  // Faces of dimension dim() - 1.
  std::vector<Cone> facets() const;

  // True when this cone is a face of c.
  bool is_face_of(const Cone& c) const;

 private:
  size_t rank_ = 0;
  size_t dim_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  std::vector<Vec> ineqs_;
  std::string key_;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

}  // namespace logcone
