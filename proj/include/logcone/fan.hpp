#pragma once

#include "logcone/cone.hpp"

#include <vector>

namespace logcone {

// Finite collection of pointed cones, closed under faces, pairwise meeting in
// common faces. Always contains the zero cone. Cones are sorted by (dim, key).
struct Fan {
  size_t rank = 0;
  std::vector<Cone> cones;

  std::vector<Cone> maximal_cones() const;
  bool has_cone(const Cone& c) const;
  size_t support_dim() const;
  bool operator==(const Fan& other) const;
  bool operator!=(const Fan& other) const { return !(*this == other); }
};

// Face closure, dedupe, optional pairwise common-face validation.
Fan make_fan(const std::vector<Cone>& cones, size_t rank, bool validate = true);

// True when sigma equals the union of the cones of f that lie inside it.
// Exact: pieces sigma cap tau meet face-to-face, so sigma is covered iff some
// piece has full dimension in sigma and every facet of every full-dimensional
// piece lies in a facet hyperplane of sigma or is shared by a second piece.
bool fan_covers_cone(const Cone& sigma, const Fan& f);

bool support_subset(const Fan& f, const Fan& g);
bool supports_equal(const Fan& f, const Fan& g);

// Every cone of f is a cone of g.
bool is_subfan(const Fan& f, const Fan& g);

// Equal supports and every cone of f contained in some cone of g.
bool is_subdivision(const Fan& f, const Fan& g);

Fan common_refinement(const Fan& f, const Fan& g);

// Fan of all closed cells of the hyperplane arrangement of the given
// covectors, with their faces. The covectors must positively or negatively
// span the dual space, which makes every cell pointed.
Fan arrangement_fan(const std::vector<Vec>& covectors, size_t rank);

// Complete fan refining f on its support: the arrangement of all facet
// covectors of f together with the coordinate hyperplanes.
Fan complete_fan(const Fan& f);

}  // namespace logcone
