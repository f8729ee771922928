#pragma once

#include <map>
#include <string>

#include "logcone/charts.hpp"
#include "logcone/fan.hpp"
#include "logcone/hom.hpp"
#include "logcone/lattice.hpp"
#include "logcone/monoid.hpp"
#include "logcone/pan.hpp"

namespace logcone {

// Objects of an input document, keyed by name. Maps keep name order, so
// iteration is deterministic.
struct ParsedObjects {
  std::map<std::string, Lattice> lattices;
  std::map<std::string, Cone> cones;
  std::map<std::string, Fan> fans;
  std::map<std::string, AffineMonoid> monoids;
  std::map<std::string, MonoidHom> homs;
  std::map<std::string, Pan> pans;
  std::map<std::string, ChartComplex> complexes;
};

// Parses a version "1" document. Throws ParseError naming the JSON path of
// the offending value; size-guard violations keep their own error type.
ParsedObjects parse_input_text(const std::string& text);
ParsedObjects parse_input_file(const std::string& path);

// Integers with magnitude beyond 53 bits render as decimal strings.
std::string int_to_json_string(const Int& v);

}  // namespace logcone
