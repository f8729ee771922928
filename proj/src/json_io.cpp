#include "logcone/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "logcone/errors.hpp"

namespace logcone {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& require_field(const json& j, const char* key,
                          const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string parse_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Int parse_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string& s = j.get<std::string>();
    if (s.empty()) fail(path, "empty integer string");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail(path, "not a decimal integer: '" + s + "'");
    for (size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        fail(path, "not a decimal integer: '" + s + "'");
      }
    }
    return Int(s);
  }
  fail(path, "expected an integer or a decimal string");
}

size_t parse_rank(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a nonnegative integer rank");
  }
  return j.get<size_t>();
}

Vec parse_vec(const json& j, const std::string& path, size_t rank) {
  if (!j.is_array()) fail(path, "expected an integer array");
  if (j.size() != rank) {
    fail(path, "expected " + std::to_string(rank) + " entries, got " +
                   std::to_string(j.size()));
  }
  Vec v;
  v.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

std::vector<Vec> parse_vec_list(const json& j, const std::string& path,
                                size_t rank) {
  if (!j.is_array()) fail(path, "expected an array of integer arrays");
  std::vector<Vec> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_vec(j[i], path + "[" + std::to_string(i) + "]", rank));
  }
  return out;
}

Mat parse_mat(const json& j, const std::string& path, size_t rows,
              size_t cols) {
  if (!j.is_array()) fail(path, "expected a row-major integer matrix");
  if (j.size() != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  }
  std::vector<Vec> parsed;
  for (size_t i = 0; i < j.size(); ++i) {
    parsed.push_back(parse_vec(j[i], path + "[" + std::to_string(i) + "]", cols));
  }
  return Mat::from_rows(parsed, cols);
}

// Wraps construction failures as parse errors carrying the object path, but
// lets size-guard rejections keep their type (they map to a distinct exit
// code).
template <typename F>
auto construct(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputTooLargeError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Chart parse_chart(const json& j, const std::string& path, size_t rank) {
  if (!j.is_object()) fail(path, "expected a chart object");
  std::string name = parse_string(require_field(j, "name", path), path + ".name");
  std::vector<Vec> mono =
      parse_vec_list(require_field(j, "monomial", path), path + ".monomial", rank);
  std::vector<Vec> log =
      parse_vec_list(require_field(j, "log", path), path + ".log", rank);
  return construct(path, [&] {
    return make_chart(name, make_monoid(std::move(mono), rank),
                      make_monoid(std::move(log), rank));
  });
}

ChartComplex parse_complex(const json& j, const std::string& path) {
  if (j.contains("builtin")) {
    std::string which =
        parse_string(j["builtin"], path + ".builtin");
    for (ChartComplex& c : build_w_family()) {
      if (c.name == which) return std::move(c);
    }
    fail(path + ".builtin", "unknown builtin complex '" + which + "'");
  }
  size_t rank = parse_rank(require_field(j, "rank", path), path + ".rank");
  ChartComplex out;
  out.name = parse_string(require_field(j, "name", path), path + ".name");
  const json& charts = require_field(j, "charts", path);
  if (!charts.is_array()) fail(path + ".charts", "expected an array");
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < charts.size(); ++i) {
    std::string cpath = path + ".charts[" + std::to_string(i) + "]";
    Chart c = parse_chart(charts[i], cpath, rank);
    if (!index.emplace(c.name, i).second) {
      fail(cpath + ".name", "duplicate chart name '" + c.name + "'");
    }
    out.charts.push_back(std::move(c));
  }
  if (j.contains("gluings")) {
    const json& gluings = j["gluings"];
    if (!gluings.is_array()) fail(path + ".gluings", "expected an array");
    for (size_t i = 0; i < gluings.size(); ++i) {
      std::string gpath = path + ".gluings[" + std::to_string(i) + "]";
      const json& gj = gluings[i];
      if (!gj.is_object()) fail(gpath, "expected a gluing object");
      Gluing g;
      std::string left =
          parse_string(require_field(gj, "left", gpath), gpath + ".left");
      std::string right =
          parse_string(require_field(gj, "right", gpath), gpath + ".right");
      auto li = index.find(left);
      if (li == index.end()) fail(gpath + ".left", "unknown chart '" + left + "'");
      auto ri = index.find(right);
      if (ri == index.end()) {
        fail(gpath + ".right", "unknown chart '" + right + "'");
      }
      g.left = li->second;
      g.right = ri->second;
      g.overlap =
          parse_chart(require_field(gj, "overlap", gpath), gpath + ".overlap", rank);
      g.left_witness = parse_vec(require_field(gj, "left_witness", gpath),
                                 gpath + ".left_witness", rank);
      g.right_witness = parse_vec(require_field(gj, "right_witness", gpath),
                                  gpath + ".right_witness", rank);
      out.gluings.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::string int_to_json_string(const Int& v) { return v.str(); }

ParsedObjects parse_input_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected a top-level object");
  const json& version = require_field(doc, "version", "$");
  if (!version.is_string() || version.get<std::string>() != "1") {
    fail("version", "expected the string \"1\"");
  }
  const json& objects = require_field(doc, "objects", "$");
  if (!objects.is_object()) fail("objects", "expected an object map");

  ParsedObjects out;
  // Leaf objects first, then the ones that reference them.
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string path = "objects." + it.key();
    const json& j = it.value();
    if (!j.is_object()) fail(path, "expected an object descriptor");
    std::string type =
        parse_string(require_field(j, "type", path), path + ".type");
    if (type == "lattice") {
      out.lattices.emplace(
          it.key(),
          Lattice{parse_rank(require_field(j, "rank", path), path + ".rank")});
    } else if (type == "cone") {
      size_t rank = parse_rank(require_field(j, "rank", path), path + ".rank");
      bool gens = j.contains("generators");
      bool ineqs = j.contains("inequalities");
      if (gens == ineqs) {
        fail(path, "need exactly one of 'generators' or 'inequalities'");
      }
      if (gens) {
        std::vector<Vec> vs =
            parse_vec_list(j["generators"], path + ".generators", rank);
        out.cones.emplace(it.key(), construct(path, [&] {
                            return Cone::from_generators(vs, rank);
                          }));
      } else {
        std::vector<Vec> vs =
            parse_vec_list(j["inequalities"], path + ".inequalities", rank);
        out.cones.emplace(it.key(), construct(path, [&] {
                            return Cone::from_inequalities(vs, rank);
                          }));
      }
    } else if (type == "monoid") {
      size_t rank = parse_rank(require_field(j, "rank", path), path + ".rank");
      std::vector<Vec> vs = parse_vec_list(require_field(j, "generators", path),
                                           path + ".generators", rank);
      out.monoids.emplace(it.key(), construct(path, [&] {
                            return make_monoid(std::move(vs), rank);
                          }));
    } else if (type == "chart_complex") {
      out.complexes.emplace(it.key(), parse_complex(j, path));
    } else if (type != "fan" && type != "hom" && type != "pan") {
      fail(path + ".type", "unknown type '" + type + "'");
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string path = "objects." + it.key();
    const json& j = it.value();
    std::string type = j["type"].get<std::string>();
    if (type == "fan") {
      size_t rank = parse_rank(require_field(j, "rank", path), path + ".rank");
      const json& cones = require_field(j, "cones", path);
      if (!cones.is_array()) fail(path + ".cones", "expected an array of cone names");
      std::vector<Cone> cs;
      for (size_t i = 0; i < cones.size(); ++i) {
        std::string cpath = path + ".cones[" + std::to_string(i) + "]";
        std::string name = parse_string(cones[i], cpath);
        auto found = out.cones.find(name);
        if (found == out.cones.end()) fail(cpath, "unknown cone '" + name + "'");
        cs.push_back(found->second);
      }
      out.fans.emplace(it.key(), construct(path, [&] {
                         return make_fan(cs, rank);
                       }));
    } else if (type == "hom") {
      std::string sname =
          parse_string(require_field(j, "source", path), path + ".source");
      std::string tname =
          parse_string(require_field(j, "target", path), path + ".target");
      auto src = out.monoids.find(sname);
      if (src == out.monoids.end()) {
        fail(path + ".source", "unknown monoid '" + sname + "'");
      }
      auto tgt = out.monoids.find(tname);
      if (tgt == out.monoids.end()) {
        fail(path + ".target", "unknown monoid '" + tname + "'");
      }
      Mat m = parse_mat(require_field(j, "matrix", path), path + ".matrix",
                        tgt->second.rank, src->second.rank);
      out.homs.emplace(it.key(), construct(path, [&] {
                         return make_hom(src->second, tgt->second, m);
                       }));
    }
  }
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string path = "objects." + it.key();
    const json& j = it.value();
    std::string type = j["type"].get<std::string>();
    if (type == "pan") {
      bool from_fan = j.contains("fan");
      bool from_cone = j.contains("cone");
      if (from_fan == from_cone) {
        fail(path, "need exactly one of 'fan' or 'cone'");
      }
      if (from_fan) {
        std::string name = parse_string(j["fan"], path + ".fan");
        auto found = out.fans.find(name);
        if (found == out.fans.end()) {
          fail(path + ".fan", "unknown fan '" + name + "'");
        }
        out.pans.emplace(it.key(), construct(path, [&] {
                           return pan_of_fan(found->second);
                         }));
      } else {
        std::string name = parse_string(j["cone"], path + ".cone");
        auto found = out.cones.find(name);
        if (found == out.cones.end()) {
          fail(path + ".cone", "unknown cone '" + name + "'");
        }
        out.pans.emplace(it.key(), construct(path, [&] {
                           return pan_of_cone(found->second);
                         }));
      }
    }
  }
  return out;
}

ParsedObjects parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

}  // namespace logcone
