#include "logcone/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logcone/charts.hpp"
#include "logcone/errors.hpp"
#include "logcone/fan.hpp"
#include "logcone/hom.hpp"
#include "logcone/json_io.hpp"
#include "logcone/monoid.hpp"
#include "logcone/pan.hpp"
#include "logcone/report.hpp"

namespace logcone {
namespace {

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ' ';
    s += args[i];
  }
  return s;
}

std::string gens_text(const std::vector<Vec>& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ' ';
    s += vec_to_string(vs[i]);
  }
  return s;
}

template <typename T>
const T& named(const std::map<std::string, T>& objects, const std::string& name,
               const char* kind) {
  auto it = objects.find(name);
  if (it == objects.end())
    throw ParseError("objects." + name + ": missing " + kind + " named '" +
                     name + "'");
  return it->second;
}

template <typename T>
void require_some(const std::map<std::string, T>& objects, const char* kind) {
  if (objects.empty())
    throw ParseError(std::string("objects: no ") + kind +
                     " objects in the input document");
}

// Size-guard violations abort the command; any other failure of one check
// becomes an error entry so the remaining checks still run.
template <typename F>
void guarded(Report& r, const std::string& name, F&& f) {
  try {
    f();
  } catch (const InputTooLargeError&) {
    throw;
  } catch (const std::exception& e) {
    r.add_status(name, CheckStatus::error, e.what());
  }
}

Int parse_positive(const std::string& s, const char* flag) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string(flag) + ": positive integer required");
  Int v(s);
  if (v == 0) throw ParseError(std::string(flag) + ": positive integer required");
  return v;
}

bool hom_predicate(const MonoidHom& h, const std::string& p) {
  if (p == "injective") return is_injective(h);
  if (p == "local") return is_local(h);
  if (p == "exact") return is_exact(h);
  if (p == "locally-exact") return is_locally_exact(h);
  return is_kummer(h);
}

void add_predicate_entry(Report& r, const std::string& name,
                         const MonoidHom& h, const std::string& p) {
  guarded(r, name + ":" + p, [&] {
    bool v = hom_predicate(h, p);
    r.add(name + ":" + p, v, v ? "holds" : "does not hold");
  });
}

void run_check_hom(const ParsedObjects& po, const std::string& predicate,
                   Report& r) {
  require_some(po.homs, "hom");
  static const std::vector<std::string> kBooleans = {
      "injective", "local", "exact", "locally-exact", "kummer"};
  for (const auto& [name, h] : po.homs) {
    if (predicate == "critical-faces") {
      guarded(r, name + ":critical-faces", [&, &name = name, &h = h] {
        std::vector<MonoidFace> faces = critical_faces(h);
        std::vector<MonoidFace> maximal = maximal_critical_faces(h);
        for (size_t i = 0; i < faces.size(); ++i) {
          bool is_max = false;
          for (const MonoidFace& m : maximal)
            if (m.cone == faces[i].cone) is_max = true;
          std::string details = "generators " + gens_text(faces[i].monoid.gens);
          if (is_max) details += "; maximal";
          r.add(name + ":face-" + std::to_string(i), true, details);
        }
        r.add(name + ":maximal-count", true, std::to_string(maximal.size()));
      });
      continue;
    }
    if (predicate == "all") {
      for (const std::string& p : kBooleans) add_predicate_entry(r, name, h, p);
      guarded(r, name + ":cokernel", [&, &name = name, &h = h] {
        CokernelInvariants ci = cokernel_invariants(hom_group_matrix(h));
        std::string details = "free rank " + std::to_string(ci.free_rank);
        if (!ci.torsion.empty()) {
          details += "; torsion";
          for (const Int& t : ci.torsion) details += " " + t.str();
        }
        r.add(name + ":cokernel", true, details);
      });
      continue;
    }
    add_predicate_entry(r, name, h, predicate);
  }
}

void run_fan_refine(const ParsedObjects& po, Report& r) {
  if (po.fans.size() < 2)
    throw ParseError("objects: fan refine needs at least two fans");
  guarded(r, "refinement", [&] {
    auto it = po.fans.begin();
    Fan result = it->second;
    for (++it; it != po.fans.end(); ++it)
      result = common_refinement(result, it->second);
    r.add("maximal-cones", true,
          std::to_string(result.maximal_cones().size()));
    for (const auto& [name, f] : po.fans) {
      if (supports_equal(result, f)) {
        bool v = is_subdivision(result, f);
        r.add("subdivides-" + name, v,
              v ? "refinement subdivides the input" : "not a subdivision");
      } else {
        r.add_status("subdivides-" + name, CheckStatus::out_of_scope,
                     "supports differ");
      }
    }
  });
}

void run_fan_complete(const ParsedObjects& po, Report& r) {
  require_some(po.fans, "fan");
  for (const auto& [name, f] : po.fans) {
    guarded(r, name + ":completion", [&, &name = name, &f = f] {
      Fan comp = complete_fan(f);
      r.add(name + ":contains-original", is_subfan(f, comp));
      r.add(name + ":covers-space",
            fan_covers_cone(Cone::full_space(f.rank), comp));
      r.add(name + ":maximal-cones", true,
            std::to_string(comp.maximal_cones().size()));
    });
  }
}

void run_fan_subdivision(const ParsedObjects& po, Report& r) {
  const Fan& fine = named(po.fans, "fine", "fan");
  const Fan& coarse = named(po.fans, "coarse", "fan");
  guarded(r, "subdivision", [&] {
    bool v = is_subdivision(fine, coarse);
    r.add("subdivision", v,
          v ? "fine subdivides coarse" : "fine does not subdivide coarse");
  });
}

void run_fan_subfan(const ParsedObjects& po, Report& r) {
  const Fan& inner = named(po.fans, "inner", "fan");
  const Fan& outer = named(po.fans, "outer", "fan");
  guarded(r, "subfan", [&] {
    bool v = is_subfan(inner, outer);
    r.add("subfan", v,
          v ? "inner is a subfan of outer" : "inner is not a subfan of outer");
  });
}

void run_monoid_hilbert(const ParsedObjects& po, Report& r) {
  require_some(po.monoids, "monoid");
  for (const auto& [name, m] : po.monoids) {
    guarded(r, name + ":hilbert-basis", [&, &name = name, &m = m] {
      std::vector<Vec> hb = hilbert_basis(m);
      r.add(name + ":hilbert-basis", true, "elements " + gens_text(hb));
    });
  }
}

void run_monoid_saturate(const ParsedObjects& po, Report& r) {
  require_some(po.monoids, "monoid");
  for (const auto& [name, m] : po.monoids) {
    guarded(r, name + ":saturation", [&, &name = name, &m = m] {
      AffineMonoid sat = saturation(m);
      bool already = is_saturated(m);
      r.add(name + ":saturation", true,
            "generators " + gens_text(sat.gens) +
                "; already saturated: " + (already ? "yes" : "no"));
      std::vector<Vec> units = unit_group_basis(m);
      r.add(name + ":units", true,
            units.empty() ? "none" : "basis " + gens_text(units));
    });
  }
}

void run_monoid_faces(const ParsedObjects& po, Report& r) {
  require_some(po.monoids, "monoid");
  for (const auto& [name, m] : po.monoids) {
    guarded(r, name + ":faces", [&, &name = name, &m = m] {
      std::vector<MonoidFace> faces = monoid_faces(m);
      for (size_t i = 0; i < faces.size(); ++i)
        r.add(name + ":face-" + std::to_string(i), true,
              "generators " + gens_text(faces[i].monoid.gens));
      if (is_sharp(m)) {
        Fan sf = spec_fan(m);
        r.add(name + ":spec-fan", true,
              std::to_string(sf.cones.size()) + " cones");
      } else {
        r.add_status(name + ":spec-fan", CheckStatus::out_of_scope,
                     "monoid is not sharp");
      }
    });
  }
}

void run_monoid_dual(const ParsedObjects& po, Report& r) {
  require_some(po.monoids, "monoid");
  for (const auto& [name, m] : po.monoids) {
    guarded(r, name + ":dual", [&, &name = name, &m = m] {
      AffineMonoid d = dual_monoid(m);
      r.add(name + ":dual", true, "generators " + gens_text(d.gens));
    });
  }
}

void run_pushout(const ParsedObjects& po, const std::string& mult,
                 const std::string& find_exponent, Report& r) {
  if (!mult.empty()) {
    Int n = parse_positive(mult, "--mult");
    require_some(po.homs, "hom");
    for (const auto& [name, h] : po.homs) {
      guarded(r, name + ":mult-saturated", [&, &name = name, &h = h] {
        bool sat = is_pushout_saturated_along_mult(h, n);
        r.add(name + ":mult-saturated", true, sat ? "yes" : "no");
      });
    }
    return;
  }
  if (!find_exponent.empty()) {
    Int n_max = parse_positive(find_exponent, "--find-exponent");
    require_some(po.homs, "hom");
    for (const auto& [name, h] : po.homs) {
      try {
        SaturationCertificate cert = find_saturation_exponent(h, n_max);
        r.add(name + ":exponent", true, "n = " + cert.exponent.str());
      } catch (const ExponentNotFound& e) {
        r.add(name + ":exponent", false, e.what());
      } catch (const InputTooLargeError&) {
        throw;
      } catch (const std::exception& e) {
        r.add_status(name + ":exponent", CheckStatus::error, e.what());
      }
    }
    return;
  }
  const MonoidHom& left = named(po.homs, "left", "hom");
  const MonoidHom& right = named(po.homs, "right", "hom");
  guarded(r, "pushout", [&] {
    PushoutResult res = integral_pushout(left, right);
    r.add("integral-generators", true, gens_text(res.integral.gens));
    r.add("fs-generators", true, gens_text(res.fs.gens));
    SharpPushout direct = sharp_pushout_direct(left, right);
    SharpPushout descended = sharp_pushout_descended(left, right);
    bool agree = sharp_pushouts_agree(direct, descended);
    r.add("sharp-paths-agree", agree,
          agree ? "direct and descended sharpenings match"
                : "direct and descended sharpenings differ");
    if (is_saturated(left.source) && is_saturated(left.target) &&
        is_saturated(right.target)) {
      AffineMonoid sp = sharpened_pushout(left, right);
      r.add("sharpened-generators", true, gens_text(sp.gens));
    } else {
      r.add_status("sharpened-generators", CheckStatus::out_of_scope,
                   "inputs not all saturated");
    }
  });
}

void two_pans(const ParsedObjects& po, const char* what,
              std::pair<std::string, Pan>& a, std::pair<std::string, Pan>& b) {
  if (po.pans.size() != 2)
    throw ParseError(std::string("objects: pan ") + what +
                     " needs exactly two pans");
  auto it = po.pans.begin();
  a = *it;
  ++it;
  b = *it;
}

void run_pan_equal(const ParsedObjects& po, Report& r) {
  std::pair<std::string, Pan> a, b;
  two_pans(po, "equal", a, b);
  guarded(r, "equal", [&] {
    bool v = pan_equal(a.second, b.second);
    r.add("equal", v,
          a.first + " and " + b.first +
              (v ? " have equal support" : " have different support"));
  });
}

void run_pan_union(const ParsedObjects& po, Report& r) {
  std::pair<std::string, Pan> a, b;
  two_pans(po, "union", a, b);
  guarded(r, "union", [&] {
    Pan res = pan_union(a.second, b.second);
    r.add("union-maximal-cones", true,
          std::to_string(res.rep.maximal_cones().size()));
    r.add("contains-" + a.first, is_subpan(a.second, res));
    r.add("contains-" + b.first, is_subpan(b.second, res));
  });
}

void run_pan_intersect(const ParsedObjects& po, Report& r) {
  std::pair<std::string, Pan> a, b;
  two_pans(po, "intersect", a, b);
  guarded(r, "intersection", [&] {
    Pan res = pan_intersection(a.second, b.second);
    r.add("intersection-maximal-cones", true,
          std::to_string(res.rep.maximal_cones().size()));
    r.add("contained-in-" + a.first, is_subpan(res, a.second));
    r.add("contained-in-" + b.first, is_subpan(res, b.second));
    if (is_strongly_convex(res)) {
      AffineMonoid pm = monoid_of_pan(res);
      r.add("intersection-monoid", true, "generators " + gens_text(pm.gens));
    } else {
      r.add_status("intersection-monoid", CheckStatus::out_of_scope,
                   "support is not strongly convex");
    }
  });
}

std::vector<std::pair<std::string, Pan>> cover_parts(const ParsedObjects& po,
                                                     const char* what) {
  std::vector<std::pair<std::string, Pan>> parts;
  for (const auto& [name, p] : po.pans)
    if (name != "ambient") parts.emplace_back(name, p);
  if (parts.empty())
    throw ParseError(std::string("objects: pan ") + what +
                     " needs parts besides 'ambient'");
  return parts;
}

void run_pan_cover(const ParsedObjects& po, Report& r) {
  const Pan& ambient = named(po.pans, "ambient", "pan");
  std::vector<std::pair<std::string, Pan>> parts = cover_parts(po, "cover");
  std::vector<Pan> ps;
  for (const auto& [name, p] : parts) ps.push_back(p);
  guarded(r, "closed-cover", [&] {
    for (const auto& [name, p] : parts) {
      if (!is_subpan(p, ambient)) {
        r.add("closed-cover", false,
              "part " + name + " is not a subpan of the ambient pan");
        return;
      }
    }
    bool v = is_closed_cover(ambient, ps);
    r.add("closed-cover", v,
          v ? "parts cover the ambient pan"
            : "parts do not cover the ambient pan");
  });
  for (const auto& [name, p] : parts) {
    guarded(r, "included-" + name, [&, &name = name, &p = p] {
      PanMorphism inc = make_pan_morphism(
          p, ambient, Mat::identity(ambient.lattice.rank));
      r.add("included-" + name, is_subpan_inclusion(inc));
    });
  }
  guarded(r, "refined-maximal-cones", [&] {
    try {
      Fan ref = refine_for_subpans(ambient, ps);
      r.add("refined-maximal-cones", true,
            std::to_string(ref.maximal_cones().size()));
    } catch (const InputTooLargeError& e) {
      r.add_status("refined-maximal-cones", CheckStatus::out_of_scope,
                   std::string("size guard: ") + e.what());
    }
  });
}

void run_pan_cech(const ParsedObjects& po, Report& r) {
  const Pan& ambient = named(po.pans, "ambient", "pan");
  std::vector<std::pair<std::string, Pan>> parts = cover_parts(po, "cech");
  std::vector<Pan> ps;
  for (const auto& [name, p] : parts) ps.push_back(p);
  guarded(r, "cells", [&] {
    CechCube cube = cech_cube(ambient, ps);
    for (const auto& [t, cell] : cube.cells) {
      std::string bits;
      for (int b : t) bits += static_cast<char>('0' + b);
      r.add("cell-" + bits, true,
            std::to_string(cell.rep.maximal_cones().size()) +
                " maximal cones; support dimension " +
                std::to_string(cell.rep.support_dim()));
    }
  });
}

void run_pan_pan7(const ParsedObjects& po, Report& r) {
  if (po.homs.size() != 1)
    throw ParseError("objects: pan pan7 needs exactly one hom");
  const auto& [hname, theta] = *po.homs.begin();
  guarded(r, hname + ":vertical-locus", [&, &hname = hname, &theta = theta] {
    try {
      PanMorphism hulls =
          make_pan_morphism(pan_of_cone(theta.source.hull),
                            pan_of_cone(theta.target.hull), theta.matrix);
      Pan v = vertical_locus(hulls);
      r.add(hname + ":vertical-locus", true,
            std::to_string(v.rep.maximal_cones().size()) + " maximal cones");
    } catch (const NotStronglyConvexError& e) {
      r.add_status(hname + ":vertical-locus", CheckStatus::out_of_scope,
                   e.what());
    }
  });
  guarded(r, hname + ":setup", [&, &hname = hname, &theta = theta] {
    std::vector<MonoidFace> maximal = maximal_critical_faces(theta);
    for (size_t i = 0; i < maximal.size(); ++i) {
      Report sub = verify_pan7_setup(theta, maximal[i]);
      for (const ReportEntry& e : sub.entries)
        r.add_status(hname + ":face-" + std::to_string(i) + ":" + e.name,
                     e.status, e.details);
    }
  });
}

void run_verify_builtin(const std::string& which, Report& r) {
  Report sub;
  if (which == "localization-figure") {
    sub = verify_localization_figure();
  } else if (which == "w-complex") {
    sub = verify_w_complex();
  } else {
    sub = verify_conserv_charts();
  }
  r.entries = std::move(sub.entries);
}

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact combinatorics of fans, pans, and fs monoids", "logcone"};
  std::string format = "text";
  std::string out_path;
  unsigned long long seed = 0;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Also write the report to this file");
  app.add_option("--seed", seed,
                 "Seed echo for scripted property suites; reports do not "
                 "depend on it");
  app.require_subcommand(1);

  std::string file;
  std::string predicate = "all";
  std::string which;
  std::string mult;
  std::string find_exponent;
  std::function<void(Report&)> handler;

  CLI::App* check =
      app.add_subcommand("check", "Predicate checks on monoid homs");
  check->fallthrough();
  check->require_subcommand(1);
  CLI::App* check_hom = check->add_subcommand(
      "hom", "Evaluate hom predicates for every hom in the input");
  check_hom->fallthrough();
  check_hom->add_option("file", file, "Input document")->required();
  check_hom
      ->add_option("--predicate", predicate,
                   "Predicate to evaluate; 'all' runs every boolean predicate")
      ->check(CLI::IsMember({"injective", "local", "exact", "locally-exact",
                             "kummer", "critical-faces", "all"}))
      ->capture_default_str();
  check_hom->callback([&] {
    handler = [&](Report& r) {
      run_check_hom(parse_input_file(file), predicate, r);
    };
  });

  CLI::App* fan = app.add_subcommand("fan", "Fan operations");
  fan->fallthrough();
  fan->require_subcommand(1);
  struct FanMode {
    const char* name;
    const char* help;
    void (*run)(const ParsedObjects&, Report&);
  };
  static const FanMode kFanModes[] = {
      {"refine", "Common refinement of all fans in the input", run_fan_refine},
      {"complete", "Complete every fan in the input", run_fan_complete},
      {"subdivision", "Whether fan 'fine' subdivides fan 'coarse'",
       run_fan_subdivision},
      {"subfan", "Whether fan 'inner' is a subfan of fan 'outer'",
       run_fan_subfan},
  };
  for (const FanMode& mode : kFanModes) {
    CLI::App* sub = fan->add_subcommand(mode.name, mode.help);
    sub->fallthrough();
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&, run = mode.run] {
      handler = [&, run](Report& r) { run(parse_input_file(file), r); };
    });
  }

  CLI::App* monoid = app.add_subcommand("monoid", "Affine monoid operations");
  monoid->fallthrough();
  monoid->require_subcommand(1);
  static const FanMode kMonoidModes[] = {
      {"hilbert", "Hilbert basis of every monoid in the input",
       run_monoid_hilbert},
      {"saturate", "Saturation and unit group of every monoid in the input",
       run_monoid_saturate},
      {"faces", "Faces and spectrum fan of every monoid in the input",
       run_monoid_faces},
      {"dual", "Dual monoid of every monoid in the input", run_monoid_dual},
  };
  for (const FanMode& mode : kMonoidModes) {
    CLI::App* sub = monoid->add_subcommand(mode.name, mode.help);
    sub->fallthrough();
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&, run = mode.run] {
      handler = [&, run](Report& r) { run(parse_input_file(file), r); };
    });
  }

  CLI::App* pushout = app.add_subcommand(
      "pushout",
      "Pushout of homs 'left' and 'right'; with --mult or --find-exponent, "
      "saturation of the pushout along multiplication for every hom");
  pushout->fallthrough();
  pushout->add_option("file", file, "Input document")->required();
  CLI::Option* om = pushout->add_option(
      "--mult", mult, "Check saturation of the pushout along this multiple");
  CLI::Option* oe = pushout->add_option(
      "--find-exponent", find_exponent,
      "Search the least saturating multiple up to this bound");
  om->excludes(oe);
  oe->excludes(om);
  pushout->callback([&] {
    handler = [&](Report& r) {
      run_pushout(parse_input_file(file), mult, find_exponent, r);
    };
  });

  CLI::App* pan = app.add_subcommand("pan", "Pan operations");
  pan->fallthrough();
  pan->require_subcommand(1);
  static const FanMode kPanModes[] = {
      {"equal", "Whether the two pans in the input are equal", run_pan_equal},
      {"union", "Union of the two pans in the input", run_pan_union},
      {"intersect", "Intersection of the two pans in the input",
       run_pan_intersect},
      {"cover", "Whether the parts form a closed cover of pan 'ambient'",
       run_pan_cover},
      {"cech", "Intersection cells of the parts inside pan 'ambient'",
       run_pan_cech},
      {"pan7", "Localization setup checks for the hom in the input",
       run_pan_pan7},
  };
  for (const FanMode& mode : kPanModes) {
    CLI::App* sub = pan->add_subcommand(mode.name, mode.help);
    sub->fallthrough();
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&, run = mode.run] {
      handler = [&, run](Report& r) { run(parse_input_file(file), r); };
    });
  }

  CLI::App* verify = app.add_subcommand("verify", "Built-in verifications");
  verify->fallthrough();
  verify->require_subcommand(1);
  CLI::App* builtin = verify->add_subcommand(
      "builtin", "Run a built-in verification report");
  builtin->fallthrough();
  builtin->add_option("which", which, "Which verification to run")
      ->required()
      ->check(CLI::IsMember(
          {"localization-figure", "w-complex", "conserv-charts"}));
  builtin->callback(
      [&] { handler = [&](Report& r) { run_verify_builtin(which, r); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  }
  if (!handler) return {2, "", "no command selected\n"};

  Report report;
  report.command = join_args(args);
  try {
    handler(report);
  } catch (const ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const InputTooLargeError& e) {
    return {3, "", std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    report.add_status("internal", CheckStatus::error, e.what());
  }

  std::string text = format == "json" ? report_json(report) : report_text(report);
  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) return {2, "", "cannot write " + out_path + "\n"};
    os << text;
  }
  return {report.overall() ? 0 : 1, text, ""};
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult res = run_command(args);
  if (!res.output.empty()) std::cout << res.output;
  if (!res.err.empty()) std::cerr << res.err;
  return res.code;
}

std::vector<std::string> covered_operations() {
  std::vector<std::string> ops = {
      "arrangement_fan",
      "build_conserv_charts",
      "build_w_complex",
      "build_w_family",
      "cech_cube",
      "check_structure_map",
      "cokernel_invariants",
      "common_refinement",
      "complete_fan",
      "cone_dual",
      "cone_faces",
      "critical_faces",
      "dual_monoid",
      "fan_covers_cone",
      "find_saturation_exponent",
      "halfspace_region",
      "hilbert_basis",
      "hnf_basis",
      "hom_group_matrix",
      "in_sublattice",
      "integral_pushout",
      "is_closed_cover",
      "is_exact",
      "is_injective",
      "is_isogeny",
      "is_kummer",
      "is_local",
      "is_locally_exact",
      "is_pushout_saturated_along_mult",
      "is_saturated",
      "is_sharp",
      "is_strongly_convex",
      "is_subdivision",
      "is_subfan",
      "is_subpan",
      "is_subpan_inclusion",
      "is_unimodular",
      "kernel_basis",
      "lattice_intersection",
      "localize_at_element",
      "localize_at_face",
      "make_chart",
      "make_fan",
      "make_hom",
      "make_monoid",
      "make_pan_morphism",
      "maximal_critical_faces",
      "monoid_contains",
      "monoid_equal",
      "monoid_faces",
      "monoid_of_lattice_points",
      "monoid_of_pan",
      "multiplication_hom",
      "pan_equal",
      "pan_intersection",
      "pan_of_cone",
      "pan_of_fan",
      "pan_union",
      "parse_input_file",
      "quotient_by_saturation",
      "rebase_to_group",
      "refine_for_subpans",
      "right_inverse",
      "saturate_sublattice",
      "saturation",
      "sharp_pushout_descended",
      "sharp_pushout_direct",
      "sharp_pushouts_agree",
      "sharpen",
      "sharpened_pushout",
      "smith_normal_form",
      "solve_in_span",
      "solve_linear",
      "spec_fan",
      "submonoid",
      "unit_generators",
      "unit_group_basis",
      "validate_gluing",
      "verify_conserv_charts",
      "verify_localization_figure",
      "verify_pan7_setup",
      "verify_w_bullets",
      "verify_w_complex",
      "vertical_locus",
  };
  return ops;
}

}  // namespace logcone
