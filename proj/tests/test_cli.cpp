#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "logcone/cli.hpp"
#include "logcone/errors.hpp"
#include "logcone/json_io.hpp"

using namespace logcone;
using json = nlohmann::json;

namespace {

struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& stem, const std::string& content) {
    path = std::filesystem::temp_directory_path() /
           ("logcone_test_" + stem + ".json");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

const char* kDiagDoc = R"({
  "version": "1",
  "objects": {
    "P": {"type": "monoid", "rank": 1, "generators": [[1]]},
    "Q": {"type": "monoid", "rank": 2, "generators": [[1, 0], [0, 1]]},
    "diag": {"type": "hom", "source": "P", "target": "Q", "matrix": [[1], [1]]}
  }
})";

const char* kFanDoc = R"({
  "version": "1",
  "objects": {
    "c1": {"type": "cone", "rank": 2, "generators": [[1, 0], [1, 1]]},
    "c2": {"type": "cone", "rank": 2, "generators": [[1, 1], [0, 1]]},
    "c3": {"type": "cone", "rank": 2, "generators": [[1, 0], [0, 1]]},
    "fine": {"type": "fan", "rank": 2, "cones": ["c1", "c2"]},
    "coarse": {"type": "fan", "rank": 2, "cones": ["c3"]}
  }
})";

const char* kGuardDoc = R"({
  "version": "1",
  "objects": {
    "big": {"type": "cone", "rank": 9,
            "generators": [[1,0,0,0,0,0,0,0,0],
                           [-1,0,0,0,0,0,0,0,0],
                           [0,1,0,0,0,0,0,0,0]]},
    "p": {"type": "pan", "cone": "big"}
  }
})";

}  // namespace

TEST_CASE("reports are byte-identical across runs") {
  TempFile doc("diag", kDiagDoc);
  std::vector<std::string> args = {"--format", "json", "check", "hom", doc.str()};
  CliResult a = run_command(args);
  CliResult b = run_command(args);
  CHECK(a.code == b.code);
  CHECK(a.output == b.output);
  CHECK(a.err == b.err);
}

TEST_CASE("json reports are canonical") {
  TempFile doc("diag_canon", kDiagDoc);
  CliResult r = run_command(
      {"--format", "json", "check", "hom", "--predicate", "local", doc.str()});
  REQUIRE(r.code == 0);
  json parsed = json::parse(r.output);
  CHECK(parsed.dump(2) + "\n" == r.output);
  CHECK(parsed.contains("command"));
  CHECK(parsed.contains("overall"));
  REQUIRE(parsed["entries"].is_array());
  CHECK(parsed["overall"] == "pass");
}

TEST_CASE("exit codes follow the documented contract") {
  // 0: all checks pass.
  CliResult ok = run_command({"verify", "builtin", "localization-figure"});
  CHECK(ok.code == 0);

  // 1: a check fails.
  TempFile diag("diag_kummer", kDiagDoc);
  CliResult fail =
      run_command({"check", "hom", "--predicate", "kummer", diag.str()});
  CHECK(fail.code == 1);

  // 2: unreadable input.
  TempFile empty("empty", "");
  CliResult parse = run_command({"check", "hom", empty.str()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("parse") != std::string::npos);

  CliResult missing = run_command({"check", "hom", "/nonexistent/input.json"});
  CHECK(missing.code == 2);

  // 2: usage errors.
  CliResult usage = run_command({"no-such-command"});
  CHECK(usage.code == 2);

  // 3: size guard.
  TempFile guard("guard", kGuardDoc);
  CliResult big = run_command({"pan", "equal", guard.str()});
  CHECK(big.code == 3);
  CHECK(big.err.find("guard") != std::string::npos);
}

TEST_CASE("subdivision verdicts use the reserved fan names") {
  TempFile doc("fans", kFanDoc);
  CliResult r = run_command({"fan", "subdivision", doc.str()});
  CHECK(r.code == 0);
  CHECK(r.output.find("subdivides") != std::string::npos);

  // Swapping roles makes the check fail: the coarse fan does not subdivide.
  std::string swapped(kFanDoc);
  size_t f = swapped.find("\"fine\"");
  size_t c = swapped.find("\"coarse\"");
  REQUIRE(f != std::string::npos);
  REQUIRE(c != std::string::npos);
  swapped.replace(c, 8, "\"fine\"");
  swapped.replace(f, 6, "\"coarse\"");
  TempFile doc2("fans_swapped", swapped);
  CliResult r2 = run_command({"fan", "subdivision", doc2.str()});
  CHECK(r2.code == 1);
}

TEST_CASE("missing reserved objects name the missing role") {
  TempFile doc("norole", kDiagDoc);
  CliResult r = run_command({"fan", "subdivision", doc.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("fine") != std::string::npos);
}

TEST_CASE("parse errors name the json path") {
  const char* bad = R"({
    "version": "1",
    "objects": {
      "P": {"type": "monoid", "rank": 1, "generators": [[1]]},
      "diag": {"type": "hom", "source": "P", "target": "P", "matrix": [["x"]]}
    }
  })";
  TempFile doc("badmat", bad);
  CliResult r = run_command({"check", "hom", doc.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("objects.diag.matrix") != std::string::npos);
}

TEST_CASE("out file duplicates stdout exactly") {
  TempFile doc("outdup", kDiagDoc);
  std::filesystem::path out =
      std::filesystem::temp_directory_path() / "logcone_test_out.json";
  CliResult r = run_command({"--format", "json", "--out", out.string(), "check",
                             "hom", "--predicate", "local", doc.str()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string written((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(written == r.output);
  std::filesystem::remove(out);

  CliResult bad = run_command({"--out", "/nonexistent/dir/x.json", "check",
                               "hom", doc.str()});
  CHECK(bad.code == 2);
}

TEST_CASE("out of scope entries do not fail the run") {
  CliResult r =
      run_command({"--format", "json", "verify", "builtin", "w-complex"});
  CHECK(r.code == 0);
  json parsed = json::parse(r.output);
  int oos = 0;
  for (const auto& e : parsed["entries"]) {
    if (e["status"] == "out_of_scope") ++oos;
  }
  CHECK(oos > 0);
  CHECK(parsed["overall"] == "pass");
}

TEST_CASE("big integers round trip as decimal strings") {
  const char* doc = R"({
    "version": "1",
    "objects": {
      "m": {"type": "monoid", "rank": 1,
            "generators": [["123456789012345678901234567890"]]}
    }
  })";
  ParsedObjects objs = parse_input_text(doc);
  REQUIRE(objs.monoids.count("m") == 1);
  const AffineMonoid& m = objs.monoids.at("m");
  REQUIRE(m.gens.size() == 1);
  Int expect("123456789012345678901234567890");
  CHECK(m.gens[0][0] == expect);
  CHECK(int_to_json_string(expect) == "123456789012345678901234567890");
  CHECK(int_to_json_string(Int(42)) == "42");
  CHECK(int_to_json_string(Int(-42)) == "-42");

  // Small entries stay plain JSON numbers.
  const char* plain = R"({
    "version": "1",
    "objects": {
      "m": {"type": "monoid", "rank": 1, "generators": [[7]]}
    }
  })";
  ParsedObjects small = parse_input_text(plain);
  CHECK(small.monoids.at("m").gens[0][0] == 7);
}

TEST_CASE("every dispatchable operation is declared covered") {
  // The curated list mirrors the operation inventory in the documentation.
  const std::vector<std::string> expected = {
      "smith_normal_form", "cokernel_invariants", "kernel_basis",
      "saturate_sublattice", "cone_dual", "cone_faces", "common_refinement",
      "is_subdivision", "is_subfan", "complete_fan", "spec_fan",
      "hilbert_basis", "saturation", "is_saturated", "is_sharp",
      "unit_group_basis", "sharpen", "monoid_faces", "localize_at_face",
      "dual_monoid", "monoid_contains", "is_injective", "is_local", "is_exact",
      "is_locally_exact", "is_kummer", "critical_faces",
      "maximal_critical_faces", "integral_pushout", "sharpened_pushout",
      "is_pushout_saturated_along_mult", "find_saturation_exponent",
      "build_conserv_charts", "pan_of_fan", "pan_equal", "is_subpan_inclusion",
      "pan_union", "pan_intersection", "refine_for_subpans", "is_closed_cover",
      "cech_cube", "is_strongly_convex", "monoid_of_pan", "is_isogeny",
      "vertical_locus", "halfspace_region", "verify_pan7_setup",
      "build_w_complex", "validate_gluing", "check_structure_map",
      "verify_w_bullets", "verify_localization_figure",
      "verify_conserv_charts"};
  std::vector<std::string> covered = covered_operations();
  CHECK(std::is_sorted(covered.begin(), covered.end()));
  for (const std::string& op : expected) {
    bool found = std::binary_search(covered.begin(), covered.end(), op);
    if (!found) {
      CAPTURE(op);
      CHECK(found);
    }
  }
}

TEST_CASE("text and json formats agree on the verdict") {
  TempFile doc("fmt", kDiagDoc);
  CliResult txt = run_command({"check", "hom", doc.str()});
  CliResult js = run_command({"--format", "json", "check", "hom", doc.str()});
  CHECK(txt.code == js.code);
  json parsed = json::parse(js.output);
  size_t entries = parsed["entries"].size();
  // One line per entry plus the command header and the overall line.
  size_t lines = static_cast<size_t>(
      std::count(txt.output.begin(), txt.output.end(), '\n'));
  CHECK(lines == entries + 2);
}

TEST_CASE("the seed flag is echoed but never changes the report") {
  TempFile doc("seeded", kDiagDoc);
  CliResult a =
      run_command({"--format", "json", "--seed", "7", "check", "hom", doc.str()});
  CliResult b =
      run_command({"--format", "json", "--seed", "8", "check", "hom", doc.str()});
  json pa = json::parse(a.output);
  json pb = json::parse(b.output);
  CHECK(pa["entries"] == pb["entries"]);
  CHECK(pa["overall"] == pb["overall"]);
}
