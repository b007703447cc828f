// Command line front end: census, classify, regions, realize, verify, iso,
// decompose. Reports go to stdout, diagnostics to stderr. Exit codes:
// 0 ok, 2 bad input, 3 non-generic polygon, 4 validation violation.

#include "polyreg/error.hpp"
#include "polyreg/harness.hpp"
#include "polyreg/json_io.hpp"
#include "polyreg/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitViolation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw polyreg::BadInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw polyreg::BadInput("cannot write file: " + path);
  out << content;
}

std::string classification_line(const polyreg::Classification& cls) {
  using polyreg::Verdict;
  std::ostringstream out;
  if (cls.verdict == Verdict::kIndefinite) {
    const auto& w = *cls.pattern;
    out << "indefinite pattern=" << polyreg::pattern_name(w.pattern) << " positions=";
    for (int t = 0; t < 6; ++t) out << (t ? "," : "") << w.positions[t];
  } else if (cls.special_case) {
    out << "definite special=n7";
  } else {
    const auto& m = *cls.move;
    out << "definite move=" << m.moved << " after=" << m.insert_after
        << " swapped=" << (m.swapped ? "yes" : "no");
  }
  return out.str();
}

void print_report_text(const polyreg::ValidationReport& rep) {
  std::cout << "n=" << rep.n << " trials=" << rep.trials << " cycles=" << rep.census_count
            << " regions=" << rep.formula_count << " definite=" << rep.definite_count
            << " indefinite=" << rep.indefinite_count << "\n";
  if (rep.trials > 0) {
    for (const auto& s : rep.occurrence) {
      std::cout << "  " << s.cycle.to_string() << "  "
                << (s.verdict == polyreg::Verdict::kIndefinite ? "indefinite" : "definite  ")
                << "  present_in=" << s.present_in << "/" << rep.trials << "\n";
    }
  }
  for (const auto& v : rep.violations) std::cout << "VIOLATION: " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regions of a convex polygon cut by its diagonals: exact enumeration, "
               "cycle labels, and the definite/indefinite classification"};
  app.require_subcommand(1);

  // census
  auto* census = app.add_subcommand("census", "Combinatorial census for one n");
  int census_n = 6;
  bool census_json = false;
  census->add_option("--n", census_n, "cycle length")->required();
  census->add_flag("--json", census_json, "emit JSON");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a two-standard cycle");
  std::string classify_cycle;
  classify_cmd->add_option("--cycle", classify_cycle, "cycle, e.g. \"1 4 5 2 3 6\"")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Standard consecutive row structure");
  std::string decompose_cycle;
  decompose->add_option("--cycle", decompose_cycle, "cycle text")->required();

  // regions
  auto* regions_cmd = app.add_subcommand("regions", "Enumerate the regions of a polygon");
  bool regions_random = false;
  int regions_n = 6;
  std::uint64_t regions_seed = 1;
  std::string regions_polygon, regions_svg, regions_json_flag_unused;
  bool regions_json = false, regions_labels = false;
  regions_cmd->add_flag("--random", regions_random, "use a seeded random generic polygon");
  regions_cmd->add_option("--n", regions_n, "vertex count for --random");
  regions_cmd->add_option("--seed", regions_seed, "seed for --random");
  regions_cmd->add_option("--polygon", regions_polygon, "polygon JSON file");
  regions_cmd->add_option("--svg", regions_svg, "write an SVG rendering here");
  regions_cmd->add_flag("--json", regions_json, "emit the JSON report");
  regions_cmd->add_flag("--labels", regions_labels, "cycle labels in the SVG");

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "Construct a polygon exhibiting a cycle");
  std::string realize_cycle_text, realize_out, realize_svg;
  std::uint64_t realize_seed = 1;
  realize_cmd->add_option("--cycle", realize_cycle_text, "target cycle")->required();
  realize_cmd->add_option("--seed", realize_seed, "construction seed");
  realize_cmd->add_option("--out", realize_out, "write polygon JSON here");
  realize_cmd->add_option("--svg", realize_svg, "write an SVG rendering here");

  // verify
  auto* verify = app.add_subcommand("verify", "Empirical validation campaign");
  int verify_n = 6, verify_trials = 20;
  std::uint64_t verify_seed = 1;
  bool verify_json = false;
  verify->add_option("--n", verify_n, "vertex count")->required();
  verify->add_option("--trials", verify_trials, "sampled polygons")->required();
  verify->add_option("--seed", verify_seed, "seed")->required();
  verify->add_flag("--json", verify_json, "emit JSON");

  // iso
  auto* iso = app.add_subcommand("iso", "Orientation preserving/reversing isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("--a", iso_a, "arrangement JSON file")->required();
  iso->add_option("--b", iso_b, "arrangement JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*census) {
      const auto rep = polyreg::census_report(census_n);
      if (census_json) {
        std::cout << polyreg::validation_report_to_json(rep) << "\n";
      } else {
        std::cout << "cycles=" << rep.census_count << " regions=" << rep.formula_count
                  << " definite=" << rep.definite_count << " indefinite=" << rep.indefinite_count
                  << "\n";
      }
    } else if (*classify_cmd) {
      const auto c = polyreg::CycleN::from_string(classify_cycle);
      std::cout << classification_line(polyreg::classify(c)) << "\n";
    } else if (*decompose) {
      const auto c = polyreg::CycleN::from_string(decompose_cycle);
      const auto d = polyreg::standard_decomposition(c);
      std::cout << "rows:";
      for (std::size_t r = 0; r < d.rows.size(); ++r) {
        if (r) std::cout << " |";
        std::cout << ' ' << d.rows[r].first;
        if (d.rows[r].second != d.rows[r].first) std::cout << '-' << d.rows[r].second;
      }
      std::cout << "\n";
    } else if (*regions_cmd) {
      if (regions_random != regions_polygon.empty())
        throw polyreg::BadInput("regions: pass exactly one of --random or --polygon FILE");
      const polyreg::PolygonSpec poly = regions_random
                                            ? polyreg::random_generic_polygon(regions_n, regions_seed)
                                            : polyreg::polygon_from_json(read_file(regions_polygon));
      const auto arr = polyreg::build_arrangement(poly);
      const auto regions = polyreg::enumerate_regions(arr);
      if (!regions_svg.empty())
        write_file(regions_svg, polyreg::arrangement_svg(arr, regions, regions_labels));
      if (regions_json) {
        std::cout << polyreg::region_report_to_json(poly, regions) << "\n";
      } else {
        std::cout << "n=" << poly.n() << " regions=" << regions.size() << "\n";
        for (const auto& r : regions) {
          std::cout << "  " << r.cycle.to_string() << "  sides=" << r.side_count << "  "
                    << (r.classification.verdict == polyreg::Verdict::kIndefinite ? "indefinite"
                                                                                  : "definite")
                    << "\n";
        }
      }
    } else if (*realize_cmd) {
      const auto c = polyreg::CycleN::from_string(realize_cycle_text);
      const auto poly = polyreg::realize_cycle(c, realize_seed);
      const std::string json = polyreg::polygon_to_json(poly);
      if (!realize_out.empty())
        write_file(realize_out, json);
      else
        std::cout << json << "\n";
      if (!realize_svg.empty()) {
        const auto arr = polyreg::build_arrangement(poly);
        const auto regions = polyreg::enumerate_regions(arr);
        write_file(realize_svg, polyreg::arrangement_svg(arr, regions, false, &c));
      }
      std::cout << "realized cycle=" << c.to_string() << " n=" << c.size()
                << " seed=" << realize_seed << " verified=yes\n";
    } else if (*verify) {
      const auto rep = polyreg::empirical_validate(verify_n, verify_trials, verify_seed);
      if (verify_json)
        std::cout << polyreg::validation_report_to_json(rep) << "\n";
      else
        print_report_text(rep);
      if (!rep.ok()) return kExitViolation;
    } else if (*iso) {
      const auto a = polyreg::arrangement_from_json(read_file(iso_a));
      const auto b = polyreg::arrangement_from_json(read_file(iso_b));
      const auto result = polyreg::find_isomorphism(a, b);
      switch (result.kind) {
        case polyreg::IsoKind::kPreserving:
        case polyreg::IsoKind::kReversing: {
          std::cout << (result.kind == polyreg::IsoKind::kPreserving ? "preserving" : "reversing")
                    << " pi=";
          for (std::size_t k = 0; k < result.pi->size(); ++k)
            std::cout << (k ? " " : "") << (*result.pi)[k];
          std::cout << "\n";
          break;
        }
        case polyreg::IsoKind::kNone:
          std::cout << "none\n";
          break;
      }
    }
  } catch (const polyreg::NonGeneric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const polyreg::BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
