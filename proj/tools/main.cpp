// polarbox: exact H/V conversion, polarity and HV-symmetry for rational
// pointed polyhedra. Results go to standard output (or -o FILE), statistics
// and warnings to standard error, so conversions can be chained in a pipe.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polarbox/conversion.hpp"
#include "polarbox/errors.hpp"
#include "polarbox/polarity.hpp"
#include "polarbox/rep_io.hpp"

using namespace polarbox;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rep parse_file(const std::string& path) {
  std::vector<std::string> warnings;
  Rep r = parse_rep(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return r;
}

VRep require_vfile(const std::string& path, const char* command) {
  Rep r = parse_file(path);
  if (!std::holds_alternative<VRep>(r))
    throw ParseError(std::string(command) + " requires a V-representation file");
  return std::get<VRep>(std::move(r));
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file: " + out_path);
  out << text;
}

void print_report(const char* route, const ConversionReport& rep) {
  std::cerr << "conversion: " << route << "\n"
            << "input rows: " << rep.input_rows << "\n"
            << "output rows: " << rep.output_rows << "\n"
            << "max intermediate rays: " << rep.max_intermediate_rays << "\n";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_convert(const std::string& input, bool direct, const std::string& out_path) {
  Rep r = parse_file(input);
  if (std::holds_alternative<HRep>(r)) {
    if (direct) throw ParseError("--direct applies to V-representation input only");
    VertexEnumResult res = vertex_enumeration(std::get<HRep>(r));
    write_output(emit_rep(res.vrep), out_path);
    print_report("H -> V", res.report);
    return 0;
  }
  const VRep& v = std::get<VRep>(r);
  FacetEnumResult res = direct ? facet_enumeration_direct(v) : facet_enumeration_lifted(v);
  write_output(emit_rep(res.hrep), out_path);
  print_report(direct ? "V -> H (direct)" : "V -> H (lifted)", res.report);
  return 0;
}

int run_polar(const std::string& input) {
  VRep v = require_vfile(input, "polar");
  std::cout << emit_rep(canonicalize(polar_hrep(v)));
  return 0;
}

int run_bipolar(const std::string& input) {
  VRep v = require_vfile(input, "bipolar");
  std::cout << emit_rep(bipolar_vrep(v));
  return 0;
}

int run_symcheck(const std::string& input) {
  VRep v = require_vfile(input, "symcheck");
  SymmetryVerdict verdict = is_hv_symmetric(v);
  std::cout << "HV-symmetric: " << (verdict.symmetric ? "yes" : "no") << "\n";
  switch (verdict.reason) {
    case SymmetryReason::Verified:
      std::cout << "reason: verified\n";
      break;
    case SymmetryReason::OriginOutside:
      std::cout << "reason: origin-outside\n";
      break;
    case SymmetryReason::PolarNotPointed:
      std::cout << "reason: polar-not-pointed\n";
      break;
  }
  if (verdict.reason == SymmetryReason::PolarNotPointed) {
    std::cout << "theorem1: n/a (polar not pointed)\n";
  } else {
    Theorem1Result t = verify_theorem1(v);
    std::cout << "theorem1: (a,b,c,d) = (" << bool_str(t.origin_in_p) << ","
              << bool_str(t.bipolar_identity) << "," << bool_str(t.polar_v_encodes_h) << ","
              << bool_str(t.hv_symmetric) << ")\n";
  }
  return verdict.symmetric ? 0 : 1;
}

int run_certify(const std::string& input, const std::vector<std::string>& coords) {
  VRep v = require_vfile(input, "certify");
  if (coords.size() != v.n)
    throw ParseError("certify: expected " + std::to_string(v.n) + " coordinates, got " +
                     std::to_string(coords.size()));
  RVector x(v.n);
  for (size_t j = 0; j < v.n; ++j) {
    try {
      x[j] = Rational::from_string(coords[j]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  auto cert = member_certificate(v, x);
  if (!cert) {
    std::cout << "not a member\n";
    return 1;
  }
  std::cout << "member\n";
  std::cout << "lambda:";
  for (const auto& l : cert->lambda) std::cout << " " << l.str();
  std::cout << "\nmu:";
  for (const auto& m : cert->mu) std::cout << " " << m.str();
  std::cout << "\n";
  return 0;
}

int run_liftcompare(const std::string& input, const std::string& csv_path, size_t cap) {
  VRep v = require_vfile(input, "liftcompare");

  FacetEnumResult direct = facet_enumeration_direct(v);  // needs 0 in P
  FacetEnumResult lifted = facet_enumeration_lifted(v);
  if (!reps_equal(direct.hrep, lifted.hrep))
    throw Error("liftcompare: routes disagree on the facet matrix");

  // feasible bases of each route's working system: the lifted route pivots
  // on the cone {y : V(P) y >= 0} in R^{n+1}, the direct route on V(P) read
  // as an H-representation in R^n
  const size_t lifted_bases = count_feasible_cone_bases(v.rows, cap);
  HRep as_h;
  as_h.n = v.n;
  as_h.rows = v.rows;
  const size_t direct_bases = count_feasible_bases(as_h, cap);
  lifted.report.feasible_basis_count = lifted_bases;
  direct.report.feasible_basis_count = direct_bases;

  std::cerr << "liftcompare: both routes produced identical facet matrices ("
            << lifted.hrep.rows.rows() << " rows)\n";

  std::ostringstream table;
  table << "route output_rows feasible_bases max_intermediate_rays\n"
        << "lifted " << lifted.hrep.rows.rows() << " " << lifted_bases << " "
        << lifted.report.max_intermediate_rays << "\n"
        << "direct " << direct.hrep.rows.rows() << " " << direct_bases << " "
        << direct.report.max_intermediate_rays << "\n";
  std::cout << table.str();

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw Error("cannot open CSV file: " + csv_path);
    csv << "route,output_rows,feasible_bases,max_intermediate_rays\n"
        << "lifted," << lifted.hrep.rows.rows() << "," << lifted_bases << ","
        << lifted.report.max_intermediate_rays << "\n"
        << "direct," << direct.hrep.rows.rows() << "," << direct_bases << ","
        << direct.report.max_intermediate_rays << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral representation conversion and polarity"};
  app.require_subcommand(1);

  size_t cap = kDefaultCap;
  long seed = 0;
  app.add_option("--cap", cap, "brute-force binomial cap")
      ->envname("POLARBOX_CAP")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized experiments (reserved; all current commands are deterministic)")
      ->capture_default_str();

  std::string input, out_path, csv_path;
  bool direct = false;
  std::vector<std::string> coords;

  CLI::App* convert = app.add_subcommand("convert", "convert between H- and V-representations");
  convert->add_option("input", input, "input .ine/.ext file")->required();
  convert->add_flag("--direct", direct,
                    "V to H without lifting (requires the origin to be a member)");
  convert->add_option("-o,--output", out_path, "write the result here instead of stdout");

  CLI::App* polar = app.add_subcommand("polar", "H-representation of the polar of a V-file");
  polar->add_option("input", input)->required();

  CLI::App* bipolar = app.add_subcommand("bipolar", "V-representation of the bipolar of a V-file");
  bipolar->add_option("input", input)->required();

  CLI::App* symcheck = app.add_subcommand("symcheck", "decide HV-symmetry of a V-file");
  symcheck->add_option("input", input)->required();

  CLI::App* certify = app.add_subcommand(
      "certify", "membership certificate: certify INPUT -- x1 x2 ...");
  certify->add_option("input", input)->required();
  certify->add_option("point", coords, "point coordinates (rationals)");

  CLI::App* liftcompare = app.add_subcommand(
      "liftcompare", "compare the lifted and direct facet enumeration routes");
  liftcompare->add_option("input", input)->required();
  liftcompare->add_option("--csv", csv_path, "also write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (convert->parsed()) return run_convert(input, direct, out_path);
    if (polar->parsed()) return run_polar(input);
    if (bipolar->parsed()) return run_bipolar(input);
    if (symcheck->parsed()) return run_symcheck(input);
    if (certify->parsed()) return run_certify(input, coords);
    if (liftcompare->parsed()) return run_liftcompare(input, csv_path, cap);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotPointed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const PolarNotPointed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const OriginNotContained& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
