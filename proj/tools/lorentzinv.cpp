// lorentzinv: command-line front end. Every command writes one JSON envelope
// to stdout; the exit code is 0 on success and the error code otherwise.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentzinv/error.hpp"
#include "lorentzinv/invariants.hpp"
#include "lorentzinv/json_io.hpp"
#include "lorentzinv/lorentz.hpp"
#include "lorentzinv/membership.hpp"
#include "lorentzinv/regimes.hpp"

namespace li = lorentzinv;
using li::json::json;

namespace {

struct Globals {
  int indent = 2;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
};

li::Point2 parse_point(const std::string& text) {
  std::istringstream in(text);
  li::Point2 p;
  char comma = 0;
  if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof()) {
    throw li::Error(li::ErrorCode::ParseError, "point '" + text + "' must look like X,Y");
  }
  return p;
}

bool minkowski_names(const li::GroupSpec& g) { return g.signature_n.has_value(); }

json classify(const std::string& path, std::optional<std::size_t> n_override) {
  const li::json::MatrixInput in = li::json::decode_matrix_input(li::json::read_file(path));
  const std::size_t n = n_override.value_or(in.signature_n.value_or(in.transform.dim() - 1));
  const li::LorentzMatrix a = li::validate(in.transform, n);
  json out{{"lorentz", true},
           {"signature", {n, 1}},
           {"det", a.det()},
           {"component", std::string(li::component_name(li::component(a)))}};
  try {
    out["involution"] = li::json::encode(li::involution_normal_form(a));
  } catch (const li::Error& e) {
    out["involution"] = {{"applicable", false}, {"reason", std::string(li::error_name(e.code()))}, {"message", e.what()}};
  }
  try {
    json block = li::json::encode(li::detect_block_structure(a));
    block["detected"] = true;
    out["block"] = block;
  } catch (const li::Error& e) {
    if (e.code() != li::ErrorCode::NotBlock) throw;
    out["block"] = {{"detected", false}, {"message", e.what()}};
  }
  return out;
}

json verify(const std::string& group_path, const std::string& poly_path, const std::string& map_path) {
  const li::GroupSpec g = li::json::decode_group(li::json::read_file(group_path));
  const auto names = li::variable_names(g.dimension, minkowski_names(g));
  if (!map_path.empty()) {
    const std::vector<li::Poly> comps = li::json::decode_poly_list(li::json::read_file(map_path));
    const li::PolyMap f(comps);
    const li::InvarianceResult r = li::check_equivariant(f, g);
    json display = json::array();
    for (const auto& c : comps) display.push_back(c.to_string(names));
    return {{"equivariant", r.holds},
            {"failing_generator", r.failing_generator ? json(*r.failing_generator) : json(nullptr)},
            {"map", display}};
  }
  const li::Poly p = li::json::decode_poly(li::json::read_file(poly_path));
  const li::InvarianceResult r = li::is_invariant(p, g);
  return {{"invariant", r.holds},
          {"failing_generator", r.failing_generator ? json(*r.failing_generator) : json(nullptr)},
          {"poly", p.to_string(names)}};
}

json membership(const std::string& gens_path, const std::string& poly_path, std::size_t term_cap) {
  const std::vector<li::Poly> gens = li::json::decode_poly_list(li::json::read_file(gens_path));
  const li::Poly p = li::json::decode_poly(li::json::read_file(poly_path));
  li::MembershipOptions opts;
  opts.term_cap = term_cap;
  json out = li::json::encode(li::membership(p, gens, opts));
  json display = json::array();
  for (const auto& g : gens) display.push_back(g.to_string());
  out["generators"] = display;
  out["poly"] = p.to_string();
  return out;
}

json molien(const std::string& group_path, int degree, std::size_t cap) {
  const li::GroupSpec g = li::json::decode_group(li::json::read_file(group_path));
  const li::FiniteGroup elements = li::enumerate_finite(g, cap);
  json out = li::json::encode(li::molien(elements, degree));
  out["group_order"] = elements.order();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lorentzinv: polynomial invariants of discrete Lorentz groups and finite orthogonal groups.\n"
      "Inputs are JSON files; every command prints a JSON envelope and exits with a stable code."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--json-indent", globals.indent, "Indentation of the JSON output (negative: single line)")
      ->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed for sampling commands")->capture_default_str();
  app.add_option("--tolerance", globals.tolerance, "Numeric tolerance for orbit and gap checks");

  std::string matrix_path, group_path, poly_path, map_path, gens_path, fourier_path;
  std::optional<std::size_t> signature_n;
  std::optional<int> max_degree;
  std::size_t closure_cap = li::kDefaultClosureCap;
  std::size_t term_cap = li::MembershipOptions{}.term_cap;
  int molien_degree = 8;
  double beta = 0.0;
  std::string p_text, q_text;
  std::size_t samples = 500;
  double level = 3.0;
  std::size_t rank = 0;
  int band_cap = li::kDefaultBandLimitCap;

  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Validate A^T J A = J for a matrix, report its connected component of O(n,1), the reflection normal form "
      "of an involution of O(1,1), and the block form diag(R, H_beta)");
  classify_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--signature-n", signature_n, "Spatial dimension n (default: from the file or size - 1)");

  auto* basis_cmd = app.add_subcommand(
      "hilbert-basis",
      "Hilbert basis of the invariant ring: {x^2 - y^2} for a boost, {x, y^2} / {y, x^2} for the two reflection "
      "types, Reynolds averaging certified by the Molien series for finite groups, and the union of a rotation "
      "block basis with x_n^2 - y^2 for diag(R, H_beta)");
  basis_cmd->add_option("--group", group_path, "Group JSON file")->required()->check(CLI::ExistingFile);
  basis_cmd->add_option("--max-degree", max_degree, "Generator search cutoff (default: group order)");
  basis_cmd->add_option("--closure-cap", closure_cap, "Maximum finite group order")->capture_default_str();

  auto* verify_cmd = app.add_subcommand(
      "verify-invariant",
      "Exact check p(Ax) = p(x) for every generator (boosts in light-cone coordinates, rotations in complex-pair "
      "coordinates); with --map, checks equivariance F(Ax) = A F(x) instead");
  verify_cmd->add_option("--group", group_path, "Group JSON file")->required()->check(CLI::ExistingFile);
  auto* poly_opt = verify_cmd->add_option("--poly", poly_path, "Polynomial JSON file")->check(CLI::ExistingFile);
  auto* map_opt =
      verify_cmd->add_option("--map", map_path, "Polynomial map JSON file (list of components)")->check(CLI::ExistingFile);
  poly_opt->excludes(map_opt);

  auto* member_cmd = app.add_subcommand(
      "membership", "Decide p in R[g_1, ..., g_k] by degree-bounded exact linear algebra and return a witness");
  member_cmd->add_option("--generators", gens_path, "Generator list JSON file")->required()->check(CLI::ExistingFile);
  member_cmd->add_option("--poly", poly_path, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  member_cmd->add_option("--term-cap", term_cap, "Maximum number of generator products")->capture_default_str();

  auto* molien_cmd = app.add_subcommand(
      "molien", "Molien series (1/|G|) sum_g 1/det(I - z g) of a finite group as a reduced rational function");
  molien_cmd->add_option("--group", group_path, "Group JSON file")->required()->check(CLI::ExistingFile);
  molien_cmd->add_option("--degree", molien_degree, "Expansion order K")->capture_default_str();
  molien_cmd->add_option("--closure-cap", closure_cap, "Maximum finite group order")->capture_default_str();

  auto* orbit_cmd = app.add_subcommand(
      "orbit-separate",
      "Decide whether q = H_beta^n p: the signs of u = x + y and v = x - y are orbit invariants, so points on the "
      "same level set of x^2 - y^2 can lie on different orbits");
  orbit_cmd->add_option("--beta", beta, "Boost parameter")->required();
  orbit_cmd->add_option("--p", p_text, "First point X,Y")->required();
  orbit_cmd->add_option("--q", q_text, "Second point X,Y")->required();

  auto* gap_cmd = app.add_subcommand(
      "gap-demo",
      "The smooth invariant G = exp(-1/(x^2 - y^2)) on the right branch and 0 elsewhere: invariant along boost "
      "orbits but not a function of x^2 - y^2, since it takes two values on the level set");
  gap_cmd->add_option("--beta", beta, "Boost parameter")->required();
  gap_cmd->add_option("--samples", samples, "Number of sampled points")->capture_default_str();
  gap_cmd->add_option("--level", level, "Level t of x^2 - y^2 = t")->capture_default_str();

  auto* cocompact_cmd = app.add_subcommand(
      "cocompact-check",
      "Translation invariance under Z^n by exact finite differences; an invariant polynomial must be constant");
  cocompact_cmd->add_option("--poly", poly_path, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  cocompact_cmd->add_option("--rank", rank, "Lattice rank n")->required();

  auto* torus_cmd = app.add_subcommand(
      "torus-reconstruct",
      "Write a Z^n-periodic trigonometric polynomial f as F(cos 2 pi x_i, sin 2 pi x_i) via the multiple-angle "
      "recurrences and check f = F o sigma on a grid");
  torus_cmd->add_option("--fourier", fourier_path, "Fourier spec JSON file")->required()->check(CLI::ExistingFile);
  torus_cmd->add_option("--band-cap", band_cap, "Largest allowed band limit K")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share exit code 1; --help exits 0
    return app.exit(e) == 0 ? 0 : 1;
  }

  json result;
  std::string command;
  try {
    if (classify_cmd->parsed()) {
      command = "classify";
      result = classify(matrix_path, signature_n);
    } else if (basis_cmd->parsed()) {
      command = "hilbert-basis";
      const li::GroupSpec g = li::json::decode_group(li::json::read_file(group_path));
      li::HilbertOptions opts;
      opts.max_degree = max_degree;
      opts.closure_cap = closure_cap;
      result = li::json::encode(li::hilbert_basis(g, opts), minkowski_names(g));
      result["kind"] = std::string(li::kind_name(g.kind));
    } else if (verify_cmd->parsed()) {
      command = "verify-invariant";
      if (poly_path.empty() && map_path.empty()) {
        throw li::Error(li::ErrorCode::ParseError, "verify-invariant needs --poly or --map");
      }
      result = verify(group_path, poly_path, map_path);
    } else if (member_cmd->parsed()) {
      command = "membership";
      result = membership(gens_path, poly_path, term_cap);
    } else if (molien_cmd->parsed()) {
      command = "molien";
      result = molien(group_path, molien_degree, closure_cap);
    } else if (orbit_cmd->parsed()) {
      command = "orbit-separate";
      const double tol = globals.tolerance.value_or(li::kDefaultOrbitTolerance);
      result = li::json::encode(li::separate_orbits(parse_point(p_text), parse_point(q_text), beta, tol));
    } else if (gap_cmd->parsed()) {
      command = "gap-demo";
      result = li::json::encode(
          li::schwarz_gap_report(beta, samples, globals.seed, level, globals.tolerance.value_or(1e-10)));
    } else if (cocompact_cmd->parsed()) {
      command = "cocompact-check";
      result = li::json::encode(
          li::cocompact_triviality(li::json::decode_poly(li::json::read_file(poly_path)), rank));
    } else if (torus_cmd->parsed()) {
      command = "torus-reconstruct";
      result = li::json::encode(
          li::torus_reconstruct(li::json::decode_fourier(li::json::read_file(fourier_path)), band_cap));
    }
  } catch (const li::Error& e) {
    const json err{{"status", "error"},
                   {"command", command},
                   {"code", static_cast<int>(e.code())},
                   {"name", std::string(li::error_name(e.code()))},
                   {"message", e.what()}};
    std::cout << li::json::dump(err, globals.indent) << '\n';
    std::cerr << "lorentzinv: " << li::error_name(e.code()) << ": " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    const auto code = li::ErrorCode::Internal;
    const json err{{"status", "error"},
                   {"command", command},
                   {"code", static_cast<int>(code)},
                   {"name", std::string(li::error_name(code))},
                   {"message", e.what()}};
    std::cout << li::json::dump(err, globals.indent) << '\n';
    std::cerr << "lorentzinv: internal error: " << e.what() << '\n';
    return static_cast<int>(code);
  }
  const json envelope{{"status", "ok"}, {"command", command}, {"result", result}};
  std::cout << li::json::dump(envelope, globals.indent) << '\n';
  return 0;
}
