#include "lorentzinv/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lorentzinv/error.hpp"

namespace lorentzinv::json {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::detail::exception& e) {
    parse_error(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Exponents decode_exponents(const json& j, std::size_t nvars) {
  if (!j.is_array() || j.size() != nvars) parse_error("exponent vector must have nvars entries");
  Exponents e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) parse_error("exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return e;
}

RotationTag decode_rotation(const json& j) {
  const std::size_t order = index_value(field(j, "order"), "rotation order");
  if (order == 0) parse_error("rotation order must be positive");
  const json& plane = field(j, "plane");
  if (!plane.is_array() || plane.size() != 2) parse_error("rotation plane must be [i, j]");
  long power = 1;
  if (j.contains("power")) {
    if (!j.at("power").is_number_integer()) parse_error("rotation power must be an integer");
    power = j.at("power").get<long>();
  }
  return {index_value(plane[0], "plane index"), index_value(plane[1], "plane index"),
          Rational(power, static_cast<long>(order))};
}

std::string witness_display(const std::vector<WitnessTerm>& witness) {
  if (witness.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& w : witness) {
    std::string coeff = w.coefficient.to_string();
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < w.powers.size(); ++i) {
      if (w.powers[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "g" + std::to_string(i + 1);
      if (w.powers[i] != 1) mono += "^" + std::to_string(w.powers[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      out += (coeff == "1" ? "" : coeff + "*") + mono;
    }
  }
  return out;
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        write(os, it.value(), indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // arrays of scalars (exponents, coefficients) stay on one line
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
      os << '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (flat) {
          write(os, x, indent, depth + 1);
          continue;
        }
        newline(depth + 1);
        write(os, x, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default: os << j.dump();
  }
}

}  // namespace

json encode(const Rational& r) { return r.to_string(); }

json encode(const BoostScalar& b) {
  if (b.is_rational()) return encode(b.as_rational());
  json out = json::object();
  for (const auto& [power, c] : b.terms()) out[std::to_string(power)] = c.to_string();
  return out;
}

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_error("rational must be a \"p/q\" string or an integer");
}

BoostScalar decode_scalar(const json& j) {
  if (!j.is_object()) return BoostScalar(decode_rational(j));
  BoostScalar out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int power = 0;
    try {
      std::size_t used = 0;
      power = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      parse_error("boost scalar key '" + it.key() + "' is not an integer power");
    }
    out += BoostScalar::monomial(decode_rational(it.value()), power);
  }
  return out;
}

json encode(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", encode(c)}, {"e", e}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

json encode(const RationalPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", encode(c)}, {"e", e}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Poly decode_poly(const json& j) {
  return guarded("polynomial", [&] {
    const std::size_t nvars = index_value(field(j, "nvars"), "nvars");
    Poly p(nvars);
    const json& terms = field(j, "terms");
    if (!terms.is_array()) parse_error("polynomial terms must be an array");
    for (const auto& t : terms) p.add_term(decode_exponents(field(t, "e"), nvars), decode_scalar(field(t, "c")));
    return p;
  });
}

std::vector<Poly> decode_poly_list(const json& j) {
  return guarded("generator list", [&] {
    const json& list = j.is_object() ? field(j, "generators") : j;
    if (!list.is_array()) parse_error("expected an array of polynomials");
    std::vector<Poly> out;
    for (const auto& p : list) out.push_back(decode_poly(p));
    return out;
  });
}

json encode(const Matrix<BoostScalar>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(encode(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix<BoostScalar> decode_matrix(const json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) parse_error("matrix entries must be a nonempty array of rows");
    const std::size_t n = j.size();
    Matrix<BoostScalar> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) parse_error("matrix must be square");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = decode_scalar(j[i][k]);
    }
    return m;
  });
}

json encode(const Transform& t) {
  json out{{"entries", encode(t.base())}};
  if (t.has_rotations()) {
    json rots = json::array();
    for (const auto& r : t.rotations()) {
      rots.push_back({{"order", r.order()},
                      {"plane", {r.first, r.second}},
                      {"power", r.angle.numerator().get_si()}});
    }
    out["rotations"] = rots;
  }
  return out;
}

Transform decode_transform(const json& j, std::optional<std::size_t> dimension) {
  return guarded("generator", [&] {
    if (!j.is_object()) parse_error("generator must be an object");
    std::vector<RotationTag> tags;
    if (j.contains("rotation")) tags.push_back(decode_rotation(j.at("rotation")));
    if (j.contains("rotations")) {
      if (!j.at("rotations").is_array()) parse_error("'rotations' must be an array");
      for (const auto& r : j.at("rotations")) tags.push_back(decode_rotation(r));
    }
    Matrix<BoostScalar> base;
    if (j.contains("entries")) {
      base = decode_matrix(j.at("entries"));
      if (dimension && base.rows() != *dimension) {
        throw Error(ErrorCode::ShapeError, "generator size " + std::to_string(base.rows()) + " differs from dimension " +
                                               std::to_string(*dimension));
      }
    } else {
      if (tags.empty()) parse_error("generator needs 'entries' or a rotation");
      std::size_t d = dimension.value_or(0);
      if (d == 0) {
        for (const auto& t : tags) d = std::max({d, t.first + 1, t.second + 1});
      }
      base = Matrix<BoostScalar>::identity(d);
    }
    return Transform(std::move(base), std::move(tags));
  });
}

MatrixInput decode_matrix_input(const json& j) {
  return guarded("matrix file", [&] {
    MatrixInput in;
    if (j.is_object() && j.contains("signature")) {
      const json& sig = j.at("signature");
      if (!sig.is_array() || sig.size() != 2 || sig[1] != 1) parse_error("signature must be [n, 1]");
      in.signature_n = index_value(sig[0], "signature n");
    }
    std::optional<std::size_t> dim;
    if (in.signature_n) dim = *in.signature_n + 1;
    in.transform = decode_transform(j, dim);
    return in;
  });
}

json encode(const GroupSpec& g) {
  json out{{"kind", std::string(kind_name(g.kind))}};
  if (g.kind == GroupKind::LatticeTranslation) {
    out["lattice"] = {{"rank", g.lattice_rank}};
    return out;
  }
  if (g.signature_n) out["signature"] = {*g.signature_n, 1};
  out["dimension"] = g.dimension;
  json gens = json::array();
  for (const auto& t : g.generators) gens.push_back(encode(t));
  out["generators"] = gens;
  return out;
}

GroupSpec decode_group(const json& j) {
  return guarded("group", [&] {
    if (!j.is_object()) parse_error("group spec must be an object");
    GroupSpec g;
    g.kind = j.contains("kind") ? parse_kind(j.at("kind").get<std::string>())
                                : (j.contains("lattice") ? GroupKind::LatticeTranslation : GroupKind::Finite);
    if (g.kind == GroupKind::LatticeTranslation) {
      const json& rank = j.contains("lattice") ? field(j.at("lattice"), "rank") : field(j, "rank");
      return GroupSpec::lattice(index_value(rank, "lattice rank"));
    }
    std::optional<std::size_t> dim;
    if (j.contains("signature")) {
      const json& sig = j.at("signature");
      if (!sig.is_array() || sig.size() != 2 || sig[1] != 1) parse_error("signature must be [n, 1]");
      g.signature_n = index_value(sig[0], "signature n");
      dim = *g.signature_n + 1;
    }
    if (j.contains("dimension")) {
      const std::size_t d = index_value(j.at("dimension"), "dimension");
      if (dim && *dim != d) throw Error(ErrorCode::ShapeError, "dimension disagrees with signature");
      dim = d;
    }
    const json& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty()) parse_error("'generators' must be a nonempty array");
    for (const auto& gj : gens) {
      g.generators.push_back(decode_transform(gj, dim));
      if (!dim) dim = g.generators.back().dim();
    }
    g.dimension = *dim;
    if (!g.signature_n && g.kind != GroupKind::Finite) g.signature_n = g.dimension - 1;
    g.check();
    return g;
  });
}

json encode(const FourierSpec& f) {
  json terms = json::array();
  for (const auto& t : f.terms) terms.push_back({{"k", t.k}, {"cos", t.cos_amplitude}, {"sin", t.sin_amplitude}});
  return {{"rank", f.rank}, {"terms", terms}};
}

FourierSpec decode_fourier(const json& j) {
  return guarded("Fourier spec", [&] {
    FourierSpec f;
    f.rank = index_value(field(j, "rank"), "rank");
    const json& terms = field(j, "terms");
    if (!terms.is_array()) parse_error("'terms' must be an array");
    for (const auto& t : terms) {
      FourierTerm term;
      const json& k = field(t, "k");
      if (!k.is_array()) parse_error("'k' must be an integer array");
      for (const auto& x : k) {
        if (!x.is_number_integer()) parse_error("frequencies must be integers");
        term.k.push_back(x.get<int>());
      }
      if (t.contains("cos")) term.cos_amplitude = t.at("cos").get<double>();
      if (t.contains("sin")) term.sin_amplitude = t.at("sin").get<double>();
      f.terms.push_back(std::move(term));
    }
    f.check();
    return f;
  });
}

json encode(const MolienSeries& m) {
  auto univariate = [](const std::vector<Rational>& c) {
    RationalPoly p(1);
    for (std::size_t k = 0; k < c.size(); ++k) p.add_term({static_cast<int>(k)}, c[k]);
    return p;
  };
  const RationalPoly num = univariate(m.numerator);
  const RationalPoly den = univariate(m.denominator);
  return {{"num", encode(num)},
          {"den", encode(den)},
          {"display", "(" + num.to_string({"z"}) + ") / (" + den.to_string({"z"}) + ")"},
          {"coeffs", m.expansion}};
}

json encode(const InvolutionNormalForm& nf) {
  return {{"normal_form", std::string(reflection_name(nf.type))},
          {"reflection", encode(nf.reflection)},
          {"conjugator", encode(nf.conjugator)},
          {"cosh_beta", encode(nf.cosh_beta)},
          {"sinh_beta", encode(nf.sinh_beta)},
          {"half_unit", encode(nf.half_unit)},
          {"verified", true}};
}

json encode(const BlockForm& b) {
  json rotation{{"dimension", b.rotation_block.dim()}};
  if (b.rotation_block.dim() > 0) {
    rotation["entries"] = encode(b.rotation_block.base());
    json tags = json::array();
    for (const auto& r : b.rotation_block.rotations()) {
      tags.push_back({{"order", r.order()}, {"plane", {r.first, r.second}}, {"power", r.angle.numerator().get_si()}});
    }
    rotation["rotations"] = tags;
    rotation["order"] = b.rotation_order ? json(*b.rotation_order) : json(nullptr);
  }
  return {{"rotation", rotation},
          {"boost", b.boost_nonzero()},
          {"boost_block", encode(b.boost)},
          {"boost_sign", b.boost_sign},
          {"cosh_beta", encode(b.cosh_beta)},
          {"sinh_beta", encode(b.sinh_beta)}};
}

json encode(const HilbertBasis& hb, bool minkowski_names) {
  const auto names = variable_names(hb.nvars, minkowski_names);
  json basis = json::array();
  json display = json::array();
  json provenance = json::array();
  for (std::size_t k = 0; k < hb.generators.size(); ++k) {
    basis.push_back(encode(hb.generators[k]));
    display.push_back(hb.generators[k].to_string(names));
    provenance.push_back(std::string(provenance_name(hb.provenance[k])));
  }
  json out{{"nvars", hb.nvars},
           {"basis", basis},
           {"display", display},
           {"degrees", hb.degrees},
           {"provenance", provenance},
           {"degree_bound", hb.degree_bound}};
  if (hb.group_order) out["group_order"] = *hb.group_order;
  if (hb.molien) out["molien"] = encode(*hb.molien);
  if (!hb.certificate.empty()) {
    json cert = json::array();
    for (const auto& c : hb.certificate) {
      cert.push_back({{"degree", c.degree},
                      {"molien", c.molien},
                      {"invariant_dimension", c.invariant_dimension},
                      {"generated_dimension", c.generated_dimension}});
    }
    out["certificate"] = cert;
  }
  if (hb.involution) out["involution"] = encode(*hb.involution);
  if (hb.block) out["block"] = encode(*hb.block);
  return out;
}

json encode(const MembershipResult& r) {
  json witness = json::array();
  for (const auto& w : r.witness) witness.push_back({{"powers", w.powers}, {"coefficient", encode(w.coefficient)}});
  json out{{"inside", r.inside}, {"candidates", r.candidates}};
  if (r.inside) {
    out["witness"] = witness;
    out["witness_display"] = witness_display(r.witness);
  }
  return out;
}

json encode(const OrbitVerdict& v) {
  return {{"same_orbit", v.same_orbit},
          {"reason", std::string(orbit_reason_name(v.reason))},
          {"n", v.steps ? json(*v.steps) : json(nullptr)},
          {"step_estimate", v.step_estimate ? json(*v.step_estimate) : json(nullptr)},
          {"rho_p", v.rho_p},
          {"rho_q", v.rho_q}};
}

json encode(const GapReport& r) {
  return {{"beta", r.beta},
          {"samples", r.samples},
          {"seed", r.seed},
          {"min_power", r.min_power},
          {"max_power", r.max_power},
          {"max_orbit_deviation", r.max_orbit_deviation},
          {"max_scaled_orbit_deviation", r.max_scaled_orbit_deviation},
          {"tolerance", r.tolerance},
          {"invariant", r.invariant},
          {"level", r.level},
          {"right_branch_value", r.right_branch_value},
          {"left_branch_value", r.left_branch_value},
          {"right_branch_spread", r.right_branch_spread},
          {"left_branch_spread", r.left_branch_spread},
          {"branch_gap", r.branch_gap},
          {"cone_max_value", r.cone_max_value},
          {"not_a_function_of_rho", r.not_a_function_of_rho}};
}

json encode(const TrivialityVerdict& v) {
  json diffs = json::array();
  json display = json::array();
  for (const auto& d : v.differences) {
    diffs.push_back(encode(d));
    display.push_back(d.to_string(variable_names(d.nvars())));
  }
  return {{"invariant", v.invariant},
          {"constant", v.constant},
          {"differences", diffs},
          {"differences_display", display},
          {"moving_axis", v.moving_axis ? json(*v.moving_axis) : json(nullptr)},
          {"dichotomy_certified", v.dichotomy_certified}};
}

json encode(const ReconstructionResult& r) {
  const std::size_t rank = r.F.nvars() / 2;
  return {{"F", encode(r.F)},
          {"F_display", r.F.to_string(torus_variable_names(rank))},
          {"variables", torus_variable_names(rank)},
          {"sup_error", r.sup_error},
          {"grid_points", r.grid_points},
          {"band_limit", r.band_limit},
          {"periodicity_error", r.periodicity_error}};
}

std::string dump(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::detail::exception& e) {
    parse_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace lorentzinv::json
