#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lorentzinv/group.hpp"
#include "lorentzinv/invariants.hpp"
#include "lorentzinv/lorentz.hpp"
#include "lorentzinv/membership.hpp"
#include "lorentzinv/regimes.hpp"

namespace lorentzinv::json {

using json = nlohmann::ordered_json;

/// Rationals are "p/q" strings ("p" when q = 1); JSON integers are accepted
/// on input. Boost scalars are {"<power>": "p/q", ...}; a purely rational
/// value is written as a plain rational string.
json encode(const Rational& r);
json encode(const BoostScalar& b);
Rational decode_rational(const json& j);
BoostScalar decode_scalar(const json& j);

/// {"nvars": n, "terms": [{"c": <scalar>, "e": [...]}, ...]} in grevlex order.
json encode(const Poly& p);
json encode(const RationalPoly& p);
Poly decode_poly(const json& j);
std::vector<Poly> decode_poly_list(const json& j);

json encode(const Matrix<BoostScalar>& m);
Matrix<BoostScalar> decode_matrix(const json& j);

/// {"entries": [[...]], "rotation": {"order": k, "plane": [i, j], "power": a}}
/// or "rotations": [...]; a generator with only rotations needs `dimension`.
json encode(const Transform& t);
Transform decode_transform(const json& j, std::optional<std::size_t> dimension = std::nullopt);

struct MatrixInput {
  Transform transform;
  std::optional<std::size_t> signature_n;
};
MatrixInput decode_matrix_input(const json& j);

/// {"kind": ..., "signature": [n, 1], "dimension": d, "generators": [...],
///  "lattice": {"rank": n}}
json encode(const GroupSpec& g);
GroupSpec decode_group(const json& j);

json encode(const FourierSpec& f);
FourierSpec decode_fourier(const json& j);

json encode(const MolienSeries& m);
json encode(const HilbertBasis& hb, bool minkowski_names = false);
json encode(const InvolutionNormalForm& nf);
json encode(const BlockForm& b);
json encode(const MembershipResult& r);
json encode(const OrbitVerdict& v);
json encode(const GapReport& r);
json encode(const TrivialityVerdict& v);
json encode(const ReconstructionResult& r);

/// Serializes with every floating-point number at 17 significant digits.
/// indent < 0 gives the compact single-line form.
std::string dump(const json& j, int indent = 2);

/// Reads and parses a file; throws ParseError.
json read_file(const std::string& path);

}  // namespace lorentzinv::json
