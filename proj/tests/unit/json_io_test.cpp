#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "lorentzinv/error.hpp"
#include "lorentzinv/json_io.hpp"
#include "oracles.hpp"

using namespace lorentzinv;
namespace io = lorentzinv::json;
using Json = io::json;
namespace t = lorentzinv::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Json, ScalarsRoundTrip) {
  t::Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const BoostScalar b = t::random_scalar(rng, 3, 3);
    EXPECT_EQ(io::decode_scalar(io::encode(b)), b);
  }
  EXPECT_EQ(io::encode(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(io::decode_rational(Json(7)), Rational(7));
  EXPECT_EQ(io::encode(BoostScalar::cosh_beta()).dump(), R"({"-2":"1/2","2":"1/2"})");
  EXPECT_EQ(code_of([] { io::decode_scalar(Json::parse(R"({"x": "1"})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::decode_rational(Json(1.5)); }), ErrorCode::ParseError);
}

TEST(Json, PolynomialsRoundTrip) {
  t::Rng rng(92);
  for (int i = 0; i < 200; ++i) {
    const Poly p = t::random_poly(rng, 3, 5, 5, true);
    EXPECT_EQ(io::decode_poly(io::encode(p)), p);
  }
  const Json bad = Json::parse(R"({"nvars": 2, "terms": [{"c": "1", "e": [1]}]})");
  EXPECT_EQ(code_of([&] { io::decode_poly(bad); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::decode_poly(Json::parse(R"({"terms": []})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::decode_poly(Json::parse(R"({"nvars": "two", "terms": []})")); }), ErrorCode::ParseError);
}

TEST(Json, GroupsRoundTrip) {
  const GroupSpec c3 = GroupSpec::finite({Transform::rotation(2, 0, 1, Rational(1, 3))});
  const GroupSpec back = io::decode_group(io::encode(c3));
  EXPECT_EQ(back.kind, GroupKind::Finite);
  EXPECT_EQ(back.generators, c3.generators);

  const GroupSpec lattice = io::decode_group(Json::parse(R"({"lattice": {"rank": 3}})"));
  EXPECT_EQ(lattice.kind, GroupKind::LatticeTranslation);
  EXPECT_EQ(lattice.lattice_rank, 3u);

  const GroupSpec rot = io::decode_group(
      Json::parse(R"({"dimension": 3, "generators": [{"rotation": {"order": 5, "plane": [0, 1], "power": 2}}]})"));
  EXPECT_EQ(rot.generators.front(), Transform::rotation(3, 0, 1, Rational(2, 5)));

  EXPECT_EQ(code_of([] { io::decode_group(Json::parse(R"({"kind": "weird", "generators": []})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              io::decode_group(Json::parse(R"({"signature": [1, 1], "dimension": 3, "generators": []})"));
            }),
            ErrorCode::ShapeError);
  EXPECT_EQ(code_of([] {
              io::decode_group(Json::parse(R"({"signature": [2, 1], "generators": [{"entries": [["1"]]}]})"));
            }),
            ErrorCode::ShapeError);
}

TEST(Json, MatrixInputs) {
  const auto in = io::decode_matrix_input(Json::parse(R"({"signature": [1, 1], "entries": [["1", "0"], ["0", "-1"]]})"));
  EXPECT_EQ(in.signature_n, std::optional<std::size_t>(1));
  EXPECT_EQ(in.transform.dim(), 2u);
  EXPECT_EQ(code_of([] { io::decode_matrix(Json::parse(R"([["1", "0"], ["0"]])")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::decode_matrix_input(Json::parse(R"({"signature": [1, 2], "entries": [["1"]]})")); }),
            ErrorCode::ParseError);
}

TEST(Json, FourierSpecs) {
  const FourierSpec f = io::decode_fourier(Json::parse(R"({"rank": 1, "terms": [{"k": [1], "sin": 1.0}, {"k": [2], "cos": 1}]})"));
  ASSERT_EQ(f.terms.size(), 2u);
  EXPECT_EQ(f.terms[0].cos_amplitude, 0.0);
  EXPECT_EQ(f.terms[1].cos_amplitude, 1.0);
  EXPECT_EQ(code_of([] { io::decode_fourier(Json::parse(R"({"rank": 1, "terms": [{"k": [1.5]}]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::decode_fourier(Json::parse(R"({"rank": 2, "terms": [{"k": [1]}]})")); }),
            ErrorCode::ShapeError);
}

TEST(Json, DumpUsesSeventeenDigitsAndNullForNonFinite) {
  Json j = Json::object();
  j["a"] = 0.1;
  j["b"] = std::numeric_limits<double>::infinity();
  j["c"] = {1, 2};
  EXPECT_EQ(io::dump(j, -1), R"({"a":0.10000000000000001,"b":null,"c":[1,2]})");
  EXPECT_EQ(io::dump(Json::array(), 2), "[]");
  EXPECT_EQ(io::dump(Json{{"k", {1, 2}}}, 2), "{\n  \"k\": [1, 2]\n}");
}

TEST(Json, ReadFileErrors) {
  EXPECT_EQ(code_of([] { io::read_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
}
