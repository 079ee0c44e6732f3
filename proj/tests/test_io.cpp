#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "opf/config.hpp"
#include "opf/error.hpp"
#include "opf/json_io.hpp"
#include "opf/maps.hpp"
#include "opf/parse.hpp"
#include "opf/series.hpp"

using namespace opf;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Json, TreeCombRoundTrip) {
  TreeComb x = phi_tilde(parse_binary("(1*(2*3))")) * Rational(-3, 2);
  json j = to_json(x);
  EXPECT_EQ(j[0]["basis"], "1(2(3))");
  EXPECT_EQ(j[0]["coeff"], "-3/2");
  EXPECT_EQ((lincomb_from_json<RootedTree, Rational>(j, BasisKind::Rooted)), x);
}

TEST(Json, LambdaRoundTrip) {
  DendComb x = mag_to_dend(parse_binary("(1*2)")) * LambdaPoly::lambda();
  json j = to_json(x);
  EXPECT_TRUE(j[0].contains("coeff_lambda"));
  EXPECT_EQ((lincomb_from_json<PlanarBinaryTree, LambdaPoly>(j, BasisKind::Planar)), x);
}

TEST(Json, KindMismatchAndMalformedInput) {
  json j = to_json(TreeComb(parse_rooted("1(2)")));
  EXPECT_THROW((lincomb_from_json<BinaryTerm, Rational>(j, BasisKind::Binary)), Error);
  EXPECT_THROW((lincomb_from_json<RootedTree, Rational>(json::object(), BasisKind::Rooted)), Error);
  json no_coeff = json::array({json{{"basis", "1"}}});
  EXPECT_THROW((lincomb_from_json<RootedTree, Rational>(no_coeff, BasisKind::Rooted)), Error);
  EXPECT_THROW(rational_from_json(json("1/0")), Error);
}

TEST(Json, DimSeries) {
  json j = to_json(x_dims(4));
  EXPECT_EQ(j["kind"], "EGS");
  EXPECT_EQ(j["dims"], json::array({1, 1, 3, 16}));
}

TEST(Config, DefaultsFileAndEnvironment) {
  unsetenv("OPERAD_FOREST_MAX_N");
  Bounds b = load_bounds();
  EXPECT_EQ(b.max_n, 6);
  EXPECT_EQ(limit_n(b, true), 7);
  b = load_bounds(write_temp("opf_bounds.json", R"({"max_n": 5, "max_order": 12})"));
  EXPECT_EQ(b.max_n, 5);
  EXPECT_EQ(b.max_order, 12);
  EXPECT_THROW(load_bounds(write_temp("opf_bad_key.json", R"({"maxn": 5})")), Error);
  EXPECT_THROW(load_bounds(write_temp("opf_bad_val.json", R"({"max_n": 0})")), Error);
  EXPECT_EQ(load_bounds(write_temp("opf_entries.json", R"({"max_matrix_entries": 500})")).max_matrix_entries, 500);
  EXPECT_THROW(load_bounds(write_temp("opf_entries_bad.json", R"({"max_matrix_entries": 5000})")), Error);
  EXPECT_THROW(load_bounds(std::string("/nonexistent/opf.json")), Error);
  setenv("OPERAD_FOREST_MAX_N", "8", 1);
  b = load_bounds();
  EXPECT_EQ(b.max_n, 8);
  EXPECT_EQ(limit_n(b, true), 8);
  unsetenv("OPERAD_FOREST_MAX_N");
}
