#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "strainwig/errors.hpp"
#include "strainwig/field_io.hpp"
#include "strainwig/wigner_core.hpp"

using namespace strainwig;
namespace fs = std::filesystem;

namespace {

WignerField sample_field() {
  StrainConfig c;
  c.epsilon = 0.1;
  const FieldFrame f = FieldFrame::make(1.0, 0.2, cone_parameters(c));
  CoherentSpec s;
  s.alpha = std::polar(2.0, 0.7);
  return coherent_field(s, f, GridSpec::scaled_window(f, 1.0, 1.0, 4.0, 23));
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / ("strainwig_io_" + name); }

void check_same(const WignerField& a, const WignerField& b) {
  REQUIRE(a.grid.nx == b.grid.nx);
  REQUIRE(a.grid.npx == b.grid.npx);
  CHECK(a.grid.x0 == b.grid.x0);
  CHECK(a.grid.dx == b.grid.dx);
  CHECK(a.grid.px0 == b.grid.px0);
  CHECK(a.grid.dpx == b.grid.dpx);
  for (std::size_t k = 0; k < a.grid.size(); ++k) {
    CHECK(a.w11[k].real() == b.w11[k].real());
    CHECK(a.w12[k] == b.w12[k]);
    CHECK(a.w21[k] == b.w21[k]);
    CHECK(a.w22[k].real() == b.w22[k].real());
  }
}

}  // namespace

TEST_CASE("shortest round-trip formatting") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("CSV round trip is exact") {
  const WignerField f = sample_field();
  write_field_csv(f, tmp("a.csv").string());
  check_same(f, read_field_csv(tmp("a.csv").string()));
  std::ifstream is(tmp("a.csv"));
  std::string header;
  std::getline(is, header);
  CHECK(header == "x,px,re_w11,im_w11,re_w12,im_w12,re_w21,im_w21,re_w22,im_w22,trace");
}

TEST_CASE("binary round trip is exact and starts with the magic") {
  const WignerField f = sample_field();
  std::stringstream ss;
  write_field_binary(f, ss);
  const std::string bytes = ss.str();
  CHECK(bytes.substr(0, 4) == "WGNR");
  CHECK(bytes.size() == 4 + 4 * 3 + 8 * 4 + 5 * 8 * f.grid.size());
  std::stringstream in(bytes);
  check_same(f, read_field_binary(in));
}

TEST_CASE("malformed binary input is rejected") {
  const WignerField f = sample_field();
  std::stringstream ss;
  write_field_binary(f, ss);
  std::string bytes = ss.str();

  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  std::stringstream a(bad_magic);
  CHECK_THROWS_AS(read_field_binary(a), ConfigError);

  std::string bad_version = bytes;
  bad_version[4] = 9;
  std::stringstream b(bad_version);
  CHECK_THROWS_AS(read_field_binary(b), ConfigError);

  std::stringstream c(bytes.substr(0, bytes.size() - 10));
  CHECK_THROWS_AS(read_field_binary(c), ConfigError);
}

TEST_CASE("output is deterministic") {
  std::stringstream a, b;
  write_field_csv(sample_field(), a);
  write_field_csv(sample_field(), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("trace heat map is a PNG") {
  write_trace_png(sample_field(), tmp("a.png").string());
  std::ifstream is(tmp("a.png"), std::ios::binary);
  char sig[8] = {};
  is.read(sig, 8);
  CHECK(std::string(sig + 1, 3) == "PNG");
  CHECK(fs::file_size(tmp("a.png")) > 100);
}

TEST_CASE("missing files raise configuration errors") {
  CHECK_THROWS_AS(read_field_csv("/nonexistent/field.csv"), ConfigError);
  CHECK_THROWS_AS(read_field_binary(std::string("/nonexistent/field.wgnr")), ConfigError);
}
