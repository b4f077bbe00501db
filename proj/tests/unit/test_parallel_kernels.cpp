#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <numbers>

#include "strainwig/grid_kernels.hpp"
#include "strainwig/oracle/finite_difference.hpp"
#include "strainwig/wigner_core.hpp"

using namespace strainwig;

namespace {

bool bit_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

struct Setup {
  FieldFrame frame;
  CoherentSpec spec;
  GridSpec grid;
};

Setup setup() {
  StrainConfig c;
  c.epsilon = 0.2;
  Setup s;
  s.frame = FieldFrame::make(1.0, 0.0, cone_parameters(c));
  s.spec.alpha = std::polar(3.0, -std::numbers::pi / 2);
  s.grid = default_evolve_grid(s.spec, s.frame, 61);
  return s;
}

}  // namespace

TEST_CASE("parallel fill is bit-identical to the serial reference") {
  const Setup s = setup();
  const CoherentWigner eval(s.spec, s.frame, 12.5);
  WignerField ref(s.grid);
  ref.meta.frame = s.frame;
  fill_field_serial(ref, eval);
  for (int threads : {1, 2, 3, 4}) {
    set_num_threads(threads);
    WignerField par(s.grid);
    par.meta.frame = s.frame;
    fill_field(par, eval);
    CHECK(bit_equal(par.w11, ref.w11));
    CHECK(bit_equal(par.w12, ref.w12));
    CHECK(bit_equal(par.w21, ref.w21));
    CHECK(bit_equal(par.w22, ref.w22));
  }
}

TEST_CASE("parallel statistics are bit-identical to the serial reference") {
  const Setup s = setup();
  const WignerField f = evolved_field(s.spec, s.frame, s.grid, 30.0);
  const FieldStats ref = field_stats_serial(f);
  for (int threads : {1, 2, 4}) {
    set_num_threads(threads);
    const FieldStats p = field_stats(f);
    CHECK(p.trace_integral == ref.trace_integral);
    CHECK(p.min_trace == ref.min_trace);
    CHECK(p.max_trace == ref.max_trace);
    CHECK(p.argmax_i == ref.argmax_i);
    CHECK(p.argmax_j == ref.argmax_j);
    CHECK(p.max_hermiticity_error == ref.max_hermiticity_error);
  }
}

TEST_CASE("parallel stencils are bit-identical to the serial reference") {
  using namespace strainwig::oracle;
  auto g = GridFunction<cplx>::sample(97, -6, 6, 83, -5, 5, [](double u, double v) {
    return cplx{std::exp(-u * u - v * v) * std::cos(3 * u), std::sin(u * v)};
  });
  for (int threads : {1, 3}) {
    set_num_threads(threads);
    for (auto d : {Derivative::First, Derivative::Second})
      for (auto ax : {Axis::U, Axis::V})
        CHECK(bit_equal(fd_apply(d, g, ax).values, fd_apply_serial(d, g, ax).values));
  }
}
