#include <doctest.h>

#include <array>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace graphonlab;
using graphonlab::testing::q;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("validate_graphon accepts valid input") {
  const auto c = validate_graphon({q(1)}, {{q(1, 2)}});
  CHECK(c.part_count() == 1);
  CHECK(c.is_exact());
  CHECK(c.value(0, 0) == q(1, 2));

  const auto w = validate_graphon({q(1, 2), q(1, 2)}, {{q(1), q(0)}, {q(0), q(1)}});
  CHECK(w.part_count() == 2);
  CHECK(w.value(0, 1) == q(0));
}

TEST_CASE("validate_graphon errors") {
  CHECK(code_of([] { validate_graphon({q(1, 2), q(1, 2)}, {{q(1), q(0)}, {q(1), q(1)}}); }) ==
        Errc::AsymmetricValues);
  CHECK(code_of([] { validate_graphon({q(1)}, {{q(3, 2)}}); }) == Errc::ValueOutOfRange);
  CHECK(code_of([] { validate_graphon({q(1)}, {{q(-1, 2)}}); }) == Errc::ValueOutOfRange);
  CHECK(code_of([] { validate_graphon({q(0), q(1)}, {{q(0), q(0)}, {q(0), q(0)}}); }) ==
        Errc::NonpositiveMeasure);
  CHECK(code_of([] { validate_graphon({q(1, 2), q(1, 3)}, {{q(0), q(0)}, {q(0), q(0)}}); }) ==
        Errc::MeasuresDontSumToOne);
  CHECK(code_of([] { validate_graphon({q(1)}, {{q(0), q(0)}}); }) == Errc::MalformedGraphon);
  CHECK(code_of([] { validate_graphon({}, {}); }) == Errc::MalformedGraphon);
}

TEST_CASE("floating measures within tolerance are renormalized") {
  const auto w = validate_graphon({Scalar(0.3), Scalar(0.7 + 5e-13)}, {{q(1), q(0)}, {q(0), q(1)}});
  CHECK_FALSE(w.is_exact());
  CHECK_FALSE(w.value(0, 0).is_exact());
  const double total = w.part(0).to_double() + w.part(1).to_double();
  CHECK(std::abs(total - 1.0) < 1e-15);
  CHECK_THROWS_AS(validate_graphon({Scalar(0.3), Scalar(0.71)}, {{q(1), q(0)}, {q(0), q(1)}}), Error);
}

TEST_CASE("constant_graphon") {
  CHECK(constant_graphon(q(0)).value(0, 0) == q(0));
  CHECK(constant_graphon(q(1)).part(0) == q(1));
  CHECK(code_of([] { constant_graphon(q(2)); }) == Errc::ValueOutOfRange);
  CHECK_FALSE(constant_graphon(Scalar(0.5)).is_exact());
}

TEST_CASE("refine_part") {
  const auto r = refine_part(constant_graphon(q(1, 2)), 0, q(1, 2));
  CHECK(r.part_count() == 2);
  CHECK(r.part(0) == q(1, 2));
  CHECK(r.part(1) == q(1, 2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(r.value(i, j) == q(1, 2));

  const auto w = testing::three_part();
  const auto r2 = refine_part(w, 1, q(1, 4));
  REQUIRE(r2.part_count() == 4);
  CHECK(r2.part(1) == q(1, 12));
  CHECK(r2.part(2) == q(1, 4));
  CHECK(r2.value(1, 2) == q(1));
  CHECK(r2.value(3, 2) == q(3, 4));
  CHECK(r2.value(0, 3) == q(0));

  CHECK(code_of([&] { refine_part(w, 0, q(0)); }) == Errc::BadFraction);
  CHECK(code_of([&] { refine_part(w, 0, q(1)); }) == Errc::BadFraction);
  CHECK(code_of([&] { refine_part(w, 3, q(1, 2)); }) == Errc::BadIndex);
}

TEST_CASE("refine_part preserves t(C4) on the two-block graphon") {
  const auto w = testing::two_block();
  const auto r = refine_part(w, 1, q(1, 3));
  CHECK(testing::oracle::hom_density(cycle(4), r) == testing::oracle::hom_density(cycle(4), w));
  CHECK(testing::oracle::hom_density(cycle(4), r) == mpq_class(1, 8));
}

TEST_CASE("permute_parts") {
  const auto w = testing::three_part();
  const std::array<std::size_t, 3> id{0, 1, 2};
  CHECK(permute_parts(w, id) == w);

  const std::array<std::size_t, 2> swap{1, 0};
  CHECK(permute_parts(testing::two_block(), swap) == testing::two_block());

  const std::array<std::size_t, 3> rot{2, 0, 1};
  const auto p = permute_parts(w, rot);
  CHECK(p.part(2) == w.part(0));
  CHECK(p.value(2, 0) == w.value(0, 1));
  for (const auto& f : testing::golden_templates()) {
    CHECK(testing::oracle::hom_density(f, p) == testing::oracle::hom_density(f, w));
  }

  const std::array<std::size_t, 3> bad{0, 0, 1};
  CHECK(code_of([&] { permute_parts(w, bad); }) == Errc::NotAPermutation);
  CHECK(code_of([&] { permute_parts(w, swap); }) == Errc::NotAPermutation);
}

TEST_CASE("is_constant") {
  CHECK(is_constant(constant_graphon(q(1, 3)), q(1, 3)));
  CHECK(is_constant(refine_part(constant_graphon(q(1, 3)), 0, q(1, 5)), q(1, 3)));
  CHECK_FALSE(is_constant(testing::two_block(), q(1, 2)));
  CHECK(is_constant(constant_graphon(Scalar(0.5 + 1e-13)), q(1, 2), 1e-10));
}
