#include "qpade/params.hpp"
#include "support.hpp"

using namespace qpade;
using qpade::test::R;
using qpade::test::throws_kind;

TEST_CASE("E6 third b parameter is solved from the constraint") {
  const auto p = ParamSet::with_degrees(Surface::E6, R(2, 7), {R(3), R(5, 2), R(7, 4)}, {R(11, 3), R(13, 5)}, 2, 1);
  CHECK(p.b().size() == 3);
  CHECK(p.a0() * p.a(1) * p.a(2) * p.a(3) == p.b0() * p.b(1) * p.b(2) * p.b(3));
  CHECK(p.a0() == R(4, 49));
  CHECK(p.b0() == R(2, 7));
  CHECK(p.shifted().a0() * p.shifted().a(1) * p.a(2) * p.a(3) ==
        p.shifted().b0() * p.shifted().b(1) * p.b(2) * p.b(3));
}

TEST_CASE("E6 constraint violation is rejected") {
  CHECK(throws_kind(
      [] {
        (void)ParamSet::with_free_a0b0(Surface::E6, R(2, 7), R(3), R(5), {R(3), R(5, 2), R(7, 4)},
                                       {R(11, 3), R(13, 5), R(2)});
      },
      ErrorKind::InvalidInput));
}

TEST_CASE("shape checks per surface") {
  CHECK(throws_kind([] { (void)ParamSet::with_degrees(Surface::D5, R(2, 7), {R(3)}, {R(5), R(7)}, 0, 0); },
                    ErrorKind::InvalidInput));
  CHECK(throws_kind([] { (void)ParamSet::with_degrees(Surface::A21, R(2, 7), {R(3), R(4)}, {R(5)}, 0, 0); },
                    ErrorKind::InvalidInput));
  CHECK(arity(Surface::A4).a == 2);
  CHECK(arity(Surface::A4).b == 1);
}

TEST_CASE("genericity guard names the violated condition") {
  const auto bad_q = ParamSet::with_degrees(Surface::D5, R(1), {R(3), R(4)}, {R(5), R(7)}, 0, 0);
  CHECK(bad_q.genericity_violation(8).has_value());
  CHECK(throws_kind([&] { bad_q.validate(8); }, ErrorKind::DegenerateParameters));
  const Rational q(2, 3);
  const auto collide = ParamSet::with_degrees(Surface::D5, q, {R(3), R(4)}, {R(3) * q.pow(2), R(7)}, 0, 0);
  REQUIRE(collide.genericity_violation(8).has_value());
  CHECK(collide.genericity_violation(8)->find("a1") != std::string::npos);
  CHECK(!collide.genericity_violation(1).has_value());
  const auto good = ParamSet::with_degrees(Surface::D5, q, {R(3), R(4)}, {R(5), R(7)}, 1, 2);
  CHECK(!good.genericity_violation(12).has_value());
}

TEST_CASE("key/value serialization round-trips bit-exactly") {
  ParamSampler s(17);
  for (Surface surf : kAllSurfaces) {
    const auto p = s.draw_params(surf, 2, 1, 12);
    const auto text = p.serialize();
    CHECK(ParamSet::parse(text) == p);
    CHECK(ParamSet::parse(text).serialize() == text);
    const auto f = s.draw_free_params(surf, 12);
    CHECK(ParamSet::parse(f.serialize()) == f);
    CHECK(ParamSet::parse_inline(f.inline_str()) == f);
    CHECK(ParamSet::parse_inline(p.inline_str()) == p);
  }
}

TEST_CASE("parse rejects inconsistent a0") {
  CHECK(throws_kind([] { (void)ParamSet::parse("surface = d5\nq = 2/3\na = 3, 4\nb = 5, 7\nm = 1\nn = 0\na0 = 5\n"); },
                    ErrorKind::InvalidInput));
}

TEST_CASE("sampler is deterministic and draws small coprime fractions") {
  ParamSampler a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const Rational x = a.draw();
    CHECK(x == b.draw());
    CHECK(x.numerator() >= 2);
    CHECK(x.numerator() <= 97);
    CHECK(x.denominator() >= 2);
    CHECK(x.denominator() <= 97);
  }
  CHECK(ParamSampler(5).draw_params(Surface::E6, 1, 2, 12) == ParamSampler(5).draw_params(Surface::E6, 1, 2, 12));
}

TEST_CASE("time shift") {
  const auto g = ParamSet::with_degrees(Surface::A21, R(2, 7), {R(3), R(4)}, {}, 0, 0).generating();
  CHECK(g.shifted().a[0] == R(6, 7));
  CHECK(g.shifted().a[1] == 4);
  CHECK(g.shifted().unshifted() == g);
  const auto d = ParamSet::with_degrees(Surface::D5, R(2, 7), {R(3), R(4)}, {R(5), R(6)}, 1, 1).generating();
  CHECK(d.shifted().b[0] == R(10, 7));
  CHECK(d.shifted().b[1] == 6);
}
