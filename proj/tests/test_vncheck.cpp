#include <catch2/catch_amalgamated.hpp>

#include "fgn/vncheck.hpp"

using namespace fgn;
using Catch::Approx;

namespace {

Word mword(std::vector<int> letters) {
  std::vector<Letter> ls;
  for (int i : letters) ls.push_back({plain_gen(i), +1});
  return Word::from_letters(Mode::monoid, ls);
}

}  // namespace

TEST_CASE("row contraction sampling", "[vncheck]") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    RowTuple strict = sample_row_contraction(3, 4, split_seed(5, s), SampleMode::strict);
    CHECK(strict.certificate < 1.0);
    RowTuple bdry = sample_row_contraction(3, 4, split_seed(5, s), SampleMode::boundary);
    CHECK(bdry.certificate == Approx(1.0).margin(1e-12));
  }

  // k = 1 boundary: a single contraction of norm one
  RowTuple one = sample_row_contraction(1, 5, 42, SampleMode::boundary);
  CHECK(spectral_norm(one.ops[0]) == Approx(1.0).margin(1e-12));

  // determinism: same seed reproduces bitwise-identical tuples
  RowTuple a = sample_row_contraction(2, 4, 99, SampleMode::strict);
  RowTuple b = sample_row_contraction(2, 4, 99, SampleMode::strict);
  for (int i = 0; i < 2; ++i) REQUIRE(a.ops[static_cast<std::size_t>(i)] == b.ops[static_cast<std::size_t>(i)]);
  RowTuple c = sample_row_contraction(2, 4, 100, SampleMode::strict);
  CHECK(a.ops[0] != c.ops[0]);

  CHECK_THROWS_AS(sample_row_contraction(0, 4, 1), std::invalid_argument);
}

TEST_CASE("circle l2 values", "[vncheck]") {
  CHECK(circle_l2({1.0, 1.0}) == Approx(std::sqrt(2.0)));
  CHECK(circle_l2({0.0, 0.0, 0.0, 1.0}) == Approx(1.0));
  CHECK(circle_l2({1.0, 2.0, 2.0}) == Approx(3.0));
}

TEST_CASE("bound selection", "[vncheck]") {
  AlphabetSpec m2 = AlphabetSpec::monoid_plain(2);

  Poly homog = scalar_term(m2, mword({1, 2}), 1.0);
  auto [hk, hv] = select_vn_bound(homog);
  CHECK(hk == BoundKind::homogeneous_l2);
  CHECK(hv == Approx(1.0));

  // (1 + e_1) e_2 = e_2 + e_1 e_2: circle form with coefficients {1, 1}
  Poly circle = add(scalar_term(m2, mword({2}), 1.0), scalar_term(m2, mword({1, 2}), 1.0));
  auto [ck, cv] = select_vn_bound(circle);
  CHECK(ck == BoundKind::circle_l2);
  CHECK(cv == Approx(std::sqrt(2.0)));

  // general polynomial falls back to the homogeneous-part triangle sum
  Poly gen = add(add(identity_poly(m2), scalar_term(m2, mword({1}), 1.0)),
                 scalar_term(m2, mword({2, 2}), 2.0));
  auto [gk, gv] = select_vn_bound(gen);
  CHECK(gk == BoundKind::triangle);
  CHECK(gv == Approx(1.0 + 1.0 + 2.0));

  // the homogeneous rule wins over the circle form
  CHECK(select_vn_bound(scalar_term(m2, mword({1, 2}), 1.0)).first ==
        BoundKind::homogeneous_l2);
}

TEST_CASE("inequality holds for homogeneous polynomials", "[vncheck]") {
  AlphabetSpec m2 = AlphabetSpec::monoid_plain(2);
  Poly p = scalar_term(m2, mword({1, 2}), 1.0);
  VnReport rep = vn_verify(p, 2, 4, 25, 7, SampleMode::boundary);
  CHECK(rep.pass);
  CHECK(rep.bound == Approx(1.0));
  for (const VnTrial& t : rep.trials) CHECK(t.value <= 1.0 + 1e-10);
}

TEST_CASE("inequality holds for the analytic product form", "[vncheck]") {
  AlphabetSpec m2 = AlphabetSpec::monoid_plain(2);
  Poly p = add(scalar_term(m2, mword({2}), 1.0), scalar_term(m2, mword({1, 2}), 1.0));
  for (SampleMode mode : {SampleMode::strict, SampleMode::boundary}) {
    VnReport rep = vn_verify(p, 2, 4, 25, 11, mode);
    CHECK(rep.pass);
    CHECK(rep.bound == Approx(std::sqrt(2.0)));
    CHECK(rep.bound_kind == BoundKind::circle_l2);
  }
}

TEST_CASE("identity polynomial is tight", "[vncheck]") {
  AlphabetSpec m1 = AlphabetSpec::monoid_plain(1);
  VnReport rep = vn_verify(identity_poly(m1), 1, 3, 5, 3, SampleMode::boundary);
  CHECK(rep.pass);
  CHECK(rep.bound == Approx(1.0));
  for (const VnTrial& t : rep.trials) CHECK(t.value == Approx(1.0).margin(1e-12));
}

TEST_CASE("k = 1 reduces to the classical inequality", "[vncheck]") {
  AlphabetSpec m1 = AlphabetSpec::monoid_plain(1);
  // general polynomial: bound collapses to the coefficient l1 norm
  Poly q = add(add(identity_poly(m1), scalar_term(m1, mword({1}), Complex(0.0, 2.0))),
               scalar_term(m1, mword({1, 1}), -0.5));
  auto [kind, bound] = select_vn_bound(q);
  CHECK(kind == BoundKind::triangle);
  CHECK(bound == Approx(1.0 + 2.0 + 0.5));
  VnReport rep = vn_verify(q, 1, 6, 50, 17, SampleMode::boundary);
  CHECK(rep.pass);

  // homogeneous monomial a t^n: bound |a|
  Poly mono = scalar_term(m1, mword({1, 1, 1}), Complex(0.0, -2.0));
  VnReport mrep = vn_verify(mono, 1, 6, 50, 19, SampleMode::boundary);
  CHECK(mrep.bound == Approx(2.0));
  CHECK(mrep.pass);
}

TEST_CASE("near-extremal tuples for e_1 + e_2 (reported)", "[vncheck]") {
  AlphabetSpec m2 = AlphabetSpec::monoid_plain(2);
  Poly p = add(scalar_term(m2, mword({1}), 1.0), scalar_term(m2, mword({2}), 1.0));
  VnReport rep = vn_verify(p, 2, 4, 50, 23, SampleMode::boundary);
  CHECK(rep.pass);
  WARN("max ||p(T)|| over 50 boundary tuples at d=4: "
       << rep.max_value << " of bound sqrt(2) = " << rep.bound
       << " (ratio " << rep.max_value / rep.bound << ")");
}

TEST_CASE("right multiplication by a fresh generator is isometric", "[vncheck]") {
  AlphabetSpec m2 = AlphabetSpec::monoid_plain(2);
  Poly p = add(identity_poly(m2), scalar_term(m2, mword({1}), 1.0));
  Prop17Report rep = prop17_check(p, 2, 3);
  CHECK(rep.pass);
  CHECK(rep.l2 == Approx(std::sqrt(2.0)));
  for (const Prop17Point& pt : rep.points)
    CHECK(pt.estimate == Approx(std::sqrt(2.0)).margin(1e-8));

  Prop17Report id = prop17_check(identity_poly(m2), 2, 2);
  CHECK(id.pass);
  CHECK(id.l2 == Approx(1.0));

  for (std::uint64_t s = 0; s < 20; ++s) {
    auto rng = make_rng(split_seed(0x17, s));
    Poly r = zero_poly(m2, 1);
    std::uniform_int_distribution<int> ld(0, 3), td(1, 4);
    int nt = td(rng);
    for (int i = 0; i < nt; ++i) {
      std::vector<Letter> ls;
      int l = ld(rng);
      for (int j = 0; j < l; ++j) ls.push_back({plain_gen(1), +1});
      add_term(r, Word::from_letters(Mode::monoid, ls), complex_gaussian(rng));
    }
    if (r.is_zero()) continue;
    REQUIRE(prop17_check(r, 2, 2).pass);
  }

  CHECK_THROWS_AS(prop17_check(scalar_term(m2, mword({2}), 1.0), 2, 2),
                  std::invalid_argument);
}
