#include <catch2/catch_amalgamated.hpp>

#include <Eigen/SVD>

#include "fgn/fockrep.hpp"

using namespace fgn;
using Catch::Approx;

namespace {

const AlphabetSpec kG1 = AlphabetSpec::group_plain(1);
const AlphabetSpec kG2 = AlphabetSpec::group_plain(2);
const AlphabetSpec kM2 = AlphabetSpec::monoid_plain(2);

Word gword(std::vector<std::pair<int, int>> letters) {
  std::vector<Letter> ls;
  for (auto [i, s] : letters) ls.push_back({plain_gen(i), static_cast<std::int8_t>(s)});
  return Word::from_letters(Mode::group, ls);
}

Word mword(std::vector<int> letters) {
  std::vector<Letter> ls;
  for (int i : letters) ls.push_back({plain_gen(i), +1});
  return Word::from_letters(Mode::monoid, ls);
}

Poly random_homogeneous(std::mt19937_64& rng, int k, int deg) {
  AlphabetSpec spec = AlphabetSpec::monoid_plain(k);
  std::vector<Word> level{Word::identity(Mode::monoid)};
  for (int l = 0; l < deg; ++l) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (int g = 1; g <= k; ++g)
        next.push_back(concat(w, Word::single(Mode::monoid, plain_gen(g))));
    level = next;
  }
  Poly p = zero_poly(spec, 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (const Word& w : level)
    if (coin(rng)) add_term(p, w, complex_gaussian(rng));
  if (p.is_zero()) add_term(p, level.front(), complex_gaussian(rng));
  return p;
}

}  // namespace

TEST_CASE("ball counts", "[fockrep]") {
  CHECK(enumerate_ball(kM2, 2)->size() == 7);   // 1 + 2 + 4
  CHECK(enumerate_ball(kG2, 1)->size() == 5);   // e_0, a+-1, b+-1
  CHECK(enumerate_ball(AlphabetSpec::monoid_plain(3), 0)->size() == 1);
  CHECK(enumerate_ball(kG1, 3)->size() == 7);   // a^-3 .. a^3

  for (int k = 1; k <= 3; ++k)
    for (int L = 0; L <= 4; ++L) {
      CHECK(ball_count(AlphabetSpec::monoid_plain(k), L) ==
            enumerate_ball(AlphabetSpec::monoid_plain(k), L)->size());
      CHECK(ball_count(AlphabetSpec::group_plain(k), L) ==
            enumerate_ball(AlphabetSpec::group_plain(k), L)->size());
    }

  // closed forms
  CHECK(ball_count(AlphabetSpec::monoid_plain(2), 5) == (1 << 6) - 1);
  CHECK(ball_count(AlphabetSpec::group_plain(2), 3) == 1 + 4 * (27 - 1) / 2);

  CHECK_THROWS_AS(enumerate_ball(kG2, 20), BallCapError);
  CHECK_THROWS_AS(enumerate_ball(kG2, 8, 100), BallCapError);
}

TEST_CASE("ball enumeration order", "[fockrep]") {
  auto ball = enumerate_ball(AlphabetSpec::split(Mode::group, 1, 1), 3);
  REQUIRE(ball->words[0] == Word::identity(Mode::group));
  for (int i = 0; i + 1 < ball->size(); ++i)
    REQUIRE(compare(ball->words[i], ball->words[i + 1]) < 0);
  for (int i = 0; i < ball->size(); ++i)
    REQUIRE(ball->find(ball->words[i]) == i);
  CHECK(ball->find(gword({{1, 1}, {1, 1}, {1, 1}, {1, 1}})) == -1);
}

TEST_CASE("left translation is a partial isometry", "[fockrep]") {
  Poly e1 = scalar_term(kG2, gword({{1, 1}}), 1.0);
  TruncOp op = left_mult(e1, enumerate_ball(kG2, 3));
  CMatrix gram = CMatrix(op.mat.adjoint() * op.mat);
  CHECK((gram - CMatrix::Identity(gram.rows(), gram.cols())).norm() < 1e-14);

  Poly id = identity_poly(kG2);
  TruncOp opi = left_mult(id, enumerate_ball(kG2, 2));
  for (int c = 0; c < opi.domain->size(); ++c)
    CHECK(CMatrix(opi.mat).col(c)(c) == Complex(1.0));
}

TEST_CASE("k=1 line gives a bidiagonal-plus-identity pattern", "[fockrep]") {
  Poly p = add(identity_poly(kG1),
               add(scalar_term(kG1, gword({{1, 1}}), 1.0),
                   scalar_term(kG1, gword({{1, -1}}), 1.0)));
  const int L = 4;
  TruncOp op = left_mult(p, enumerate_ball(kG1, L));
  CMatrix dense(op.mat);
  // each column x = a^j hits rows a^{j-1}, a^j, a^{j+1} exactly once
  for (int c = 0; c < op.domain->size(); ++c) {
    const Word& x = op.domain->words[static_cast<std::size_t>(c)];
    int hits = 0;
    for (int r = 0; r < op.codomain->size(); ++r)
      if (dense(r, c) != Complex(0.0)) {
        ++hits;
        CHECK(dense(r, c) == Complex(1.0));
        int dr = op.codomain->words[static_cast<std::size_t>(r)].length() - x.length();
        CHECK(std::abs(dr) <= 1);
      }
    CHECK(hits == 3);
  }
}

TEST_CASE("operator columns mirror the polynomial action", "[fockrep]") {
  // column x carries exactly the blocks A_w at rows w*x, one per term
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto rng = make_rng(split_seed(0x7e, s));
    AlphabetSpec spec = s % 2 ? kG2 : kM2;
    std::uniform_int_distribution<int> gd(1, 2), ld(0, 3), sd(0, 1);
    Poly p = zero_poly(spec, 1);
    for (int t = 0; t < 3; ++t) {
      std::vector<Letter> ls;
      int l = ld(rng);
      for (int j = 0; j < l; ++j)
        ls.push_back({plain_gen(gd(rng)),
                      static_cast<std::int8_t>(spec.mode == Mode::group && sd(rng) ? -1 : 1)});
      add_term(p, Word::from_letters(spec.mode, ls), complex_gaussian(rng));
    }
    if (p.is_zero()) continue;
    TruncOp op = left_mult(p, enumerate_ball(spec, 2));
    CMatrix dense(op.mat);
    for (int c = 0; c < op.domain->size(); ++c) {
      const Word& x = op.domain->words[static_cast<std::size_t>(c)];
      std::map<Word, Complex> expected;
      for (const auto& [w, a] : p.terms) expected[concat(w, x)] += a(0, 0);
      int nonzeros = 0;
      for (int r = 0; r < op.codomain->size(); ++r) {
        Complex v = dense(r, c);
        if (v == Complex(0.0)) continue;
        ++nonzeros;
        const Word& y = op.codomain->words[static_cast<std::size_t>(r)];
        REQUIRE(expected.count(y) == 1);
        REQUIRE(std::abs(v - expected.at(y)) < 1e-15);
      }
      REQUIRE(nonzeros <= static_cast<int>(p.terms.size()));
    }
  }
}

TEST_CASE("norm of a single word is one at every radius", "[fockrep]") {
  for (int L : {0, 1, 2, 3}) {
    CHECK(norm_lower(scalar_term(kM2, mword({1}), 1.0), L).value ==
          Approx(1.0).margin(1e-12));
    CHECK(norm_lower(scalar_term(kG2, gword({{1, 1}, {2, -1}}), 1.0), L).value ==
          Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("homogeneous monoid polynomials are exact at every radius", "[fockrep]") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto rng = make_rng(split_seed(61, s));
    std::uniform_int_distribution<int> kd(1, 3), dd(0, 3);
    Poly p = random_homogeneous(rng, kd(rng), dd(rng));
    for (int L : {0, 1, 2}) {
      NormEstimate est = norm_lower(p, L);
      CHECK(est.kind == EstimateKind::exact);
      CHECK(est.value == Approx(l2_norm(p)).margin(1e-9));
    }
  }
}

TEST_CASE("group estimates converge from below: k=1 two-sided shift", "[fockrep]") {
  Poly p = add(scalar_term(kG1, gword({{1, 1}}), 1.0),
               scalar_term(kG1, gword({{1, -1}}), 1.0));

  // independent dense oracle at L = 200 on the k=1 line
  const int L = 200;
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(2 * (L + 1) + 1, 2 * L + 1);
  auto row_of = [L](int j) { return j + L + 1; };
  for (int j = -L; j <= L; ++j) {
    dense(row_of(j + 1), j + L) = 1.0;
    dense(row_of(j - 1), j + L) = 1.0;
  }
  double oracle = dense.bdcSvd().singularValues()(0);
  CHECK(oracle == Approx(2.0).margin(1e-3));

  NormEstimate est = norm_lower(p, L);
  CHECK(est.value <= oracle + 1e-9);
  CHECK(est.value == Approx(oracle).margin(1e-3));

  // monotone growth toward 2 at small radii
  double prev = 0.0;
  for (int l : {1, 4, 16, 64}) {
    double v = norm_lower(p, l).value;
    CHECK(v >= prev - 1e-9);
    CHECK(v <= 2.0 + 1e-9);
    prev = v;
  }
  CHECK(prev > 1.99);
}

TEST_CASE("estimates approach the known free norms from below", "[fockrep]") {
  // || sum_{i<=k} lambda(g_i) || = 2 sqrt(k-1); the self-adjoint variant
  // || sum (lambda(g_i) + lambda(g_i)^-1) || = 2 sqrt(2k-1)
  AlphabetSpec g2 = AlphabetSpec::group_plain(2);
  Poly sum2 = add(scalar_term(g2, gword({{1, 1}}), 1.0),
                  scalar_term(g2, gword({{2, 1}}), 1.0));
  double est2 = norm_lower(sum2, 8).value;
  CHECK(est2 <= 2.0 + 1e-9);
  CHECK(est2 > 1.95);

  AlphabetSpec g3 = AlphabetSpec::group_plain(3);
  Poly sum3 = zero_poly(g3, 1);
  for (int i = 1; i <= 3; ++i)
    add_term(sum3, Word::single(Mode::group, plain_gen(i)), 1.0);
  double est3 = norm_lower(sum3, 5).value;
  CHECK(est3 <= 2.0 * std::sqrt(2.0) + 1e-9);
  CHECK(est3 > 2.6);

  Poly kesten = zero_poly(g2, 1);
  for (int i = 1; i <= 2; ++i) {
    add_term(kesten, Word::single(Mode::group, plain_gen(i), +1), 1.0);
    add_term(kesten, Word::single(Mode::group, plain_gen(i), -1), 1.0);
  }
  double estk = norm_lower(kesten, 8).value;
  CHECK(estk <= 2.0 * std::sqrt(3.0) + 1e-9);
  CHECK(estk > 3.3);
}

TEST_CASE("monotone in radius and below the triangle bound", "[fockrep]") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto rng = make_rng(split_seed(71, s));
    std::uniform_int_distribution<int> terms(1, 4), len(0, 3), coin(0, 1);
    AlphabetSpec spec = coin(rng) ? kG2 : kM2;
    Poly p = zero_poly(spec, 1);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      std::vector<Letter> ls;
      int l = len(rng);
      std::uniform_int_distribution<int> gd(1, 2), sd(0, 1);
      for (int j = 0; j < l; ++j)
        ls.push_back({plain_gen(gd(rng)),
                      static_cast<std::int8_t>(spec.mode == Mode::group && sd(rng) ? -1 : 1)});
      add_term(p, Word::from_letters(spec.mode, ls), complex_gaussian(rng));
    }
    if (p.is_zero()) continue;
    double prev = 0.0;
    for (int L = 0; L <= 3; ++L) {
      NormEstimate est = norm_lower(p, L);
      CHECK(est.value >= prev - 1e-9);
      CHECK(est.value <= est.triangle + 1e-9);
      prev = est.value;
    }
  }
}

TEST_CASE("submultiplicative with domain padding", "[fockrep]") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto rng = make_rng(split_seed(83, s));
    std::uniform_int_distribution<int> gd(1, 2);
    auto rand_poly = [&](int terms, int len) {
      Poly p = zero_poly(kM2, 1);
      for (int i = 0; i < terms; ++i) {
        std::vector<Letter> ls;
        std::uniform_int_distribution<int> ld(0, len);
        int l = ld(rng);
        for (int j = 0; j < l; ++j) ls.push_back({plain_gen(gd(rng)), +1});
        add_term(p, Word::from_letters(Mode::monoid, ls), complex_gaussian(rng));
      }
      return p;
    };
    Poly p = rand_poly(3, 2), q = rand_poly(3, 2);
    if (p.is_zero() || q.is_zero()) continue;
    const int L = 2;
    double lhs = norm_lower(mul(p, q), L).value;
    double rhs = norm_lower(p, L + degree(q)).value * norm_lower(q, L).value;
    CHECK(lhs <= rhs + 1e-8);
  }
}

TEST_CASE("zero polynomial", "[fockrep]") {
  NormEstimate est = norm_lower(zero_poly(kM2, 1), 3);
  CHECK(est.value == 0.0);
  CHECK(est.kind == EstimateKind::exact);
  CHECK(est.converged);
}

TEST_CASE("matrix-level norms", "[fockrep]") {
  Poly i2e1 = matrix_term(kM2, mword({1}), CMatrix::Identity(2, 2));
  CHECK(norm_lower_matrix(i2e1, 2).value == Approx(1.0).margin(1e-10));

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  Poly de0 = matrix_term(kG2, Word::identity(Mode::group), d);
  CHECK(norm_lower_matrix(de0, 1).value == Approx(2.0).margin(1e-9));

  // homogeneous level-2: the norm is the column norm of the coefficients
  auto rng = make_rng(97);
  Poly t = zero_poly(kM2, 2);
  add_term(t, mword({1, 2}), gaussian_matrix(rng, 2, 2));
  add_term(t, mword({2, 1}), gaussian_matrix(rng, 2, 2));
  CMatrix g = CMatrix::Zero(2, 2);
  for (const auto& [w, a] : t.terms) g += a.adjoint() * a;
  double column = std::sqrt(lambda_max_psd(g));
  for (int L : {0, 1, 2})
    CHECK(norm_lower_matrix(t, L).value == Approx(column).margin(1e-9));
}

TEST_CASE("compression onto the positive cone", "[fockrep]") {
  Poly e1 = scalar_term(kG2, gword({{1, 1}}), 1.0);
  CHECK(compression_norm(e1, 3).value == Approx(1.0).margin(1e-10));
  CHECK(norm_lower(scalar_term(kM2, mword({1}), 1.0), 3).value ==
        Approx(1.0).margin(1e-10));

  // (1 + g1) g2: compressed norm sqrt(2), group norm approaches 2
  Poly p = mul(add(identity_poly(kG2), scalar_term(kG2, gword({{1, 1}}), 1.0)),
               scalar_term(kG2, gword({{2, 1}}), 1.0));
  NormEstimate comp = compression_norm(p, 5);
  CHECK(comp.value == Approx(std::sqrt(2.0)).margin(1e-8));
  CHECK(comp.kind == EstimateKind::exact);
  double grp = norm_lower(p, 8).value;
  CHECK(grp > 1.9);
  CHECK(comp.value < grp);

  // cross-check against the monoid reinterpretation on random positive polys
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto rng = make_rng(split_seed(101, s));
    std::uniform_int_distribution<int> gd(1, 2), ld(0, 3), td(1, 4);
    Poly gp = zero_poly(kG2, 1);
    Poly mp = zero_poly(kM2, 1);
    int t = td(rng);
    for (int i = 0; i < t; ++i) {
      std::vector<Letter> ls;
      int l = ld(rng);
      for (int j = 0; j < l; ++j) ls.push_back({plain_gen(gd(rng)), +1});
      Complex c = complex_gaussian(rng);
      add_term(gp, Word::from_letters(Mode::group, ls), c);
      add_term(mp, Word::from_letters(Mode::monoid, ls), c);
    }
    CHECK(compression_norm(gp, 3).value == Approx(norm_lower(mp, 3).value).margin(1e-8));
  }

  CHECK_THROWS_AS(compression_norm(scalar_term(kG2, gword({{1, -1}}), 1.0), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(compression_norm(scalar_term(kM2, mword({1}), 1.0), 2),
                  std::invalid_argument);

  // homogeneous positive polynomials: both readings equal the l2 norm
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto rng = make_rng(split_seed(0x1c, s));
    Poly hp = zero_poly(kG2, 1);
    std::uniform_int_distribution<int> gd(1, 2);
    for (int t = 0; t < 3; ++t)
      add_term(hp, gword({{gd(rng), 1}, {gd(rng), 1}}), complex_gaussian(rng));
    if (hp.is_zero()) continue;
    NormEstimate ce = compression_norm(hp, 2);
    CHECK(ce.kind == EstimateKind::exact);
    CHECK(ce.value == Approx(l2_norm(hp)).margin(1e-9));
  }
}

TEST_CASE("subdomain restriction never exceeds the full estimate", "[fockrep]") {
  AlphabetSpec mixed = AlphabetSpec::split(Mode::group, 2, 2);
  auto rng = make_rng(113);
  Poly p = zero_poly(mixed, 1);
  auto gens = mixed.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> ld(0, 2), sd(0, 1);
  for (int i = 0; i < 4; ++i) {
    std::vector<Letter> ls;
    int l = ld(rng);
    for (int j = 0; j < l; ++j)
      ls.push_back({gens[pick(rng)], static_cast<std::int8_t>(sd(rng) ? -1 : 1)});
    add_term(p, Word::from_letters(Mode::group, ls), complex_gaussian(rng));
  }
  auto alpha_only = [](const Word& w) {
    for (const Letter& l : w.letters())
      if (l.gen.tag != Tag::alpha) return false;
    return true;
  };
  double sub = norm_lower_subdomain(p, 3, alpha_only).value;
  double full = norm_lower(p, 3).value;
  CHECK(sub <= full + 1e-8);
}
