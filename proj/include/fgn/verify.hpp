#pragma once

// Property suites for every quantitative statement the library verifies, one
// per proposition, each producing a deterministic machine-readable Report.
// Norm comparisons are one-sided: certified lower bounds on the left against
// triangle bounds (or exact coefficient quantities) on the right, so a failed
// assertion means a bug, never truncation error.

#include <tuple>
#include <unordered_map>

#include "fgn/parser.hpp"
#include "fgn/report.hpp"
#include "fgn/sampling.hpp"
#include "fgn/vncheck.hpp"

namespace fgn::verify {

namespace detail {

// Aggregates "lhs <= rhs + tol" style checks across seeded instances.
struct Worst {
  double max_violation = -HUGE_VAL;  // max over instances of lhs - rhs
  std::uint64_t worst_instance = 0;
  int failures = 0;
  int count = 0;

  void update(double violation, std::uint64_t instance, double tol) {
    ++count;
    if (violation > max_violation) {
      max_violation = violation;
      worst_instance = instance;
    }
    if (violation > tol) ++failures;
  }

  Assertion to_assertion(const std::string& name, const std::string& proposition,
                         double tol) const {
    Assertion a;
    a.name = name;
    a.proposition = proposition;
    a.pass = failures == 0;
    a.lhs = count > 0 ? max_violation : 0.0;
    a.rhs = 0.0;
    a.tolerance = tol;
    a.detail = Json{{"instances", count},
                    {"failures", failures},
                    {"worst_instance", worst_instance}};
    return a;
  }
};

inline PowerOptions quiet_opts(std::uint64_t seed) {
  PowerOptions o;
  o.seed = seed;
  o.record_trace = false;
  return o;
}

// For assertions that compare two independently iterated values within a few
// times 1e-8, the default stopping rule leaves too much slack; these checks
// iterate tighter.
inline PowerOptions tight_opts(std::uint64_t seed, double tol = 1e-12,
                               int max_iterations = 20000) {
  PowerOptions o;
  o.seed = seed;
  o.record_trace = false;
  o.tol = tol;
  o.max_iterations = max_iterations;
  return o;
}

}  // namespace detail

// ---- Lemma 7: orthogonality of the e_x P_{-i} e_{-i} e_z vectors -----------

inline Report lemma7_suite(std::uint64_t seed = 1) {
  Report rep;
  rep.command = "verify";
  rep.suite = "lemma7";
  rep.proposition = "Lemma 7";
  rep.inputs = Json{{"seed", seed}, {"alpha_count", 2}, {"e_count", 2},
                    {"max_x_len", 3}, {"max_z_len", 3}};

  auto xs = enumerate_ball(AlphabetSpec::split(Mode::group, 2, 0), 3);
  auto zs = enumerate_ball(AlphabetSpec::split(Mode::group, 2, 2), 3);
  std::unordered_map<Word, std::tuple<int, int, int>, WordHash> seen;
  long nonzero = 0, zero = 0;
  int collisions = 0, vanish_mismatches = 0;
  for (int xi = 0; xi < xs->size(); ++xi)
    for (int i = 1; i <= 2; ++i)
      for (int zi = 0; zi < zs->size(); ++zi) {
        const Word& x = xs->words[static_cast<std::size_t>(xi)];
        const Word& z = zs->words[static_cast<std::size_t>(zi)];
        auto r = lemma7_action(x, i, z);
        bool starts_pos = !z.empty() && z.front() == Letter{e_gen(i), +1};
        if (r.has_value() == starts_pos) ++vanish_mismatches;
        if (!r) {
          ++zero;
          continue;
        }
        ++nonzero;
        auto [it, fresh] = seen.try_emplace(*r, xi, i, zi);
        if (!fresh && it->second != std::make_tuple(xi, i, zi)) ++collisions;
      }

  Assertion inj;
  inj.name = "nonzero vectors determine (x, i, z) uniquely";
  inj.proposition = "Lemma 7";
  inj.pass = collisions == 0;
  inj.lhs = collisions;
  inj.rhs = 0.0;
  rep.assertions.push_back(inj);

  Assertion van;
  van.name = "vanishes exactly when z starts with a positive power of e_i";
  van.proposition = "Lemma 7";
  van.pass = vanish_mismatches == 0;
  van.lhs = vanish_mismatches;
  van.rhs = 0.0;
  rep.assertions.push_back(van);

  rep.outputs = Json{{"tuples", nonzero + zero}, {"nonzero", nonzero}, {"zero", zero}};
  return rep;
}

// ---- Lemma 15: collision-free products multiply l2 norms -------------------

inline Report lemma15_suite(std::uint64_t seed = 1, int trials = 50) {
  Report rep;
  rep.command = "verify";
  rep.suite = "lemma15";
  rep.proposition = "Lemma 15";
  rep.inputs = Json{{"seed", seed}, {"trials", trials}, {"k", 2}, {"max_len", 4}};

  // exhaustive: within a fixed left length, (x, y) -> x y is injective
  auto ball = enumerate_ball(AlphabetSpec::monoid_plain(2), 4);
  int collisions = 0;
  long pairs = 0;
  {
    std::unordered_map<Word, std::pair<int, int>, WordHash> seen;
    for (int len = 0; len <= 4; ++len) {
      seen.clear();
      for (int i = 0; i < ball->size(); ++i) {
        if (ball->words[static_cast<std::size_t>(i)].length() != len) continue;
        for (int j = 0; j < ball->size(); ++j) {
          ++pairs;
          Word xy = concat(ball->words[static_cast<std::size_t>(i)],
                           ball->words[static_cast<std::size_t>(j)]);
          auto [it, fresh] = seen.try_emplace(xy, i, j);
          if (!fresh && it->second != std::make_pair(i, j)) ++collisions;
        }
      }
    }
  }
  Assertion inj;
  inj.name = "products x*y with |x| fixed are pairwise distinct";
  inj.proposition = "Lemma 15";
  inj.pass = collisions == 0;
  inj.lhs = collisions;
  inj.rhs = 0.0;
  rep.assertions.push_back(inj);

  // seeded polynomial identity ||pq||_2 = ||p||_2 ||q||_2
  detail::Worst ident;
  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> deg(0, 4);
    Poly p = random_homogeneous(rng, 2, deg(rng));
    Poly q = random_poly(rng, AlphabetSpec::monoid_plain(2), 1, 6, 4);
    double lhs = l2_norm(mul(p, q));
    double rhs = l2_norm(p) * l2_norm(q);
    ident.update(std::abs(lhs - rhs), static_cast<std::uint64_t>(t), 1e-12);
  }
  rep.assertions.push_back(
      ident.to_assertion("||pq||_2 = ||p||_2 ||q||_2 for homogeneous p",
                         "Lemma 15", 1e-12));

  // matrix-level remark: ||Tq||_2^2 = sum_{ij} ||A_i b_j||_2^2
  detail::Worst matrix;
  for (int t = 0; t < 20; ++t) {
    auto rng = make_rng(split_seed(seed ^ 0xabcd, static_cast<std::uint64_t>(t)));
    const int n = 2;
    Poly big = random_homogeneous(rng, 2, 2, n);
    std::map<Word, CVector> q;  // distinct words: the no-cancellation hypothesis
    q.emplace(Word::identity(Mode::monoid), gaussian_vector(rng, n));
    q.emplace(Word::single(Mode::monoid, plain_gen(1)), gaussian_vector(rng, n));
    q.emplace(random_word(rng, AlphabetSpec::monoid_plain(2), 3), gaussian_vector(rng, n));
    std::unordered_map<Word, CVector, WordHash> tq;
    double direct = 0.0;
    for (const auto& [x, a] : big.terms)
      for (const auto& [y, b] : q) {
        Word xy = concat(x, y);
        auto [it, fresh] = tq.try_emplace(xy, CVector(CVector::Zero(n)));
        it->second += a * b;
        direct += (a * b).squaredNorm();
      }
    double assembled = 0.0;
    for (const auto& [w, v] : tq) assembled += v.squaredNorm();
    matrix.update(std::abs(std::sqrt(assembled) - std::sqrt(direct)),
                  static_cast<std::uint64_t>(t), 1e-12);
  }
  rep.assertions.push_back(matrix.to_assertion(
      "matrix level: ||Tq||_2 = sqrt(sum ||A_i b_j||_2^2)", "Lemma 15 Remark", 1e-12));

  rep.outputs = Json{{"exhaustive_pairs", pairs}};
  return rep;
}

// ---- Generic projection-bound runner ----------------------------------------

namespace detail {

struct ProjectionDiagnostics {
  double max_sharp_ratio = 0.0;
  int radius_converged = 0;
  double max_radius_margin = 0.0;
};

template <typename MakePoly>
Worst projection_bound_worst(std::uint64_t seed, int instances, int max_level,
                             int radius, const SubsetPredicate& pred, double constant,
                             MakePoly make_poly, ProjectionDiagnostics& diag) {
  Worst worst;
  for (int i = 0; i < instances; ++i) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    int level = 1 + i % max_level;
    Poly p = make_poly(rng, level);
    ProjectionBound pb = check_projection_bound(
        p, pred, constant, radius, 1e-8,
        quiet_opts(split_seed(seed ^ 0x9d2c, static_cast<std::uint64_t>(i))));
    worst.update(pb.proj_estimate.value - constant * pb.triangle_upper,
                 static_cast<std::uint64_t>(i), 1e-8);
    diag.max_sharp_ratio = std::max(diag.max_sharp_ratio, pb.sharp_ratio);
    diag.max_radius_margin = std::max(diag.max_radius_margin, pb.radius_margin);
    if (pb.radius_converged) ++diag.radius_converged;
  }
  return worst;
}

inline Json projection_outputs(const ProjectionDiagnostics& diag) {
  return Json{{"max_sharp_ratio", diag.max_sharp_ratio},
              {"radius_converged_instances", diag.radius_converged},
              {"max_radius_margin", diag.max_radius_margin}};
}

}  // namespace detail

// ---- Prop 1: subgroup embedding and contractive projection ------------------

inline Report prop1_suite(std::uint64_t seed = 1, int instances = 100,
                          int max_level = 2, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop1";
  rep.proposition = "Prop 1";
  rep.inputs = Json{{"seed", seed}, {"instances", instances},
                    {"max_level", max_level}, {"radius", radius},
                    {"ambient", "F_3"}, {"subgroup", "F_2"}};

  AlphabetSpec ambient = AlphabetSpec::group_plain(3);
  detail::ProjectionDiagnostics diag;
  detail::Worst worst = detail::projection_bound_worst(
      seed, instances, max_level, radius, SubsetPredicate::subgroup_first_n(2), 1.0,
      [&](std::mt19937_64& rng, int level) {
        return random_poly(rng, ambient, level, 4, 3);
      },
      diag);
  rep.assertions.push_back(worst.to_assertion(
      "lower(project(p)) <= triangle(p): orthogonal projection is contractive",
      "Prop 1", 1e-8));

  // spot example: projecting e_a + e_b onto <a> leaves e_a of norm one
  Poly p = parse_poly("a + b", Mode::group, 2);
  Poly proj = project(p, SubsetPredicate::subgroup_first_n(1));
  NormEstimate est = norm_lower(proj, radius, detail::quiet_opts(seed));
  Assertion spot;
  spot.name = "project(e_a + e_b, <a>) = e_a has norm one below ||p||";
  spot.proposition = "Prop 1";
  spot.lhs = est.value;
  spot.rhs = 1.0;
  spot.tolerance = 1e-9;
  spot.pass = std::abs(est.value - 1.0) <= 1e-9 &&
              est.value <= triangle_bound(p) + 1e-9 && proj.terms.size() == 1;
  rep.assertions.push_back(spot);

  // embedding diagnostics: F_infinity into F_2 via a^i b a^-i (short words;
  // embedding multiplies lengths by up to five)
  auto rng = make_rng(seed);
  Poly q = random_poly(rng, AlphabetSpec::group_plain(2), 1, 3, 1);
  Poly qe = zero_poly(AlphabetSpec::group_plain(2), 1);
  for (const auto& [w, a] : q.terms) add_term(qe, embed_word(w), a);
  rep.outputs = detail::projection_outputs(diag);
  rep.outputs["embedded_estimate"] =
      estimate_json(norm_lower(qe, 4, detail::quiet_opts(seed)));
  rep.outputs["source_estimate"] =
      estimate_json(norm_lower(q, 2, detail::quiet_opts(seed)));
  return rep;
}

// ---- Prop 4: the K-set is 2-complemented ------------------------------------

inline Report prop4_suite(std::uint64_t seed = 1, int instances = 100,
                          int max_level = 2, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop4";
  rep.proposition = "Prop 4";
  rep.inputs = Json{{"seed", seed}, {"instances", instances},
                    {"max_level", max_level}, {"radius", radius},
                    {"kset_j_min", 0}, {"alpha_count", 2}, {"e_count", 2}};

  AlphabetSpec ambient = AlphabetSpec::split(Mode::group, 2, 2);
  detail::ProjectionDiagnostics diag;
  detail::Worst worst = detail::projection_bound_worst(
      seed, instances, max_level, radius, SubsetPredicate::kset(0), 2.0,
      [&](std::mt19937_64& rng, int level) {
        return random_poly(rng, ambient, level, 4, 3);
      },
      diag);
  rep.assertions.push_back(worst.to_assertion(
      "lower(project_K(p)) <= 2 triangle(p): K-set projection is 2-bounded",
      "Prop 4", 1e-8));
  rep.outputs = detail::projection_outputs(diag);
  return rep;
}

// ---- Prop 8: sandwich bounds -------------------------------------------------

inline Report prop8_suite(std::uint64_t seed = 1, int instances = 100, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop8";
  rep.proposition = "Prop 8";
  rep.inputs = Json{{"seed", seed}, {"instances", instances}, {"radius", radius},
                    {"alpha_count", 2}, {"e_count", 2}, {"max_word_len", 2}};

  detail::Worst order, low, high;
  double min_low_slack = HUGE_VAL, min_high_slack = HUGE_VAL;
  for (int i = 0; i < instances; ++i) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    int level = 1 + i % 2;
    Prop8Element t = random_prop8_element(rng, level, 2, 2, 2);
    SandwichBounds b = prop8_bounds(
        t, radius, detail::quiet_opts(split_seed(seed ^ 0x88, static_cast<std::uint64_t>(i))));
    order.update(b.lower - b.upper, static_cast<std::uint64_t>(i), 0.0);
    low.update(b.lower - b.estimate.value, static_cast<std::uint64_t>(i), 1e-8);
    high.update(b.estimate.value - b.upper, static_cast<std::uint64_t>(i), 1e-8);
    min_low_slack = std::min(min_low_slack, b.estimate.value - b.lower);
    min_high_slack = std::min(min_high_slack, b.upper - b.estimate.value);
  }
  rep.assertions.push_back(
      order.to_assertion("max(col, row) <= col + row", "Prop 8", 0.0));
  rep.assertions.push_back(low.to_assertion(
      "estimate >= max(col, row) - tol", "Prop 8", 1e-8));
  rep.assertions.push_back(high.to_assertion(
      "estimate <= col + row + tol", "Prop 8", 1e-8));
  rep.outputs = Json{{"min_slack_above_max", min_low_slack},
                     {"min_slack_below_sum", min_high_slack}};
  return rep;
}

// ---- Prop 9: the intersection norm is 2-equivalent ---------------------------

inline Report prop9_suite(std::uint64_t seed = 1, int instances = 100, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop9";
  rep.proposition = "Prop 9";
  rep.inputs = Json{{"seed", seed}, {"instances", instances}, {"radius", radius},
                    {"alpha_count", 2}, {"e_count", 2}};

  detail::Worst lower_ratio, upper_ratio;
  double min_ratio = HUGE_VAL, max_ratio = 0.0;
  for (int i = 0; i < instances; ++i) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    int level = 1 + i % 2;
    Prop8Element t = random_prop8_element(rng, level, 2, 2, 2);
    IntersectionNorm in = intersection_norm(
        t, radius, detail::quiet_opts(split_seed(seed ^ 0x99, static_cast<std::uint64_t>(i))));
    lower_ratio.update((1.0 - 1e-6) - in.ratio, static_cast<std::uint64_t>(i), 0.0);
    upper_ratio.update(in.ratio - (2.0 + 1e-6), static_cast<std::uint64_t>(i), 0.0);
    min_ratio = std::min(min_ratio, in.ratio);
    max_ratio = std::max(max_ratio, in.ratio);
  }
  rep.assertions.push_back(lower_ratio.to_assertion(
      "estimate / max(col, row) >= 1 - 1e-6", "Prop 9", 0.0));
  rep.assertions.push_back(upper_ratio.to_assertion(
      "estimate / max(col, row) <= 2 + 1e-6", "Prop 9", 0.0));

  // one alpha word per generator: both terms reduce to the coefficient gram
  detail::Worst eq;
  for (int i = 0; i < 10; ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x9b, static_cast<std::uint64_t>(i)));
    Prop8Element t;
    t.level = 1;
    t.alpha_count = 2;
    t.e_count = 2;
    for (int g = 1; g <= 2; ++g) {
      Poly a = zero_poly(AlphabetSpec::split(Mode::group, 2, 0), 1);
      add_term(a, random_word(rng, AlphabetSpec::split(Mode::group, 2, 0), 2),
               complex_gaussian(rng));
      t.parts.emplace_back(g, a);
    }
    IntersectionNorm in = intersection_norm(
        t, radius, detail::quiet_opts(split_seed(seed ^ 0x9c, static_cast<std::uint64_t>(i))));
    eq.update(std::abs(in.col_term - in.row_term), static_cast<std::uint64_t>(i), 1e-9);
  }
  rep.assertions.push_back(eq.to_assertion(
      "single-word parts: col term equals row term", "Prop 9", 1e-9));
  rep.outputs = Json{{"min_ratio", min_ratio}, {"max_ratio", max_ratio}};
  return rep;
}

// ---- Prop 12: A(n) inside A(m) -----------------------------------------------

inline Report prop12_suite(std::uint64_t seed = 1, int instances = 100,
                           int max_level = 2, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop12";
  rep.proposition = "Prop 12";
  rep.inputs = Json{{"seed", seed}, {"instances", instances},
                    {"max_level", max_level}, {"radius", radius},
                    {"n", 2}, {"m", 3}};

  // exhaustive partition of P_3 over P_2
  auto ball = enumerate_ball(AlphabetSpec::monoid_plain(3), 6);
  int partition_failures = 0;
  for (const Word& w : ball->words) {
    auto f = factor(w, SubmonoidSplit::first_n(2));
    if (!f || concat(f->first, f->second) != w ||
        !classify(f->first, SubsetPredicate::subgroup_first_n(2)) ||
        !classify(f->second, SubsetPredicate::eset_first_n(2)))
      ++partition_failures;
  }
  Assertion part;
  part.name = "{P_n y : y in E} partitions P_m (exhaustive, length <= 6)";
  part.proposition = "Prop 12";
  part.pass = partition_failures == 0;
  part.lhs = partition_failures;
  part.rhs = 0.0;
  rep.assertions.push_back(part);

  // formal identity is isometric: the truncation over P_m attains exactly the
  // truncation over P_n (up to power-iteration tolerance)
  detail::Worst iso;
  for (int i = 0; i < std::min(instances, 20); ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x12a, static_cast<std::uint64_t>(i)));
    Poly p2 = random_poly(rng, AlphabetSpec::monoid_plain(2), 1, 4, 3);
    Poly p3 = zero_poly(AlphabetSpec::monoid_plain(3), 1);
    for (const auto& [w, a] : p2.terms) add_term(p3, w, a);
    double e2 = norm_lower(p2, radius,
                           detail::tight_opts(split_seed(seed ^ 0x12b,
                                                         static_cast<std::uint64_t>(i))))
                    .value;
    double e3 = norm_lower(p3, radius,
                           detail::tight_opts(split_seed(seed ^ 0x12c,
                                                         static_cast<std::uint64_t>(i))))
                    .value;
    iso.update(std::abs(e2 - e3), static_cast<std::uint64_t>(i), 1e-6);
  }
  rep.assertions.push_back(iso.to_assertion(
      "norming over P_m equals norming over P_n at every radius", "Prop 12", 1e-6));

  AlphabetSpec ambient = AlphabetSpec::monoid_plain(3);
  detail::ProjectionDiagnostics diag;
  detail::Worst worst = detail::projection_bound_worst(
      seed, instances, max_level, radius, SubsetPredicate::subgroup_first_n(2), 1.0,
      [&](std::mt19937_64& rng, int level) {
        return random_poly(rng, ambient, level, 4, 3);
      },
      diag);
  rep.assertions.push_back(worst.to_assertion(
      "lower(project(p)) <= triangle(p): projection onto A(n) is contractive",
      "Prop 12", 1e-8));
  rep.outputs = detail::projection_outputs(diag);
  rep.outputs["partition_words"] = ball->size();
  return rep;
}

// ---- Prop 13: A(infinity) inside A(2) -----------------------------------------

inline Report prop13_suite(std::uint64_t seed = 1, int instances = 100, int radius = 4) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop13";
  rep.proposition = "Prop 13";
  rep.inputs = Json{{"seed", seed}, {"instances", instances}, {"radius", radius}};

  // exhaustive partition of P_2 over the block submonoid
  auto ball = enumerate_ball(AlphabetSpec::monoid_plain(2), 6);
  int partition_failures = 0;
  for (const Word& w : ball->words) {
    auto f = factor(w, SubmonoidSplit::ablocks());
    if (!f || concat(f->first, f->second) != w ||
        !classify(f->first, SubsetPredicate::submonoid_ablocks()) ||
        !classify(f->second, SubsetPredicate::eset_ablocks()))
      ++partition_failures;
  }
  Assertion part;
  part.name = "{P_alpha y : y in E} partitions P_2 (exhaustive, length <= 6)";
  part.proposition = "Prop 13";
  part.pass = partition_failures == 0;
  part.lhs = partition_failures;
  part.rhs = 0.0;
  rep.assertions.push_back(part);

  // the embedded copy is normed no lower: est(embed p, 3 L' + deg) >= est(p, L')
  detail::Worst embed_low, embed_high;
  for (int i = 0; i < 5; ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x13a, static_cast<std::uint64_t>(i)));
    Poly p = random_poly(rng, AlphabetSpec::monoid_plain(2), 1, 3, 2);
    Poly pe = zero_poly(AlphabetSpec::monoid_plain(2), 1);
    for (const auto& [w, a] : p.terms) add_term(pe, embed_word(w), a);
    const int inner_radius = 1;
    int embed_radius = 3 * inner_radius + degree(pe);
    double src = norm_lower(p, inner_radius,
                            detail::quiet_opts(split_seed(seed ^ 0x13b,
                                                          static_cast<std::uint64_t>(i))))
                     .value;
    double img = norm_lower(pe, embed_radius,
                            detail::quiet_opts(split_seed(seed ^ 0x13c,
                                                          static_cast<std::uint64_t>(i))))
                     .value;
    embed_low.update(src - img, static_cast<std::uint64_t>(i), 1e-6);
    embed_high.update(img - triangle_bound(p), static_cast<std::uint64_t>(i), 1e-8);
  }
  rep.assertions.push_back(embed_low.to_assertion(
      "embedded estimate dominates the source estimate", "Prop 13", 1e-6));
  rep.assertions.push_back(embed_high.to_assertion(
      "embedded estimate stays below the source triangle bound", "Prop 13", 1e-8));

  AlphabetSpec ambient = AlphabetSpec::monoid_plain(2);
  detail::ProjectionDiagnostics diag;
  detail::Worst worst = detail::projection_bound_worst(
      seed, instances, 2, radius, SubsetPredicate::submonoid_ablocks(), 1.0,
      [&](std::mt19937_64& rng, int level) {
        return random_poly(rng, ambient, level, 4, 3);
      },
      diag);
  rep.assertions.push_back(worst.to_assertion(
      "lower(project(p)) <= triangle(p): projection onto A(P_alpha) is contractive",
      "Prop 13", 1e-8));
  rep.outputs = detail::projection_outputs(diag);
  rep.outputs["partition_words"] = ball->size();
  return rep;
}

// ---- Prop 14: A(K) is a column space ------------------------------------------

inline Report prop14_suite(std::uint64_t seed = 1, int instances = 100,
                           int max_level = 2, int radius = 3) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop14";
  rep.proposition = "Prop 14";
  rep.inputs = Json{{"seed", seed}, {"instances", instances},
                    {"max_level", max_level}, {"radius", radius},
                    {"kset_j_min", 1}, {"alpha_count", 2}, {"e_count", 2}};

  AlphabetSpec ambient = AlphabetSpec::split(Mode::monoid, 2, 2);
  AlphabetSpec alpha_spec = AlphabetSpec::split(Mode::monoid, 2, 0);

  // column identity: for T = sum_i e_i p_i the full estimate equals the
  // restriction to alpha-supported directions
  detail::Worst col;
  for (int i = 0; i < std::min(instances, 20); ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x14a, static_cast<std::uint64_t>(i)));
    Poly t = zero_poly(ambient, 1);
    for (int g = 1; g <= 2; ++g) {
      Poly pg = random_poly(rng, alpha_spec, 1, 3, 2);
      for (const auto& [w, a] : pg.terms)
        add_term(t, concat(Word::single(Mode::monoid, e_gen(g)), w), a);
    }
    double full =
        norm_lower(t, radius,
                   detail::tight_opts(split_seed(seed ^ 0x14b, static_cast<std::uint64_t>(i))))
            .value;
    double restricted =
        norm_lower_subdomain(
            t, radius, alpha_supported,
            detail::tight_opts(split_seed(seed ^ 0x14c, static_cast<std::uint64_t>(i))))
            .value;
    col.update(std::abs(full - restricted), static_cast<std::uint64_t>(i), 1e-6);
  }
  rep.assertions.push_back(col.to_assertion(
      "|| sum e_i p_i || is attained on alpha directions (column norm)",
      "Prop 14", 1e-6));

  detail::ProjectionDiagnostics diag;
  detail::Worst worst = detail::projection_bound_worst(
      seed, instances, max_level, radius, SubsetPredicate::kset(1), 1.0,
      [&](std::mt19937_64& rng, int level) {
        return random_poly(rng, ambient, level, 4, 3);
      },
      diag);
  rep.assertions.push_back(worst.to_assertion(
      "lower(project_K(p)) <= triangle(p): projection onto A(K) is contractive",
      "Prop 14", 1e-8));
  rep.outputs = detail::projection_outputs(diag);
  return rep;
}

// ---- Prop 16: homogeneous polynomials norm exactly --------------------------

inline Report prop16_suite(std::uint64_t seed = 1, int instances = 50,
                           int max_radius = 2) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop16";
  rep.proposition = "Prop 16";
  rep.inputs = Json{{"seed", seed}, {"instances", instances},
                    {"max_radius", max_radius}, {"max_k", 3}, {"max_degree", 4}};

  detail::Worst scalar;
  for (int i = 0; i < instances; ++i) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> kd(1, 3), dd(0, 4);
    Poly p = random_homogeneous(rng, kd(rng), dd(rng));
    double l2 = l2_norm(p);
    for (int radius = 0; radius <= max_radius; ++radius) {
      NormEstimate est = norm_lower(
          p, radius,
          detail::quiet_opts(split_seed(seed ^ 0x160, static_cast<std::uint64_t>(i * 8 + radius))));
      scalar.update(std::abs(est.value - l2), static_cast<std::uint64_t>(i), 1e-8);
    }
  }
  rep.assertions.push_back(scalar.to_assertion(
      "||p||_inf = ||p||_2 for homogeneous p at every radius", "Prop 16", 1e-8));

  // matrix level: the truncation attains the coefficient column norm
  detail::Worst matrix;
  for (int i = 0; i < 20; ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x161, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> kd(1, 2), dd(1, 3);
    Poly t = random_homogeneous(rng, kd(rng), dd(rng), 2);
    double col = column_norm(coefficient_family(t));
    for (int radius = 0; radius <= 1; ++radius) {
      NormEstimate est = norm_lower_matrix(
          t, radius,
          detail::tight_opts(split_seed(seed ^ 0x162, static_cast<std::uint64_t>(i * 4 + radius)),
                             1e-13, 50000));
      matrix.update(std::abs(est.value - col), static_cast<std::uint64_t>(i), 1e-9);
    }
  }
  rep.assertions.push_back(matrix.to_assertion(
      "matrix level: estimate equals the coefficient column norm", "Prop 16", 1e-9));

  // complementation: the degree-n part never exceeds the triangle bound
  AlphabetSpec ambient = AlphabetSpec::monoid_plain(2);
  detail::Worst proj;
  for (int i = 0; i < 25; ++i) {
    auto rng = make_rng(split_seed(seed ^ 0x163, static_cast<std::uint64_t>(i)));
    Poly p = random_poly(rng, ambient, 1, 5, 3);
    std::uniform_int_distribution<int> nd(0, 3);
    ProjectionBound pb = check_projection_bound(
        p, SubsetPredicate::homogeneous(nd(rng)), 1.0, 2, 1e-8,
        detail::quiet_opts(split_seed(seed ^ 0x164, static_cast<std::uint64_t>(i))));
    proj.update(pb.proj_estimate.value - pb.triangle_upper,
                static_cast<std::uint64_t>(i), 1e-8);
  }
  rep.assertions.push_back(proj.to_assertion(
      "projection onto X_n is contractive against the triangle bound",
      "Prop 16", 1e-8));
  return rep;
}

// ---- Prop 17: right multiplication by a fresh generator ----------------------

inline Report prop17_suite(std::uint64_t seed = 1, int instances = 20, int radius = 2) {
  Report rep;
  rep.command = "verify";
  rep.suite = "prop17";
  rep.proposition = "Prop 17";
  rep.inputs = Json{{"seed", seed}, {"instances", instances}, {"radius", radius},
                    {"max_k", 3}};

  detail::Worst eq;
  for (int i = 0; i < instances; ++i) {
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    int k = 2 + i % 2;
    AlphabetSpec spec = AlphabetSpec::monoid_plain(k);
    AlphabetSpec sub = AlphabetSpec::monoid_plain(k - 1);
    Poly p = zero_poly(spec, 1);
    Poly src = random_poly(rng, sub, 1, 4, 3);
    for (const auto& [w, a] : src.terms) add_term(p, w, a);
    Prop17Report r = prop17_check(p, k, radius, 1e-8);
    double worst_dev = 0.0;
    for (const Prop17Point& pt : r.points) worst_dev = std::max(worst_dev, pt.deviation);
    eq.update(worst_dev, static_cast<std::uint64_t>(i), 1e-8);
  }
  rep.assertions.push_back(eq.to_assertion(
      "||p e_k||_inf = ||p||_2 at every radius", "Prop 17", 1e-8));

  // pinned examples
  Poly p = parse_poly("1 + g1", Mode::monoid, 2);
  Prop17Report r = prop17_check(p, 2, radius, 1e-8);
  Assertion ex;
  ex.name = "p = 1 + e_1, k = 2: both sides sqrt(2)";
  ex.proposition = "Prop 17";
  ex.lhs = r.l2;
  ex.rhs = std::sqrt(2.0);
  ex.tolerance = 1e-9;
  ex.pass = r.pass && std::abs(r.l2 - std::sqrt(2.0)) <= 1e-9;
  rep.assertions.push_back(ex);

  Prop17Report rid = prop17_check(identity_poly(AlphabetSpec::monoid_plain(2)), 2,
                                  radius, 1e-8);
  Assertion exid;
  exid.name = "p = e_0: both sides one";
  exid.proposition = "Prop 17";
  exid.lhs = rid.l2;
  exid.rhs = 1.0;
  exid.tolerance = 1e-9;
  exid.pass = rid.pass && std::abs(rid.l2 - 1.0) <= 1e-9;
  rep.assertions.push_back(exid);
  return rep;
}

// ---- Haagerup-Pisier splitting ------------------------------------------------

inline Report hp_split_suite(int k = 2, int radius = 4) {
  Report rep;
  rep.command = "verify";
  rep.suite = "hp-split";
  rep.proposition = "HP splitting";
  rep.inputs = Json{{"k", k}, {"radius", radius}};

  auto ball = enumerate_ball(AlphabetSpec::group_plain(k), radius);
  bool sum_ok = true;
  for (int i = 1; i <= k; ++i)
    sum_ok = sum_ok && split_sum_matches_translation(hp_split(plain_gen(i), ball));
  Assertion sum;
  sum.name = "e_i = P_i e_i + e_i P_{-i} exactly on every ball vector";
  sum.proposition = "HP splitting";
  sum.pass = sum_ok;
  rep.assertions.push_back(sum);

  std::vector<Gen> gens;
  for (int i = 1; i <= k; ++i) gens.push_back(plain_gen(i));
  Assertion dom;
  dom.name = "sum_i P_i <= I (disjoint 0/1 diagonals)";
  dom.proposition = "HP splitting";
  dom.pass = projections_dominated_by_identity(*ball, gens);
  rep.assertions.push_back(dom);

  rep.outputs = Json{{"ball_words", ball->size()}};
  return rep;
}

// ---- Eq. (4): von Neumann inequality -----------------------------------------

inline Report vn_report(const Poly& p, const std::string& expr, int k, int d, int trials,
                        std::uint64_t seed, SampleMode mode, int diag_radius = 4) {
  VnReport vr = vn_verify(p, k, d, trials, seed, mode, diag_radius);
  Report rep;
  rep.command = "vn";
  rep.proposition = "Eq (4)";
  rep.inputs = Json{{"expr", expr}, {"k", k}, {"dim", d}, {"trials", trials},
                    {"seed", seed}, {"mode", to_string(mode)}};
  Assertion a;
  a.name = "||p(T)|| <= bound for every sampled row contraction";
  a.proposition = "Eq (4)";
  a.pass = vr.pass;
  a.lhs = -vr.min_slack;
  a.rhs = 0.0;
  a.tolerance = 1e-8;
  a.detail = Json{{"bound_kind", to_string(vr.bound_kind)}, {"bound", vr.bound}};
  rep.assertions.push_back(a);
  Json trials_json = Json::array();
  for (const VnTrial& t : vr.trials)
    trials_json.push_back(Json{{"seed", t.seed},
                               {"value", t.value},
                               {"certificate", t.certificate},
                               {"slack", t.slack}});
  rep.outputs = Json{{"bound_kind", to_string(vr.bound_kind)},
                     {"bound", vr.bound},
                     {"min_slack", vr.min_slack},
                     {"max_value", vr.max_value},
                     {"norm_estimate", estimate_json(vr.norm_estimate)},
                     {"trials", trials_json}};
  return rep;
}

// ---- The section-3 remark: ||p||_inf vs ||p|| --------------------------------

inline Report compare_remark_report(const Poly& group_p, const std::string& expr,
                                    int radius, std::uint64_t seed = 1) {
  if (group_p.alphabet.mode != Mode::group)
    throw std::invalid_argument("compare_remark: group polynomial required");
  Poly monoid_p = zero_poly(AlphabetSpec{Mode::monoid, group_p.alphabet.plain,
                                         group_p.alphabet.alpha, group_p.alphabet.e},
                            group_p.level);
  for (const auto& [w, a] : group_p.terms) add_term(monoid_p, to_monoid(w), a);

  Report rep;
  rep.command = "compare-remark";
  rep.proposition = "Fock-vs-group norm";
  rep.inputs = Json{{"expr", expr}, {"radius", radius}, {"seed", seed}};

  Json monoid_trace = Json::array(), group_trace = Json::array();
  detail::Worst order;
  double monoid_last = 0.0, group_last = 0.0;
  for (int L = 0; L <= radius; ++L) {
    double m = norm_lower(monoid_p, L,
                          detail::quiet_opts(split_seed(seed, static_cast<std::uint64_t>(L))))
                   .value;
    double g = norm_lower(group_p, L,
                          detail::quiet_opts(split_seed(seed ^ 0x31, static_cast<std::uint64_t>(L))))
                   .value;
    monoid_trace.push_back(m);
    group_trace.push_back(g);
    order.update(m - g, static_cast<std::uint64_t>(L), 1e-8);
    monoid_last = m;
    group_last = g;
  }
  rep.assertions.push_back(order.to_assertion(
      "||p||_inf estimate <= ||p|| estimate at every radius", "Fock-vs-group norm",
      1e-8));

  NormEstimate comp = compression_norm(group_p, radius,
                                       detail::quiet_opts(split_seed(seed, 0xc0)));
  Assertion qq;
  qq.name = "||QpQ|| equals the monoid-mode estimate";
  qq.proposition = "Fock-vs-group norm";
  qq.lhs = comp.value;
  qq.rhs = monoid_last;
  qq.tolerance = 1e-8;
  qq.pass = std::abs(comp.value - monoid_last) <= 1e-8;
  rep.assertions.push_back(qq);

  rep.outputs = Json{{"monoid_trace", monoid_trace},
                     {"group_trace", group_trace},
                     {"monoid_value", monoid_last},
                     {"group_value", group_last},
                     {"strictness_gap", group_last - monoid_last},
                     {"compression_value", comp.value}};
  return rep;
}

// ---- Dispatcher ---------------------------------------------------------------

// instances/radius/level <= 0 select the per-suite defaults.
inline Report run_suite(const std::string& name, std::uint64_t seed, int instances = 0,
                        int radius = 0, int max_level = 0) {
  auto pick = [](int v, int dflt) { return v > 0 ? v : dflt; };
  if (name == "lemma7") return lemma7_suite(seed);
  if (name == "lemma15") return lemma15_suite(seed, pick(instances, 50));
  if (name == "prop1")
    return prop1_suite(seed, pick(instances, 100), pick(max_level, 2), pick(radius, 3));
  if (name == "prop4")
    return prop4_suite(seed, pick(instances, 100), pick(max_level, 2), pick(radius, 3));
  if (name == "prop8") return prop8_suite(seed, pick(instances, 100), pick(radius, 3));
  if (name == "prop9") return prop9_suite(seed, pick(instances, 100), pick(radius, 3));
  if (name == "prop12")
    return prop12_suite(seed, pick(instances, 100), pick(max_level, 2), pick(radius, 3));
  if (name == "prop13") return prop13_suite(seed, pick(instances, 100), pick(radius, 4));
  if (name == "prop14")
    return prop14_suite(seed, pick(instances, 100), pick(max_level, 2), pick(radius, 3));
  if (name == "prop16") return prop16_suite(seed, pick(instances, 50), pick(radius, 2));
  if (name == "prop17") return prop17_suite(seed, pick(instances, 20), pick(radius, 2));
  if (name == "hp-split") return hp_split_suite(2, pick(radius, 4));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace fgn::verify
