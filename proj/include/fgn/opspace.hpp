#pragma once

// Operator-space-level machinery: row/column norms of matrix families, the
// generator splitting e_i = P_i e_i + e_i P_{-i}, sandwich bounds for
// elements sum_i (I (x) e_i) A_i supported on the K-set, subset projections
// with their bound reports, and the intersection norm max(col, row).

#include <Eigen/SVD>
#include <utility>
#include <vector>

#include "fgn/fockrep.hpp"

namespace fgn {

inline void require_uniform_shapes(const std::vector<CMatrix>& family) {
  if (family.empty())
    throw std::invalid_argument("matrix family: nonempty family required");
  for (const CMatrix& t : family)
    if (t.rows() != family.front().rows() || t.cols() != family.front().cols())
      throw std::invalid_argument("matrix family: shape mismatch");
}

// || sum_i T_i^* T_i ||^{1/2}: the norm of sum_i e_{i1} (x) T_i in C (x) B(H).
inline double column_norm(const std::vector<CMatrix>& family) {
  require_uniform_shapes(family);
  CMatrix g = CMatrix::Zero(family.front().cols(), family.front().cols());
  for (const CMatrix& t : family) g += t.adjoint() * t;
  return std::sqrt(lambda_max_psd(g));
}

// || sum_i T_i T_i^* ||^{1/2}: the norm of sum_i e_{1i} (x) T_i in R (x) B(H).
inline double row_norm(const std::vector<CMatrix>& family) {
  require_uniform_shapes(family);
  CMatrix g = CMatrix::Zero(family.front().rows(), family.front().rows());
  for (const CMatrix& t : family) g += t * t.adjoint();
  return std::sqrt(lambda_max_psd(g));
}

// Spectral norms of the vertically / horizontally stacked block matrices;
// equal to column_norm / row_norm and kept as an independent route.
inline double stacked_column_norm(const std::vector<CMatrix>& family) {
  require_uniform_shapes(family);
  const Eigen::Index r = family.front().rows(), c = family.front().cols();
  CMatrix stack(static_cast<Eigen::Index>(family.size()) * r, c);
  for (std::size_t i = 0; i < family.size(); ++i)
    stack.block(static_cast<Eigen::Index>(i) * r, 0, r, c) = family[i];
  return spectral_norm(stack);
}

inline double stacked_row_norm(const std::vector<CMatrix>& family) {
  require_uniform_shapes(family);
  const Eigen::Index r = family.front().rows(), c = family.front().cols();
  CMatrix stack(r, static_cast<Eigen::Index>(family.size()) * c);
  for (std::size_t i = 0; i < family.size(); ++i)
    stack.block(0, static_cast<Eigen::Index>(i) * c, r, c) = family[i];
  return spectral_norm(stack);
}

inline std::vector<CMatrix> coefficient_family(const Poly& p) {
  std::vector<CMatrix> f;
  f.reserve(p.terms.size());
  for (const auto& [w, a] : p.terms) f.push_back(a);
  return f;
}

// ---- Haagerup-Pisier splitting ----------------------------------------------

// The two halves of left translation by g on a ball: P_g e_g projects the
// image onto words starting with a positive power of g; e_g P_{-g} first
// projects onto words starting with a negative power. Their sum is the
// translation itself.
struct SplitPart {
  Gen gen;
  std::shared_ptr<const Ball> domain;
  std::shared_ptr<const Ball> codomain;  // radius + 1
  SpMat col_part;  // P_g e_g
  SpMat row_part;  // e_g P_{-g}
};

inline SplitPart hp_split(Gen g, const std::shared_ptr<const Ball>& ball) {
  if (ball->alphabet.mode != Mode::group)
    throw std::invalid_argument("hp_split: group-mode ball required");
  if (!ball->alphabet.contains(g))
    throw std::invalid_argument("hp_split: generator outside ball alphabet");
  SplitPart sp;
  sp.gen = g;
  sp.domain = ball;
  sp.codomain = enumerate_ball(ball->alphabet, ball->radius + 1);
  const Word eg = Word::single(Mode::group, g, +1);
  std::vector<Eigen::Triplet<Complex>> col_trips, row_trips;
  for (int c = 0; c < ball->size(); ++c) {
    const Word& x = ball->words[static_cast<std::size_t>(c)];
    Word y = concat(eg, x);
    int r = sp.codomain->find(y);
    bool x_starts_neg = !x.empty() && x.front() == Letter{g, -1};
    bool y_starts_pos = !y.empty() && y.front() == Letter{g, +1};
    if (y_starts_pos) col_trips.emplace_back(r, c, Complex(1.0));
    if (x_starts_neg) row_trips.emplace_back(r, c, Complex(1.0));
  }
  sp.col_part.resize(sp.codomain->size(), ball->size());
  sp.row_part.resize(sp.codomain->size(), ball->size());
  sp.col_part.setFromTriplets(col_trips.begin(), col_trips.end());
  sp.row_part.setFromTriplets(row_trips.begin(), row_trips.end());
  return sp;
}

// Exact identity P_g e_g + e_g P_{-g} = e_g on every basis vector of the ball.
inline bool split_sum_matches_translation(const SplitPart& sp) {
  Poly eg = scalar_term(sp.domain->alphabet, Word::single(Mode::group, sp.gen), 1.0);
  TruncOp trans = left_mult(eg, sp.domain);
  SpMat diff = sp.col_part + sp.row_part - trans.mat;
  return diff.norm() == 0.0;
}

// sum_g P_g <= I: the starting-letter projections have disjoint supports, so
// the diagonal 0/1 sums never exceed one.
inline bool projections_dominated_by_identity(const Ball& ball,
                                              const std::vector<Gen>& gens) {
  for (const Word& w : ball.words) {
    int hits = 0;
    for (Gen g : gens)
      if (!w.empty() && w.front() == Letter{g, +1}) ++hits;
    if (hits > 1) return false;
  }
  return true;
}

// ---- Sandwich bounds for K-set elements -------------------------------------

// T = sum_{i} (I (x) e_i) A_i with each A_i a level-n polynomial over the
// alpha subgroup.
struct Prop8Element {
  int level = 1;
  int alpha_count = 0;
  int e_count = 0;
  std::vector<std::pair<int, Poly>> parts;  // (e-generator index, A_i)
};

inline Poly assemble(const Prop8Element& t) {
  AlphabetSpec mixed = AlphabetSpec::split(Mode::group, t.alpha_count, t.e_count);
  Poly out = zero_poly(mixed, t.level);
  for (const auto& [i, a] : t.parts) {
    if (a.level != t.level)
      throw std::invalid_argument("prop8: part level mismatch");
    if (i < 1 || i > t.e_count)
      throw std::invalid_argument("prop8: e-generator index out of range");
    Word ei = Word::single(Mode::group, e_gen(i));
    for (const auto& [x, coeff] : a.terms) {
      for (const Letter& l : x.letters())
        if (l.gen.tag != Tag::alpha)
          throw std::invalid_argument("prop8: A_i supported outside the alpha subgroup");
      add_term(out, concat(ei, x), coeff);
    }
  }
  return out;
}

inline bool alpha_supported(const Word& w) {
  for (const Letter& l : w.letters())
    if (l.gen.tag != Tag::alpha) return false;
  return true;
}

// col_term estimates sup { ||Tq||_2 : q in the alpha subball, ||q||_2 <= 1 }
// = || sum_i A_i^* A_i ||^{1/2} in the limit; row_term is exact from the
// coefficients: || sum_{ij} A_{ij} A_{ij}^* ||^{1/2}. The direct estimate is
// sandwiched between max(col, row) and col + row at every radius.
struct SandwichBounds {
  double col_term = 0.0;
  double row_term = 0.0;
  double lower = 0.0;  // max(col_term, row_term)
  double upper = 0.0;  // col_term + row_term
  NormEstimate col_estimate;
  NormEstimate estimate;
};

inline SandwichBounds prop8_bounds(const Prop8Element& t, int radius,
                                   const PowerOptions& opts = {}) {
  Poly T = assemble(t);
  SandwichBounds b;
  if (T.is_zero()) return b;
  const int n = T.level;
  auto domain = enumerate_ball(T.alphabet, radius);
  TruncOp full = left_mult(T, domain);

  // row term, exact from the coefficients, with its attaining direction b
  CMatrix row_gram = CMatrix::Zero(n, n);
  for (const auto& [w, a] : T.terms) row_gram += a * a.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(row_gram);
  b.row_term = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  Eigen::Index row_top;
  es.eigenvalues().maxCoeff(&row_top);

  // column term: the operator restricted to the alpha-subball columns
  std::vector<int> alpha_cols;
  for (int i = 0; i < domain->size(); ++i)
    if (alpha_supported(domain->words[static_cast<std::size_t>(i)]))
      alpha_cols.push_back(i);
  std::vector<Eigen::Triplet<Complex>> trips;
  for (std::size_t j = 0; j < alpha_cols.size(); ++j) {
    const Word& x = domain->words[static_cast<std::size_t>(alpha_cols[j])];
    for (const auto& [w, a] : T.terms) {
      int row = full.codomain->find(concat(w, x));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (a(r, c) != Complex(0.0))
            trips.emplace_back(row * n + r, static_cast<int>(j) * n + c, a(r, c));
    }
  }
  SpMat colmat(static_cast<Eigen::Index>(full.codomain->size()) * n,
               static_cast<Eigen::Index>(alpha_cols.size()) * n);
  colmat.setFromTriplets(trips.begin(), trips.end());
  PowerOptions col_opts = opts;
  col_opts.seed = split_seed(opts.seed, 0x701);
  CVector col_vector;
  b.col_estimate = power_norm(colmat, col_opts, nullptr, &col_vector);
  b.col_estimate.radius = radius;
  b.col_estimate.triangle = triangle_bound(T);
  b.col_term = b.col_estimate.value;

  b.lower = std::max(b.col_term, b.row_term);
  b.upper = b.col_term + b.row_term;

  // Warm start from whichever certified direction is larger: the Rayleigh
  // iterates are monotone, so the direct estimate can never fall below it.
  CVector start = CVector::Zero(full.mat.cols());
  if (b.col_term >= b.row_term) {
    for (std::size_t j = 0; j < alpha_cols.size(); ++j)
      start.segment(static_cast<Eigen::Index>(alpha_cols[j]) * n, n) =
          col_vector.segment(static_cast<Eigen::Index>(j) * n, n);
  } else {
    CVector u = CVector::Zero(full.mat.rows());
    u.segment(static_cast<Eigen::Index>(
                  full.codomain->find(Word::identity(Mode::group))) *
                  n,
              n) = es.eigenvectors().col(row_top);
    start = full.mat.adjoint() * u;
  }
  b.estimate = power_norm(full.mat, opts, &start);
  b.estimate.radius = radius;
  b.estimate.triangle = triangle_bound(T);
  return b;
}

// The two constituent norms of the intersection representation and their max;
// the direct estimate stays within a factor 2 of the max.
struct IntersectionNorm {
  double col_term = 0.0;
  double row_term = 0.0;
  double max_term = 0.0;
  double ratio = 1.0;  // estimate / max_term
  NormEstimate estimate;
};

inline IntersectionNorm intersection_norm(const Prop8Element& t, int radius,
                                          const PowerOptions& opts = {}) {
  SandwichBounds b = prop8_bounds(t, radius, opts);
  IntersectionNorm out;
  out.col_term = b.col_term;
  out.row_term = b.row_term;
  out.max_term = b.lower;
  out.estimate = b.estimate;
  out.ratio = out.max_term > 0.0 ? out.estimate.value / out.max_term : 1.0;
  return out;
}

// ---- Subset projections ------------------------------------------------------

inline Poly project(const Poly& p, const SubsetPredicate& pred) {
  Poly out = zero_poly(p.alphabet, p.level);
  for (const auto& [w, a] : p.terms)
    if (pred.contains(w)) add_term(out, w, a);
  return out;
}

// One-sided check of ||project(p)|| <= C ||p||: a certified lower bound of
// the left side against C times the triangle bound of the right side. The
// direct estimate of ||p|| is reported alongside as a sharper but uncertified
// comparison point, with its radius-convergence margin
// |est(L) - est(L-1)| (converged when the margin is below 1e-6 est(L)).
struct ProjectionBound {
  double constant = 1.0;
  Poly projected;
  NormEstimate proj_estimate;
  double triangle_upper = 0.0;
  NormEstimate p_estimate;
  double radius_margin = 0.0;     // |est(L) - est(L-1)| of the p estimate
  bool radius_converged = false;  // margin < 1e-6 * est(L)
  double slack = 0.0;             // C * triangle_upper - proj_estimate.value
  double sharp_ratio = 0.0;       // proj_estimate.value / p_estimate.value
  bool pass = false;
};

inline ProjectionBound check_projection_bound(const Poly& p, const SubsetPredicate& pred,
                                              double constant, int radius,
                                              double tol = 1e-8,
                                              const PowerOptions& opts = {}) {
  ProjectionBound out;
  out.constant = constant;
  out.projected = project(p, pred);
  out.proj_estimate = norm_lower_matrix(out.projected, radius, opts);
  out.triangle_upper = triangle_bound(p);
  PowerOptions diag_opts = opts;
  diag_opts.seed = split_seed(opts.seed, 0x9a1);
  out.p_estimate = norm_lower_matrix(p, radius, diag_opts);
  if (radius >= 1) {
    double prev = norm_lower_matrix(p, radius - 1, diag_opts).value;
    out.radius_margin = std::abs(out.p_estimate.value - prev);
    out.radius_converged = out.radius_margin < 1e-6 * out.p_estimate.value;
  }
  out.slack = constant * out.triangle_upper - out.proj_estimate.value;
  out.sharp_ratio = out.p_estimate.value > 0.0
                        ? out.proj_estimate.value / out.p_estimate.value
                        : (out.proj_estimate.value > 0.0 ? HUGE_VAL : 1.0);
  out.pass = out.proj_estimate.value <= constant * out.triangle_upper + tol;
  return out;
}

}  // namespace fgn
