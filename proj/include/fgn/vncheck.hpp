#pragma once

// Von Neumann inequality harness: seeded sampling of row contractions
// || sum_i T_i T_i^* || <= 1, evaluation of monoid polynomials at operator
// tuples, and slack checks of || p(T) || against certified upper bounds for
// the analytic-algebra norm of p.

#include <optional>
#include <string>
#include <vector>

#include "fgn/fockrep.hpp"
#include "fgn/opspace.hpp"

namespace fgn {

struct RowTuple {
  std::vector<CMatrix> ops;
  double certificate = 0.0;  // || sum_i T_i T_i^* ||, <= 1 + 1e-10
};

enum class SampleMode { strict, boundary };

inline const char* to_string(SampleMode m) {
  return m == SampleMode::strict ? "strict" : "boundary";
}

// Strict mode: T_i = (S + eps I)^{-1/2} G_i for complex Gaussian G_i and
// S = sum_i G_i G_i^*, so the certificate is strictly below one. Boundary
// mode rescales by the exact certificate so it equals one to 1e-12.
inline RowTuple sample_row_contraction(int k, int d, std::uint64_t seed,
                                       SampleMode mode = SampleMode::strict) {
  if (k < 1 || d < 1)
    throw std::invalid_argument("sample_row_contraction: k, d must be >= 1");
  constexpr double kEps = 1e-3;
  auto rng = make_rng(seed);
  std::vector<CMatrix> g;
  g.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) g.push_back(gaussian_matrix(rng, d, d));
  CMatrix s = CMatrix::Zero(d, d);
  for (const CMatrix& gi : g) s += gi * gi.adjoint();
  CMatrix w = inverse_sqrt_psd(s, kEps);
  RowTuple out;
  out.ops.reserve(static_cast<std::size_t>(k));
  for (const CMatrix& gi : g) out.ops.push_back(w * gi);
  auto cert = [](const std::vector<CMatrix>& ts) {
    CMatrix acc = CMatrix::Zero(ts.front().rows(), ts.front().cols());
    for (const CMatrix& t : ts) acc += t * t.adjoint();
    return lambda_max_psd(acc);
  };
  out.certificate = cert(out.ops);
  if (mode == SampleMode::boundary) {
    double scale = 1.0 / std::sqrt(out.certificate);
    for (CMatrix& t : out.ops) t *= scale;
    out.certificate = cert(out.ops);
  }
  if (out.certificate > 1.0 + 1e-10)
    throw std::runtime_error("sample_row_contraction: certificate exceeds one");
  return out;
}

// sqrt of the integral of |p|^2 over the circle: by Parseval, the l2 norm of
// the coefficient sequence.
inline double circle_l2(const std::vector<Complex>& coeffs) {
  double s = 0.0;
  for (Complex c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

// Syntactic detection of p = q(e_s) e_t: every word is a power of one
// generator s followed by a single final t != s. Returns the coefficients of
// q ordered by power.
inline std::optional<std::vector<Complex>> circle_form(const Poly& p) {
  if (p.alphabet.mode != Mode::monoid || p.level != 1 || p.terms.empty())
    return std::nullopt;
  std::optional<Gen> s, t;
  int max_pow = 0;
  for (const auto& [w, a] : p.terms) {
    if (w.empty()) return std::nullopt;
    Gen last = w.back().gen;
    if (!t) t = last;
    if (last != *t) return std::nullopt;
    for (int i = 0; i + 1 < w.length(); ++i) {
      Gen gi = w.letters()[static_cast<std::size_t>(i)].gen;
      if (gi == *t) return std::nullopt;
      if (!s) s = gi;
      if (gi != *s) return std::nullopt;
    }
    max_pow = std::max(max_pow, w.length() - 1);
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(max_pow) + 1, Complex(0.0));
  for (const auto& [w, a] : p.terms)
    coeffs[static_cast<std::size_t>(w.length() - 1)] = a(0, 0);
  return coeffs;
}

enum class BoundKind { homogeneous_l2, circle_l2, triangle };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::homogeneous_l2: return "homogeneous-l2";
    case BoundKind::circle_l2: return "circle-L2";
    case BoundKind::triangle: return "triangle";
  }
  return "";
}

// Tightest certified upper bound available for || p ||_{A(k)}:
// the exact l2 norm for homogeneous p, the circle-L2 value for q(e_s) e_t
// forms, and otherwise the sum of the homogeneous parts' l2 norms.
inline std::pair<BoundKind, double> select_vn_bound(const Poly& p) {
  if (p.is_zero() || is_homogeneous(p))
    return {BoundKind::homogeneous_l2, l2_norm(p)};
  if (auto coeffs = circle_form(p))
    return {BoundKind::circle_l2, circle_l2(*coeffs)};
  double s = 0.0;
  for (int n = 0; n <= degree(p); ++n) s += l2_norm(homogeneous_part(p, n));
  return {BoundKind::triangle, s};
}

struct VnTrial {
  std::uint64_t seed = 0;
  double value = 0.0;        // || p(T_1, ..., T_k) ||
  double certificate = 0.0;  // row-contraction certificate of the tuple
  double slack = 0.0;        // bound - value
};

struct VnReport {
  int k = 0, d = 0;
  SampleMode mode = SampleMode::strict;
  BoundKind bound_kind = BoundKind::triangle;
  double bound = 0.0;
  double min_slack = 0.0;
  double max_value = 0.0;
  NormEstimate norm_estimate;  // lower-bound diagnostic for || p ||_{A(k)}
  std::vector<VnTrial> trials;
  bool pass = false;
};

// Evaluates p at `trials` sampled tuples and checks inequality slack against
// the selected theorem-backed bound. Per-trial seeds follow the declared
// splittable scheme, so trials are order-independent.
inline VnReport vn_verify(const Poly& p, int k, int d, int trials, std::uint64_t seed,
                          SampleMode mode = SampleMode::strict, int diag_radius = 4,
                          double tol = 1e-8) {
  if (p.alphabet.mode != Mode::monoid || p.level != 1)
    throw std::invalid_argument("vn_verify: scalar monoid polynomial required");
  if (p.alphabet.plain != k)
    throw std::invalid_argument("vn_verify: alphabet size does not match k");
  VnReport rep;
  rep.k = k;
  rep.d = d;
  rep.mode = mode;
  std::tie(rep.bound_kind, rep.bound) = select_vn_bound(p);
  rep.norm_estimate = norm_lower(p, diag_radius);
  rep.min_slack = HUGE_VAL;
  rep.trials.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    VnTrial trial;
    trial.seed = split_seed(seed, static_cast<std::uint64_t>(t));
    RowTuple tuple = sample_row_contraction(k, d, trial.seed, mode);
    trial.certificate = tuple.certificate;
    trial.value = spectral_norm(eval_at(p, tuple.ops));
    trial.slack = rep.bound - trial.value;
    rep.min_slack = std::min(rep.min_slack, trial.slack);
    rep.max_value = std::max(rep.max_value, trial.value);
    rep.trials.push_back(trial);
  }
  if (trials == 0) rep.min_slack = 0.0;
  rep.pass = rep.min_slack >= -tol;
  return rep;
}

struct Prop17Point {
  int radius = 0;
  double estimate = 0.0;
  double deviation = 0.0;  // |estimate - ||p||_2|
};

struct Prop17Report {
  double l2 = 0.0;          // ||p||_2 = ||p e_k||_2
  std::vector<Prop17Point> points;
  bool pass = false;
};

// || p e_k ||_inf = || p ||_2 exactly at every radius, for p avoiding e_k:
// equality, not just inequality, is demanded.
inline Prop17Report prop17_check(const Poly& p, int k, int max_radius,
                                 double tol = 1e-8) {
  if (p.alphabet.mode != Mode::monoid || p.alphabet.plain != k)
    throw std::invalid_argument("prop17_check: monoid polynomial over k generators required");
  for (const auto& [w, a] : p.terms)
    for (const Letter& l : w.letters())
      if (l.gen == plain_gen(k))
        throw std::invalid_argument("prop17_check: p must avoid the last generator");
  Poly pek = mul(p, scalar_term(p.alphabet, Word::single(Mode::monoid, plain_gen(k)), 1.0));
  Prop17Report rep;
  rep.l2 = l2_norm(p);
  rep.pass = true;
  for (int L = 0; L <= max_radius; ++L) {
    NormEstimate est = norm_lower(pek, L);
    Prop17Point pt{L, est.value, std::abs(est.value - rep.l2)};
    rep.pass = rep.pass && pt.deviation <= tol;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace fgn
