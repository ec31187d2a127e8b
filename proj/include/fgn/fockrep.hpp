#pragma once

// Truncated left-regular (group) and left-creation (monoid) representations:
// enumerated word balls, sparse left-multiplication operators, and certified
// lower-bound operator-norm estimation by power iteration on the Gram
// operator. Codomain balls are padded by the polynomial degree so outputs are
// never truncated and every estimate is a true lower bound of the operator
// norm.

#include <Eigen/Sparse>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fgn/poly.hpp"
#include "fgn/rng.hpp"

namespace fgn {

using SpMat = Eigen::SparseMatrix<Complex>;

inline constexpr std::int64_t kDefaultBallCap = 2'000'000;

struct BallCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All words of length <= radius, enumerated in (length, lexicographic) order;
// index 0 is the identity.
struct Ball {
  AlphabetSpec alphabet;
  int radius = 0;
  std::vector<Word> words;
  std::unordered_map<Word, int, WordHash> index;

  int size() const { return static_cast<int>(words.size()); }

  int find(const Word& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }
};

// Closed-form ball size, saturating instead of overflowing.
inline std::int64_t ball_count(const AlphabetSpec& spec, int radius) {
  const std::int64_t sat = std::numeric_limits<std::int64_t>::max() / 2;
  std::int64_t total = 1, level = 1;
  const std::int64_t k = spec.total();
  if (k == 0) return 1;
  for (int l = 1; l <= radius; ++l) {
    std::int64_t branch = (l == 1) ? (spec.mode == Mode::group ? 2 * k : k)
                                   : (spec.mode == Mode::group ? 2 * k - 1 : k);
    if (level > sat / branch) return sat;
    level *= branch;
    if (total > sat - level) return sat;
    total += level;
  }
  return total;
}

namespace detail {

struct BallKey {
  Mode mode;
  int plain, alpha, e, radius;
  friend bool operator==(const BallKey&, const BallKey&) = default;
};

struct BallKeyHash {
  std::size_t operator()(const BallKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.mode);
    for (int v : {k.plain, k.alpha, k.e, k.radius})
      h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

inline std::shared_ptr<const Ball> enumerate_ball(const AlphabetSpec& spec, int radius,
                                                  std::int64_t cap = kDefaultBallCap) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: negative radius");
  if (spec.total() < 1) throw std::invalid_argument("enumerate_ball: empty alphabet");
  if (ball_count(spec, radius) > cap)
    throw BallCapError("enumerate_ball: ball size exceeds cap of " + std::to_string(cap));

  // Balls are immutable and enumeration is deterministic, so identical
  // requests share one instance across the process.
  static std::mutex cache_mutex;
  static std::unordered_map<detail::BallKey, std::shared_ptr<const Ball>,
                            detail::BallKeyHash>
      cache;
  detail::BallKey key{spec.mode, spec.plain, spec.alpha, spec.e, radius};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<Letter> letters;
  for (Gen g : spec.generators()) {
    letters.push_back({g, +1});
    if (spec.mode == Mode::group) letters.push_back({g, -1});
  }

  auto ball = std::make_shared<Ball>();
  ball->alphabet = spec;
  ball->radius = radius;
  ball->words.push_back(Word::identity(spec.mode));
  std::size_t level_begin = 0;
  for (int l = 1; l <= radius; ++l) {
    std::size_t level_end = ball->words.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Letter& cand : letters) {
        const Word& w = ball->words[i];
        if (spec.mode == Mode::group && !w.empty() && w.back() == inverse(cand))
          continue;
        ball->words.push_back(concat(w, Word::from_letters(spec.mode, {cand})));
      }
    level_begin = level_end;
  }
  ball->index.reserve(ball->words.size());
  for (int i = 0; i < ball->size(); ++i) ball->index.emplace(ball->words[i], i);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, fresh] = cache.try_emplace(key, ball);
    return it->second;
  }
}

// Left multiplication by a polynomial as a sparse map between coefficient-
// tensor-ball spaces. Codomain radius = domain radius + degree, so no output
// ever falls outside the codomain.
struct TruncOp {
  std::shared_ptr<const Ball> domain;
  std::shared_ptr<const Ball> codomain;
  int level = 1;
  SpMat mat;  // (level * |codomain|) x (level * |domain|)
};

inline TruncOp left_mult(const Poly& p, const std::shared_ptr<const Ball>& domain,
                         std::int64_t cap = kDefaultBallCap) {
  if (p.alphabet != domain->alphabet)
    throw std::invalid_argument("left_mult: polynomial/ball alphabet mismatch");
  TruncOp op;
  op.domain = domain;
  op.codomain = enumerate_ball(p.alphabet, domain->radius + degree(p), cap);
  op.level = p.level;
  const int n = p.level;
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(p.terms.size() * domain->words.size() * static_cast<std::size_t>(n) * n);
  for (int col = 0; col < domain->size(); ++col) {
    const Word& x = domain->words[static_cast<std::size_t>(col)];
    for (const auto& [w, a] : p.terms) {
      int row = op.codomain->find(concat(w, x));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (a(r, c) != Complex(0.0))
            trips.emplace_back(row * n + r, col * n + c, a(r, c));
    }
  }
  op.mat.resize(static_cast<Eigen::Index>(op.codomain->size()) * n,
                static_cast<Eigen::Index>(domain->size()) * n);
  op.mat.setFromTriplets(trips.begin(), trips.end());
  return op;
}

// ---- Norm estimation --------------------------------------------------------

struct PowerOptions {
  double tol = 1e-9;        // relative change of the singular-value iterate
  int max_iterations = 5000;
  std::uint64_t seed = 0x5eed0001u;
  bool record_trace = true;
};

enum class EstimateKind { lower_bound, exact };

struct NormEstimate {
  double value = 0.0;
  int radius = 0;
  EstimateKind kind = EstimateKind::lower_bound;
  bool converged = false;
  int iterations = 0;
  double last_rel_change = 0.0;
  double triangle = 0.0;       // sum_x ||A_x||, always an upper bound
  std::vector<double> trace;   // singular-value iterates
};

// Largest singular value of a sparse matrix by power iteration on A^H A with
// a seeded random complex start (or a caller-supplied start, used to warm-
// start from a certified direction). The Rayleigh iterates increase
// monotonically, so the returned value is a lower bound of sigma_max(A).
inline NormEstimate power_norm(const SpMat& a, const PowerOptions& opts = {},
                               const CVector* start = nullptr,
                               CVector* final_vector = nullptr) {
  NormEstimate est;
  if (a.cols() == 0 || a.rows() == 0 || a.nonZeros() == 0) {
    est.kind = EstimateKind::exact;
    est.converged = true;
    return est;
  }
  CVector v;
  if (start != nullptr && start->size() == a.cols() && start->norm() > 0.0) {
    v = *start;
  } else {
    auto rng = make_rng(opts.seed);
    v = gaussian_vector(rng, a.cols());
  }
  v.normalize();
  double prev = -1.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    CVector w = a * v;
    double sigma = w.norm();  // sqrt of the Rayleigh quotient of A^H A at unit v
    est.value = sigma;
    est.iterations = it;
    if (opts.record_trace) est.trace.push_back(sigma);
    if (prev >= 0.0) {
      est.last_rel_change = std::abs(sigma - prev) / (sigma > 0.0 ? sigma : 1.0);
      if (est.last_rel_change < opts.tol) {
        est.converged = true;
        break;
      }
    }
    prev = sigma;
    CVector u = a.adjoint() * w;
    double nu = u.norm();
    if (nu == 0.0) {  // start vector lay in the kernel of the Gram operator
      est.converged = true;
      break;
    }
    v = u / nu;
  }
  if (final_vector != nullptr) *final_vector = v;
  return est;
}

namespace detail {
// Exactness of the truncation is guaranteed for homogeneous monoid
// polynomials and for right factors q e_g with g absent from q: in both cases
// products cannot collide, so left multiplication is isometric up to the
// coefficient norm at every radius.
inline bool truncation_exact(const Poly& p) {
  return p.alphabet.mode == Mode::monoid &&
         (is_homogeneous(p) || unique_final_generator(p).has_value());
}
}  // namespace detail

// Certified lower bound of ||p|| (group) or ||p||_inf (monoid) at truncation
// radius L. Monotone nondecreasing in L; always <= the triangle bound.
inline NormEstimate norm_lower(const Poly& p, int radius, const PowerOptions& opts = {},
                               std::int64_t cap = kDefaultBallCap) {
  if (p.is_zero()) {
    NormEstimate est;
    est.radius = radius;
    est.kind = EstimateKind::exact;
    est.converged = true;
    return est;
  }
  TruncOp op = left_mult(p, enumerate_ball(p.alphabet, radius, cap), cap);
  NormEstimate est = power_norm(op.mat, opts);
  est.radius = radius;
  est.triangle = triangle_bound(p);
  if (detail::truncation_exact(p)) est.kind = EstimateKind::exact;
  return est;
}

// Level-n amplified variant; coincides with norm_lower at n = 1.
inline NormEstimate norm_lower_matrix(const Poly& p, int radius,
                                      const PowerOptions& opts = {},
                                      std::int64_t cap = kDefaultBallCap) {
  return norm_lower(p, radius, opts, cap);
}

// Norm of the operator restricted to the domain words selected by `keep`
// (codomain left untruncated). Used for the column term of the sandwich
// bounds, where the supremum runs over the alpha-subball only.
inline NormEstimate norm_lower_subdomain(const Poly& p, int radius,
                                         const std::function<bool(const Word&)>& keep,
                                         const PowerOptions& opts = {},
                                         std::int64_t cap = kDefaultBallCap) {
  if (p.is_zero()) {
    NormEstimate est;
    est.radius = radius;
    est.kind = EstimateKind::exact;
    est.converged = true;
    return est;
  }
  auto domain = enumerate_ball(p.alphabet, radius, cap);
  auto codomain = enumerate_ball(p.alphabet, radius + degree(p), cap);
  const int n = p.level;
  std::vector<int> cols;
  for (int i = 0; i < domain->size(); ++i)
    if (keep(domain->words[static_cast<std::size_t>(i)])) cols.push_back(i);
  std::vector<Eigen::Triplet<Complex>> trips;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Word& x = domain->words[static_cast<std::size_t>(cols[j])];
    for (const auto& [w, a] : p.terms) {
      int row = codomain->find(concat(w, x));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (a(r, c) != Complex(0.0))
            trips.emplace_back(row * n + r, static_cast<int>(j) * n + c, a(r, c));
    }
  }
  SpMat mat(static_cast<Eigen::Index>(codomain->size()) * n,
            static_cast<Eigen::Index>(cols.size()) * n);
  mat.setFromTriplets(trips.begin(), trips.end());
  NormEstimate est = power_norm(mat, opts);
  est.radius = radius;
  est.triangle = triangle_bound(p);
  return est;
}

// || Q p Q || for a group polynomial supported on positive words, where Q is
// the orthogonal projection onto the monoid words: rows and columns of the
// left-regular truncation are compressed to the positive part of the ball.
inline NormEstimate compression_norm(const Poly& p, int radius,
                                     const PowerOptions& opts = {},
                                     std::int64_t cap = kDefaultBallCap) {
  if (p.alphabet.mode != Mode::group)
    throw std::invalid_argument("compression_norm: group polynomial required");
  for (const auto& [w, a] : p.terms)
    if (!is_positive(w))
      throw std::invalid_argument("compression_norm: support not positive");
  if (p.is_zero()) {
    NormEstimate est;
    est.radius = radius;
    est.kind = EstimateKind::exact;
    est.converged = true;
    return est;
  }
  TruncOp op = left_mult(p, enumerate_ball(p.alphabet, radius, cap), cap);
  const int n = p.level;

  auto positive_indices = [n](const Ball& b) {
    std::vector<int> keep(b.words.size(), -1);
    int next = 0;
    for (int i = 0; i < b.size(); ++i)
      if (is_positive(b.words[static_cast<std::size_t>(i)])) keep[static_cast<std::size_t>(i)] = next++;
    return std::make_pair(keep, next);
  };
  auto [row_map, n_rows] = positive_indices(*op.codomain);
  auto [col_map, n_cols] = positive_indices(*op.domain);

  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (SpMat::InnerIterator it(op.mat, k); it; ++it) {
      int rw = row_map[static_cast<std::size_t>(it.row() / n)];
      int cw = col_map[static_cast<std::size_t>(it.col() / n)];
      if (rw >= 0 && cw >= 0)
        trips.emplace_back(rw * n + static_cast<int>(it.row() % n),
                           cw * n + static_cast<int>(it.col() % n), it.value());
    }
  SpMat compressed(static_cast<Eigen::Index>(n_rows) * n,
                   static_cast<Eigen::Index>(n_cols) * n);
  compressed.setFromTriplets(trips.begin(), trips.end());

  NormEstimate est = power_norm(compressed, opts);
  est.radius = radius;
  est.triangle = triangle_bound(p);
  // The compression is unitarily the monoid-mode left creation action.
  Poly monoid = zero_poly(AlphabetSpec{Mode::monoid, p.alphabet.plain, p.alphabet.alpha,
                                       p.alphabet.e},
                          p.level);
  for (const auto& [w, a] : p.terms) add_term(monoid, to_monoid(w), a);
  if (detail::truncation_exact(monoid)) est.kind = EstimateKind::exact;
  return est;
}

}  // namespace fgn
