#pragma once

// Finitely supported polynomials sum_x A_x e_x over a word alphabet, with
// scalar or dense n x n matrix coefficients. Level n realizes the matrix
// amplification M_n of the scalar algebra; level 1 coefficients are 1 x 1.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "fgn/dense.hpp"
#include "fgn/words.hpp"

namespace fgn {

// Terms whose coefficient falls below this (Frobenius norm) are pruned.
inline constexpr double kCoeffPruneTol = 1e-14;

struct Poly {
  AlphabetSpec alphabet;
  int level = 1;
  std::map<Word, CMatrix> terms;  // no zero coefficients stored

  bool is_zero() const { return terms.empty(); }
};

inline Poly zero_poly(const AlphabetSpec& spec, int level = 1) {
  if (level < 1) throw std::invalid_argument("poly: level must be >= 1");
  return Poly{spec, level, {}};
}

inline void add_term(Poly& p, const Word& w, const CMatrix& a) {
  if (a.rows() != p.level || a.cols() != p.level)
    throw std::invalid_argument("poly: coefficient shape does not match level");
  if (!p.alphabet.compatible(w))
    throw std::invalid_argument("poly: word outside declared alphabet");
  auto [it, fresh] = p.terms.try_emplace(w, a);
  if (!fresh) it->second += a;
  if (it->second.norm() < kCoeffPruneTol) p.terms.erase(it);
}

inline void add_term(Poly& p, const Word& w, Complex c) {
  CMatrix a = CMatrix::Identity(p.level, p.level) * c;
  add_term(p, w, a);
}

inline Poly scalar_term(const AlphabetSpec& spec, const Word& w, Complex c) {
  Poly p = zero_poly(spec, 1);
  add_term(p, w, c);
  return p;
}

inline Poly matrix_term(const AlphabetSpec& spec, const Word& w, const CMatrix& a) {
  Poly p = zero_poly(spec, static_cast<int>(a.rows()));
  add_term(p, w, a);
  return p;
}

inline Poly identity_poly(const AlphabetSpec& spec, int level = 1) {
  Poly p = zero_poly(spec, level);
  add_term(p, Word::identity(spec.mode), CMatrix::Identity(level, level));
  return p;
}

inline void require_same_shape(const Poly& p, const Poly& q) {
  if (p.alphabet != q.alphabet)
    throw std::invalid_argument("poly: alphabet mismatch");
  if (p.level != q.level)
    throw std::invalid_argument("poly: level mismatch");
}

inline Poly add(const Poly& p, const Poly& q) {
  require_same_shape(p, q);
  Poly out = p;
  for (const auto& [w, a] : q.terms) add_term(out, w, a);
  return out;
}

inline Poly scale(Complex c, const Poly& p) {
  Poly out = zero_poly(p.alphabet, p.level);
  for (const auto& [w, a] : p.terms) add_term(out, w, CMatrix(c * a));
  return out;
}

inline Poly sub(const Poly& p, const Poly& q) { return add(p, scale(-1.0, q)); }

inline Poly mul(const Poly& p, const Poly& q) {
  require_same_shape(p, q);
  Poly out = zero_poly(p.alphabet, p.level);
  for (const auto& [x, a] : p.terms)
    for (const auto& [y, b] : q.terms) add_term(out, concat(x, y), CMatrix(a * b));
  return out;
}

// sum A_x^* e_{x^{-1}}; defined in group mode only.
inline Poly adjoint(const Poly& p) {
  if (p.alphabet.mode != Mode::group)
    throw std::invalid_argument("adjoint: monoid polynomials have no adjoint");
  Poly out = zero_poly(p.alphabet, p.level);
  for (const auto& [w, a] : p.terms) add_term(out, inverse(w), CMatrix(a.adjoint()));
  return out;
}

// Column-convention ell_2 norm: || sum_x A_x^* A_x ||^{1/2}. At level 1 this
// is the plain coefficient ell_2 norm; at level n it is the norm of the map
// b |-> sum_x A_x b (x) e_x.
inline double l2_norm(const Poly& p) {
  CMatrix g = CMatrix::Zero(p.level, p.level);
  for (const auto& [w, a] : p.terms) g += a.adjoint() * a;
  return std::sqrt(lambda_max_psd(g));
}

// Row-convention counterpart: || sum_x A_x A_x^* ||^{1/2}, the supremum of
// || p^* (b (x) e_0) ||_2 over unit b.
inline double l2_norm_row(const Poly& p) {
  CMatrix g = CMatrix::Zero(p.level, p.level);
  for (const auto& [w, a] : p.terms) g += a * a.adjoint();
  return std::sqrt(lambda_max_psd(g));
}

inline int degree(const Poly& p) {
  int d = 0;
  for (const auto& [w, a] : p.terms) d = std::max(d, w.length());
  return d;
}

inline bool is_homogeneous(const Poly& p) {
  if (p.terms.empty()) return false;
  int n = p.terms.begin()->first.length();
  for (const auto& [w, a] : p.terms)
    if (w.length() != n) return false;
  return true;
}

inline Poly homogeneous_part(const Poly& p, int n) {
  if (p.alphabet.mode != Mode::monoid)
    throw std::invalid_argument("homogeneous_part: monoid polynomials only");
  Poly out = zero_poly(p.alphabet, p.level);
  for (const auto& [w, a] : p.terms)
    if (w.length() == n) add_term(out, w, a);
  return out;
}

// Triangle-inequality upper bound sum_x ||A_x|| for the operator norm.
inline double triangle_bound(const Poly& p) {
  double s = 0.0;
  for (const auto& [w, a] : p.terms) s += spectral_norm(a);
  return s;
}

// If every word ends with the same generator g and contains g exactly once,
// returns g. Left multiplication by such a polynomial is isometric up to the
// coefficient ell_2 norm (no product collisions are possible), the right-
// multiplication counterpart of the homogeneous case.
inline std::optional<Gen> unique_final_generator(const Poly& p) {
  if (p.terms.empty() || p.alphabet.mode != Mode::monoid) return std::nullopt;
  std::optional<Gen> g;
  for (const auto& [w, a] : p.terms) {
    if (w.empty()) return std::nullopt;
    if (!g) g = w.back().gen;
    if (w.back().gen != *g) return std::nullopt;
    for (int i = 0; i + 1 < w.length(); ++i)
      if (w.letters()[i].gen == *g) return std::nullopt;
  }
  return g;
}

// p(T_1, ..., T_k) for a scalar monoid polynomial; the empty word maps to the
// identity matrix.
inline CMatrix eval_at(const Poly& p, const std::vector<CMatrix>& tuple) {
  if (p.level != 1)
    throw std::invalid_argument("eval_at: scalar-level polynomial required");
  if (p.alphabet.mode != Mode::monoid)
    throw std::invalid_argument("eval_at: monoid polynomial required");
  if (p.alphabet.plain != static_cast<int>(tuple.size()))
    throw std::invalid_argument("eval_at: alphabet size does not match tuple length");
  if (tuple.empty()) throw std::invalid_argument("eval_at: empty tuple");
  const Eigen::Index d = tuple.front().rows();
  for (const CMatrix& t : tuple)
    if (t.rows() != d || t.cols() != d)
      throw std::invalid_argument("eval_at: tuple matrices must share one square shape");
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& [w, a] : p.terms) {
    CMatrix m = CMatrix::Identity(d, d);
    for (const Letter& l : w.letters()) m = m * tuple[static_cast<std::size_t>(l.gen.index - 1)];
    out += a(0, 0) * m;
  }
  return out;
}

}  // namespace fgn
