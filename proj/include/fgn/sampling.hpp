#pragma once

// Seeded random instance generators used by the verification suites.

#include "fgn/opspace.hpp"
#include "fgn/poly.hpp"
#include "fgn/rng.hpp"

namespace fgn {

inline Word random_word(std::mt19937_64& rng, const AlphabetSpec& spec, int max_len) {
  auto gens = spec.generators();
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> signd(0, 1);
  std::vector<Letter> ls;
  int l = len(rng);
  for (int t = 0; t < l; ++t) {
    std::int8_t s = (spec.mode == Mode::group && signd(rng)) ? -1 : +1;
    ls.push_back({gens[pick(rng)], s});
  }
  return Word::from_letters(spec.mode, ls);
}

// Nonzero polynomial with Gaussian coefficients on 1..max_terms random words.
inline Poly random_poly(std::mt19937_64& rng, const AlphabetSpec& spec, int level,
                        int max_terms, int max_len) {
  Poly p = zero_poly(spec, level);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i)
    add_term(p, random_word(rng, spec, max_len), gaussian_matrix(rng, level, level));
  if (p.is_zero())
    add_term(p, Word::identity(spec.mode), gaussian_matrix(rng, level, level));
  return p;
}

// Homogeneous monoid polynomial of the given degree with a random nonempty
// subset of the k^degree words as support.
inline Poly random_homogeneous(std::mt19937_64& rng, int k, int deg, int level = 1) {
  AlphabetSpec spec = AlphabetSpec::monoid_plain(k);
  std::vector<Word> words{Word::identity(Mode::monoid)};
  for (int l = 0; l < deg; ++l) {
    std::vector<Word> next;
    for (const Word& w : words)
      for (int g = 1; g <= k; ++g)
        next.push_back(concat(w, Word::single(Mode::monoid, plain_gen(g))));
    words = std::move(next);
  }
  Poly p = zero_poly(spec, level);
  std::uniform_int_distribution<int> coin(0, 1);
  for (const Word& w : words)
    if (coin(rng)) add_term(p, w, gaussian_matrix(rng, level, level));
  if (p.is_zero()) add_term(p, words.front(), gaussian_matrix(rng, level, level));
  return p;
}

inline Prop8Element random_prop8_element(std::mt19937_64& rng, int level, int n_alpha,
                                         int n_e, int max_len, int max_terms = 3) {
  Prop8Element t;
  t.level = level;
  t.alpha_count = n_alpha;
  t.e_count = n_e;
  AlphabetSpec alpha_spec = AlphabetSpec::split(Mode::group, n_alpha, 0);
  std::uniform_int_distribution<int> terms(1, max_terms);
  for (int i = 1; i <= n_e; ++i) {
    Poly a = zero_poly(alpha_spec, level);
    int nt = terms(rng);
    for (int j = 0; j < nt; ++j)
      add_term(a, random_word(rng, alpha_spec, max_len), gaussian_matrix(rng, level, level));
    if (!a.is_zero()) t.parts.emplace_back(i, a);
  }
  if (t.parts.empty()) {
    Poly a = zero_poly(alpha_spec, level);
    add_term(a, Word::identity(Mode::group), gaussian_matrix(rng, level, level));
    t.parts.emplace_back(1, a);
  }
  return t;
}

}  // namespace fgn
