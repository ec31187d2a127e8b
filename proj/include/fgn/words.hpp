#pragma once

// Word arithmetic in free groups F_k and free monoids P_k: eager reduction,
// the two-alphabet split (alpha generators vs e generators), the subgroup /
// submonoid embeddings of F_infinity into F_2 and P_infinity into P_2, and
// the subset predicates and factorizations behind every projection and
// partition used elsewhere in the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgn {

enum class Mode : std::uint8_t { group, monoid };

// Alphabet tag. Plain generators g1..gk; alpha/e are the two halves of the
// split alphabet used by the K-set constructions.
enum class Tag : std::uint8_t { plain = 0, alpha = 1, e = 2 };

struct Gen {
  Tag tag = Tag::plain;
  int index = 1;  // 1-based

  friend constexpr auto operator<=>(const Gen&, const Gen&) = default;
};

constexpr Gen plain_gen(int i) { return {Tag::plain, i}; }
constexpr Gen alpha_gen(int i) { return {Tag::alpha, i}; }
constexpr Gen e_gen(int i) { return {Tag::e, i}; }

struct Letter {
  Gen gen;
  std::int8_t sign = +1;  // +1 or -1; monoid letters are always +1

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

// Enumeration order of letters: by generator, positive power before negative,
// so that a < a^-1 < b < b^-1.
constexpr std::strong_ordering letter_order(const Letter& a, const Letter& b) {
  if (auto c = a.gen <=> b.gen; c != 0) return c;
  return (a.sign < 0) <=> (b.sign < 0);
}

constexpr Letter inverse(const Letter& l) {
  return {l.gen, static_cast<std::int8_t>(-l.sign)};
}

// A basis index e_x: a reduced free-group word or a free-monoid word.
// Group words are reduced at construction and stay reduced; there is no way
// to build an unreduced Word.
class Word {
 public:
  Word() = default;
  explicit Word(Mode m) : mode_(m) {}

  static Word identity(Mode m) { return Word(m); }

  static Word single(Mode m, Gen g, int sign = +1) {
    return from_letters(m, {Letter{g, static_cast<std::int8_t>(sign)}});
  }

  // Free reduction of a raw signed-letter sequence (group mode); in monoid
  // mode validates that all signs are positive.
  static Word from_letters(Mode m, std::vector<Letter> letters) {
    Word w(m);
    for (const Letter& l : letters) w.push(l);
    return w;
  }

  Mode mode() const { return mode_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Letter& l) {
    if (l.sign != +1 && l.sign != -1)
      throw std::invalid_argument("word: letter sign must be +1 or -1");
    if (l.gen.index < 1)
      throw std::invalid_argument("word: generator index out of range");
    if (mode_ == Mode::monoid) {
      if (l.sign < 0)
        throw std::invalid_argument("word: negative power in monoid mode");
      letters_.push_back(l);
      return;
    }
    if (!letters_.empty() && letters_.back() == inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  Mode mode_ = Mode::group;
  std::vector<Letter> letters_;

  friend Word concat(const Word&, const Word&);
  friend Word inverse(const Word&);
};

// (length, lexicographic): the enumeration order used by word balls and for
// canonical term ordering in polynomials.
inline std::strong_ordering compare(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (int i = 0; i < a.length(); ++i)
    if (auto c = letter_order(a.letters()[i], b.letters()[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

inline bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    auto mix = [](std::uint64_t h) {
      h ^= h >> 30; h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 27; h *= 0x94d049bb133111ebull;
      h ^= h >> 31; return h;
    };
    std::uint64_t h = 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(w.mode());
    for (const Letter& l : w.letters()) {
      std::uint64_t code = (static_cast<std::uint64_t>(l.gen.index) << 3) |
                           (static_cast<std::uint64_t>(l.gen.tag) << 1) |
                           (l.sign < 0 ? 1u : 0u);
      h = mix(h ^ code);
    }
    return static_cast<std::size_t>(mix(h));
  }
};

inline Word reduce(Mode m, std::vector<Letter> letters) {
  return Word::from_letters(m, std::move(letters));
}

inline Word concat(const Word& w1, const Word& w2) {
  if (w1.mode() != w2.mode())
    throw std::invalid_argument("concat: mode mismatch");
  Word out = w1;
  if (out.mode_ == Mode::group) {
    for (const Letter& l : w2.letters_) {
      if (!out.letters_.empty() && out.letters_.back() == inverse(l))
        out.letters_.pop_back();
      else
        out.letters_.push_back(l);
    }
  } else {
    out.letters_.insert(out.letters_.end(), w2.letters_.begin(), w2.letters_.end());
  }
  return out;
}

inline Word inverse(const Word& w) {
  if (w.mode() != Mode::group)
    throw std::invalid_argument("inverse: monoid words are not invertible");
  Word out(Mode::group);
  out.letters_.reserve(w.letters_.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
    out.letters_.push_back(inverse(*it));
  return out;
}

inline Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out = Word::identity(w.mode());
  for (int t = 0; t < (n < 0 ? -n : n); ++t) out = concat(out, base);
  return out;
}

inline bool is_positive(const Word& w) {
  for (const Letter& l : w.letters())
    if (l.sign < 0) return false;
  return true;
}

// Reinterpretations between F_k and its positive cone P_k.
inline Word to_monoid(const Word& w) {
  if (!is_positive(w))
    throw std::invalid_argument("to_monoid: word has negative powers");
  return Word::from_letters(Mode::monoid, w.letters());
}

inline Word to_group(const Word& w) {
  return Word::from_letters(Mode::group, w.letters());
}

// A finite working alphabet: per-tag generator counts. F_infinity / P_infinity
// are realized by choosing the counts at least as large as any index touched.
struct AlphabetSpec {
  Mode mode = Mode::group;
  int plain = 0;
  int alpha = 0;
  int e = 0;

  static AlphabetSpec group_plain(int k) { return {Mode::group, k, 0, 0}; }
  static AlphabetSpec monoid_plain(int k) { return {Mode::monoid, k, 0, 0}; }
  static AlphabetSpec split(Mode m, int n_alpha, int n_e) { return {m, 0, n_alpha, n_e}; }

  int total() const { return plain + alpha + e; }

  bool contains(Gen g) const {
    int n = g.tag == Tag::plain ? plain : (g.tag == Tag::alpha ? alpha : e);
    return g.index >= 1 && g.index <= n;
  }

  // Ascending generator order: plain, then alpha, then e (matches letter_order).
  std::vector<Gen> generators() const {
    std::vector<Gen> gs;
    gs.reserve(static_cast<std::size_t>(total()));
    for (int i = 1; i <= plain; ++i) gs.push_back(plain_gen(i));
    for (int i = 1; i <= alpha; ++i) gs.push_back(alpha_gen(i));
    for (int i = 1; i <= e; ++i) gs.push_back(e_gen(i));
    return gs;
  }

  bool compatible(const Word& w) const {
    if (w.mode() != mode) return false;
    for (const Letter& l : w.letters())
      if (!contains(l.gen)) return false;
    return true;
  }

  friend bool operator==(const AlphabetSpec&, const AlphabetSpec&) = default;
};

inline Word reduce(const AlphabetSpec& spec, std::vector<Letter> letters) {
  Word w = Word::from_letters(spec.mode, std::move(letters));
  if (!spec.compatible(w))
    throw std::invalid_argument("reduce: generator outside declared alphabet");
  return w;
}

// g_i |-> a^i b a^-i (group) or a^i b (monoid), over the plain two-letter
// alphabet a = g1, b = g2. These generate free copies of F_infinity in F_2
// and of P_infinity in P_2.
inline Word embed_generator(int i, Mode mode) {
  if (i < 1) throw std::invalid_argument("embed_generator: index must be >= 1");
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(mode == Mode::group ? 2 * i + 1 : i + 1));
  for (int t = 0; t < i; ++t) ls.push_back({plain_gen(1), +1});
  ls.push_back({plain_gen(2), +1});
  if (mode == Mode::group)
    for (int t = 0; t < i; ++t) ls.push_back({plain_gen(1), -1});
  return Word::from_letters(mode, std::move(ls));
}

// The induced homomorphism: substitutes embed_generator(i) for each g_i.
inline Word embed_word(const Word& w) {
  Word out = Word::identity(w.mode());
  for (const Letter& l : w.letters()) {
    Word img = embed_generator(l.gen.index, w.mode());
    if (l.sign < 0) img = inverse(img);
    out = concat(out, img);
  }
  return out;
}

// ---- Subset predicates and factorizations ---------------------------------

// Membership in e_j F_alpha (group) or e_j P_alpha (monoid): the word must be
// e_j followed by alpha letters only. j = 0 denotes the alpha sub-object
// itself and is admitted only when j_min == 0.
inline std::optional<int> kset_index(const Word& w, int j_min) {
  auto alpha_from = [&](std::size_t i0) {
    for (std::size_t i = i0; i < w.letters().size(); ++i)
      if (w.letters()[i].gen.tag != Tag::alpha) return false;
    return true;
  };
  if (!w.empty() && w.front().gen.tag == Tag::e && w.front().sign > 0 &&
      alpha_from(1)) {
    int j = w.front().gen.index;
    if (j >= (j_min < 1 ? 1 : j_min)) return j;
    return std::nullopt;
  }
  if (j_min == 0 && alpha_from(0)) return 0;
  return std::nullopt;
}

// P_alpha, the submonoid of P_2 generated by the blocks a^i b (i >= 1). The
// blocks form a prefix code, so membership and factorization are greedy.
inline bool starts_with_ablock(const Word& w) {
  const auto& ls = w.letters();
  std::size_t r = 0;
  while (r < ls.size() && ls[r].gen == plain_gen(1)) ++r;
  return r >= 1 && r < ls.size() && ls[r].gen == plain_gen(2);
}

inline bool is_ablock_word(const Word& w) {
  const auto& ls = w.letters();
  std::size_t pos = 0;
  while (pos < ls.size()) {
    std::size_t r = pos;
    while (r < ls.size() && ls[r].gen == plain_gen(1)) ++r;
    if (r == pos || r >= ls.size() || ls[r].gen != plain_gen(2)) return false;
    pos = r + 1;
  }
  return true;
}

class SubsetPredicate {
 public:
  enum class Kind {
    subgroup_first_n,   // letters drawn from the first n plain generators
    kset,               // union of e_j F_alpha / e_j P_alpha, j >= param
    coset,              // e_j F_alpha for the single j = param
    eset_first_n,       // first letter not among the first n plain generators
    submonoid_ablocks,  // P_alpha = <ab, a^2 b, ...> inside P_2
    eset_ablocks,       // no nonempty initial segment in P_alpha
    homogeneous,        // words of length exactly param
  };

  static SubsetPredicate subgroup_first_n(int n) { return {Kind::subgroup_first_n, n}; }
  static SubsetPredicate kset(int j_min) { return {Kind::kset, j_min}; }
  static SubsetPredicate coset(int j) { return {Kind::coset, j}; }
  static SubsetPredicate eset_first_n(int n) { return {Kind::eset_first_n, n}; }
  static SubsetPredicate submonoid_ablocks() { return {Kind::submonoid_ablocks, 0}; }
  static SubsetPredicate eset_ablocks() { return {Kind::eset_ablocks, 0}; }
  static SubsetPredicate homogeneous(int degree) { return {Kind::homogeneous, degree}; }

  Kind kind() const { return kind_; }
  int param() const { return param_; }

  bool contains(const Word& w) const {
    switch (kind_) {
      case Kind::subgroup_first_n:
        for (const Letter& l : w.letters())
          if (l.gen.tag != Tag::plain || l.gen.index > param_) return false;
        return true;
      case Kind::kset:
        return kset_index(w, param_).has_value();
      case Kind::coset: {
        auto j = kset_index(w, 0);
        return j.has_value() && *j == param_;
      }
      case Kind::eset_first_n:
        return w.empty() || w.front().gen.tag != Tag::plain ||
               w.front().gen.index > param_;
      case Kind::submonoid_ablocks:
        return is_ablock_word(w);
      case Kind::eset_ablocks:
        return !starts_with_ablock(w);
      case Kind::homogeneous:
        return w.length() == param_;
    }
    return false;
  }

 private:
  SubsetPredicate(Kind k, int p) : kind_(k), param_(p) {}
  Kind kind_;
  int param_;
};

inline bool classify(const Word& w, const SubsetPredicate& pred) {
  return pred.contains(w);
}

// The two partitions used by the complementation arguments: every monoid word
// factors uniquely as head * tail with head in the sub-monoid and tail in the
// matching E-set.
struct SubmonoidSplit {
  enum class Kind { first_n, ablocks };
  Kind kind;
  int n = 0;

  static SubmonoidSplit first_n(int n) { return {Kind::first_n, n}; }
  static SubmonoidSplit ablocks() { return {Kind::ablocks, 0}; }
};

inline std::optional<std::pair<Word, Word>> factor(const Word& w,
                                                   const SubmonoidSplit& split) {
  if (w.mode() != Mode::monoid) return std::nullopt;
  const auto& ls = w.letters();
  std::size_t pos = 0;
  if (split.kind == SubmonoidSplit::Kind::first_n) {
    while (pos < ls.size() && ls[pos].gen.tag == Tag::plain &&
           ls[pos].gen.index <= split.n)
      ++pos;
  } else {
    while (true) {
      std::size_t r = pos;
      while (r < ls.size() && ls[r].gen == plain_gen(1)) ++r;
      if (r > pos && r < ls.size() && ls[r].gen == plain_gen(2))
        pos = r + 1;
      else
        break;
    }
  }
  Word head = Word::from_letters(Mode::monoid,
                                 {ls.begin(), ls.begin() + static_cast<long>(pos)});
  Word tail = Word::from_letters(Mode::monoid,
                                 {ls.begin() + static_cast<long>(pos), ls.end()});
  return std::make_pair(std::move(head), std::move(tail));
}

// Preimage of a P_alpha word under the block embedding: a^{i_1} b ... a^{i_m} b
// maps back to g_{i_1} ... g_{i_m}.
inline Word ablock_preimage(const Word& w) {
  if (!is_ablock_word(w))
    throw std::invalid_argument("ablock_preimage: word not in the block submonoid");
  std::vector<Letter> out;
  const auto& ls = w.letters();
  std::size_t pos = 0;
  while (pos < ls.size()) {
    std::size_t r = pos;
    while (ls[r].gen == plain_gen(1)) ++r;
    out.push_back({plain_gen(static_cast<int>(r - pos)), +1});
    pos = r + 1;
  }
  return Word::from_letters(Mode::monoid, std::move(out));
}

// The vector e_x P_{-i} e_{-i} e_z: nonzero exactly when the reduced form of
// z does not begin with a positive power of e_i, in which case it equals the
// basis vector of the reduced word x e_i^{-1} z.
inline std::optional<Word> lemma7_action(const Word& x, int i, const Word& z) {
  if (x.mode() != Mode::group || z.mode() != Mode::group)
    throw std::invalid_argument("lemma7_action: group words required");
  for (const Letter& l : x.letters())
    if (l.gen.tag != Tag::alpha)
      throw std::invalid_argument("lemma7_action: x must lie in the alpha subgroup");
  if (!z.empty() && z.front() == Letter{e_gen(i), +1}) return std::nullopt;
  return concat(x, concat(Word::single(Mode::group, e_gen(i), -1), z));
}

// ---- Canonical textual form ------------------------------------------------

inline std::string gen_name(Gen g) {
  switch (g.tag) {
    case Tag::plain: return "g" + std::to_string(g.index);
    case Tag::alpha: return "al" + std::to_string(g.index);
    case Tag::e: return "e" + std::to_string(g.index);
  }
  return {};
}

// "1" for the identity; runs of a letter printed with ^n, inverses with ^-n.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += "*";
    out += gen_name(ls[i].gen);
    long run = static_cast<long>(j - i);
    if (ls[i].sign < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace fgn
