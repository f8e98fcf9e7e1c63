#pragma once

// Words in the full braid group B_k: generators s_i (crossings), pure
// generators a[i,j] (one strand looping around another), and singular
// letters t_i (double points).  Words are stored flat; exponent syntax in
// the text grammar is sugar only.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magnus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed word text; `position` is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Index or strand-count violation.
struct DomainError : Error {
  using Error::Error;
};

/// A pure braid was required.
struct PurityError : Error {
  using Error::Error;
};

/// A singular letter appeared where none is allowed.
struct SingularLetterError : Error {
  using Error::Error;
};

enum class LetterKind { Sigma, Pure, Singular };

struct BraidLetter {
  LetterKind kind;
  int i = 0;     // Sigma/Singular: generator index; Pure: lower strand
  int j = 0;     // Pure only: upper strand (i < j)
  int sign = 1;  // +1 or -1; Singular letters are always +1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

inline BraidLetter sigma(int i, int sign = 1) {
  return {LetterKind::Sigma, i, 0, sign};
}
inline BraidLetter pure_gen(int i, int j, int sign = 1) {
  return {LetterKind::Pure, i, j, sign};
}
inline BraidLetter singular(int i) { return {LetterKind::Singular, i, 0, 1}; }

class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
  BraidWord(int strands, std::vector<BraidLetter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (const BraidLetter& l : letters_) check_letter(l);
  }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool has_singular() const {
    for (const BraidLetter& l : letters_)
      if (l.kind == LetterKind::Singular) return true;
    return false;
  }

  std::size_t count_singular() const {
    std::size_t n = 0;
    for (const BraidLetter& l : letters_)
      if (l.kind == LetterKind::Singular) ++n;
    return n;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_strands() const {
    if (strands_ < 1) throw DomainError("strand count must be at least 1");
  }
  void check_letter(const BraidLetter& l) const {
    switch (l.kind) {
      case LetterKind::Sigma:
      case LetterKind::Singular:
        if (l.i < 1 || l.i >= strands_)
          throw DomainError("generator index " + std::to_string(l.i) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
        break;
      case LetterKind::Pure:
        if (l.i < 1 || l.j <= l.i || l.j > strands_)
          throw DomainError("pure generator a[" + std::to_string(l.i) + "," +
                            std::to_string(l.j) + "] out of range for " +
                            std::to_string(strands_) + " strands");
        break;
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
    if (l.kind == LetterKind::Singular && l.sign != 1)
      throw DomainError("singular letters carry no sign");
  }

  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Word concatenation (same strand count).
inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw DomainError("strand count mismatch in braid product");
  std::vector<BraidLetter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(ls));
}

/// Exact inverse: the reversed word with flipped signs.  Not defined for
/// singular words.
inline BraidWord inverse(const BraidWord& w) {
  std::vector<BraidLetter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->kind == LetterKind::Singular)
      throw SingularLetterError("singular braid words have no inverse");
    BraidLetter l = *it;
    l.sign = -l.sign;
    ls.push_back(l);
  }
  return BraidWord(w.strands(), std::move(ls));
}

/// a[i,j] as a sigma word on k strands:
///   (s_{j-1} s_{j-2} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1).
inline BraidWord pure_gen_to_sigma(int i, int j, int k) {
  if (!(1 <= i && i < j && j <= k))
    throw DomainError("pure generator a[" + std::to_string(i) + "," +
                      std::to_string(j) + "] out of range for " +
                      std::to_string(k) + " strands");
  std::vector<BraidLetter> ls;
  ls.reserve(static_cast<std::size_t>(2 * (j - i)));
  for (int t = j - 1; t > i; --t) ls.push_back(sigma(t, 1));
  ls.push_back(sigma(i, 1));
  ls.push_back(sigma(i, 1));
  for (int t = i + 1; t < j; ++t) ls.push_back(sigma(t, -1));
  return BraidWord(k, std::move(ls));
}

/// Expands Pure letters into their sigma words; rejects singular letters.
inline BraidWord to_sigma_word(const BraidWord& w) {
  std::vector<BraidLetter> ls;
  ls.reserve(w.size());
  for (const BraidLetter& l : w.letters()) {
    switch (l.kind) {
      case LetterKind::Sigma:
        ls.push_back(l);
        break;
      case LetterKind::Pure: {
        BraidWord a = pure_gen_to_sigma(l.i, l.j, w.strands());
        if (l.sign > 0)
          ls.insert(ls.end(), a.letters().begin(), a.letters().end());
        else {
          BraidWord ai = inverse(a);
          ls.insert(ls.end(), ai.letters().begin(), ai.letters().end());
        }
        break;
      }
      case LetterKind::Singular:
        throw SingularLetterError("operation not defined for singular words");
    }
  }
  return BraidWord(w.strands(), std::move(ls));
}

/// Underlying permutation as images: position p at the top ends at
/// images[p-1] at the bottom.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int k) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(k));
    for (int t = 1; t <= k; ++t) p.images[static_cast<std::size_t>(t - 1)] = t;
    return p;
  }

  bool is_identity() const {
    for (std::size_t t = 0; t < images.size(); ++t)
      if (images[t] != static_cast<int>(t) + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

namespace detail {

// Permutation with a choice of how singular letters count.  A double point
// is a transversal intersection, so t_i exchanges the two strands.
inline Permutation permutation_impl(const BraidWord& w, bool allow_singular) {
  Permutation p = Permutation::identity(w.strands());
  for (const BraidLetter& l : w.letters()) {
    int idx;
    switch (l.kind) {
      case LetterKind::Sigma:
        idx = l.i;
        break;
      case LetterKind::Singular:
        if (!allow_singular)
          throw SingularLetterError("permutation of a singular word");
        idx = l.i;
        break;
      case LetterKind::Pure:
        continue;  // pure generators contribute the identity
    }
    for (int& image : p.images)
      if (image == idx)
        image = idx + 1;
      else if (image == idx + 1)
        image = idx;
  }
  return p;
}

}  // namespace detail

inline Permutation permutation_of(const BraidWord& w) {
  return detail::permutation_impl(w, /*allow_singular=*/false);
}

inline bool is_pure(const BraidWord& w) {
  return permutation_of(w).is_identity();
}

/// Adds a vertical, non-interacting strand on the right.
inline BraidWord embed(const BraidWord& w) {
  return BraidWord(w.strands() + 1, w.letters());
}

/// Forgets the strand that starts at position s.  Pure letters are expanded
/// first; the scan tracks the deleted strand's position and renumbers the
/// remaining crossings.
inline BraidWord delete_strand(const BraidWord& w, int s) {
  if (s < 1 || s > w.strands())
    throw DomainError("strand index " + std::to_string(s) + " out of range");
  if (w.strands() == 1) return BraidWord(1);
  BraidWord sw = to_sigma_word(w);
  std::vector<BraidLetter> kept;
  kept.reserve(sw.size());
  int p = s;
  for (const BraidLetter& l : sw.letters()) {
    if (l.i == p) {
      p += 1;  // crossing with the strand on the right
    } else if (l.i == p - 1) {
      p -= 1;  // crossing with the strand on the left
    } else if (l.i + 1 < p) {
      kept.push_back(l);
    } else {  // l.i > p
      kept.push_back(sigma(l.i - 1, l.sign));
    }
  }
  return BraidWord(w.strands() - 1, std::move(kept));
}

// ---------------------------------------------------------------------------
// Text grammar:  word := term*;  term := atom ('^' int)?;
//                atom := 's' int | 'a[' int ',' int ']' | 't' int
// Whitespace is insignificant everywhere; negative exponents mean inverses;
// 't' atoms admit no exponent other than 1.

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, int strands)
      : text_(text), strands_(strands) {}

  BraidWord parse() {
    std::vector<BraidLetter> letters;
    skip_ws();
    while (pos_ < text_.size()) {
      parse_term(letters);
      skip_ws();
    }
    return BraidWord(strands_, std::move(letters));
  }

 private:
  void parse_term(std::vector<BraidLetter>& out) {
    std::size_t at = pos_;
    char c = text_[pos_++];
    BraidLetter base;
    switch (c) {
      case 's':
        base = sigma(parse_int(), 1);
        break;
      case 't':
        base = singular(parse_int());
        break;
      case 'a': {
        expect('[');
        int lo = parse_int();
        expect(',');
        int hi = parse_int();
        expect(']');
        base = pure_gen(lo, hi, 1);
        break;
      }
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
    check_range(base, at);
    long long exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exp = parse_int(/*allow_sign=*/true);
      if (base.kind == LetterKind::Singular && exp != 1)
        throw ParseError("singular letters admit no exponent other than 1", at);
    }
    BraidLetter l = base;
    if (exp < 0) l.sign = -l.sign;
    for (long long t = 0; t < (exp < 0 ? -exp : exp); ++t) out.push_back(l);
  }

  void check_range(const BraidLetter& l, std::size_t at) const {
    if (l.kind == LetterKind::Pure) {
      if (!(1 <= l.i && l.i < l.j && l.j <= strands_))
        throw ParseError("pure generator a[" + std::to_string(l.i) + "," +
                             std::to_string(l.j) + "] out of range for " +
                             std::to_string(strands_) + " strands",
                         at);
    } else if (l.i < 1 || l.i >= strands_) {
      throw ParseError("generator index " + std::to_string(l.i) +
                           " out of range for " + std::to_string(strands_) +
                           " strands",
                       at);
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long long parse_int(bool allow_sign = false) {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      throw ParseError("expected an integer", at);
    long long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000LL) throw ParseError("integer too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BraidWord parse_braid(std::string_view text, int strands) {
  return detail::WordParser(text, strands).parse();
}

/// Renders a word back into grammar text (one token per letter).
inline std::string to_text(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case LetterKind::Sigma:
        out += 's' + std::to_string(l.i);
        break;
      case LetterKind::Pure:
        out += "a[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
        break;
      case LetterKind::Singular:
        out += 't' + std::to_string(l.i);
        break;
    }
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace magnus
