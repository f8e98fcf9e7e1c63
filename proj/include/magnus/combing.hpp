#pragma once

// Artin combing: the unique factorization of a pure braid on k strands as
// beta_{k-1} ... beta_1 with beta_i a reduced word in the free group F_i.
// Peeling one strand at a time realizes the iterated split extensions
// P_k = F_{k-1} x| P_{k-1}.

#include <string>
#include <utility>
#include <vector>

#include "magnus/artin_action.hpp"
#include "magnus/braid_word.hpp"
#include "magnus/free_word.hpp"

namespace magnus {

/// The input braid word is not in the kernel of the forgetful map.
struct KernelError : Error {
  using Error::Error;
};

/// Artin normal form.  factors()[t] is the block-(k-t) factor, so the list
/// runs beta_{k-1}, ..., beta_1; the all-empty tuple is the trivial braid.
class CombedBraid {
 public:
  explicit CombedBraid(int strands) : strands_(strands) {
    if (strands < 1) throw DomainError("strand count must be at least 1");
    for (int m = strands; m >= 2; --m) factors_.emplace_back(m);
  }
  CombedBraid(int strands, std::vector<FreeWord> factors)
      : strands_(strands), factors_(std::move(factors)) {
    if (strands < 1) throw DomainError("strand count must be at least 1");
    if (factors_.size() != static_cast<std::size_t>(strands - 1))
      throw DomainError("a combed braid on k strands has k-1 factors");
    for (std::size_t t = 0; t < factors_.size(); ++t)
      if (factors_[t].block() != strands - static_cast<int>(t))
        throw DomainError("combed factor blocks must descend from k to 2");
  }

  int strands() const { return strands_; }
  const std::vector<FreeWord>& factors() const { return factors_; }

  /// Factor in F_{m-1} (block m), 2 <= m <= strands.
  const FreeWord& factor(int m) const {
    if (m < 2 || m > strands_) throw DomainError("factor block out of range");
    return factors_[static_cast<std::size_t>(strands_ - m)];
  }

  bool trivial() const {
    for (const FreeWord& f : factors_)
      if (!f.empty()) return false;
    return true;
  }

  friend bool operator==(const CombedBraid&, const CombedBraid&) = default;
  friend auto operator<=>(const CombedBraid& a, const CombedBraid& b) {
    if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
    return a.factors_ <=> b.factors_;
  }

 private:
  int strands_;
  std::vector<FreeWord> factors_;
};

namespace detail {

// Scans a sigma word on m strands whose distinguished strand starts (and,
// for pure inputs, ends) at position m, and splits it as a kernel word in
// x[m,*] times an embedded braid on m-1 strands.
//
// Walking the word with the distinguished strand at position p, a letter
// s_j^e falls into one of four cases against the coset transversal
// U_p = s_{m-1} ... s_p:
//
//   j = p   : the strand crosses to the right; e = +1 contributes the
//             kernel generator x[m,p], e = -1 cancels into the transversal.
//   j = p-1 : the strand crosses to the left; e = -1 contributes
//             x[m,p-1]^-1, e = +1 cancels.
//   otherwise the letter descends to the quotient braid (index shifted
//             down by one when j > p).
//
// Kernel letters picked up after quotient letters r_1...r_t enter the
// product conjugated by them, so the scan keeps the images of the free
// generators under the accumulated action up to date and emits those.
struct StrandSplit {
  FreeWord kernel;
  BraidWord quotient;
  bool action_trivial;  // accumulated quotient action is the identity
};

inline StrandSplit split_last_strand(const BraidWord& w) {
  const int m = w.strands();
  BraidWord sw = to_sigma_word(w);
  std::vector<std::vector<int>> img(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) img[static_cast<std::size_t>(i)] = {i};
  std::vector<int> out;
  std::vector<BraidLetter> quotient;
  int p = m;
  for (const BraidLetter& l : sw.letters()) {
    if (l.i == p) {
      if (l.sign > 0) push_reduced(out, img[static_cast<std::size_t>(l.i)], false);
      p += 1;
    } else if (l.i == p - 1) {
      if (l.sign < 0) push_reduced(out, img[static_cast<std::size_t>(l.i)], true);
      p -= 1;
    } else {
      int j = l.i + 1 < p ? l.i : l.i - 1;
      quotient.push_back(sigma(j, l.sign));
      // Extend the accumulated action on the right: only the images of
      // x_j and x_{j+1} change.
      auto& a = img[static_cast<std::size_t>(j)];
      auto& b = img[static_cast<std::size_t>(j + 1)];
      if (l.sign > 0) {
        std::vector<int> nb;
        nb.reserve(2 * b.size() + a.size());
        push_reduced(nb, b, true);
        push_reduced(nb, a, false);
        push_reduced(nb, b, false);
        a = b;
        b = std::move(nb);
      } else {
        std::vector<int> na;
        na.reserve(2 * a.size() + b.size());
        push_reduced(na, a, false);
        push_reduced(na, b, false);
        push_reduced(na, a, true);
        b = a;
        a = std::move(na);
      }
    }
  }
  if (p != m)
    throw PurityError("the last strand does not return to its position");
  bool trivial_action = true;
  for (int i = 1; i < m && trivial_action; ++i) {
    const auto& v = img[static_cast<std::size_t>(i)];
    trivial_action = v.size() == 1 && v[0] == i;
  }
  return {FreeWord(m, std::move(out)), BraidWord(m - 1, std::move(quotient)),
          trivial_action};
}

}  // namespace detail

/// Expresses a braid word on m strands lying in the kernel of the forgetful
/// map P_m -> P_{m-1} as a reduced word in the kernel generators x[m,i].
/// Inputs outside the kernel are rejected: the residual quotient braid must
/// act trivially on the free group, which by faithfulness of the action
/// pins it to the trivial braid.
inline FreeWord kernel_to_free(const BraidWord& g, int m) {
  if (g.strands() != m)
    throw DomainError("kernel word must live on m strands");
  if (m < 2) throw DomainError("kernel extraction needs at least 2 strands");
  detail::StrandSplit s = detail::split_last_strand(g);
  if (!s.action_trivial)
    throw KernelError("word is not in the kernel of the forgetful map");
  return s.kernel;
}

/// Artin normal form of a pure braid.
inline CombedBraid comb(const BraidWord& w) {
  if (w.has_singular())
    throw SingularLetterError("cannot comb a singular word");
  if (!is_pure(w)) throw PurityError("cannot comb a non-pure braid");
  const int k = w.strands();
  std::vector<FreeWord> factors;
  factors.reserve(static_cast<std::size_t>(k - 1));
  BraidWord cur = w;
  for (int m = k; m >= 2; --m) {
    BraidWord r = delete_strand(cur, m);
    BraidWord g = concat(cur, inverse(embed(r)));
    factors.push_back(kernel_to_free(g, m));
    cur = std::move(r);
  }
  return CombedBraid(k, std::move(factors));
}

/// Inverse direction: concatenates the sigma expansions of each factor
/// letter, beta_{k-1} first.
inline BraidWord combed_to_braid(const CombedBraid& c) {
  BraidWord out(c.strands());
  for (const FreeWord& f : c.factors())
    out = concat(out, free_word_to_braid(f, c.strands()));
  return out;
}

/// "x[3,1]^-1 x[3,2] ; x[2,1]": semicolon-separated factors, highest block
/// first, empty factor written "e".
inline std::string to_text(const CombedBraid& c) {
  std::string out;
  for (const FreeWord& f : c.factors()) {
    if (!out.empty()) out += " ; ";
    out += to_text(f);
  }
  if (out.empty()) out = "e";  // one-strand braid
  return out;
}

}  // namespace magnus
