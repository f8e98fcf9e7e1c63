#pragma once

// The action of the braid group B_k on the rank-k free group, realized as
// conjugation inside B_{k+1}: the free group is generated by the loops
// x[k+1,1..k] of an extra strand on the right, and conjugation by a
// generator s_i obeys
//
//     s_i   :  x_i |-> x_{i+1},   x_{i+1} |-> x_{i+1}^-1 x_i x_{i+1}
//     s_i^-1:  x_i |-> x_i x_{i+1} x_i^-1,   x_{i+1} |-> x_i
//
// with all other generators fixed.  Composition is fixed so that
// artin_action(uv, y) = artin_action(u, artin_action(v, y)).

#include <vector>

#include "magnus/braid_word.hpp"
#include "magnus/free_word.hpp"

namespace magnus {

namespace detail {

// Appends a letter to a reduction stack.
inline void push_reduced(std::vector<int>& stack, int letter) {
  if (!stack.empty() && stack.back() == -letter)
    stack.pop_back();
  else
    stack.push_back(letter);
}

inline void push_reduced(std::vector<int>& stack, const std::vector<int>& w,
                         bool invert) {
  if (!invert) {
    for (int l : w) push_reduced(stack, l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(stack, -*it);
  }
}

// In-place substitution for one conjugating letter s_i^sign.
inline std::vector<int> apply_sigma(const std::vector<int>& word, int i,
                                    int sign) {
  std::vector<int> out;
  out.reserve(word.size() + 2);
  for (int l : word) {
    int idx = l < 0 ? -l : l;
    bool inv = l < 0;
    if (sign > 0) {
      if (idx == i) {
        push_reduced(out, inv ? -(i + 1) : (i + 1));
      } else if (idx == i + 1) {
        if (!inv) {
          push_reduced(out, -(i + 1));
          push_reduced(out, i);
          push_reduced(out, i + 1);
        } else {
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
          push_reduced(out, i + 1);
        }
      } else {
        push_reduced(out, l);
      }
    } else {
      if (idx == i) {
        if (!inv) {
          push_reduced(out, i);
          push_reduced(out, i + 1);
          push_reduced(out, -i);
        } else {
          push_reduced(out, i);
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
        }
      } else if (idx == i + 1) {
        push_reduced(out, inv ? -i : i);
      } else {
        push_reduced(out, l);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Conjugation by w of a free word y; y lives in block w.strands()+1 and may
/// only use indices up to w.strands().
inline FreeWord artin_action(const BraidWord& w, const FreeWord& y) {
  if (y.block() != w.strands() + 1)
    throw DomainError("free word block must be strand count + 1");
  BraidWord sw = to_sigma_word(w);
  std::vector<int> cur = y.letters();
  // c_{l1...ln} = c_{l1} o ... o c_{ln}: apply the last letter first.
  for (auto it = sw.letters().rbegin(); it != sw.letters().rend(); ++it)
    cur = detail::apply_sigma(cur, it->i, it->sign);
  return FreeWord(y.block(), std::move(cur));
}

/// True iff w acts as the identity automorphism.  The action is faithful,
/// so this decides the word problem for braid words.
inline bool acts_trivially(const BraidWord& w) {
  if (!is_pure(w)) return false;
  int k = w.strands();
  for (int i = 1; i <= k; ++i) {
    FreeWord gen(k + 1, {i});
    if (artin_action(w, gen) != gen) return false;
  }
  return true;
}

}  // namespace magnus
