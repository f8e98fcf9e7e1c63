#pragma once

// Reduced words in the free group F_{m-1} sitting inside the pure braid
// group on m strands: generators x[m,i] for 1 <= i < m (the m-th strand
// looping once around strand i).  A letter is stored as +i or -i; the block
// m identifies which combing factor the word lives in.

#include <span>
#include <string>
#include <vector>

#include "magnus/braid_word.hpp"

namespace magnus {

class FreeWord {
 public:
  FreeWord() : block_(2) {}
  explicit FreeWord(int block) : block_(block) { check_block(); }
  FreeWord(int block, std::vector<int> letters) : block_(block) {
    check_block();
    letters_ = reduce(block, letters);
  }

  int block() const { return block_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.block_ <=> b.block_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  // Cancellation stack; the result is independent of cancellation order.
  static std::vector<int> reduce(int block, std::span<const int> letters) {
    std::vector<int> stack;
    stack.reserve(letters.size());
    for (int l : letters) {
      int idx = l < 0 ? -l : l;
      if (l == 0 || idx >= block)
        throw DomainError("free letter index " + std::to_string(idx) +
                          " out of range for block " + std::to_string(block));
      if (!stack.empty() && stack.back() == -l)
        stack.pop_back();
      else
        stack.push_back(l);
    }
    return stack;
  }

 private:
  void check_block() const {
    if (block_ < 2) throw DomainError("free word block must be at least 2");
  }

  int block_;
  std::vector<int> letters_;
};

inline FreeWord free_reduce(int block, std::span<const int> letters) {
  return FreeWord(block, std::vector<int>(letters.begin(), letters.end()));
}

inline FreeWord inverse(const FreeWord& w) {
  std::vector<int> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    ls.push_back(-*it);
  return FreeWord(w.block(), std::move(ls));
}

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.block() != v.block())
    throw DomainError("block mismatch in free word product");
  std::vector<int> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.block(), std::move(ls));
}

/// Realizes a free word as a braid word on k >= block strands, expanding
/// each letter x[m,i] through pure_gen_to_sigma(i, m, k).
inline BraidWord free_word_to_braid(const FreeWord& w, int k) {
  if (k < w.block())
    throw DomainError("strand count too small for free word block");
  BraidWord out(k);
  for (int l : w.letters()) {
    int i = l < 0 ? -l : l;
    BraidWord a = pure_gen_to_sigma(i, w.block(), k);
    out = concat(out, l > 0 ? a : inverse(a));
  }
  return out;
}

/// Text form used inside combed normal forms, e.g. "x[3,1]^-1 x[3,2]";
/// the empty word renders as "e".  Runs of equal letters collapse into
/// exponents.
inline std::string to_text(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t t = 0;
  const std::vector<int>& ls = w.letters();
  while (t < ls.size()) {
    std::size_t run = t;
    while (run < ls.size() && ls[run] == ls[t]) ++run;
    int idx = ls[t] < 0 ? -ls[t] : ls[t];
    long long exp = static_cast<long long>(run - t) * (ls[t] < 0 ? -1 : 1);
    if (!out.empty()) out += ' ';
    out += "x[" + std::to_string(w.block()) + "," + std::to_string(idx) + "]";
    if (exp != 1) out += "^" + std::to_string(exp);
    t = run;
  }
  return out;
}

}  // namespace magnus
