#pragma once

// The graded algebra of chord diagrams on k strands in the sorted-diagram
// basis.  A monomial is a list of chords X[m,i] (a horizontal chord between
// strands m and i, i < m) grouped by upper strand in descending block
// order; within one block the order of chords is meaningful (the block
// algebra is a non-commutative power series ring), across blocks chords
// commute.  Series are truncated at an explicit degree.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magnus/big_int.hpp"
#include "magnus/braid_word.hpp"

namespace magnus {

struct Chord {
  int upper = 2;
  int lower = 1;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord& a, const Chord& b) {
    if (auto c = a.upper <=> b.upper; c != 0) return c;
    return a.lower <=> b.lower;
  }
};

class ChordMonomial {
 public:
  ChordMonomial() = default;
  /// Canonicalizes by stable-sorting into descending blocks; within a block
  /// the given order is kept.
  explicit ChordMonomial(std::vector<Chord> chords) : chords_(std::move(chords)) {
    for (const Chord& c : chords_)
      if (c.lower < 1 || c.lower >= c.upper)
        throw DomainError("chord must satisfy 1 <= lower < upper");
    std::stable_sort(chords_.begin(), chords_.end(),
                     [](const Chord& a, const Chord& b) { return a.upper > b.upper; });
  }

  const std::vector<Chord>& chords() const { return chords_; }
  int degree() const { return static_cast<int>(chords_.size()); }

  /// Largest strand index used (0 for the empty monomial).
  int max_strand() const {
    int m = 0;
    for (const Chord& c : chords_) m = std::max(m, c.upper);
    return m;
  }

  /// Product of canonical monomials: per block, this monomial's run comes
  /// first, then the other's.
  ChordMonomial operator*(const ChordMonomial& o) const {
    std::vector<Chord> merged;
    merged.reserve(chords_.size() + o.chords_.size());
    std::size_t a = 0, b = 0;
    while (a < chords_.size() || b < o.chords_.size()) {
      if (b >= o.chords_.size() ||
          (a < chords_.size() && chords_[a].upper >= o.chords_[b].upper))
        merged.push_back(chords_[a++]);
      else
        merged.push_back(o.chords_[b++]);
    }
    ChordMonomial out;
    out.chords_ = std::move(merged);  // already canonical
    return out;
  }

  friend bool operator==(const ChordMonomial&, const ChordMonomial&) = default;

 private:
  std::vector<Chord> chords_;
};

/// Graded-lexicographic order: by degree, then lexicographically on the
/// chord list.  This is the canonical term order for output and storage.
struct MonomialOrder {
  bool operator()(const ChordMonomial& a, const ChordMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.chords().begin(), a.chords().end(),
                                        b.chords().begin(), b.chords().end());
  }
};

class ChordSeries {
 public:
  using TermMap = std::map<ChordMonomial, BigInt, MonomialOrder>;

  ChordSeries(int strands, int trunc) : strands_(strands), trunc_(trunc) {
    if (strands < 1) throw DomainError("strand count must be at least 1");
    if (trunc < 0) throw DomainError("truncation degree must be non-negative");
  }

  static ChordSeries one(int strands, int trunc) {
    ChordSeries s(strands, trunc);
    s.add(ChordMonomial{}, 1);
    return s;
  }
  static ChordSeries zero(int strands, int trunc) {
    return ChordSeries(strands, trunc);
  }

  int strands() const { return strands_; }
  int trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const ChordMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Adds c * m, dropping the term if it exceeds the truncation or cancels.
  void add(const ChordMonomial& m, const BigInt& c) {
    if (m.degree() > trunc_ || c == 0) return;
    if (m.max_strand() > strands_)
      throw DomainError("chord strand index exceeds series strand count");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ChordSeries& operator+=(const ChordSeries& o) {
    if (o.strands_ != strands_)
      throw DomainError("strand count mismatch in series sum");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }

  ChordSeries& scale(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend bool operator==(const ChordSeries&, const ChordSeries&) = default;

 private:
  int strands_;
  int trunc_;
  TermMap terms_;
};

/// Bilinear product; the result is truncated at the smaller of the two
/// truncation degrees.
inline ChordSeries series_mul(const ChordSeries& a, const ChordSeries& b) {
  if (a.strands() != b.strands())
    throw DomainError("strand count mismatch in series product");
  ChordSeries out(a.strands(), std::min(a.trunc(), b.trunc()));
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > out.trunc()) break;  // graded order: nothing smaller follows
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > out.trunc()) break;
      out.add(ma * mb, ca * cb);
    }
  }
  return out;
}

/// Smallest degree carrying a nonzero coefficient; nullopt for the zero
/// series.
inline std::optional<int> min_degree(const ChordSeries& s) {
  if (s.terms().empty()) return std::nullopt;
  return s.terms().begin()->first.degree();
}

/// All sorted-diagram monomials of degree exactly n on k strands in
/// canonical order.
inline std::vector<ChordMonomial> monomial_basis(int k, int n) {
  if (k < 1 || n < 0) throw DomainError("monomial_basis requires k >= 1, n >= 0");
  std::vector<ChordMonomial> out;
  std::vector<Chord> cur;
  cur.reserve(static_cast<std::size_t>(n));
  // Blocks descend from k to 2; within block m each of the n_m chords has a
  // free lower index in [1, m-1].
  auto rec = [&](auto&& self, int block, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (block < 2) return;
    auto extend = [&](auto&& ext, int left) -> void {
      if (left == 0) {
        self(self, block - 1, 0);
        return;
      }
      self(self, block - 1, left);  // (handled below via loop over counts)
      (void)ext;
    };
    (void)extend;
    for (int take = 0; take <= remaining; ++take) {
      // enumerate all length-`take` lower-index sequences for this block
      std::vector<int> lowers(static_cast<std::size_t>(take), 1);
      bool done = take == 0;
      while (true) {
        for (int l : lowers) cur.push_back(Chord{block, l});
        self(self, block - 1, remaining - take);
        cur.resize(cur.size() - static_cast<std::size_t>(take));
        if (done) break;
        // next sequence in lexicographic order
        int t = take - 1;
        while (t >= 0 && lowers[static_cast<std::size_t>(t)] == block - 1) {
          lowers[static_cast<std::size_t>(t)] = 1;
          --t;
        }
        if (t < 0) break;
        ++lowers[static_cast<std::size_t>(t)];
      }
      if (take == 0 && remaining > 0 && block == 2) break;
    }
  };
  rec(rec, k, n);
  std::sort(out.begin(), out.end(), [](const ChordMonomial& a, const ChordMonomial& b) {
    return MonomialOrder{}(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// External product: a on k strands placed to the left of b on l strands.
/// b's chords shift up by k; shifted blocks all exceed k, so they lead in
/// canonical order.
inline ChordSeries external_product(const ChordSeries& a, const ChordSeries& b) {
  ChordSeries out(a.strands() + b.strands(), std::min(a.trunc(), b.trunc()));
  const int k = a.strands();
  for (const auto& [mb, cb] : b.terms()) {
    std::vector<Chord> shifted = mb.chords();
    for (Chord& c : shifted) {
      c.upper += k;
      c.lower += k;
    }
    ChordMonomial mshift(std::move(shifted));
    for (const auto& [ma, ca] : a.terms()) {
      if (ma.degree() + mshift.degree() > out.trunc()) break;
      out.add(mshift * ma, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string to_text(const ChordMonomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  const std::vector<Chord>& cs = m.chords();
  std::size_t t = 0;
  while (t < cs.size()) {
    std::size_t run = t;
    while (run < cs.size() && cs[run] == cs[t]) ++run;
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(cs[t].upper) + "," +
           std::to_string(cs[t].lower) + "]";
    if (run - t > 1) out += "^" + std::to_string(run - t);
    t = run;
  }
  return out;
}

inline std::string to_text(const ChordSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = to_text(m);
    if (mag != 1 || m.degree() == 0) {
      out += mag.str();
      if (m.degree() > 0) out += " " + mono;
    } else {
      out += mono;
    }
  }
  return out;
}

/// Sorted-diagram picture: k strand columns, one chord per row.
inline std::string render_diagram(const ChordMonomial& m, int k) {
  if (m.max_strand() > k) throw DomainError("monomial does not fit on k strands");
  auto bar_row = [&] {
    std::string row;
    for (int c = 1; c <= k; ++c) {
      row += '|';
      if (c < k) row += ' ';
    }
    return row;
  };
  std::string out = bar_row();
  for (const Chord& ch : m.chords()) {
    out += '\n';
    for (int c = 1; c <= k; ++c) {
      if (c == ch.lower || c == ch.upper)
        out += '+';
      else if (c > ch.lower && c < ch.upper)
        out += '-';
      else
        out += '|';
      if (c < k) out += (c >= ch.lower && c < ch.upper) ? '-' : ' ';
    }
  }
  out += '\n';
  out += bar_row();
  return out;
}

}  // namespace magnus
