#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twistcolor/core.hpp"

namespace twistcolor {

/// A finite binary operation table a * b on {0..n-1}, stored row-major
/// (entry a*n+b). Construction only checks the shape; use check_quandle for
/// the axioms.
class FiniteQuandle {
 public:
  FiniteQuandle(std::size_t n, std::vector<Elem> table);
  static FiniteQuandle from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t size() const noexcept { return n_; }
  Elem op(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  /// a *bar b, the unique c with c * b = a. Throws precondition when the
  /// table is not right-invertible.
  Elem dual_op(Elem a, Elem b) const;
  bool right_invertible() const noexcept { return dual_.has_value(); }

  const std::vector<Elem>& table() const noexcept { return table_; }
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<Elem> table_;
  std::optional<std::vector<Elem>> dual_;
};

/// Z/nZ with a * b = 2b - a.
FiniteQuandle make_dihedral_quandle(std::size_t n);
/// Z/nZ with a * b = t a + (1 - t) b; t must be a unit mod n.
FiniteQuandle make_alexander_quandle(std::size_t n, std::int64_t t);

/// Reports "idempotent" (witness a), "right-invertible" (witness b, a1, a2
/// with a1*b = a2*b) and "distributive" (witness a, b, c).
AxiomReport check_quandle(const FiniteQuandle& q);

FiniteQuandle dual_quandle(const FiniteQuandle& q);
bool is_involutory(const FiniteQuandle& q);

struct WordLetter {
  Elem element;
  int exponent;  // +1 applies *, -1 applies *bar
};
using Word = std::vector<WordLetter>;

/// base^{w}: letters applied left to right.
Elem eval_word(const FiniteQuandle& q, Elem base, std::span<const WordLetter> word);

/// The word (u v)^reps as letters with exponent +1, optionally followed by
/// a trailing letter.
Word alternating_word(Elem u, Elem v, std::size_t reps, std::optional<Elem> tail = std::nullopt);

}  // namespace twistcolor
