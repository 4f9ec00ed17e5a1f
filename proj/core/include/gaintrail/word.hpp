#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gaintrail {

/// One formal symbol: a 1-based generator id, possibly inverted.
struct Symbol {
  std::uint32_t gen = 1;
  bool inverse = false;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// A formal word over group generators and their inverses. The empty word
/// denotes the identity. Words are never reduced implicitly; callers apply
/// free_reduce where they want shorter representatives.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  void push(Symbol s) { symbols_.push_back(s); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// w1 followed by w2, no reduction.
Word concat(const Word& w1, const Word& w2);

/// Symbols reversed with signs flipped.
Word invert(const Word& w);

/// Deletes adjacent formally-inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Builds a word from signed generator ids, e.g. make_word({+1, -2}).
Word make_word(std::initializer_list<std::int32_t> signed_gens);

/// Numeric token form, e.g. "+1 -2"; the empty word renders as "".
std::string to_string(const Word& w);

}  // namespace gaintrail
