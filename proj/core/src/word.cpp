#include "gaintrail/word.hpp"

#include <stdexcept>

namespace gaintrail {

Word concat(const Word& w1, const Word& w2) {
  std::vector<Symbol> out;
  out.reserve(w1.size() + w2.size());
  out.insert(out.end(), w1.symbols().begin(), w1.symbols().end());
  out.insert(out.end(), w2.symbols().begin(), w2.symbols().end());
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    out.push_back(Symbol{it->gen, !it->inverse});
  }
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Symbol> stack;
  stack.reserve(w.size());
  for (const Symbol& s : w.symbols()) {
    if (!stack.empty() && stack.back().gen == s.gen && stack.back().inverse != s.inverse) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word make_word(std::initializer_list<std::int32_t> signed_gens) {
  std::vector<Symbol> out;
  out.reserve(signed_gens.size());
  for (std::int32_t g : signed_gens) {
    if (g == 0) throw std::invalid_argument("generator id 0 is not a symbol");
    out.push_back(g > 0 ? Symbol{static_cast<std::uint32_t>(g), false}
                        : Symbol{static_cast<std::uint32_t>(-g), true});
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Symbol& s : w.symbols()) {
    if (!out.empty()) out += ' ';
    out += s.inverse ? '-' : '+';
    out += std::to_string(s.gen);
  }
  return out;
}

}  // namespace gaintrail
