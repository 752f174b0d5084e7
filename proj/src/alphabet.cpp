#include "treealg/alphabet.hpp"

#include <cctype>

#include "treealg/errors.hpp"

namespace treealg {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  rank_.fill(-1);
  if (symbols_.empty()) throw InvalidAlphabet("alphabet must contain at least one letter");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[i]);
    if (c >= 0x80 || !std::isgraph(c))
      throw InvalidAlphabet("alphabet letters must be printable ASCII", {std::string(1, symbols_[i])});
    if (c == kOpen || c == kDot || c == kClose)
      throw InvalidAlphabet("alphabet must be disjoint from the shape symbols '<', '*', '>'",
                            {std::string(1, symbols_[i])});
    if (c == kVariable) throw InvalidAlphabet("'x' is reserved for the polynomial variable", {"x"});
    if (rank_[c] >= 0) throw InvalidAlphabet("duplicate alphabet letter", {std::string(1, symbols_[i])});
    rank_[c] = static_cast<int>(i);
  }
}

std::optional<std::size_t> Alphabet::index_of(Letter c) const noexcept {
  const int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

}  // namespace treealg
