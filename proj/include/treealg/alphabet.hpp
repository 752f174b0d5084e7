#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace treealg {

/// A leaf label. Letters are single printable ASCII characters.
using Letter = char;

/// Reserved variable symbol of polynomials; never a member of an alphabet.
inline constexpr Letter kVariable = 'x';

/// Characters of the tree grammar rendering the shape alphabet.
inline constexpr char kOpen = '<';
inline constexpr char kDot = '*';
inline constexpr char kClose = '>';

/// Finite, nonempty, ordered alphabet. The order drives enumeration and
/// every "first failing pair" report, so it is part of the configuration.
class Alphabet {
 public:
  /// Throws InvalidAlphabet on empty input, duplicates, whitespace,
  /// non-printable characters, the shape characters or the variable `x`.
  explicit Alphabet(std::string_view symbols = "abc");

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  Letter operator[](std::size_t i) const { return symbols_[i]; }

  bool contains(Letter c) const noexcept { return rank_[static_cast<unsigned char>(c)] >= 0; }

  /// Position of `c` in the configured order, or nullopt when absent.
  std::optional<std::size_t> index_of(Letter c) const noexcept;

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> rank_{};
};

}  // namespace treealg
