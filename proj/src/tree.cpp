#include "treealg/tree.hpp"

#include <algorithm>
#include <vector>

#include "treealg/errors.hpp"

namespace treealg {

namespace {

std::size_t mix(std::size_t h) noexcept {
  // splitmix64 finalizer
  std::uint64_t z = h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

int xi_rank(char c) noexcept {
  switch (c) {
    case kOpen: return 0;
    case kDot: return 1;
    case kClose: return 2;
    default: return 3;
  }
}

void encode_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back(t.letter());
    return;
  }
  out.push_back(kOpen);
  encode_into(t.left(), out);
  out.push_back(kDot);
  encode_into(t.right(), out);
  out.push_back(kClose);
}

void skeleton_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) return;
  out.push_back(kOpen);
  skeleton_into(t.left(), out);
  out.push_back(kDot);
  skeleton_into(t.right(), out);
  out.push_back(kClose);
}

void foliage_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back(t.letter());
    return;
  }
  foliage_into(t.left(), out);
  foliage_into(t.right(), out);
}

class TermParser {
 public:
  TermParser(std::string_view text, const Alphabet& alphabet, bool allow_variable)
      : text_(text), alphabet_(alphabet), allow_variable_(allow_variable) {}

  Tree parse() {
    if (text_.empty()) fail("empty input");
    Tree t = term();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  Tree term() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == kOpen) {
      ++pos_;
      Tree l = term();
      expect(kDot);
      Tree r = term();
      expect(kClose);
      return star(std::move(l), std::move(r));
    }
    if (alphabet_.contains(c) || (allow_variable_ && c == kVariable)) {
      ++pos_;
      return Tree::leaf(c);
    }
    if (c == kVariable) fail("the variable 'x' is only allowed in polynomials");
    fail(std::string("unexpected symbol '") + c + "'");
  }

  void expect(char c) {
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedTree(what + " at offset " + std::to_string(pos_), {std::string(text_)});
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  bool allow_variable_;
  std::size_t pos_ = 0;
};

// Returns the end offset of the skeleton starting at `pos`, or npos.
std::size_t skeleton_end(std::string_view s, std::size_t pos) {
  if (pos >= s.size() || s[pos] != kOpen) return pos;  // empty skeleton
  std::size_t p = skeleton_end(s, pos + 1);
  if (p == std::string_view::npos || p >= s.size() || s[p] != kDot) return std::string_view::npos;
  p = skeleton_end(s, p + 1);
  if (p == std::string_view::npos || p >= s.size() || s[p] != kClose) return std::string_view::npos;
  return p + 1;
}

// Offset of the top-level '*' of a nonempty skeleton `<s1*s2>`.
std::size_t top_level_dot(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == kOpen) {
      ++depth;
    } else if (s[i] == kClose) {
      --depth;
    } else if (s[i] == kDot && depth == 1) {
      return i;
    }
  }
  return std::string_view::npos;
}

Tree rebuild_checked(std::string_view u, std::string_view s) {
  if (s.empty()) return Tree::leaf(u.front());
  const std::size_t dot = top_level_dot(s);
  const std::string_view s1 = s.substr(1, dot - 1);
  const std::string_view s2 = s.substr(dot + 1, s.size() - dot - 2);
  const std::size_t n1 = s1.size() / 3 + 1;
  return star(rebuild_checked(u.substr(0, n1), s1), rebuild_checked(u.substr(n1), s2));
}

}  // namespace

Tree Tree::leaf(Letter letter) {
  auto n = std::make_shared<Node>();
  n->letter = letter;
  n->hash = mix(static_cast<unsigned char>(letter));
  return Tree(std::move(n));
}

Tree Tree::node(Tree left, Tree right) {
  auto n = std::make_shared<Node>();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->hash = mix(left.hash() * 31 + mix(right.hash()) + 0x51);
  n->left = std::move(left);
  n->right = std::move(right);
  return Tree(std::move(n));
}

bool operator==(const Tree& a, const Tree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.leaf_count() != b.leaf_count()) return false;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.letter() == b.letter();
  return a.left() == b.left() && a.right() == b.right();
}

std::string encode(const Tree& t) {
  std::string out;
  out.reserve(4 * t.leaf_count());
  encode_into(t, out);
  return out;
}

Tree parse_tree(std::string_view text, const Alphabet& alphabet) {
  return TermParser(text, alphabet, false).parse();
}

Tree parse_term(std::string_view text, const Alphabet& alphabet) {
  return TermParser(text, alphabet, true).parse();
}

Skeleton parse_skeleton(std::string_view text) {
  if (skeleton_end(text, 0) != text.size())
    throw MalformedSkeleton("not a well-formed skeleton", {std::string(text)});
  return Skeleton{std::string(text)};
}

Skeleton skeleton(const Tree& t) {
  Skeleton s;
  s.word.reserve(3 * t.leaf_count());
  skeleton_into(t, s.word);
  return s;
}

Foliage foliage(const Tree& t) {
  Foliage f;
  f.word.reserve(t.leaf_count());
  foliage_into(t, f.word);
  return f;
}

Tree rebuild(const Foliage& u, const Skeleton& s) {
  if (u.word.empty() || s.word.size() + 3 != 3 * u.word.size())
    throw LengthMismatch("skeleton length must be 3*|foliage| - 3 (got |s|=" + std::to_string(s.word.size()) +
                             ", |u|=" + std::to_string(u.word.size()) + ")",
                         {u.word, s.word});
  if (skeleton_end(s.word, 0) != s.word.size())
    throw MalformedSkeleton("not a well-formed skeleton", {s.word});
  return rebuild_checked(u.word, s.word);
}

std::string to_unicode(std::string_view ascii) {
  std::string out;
  out.reserve(ascii.size() * 3);
  for (char c : ascii) {
    switch (c) {
      case kOpen: out += "◂"; break;
      case kDot: out += "•"; break;
      case kClose: out += "▸"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string from_unicode(std::string_view text) {
  static constexpr std::string_view kOpenU = "◂", kDotU = "•", kCloseU = "▸";
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const std::string_view rest = text.substr(i);
    if (rest.starts_with(kOpenU)) {
      out.push_back(kOpen);
      i += kOpenU.size();
    } else if (rest.starts_with(kDotU)) {
      out.push_back(kDot);
      i += kDotU.size();
    } else if (rest.starts_with(kCloseU)) {
      out.push_back(kClose);
      i += kCloseU.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

bool skeleton_less(std::string_view a, std::string_view b) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = xi_rank(a[i]), rb = xi_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

}  // namespace treealg
