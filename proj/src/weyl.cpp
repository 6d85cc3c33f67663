#include "dtcell/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dtcell/error.hpp"

namespace dtcell::weyl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  if (n < 1) fail(ErrorKind::InvalidArgument, "permutation of rank 0");
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) fail(ErrorKind::InvalidArgument, "images are not a bijection of 1..n");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::longest(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) fail(ErrorKind::IndexOutOfRange, "simple reflection s_" + std::to_string(i) + " in S_" + std::to_string(n));
  auto im = identity(n).images_;
  std::swap(im[i - 1], im[i]);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_line(std::string_view digits) {
  std::vector<int> im;
  for (char c : digits) {
    if (c < '1' || c > '9') fail(ErrorKind::InvalidArgument, "bad permutation digit in '" + std::string(digits) + "'");
    im.push_back(c - '0');
  }
  return Permutation(std::move(im));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > rank()) fail(ErrorKind::IndexOutOfRange, "point " + std::to_string(i));
  return images_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::string Permutation::one_line() const {
  std::string s;
  for (int x : images_) {
    if (rank() <= 9) {
      s += static_cast<char>('0' + x);
    } else {
      if (!s.empty()) s += ',';
      s += std::to_string(x);
    }
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) fail(ErrorKind::InvalidArgument, "rank mismatch in product");
  std::vector<int> im(a.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = b.images_[a.images_[i] - 1];
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation word_product(int n, std::span<const int> letters) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  // Left-to-right product: x is sent through each letter in turn, so the
  // one-line images are obtained by relabeling values.
  for (int l : letters) {
    int i = std::abs(l);
    if (l == 0 || i >= n) fail(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " for rank " + std::to_string(n));
    for (int& x : im) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
  }
  return Permutation(std::move(im));
}

namespace {

void check_range(int n, std::span<const int> letters) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= n)
      fail(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " for rank " + std::to_string(n));
}

std::vector<int> signed_part(std::span<const int> letters, bool negative) {
  std::vector<int> out;
  for (int l : letters)
    if ((l < 0) == negative) out.push_back(std::abs(l));
  return out;
}

}  // namespace

std::pair<Permutation, Permutation> word_to_permutations(int n, std::span<const int> letters) {
  check_range(n, letters);
  auto uw = signed_part(letters, true);
  auto vw = signed_part(letters, false);
  Permutation u = word_product(n, uw);
  Permutation v = word_product(n, vw);
  if (static_cast<int>(uw.size()) != u.length())
    fail(ErrorKind::NonReducedWord, "negative subword " + format_letters(uw) + " has length " +
                                        std::to_string(uw.size()) + " but its product has length " +
                                        std::to_string(u.length()));
  if (static_cast<int>(vw.size()) != v.length())
    fail(ErrorKind::NonReducedWord, "positive subword " + format_letters(vw) + " has length " +
                                        std::to_string(vw.size()) + " but its product has length " +
                                        std::to_string(v.length()));
  return {u, v};
}

SignedWord::SignedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  word_to_permutations(n_, letters_);
}

std::vector<int> SignedWord::u_word() const { return signed_part(letters_, true); }
std::vector<int> SignedWord::v_word() const { return signed_part(letters_, false); }
Permutation SignedWord::u() const { return word_product(n_, u_word()); }
Permutation SignedWord::v() const { return word_product(n_, v_word()); }

SignedWord SignedWord::reversed() const {
  return SignedWord(n_, std::vector<int>(letters_.rbegin(), letters_.rend()));
}

std::string SignedWord::to_string() const { return format_letters(letters_); }

std::vector<int> greedy_word(const Permutation& w) {
  std::vector<int> out;
  Permutation cur = w;
  for (int m = w.rank(); m > 1; --m) {
    // cur fixes every point above m here.
    const int k = cur.inverse()(m);
    std::vector<int> block;
    for (int i = k; i < m; ++i) block.push_back(i);
    out.insert(out.end(), block.begin(), block.end());
    cur = word_product(w.rank(), block).inverse() * cur;
  }
  return out;
}

SignedWord greedy_pair_word(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) fail(ErrorKind::InvalidArgument, "u and v have different ranks");
  std::vector<int> letters;
  for (int l : greedy_word(u)) letters.push_back(-l);
  auto tail = greedy_word(v.inverse());
  letters.insert(letters.end(), tail.rbegin(), tail.rend());
  return SignedWord(u.rank(), std::move(letters));
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::MixedSwap: return "MixedSwap";
    case MoveKind::SameIndexSwap: return "SameIndexSwap";
    case MoveKind::Braid: return "Braid";
    case MoveKind::Commute: return "Commute";
  }
  return "?";
}

bool induces_mutation(MoveKind kind) {
  return kind == MoveKind::SameIndexSwap || kind == MoveKind::Braid;
}

namespace {

std::string where(std::size_t pos) { return " at position " + std::to_string(pos); }

}  // namespace

std::vector<int> apply_move(std::span<const int> letters, const WordMove& move) {
  const std::size_t p = move.position;
  const std::size_t width = move.kind == MoveKind::Braid ? 3 : 2;
  if (p + width > letters.size())
    fail(ErrorKind::InapplicableMove, std::string(to_string(move.kind)) + where(p) + " runs past the end of the word");
  std::vector<int> out(letters.begin(), letters.end());
  const int a = letters[p], b = letters[p + 1];
  switch (move.kind) {
    case MoveKind::MixedSwap:
      if ((a < 0) == (b < 0) || std::abs(a) == std::abs(b))
        fail(ErrorKind::InapplicableMove, "MixedSwap needs opposite signs and distinct indices" + where(p));
      std::swap(out[p], out[p + 1]);
      break;
    case MoveKind::SameIndexSwap:
      if (a != -b)
        fail(ErrorKind::InapplicableMove, "SameIndexSwap needs a pair (i, -i)" + where(p));
      std::swap(out[p], out[p + 1]);
      break;
    case MoveKind::Commute:
      if ((a < 0) != (b < 0) || std::abs(std::abs(a) - std::abs(b)) < 2)
        fail(ErrorKind::InapplicableMove, "Commute needs equal signs and indices at distance >= 2" + where(p));
      std::swap(out[p], out[p + 1]);
      break;
    case MoveKind::Braid: {
      const int c = letters[p + 2];
      const bool same_sign = (a < 0) == (b < 0) && (b < 0) == (c < 0);
      const int step = move.direction == Direction::Forward ? 1 : -1;
      if (!same_sign || a != c || std::abs(b) - std::abs(a) != step)
        fail(ErrorKind::InapplicableMove,
             std::string("Braid ") + (step > 0 ? "forward needs (i, i+1, i)" : "backward needs (i+1, i, i+1)") + where(p));
      out[p] = b;
      out[p + 1] = a;
      out[p + 2] = b;
      break;
    }
  }
  return out;
}

SignedWord apply_move(const SignedWord& word, const WordMove& move) {
  return SignedWord(word.rank(), apply_move(word.letters(), move));
}

std::vector<WordMove> applicable_moves(std::span<const int> letters) {
  std::vector<WordMove> out;
  for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
    const int a = letters[p], b = letters[p + 1];
    if ((a < 0) != (b < 0)) {
      out.push_back({std::abs(a) == std::abs(b) ? MoveKind::SameIndexSwap : MoveKind::MixedSwap, p});
    } else if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
      out.push_back({MoveKind::Commute, p});
    }
    if (p + 2 < letters.size() && letters[p + 2] == a && (a < 0) == (b < 0)) {
      const int d = std::abs(b) - std::abs(a);
      if (d == 1) out.push_back({MoveKind::Braid, p, Direction::Forward});
      if (d == -1) out.push_back({MoveKind::Braid, p, Direction::Backward});
    }
  }
  return out;
}

std::vector<SignedWord> reduced_words(const Permutation& u, const Permutation& v) {
  const SignedWord start = greedy_pair_word(u, v);
  std::set<std::vector<int>> seen{start.letters()};
  std::deque<std::vector<int>> queue{start.letters()};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : applicable_moves(cur)) {
      auto next = apply_move(cur, m);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<SignedWord> out;
  for (const auto& w : seen) out.emplace_back(u.rank(), w);
  return out;
}

std::optional<std::vector<WordMove>> move_path(const SignedWord& from, const SignedWord& to) {
  if (from.rank() != to.rank()) return std::nullopt;
  std::map<std::vector<int>, std::pair<std::vector<int>, WordMove>> parent;
  std::deque<std::vector<int>> queue{from.letters()};
  parent[from.letters()] = {{}, {}};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (cur == to.letters()) {
      std::vector<WordMove> path;
      while (cur != from.letters()) {
        const auto& [prev, m] = parent.at(cur);
        path.push_back(m);
        cur = prev;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& m : applicable_moves(cur)) {
      auto next = apply_move(cur, m);
      if (!parent.count(next)) {
        parent[next] = {cur, m};
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') cleaned += c;
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value == 0)
      fail(ErrorKind::InvalidArgument, "cannot parse letter '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string format_letters(std::span<const int> letters) {
  std::string s = "(";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(letters[k]);
  }
  return s + ")";
}

}  // namespace dtcell::weyl
