#pragma once

// Symmetric group, signed words and word moves.
//
// Permutations act on {1..n}. Products are read left to right: (a * b)(x) is
// b(a(x)), so the product of a word's simple reflections sends x through the
// letters in order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dtcell::weyl {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation simple(int n, int i);
  // One-line notation, one digit per image ("321" is the longest element of S3).
  static Permutation from_one_line(std::string_view digits);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  std::string one_line() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

// Product of s_{|l|} over the letters, read left to right.
Permutation word_product(int n, std::span<const int> letters);

class SignedWord {
 public:
  SignedWord() = default;
  // Throws IndexOutOfRange for letters outside +-{1..n-1} and NonReducedWord
  // when either the negative or the positive subword is not reduced.
  SignedWord(int n, std::vector<int> letters);

  int rank() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  // Absolute values of the negative letters, in order; this spells u.
  std::vector<int> u_word() const;
  // The positive letters, in order; this spells v.
  std::vector<int> v_word() const;
  Permutation u() const;
  Permutation v() const;

  // Word read backwards: a reduced word for (u^-1, v^-1).
  SignedWord reversed() const;
  std::string to_string() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
  friend bool operator<(const SignedWord& a, const SignedWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

std::pair<Permutation, Permutation> word_to_permutations(int n, std::span<const int> letters);

// Reduced word built by repeatedly moving the preimage of the largest value
// to the end.
std::vector<int> greedy_word(const Permutation& w);
SignedWord greedy_pair_word(const Permutation& u, const Permutation& v);

// Commute exchanges same-sign letters whose indices differ by at least two;
// it is only needed from rank 4 on.
enum class MoveKind { MixedSwap, SameIndexSwap, Braid, Commute };
enum class Direction { Forward, Backward };

// Acts on letters at [position, position + 1] for swaps and
// [position, position + 2] for braids. A forward braid rewrites
// (a, b, a) with |b| = |a| + 1 into (b, a, b); backward is the reverse.
struct WordMove {
  MoveKind kind = MoveKind::MixedSwap;
  std::size_t position = 0;
  Direction direction = Direction::Forward;

  friend bool operator==(const WordMove&, const WordMove&) = default;
};

const char* to_string(MoveKind kind);
bool induces_mutation(MoveKind kind);

// Works on arbitrary letter sequences, reduced or not.
std::vector<int> apply_move(std::span<const int> letters, const WordMove& move);
SignedWord apply_move(const SignedWord& word, const WordMove& move);
std::vector<WordMove> applicable_moves(std::span<const int> letters);

// Every reduced word of (u, v), found by closing the greedy word under moves.
std::vector<SignedWord> reduced_words(const Permutation& u, const Permutation& v);
std::optional<std::vector<WordMove>> move_path(const SignedWord& from, const SignedWord& to);

std::vector<int> parse_letters(std::string_view text);
std::string format_letters(std::span<const int> letters);

}  // namespace dtcell::weyl
