#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace krammer {

// A word in the Artin generators of B_n. Letter g > 0 is sigma_g, g < 0 is
// sigma_|g|^-1, with 1 <= |g| <= n-1.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& other) const;
  BraidWord power(int k) const;
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Accepts whitespace-separated "s<k>", "s<k>^<p>" (p may be negative) or bare
// signed integers. Throws ParseError or IndexOutOfRange.
BraidWord parse_braid(std::string_view text, int strands);

// Canonical "s" form with runs collapsed, e.g. "s1 s2^4 s1^-1". Empty word is "".
std::string to_string(const BraidWord& w);

// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

std::set<int> generator_support(const BraidWord& w);

// Generators of B_n that never occur in the raw word.
std::vector<int> missing_generators(const BraidWord& w);

// True iff some generator sigma_1..sigma_{n-1} does not occur in the raw
// letter sequence. No cancellation or braid relation is applied first.
bool is_essential(const BraidWord& w);

// Full twist (sigma_1 ... sigma_{n-1})^n of B_n.
BraidWord full_twist(int strands);

// Freely reduced word in the free group on alpha_1..alpha_n; letter j > 0 is
// alpha_j, j < 0 is alpha_|j|^-1.
using FreeGroupWord = std::vector<int>;

FreeGroupWord free_group_reduce(const FreeGroupWord& w);
FreeGroupWord free_group_inverse(const FreeGroupWord& w);

// Images of alpha_1..alpha_n under the automorphism of the word. Letters act
// left to right: the first letter is applied first.
//   sigma_i: alpha_i -> alpha_i alpha_{i+1} alpha_i^-1, alpha_{i+1} -> alpha_i
std::vector<FreeGroupWord> act_on_free_group(const BraidWord& w);

// Applies the automorphism given by `images` to an arbitrary word.
FreeGroupWord apply_automorphism(const std::vector<FreeGroupWord>& images, const FreeGroupWord& w);

// True iff w = u alpha_k u^-1 for some word u and generator alpha_k.
bool is_conjugate_of_generator(const FreeGroupWord& w);

std::string to_string(const FreeGroupWord& w);

}  // namespace krammer
