#include "krammer/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "krammer/errors.hpp"

namespace krammer {

namespace {

void check_letter(int g, int strands) {
  if (g == 0 || std::abs(g) > strands - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(g) + " outside [1, " + std::to_string(strands - 1) +
                          "] for B_" + std::to_string(strands));
  }
}

int parse_int(const std::string& token, const std::string& whole) {
  if (token.empty()) throw ParseError("braid word: empty number in token \"" + whole + "\"");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("braid word: bad number in token \"" + whole + "\"");
  }
  if (used != token.size()) throw ParseError("braid word: bad token \"" + whole + "\"");
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw IndexOutOfRange("braid group needs at least 2 strands, got " + std::to_string(strands));
  for (int g : letters_) check_letter(g, strands_);
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (other.strands_ != strands_) throw IndexOutOfRange("cannot multiply braids with different strand counts");
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& g : out) g = -g;
  return BraidWord(strands_, std::move(out));
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    if (token[0] == 's' || token[0] == 'S') {
      const auto caret = token.find('^');
      const int k = parse_int(token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), token);
      const int p = caret == std::string::npos ? 1 : parse_int(token.substr(caret + 1), token);
      if (k <= 0) throw IndexOutOfRange("generator index must be positive in \"" + token + "\"");
      check_letter(k, strands);
      for (int i = 0; i < std::abs(p); ++i) letters.push_back(p > 0 ? k : -k);
    } else {
      const int g = parse_int(token, token);
      check_letter(g, strands);
      letters.push_back(g);
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int p = l[i] > 0 ? run : -run;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(std::abs(l[i]));
    if (p != 1) out += '^' + std::to_string(p);
    i = j;
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int g : w.letters()) {
    if (!stack.empty() && stack.back() == -g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::set<int> generator_support(const BraidWord& w) {
  std::set<int> s;
  for (int g : w.letters()) s.insert(std::abs(g));
  return s;
}

std::vector<int> missing_generators(const BraidWord& w) {
  const auto support = generator_support(w);
  std::vector<int> missing;
  for (int k = 1; k < w.strands(); ++k) {
    if (!support.count(k)) missing.push_back(k);
  }
  return missing;
}

bool is_essential(const BraidWord& w) { return !missing_generators(w).empty(); }

BraidWord full_twist(int strands) {
  std::vector<int> letters;
  for (int r = 0; r < strands; ++r) {
    for (int k = 1; k < strands; ++k) letters.push_back(k);
  }
  return BraidWord(strands, std::move(letters));
}

FreeGroupWord free_group_reduce(const FreeGroupWord& w) {
  FreeGroupWord stack;
  for (int a : w) {
    if (!stack.empty() && stack.back() == -a) {
      stack.pop_back();
    } else {
      stack.push_back(a);
    }
  }
  return stack;
}

FreeGroupWord free_group_inverse(const FreeGroupWord& w) {
  FreeGroupWord out(w.rbegin(), w.rend());
  for (int& a : out) a = -a;
  return out;
}

FreeGroupWord apply_automorphism(const std::vector<FreeGroupWord>& images, const FreeGroupWord& w) {
  FreeGroupWord out;
  for (int a : w) {
    const FreeGroupWord& img = images[static_cast<std::size_t>(std::abs(a) - 1)];
    if (a > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const FreeGroupWord inv = free_group_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_group_reduce(out);
}

std::vector<FreeGroupWord> act_on_free_group(const BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeGroupWord> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = {j};

  for (int g : w.letters()) {
    const int i = std::abs(g);
    std::vector<FreeGroupWord> gen(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) gen[static_cast<std::size_t>(j - 1)] = {j};
    if (g > 0) {
      gen[static_cast<std::size_t>(i - 1)] = {i, i + 1, -i};
      gen[static_cast<std::size_t>(i)] = {i};
    } else {
      gen[static_cast<std::size_t>(i - 1)] = {i + 1};
      gen[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
    }
    for (auto& img : images) img = apply_automorphism(gen, img);
  }
  return images;
}

bool is_conjugate_of_generator(const FreeGroupWord& w) {
  const FreeGroupWord r = free_group_reduce(w);
  if (r.size() % 2 == 0) return false;
  const std::size_t mid = r.size() / 2;
  if (r[mid] <= 0) return false;
  for (std::size_t k = 0; k < mid; ++k) {
    if (r[k] != -r[r.size() - 1 - k]) return false;
  }
  return true;
}

std::string to_string(const FreeGroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int a : w) {
    if (!out.empty()) out += ' ';
    out += "a" + std::to_string(std::abs(a));
    if (a < 0) out += "^-1";
  }
  return out;
}

}  // namespace krammer
