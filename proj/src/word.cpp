#include "braidnf/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace braidnf {

namespace {

void check_strands(int strands) {
  if (strands < 1 || strands > kMaxStrands) {
    throw ArgumentError("strand count " + std::to_string(strands) + " out of range [1, " +
                        std::to_string(kMaxStrands) + "]");
  }
}

void check_letter(int strands, int index) {
  if (index < 1 || index >= strands) {
    throw ArgumentError("generator index " + std::to_string(index) + " out of range for " +
                        std::to_string(strands) + " strands");
  }
}

}  // namespace

PositiveWord::PositiveWord(int strands) : strands_(strands) { check_strands(strands); }

PositiveWord::PositiveWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (int a : letters_) check_letter(strands_, a);
}

void PositiveWord::push_back(int letter) {
  check_letter(strands_, letter);
  letters_.push_back(letter);
}

void PositiveWord::append(const PositiveWord& other) {
  if (other.strands_ > strands_) {
    for (int a : other.letters_) check_letter(strands_, a);
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

PositiveWord PositiveWord::with_strands(int strands) const { return PositiveWord(strands, letters_); }

PositiveWord operator*(const PositiveWord& lhs, const PositiveWord& rhs) {
  PositiveWord out(std::max(lhs.strands(), rhs.strands()), lhs.letters());
  out.append(rhs);
  return out;
}

PositiveWord power(int strands, Generator g, int exponent) {
  if (exponent < 0) throw ArgumentError("negative exponent");
  return PositiveWord(strands, std::vector<int>(static_cast<std::size_t>(exponent), g.index));
}

PositiveWord power(const PositiveWord& u, int exponent) {
  if (exponent < 0) throw ArgumentError("negative exponent");
  PositiveWord out(u.strands());
  for (int k = 0; k < exponent; ++k) out.append(u);
  return out;
}

SignedWord::SignedWord(int strands) : strands_(strands) { check_strands(strands); }

SignedWord::SignedWord(int strands, std::vector<SignedLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (const auto& l : letters_) {
    check_letter(strands_, l.index);
    if (l.sign != 1 && l.sign != -1) throw ArgumentError("letter sign must be +1 or -1");
  }
}

SignedWord::SignedWord(const PositiveWord& w) : strands_(w.strands()) {
  letters_.reserve(w.size());
  for (int a : w.letters()) letters_.push_back({a, 1});
}

bool SignedWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const SignedLetter& l) { return l.sign > 0; });
}

PositiveWord SignedWord::to_positive() const {
  PositiveWord out(strands_);
  for (const auto& l : letters_) {
    if (l.sign < 0) throw ArgumentError("word contains an inverse generator");
    out.push_back(l.index);
  }
  return out;
}

SignedWord inverse(const SignedWord& w) {
  std::vector<SignedLetter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.sign = -l.sign;
  return SignedWord(w.strands(), std::move(out));
}

SignedWord operator*(const SignedWord& lhs, const SignedWord& rhs) {
  std::vector<SignedLetter> out = lhs.letters();
  out.insert(out.end(), rhs.letters().begin(), rhs.letters().end());
  return SignedWord(std::max(lhs.strands(), rhs.strands()), std::move(out));
}

PositiveWord flip(const PositiveWord& w) {
  std::vector<int> out(w.letters());
  const int n = w.strands();
  for (int& a : out) a = n - a;
  return PositiveWord(n, std::move(out));
}

PositiveWord flip(const PositiveWord& w, int times) { return (times % 2 != 0) ? flip(w) : w; }

PositiveWord reversed(const PositiveWord& w) {
  return PositiveWord(w.strands(), std::vector<int>(w.letters().rbegin(), w.letters().rend()));
}

PositiveWord delta(int n) {
  if (n < 2) throw ArgumentError("delta requires n >= 2");
  PositiveWord out(n);
  // Delta_n = sigma_1 ... sigma_{n-1} Delta_{n-1}, unrolled.
  for (int m = n; m >= 2; --m) {
    for (int i = 1; i <= m - 1; ++i) out.push_back(i);
  }
  return out;
}

PositiveWord delta_small(int n) {
  if (n < 2) throw ArgumentError("delta_small requires n >= 2");
  PositiveWord out(n);
  for (int i = n - 1; i >= 1; --i) out.push_back(i);
  return out;
}

PositiveWord delta_hat(int n, int d) {
  if (n < 2) throw ArgumentError("delta_hat requires n >= 2");
  if (d < 1) throw ArgumentError("delta_hat requires d >= 1");
  const PositiveWord run = delta_small(n);
  PositiveWord out(n);
  for (int k = d; k >= 1; --k) out.append(flip(run, k));
  return out;
}

SignedWord parse_signed(std::string_view text, std::optional<int> strands) {
  std::vector<SignedLetter> letters;
  int max_index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' &&
           text[end] != '\r' && text[end] != ',') {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    int sign = 1;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
      sign = digits.front() == '-' ? -1 : 1;
      digits.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ArgumentError("malformed token '" + std::string(token) + "'");
    }
    if (value == 0) throw ArgumentError("generator index 0 is not allowed");
    letters.push_back({value, sign});
    max_index = std::max(max_index, value);
    pos = end;
  }
  const int n = strands.value_or(std::max(2, max_index + 1));
  return SignedWord(n, std::move(letters));
}

PositiveWord parse_positive(std::string_view text, std::optional<int> strands) {
  return parse_signed(text, strands).to_positive();
}

std::string format(const PositiveWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w[k]);
  }
  return out;
}

std::string format(const SignedWord& w) {
  std::string out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

std::string pretty(const PositiveWord& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = k;
    while (run < w.size() && w[run] == w[k]) ++run;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(w[k]);
    if (run - k > 1) out += '^' + std::to_string(run - k);
    k = run;
  }
  return out;
}

}  // namespace braidnf
