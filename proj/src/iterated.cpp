#include "braidnf/iterated.hpp"

#include <algorithm>

namespace braidnf {

BinaryAddress BinaryAddress::prefix(std::size_t m) const {
  return BinaryAddress{std::vector<int>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(m))};
}

GeneralAddress ones_general(std::size_t length) { return GeneralAddress{std::vector<int>(length, 1)}; }

BinaryAddress ones_binary(std::size_t length) { return BinaryAddress{std::vector<int>(length, 1)}; }

GeneralAddress successor(const GeneralAddress& theta, std::size_t m) {
  if (m > theta.size()) throw ArgumentError("successor index out of range");
  GeneralAddress out = theta;
  if (m == theta.size()) return out;
  out.digits[m] += 1;
  std::fill(out.digits.begin() + static_cast<std::ptrdiff_t>(m) + 1, out.digits.end(), 1);
  return out;
}

BinaryAddress binary_successor(const BinaryAddress& alpha, std::size_t m) {
  if (m > alpha.size()) throw ArgumentError("successor index out of range");
  BinaryAddress out = alpha;
  if (m == alpha.size()) return out;
  out.digits[m] = out.digits[m] == 1 ? 2 : 1;
  std::fill(out.digits.begin() + static_cast<std::ptrdiff_t>(m) + 1, out.digits.end(), 1);
  return out;
}

BinaryAddress binary_projection(const GeneralAddress& theta) {
  BinaryAddress out;
  out.digits.reserve(theta.size());
  for (int d : theta.digits) out.digits.push_back(d % 2 == 1 ? 1 : 2);
  return out;
}

namespace {

std::string join_digits(const std::vector<int>& digits) {
  const bool wide = std::any_of(digits.begin(), digits.end(), [](int d) { return d > 9; });
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (wide && k) out += '.';
    out += std::to_string(digits[k]);
  }
  return out;
}

std::vector<int> split_digits(const std::string& text) {
  std::vector<int> out;
  if (text.find('.') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t dot = std::min(text.find('.', pos), text.size());
      const std::string part = text.substr(pos, dot - pos);
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ArgumentError("malformed address '" + text + "'");
      }
      out.push_back(std::stoi(part));
      pos = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ArgumentError("malformed address '" + text + "'");
      out.push_back(c - '0');
    }
  }
  for (int d : out) {
    if (d < 1) throw ArgumentError("address digits must be positive");
  }
  return out;
}

}  // namespace

std::string to_string(const GeneralAddress& theta) { return join_digits(theta.digits); }

std::string to_string(const BinaryAddress& alpha) { return join_digits(alpha.digits); }

GeneralAddress parse_general_address(const std::string& text) { return GeneralAddress{split_digits(text)}; }

BinaryAddress parse_binary_address(const std::string& text) {
  BinaryAddress out{split_digits(text)};
  for (int d : out.digits) {
    if (d != 1 && d != 2) throw ArgumentError("binary address digits must be 1 or 2");
  }
  return out;
}

namespace {

template <class Leaf, class F>
void render(const IteratedSequence<Leaf>& t, std::string& out, F&& leaf) {
  if (t.is_leaf()) {
    out += leaf(t.value());
    return;
  }
  out += '(';
  for (std::size_t k = 0; k < t.children().size(); ++k) {
    if (k) out += ", ";
    render(t.children()[k], out, leaf);
  }
  out += ')';
}

}  // namespace

std::string to_string(const PowerTree& tree) {
  std::string out;
  render(tree, out, [](const Power& p) -> std::string {
    if (p.exponent == 0) return "1";
    std::string s = "s" + std::to_string(p.generator);
    if (p.exponent > 1) s += "^" + std::to_string(p.exponent);
    return s;
  });
  return out;
}

std::string to_string(const ExponentTree& tree) {
  std::string out;
  render(tree, out, [](int e) { return std::to_string(e); });
  return out;
}

ExponentTree exponents(const PowerTree& tree) {
  return tree.map([](const Power& p) { return p.exponent; });
}

PositiveWord concatenate(const PowerTree& tree, int strands) {
  PositiveWord out(strands);
  for (const Power& p : tree.unbracketing()) {
    for (int k = 0; k < p.exponent; ++k) out.push_back(p.generator);
  }
  return out;
}

}  // namespace braidnf
