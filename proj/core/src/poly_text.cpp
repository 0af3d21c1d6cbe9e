#include "polybound/poly_text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace polybound {

namespace {

std::string shortest(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

// Reads a real literal (optionally signed) at text[pos]. Returns the number
// of characters consumed, 0 if no literal starts here.
std::size_t read_real(std::string_view text, std::size_t pos, double& out) {
  std::size_t i = pos;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const char* first = text.data() + i;
  const char* last = text.data() + text.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) return 0;
  out = negative ? -value : value;
  return static_cast<std::size_t>(ptr - text.data()) - pos;
}

Complex parse_token(std::string_view text, std::size_t begin, std::size_t end) {
  const std::string_view token = text.substr(begin, end - begin);
  auto fail = [&](std::size_t offset, const std::string& why) -> ParseError {
    return ParseError(begin + offset, "malformed coefficient '" +
                                          std::string(token) + "' at position " +
                                          std::to_string(begin + offset) + ": " +
                                          why);
  };
  if (token.empty()) throw fail(0, "empty coefficient");

  // Bare imaginary unit with optional sign.
  if (token == "i" || token == "+i") return {0.0, 1.0};
  if (token == "-i") return {0.0, -1.0};

  double first = 0.0;
  const std::size_t n1 = read_real(token, 0, first);
  if (n1 == 0) throw fail(0, "expected a number");
  if (n1 == token.size()) return {first, 0.0};
  if (token[n1] == 'i' && n1 + 1 == token.size()) return {0.0, first};
  if (token[n1] != '+' && token[n1] != '-') {
    throw fail(n1, "unexpected character");
  }
  double second = 0.0;
  std::size_t n2 = read_real(token, n1, second);
  if (n2 == 0) {
    // "re+i" / "re-i"
    if (n1 + 2 == token.size() && token[n1 + 1] == 'i') {
      return {first, token[n1] == '-' ? -1.0 : 1.0};
    }
    throw fail(n1 + 1, "expected imaginary part");
  }
  const std::size_t tail = n1 + n2;
  if (tail >= token.size() || token[tail] != 'i') {
    throw fail(tail, "imaginary part must end with 'i'");
  }
  if (tail + 1 != token.size()) throw fail(tail + 1, "trailing characters");
  return {first, second};
}

}  // namespace

std::vector<Complex> parse_coefficients(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    std::size_t b = start;
    std::size_t e = stop;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const Complex c = parse_token(text, b, e);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ParseError(b, "non-finite coefficient at position " + std::to_string(b));
    }
    out.push_back(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return shortest(c.real());
  std::string s = shortest(c.real());
  if (c.imag() >= 0.0) s += '+';
  s += shortest(c.imag());
  s += 'i';
  return s;
}

std::string format_polynomial(std::span<const Complex> coefficients) {
  std::string s;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) s += ',';
    s += format_coefficient(coefficients[i]);
  }
  return s;
}

}  // namespace polybound
