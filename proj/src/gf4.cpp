#include "cycloseq/gf4.hpp"

#include "cycloseq/errors.hpp"

namespace cycloseq {

GF4 GF4::from_digit(char c) {
  if (c < '0' || c > '3') {
    throw MalformedSequence(std::string("invalid GF4 digit '") + c + "'");
  }
  return GF4(static_cast<unsigned>(c - '0'));
}

std::string GF4::name() const {
  switch (bits_) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "a";
    default: return "a+1";
  }
}

std::string to_digits(const std::vector<GF4>& symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (GF4 s : symbols) out.push_back(s.digit());
  return out;
}

std::vector<GF4> from_digits(const std::string& digits) {
  std::vector<GF4> out;
  out.reserve(digits.size());
  for (char c : digits) out.push_back(GF4::from_digit(c));
  return out;
}

}  // namespace cycloseq
