#include "uniserial/half_int.hpp"

#include <charconv>
#include <ostream>

#include "uniserial/error.hpp"

namespace uniserial {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("malformed half-integer: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text, text));
  if (parse_int(text.substr(slash + 1), text) != 2)
    throw ParseError("half-integer denominator must be 2: '" + std::string(text) + "'");
  return from_twice(parse_int(text.substr(0, slash), text));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace uniserial
