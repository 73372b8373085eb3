#include <torvo/scalar.hpp>

#include <stdexcept>

namespace torvo {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("malformed rational: " + s);
  }
  Scalar x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

Scalar ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

std::string format_scalar(const Scalar& x) { return x.get_str(10); }

}  // namespace torvo
