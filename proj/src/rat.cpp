#include "sepset/rat.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "sepset/error.hpp"

namespace sepset {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::ArithmeticOverflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat make_reduced(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat(narrow(num), narrow(den));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::MalformedRational, "zero denominator");
  Wide n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rat Rat::operator-() const { return make_reduced(-static_cast<Wide>(num_), den_); }

Rat Rat::abs() const { return num_ < 0 ? -*this : *this; }

Rat operator+(const Rat& a, const Rat& b) {
  return make_reduced(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                      static_cast<Wide>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  return make_reduced(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse_lenient(std::string_view text) {
  auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash));
  if (!num) throw Error(ErrorCode::MalformedRational, "'" + std::string(text) + "' is not a rational");
  if (slash == std::string_view::npos) return Rat(*num);
  auto den = parse_int(text.substr(slash + 1));
  if (!den || *den <= 0 || text[slash + 1] == '+') {
    throw Error(ErrorCode::MalformedRational,
                "'" + std::string(text) + "' needs a positive integer denominator");
  }
  return Rat(*num, *den);
}

Rat Rat::parse(std::string_view text) {
  if (!text.empty() && text.front() == '+') {
    throw Error(ErrorCode::MalformedRational, "'" + std::string(text) + "' has an explicit '+' sign");
  }
  Rat r = parse_lenient(text);
  if (r.str() != text) {
    throw Error(ErrorCode::MalformedRational,
                "'" + std::string(text) + "' is not in canonical form; write \"" + r.str() + "\"");
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Apartness rat_apart(const Rat& a, const Rat& b) {
  Rat gap = (a - b).abs();
  return {gap > Rat(0), gap};
}

CotransChoice rat_cotrans(const Rat& a, const Rat& b, const Rat& z) {
  if (!rat_apart(a, b).apart) {
    throw Error(ErrorCode::PreconditionViolated, "cotransitivity needs a ≠ b, got a = b = " + a.str());
  }
  Rat to_a = (z - a).abs();
  Rat to_b = (z - b).abs();
  if (to_a >= to_b) return {CotransSide::ApartFromFirst, to_a};
  return {CotransSide::ApartFromSecond, to_b};
}

}  // namespace sepset
