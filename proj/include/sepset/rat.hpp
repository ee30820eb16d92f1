#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace sepset {

/// Exact rational number in canonical reduced form (den > 0,
/// gcd(|num|, den) = 1). Stands in for the reals: equality and apartness
/// are decidable. Arithmetic throws ArithmeticOverflow rather than wrap.
class Rat {
 public:
  constexpr Rat() noexcept = default;
  constexpr Rat(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit by design of literals
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rat operator-() const;
  Rat abs() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p" or "p/q" only in canonical form; "2/4" is rejected with a
  /// message suggesting "1/2".
  static Rat parse(std::string_view text);
  /// Like parse, but reduces non-canonical input instead of rejecting it.
  static Rat parse_lenient(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

struct Apartness {
  bool apart = false;
  Rat gap;  // |a - b|; zero when not apart
};

/// a ≠ b :⇔ |a − b| > 0, with the gap as witness.
Apartness rat_apart(const Rat& a, const Rat& b);

enum class CotransSide { ApartFromFirst, ApartFromSecond };

struct CotransChoice {
  CotransSide side;
  Rat gap;
};

/// Given a ≠ b, decides which of z ≠ a, z ≠ b holds. The larger gap wins;
/// equal gaps pick z ≠ a. Throws PreconditionViolated if a = b.
CotransChoice rat_cotrans(const Rat& a, const Rat& b, const Rat& z);

}  // namespace sepset
