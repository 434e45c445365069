#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace agora {

// Fixed-point currency in cents. Arithmetic stays exact and rendering is
// byte-stable, which keeps ledgers and transcripts reproducible.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_cents(std::int64_t cents) { return Money(cents); }

  // Accepts "18", "18.5" or "18.50". No sign, no grouping, nothing else.
  static std::optional<Money> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    std::int64_t units = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      any_digit = true;
      units = units * 10 + (text[i] - '0');
      if (units > 99'999'999) return std::nullopt;  // far past any valid amount
    }
    if (!any_digit) return std::nullopt;
    std::int64_t frac = 0;
    if (i < text.size()) {
      if (text[i] != '.') return std::nullopt;
      ++i;
      std::size_t digits = 0;
      for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        frac = frac * 10 + (text[i] - '0');
        ++digits;
      }
      if (digits == 0 || digits > 2 || i != text.size()) return std::nullopt;
      if (digits == 1) frac *= 10;
    }
    return Money(units * 100 + frac);
  }

  constexpr std::int64_t cents() const { return cents_; }

  // "18.00" -- always two fractional digits.
  std::string str() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%02lld",
                  static_cast<long long>(cents_ / 100),
                  static_cast<long long>(cents_ % 100));
    return buf;
  }

  constexpr Money& operator+=(Money other) {
    cents_ += other.cents_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) {
    return Money(a.cents_ + b.cents_);
  }
  auto operator<=>(const Money&) const = default;

 private:
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}
  std::int64_t cents_ = 0;
};

}  // namespace agora
