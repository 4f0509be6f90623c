#pragma once

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <charconv>
#include <limits>

namespace cliqph {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms. Intermediate products use 128-bit integers;
/// results that do not fit in 64 bits throw std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational abs(const Rational& r) { return r.num_ < 0 ? -r : r; }

    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" or a finite decimal such as "0.25" exactly.
    static Rational parse(std::string_view text) {
        auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
        if (text.empty()) throw fail();
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            return Rational(parse_int(text.substr(0, slash), fail), parse_int(text.substr(slash + 1), fail));
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (negative) whole.remove_prefix(1);
            if (frac.size() > 18 || (whole.empty() && frac.empty())) throw fail();
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            std::int64_t w = whole.empty() ? 0 : parse_int(whole, fail);
            std::int64_t f = frac.empty() ? 0 : parse_int(frac, fail);
            if (w < 0 || f < 0) throw fail();
            Rational r = Rational(w) + Rational(f, scale);
            return negative ? -r : r;
        }
        return Rational(parse_int(text, fail));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    template <typename Fail>
    static std::int64_t parse_int(std::string_view s, Fail&& fail) {
        std::int64_t v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw fail();
        return v;
    }

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    static Rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
};

/// A diagram coordinate: a finite rational or the infinite-death sentinel.
class Coord {
public:
    constexpr Coord() = default;
    Coord(Rational v) : value_(v) {}  // NOLINT(implicit)
    Coord(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

    static Coord infinite() { Coord c; c.infinite_ = true; return c; }

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] bool is_finite() const noexcept { return !infinite_; }
    /// Precondition: finite.
    [[nodiscard]] const Rational& value() const {
        if (infinite_) throw std::logic_error("value() of infinite coordinate");
        return value_;
    }
    [[nodiscard]] double to_double() const noexcept {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
    }

    friend bool operator==(const Coord& a, const Coord& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    /// Infinite compares greater than every finite value.
    friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    [[nodiscard]] std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }
    static Coord parse(std::string_view text) {
        if (text == "inf" || text == "+inf" || text == "-inf" || text == "Infinity") return infinite();
        return Coord(Rational::parse(text));
    }
    friend std::ostream& operator<<(std::ostream& os, const Coord& c) { return os << c.to_string(); }

private:
    Rational value_{};
    bool infinite_ = false;
};

}  // namespace cliqph
