#pragma once

// Exact integer and rational kernel. Every value in the library flows
// through Int or Rat; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pluri {

using Int = boost::multiprecision::cpp_int;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// lcm of every integer in [lo, hi]. Requires 2 <= lo <= hi.
Int lcm_range(const Int& lo, const Int& hi);

/// Smallest nonnegative residue of j modulo r (r >= 1), also for negative j.
Int residue(const Int& j, const Int& r);

/// The unique b in [0, r) with a*b = 1 mod r. Returns 0 for r = 1.
/// Throws std::domain_error when gcd(a, r) != 1 or r < 1.
Int mod_inverse(const Int& a, const Int& r);

/// Floor division for r > 0.
Int floor_div(const Int& j, const Int& r);

Int parse_int(std::string_view text);
std::string to_string(const Int& value);

/// Narrow an Int that is used as a loop bound. Throws std::domain_error
/// naming `what` when the value does not fit.
std::int64_t to_small(const Int& value, std::string_view what);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(Int numerator);  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t numerator) : Rat(Int(numerator)) {}  // NOLINT
    Rat(Int numerator, Int denominator);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Greatest integer <= *this.
    Int floor() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

    /// "p/q", or bare "n" when integral.
    std::string str() const;
    /// Accepts "n", "-n", "p/q" with q != 0; the result is normalized.
    static Rat parse(std::string_view text);

private:
    void normalize();

    Int num_{0};
    Int den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rat& value);

}  // namespace pluri
