#include "pluri/exactmath.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>
#include <ostream>
#include <stdexcept>

namespace pluri {

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    Int out = abs(a) / gcd(a, b) * abs(b);
    return out;
}

Int lcm_range(const Int& lo, const Int& hi) {
    if (lo < 2) {
        throw std::domain_error("lcm_range: lower end must be >= 2, got " + to_string(lo));
    }
    if (hi < lo) {
        throw std::domain_error("lcm_range: empty range [" + to_string(lo) + ", " +
                                to_string(hi) + "]");
    }
    Int acc = 1;
    for (Int k = lo; k <= hi; ++k) {
        acc = lcm(acc, k);
    }
    return acc;
}

Int residue(const Int& j, const Int& r) {
    if (r < 1) {
        throw std::domain_error("residue: modulus must be >= 1, got " + to_string(r));
    }
    Int out = j % r;
    if (out < 0) {
        out += r;
    }
    return out;
}

Int floor_div(const Int& j, const Int& r) {
    return (j - residue(j, r)) / r;
}

Int mod_inverse(const Int& a, const Int& r) {
    if (r < 1) {
        throw std::domain_error("mod_inverse: modulus must be >= 1, got " + to_string(r));
    }
    if (r == 1) {
        return 0;
    }
    // extended Euclid on (a mod r, r), tracking the coefficient of a
    Int old_rem = residue(a, r);
    Int rem = r;
    Int old_coef = 1;
    Int coef = 0;
    while (rem != 0) {
        Int q = old_rem / rem;
        Int t = old_rem - q * rem;
        old_rem = rem;
        rem = t;
        t = old_coef - q * coef;
        old_coef = coef;
        coef = t;
    }
    if (old_rem != 1) {
        throw std::domain_error("mod_inverse: " + to_string(a) + " is not invertible mod " +
                                to_string(r));
    }
    return residue(old_coef, r);
}

Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    Int out = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
        out = out * 10 + (c - '0');
    }
    return negative ? Int(-out) : out;
}

std::string to_string(const Int& value) {
    return value.str();
}

std::int64_t to_small(const Int& value, std::string_view what) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::domain_error(std::string(what) + " out of supported range: " +
                                to_string(value));
    }
    return value.convert_to<std::int64_t>();
}

// ---------------------------------------------------------------------------

Rat::Rat(Int numerator) : num_(std::move(numerator)), den_(1) {}

Rat::Rat(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw std::domain_error("Rat: zero denominator");
    }
    normalize();
}

void Rat::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Int Rat::floor() const {
    return floor_div(num_, den_);
}

Rat Rat::operator-() const {
    Rat out = *this;
    out.num_ = -out.num_;
    return out;
}

Rat& Rat::operator+=(const Rat& other) {
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& other) {
    return *this += -other;
}

Rat& Rat::operator*=(const Rat& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& other) {
    if (other.num_ == 0) {
        throw std::domain_error("Rat: division by zero");
    }
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    Int l = lhs.num_ * rhs.den_;
    Int r = rhs.num_ * lhs.den_;
    if (l < r) {
        return std::strong_ordering::less;
    }
    if (l > r) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    if (den_ == 1) {
        return to_string(num_);
    }
    return to_string(num_) + "/" + to_string(den_);
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rat(parse_int(text.substr(0, slash)), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rat& value) {
    return os << value.str();
}

}  // namespace pluri
