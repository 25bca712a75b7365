#include "pluri/basket.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace pluri {

namespace {

Int twelve_times_period_sum(const Int& r) {
    return r * r - 1;
}

std::string_view trim(std::string_view s) {
    auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; };
    auto b = std::find_if(s.begin(), s.end(), not_space);
    auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string_view(&*b, static_cast<std::size_t>(e - b)) : std::string_view{};
}

Int json_int(const nlohmann::json& value, const char* key) {
    if (value.is_number_integer()) {
        return Int(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        return parse_int(value.get<std::string>());
    }
    throw ParseError(std::string("basket JSON: field '") + key + "' must be an integer");
}

nlohmann::json json_int_value(const Int& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min()) {
        return v.convert_to<std::int64_t>();
    }
    return to_string(v);
}

}  // namespace

QuotientSingularity::QuotientSingularity(Int r, Int a) : r_(std::move(r)), a_(std::move(a)) {
    if (r_ < 1) {
        throw std::domain_error("singularity order r must be >= 1, got " + to_string(r_));
    }
    if (a_ < 0 || a_ >= r_) {
        throw std::domain_error("singularity weight a must lie in [0, r), got a=" +
                                to_string(a_) + " r=" + to_string(r_));
    }
    if (gcd(a_, r_) != 1) {
        throw std::domain_error("singularity 1/" + to_string(r_) + "(" + to_string(a_) +
                                ",-" + to_string(a_) + ",1) needs gcd(a, r) = 1");
    }
}

std::strong_ordering operator<=>(const QuotientSingularity& lhs, const QuotientSingularity& rhs) {
    if (lhs.r_ != rhs.r_) {
        return lhs.r_ < rhs.r_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (lhs.a_ != rhs.a_) {
        return lhs.a_ < rhs.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

QuotientSingularity canonicalize(const QuotientSingularity& q) {
    Int other = q.r() - q.a();
    if (q.r() == 1 || q.a() <= other) {
        return q;
    }
    return QuotientSingularity(q.r(), other);
}

Rat contribution_by_definition(const QuotientSingularity& q, const Int& m) {
    if (m < 0) {
        throw std::domain_error("contribution: m must be >= 0, got " + to_string(m));
    }
    const Int& r = q.r();
    if (m <= 1 || r == 1) {
        return Rat{};
    }
    const Int b = mod_inverse(q.a(), r);
    Int acc = 0;
    Int bk = 0;  // b*k mod r
    for (Int k = 1; k < m; ++k) {
        bk += b;
        if (bk >= r) {
            bk -= r;
        }
        acc += bk * (r - bk);
    }
    return Rat(acc, 2 * r);
}

Rat contribution(const QuotientSingularity& q, const Int& m) {
    if (m < 0) {
        throw std::domain_error("contribution: m must be >= 0, got " + to_string(m));
    }
    const Int& r = q.r();
    if (m <= 1 || r == 1) {
        return Rat{};
    }
    // l(Q, qr + s) = l(Q, s) + q (r^2 - 1)/12
    Int periods = m / r;
    Int rest = m % r;
    Rat out = contribution_by_definition(q, rest);
    if (periods != 0) {
        out += Rat(periods * twelve_times_period_sum(r), 12);
    }
    return out;
}

Rat contribution_closed_1(const Int& r, const Int& m) {
    if (r < 1) {
        throw std::domain_error("contribution_closed_1: r must be >= 1, got " + to_string(r));
    }
    if (m < 0) {
        throw std::domain_error("contribution_closed_1: m must be >= 0, got " + to_string(m));
    }
    Int mbar = residue(m, r);
    Rat partial(mbar * (mbar - 1) * (3 * r + 1 - 2 * mbar), 12 * r);
    Rat periodic(twelve_times_period_sum(r) * floor_div(m, r), 12);
    return partial + periodic;
}

// ---------------------------------------------------------------------------

Basket& Basket::add(const QuotientSingularity& q, const Int& count) {
    if (count < 1) {
        throw std::domain_error("basket multiplicity must be >= 1, got " + to_string(count));
    }
    entries_[canonicalize(q)] += count;
    return *this;
}

Int Basket::size() const {
    Int n = 0;
    for (const auto& [q, count] : entries_) {
        n += count;
    }
    return n;
}

Int Basket::max_r() const {
    return entries_.empty() ? Int(1) : entries_.rbegin()->first.r();
}

Basket operator+(Basket lhs, const Basket& rhs) {
    for (const auto& [q, count] : rhs.entries_) {
        lhs.add(q, count);
    }
    return lhs;
}

Rat contribution(const Basket& basket, const Int& m) {
    Rat total;
    for (const auto& [q, count] : basket.entries()) {
        total += contribution(q, m) * Rat(count);
    }
    return total;
}

Int index(const Basket& basket) {
    Int out = 1;
    for (const auto& [q, count] : basket.entries()) {
        out = lcm(out, q.r());
    }
    return out;
}

// ---------------------------------------------------------------------------

QuotientSingularity parse_singularity(std::string_view text) {
    std::string_view body = trim(text);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("bad basket entry '" + std::string(text) + "': expected \"r,a\"");
    }
    try {
        Int r = parse_int(trim(body.substr(0, comma)));
        Int a = parse_int(trim(body.substr(comma + 1)));
        return QuotientSingularity(std::move(r), std::move(a));
    } catch (const std::exception& e) {
        throw ParseError("bad basket entry '" + std::string(text) + "': " + e.what());
    }
}

Basket parse_basket(std::string_view text) {
    Basket out;
    if (trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        auto end = text.find(';', start);
        std::string_view entry =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::string_view body = trim(entry);
        Int count = 1;
        auto star = body.find('*');
        if (star != std::string_view::npos) {
            try {
                count = parse_int(trim(body.substr(0, star)));
            } catch (const std::exception& e) {
                throw ParseError("bad basket entry '" + std::string(entry) + "': " + e.what());
            }
            if (count < 1) {
                throw ParseError("bad basket entry '" + std::string(entry) +
                                 "': multiplicity must be >= 1");
            }
            body = body.substr(star + 1);
        }
        if (body.empty()) {
            throw ParseError("bad basket entry '" + std::string(entry) + "': empty entry");
        }
        auto q = parse_singularity(body);
        out.add(q, count);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::string format_basket(const Basket& basket) {
    std::string out;
    for (const auto& [q, count] : basket.entries()) {
        if (!out.empty()) {
            out += ';';
        }
        if (count != 1) {
            out += to_string(count) + "*";
        }
        out += to_string(q.r()) + "," + to_string(q.a());
    }
    return out;
}

Basket basket_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("basket JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("basket") || !doc["basket"].is_array()) {
        throw ParseError("basket JSON: expected {\"basket\": [...]}");
    }
    Basket out;
    for (const auto& item : doc["basket"]) {
        if (!item.is_object() || !item.contains("r") || !item.contains("a")) {
            throw ParseError("bad basket entry '" + item.dump() + "': needs \"r\" and \"a\"");
        }
        Int count = item.contains("count") ? json_int(item["count"], "count") : Int(1);
        try {
            out.add(QuotientSingularity(json_int(item["r"], "r"), json_int(item["a"], "a")), count);
        } catch (const std::domain_error& e) {
            throw ParseError("bad basket entry '" + item.dump() + "': " + e.what());
        }
    }
    return out;
}

std::string basket_to_json(const Basket& basket) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [q, count] : basket.entries()) {
        entries.push_back(
            {{"r", json_int_value(q.r())}, {"a", json_int_value(q.a())}, {"count", json_int_value(count)}});
    }
    return nlohmann::json{{"basket", entries}}.dump();
}

}  // namespace pluri
