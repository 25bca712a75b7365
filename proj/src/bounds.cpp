#include "pluri/bounds.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pluri {

namespace {

void require_cap(const Int& C, const char* who) {
    if (C < 1) {
        throw std::domain_error(std::string(who) + ": C must be >= 1, got " + to_string(C));
    }
}

Int lcm_below_26C(const Int& C) {
    return lcm_range(2, 26 * C - 1);
}

}  // namespace

Int ekl_bound(const Int& l) {
    if (l < 1) {
        throw std::domain_error("ekl_bound: l must be >= 1, got " + to_string(l));
    }
    return 18 * l + 1;
}

Int kollar_bound(const Int& l) {
    if (l < 1) {
        throw std::domain_error("kollar_bound: l must be >= 1, got " + to_string(l));
    }
    return 11 * l + 5;
}

Int chi_cap(const std::array<Int, 4>& hodge) {
    Int sum = 0;
    for (std::size_t i = 0; i < hodge.size(); ++i) {
        if (hodge[i] < 0) {
            throw std::domain_error("chi_cap: h" + std::to_string(i) + " must be >= 0, got " +
                                    to_string(hodge[i]));
        }
        sum += hodge[i];
    }
    return sum;
}

BoundReport severi_bound(const Int& C) {
    require_cap(C, "severi_bound");
    BoundReport out;
    out.C = C;
    out.R = lcm_below_26C(C);
    out.m1 = ekl_bound(out.R);
    out.m2 = kollar_bound(13 * C);
    out.m = lcm(out.m1, out.m2);
    return out;
}

std::string bound_report_to_json(const BoundReport& report) {
    nlohmann::json doc{
        {"C", to_string(report.C)},   {"R", to_string(report.R)}, {"m1", to_string(report.m1)},
        {"m2", to_string(report.m2)}, {"m", to_string(report.m)},
    };
    return doc.dump();
}

Rat sections_lower_bound(const Int& C) {
    require_cap(C, "sections_lower_bound");
    return Rat(52 * C * C - 15 * C - 1, 24);
}

Classification classify(const Int& C, const Basket& basket) {
    require_cap(C, "classify");
    return classify(severi_bound(C), basket);
}

Classification classify(const BoundReport& bounds, const Basket& basket) {
    const Int idx = index(basket);
    if (bounds.R % idx == 0) {
        return Classification{BoundCase::IndexDividesR, idx, bounds.m1, std::nullopt};
    }
    // Every r <= 26C - 1 divides R, so some order must reach 26C.
    for (const auto& [q, count] : basket.entries()) {
        if (q.r() >= 26 * bounds.C) {
            return Classification{BoundCase::TwoSections, q.r(), bounds.m2, std::nullopt};
        }
    }
    throw std::logic_error("classify: index " + to_string(idx) + " does not divide R = " +
                           to_string(bounds.R) + " but no basket order is >= 26C");
}

Classification classify_strict(const Int& C, const CanonicalInvariants& inv) {
    Classification out = classify(C, inv.basket);
    if (inv.k3.sign() <= 0) {
        throw std::domain_error("classify: strict mode needs K^3 > 0, got " + inv.k3.str());
    }
    if (inv.chi > C) {
        throw std::domain_error("classify: strict mode needs chi <= C, got chi=" +
                                to_string(inv.chi) + " C=" + to_string(C));
    }
    out.sections = h0_ample(inv, 13 * C);
    if (out.which == BoundCase::TwoSections && *out.sections < Rat(2)) {
        throw std::logic_error("classify: Case2 but h0(" + to_string(13 * C) + "K) = " +
                               out.sections->str() + " < 2");
    }
    return out;
}

std::string format_classification(const Classification& c) {
    std::string out = c.which == BoundCase::IndexDividesR ? "Case1" : "Case2";
    out += " bound=" + to_string(c.bound) + " witness=" + to_string(c.witness);
    if (c.sections) {
        out += " sections=" + c.sections->str();
    }
    return out;
}

std::string classification_to_json(const Classification& c) {
    nlohmann::json doc{
        {"case", c.which == BoundCase::IndexDividesR ? "Case1" : "Case2"},
        {"bound", to_string(c.bound)},
        {"witness", to_string(c.witness)},
    };
    if (c.sections) {
        doc["sections"] = c.sections->str();
    }
    return doc.dump();
}

}  // namespace pluri
