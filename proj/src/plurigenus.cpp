#include "pluri/plurigenus.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pluri {

Rat k3_coefficient(const Int& m) {
    return Rat((2 * m - 1) * m * (m - 1), 12);
}

Int chi_coefficient(const Int& m) {
    return -(2 * m - 1);
}

Rat chi_mK(const CanonicalInvariants& inv, const Int& m) {
    if (m < 0) {
        throw std::domain_error("chi_mK: m must be >= 0, got " + to_string(m));
    }
    return k3_coefficient(m) * inv.k3 + Rat(chi_coefficient(m) * inv.chi) +
           contribution(inv.basket, m);
}

Rat h0_ample(const CanonicalInvariants& inv, const Int& m) {
    if (m < 2) {
        throw std::domain_error("h0_ample: vanishing only gives h0 = chi for m >= 2, got m=" +
                                to_string(m));
    }
    if (inv.k3.sign() <= 0) {
        throw std::domain_error("h0_ample: K^3 must be positive, got " + inv.k3.str());
    }
    return chi_mK(inv, m);
}

std::vector<Int> integrality_check(const CanonicalInvariants& inv, const Int& m_max) {
    std::vector<Int> bad;
    for (Int m = 0; m <= m_max; ++m) {
        if (!chi_mK(inv, m).is_integer()) {
            bad.push_back(m);
        }
    }
    return bad;
}

PlurigenusTable plurigenus_table(const CanonicalInvariants& inv, const Int& m_max) {
    PlurigenusTable rows;
    for (Int m = 0; m <= m_max; ++m) {
        rows.emplace_back(m, chi_mK(inv, m));
    }
    return rows;
}

std::string table_to_tsv(const PlurigenusTable& table) {
    std::string out = "m\tvalue\n";
    for (const auto& [m, value] : table) {
        out += to_string(m) + "\t" + value.str() + "\n";
    }
    return out;
}

std::string table_to_json(const PlurigenusTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [m, value] : table) {
        rows.push_back({{"m", to_string(m)}, {"value", value.str()}});
    }
    return nlohmann::json{{"table", rows}}.dump();
}

}  // namespace pluri
