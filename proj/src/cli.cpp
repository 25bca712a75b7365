#include "pluri/cli.hpp"

#include "pluri/basket.hpp"
#include "pluri/bounds.hpp"
#include "pluri/exactmath.hpp"
#include "pluri/plurigenus.hpp"
#include "pluri/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pluri::cli {

namespace {

struct BasketInput {
    std::string inline_text;
    std::string file;

    void attach(CLI::App& cmd) {
        auto* text = cmd.add_option("--basket", inline_text, "basket as \"r,a;k*r,a;...\"");
        auto* path = cmd.add_option("--basket-file", file, "basket JSON file")->check(CLI::ExistingFile);
        text->excludes(path);
    }

    Basket load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            return basket_from_json(buf.str());
        }
        return parse_basket(inline_text);
    }
};

struct CapInput {
    std::string cap;
    std::vector<std::string> hodge;

    void attach(CLI::App& cmd) {
        auto* c = cmd.add_option("--chi-cap", cap, "upper bound C >= 1 on chi(O)");
        auto* h = cmd.add_option("--hodge", hodge, "h0,h1,h2,h3 of the source variety")
                      ->delimiter(',')
                      ->expected(4);
        c->excludes(h);
    }

    std::optional<Int> resolve() const {
        if (!cap.empty()) {
            return parse_int(cap);
        }
        if (!hodge.empty()) {
            std::array<Int, 4> h;
            for (std::size_t i = 0; i < 4; ++i) {
                h[i] = parse_int(hodge[i]);
            }
            return chi_cap(h);
        }
        return std::nullopt;
    }
};

bool is_json(const std::string& format) {
    return format == "json";
}

}  // namespace

int exit_code_for(const std::vector<VerifyReport>& reports) {
    bool clean = std::all_of(reports.begin(), reports.end(),
                             [](const VerifyReport& r) { return r.ok(); });
    return clean ? kOk : kViolations;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plurigenera, basket contributions and birationality bounds for canonical 3-folds"};
    app.name("pluri");
    app.require_subcommand(1);

    std::string format = "tsv";
    auto format_opt = [&](CLI::App& cmd, const std::string& dflt) {
        cmd.add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->default_str(dflt);
    };

    // contrib
    auto* contrib = app.add_subcommand("contrib", "contribution l(Q, m) of one singularity");
    std::string sing;
    std::string contrib_m;
    bool closed = false;
    bool by_definition = false;
    contrib->add_option("--sing", sing, "singularity \"r,a\"")->required();
    contrib->add_option("--m", contrib_m, "m >= 0")->required();
    auto* closed_flag = contrib->add_flag("--closed", closed, "closed form (a = 1 only)");
    contrib->add_flag("--definition", by_definition, "term-by-term definition sum")
        ->excludes(closed_flag);

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "plurigenus formula chi(mK)");
    std::string k3_text;
    std::string chi_text;
    std::string chi_m;
    std::string table_max;
    std::string integrality_max;
    bool h0 = false;
    BasketInput chi_basket;
    chi_cmd->add_option("--k3", k3_text, "K^3 as p/q")->required();
    chi_cmd->add_option("--chi", chi_text, "chi(O)")->required();
    chi_basket.attach(*chi_cmd);
    auto* m_opt = chi_cmd->add_option("--m", chi_m, "single m");
    auto* t_opt = chi_cmd->add_option("--table", table_max, "rows m = 0..M");
    auto* i_opt = chi_cmd->add_option("--integrality", integrality_max, "non-integral m in 0..M");
    m_opt->excludes(t_opt)->excludes(i_opt);
    t_opt->excludes(i_opt);
    chi_cmd->add_flag("--h0", h0, "treat K as ample and report h0(mK) (m >= 2, K^3 > 0)");
    format_opt(*chi_cmd, "tsv");

    // index
    auto* index_cmd = app.add_subcommand("index", "index of a basket (lcm of orders)");
    BasketInput index_basket;
    index_basket.attach(*index_cmd);

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "explicit birationality bounds");
    CapInput bound_cap;
    bound_cap.attach(*bound_cmd);
    std::string ekl_l;
    std::string kollar_l;
    bool sections = false;
    bound_cmd->add_option("--ekl", ekl_l, "print 18l+1");
    bound_cmd->add_option("--kollar", kollar_l, "print 11l+5");
    bound_cmd->add_flag("--sections", sections, "print (52C^2-15C-1)/24 instead of the report");
    std::string bound_format = "json";
    bound_cmd->add_option("--format", bound_format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "case split on index | R(C)");
    CapInput classify_cap;
    classify_cap.attach(*classify_cmd);
    BasketInput classify_basket;
    classify_basket.attach(*classify_cmd);
    std::string strict_k3;
    std::string strict_chi;
    auto* sk = classify_cmd->add_option("--k3", strict_k3, "strict mode: K^3");
    auto* sc = classify_cmd->add_option("--chi", strict_chi, "strict mode: chi(O)");
    sk->needs(sc);
    sc->needs(sk);
    format_opt(*classify_cmd, "tsv");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks of the contribution identities");
    bool do26 = false;
    bool do27 = false;
    std::string r_max = "60";
    std::string m_max = "200";
    std::string alpha_max = "50";
    int workers = 0;
    bool serial_ref = false;
    verify_cmd->add_flag("--prop26", do26, "closed form vs definition sum for 1/r(1,-1,1)");
    verify_cmd->add_flag("--prop27", do27, "lower bound l(1/alpha(a,-a,1)) >= l(1/beta(1,-1,1))");
    verify_cmd->add_option("--r-max", r_max, "closed-form check: max r")->capture_default_str();
    verify_cmd->add_option("--m-max", m_max, "closed-form check: max m")->capture_default_str();
    verify_cmd->add_option("--alpha-max", alpha_max, "inequality check: max alpha")
        ->capture_default_str();
    verify_cmd->add_option("--workers", workers, "OpenMP threads (0 = default)");
    verify_cmd->add_flag("--serial", serial_ref, "use the serial reference implementation");
    format_opt(*verify_cmd, "tsv");

    // search
    auto* search_cmd = app.add_subcommand("search", "baskets and K^3 matching plurigenus samples");
    std::string search_chi;
    std::string samples_text;
    std::string search_r_max = "12";
    std::string n_max = "3";
    bool list_only = false;
    search_cmd->add_option("--chi", search_chi, "chi(O)");
    search_cmd->add_option("--samples", samples_text, "samples \"m:P,m:P,...\"");
    search_cmd->add_option("--r-max", search_r_max, "max singularity order")->capture_default_str();
    search_cmd->add_option("--n-max", n_max, "max basket size")->capture_default_str();
    search_cmd->add_option("--workers", workers, "OpenMP threads (0 = default)");
    search_cmd->add_flag("--serial", serial_ref, "use the serial reference implementation");
    search_cmd->add_flag("--list", list_only, "only list the enumerated baskets");
    format_opt(*search_cmd, "tsv");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "solve K^3 for a fixed basket from samples");
    std::string fit_chi;
    std::string fit_samples;
    BasketInput fit_basket;
    fit_cmd->add_option("--chi", fit_chi, "chi(O)")->required();
    fit_cmd->add_option("--samples", fit_samples, "samples \"m:P,m:P,...\"")->required();
    fit_basket.attach(*fit_cmd);
    format_opt(*fit_cmd, "tsv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (*contrib) {
            auto q = parse_singularity(sing);
            Int m = parse_int(contrib_m);
            Rat value;
            if (closed) {
                if (q.a() != 1 && q.r() != 1) {
                    throw std::domain_error("--closed applies to 1/r(1,-1,1) only");
                }
                value = contribution_closed_1(q.r(), m);
            } else if (by_definition) {
                value = contribution_by_definition(q, m);
            } else {
                value = contribution(q, m);
            }
            out << value << "\n";
            return kOk;
        }

        if (*chi_cmd) {
            CanonicalInvariants inv{Rat::parse(k3_text), parse_int(chi_text), chi_basket.load()};
            if (!integrality_max.empty()) {
                auto bad = integrality_check(inv, parse_int(integrality_max));
                if (is_json(format)) {
                    nlohmann::json list = nlohmann::json::array();
                    for (const auto& m : bad) {
                        list.push_back(to_string(m));
                    }
                    out << nlohmann::json{{"non_integral", list}}.dump() << "\n";
                } else {
                    for (const auto& m : bad) {
                        out << m << "\n";
                    }
                }
                return kOk;
            }
            PlurigenusTable rows;
            if (!table_max.empty()) {
                Int top = parse_int(table_max);
                rows = plurigenus_table(inv, top);
                if (h0) {
                    rows.erase(rows.begin(), rows.begin() + std::min<std::ptrdiff_t>(2, static_cast<std::ptrdiff_t>(rows.size())));
                    for (auto& [m, value] : rows) {
                        value = h0_ample(inv, m);
                    }
                }
            } else {
                if (chi_m.empty()) {
                    throw std::invalid_argument("chi: one of --m, --table, --integrality is required");
                }
                Int m = parse_int(chi_m);
                Rat value = h0 ? h0_ample(inv, m) : chi_mK(inv, m);
                if (is_json(format)) {
                    out << nlohmann::json{{"m", to_string(m)}, {"value", value.str()}}.dump() << "\n";
                } else {
                    out << value << "\n";
                }
                return kOk;
            }
            out << (is_json(format) ? table_to_json(rows) + "\n" : table_to_tsv(rows));
            return kOk;
        }

        if (*index_cmd) {
            out << index(index_basket.load()) << "\n";
            return kOk;
        }

        if (*bound_cmd) {
            if (!ekl_l.empty()) {
                out << ekl_bound(parse_int(ekl_l)) << "\n";
                return kOk;
            }
            if (!kollar_l.empty()) {
                out << kollar_bound(parse_int(kollar_l)) << "\n";
                return kOk;
            }
            auto C = bound_cap.resolve();
            if (!C) {
                throw std::invalid_argument("bound: one of --chi-cap, --hodge, --ekl, --kollar is required");
            }
            if (sections) {
                out << sections_lower_bound(*C) << "\n";
                return kOk;
            }
            auto report = severi_bound(*C);
            if (bound_format == "tsv") {
                out << "C\t" << report.C << "\nR\t" << report.R << "\nm1\t" << report.m1 << "\nm2\t"
                    << report.m2 << "\nm\t" << report.m << "\n";
            } else {
                out << bound_report_to_json(report) << "\n";
            }
            return kOk;
        }

        if (*classify_cmd) {
            auto C = classify_cap.resolve();
            if (!C) {
                throw std::invalid_argument("classify: one of --chi-cap, --hodge is required");
            }
            Basket basket = classify_basket.load();
            Classification verdict =
                strict_k3.empty()
                    ? classify(*C, basket)
                    : classify_strict(*C, {Rat::parse(strict_k3), parse_int(strict_chi), basket});
            out << (is_json(format) ? classification_to_json(verdict) : format_classification(verdict))
                << "\n";
            return kOk;
        }

        if (*verify_cmd) {
            if (!do26 && !do27) {
                do26 = do27 = true;
            }
            std::vector<std::pair<std::string, VerifyReport>> reports;
            if (do26) {
                Int r = parse_int(r_max);
                Int m = parse_int(m_max);
                reports.emplace_back("prop26", serial_ref ? serial::verify_prop26(r, m)
                                                          : verify_prop26(r, m, workers));
            }
            if (do27) {
                Int a = parse_int(alpha_max);
                reports.emplace_back("prop27", serial_ref ? serial::verify_prop27(a)
                                                          : verify_prop27(a, workers));
            }
            if (is_json(format)) {
                nlohmann::json doc = nlohmann::json::object();
                for (const auto& [name, report] : reports) {
                    doc[name] = nlohmann::json::parse(report_to_json(report));
                }
                out << doc.dump() << "\n";
            } else {
                for (const auto& [name, report] : reports) {
                    out << name << "\tcases=" << report.cases
                        << "\tviolations=" << report.violations.size() << "\t" << report.range << "\n";
                    for (const auto& v : report.violations) {
                        for (const auto& [key, value] : v.params) {
                            out << key << "=" << value << " ";
                        }
                        out << "lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
                    }
                }
            }
            std::vector<VerifyReport> plain;
            for (auto& entry : reports) {
                plain.push_back(std::move(entry.second));
            }
            return exit_code_for(plain);
        }

        if (*search_cmd) {
            Int r = parse_int(search_r_max);
            Int n = parse_int(n_max);
            if (list_only) {
                for_each_basket(r, n, [&](const Basket& b) { out << format_basket(b) << "\n"; });
                return kOk;
            }
            if (search_chi.empty() || samples_text.empty()) {
                throw std::invalid_argument("search: --chi and --samples are required");
            }
            Int chi = parse_int(search_chi);
            auto samples = parse_samples(samples_text);
            auto matches = serial_ref ? serial::match_baskets(chi, samples, r, n)
                                      : match_baskets(chi, samples, r, n, workers);
            if (is_json(format)) {
                out << matches_to_json(matches) << "\n";
            } else {
                out << "basket\tk3\n";
                for (const auto& match : matches) {
                    out << format_basket(match.basket) << "\t" << match.k3 << "\n";
                }
            }
            return kOk;
        }

        if (*fit_cmd) {
            auto fit = fit_invariants(parse_int(fit_chi), fit_basket.load(), parse_samples(fit_samples));
            if (is_json(format)) {
                out << fit_to_json(fit) << "\n";
            } else {
                out << "k3\t" << fit.k3 << "\n";
                for (const auto& r : fit.residuals) {
                    out << "residual\tm=" << r.m << "\texpected=" << r.expected << "\tgot=" << r.got
                        << "\n";
                }
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kDomainError;
}

}  // namespace pluri::cli
