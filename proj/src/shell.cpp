// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "shell.hpp"

#include <CLI11.hpp>

#include <memory>
#include <sstream>
#include <type_traits>

#include "detcy.hpp"
#include "errors.hpp"
#include "fitmodels.hpp"
#include "fpmat.hpp"
#include "froblab.hpp"
#include "suites.hpp"
#include "toddlab.hpp"

namespace mfcy {

namespace {

std::unique_ptr<CacheStore> cache_from(const Config& cfg) {
    std::string dir = cfg.get("cache.dir", "");
    if (dir.empty()) return nullptr;
    return std::make_unique<CacheStore>(dir);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

uint64_t parse_u64(const std::string& s) {
    try {
        size_t pos = 0;
        uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("not a number: " + s);
    }
}

std::vector<uint64_t> parse_u64_list(const std::string& s) {
    std::vector<uint64_t> out;
    for (const std::string& part : split(s, ','))
        if (!part.empty()) out.push_back(parse_u64(part));
    if (out.empty()) throw UsageError("empty number list");
    return out;
}

template <typename T>
std::string join_csv(const std::vector<T>& v) {
    std::string out;
    for (const T& x : v) {
        if (!out.empty()) out += ",";
        if constexpr (std::is_same_v<T, std::string>)
            out += x;
        else
            out += std::to_string(x);
    }
    return out;
}

// Monomial names in the fixed coefficient orders.
std::string monomial_name(Ambient amb, size_t k) {
    std::string out;
    auto append = [&](char var, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
    };
    if (amb == Ambient::P2) {
        append('X', kCubicMonomials[k][0]);
        append('Y', kCubicMonomials[k][1]);
        append('Z', kCubicMonomials[k][2]);
    } else {
        int a = int(k) / 3, b = int(k) % 3;
        append('U', a);
        append('S', 2 - a);
        append('V', b);
        append('T', 2 - b);
    }
    return out.empty() ? "1" : out;
}

std::string poly_str(Ambient amb, const QVec& v) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        bool neg = v[k] < 0;
        Rat mag = neg ? Rat(-v[k]) : v[k];
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono = monomial_name(amb, k);
        if (mag == 1)
            out += mono;
        else
            out += rat_str(mag) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

std::string int_poly_in_T(const std::vector<Int>& c) {
    std::string out = c.empty() ? "0" : c[0].get_str();
    for (size_t j = 1; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        bool neg = c[j] < 0;
        Int mag = abs(c[j]);
        out += neg ? " - " : " + ";
        if (mag != 1) out += mag.get_str() + "*";
        out += "T";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

FpPoint parse_point(const std::string& text, uint64_t p, const PrimeField& F) {
    std::vector<uint64_t> c;
    for (const std::string& part : split(text, ':')) c.push_back(parse_u64(part) % p);
    if (c.size() != 3) throw UsageError("points need three ':'-joined coordinates");
    return normalize_point(Ambient::P2, c, F);
}

} // namespace

int run_command(const std::vector<std::string>& args, const Config& session_cfg,
                std::string& report, std::string& error) {
    report.clear();
    error.clear();

    CLI::App app{"modular families and exact verification workbench", "mfcy"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");

    unsigned level = 0, weight = 0, opt_r = 0;
    uint64_t opt_n = 0, opt_prime = 0, opt_max_prime = 0, opt_a = 0, opt_b = 0;
    unsigned opt_m = 6;
    std::string family_id, basis_csv, primes_csv, points_text, query_text, suite_name;

    auto* eta = app.add_subcommand("eta", "print eta-quotient expansion coefficients");
    eta->add_option("--level", level)->required();
    eta->add_option("--weight", weight)->required();
    eta->add_option("--n", opt_n, "number of coefficients")->default_val(20);

    auto* apcmd = app.add_subcommand("ap", "print one expansion coefficient");
    apcmd->add_option("--level", level)->required();
    apcmd->add_option("--weight", weight)->required();
    apcmd->add_option("--n", opt_n)->required();

    auto* euler = app.add_subcommand("euler", "print the local Euler factor");
    euler->add_option("--level", level)->required();
    euler->add_option("--weight", weight)->required();
    euler->add_option("--prime", opt_prime)->required();

    auto* hecke = app.add_subcommand("hecke", "check multiplicativity and recursions");
    hecke->add_option("--level", level)->required();
    hecke->add_option("--weight", weight)->required();
    hecke->add_option("--n", opt_n, "check indices up to n")->default_val(1000);

    auto* linsys = app.add_subcommand("linsys", "describe a family's linear system");
    linsys->add_option("--family", family_id)->required();
    auto* linsys_prime = linsys->add_option("--prime", opt_prime);

    auto* scan_cmd = app.add_subcommand("scan", "count points on every fibre");
    scan_cmd->add_option("--family", family_id)->required();
    scan_cmd->add_option("--prime", opt_prime)->required();

    auto* moments = app.add_subcommand("moments", "power moments of the trace table");
    moments->add_option("--family", family_id)->required();
    moments->add_option("--prime", opt_prime)->required();
    moments->add_option("--r", opt_r, "moment order")->required();

    auto* fit_cmd = app.add_subcommand("fit", "solve for exact moment-identity coefficients");
    fit_cmd->add_option("--family", family_id)->required();
    fit_cmd->add_option("--r", opt_r, "moment order (default: pinned)");
    fit_cmd->add_option("--basis", basis_csv, "comma-separated basis functions");
    fit_cmd->add_option("--primes", primes_csv, "comma-separated fit primes");

    auto* validate_cmd = app.add_subcommand("validate", "fit and check residuals on further primes");
    validate_cmd->add_option("--family", family_id)->required();
    validate_cmd->add_option("--r", opt_r, "moment order (default: pinned)");
    validate_cmd->add_option("--basis", basis_csv, "comma-separated basis functions");
    validate_cmd->add_option("--primes", primes_csv, "comma-separated fit primes");
    validate_cmd->add_option("--max-prime", opt_max_prime, "validate up to this prime");

    auto* verify = app.add_subcommand("verify", "run one named verification suite");
    verify->add_option("--suite", suite_name)->required();

    auto* suitecmd = app.add_subcommand("suite", "run one named verification suite");
    suitecmd->add_option("name", suite_name)->required();

    auto* kummer = app.add_subcommand("kummer", "quotient-surface point counts two ways");
    kummer->add_option("--a", opt_a)->required();
    kummer->add_option("--b", opt_b)->required();
    kummer->add_option("--prime", opt_prime)->required();

    auto* detcy_cmd = app.add_subcommand("detcy", "section-matrix rank, determinant, fibres");
    detcy_cmd->add_option("--points", points_text, "';'-separated x:y:z points")->required();
    detcy_cmd->add_option("--prime", opt_prime)->default_val(11);
    detcy_cmd->add_option("--query", query_text, "point for the fibre involution");

    auto* todd = app.add_subcommand("todd", "Todd polynomial and top-coefficient table");
    todd->add_option("--m", opt_m, "polynomial degree")->default_val(6);

    std::vector<const char*> argv;
    argv.push_back("mfcy");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            report = app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            error = e.what();
            return kExitUsage;
        }

        Config cfg = session_cfg;
        if (!config_path.empty()) {
            Config file_cfg = Config::from_file(config_path);
            for (const auto& [k, v] : file_cfg.entries()) cfg.set(k, v);
        }

        std::ostringstream out;

        if (app.get_subcommands().empty()) {
            error = "a subcommand is required";
            report = app.help();
            return kExitUsage;
        }

        if (eta->parsed()) {
            const NewformSpec& f = newform(level, weight);
            PowerSeries s = eta_expand(f.recipe, size_t(opt_n) + 1);
            out << "form " << f.label << "\n";
            for (uint64_t n = 1; n <= opt_n; ++n) out << "a_" << n << " = " << s[n].get_str() << "\n";
        } else if (apcmd->parsed()) {
            if (opt_n == 0) throw UsageError("coefficient index starts at 1");
            out << ap(newform(level, weight), opt_n).get_str() << "\n";
        } else if (euler->parsed()) {
            const NewformSpec& f = newform(level, weight);
            out << "form " << f.label << " p=" << opt_prime << ": "
                << int_poly_in_T(euler_factor(f, opt_prime)) << "\n";
        } else if (hecke->parsed()) {
            const NewformSpec& f = newform(level, weight);
            auto v = hecke_check(f, size_t(opt_n) + 1);
            if (v.empty()) {
                out << "form " << f.label << ": identities ok through n = " << opt_n << "\n";
            } else {
                for (size_t i = 0; i < v.size() && i < 5; ++i)
                    out << "FAIL: " << v[i].identity << " (lhs=" << v[i].lhs.get_str()
                        << " rhs=" << v[i].rhs.get_str() << ")\n";
                report = out.str();
                error = v[0].identity;
                return kExitVerifyFailed;
            }
        } else if (linsys->parsed()) {
            const Family& F = family(family_id);
            out << "family=" << F.id
                << " kind=" << (F.kind == Family::Kind::Weierstrass ? "weierstrass" : "pencil")
                << " ambient=" << (F.amb == Ambient::P2 ? "P2" : "P1xP1") << " dim=" << F.dim()
                << " r=" << F.moment_exp << " form=" << F.form_level << "." << F.form_weight
                << "\n";
            if (F.kind == Family::Kind::Weierstrass) {
                out << "fibres: y^2 = x^3 + A*x + B over the affine (A,B) plane\n";
            } else {
                for (size_t g = 0; g < F.generators.size(); ++g)
                    out << "generator " << g << ": " << poly_str(F.amb, F.generators[g]) << "\n";
                if (F.torsion) out << "torsion=" << F.torsion << "\n";
            }
            if (linsys_prime->count() > 0 && F.kind != Family::Kind::Weierstrass) {
                PrimeField K(opt_prime);
                std::vector<std::vector<uint64_t>> rows;
                for (const QVec& g : F.generators) {
                    auto red = reduce_vec_mod_p(g, opt_prime);
                    if (!red) throw BadPrime("generator does not reduce mod " +
                                             std::to_string(opt_prime));
                    rows.push_back(*red);
                }
                if (fp_rank(rows, rows[0].size(), K) != rows.size())
                    throw BadPrime("family loses rank mod " + std::to_string(opt_prime));
                out << "rank preserved mod " << opt_prime << "\n";
            }
        } else if (scan_cmd->parsed()) {
            auto cache = cache_from(cfg);
            const Family& F = family(family_id);
            TraceTable T = scan(F, opt_prime, cache.get());
            out << "family=" << T.family_id << " p=" << T.p << " records=" << T.records.size()
                << "\n";
            for (const auto& r : T.records)
                out << "param=" << param_str(r.param) << " n=" << r.n << " a=" << r.a
                    << " singular=" << (r.fp_singular ? 1 : 0) << "\n";
        } else if (moments->parsed()) {
            auto cache = cache_from(cfg);
            const Family& F = family(family_id);
            MomentReport m = moment(scan(F, opt_prime, cache.get()), opt_r);
            out << "family=" << m.family_id << " p=" << m.p << " r=" << m.r
                << " m_all=" << m.m_all.get_str() << " m_smooth=" << m.m_smooth.get_str()
                << " singular_fibres=" << m.singular_count << " records=" << m.record_count
                << "\n";
        } else if (fit_cmd->parsed() || validate_cmd->parsed()) {
            auto cache = cache_from(cfg);
            const Family& F = family(family_id);
            const PinnedModel& pm = pinned_model(family_id);
            unsigned r = opt_r ? opt_r : pm.r;
            if (basis_csv.empty())
                basis_csv = cfg.get("fit." + family_id + ".basis", join_csv(pm.basis));
            if (primes_csv.empty())
                primes_csv = cfg.get("fit." + family_id + ".primes", join_csv(pm.fit_primes));
            std::vector<std::string> basis;
            for (const std::string& b : split(basis_csv, ','))
                if (!b.empty()) basis.push_back(b);
            std::vector<uint64_t> fit_primes = parse_u64_list(primes_csv);
            FitModel M = fit(F, r, basis, fit_primes, cache.get());
            out << "family=" << M.family_id << " r=" << M.r << "\n";
            out << "fit primes: " << join_csv(M.fit_primes) << "\n";
            for (size_t i = 0; i < M.basis.size(); ++i)
                out << M.basis[i] << ": " << rat_str(M.coeffs[i]) << "\n";
            if (validate_cmd->parsed()) {
                uint64_t vto = opt_max_prime ? opt_max_prime : pm.validate_to;
                auto primes = good_primes_up_to(F, vto);
                size_t bad = 0;
                std::string first;
                for (const auto& row : validate(M, primes, cache.get())) {
                    out << "p=" << row.p << " residual=" << rat_str(row.residual) << "\n";
                    if (row.residual != 0 && bad++ == 0)
                        first = "p=" + std::to_string(row.p) + " residual=" +
                                rat_str(row.residual);
                }
                out << "validated " << primes.size() << " good primes up to " << vto << "\n";
                if (bad) {
                    report = out.str();
                    error = first;
                    return kExitVerifyFailed;
                }
            }
        } else if (verify->parsed() || suitecmd->parsed()) {
            SuiteResult r = run_suite(suite_name, cfg);
            report = r.report;
            if (!r.pass) error = r.first_failure;
            return r.pass ? kExitOk : kExitVerifyFailed;
        } else if (kummer->parsed()) {
            KummerCounts closed = kummer_counts(opt_a, opt_b, opt_prime);
            KummerCounts enumd = kummer_counts_enumerated(opt_a, opt_b, opt_prime);
            out << "A=" << opt_a << " B=" << opt_b << " p=" << opt_prime << " a=" << closed.a
                << " f2=" << closed.f2 << " singular=" << closed.singular_quotient_count
                << " smooth=" << closed.smooth_model_count << "\n";
            bool agree = closed.a == enumd.a && closed.f2 == enumd.f2 &&
                         closed.singular_quotient_count == enumd.singular_quotient_count &&
                         closed.smooth_model_count == enumd.smooth_model_count;
            out << "enumeration agrees: " << (agree ? "yes" : "no") << "\n";
            if (!agree) {
                report = out.str();
                error = "closed form disagrees with enumeration";
                return kExitVerifyFailed;
            }
        } else if (detcy_cmd->parsed()) {
            PrimeField K(opt_prime);
            std::vector<FpPoint> pts;
            for (const std::string& t : split(points_text, ';'))
                if (!t.empty()) pts.push_back(parse_point(t, opt_prime, K));
            size_t rk = rank_profile(pts, opt_prime);
            out << "points=" << pts.size() << " rank=" << rk << " corank=" << 6 - rk << "\n";
            if (pts.size() == 6) {
                uint64_t d = det6(pts, opt_prime);
                out << "det=" << d << "\n";
                out << "member: " << (d == 0 ? "yes" : "no") << "\n";
            }
            if (pts.size() == 5) {
                FpCurve C = fibre_cubic(pts, opt_prime);
                out << "fibre=";
                for (size_t k = 0; k < C.co.size(); ++k) out << (k ? ":" : "") << C.co[k];
                out << "\nfibre_points=" << count_points(C) << "\n";
                if (!query_text.empty()) {
                    FpPoint Q = parse_point(query_text, opt_prime, K);
                    out << "tau(" << Q.str() << ") = " << tau_fibre(pts, Q, opt_prime).str()
                        << "\n";
                }
            }
        } else if (todd->parsed()) {
            unsigned bound = unsigned(cfg.get_u64("limits.todd_polynomial", 8));
            ChernPolynomial T = todd_polynomial(opt_m, bound);
            out << "Todd_" << opt_m << " = " << T.str() << "\n";
            if (opt_m <= 6)
                out << "dual route agrees: "
                    << (todd_polynomial_roots(opt_m) == T ? "yes" : "no") << "\n";
            out << "P^" << opt_m << " genus = " << rat_str(projective_genus(opt_m)) << "\n";
            for (unsigned m = 1; m <= 19; ++m)
                out << "m=" << m << " top_chern=" << rat_str(top_chern_coefficient(m)) << "\n";
        }

        report = out.str();
        return kExitOk;
    } catch (const UsageError& e) {
        error = e.what();
        return kExitUsage;
    } catch (const DegenerateError& e) {
        error = e.what();
        return kExitDegenerate;
    } catch (const std::exception& e) {
        error = e.what();
        return kExitInternal;
    }
}

} // namespace mfcy
