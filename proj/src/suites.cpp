// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "suites.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>
#include <type_traits>

#include "detcy.hpp"
#include "errors.hpp"
#include "fitmodels.hpp"
#include "froblab.hpp"
#include "toddlab.hpp"

namespace mfcy {

namespace {

// Report builder. The first failure is remembered for the summary line.
struct Out {
    std::ostringstream os;
    bool pass = true;
    std::string first_failure;

    void line(const std::string& s) { os << s << "\n"; }
    void fail(const std::string& why) {
        if (pass) {
            pass = false;
            first_failure = why;
        }
        os << "FAIL: " << why << "\n";
    }
};

SuiteResult finish(const std::string& name, Out& o) {
    if (o.pass)
        o.os << "result: pass\n";
    else
        o.os << "result: fail (" << o.first_failure << ")\n";
    return {name, o.pass, o.os.str(), o.first_failure};
}

std::unique_ptr<CacheStore> cache_from(const Config& cfg) {
    std::string dir = cfg.get("cache.dir", "");
    if (dir.empty()) return nullptr;
    return std::make_unique<CacheStore>(dir);
}

template <class T>
std::string num(T v) {
    return std::to_string(v);
}

template <class T>
std::string join(const std::vector<T>& items, const char* sep) {
    std::string out;
    for (const T& it : items) {
        if (!out.empty()) out += sep;
        if constexpr (std::is_same_v<T, std::string>)
            out += it;
        else
            out += std::to_string(it);
    }
    return out;
}

// Certified smooth: no rational singular point, and not the conjugate
// singular count 2p+2 (a smooth cubic stays below it by the Hasse bound).
bool certified_smooth(const TraceRecord& r, uint64_t p) {
    return !r.fp_singular && r.n != 2 * p + 2;
}

SuiteResult suite_hecke(const Config& cfg) {
    Out o;
    o.line("suite hecke");
    uint64_t max_n = cfg.get_u64("suite.hecke.max_n", 1000);
    for (const auto& f : newform_registry()) {
        auto v = hecke_check(f, max_n + 1);
        if (v.empty())
            o.line("form " + f.label + ": identities ok through n = " + num(max_n));
        else
            o.fail("form " + f.label + " violates " + v[0].identity + " (lhs=" +
                   v[0].lhs.get_str() + " rhs=" + v[0].rhs.get_str() + ")");
    }
    return finish("hecke", o);
}

SuiteResult suite_shimura(const Config& cfg) {
    Out o;
    o.line("suite shimura");
    uint64_t bound = cfg.get_u64("suite.shimura.max_prime", 500);
    const NewformSpec& f = newform(11, 2);
    size_t checked = 0;
    for (uint64_t p : primes_below(bound)) {
        if (p == 11) {
            o.line("p=11: bad reduction, skipped");
            continue;
        }
        int64_t tr = conductor11_trace(p);
        Int expect = ap(f, p);
        if (Int(tr) == expect) {
            o.line("p=" + num(p) + " trace=" + num(tr) + " ap=" + expect.get_str() + " ok");
            ++checked;
        } else {
            o.fail("p=" + num(p) + " trace=" + num(tr) + " but ap=" + expect.get_str());
        }
    }
    o.line("checked " + num(checked) + " primes below " + num(bound));
    return finish("shimura", o);
}

struct MomentSuite {
    const char* suite_name;
    const char* family_id;
    uint64_t short_validate_to; // validation ceiling for the short basis
    bool require_ap_nonzero;
};

SuiteResult moment_suite(const MomentSuite& ms, const Config& cfg) {
    Out o;
    o.line(std::string("suite ") + ms.suite_name);
    auto cache = cache_from(cfg);
    const Family& F = family(ms.family_id);
    const InfeasibleBasis& demo = infeasible_basis(ms.family_id);
    const PinnedModel& pm = pinned_model(ms.family_id);

    o.line("short basis (r=" + num(uint64_t(demo.r)) + "): " + join(demo.basis, ","));
    o.line("short fit primes: " + join(demo.fit_primes, ","));
    bool demo_clean = false;
    try {
        FitModel dm = fit(F, demo.r, demo.basis, demo.fit_primes, cache.get());
        auto primes = good_primes_up_to(F, ms.short_validate_to);
        size_t bad = 0;
        for (const auto& row : validate(dm, primes, cache.get())) {
            o.line("  p=" + num(row.p) + " residual=" + rat_str(row.residual));
            if (row.residual != 0) ++bad;
        }
        demo_clean = bad == 0;
        if (demo_clean)
            o.line("short basis validates exactly up to " + num(ms.short_validate_to));
        else
            o.line("short basis admits no exact identity (" + num(bad) +
                   " nonzero residuals up to " + num(ms.short_validate_to) + ")");
    } catch (const DegenerateError& e) {
        o.line(std::string("short basis: no exact fit (") + e.what() + ")");
    }

    o.line("pinned basis (r=" + num(uint64_t(pm.r)) + "): " + join(pm.basis, ","));
    o.line("pinned fit primes: " + join(pm.fit_primes, ","));
    FitModel M = fit(F, pm.r, pm.basis, pm.fit_primes, cache.get());
    bool coeffs_match = M.coeffs.size() == pm.coeffs.size();
    for (size_t i = 0; coeffs_match && i < M.coeffs.size(); ++i)
        if (M.coeffs[i] != Rat(pm.coeffs[i])) coeffs_match = false;
    for (size_t i = 0; i < M.coeffs.size(); ++i)
        o.line("  " + M.basis[i] + ": " + rat_str(M.coeffs[i]));
    if (coeffs_match)
        o.line("fit reproduces the pinned coefficients");
    else
        o.fail("fitted coefficients differ from the pinned model");

    uint64_t vto =
        cfg.get_u64(std::string("suite.") + ms.suite_name + ".max_prime", pm.validate_to);
    auto vp = good_primes_up_to(F, vto);
    for (const auto& row : validate(M, vp, cache.get())) {
        if (row.residual == 0)
            o.line("  p=" + num(row.p) + " residual=0");
        else
            o.fail("p=" + num(row.p) + " residual=" + rat_str(row.residual));
    }
    o.line("validated " + num(vp.size()) + " good primes up to " + num(vto));

    if (ms.require_ap_nonzero) {
        Rat c_ap(0);
        for (size_t i = 0; i < M.basis.size(); ++i)
            if (M.basis[i] == "ap") c_ap = M.coeffs[i];
        if (c_ap != 0)
            o.line("a_p coefficient: " + rat_str(c_ap) + " (nonzero)");
        else
            o.fail("a_p coefficient is zero");
    }
    if (demo_clean) o.line("note: the short basis alone already satisfies the identity");
    return finish(ms.suite_name, o);
}

const char* kCubicFamilies[] = {"level2_cubic", "level3_cubic", "level4_cubic", "level5_cubic"};

SuiteResult suite_torsion(const Config& cfg) {
    Out o;
    o.line("suite torsion");
    auto cache = cache_from(cfg);
    uint64_t bound = cfg.get_u64("suite.torsion.max_prime", 50);
    for (const char* id : kCubicFamilies) {
        const Family& F = family(id);
        for (uint64_t p : good_primes_up_to(F, bound)) {
            TraceTable T = scan(F, p, cache.get());
            PrimeField K(p);
            FpPoint origin = normalize_point(F.amb, *reduce_vec_mod_p(F.origin, p), K);
            FpPoint marked = normalize_point(F.amb, *reduce_vec_mod_p(F.marked, p), K);
            size_t smooth = 0, good = 0;
            for (const auto& r : T.records) {
                if (!certified_smooth(r, p)) continue;
                ++smooth;
                FpCurve C = fibre_at(F, p, r.param);
                auto ord = cubic_order({C, origin}, marked, F.torsion);
                if (ord && *ord == F.torsion)
                    ++good;
                else
                    o.fail(std::string("family=") + id + " p=" + num(p) + " param=" +
                           param_str(r.param) + " marked point order is not " +
                           num(uint64_t(F.torsion)));
            }
            o.line(std::string("family=") + id + " p=" + num(p) + " smooth_fibres=" +
                   num(smooth) + " order=" + num(uint64_t(F.torsion)) + " ok=" + num(good));
        }
    }
    return finish("torsion", o);
}

SuiteResult suite_hasse(const Config& cfg) {
    Out o;
    o.line("suite hasse");
    auto cache = cache_from(cfg);
    uint64_t bound = std::min(cfg.get_u64("suite.hasse.max_prime", 31),
                              cfg.get_u64("limits.diagnostic_prime", 31));
    for (const char* id : kCubicFamilies) {
        const Family& F = family(id);
        for (uint64_t p : good_primes_up_to(F, bound)) {
            TraceTable T = scan(F, p, cache.get());
            size_t smooth = 0;
            int64_t worst = 0;
            for (const auto& r : T.records) {
                if (!certified_smooth(r, p)) continue;
                ++smooth;
                int64_t a2 = r.a * r.a;
                if (a2 > worst) worst = a2;
                if (uint64_t(a2) > 4 * p)
                    o.fail(std::string("family=") + id + " p=" + num(p) + " param=" +
                           param_str(r.param) + " a=" + num(r.a) + " breaks the Hasse bound");
            }
            o.line(std::string("family=") + id + " p=" + num(p) + " smooth_fibres=" +
                   num(smooth) + " max_a2=" + num(worst) + " 4p=" + num(4 * p) + " ok");
        }
    }
    return finish("hasse", o);
}

SuiteResult suite_kummer(const Config& cfg) {
    Out o;
    o.line("suite kummer");
    uint64_t bound = cfg.get_u64("suite.kummer.max_prime", 31);
    const std::pair<uint64_t, uint64_t> curves[] = {{1, 0}, {0, 1}, {2, 3}};
    for (auto [A, B] : curves) {
        for (uint64_t p : primes_below(bound + 1)) {
            std::string head =
                "A=" + num(A) + " B=" + num(B) + " p=" + num(p);
            if (p == 2) {
                o.line(head + ": even characteristic, skipped");
                continue;
            }
            try {
                KummerCounts closed = kummer_counts(A, B, p);
                KummerCounts enumd = kummer_counts_enumerated(A, B, p);
                bool agree = closed.a == enumd.a && closed.f2 == enumd.f2 &&
                             closed.singular_quotient_count == enumd.singular_quotient_count &&
                             closed.smooth_model_count == enumd.smooth_model_count;
                Int lhs = Int(enumd.smooth_model_count) - Int(p + 1) * Int(p + 1) -
                          Int(enumd.a) * Int(enumd.a);
                bool blowup = lhs == Int(p) * Int(enumd.f2);
                if (agree && blowup)
                    o.line(head + " a=" + num(enumd.a) + " f2=" + num(enumd.f2) + " singular=" +
                           num(enumd.singular_quotient_count) + " smooth=" +
                           num(enumd.smooth_model_count) + " ok");
                else if (!agree)
                    o.fail(head + ": closed form disagrees with enumeration");
                else
                    o.fail(head + ": blow-up count identity fails");
            } catch (const BadReduction&) {
                o.line(head + ": bad reduction, skipped");
            }
        }
    }
    return finish("kummer", o);
}

SuiteResult suite_detcy(const Config& cfg) {
    Out o;
    o.line("suite detcy");
    uint64_t seed = cfg.get_u64("suite.detcy.seed", 20260823);
    uint64_t trials = cfg.get_u64("suite.detcy.trials", 100);
    uint64_t want_fibres = cfg.get_u64("suite.detcy.fibres", 10);
    o.line("seed=" + num(seed));
    std::mt19937 rng(static_cast<uint32_t>(seed));

    auto is_base = [](const FpPoint& pt) {
        return pt.c == std::vector<uint64_t>{1, 0, 0} || pt.c == std::vector<uint64_t>{0, 1, 0} ||
               pt.c == std::vector<uint64_t>{0, 0, 1} || pt.c == std::vector<uint64_t>{1, 1, 1};
    };
    auto draw_point = [&](uint64_t p, const PrimeField& K) {
        for (;;) {
            std::vector<uint64_t> c{rng() % p, rng() % p, rng() % p};
            if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
            FpPoint pt = normalize_point(Ambient::P2, c, K);
            if (!is_base(pt)) return pt;
        }
    };
    size_t tuple_redraws = 0;
    auto draw_tuple = [&](size_t n, uint64_t p, const PrimeField& K) {
        for (;;) {
            std::vector<FpPoint> pts;
            bool dup = false;
            for (size_t i = 0; i < n; ++i) {
                FpPoint q = draw_point(p, K);
                for (const auto& prev : pts)
                    if (prev == q) dup = true;
                pts.push_back(q);
            }
            if (!dup) return pts;
            ++tuple_redraws;
        }
    };

    const uint64_t P = 101;
    PrimeField K101(P);

    size_t rank_ok = 0;
    const size_t rank_trials = 60;
    for (size_t t = 0; t < rank_trials; ++t) {
        size_t n = t % 6 + 1;
        auto pts = draw_tuple(n, P, K101);
        size_t rk = rank_profile(pts, P);
        if (rk == n)
            ++rank_ok;
        else
            o.fail("rank trial " + num(t) + ": rank " + num(rk) + " for " + num(n) + " points");
    }
    o.line("rank trials over F_101: " + num(rank_ok) + "/" + num(rank_trials) +
           " with corank 6-n");

    size_t mem_ok = 0, on_count = 0, off_count = 0, degenerate_redraws = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        for (;;) {
            auto five = draw_tuple(5, P, K101);
            try {
                FpCurve C = fibre_cubic(five, P);
                FpPoint Q;
                if (t % 2 == 0) {
                    std::vector<FpPoint> on;
                    for (const auto& cand : ambient_points(Ambient::P2, P))
                        if (!is_base(cand) && eval_curve(C, cand) == 0) on.push_back(cand);
                    Q = on[rng() % on.size()];
                } else {
                    do Q = draw_point(P, K101);
                    while (eval_curve(C, Q) == 0);
                }
                auto six = five;
                six.push_back(Q);
                bool member = v6_member(six, P);
                bool onf = eval_curve(C, Q) == 0;
                size_t rk = rank_profile(six, P);
                ++(onf ? on_count : off_count);
                if (member == onf && rk == (onf ? 5u : 6u))
                    ++mem_ok;
                else
                    o.fail("membership trial " + num(t) + " disagrees with the fibre cubic");
                break;
            } catch (const DegenerateError&) {
                ++degenerate_redraws;
            }
        }
    }
    o.line("membership trials over F_101: " + num(mem_ok) + "/" + num(trials) + " (on-fibre " +
           num(on_count) + ", off-fibre " + num(off_count) + ", redraws " +
           num(degenerate_redraws) + ")");

    const uint64_t p11 = 11;
    PrimeField K11(p11);
    size_t fibres = 0, invol_pts = 0, hom_checks = 0, fibre_redraws = 0;
    while (fibres < want_fibres) {
        auto five = draw_tuple(5, p11, K11);
        try {
            FpCurve C = fibre_cubic(five, p11);
            auto sl = singular_points(C, 2);
            if (!sl.rational.empty() || !sl.quadratic.empty()) {
                ++fibre_redraws;
                continue;
            }
            ++fibres;
            CubicWithOrigin G{C, five[4]};
            std::vector<FpPoint> pts;
            for (const auto& cand : ambient_points(Ambient::P2, p11))
                if (eval_curve(C, cand) == 0) pts.push_back(cand);
            for (const auto& Q : pts) {
                FpPoint R = tau_fibre(five, Q, p11);
                if (tau_fibre(five, R, p11) == Q)
                    ++invol_pts;
                else
                    o.fail("fibre " + num(fibres) + ": tau fails to be an involution at " +
                           Q.str());
            }
            for (unsigned s = 0; s < 12; ++s) {
                const FpPoint& Pa = pts[(3 * s + 1) % pts.size()];
                const FpPoint& Pb = pts[(5 * s + 2) % pts.size()];
                FpPoint sum = cubic_add(G, Pa, Pb);
                FpPoint left = tau_fibre(five, sum, p11);
                FpPoint right = cubic_add(G, tau_fibre(five, Pa, p11), tau_fibre(five, Pb, p11));
                if (left == right)
                    ++hom_checks;
                else
                    o.fail("fibre " + num(fibres) + ": tau is not a homomorphism at " +
                           Pa.str() + ", " + Pb.str());
            }
        } catch (const DegenerateError&) {
            ++fibre_redraws;
        }
    }
    o.line("tau checks over F_11: fibres=" + num(fibres) + " involution_points=" +
           num(invol_pts) + " homomorphism_checks=" + num(hom_checks) + " redraws=" +
           num(fibre_redraws));
    o.line("tuple redraws: " + num(tuple_redraws));
    return finish("detcy", o);
}

SuiteResult suite_todd(const Config& cfg) {
    Out o;
    o.line("suite todd");
    unsigned max_m = unsigned(cfg.get_u64("suite.todd.max_m", 19));
    for (unsigned m = 1; m <= max_m; ++m) {
        Rat t = top_chern_coefficient(m);
        o.line("m=" + num(uint64_t(m)) + " top_chern=" + rat_str(t));
        if (m >= 3 && m % 2 == 1 && t != 0)
            o.fail("top Chern coefficient nonzero in odd degree " + num(uint64_t(m)));
    }
    for (unsigned m = 1; m <= 6; ++m) {
        ChernPolynomial newton = todd_polynomial(m);
        ChernPolynomial roots = todd_polynomial_roots(m);
        if (newton == roots)
            o.line("Todd_" + num(uint64_t(m)) + " = " + newton.str() + " (dual route agrees)");
        else
            o.fail("the two Todd_" + num(uint64_t(m)) + " routes disagree");
        Rat g = projective_genus(m);
        if (g == 1)
            o.line("P^" + num(uint64_t(m)) + " genus = 1");
        else
            o.fail("P^" + num(uint64_t(m)) + " genus = " + rat_str(g));
    }
    return finish("todd", o);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "hecke",          "shimura",        "delta-birch",    "level5-weight4",
        "level4-weight6", "level3-weight6", "level2-weight8", "torsion",
        "hasse",          "kummer",         "detcy",          "todd"};
    return names;
}

SuiteResult run_suite(const std::string& name, const Config& cfg) {
    if (name == "hecke") return suite_hecke(cfg);
    if (name == "shimura") return suite_shimura(cfg);
    if (name == "delta-birch")
        return moment_suite({"delta-birch", "level1_weierstrass", 97, true}, cfg);
    if (name == "level5-weight4")
        return moment_suite({"level5-weight4", "level5_cubic", 199, false}, cfg);
    if (name == "level4-weight6")
        return moment_suite({"level4-weight6", "level4_cubic", 149, false}, cfg);
    if (name == "level3-weight6")
        return moment_suite({"level3-weight6", "level3_cubic", 61, false}, cfg);
    if (name == "level2-weight8")
        return moment_suite({"level2-weight8", "level2_cubic", 31, false}, cfg);
    if (name == "torsion") return suite_torsion(cfg);
    if (name == "hasse") return suite_hasse(cfg);
    if (name == "kummer") return suite_kummer(cfg);
    if (name == "detcy") return suite_detcy(cfg);
    if (name == "todd") return suite_todd(cfg);
    throw UsageError("unknown suite " + name);
}

} // namespace mfcy
