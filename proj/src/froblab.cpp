// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "froblab.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "fpmat.hpp"

namespace mfcy {

namespace {

QVec dense(size_t n, std::initializer_list<std::pair<int, int>> entries) {
    QVec v(n, Rat(0));
    for (auto [i, val] : entries) v[static_cast<size_t>(i)] = Rat(val);
    return v;
}

std::vector<Family> build_registry() {
    std::vector<Family> fams;

    Family f;
    f.id = "level5_cubic";
    f.amb = Ambient::P2;
    // YZ(X+Y+Z) and YZ(Y+Z) - X(X+Z)^2
    f.generators = {dense(10, {{4, 1}, {7, 1}, {8, 1}}),
                    dense(10, {{7, 1}, {8, 1}, {0, -1}, {2, -2}, {5, -1}})};
    f.origin = dense(3, {{1, 1}});
    f.marked = dense(3, {{1, 1}, {2, -1}});
    f.torsion = 5;
    f.moment_exp = 2;
    f.form_level = 5;
    f.form_weight = 4;
    fams.push_back(f);

    f = Family{};
    f.id = "level4_cubic";
    f.amb = Ambient::P2;
    // X(X-Z)^2 and YZ(X-Y)
    f.generators = {dense(10, {{0, 1}, {2, -2}, {5, 1}}), dense(10, {{4, 1}, {7, -1}})};
    f.origin = dense(3, {{1, 1}});
    f.marked = dense(3, {{0, 1}, {2, 1}});
    f.torsion = 4;
    f.moment_exp = 4;
    f.form_level = 4;
    f.form_weight = 6;
    fams.push_back(f);

    f = Family{};
    f.id = "level3_cubic";
    f.amb = Ambient::P2;
    // XY(X-Z), YZ(Y-X), ZX(Z-Y)
    f.generators = {dense(10, {{1, 1}, {4, -1}}), dense(10, {{7, 1}, {4, -1}}),
                    dense(10, {{5, 1}, {4, -1}})};
    f.origin = dense(3, {{0, 1}});
    f.marked = dense(3, {{1, 1}});
    f.torsion = 3;
    f.moment_exp = 4;
    f.form_level = 3;
    f.form_weight = 6;
    fams.push_back(f);

    f = Family{};
    f.id = "level2_cubic";
    f.amb = Ambient::P2;
    // XY(X-Z), XZ(X-Y), YZ(Y-X), ZY(Z-X)
    f.generators = {dense(10, {{1, 1}, {4, -1}}), dense(10, {{2, 1}, {4, -1}}),
                    dense(10, {{7, 1}, {4, -1}}), dense(10, {{8, 1}, {4, -1}})};
    f.origin = dense(3, {{2, 1}});
    f.marked = dense(3, {{1, 1}});
    f.torsion = 2;
    f.moment_exp = 6;
    f.form_level = 2;
    f.form_weight = 8;
    fams.push_back(f);

    f = Family{};
    f.id = "level1_weierstrass";
    f.kind = Family::Kind::Weierstrass;
    f.amb = Ambient::P2;
    f.moment_exp = 10;
    f.form_level = 1;
    f.form_weight = 12;
    fams.push_back(f);

    f = Family{};
    f.id = "level5_22";
    f.amb = Ambient::P1xP1;
    f.generators = {
        dense(9, {{0, 1}, {1, -2}, {2, 1}, {3, -2}, {5, -1}, {6, 1}, {7, -1}}),
        dense(9, {{4, 1}})};
    f.moment_exp = 2;
    f.form_level = 5;
    f.form_weight = 4;
    fams.push_back(f);

    f = Family{};
    f.id = "level4_22";
    f.amb = Ambient::P1xP1;
    f.generators = {dense(9, {{2, 1}, {6, 1}, {7, -2}}), dense(9, {{3, 1}, {6, -1}}),
                    dense(9, {{4, 1}, {7, -1}}), dense(9, {{5, 1}, {6, 1}, {7, -2}})};
    f.predicate = Family::Predicate::ResidualMatch;
    f.moment_exp = 4;
    f.form_level = 4;
    f.form_weight = 6;
    fams.push_back(f);

    f = Family{};
    f.id = "level3_22";
    f.amb = Ambient::P1xP1;
    f.generators = {dense(9, {{2, 1}, {5, -2}, {7, 1}}), dense(9, {{3, 1}, {5, -1}, {6, -1}, {7, 1}}),
                    dense(9, {{4, 1}, {5, -1}})};
    f.moment_exp = 4;
    f.form_level = 3;
    f.form_weight = 6;
    fams.push_back(f);

    f = Family{};
    f.id = "level2_22";
    f.amb = Ambient::P1xP1;
    f.generators = {dense(9, {{2, 1}, {7, -1}}), dense(9, {{3, 1}, {7, -1}}),
                    dense(9, {{4, 1}, {7, -1}}), dense(9, {{5, 1}, {7, -1}}),
                    dense(9, {{6, 1}, {7, -1}})};
    f.predicate = Family::Predicate::ResidualRulingTangent;
    f.moment_exp = 6;
    f.form_level = 2;
    f.form_weight = 8;
    fams.push_back(f);

    return fams;
}

// Reduce an integral rational vector mod p.
std::vector<uint64_t> reduce_int_vec(const QVec& g, uint64_t p) {
    auto r = reduce_vec_mod_p(g, p);
    if (!r) throw BadPrime("generator has a denominator divisible by " + std::to_string(p));
    return *r;
}

void normalize_vec(std::vector<uint64_t>& t, const std::vector<uint64_t>& inv,
                   const PrimeField& F) {
    size_t lead = 0;
    while (t[lead] == 0) ++lead;
    if (t[lead] != 1) {
        uint64_t s = inv[t[lead]];
        for (size_t j = lead; j < t.size(); ++j) t[j] = F.mul(t[j], s);
    }
}

// Per-prime working state of a pencil family.
struct PencilData {
    PrimeField F;
    std::vector<FpCurve> gens;
    std::vector<std::vector<uint64_t>> params;
    std::vector<char> pass;
    std::vector<uint64_t> inv; // inverse table, inv[0] unused
};

std::vector<uint64_t> fibre_coeffs(const PencilData& D, const std::vector<uint64_t>& t) {
    size_t nco = D.gens[0].co.size();
    std::vector<uint64_t> co(nco, 0);
    for (size_t i = 0; i < D.gens.size(); ++i) {
        if (t[i] == 0) continue;
        for (size_t j = 0; j < nco; ++j)
            co[j] = D.F.add(co[j], D.F.mul(t[i], D.gens[i].co[j]));
    }
    return co;
}

// Nonlinear parameter cuts of the alternate constructions, evaluated on
// the fibre coefficient vector.
bool predicate_pass(const Family& Fam, const PrimeField& F, const std::vector<uint64_t>& co) {
    switch (Fam.predicate) {
    case Family::Predicate::None:
        return true;
    case Family::Predicate::ResidualMatch: {
        // Residual intersection of the diagonal section must meet the
        // residual of the ruling section; degenerate restrictions fail.
        uint64_t r1 = co[3], r2 = co[6];
        if (r1 == 0 && r2 == 0) return false;
        uint64_t s0 = F.add(F.add(co[0], co[1]), co[2]);
        uint64_t s2 = F.add(F.add(co[6], co[7]), co[8]);
        if (s0 == 0 && s2 == 0) return false;
        return F.add(F.mul(r1, s2), F.mul(r2, s0)) == 0;
    }
    case Family::Predicate::ResidualRulingTangent: {
        // The fibre must be tangent to the ruling through the residual
        // point of a fixed section.
        uint64_t r1 = co[3], r2 = co[6];
        if (r1 == 0 && r2 == 0) return false;
        uint64_t u0 = r1, s0i = F.neg(r2);
        uint64_t val = F.mul(co[1], F.mul(s0i, s0i));
        val = F.add(val, F.mul(co[4], F.mul(u0, s0i)));
        val = F.add(val, F.mul(co[7], F.mul(u0, u0)));
        return val == 0;
    }
    }
    return true;
}

PencilData make_pencil_data(const Family& Fam, uint64_t p) {
    PencilData D{PrimeField(p), {}, {}, {}, {}};
    size_t d = Fam.dim();
    std::vector<std::vector<uint64_t>> rows;
    for (const QVec& g : Fam.generators) {
        auto co = reduce_int_vec(g, p);
        rows.push_back(co);
        D.gens.push_back(FpCurve{Fam.amb, p, co});
    }
    if (fp_rank(rows, rows[0].size(), D.F) != d + 1)
        throw BadPrime("family loses rank mod " + std::to_string(p));
    D.params = proj_space(p, d);
    D.inv.assign(p, 0);
    for (uint64_t u = 1; u < p; ++u) D.inv[u] = D.F.inv(u);
    D.pass.reserve(D.params.size());
    for (const auto& t : D.params)
        D.pass.push_back(predicate_pass(Fam, D.F, fibre_coeffs(D, t)) ? 1 : 0);
    return D;
}

// One pass over the ambient space: each ambient point contributes to the
// count of every parameter whose fibre passes through it.
std::vector<uint64_t> pencil_counts(const Family& Fam, const PencilData& D) {
    uint64_t p = D.F.p();
    size_t d = Fam.dim();
    std::vector<uint64_t> counts(D.params.size(), 0);
    auto free_pts = proj_space(p, d - 1);
    uint64_t base_hits = 0;
    std::vector<uint64_t> v(d + 1), t(d + 1);
    for (const FpPoint& x : ambient_points(Fam.amb, p)) {
        bool allz = true;
        for (size_t i = 0; i <= d; ++i) {
            v[i] = eval_curve(D.gens[i], x);
            if (v[i] != 0) allz = false;
        }
        if (allz) {
            ++base_hits;
            continue;
        }
        size_t piv = 0;
        while (v[piv] == 0) ++piv;
        uint64_t vinv = D.inv[v[piv]];
        for (const auto& u : free_pts) {
            uint64_t dot = 0;
            size_t ui = 0;
            for (size_t j = 0; j <= d; ++j) {
                if (j == piv) continue;
                uint64_t uj = u[ui++];
                t[j] = uj;
                if (uj != 0 && v[j] != 0) dot = D.F.add(dot, D.F.mul(v[j], uj));
            }
            t[piv] = D.F.mul(D.F.neg(dot), vinv);
            normalize_vec(t, D.inv, D.F);
            ++counts[proj_index(t, p)];
        }
    }
    for (auto& c : counts) c += base_hits;
    return counts;
}

// Mark every parameter whose fibre has a rational singular point. At
// each ambient point the parameters singular there form the nullspace
// of the value-and-gradient matrix of the generators.
std::vector<char> pencil_singular_flags(const Family& Fam, const PencilData& D) {
    uint64_t p = D.F.p();
    size_t d = Fam.dim();
    size_t nrows = Fam.amb == Ambient::P2 ? 4 : 5;
    std::vector<char> flags(D.params.size(), 0);
    std::map<size_t, std::vector<std::vector<uint64_t>>> combos;
    std::vector<std::vector<uint64_t>> m(nrows, std::vector<uint64_t>(d + 1));
    std::vector<uint64_t> t(d + 1);
    for (const FpPoint& x : ambient_points(Fam.amb, p)) {
        for (size_t i = 0; i <= d; ++i) {
            m[0][i] = eval_curve(D.gens[i], x);
            if (Fam.amb == Ambient::P2) {
                auto g = cubic_gradient(D.gens[i], x);
                for (size_t r = 0; r < 3; ++r) m[r + 1][i] = g[r];
            } else {
                auto g = form22_gradient(D.gens[i], x);
                for (size_t r = 0; r < 4; ++r) m[r + 1][i] = g[r];
            }
        }
        auto ns = fp_nullspace(m, d + 1, D.F);
        if (ns.empty()) continue;
        auto& cs = combos[ns.size()];
        if (cs.empty()) cs = proj_space(p, ns.size() - 1);
        for (const auto& cb : cs) {
            std::fill(t.begin(), t.end(), 0);
            for (size_t k = 0; k < ns.size(); ++k) {
                if (cb[k] == 0) continue;
                for (size_t j = 0; j <= d; ++j)
                    t[j] = D.F.add(t[j], D.F.mul(cb[k], ns[k][j]));
            }
            normalize_vec(t, D.inv, D.F);
            flags[proj_index(t, p)] = 1;
        }
    }
    return flags;
}

TraceTable assemble_pencil(const Family& Fam, uint64_t p, const PencilData& D,
                           const std::vector<uint64_t>& counts, const std::vector<char>& flags) {
    TraceTable T{Fam.id, p, {}};
    for (size_t i = 0; i < D.params.size(); ++i) {
        if (!D.pass[i]) continue;
        uint64_t n = counts[i];
        int64_t a = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(n);
        T.records.push_back({FpPoint{D.params[i]}, n, a, flags[i] != 0});
    }
    return T;
}

TraceTable rebuild_pencil(const Family& Fam, uint64_t p, const CacheStore::Records& recs) {
    PencilData D = make_pencil_data(Fam, p);
    auto flags = pencil_singular_flags(Fam, D);
    TraceTable T{Fam.id, p, {}};
    size_t k = 0;
    for (size_t i = 0; i < D.params.size(); ++i) {
        if (!D.pass[i]) continue;
        FpPoint param{D.params[i]};
        if (k >= recs.size() || recs[k].first != param_str(param))
            throw CacheCorrupt("cached records do not match the parameter run of " + Fam.id);
        uint64_t n = recs[k].second;
        ++k;
        int64_t a = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(n);
        T.records.push_back({std::move(param), n, a, flags[i] != 0});
    }
    if (k != recs.size())
        throw CacheCorrupt("cached records do not match the parameter run of " + Fam.id);
    return T;
}

// Full sweep of y^2 = x^3 + Ax + B over the (A, B) plane, discriminant
// locus removed. Character sums share per-prime tables.
TraceTable weierstrass_scan(const Family& Fam, uint64_t p) {
    PrimeField F(p);
    std::vector<uint64_t> x3(p), a4(p), b27(p);
    for (uint64_t v = 0; v < p; ++v) x3[v] = F.mul(F.mul(v, v), v);
    for (uint64_t A = 0; A < p; ++A) a4[A] = F.mul(4 % p, x3[A]);
    for (uint64_t B = 0; B < p; ++B) b27[B] = F.mul(27 % p, F.mul(B, B));
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y < p; ++y) chi[F.mul(y, y)] = 1;
    TraceTable T{Fam.id, p, {}};
    std::vector<uint64_t> g(p);
    for (uint64_t A = 0; A < p; ++A) {
        for (uint64_t x = 0; x < p; ++x) g[x] = F.add(x3[x], F.mul(A, x));
        for (uint64_t B = 0; B < p; ++B) {
            if (F.add(a4[A], b27[B]) == 0) continue;
            long long s = 0;
            for (uint64_t x = 0; x < p; ++x) {
                uint64_t u = g[x] + B;
                if (u >= p) u -= p;
                s += chi[u];
            }
            int64_t a = -s;
            uint64_t n = static_cast<uint64_t>(static_cast<int64_t>(p) + 1 - a);
            T.records.push_back({FpPoint{{A, B}}, n, a, false});
        }
    }
    return T;
}

TraceTable rebuild_weierstrass(const Family& Fam, uint64_t p, const CacheStore::Records& recs) {
    PrimeField F(p);
    TraceTable T{Fam.id, p, {}};
    size_t k = 0;
    for (uint64_t A = 0; A < p; ++A) {
        uint64_t a4 = F.mul(F.mul(4 % p, F.mul(A, A)), A);
        for (uint64_t B = 0; B < p; ++B) {
            if (F.add(a4, F.mul(27 % p, F.mul(B, B))) == 0) continue;
            FpPoint param{{A, B}};
            if (k >= recs.size() || recs[k].first != param_str(param))
                throw CacheCorrupt("cached records do not match the parameter run of " + Fam.id);
            uint64_t n = recs[k].second;
            ++k;
            int64_t a = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(n);
            T.records.push_back({std::move(param), n, a, false});
        }
    }
    if (k != recs.size())
        throw CacheCorrupt("cached records do not match the parameter run of " + Fam.id);
    return T;
}

std::optional<unsigned long> parse_power(const std::string& s) {
    if (s == "1") return 0;
    if (s == "p") return 1;
    if (s.rfind("p^", 0) == 0 && s.size() > 2) {
        for (size_t i = 2; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return std::stoul(s.substr(2));
    }
    return std::nullopt;
}

} // namespace

const std::vector<Family>& family_registry() {
    static const std::vector<Family> fams = build_registry();
    return fams;
}

const Family& family(const std::string& id) {
    for (const Family& f : family_registry())
        if (f.id == id) return f;
    throw UsageError("unknown family: " + id);
}

bool good_prime(const Family& F, uint64_t p) {
    return p > 5 && is_prime(p) && (F.form_level == 1 || p % F.form_level != 0);
}

std::vector<uint64_t> good_primes_up_to(const Family& F, uint64_t bound) {
    std::vector<uint64_t> out;
    for (uint64_t p = 7; p <= bound; ++p)
        if (good_prime(F, p)) out.push_back(p);
    return out;
}

std::string param_str(const FpPoint& param) {
    std::string s;
    for (size_t i = 0; i < param.c.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(param.c[i]);
    }
    return s;
}

FpCurve fibre_at(const Family& F, uint64_t p, const FpPoint& param) {
    PrimeField Fp(p);
    if (F.kind == Family::Kind::Weierstrass) {
        if (param.c.size() != 2) throw UsageError("expected an A:B parameter pair");
        uint64_t A = param.c[0] % p, B = param.c[1] % p;
        uint64_t disc = Fp.add(Fp.mul(4 % p, Fp.mul(Fp.mul(A, A), A)), Fp.mul(27 % p, Fp.mul(B, B)));
        if (disc == 0) throw BadReduction("discriminant vanishes mod " + std::to_string(p));
        // Y^2 Z = X^3 + A X Z^2 + B Z^3 as a projective cubic.
        std::vector<uint64_t> co(10, 0);
        co[0] = Fp.neg(1);
        co[5] = Fp.neg(A);
        co[7] = 1;
        co[9] = Fp.neg(B);
        return FpCurve{Ambient::P2, p, co};
    }
    if (param.c.size() != F.dim() + 1) throw UsageError("parameter has the wrong dimension");
    std::vector<uint64_t> t;
    for (uint64_t c : param.c) t.push_back(c % p);
    size_t nco = F.amb == Ambient::P2 ? 10 : 9;
    std::vector<uint64_t> co(nco, 0);
    for (size_t i = 0; i < F.generators.size(); ++i) {
        if (t[i] == 0) continue;
        auto gi = reduce_int_vec(F.generators[i], p);
        for (size_t j = 0; j < nco; ++j) co[j] = Fp.add(co[j], Fp.mul(t[i], gi[j]));
    }
    bool allz = std::all_of(co.begin(), co.end(), [](uint64_t c) { return c == 0; });
    if (allz) throw DegenerateError("parameter gives the zero curve");
    return FpCurve{F.amb, p, co};
}

TraceTable scan(const Family& F, uint64_t p, const CacheStore* cache) {
    if (!good_prime(F, p))
        throw BadPrime(std::to_string(p) + " is not a good prime for " + F.id);
    if (cache) {
        if (auto hit = cache->lookup(F.id, p)) {
            if (F.kind == Family::Kind::Weierstrass) return rebuild_weierstrass(F, p, *hit);
            return rebuild_pencil(F, p, *hit);
        }
    }
    TraceTable T;
    if (F.kind == Family::Kind::Weierstrass) {
        T = weierstrass_scan(F, p);
    } else {
        PencilData D = make_pencil_data(F, p);
        auto counts = pencil_counts(F, D);
        auto flags = pencil_singular_flags(F, D);
        T = assemble_pencil(F, p, D, counts, flags);
    }
    if (cache) {
        CacheStore::Records recs;
        recs.reserve(T.records.size());
        for (const auto& r : T.records) recs.emplace_back(param_str(r.param), r.n);
        cache->store(F.id, p, recs);
    }
    return T;
}

MomentReport moment(const TraceTable& T, unsigned r) {
    MomentReport M;
    M.family_id = T.family_id;
    M.p = T.p;
    M.r = r;
    M.record_count = T.records.size();
    for (const auto& rec : T.records) {
        Int term = int_pow(Int(static_cast<long>(rec.a)), r);
        M.m_all += term;
        if (rec.fp_singular)
            ++M.singular_count;
        else
            M.m_smooth += term;
    }
    return M;
}

Rat basis_value(const std::string& name, const NewformSpec& form, uint64_t p) {
    if (name == "ap") return Rat(ap(form, p));
    if (name == "p*ap") return Rat(ap(form, p) * static_cast<unsigned long>(p));
    if (auto e = parse_power(name)) return Rat(int_pow(Int(static_cast<unsigned long>(p)), *e));
    if (name.rfind("chi", 0) == 0) {
        auto star = name.find('*');
        if (star != std::string::npos && star > 3) {
            std::string ds = name.substr(3, star - 3);
            bool ok = std::isdigit(static_cast<unsigned char>(ds[0])) ||
                      ((ds[0] == '-' || ds[0] == '+') && ds.size() > 1);
            for (size_t i = 1; ok && i < ds.size(); ++i)
                ok = std::isdigit(static_cast<unsigned char>(ds[i]));
            auto e = parse_power(name.substr(star + 1));
            if (ok && e) {
                int c = kronecker_mod_p(std::stol(ds), p);
                return Rat(c) * Rat(int_pow(Int(static_cast<unsigned long>(p)), *e));
            }
        }
    }
    throw UsageError("unknown basis function: " + name);
}

FitModel fit(const Family& F, unsigned r, const std::vector<std::string>& basis,
             const std::vector<uint64_t>& fit_primes, const CacheStore* cache) {
    if (basis.empty() || fit_primes.empty())
        throw UsageError("fit needs a basis and at least one prime");
    const NewformSpec& form = newform(F.form_level, F.form_weight);
    QMat aug;
    for (uint64_t p : fit_primes) {
        if (!good_prime(F, p))
            throw UsageError("fit prime " + std::to_string(p) + " is not good for " + F.id);
        QVec row;
        for (const auto& name : basis) row.push_back(basis_value(name, form, p));
        row.push_back(Rat(moment(scan(F, p, cache), r).m_all));
        aug.push_back(row);
    }
    auto pivots = rref(aug);
    size_t nb = basis.size();
    for (size_t c : pivots)
        if (c == nb) throw InconsistentFit("no exact identity on the chosen primes");
    if (pivots.size() < nb)
        throw SingularFit("basis functions are dependent on the chosen primes");
    QVec coeffs(nb, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = aug[i][nb];
    return {F.id, r, basis, coeffs, fit_primes};
}

Rat eval_model(const FitModel& M, uint64_t p) {
    const Family& F = family(M.family_id);
    const NewformSpec& form = newform(F.form_level, F.form_weight);
    Rat v(0);
    for (size_t i = 0; i < M.basis.size(); ++i) v += M.coeffs[i] * basis_value(M.basis[i], form, p);
    return v;
}

std::vector<ResidualRow> validate(const FitModel& M, const std::vector<uint64_t>& primes,
                                  const CacheStore* cache) {
    const Family& F = family(M.family_id);
    std::vector<ResidualRow> rows;
    for (uint64_t p : primes) {
        Rat diff = Rat(moment(scan(F, p, cache), M.r).m_all) - eval_model(M, p);
        rows.push_back({p, diff});
    }
    return rows;
}

Int sym_trace(const Int& a, uint64_t p, unsigned k, unsigned m) {
    if (k == 0) throw UsageError("weight must be positive");
    Int pk = int_pow(Int(static_cast<unsigned long>(p)), k - 1);
    Int t_prev = 1, t_cur = a;
    if (m == 0) return t_prev;
    for (unsigned j = 2; j <= m; ++j) {
        Int t_next = a * t_cur - pk * t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return t_cur;
}

Int rankin_trace(const Int& a_g, const Int& a_h) { return a_g * a_h; }

unsigned rankin_weight(unsigned k, unsigned r) {
    if (k + r < 2) throw UsageError("weights too small");
    return k + r - 2;
}

KummerCounts kummer_counts(uint64_t A, uint64_t B, uint64_t p) {
    int64_t a = weierstrass_trace(A, B, p);
    PrimeField F(p);
    uint64_t Ar = A % p, Br = B % p;
    uint64_t roots = 0;
    for (uint64_t x = 0; x < p; ++x)
        if (F.add(F.add(F.mul(F.mul(x, x), x), F.mul(Ar, x)), Br) == 0) ++roots;
    KummerCounts K;
    K.a = a;
    K.f2 = (1 + roots) * (1 + roots);
    K.singular_quotient_count =
        (p + 1) * (p + 1) + static_cast<uint64_t>(a * a);
    K.smooth_model_count = K.singular_quotient_count + p * K.f2;
    return K;
}

KummerCounts kummer_counts_enumerated(uint64_t A, uint64_t B, uint64_t p) {
    int64_t a = weierstrass_trace(A, B, p); // also validates p and the reduction
    QuadField K(p);
    const PrimeField& F = K.base();
    uint64_t Ar = A % p, Br = B % p;
    auto elems = K.all_elements();
    auto pack = [p](const QuadField::Elt& e) { return e.a * p + e.b; };
    std::vector<std::vector<QuadField::Elt>> sqrt_of(p * p);
    for (const auto& y : elems) sqrt_of[pack(K.mul(y, y))].push_back(y);

    struct Pt {
        QuadField::Elt x, y;
    };
    std::vector<Pt> pts;
    pts.push_back({}); // index 0 is the point at infinity
    std::map<uint64_t, size_t> index_of;
    auto key = [p](const QuadField::Elt& x, const QuadField::Elt& y) {
        return ((x.a * p + x.b) * p + y.a) * p + y.b;
    };
    QuadField::Elt cA = K.from_base(Ar), cB = K.from_base(Br);
    for (const auto& x : elems) {
        QuadField::Elt fx = K.add(K.add(K.mul(K.mul(x, x), x), K.mul(cA, x)), cB);
        for (const auto& y : sqrt_of[pack(fx)]) {
            index_of[key(x, y)] = pts.size();
            pts.push_back({x, y});
        }
    }
    size_t n = pts.size();
    std::vector<size_t> neg(n), frob(n);
    neg[0] = frob[0] = 0;
    for (size_t i = 1; i < n; ++i) {
        neg[i] = index_of.at(key(pts[i].x, K.neg(pts[i].y)));
        frob[i] = index_of.at(key(K.frobenius(pts[i].x), K.frobenius(pts[i].y)));
    }
    uint64_t stable = 0, fixed = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            size_t ni = neg[i], nj = neg[j];
            if (ni < i || (ni == i && nj < j)) continue; // not the orbit representative
            bool st = (frob[i] == i && frob[j] == j) || (frob[i] == ni && frob[j] == nj);
            if (!st) continue;
            ++stable;
            if (ni == i && nj == j) ++fixed;
        }
    }
    KummerCounts out;
    out.a = a;
    out.f2 = fixed;
    out.singular_quotient_count = stable;
    out.smooth_model_count = stable + p * fixed;
    (void)F;
    return out;
}

int64_t conductor11_trace(uint64_t p) {
    PrimeField F(p);
    if (p == 11) throw BadReduction("the model is bad at 11");
    if (p == 2) {
        int64_t n = 1; // point at infinity
        for (uint64_t x = 0; x < 2; ++x)
            for (uint64_t y = 0; y < 2; ++y)
                if ((y * y + y + 7 * x * x * x + 7 * x * x + 10 * x + 20) % 2 == 0) ++n;
        return 3 - n;
    }
    // Complete the square: counting y^2 + y = f(x) reduces to the
    // character sum of 4 f(x) + 1.
    long long s = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t x2 = F.mul(x, x);
        uint64_t fx = F.sub(F.sub(F.sub(F.mul(x2, x), x2), F.mul(10 % p, x)), 20 % p);
        s += F.chi(F.add(F.mul(4 % p, fx), 1));
    }
    return -s;
}

} // namespace mfcy
