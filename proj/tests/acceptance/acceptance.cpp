#include <chrono>
#include <functional>
#include <iostream>

#include "okounkov/global/experiments.hpp"
#include "okounkov/io/json.hpp"
#include "okounkov/series/random.hpp"

using namespace okounkov;
using adelic::ToricAdelicDivisor;
using series::Flag;

namespace {

const std::filesystem::path kDir = OKOUNKOV_INSTANCE_DIR;

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            if (pass)
                detail = what;
            pass = false;
        }
    }
};

RatVec rv(std::initializer_list<long> xs)
{
    RatVec out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

Rational two_pow(long j) { return pow(Rational(2), static_cast<unsigned>(j)); }

const std::vector<std::string>& shipped()
{
    static const std::vector<std::string> names{"interval", "p2_o1", "p1xp1"};
    return names;
}

// 1. Volume identity on P² with O(1).
Outcome volume_identity()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto inst = io::load_instance(kDir / "p2_o1.json");
    const auto& d = inst.divisor("D");
    const auto s = adelic::adelic_series(d);
    const auto approx = core::okounkov_truncated(s, Flag::standard(2), 50);
    o.require(approx.exact_body == geom::convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})}), "exact body");
    o.require(2 * geom::polytope_volume(*approx.exact_body) == 1, "d!·vol != 1");
    for (const auto& row : approx.volume_sequence)
    {
        const long m = row.m;
        o.require(static_cast<long>(row.count) == (m + 1) * (m + 2) / 2, "count at m=" + std::to_string(m));
        if (m >= 10)
        {
            const Rational scaled = 2 * row.scaled;
            o.require(abs(Rational(scaled - 1)) <= make_rational(3 * m + 2, m * m),
                      "scaled sequence at m=" + std::to_string(m));
        }
    }
    o.require(approx.volume_sequence.size() == 50, "fewer than 50 degrees");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = "m <= 50 counts exact, runtime " + std::to_string(secs).substr(0, 5) + " s";
    return o;
}

// 2. Sandwich inclusions on the interval instance.
Outcome sandwich()
{
    Outcome o;
    const auto inst = io::load_instance(kDir / "interval.json");
    const auto& d = inst.divisor("D");
    const Flag flag = Flag::standard(1);
    long violations = 0;
    for (long j = 1; j <= 8; ++j)
        for (long m = 1; m <= 20; ++m)
        {
            const auto s = adelic::sandwich_spaces(d, j, m);
            const auto lo = series::leading_exponents(s.lower, flag);
            const auto mid = series::leading_exponents(s.middle, flag);
            const auto hi = series::leading_exponents(s.upper, flag);
            const bool slices = std::includes(mid.begin(), mid.end(), lo.begin(), lo.end()) &&
                                std::includes(hi.begin(), hi.end(), mid.begin(), mid.end());
            violations += !(s.ok() && slices);
        }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass)
        o.detail = "160 (j, m) pairs, zero violations";
    return o;
}

// 3. Hausdorff convergence of model bodies.
Outcome hausdorff_convergence()
{
    Outcome o;
    const auto interval = io::load_instance(kDir / "interval.json");
    const auto t = global::model_convergence_experiment(interval.divisor("D"), Flag::standard(1), 10, 8);
    o.require(t.limit_volume == 1, "interval limit volume");
    for (const auto& r : t.rows)
    {
        o.require(r.distance == 1 / two_pow(r.j), "interval d_H at j=" + std::to_string(r.j));
        o.require(r.volume == 1 - 1 / two_pow(r.j), "interval volume at j=" + std::to_string(r.j));
    }
    o.require(t.ok(), "interval table monotonicity");

    const auto square = io::load_instance(kDir / "p1xp1.json");
    const auto sq = global::model_convergence_experiment(square.divisor("S"), Flag::standard(2), 10, 4);
    o.require(sq.limit_volume == 2, "square limit volume");
    for (const auto& r : sq.rows)
    {
        const Rational side = 1 - 1 / two_pow(r.j);
        o.require(r.distance == 1 / two_pow(r.j), "square d_H at j=" + std::to_string(r.j));
        o.require(r.body_volume == side * side, "square volume at j=" + std::to_string(r.j));
    }
    o.require(sq.ok(), "square table monotonicity");
    if (o.pass)
        o.detail = "interval and square, j <= 10, exact";
    return o;
}

// 4. Homogeneity for t in {2, 3, 5}.
Outcome homogeneity()
{
    Outcome o;
    long checked = 0;
    for (const auto& name : shipped())
    {
        const auto inst = io::load_instance(kDir / (name + ".json"));
        for (const auto& [n, d] : inst.divisors)
        {
            const Flag flag = Flag::standard(d.dim());
            const auto base = adelic::adelic_series(d);
            for (long t : {2L, 3L, 5L})
            {
                const auto scaled = adelic::adelic_series(adelic::combine(d, d, Rational(t), Rational(0)));
                const auto lhs = core::exact_body(scaled, flag);
                const auto rhs = core::exact_body(base, flag);
                o.require(lhs && rhs && *lhs == geom::scale(*rhs, t), name + "/" + n + " t=" + std::to_string(t));
                o.require(core::homogeneity_check(base, scaled, t, 3, flag).ok(),
                          name + "/" + n + " truncated t=" + std::to_string(t));
                ++checked;
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " exact polytope equalities";
    return o;
}

// 5. Fibers of the global cone on the P¹ pair.
Outcome fibers()
{
    Outcome o;
    const auto inst = io::load_instance(kDir / "interval.json");
    const auto& d = inst.divisor("D");
    const auto& e = inst.divisor("E");
    const Flag flag = Flag::standard(1);
    const auto body = global::build_global(d, e, flag, 3, 6);
    for (auto [a1, a2] : std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {2, 1}, {1, 2}})
    {
        const auto f = global::fiber_check(d, e, body, {Rational(a1), Rational(a2)}, flag);
        const std::string at = "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
        o.require(!f.skipped && f.demanded(), at + " not in the interior reach");
        o.require(f.equal && f.gap && *f.gap == 0, at + " gap nonzero");
    }
    const auto skip = global::fiber_check(d, e, body, {Rational(1), Rational(-1)}, flag);
    o.require(skip.skipped && skip.ok(), "(1,-1) not reported as skipped");
    if (o.pass)
        o.detail = "four fibers gap 0, (1,-1) skipped: " + skip.reason;
    return o;
}

// 6. Restricted body along F = V(x1) on P¹×P¹.
Outcome restricted()
{
    Outcome o;
    const auto inst = io::load_instance(kDir / "p1xp1.json");
    const auto s = core::restricted_series(inst.divisor("D"), inst.flat("F"));
    const auto approx = core::okounkov_truncated(s, s.natural_flag(), 30);
    for (const auto& r : approx.volume_sequence)
        o.require(static_cast<long>(r.count) == 2 * r.m + 1, "count at m=" + std::to_string(r.m));
    const auto est = core::restricted_volume_estimate(s, 30);
    o.require(est.estimate == make_rational(61, 30), "estimate != (2M+1)/M");
    o.require(abs(Rational(est.estimate - 2)) <= make_rational(1, 15), "estimate farther than 1/15 from 2");
    o.require(approx.exact_body == geom::convex_hull({rv({0}), rv({2})}), "body != [0,2]");
    if (o.pass)
        o.detail = "counts 2m+1 for m <= 30, estimate 61/30, body [0,2]";
    return o;
}

// 7. Base loci.
Outcome base_loci()
{
    Outcome o;
    using series::CoordinateFlatSet;
    const auto interval = io::load_instance(kDir / "interval.json");
    o.require(interval.amples.size() >= 2, "need two ample references");
    for (const auto& a : interval.amples)
    {
        o.require(adelic::augmented_base_locus(interval.divisor("D"), a, 8).locus == CoordinateFlatSet::empty(),
                  "interval B+ not empty");
        o.require(adelic::augmented_base_locus(interval.divisor("Z"), a, 8).locus == CoordinateFlatSet::whole(),
                  "limit-0 B+ not U");
    }
    long pairs = 0;
    for (const auto& name : shipped())
    {
        const auto inst = io::load_instance(kDir / (name + ".json"));
        for (const auto& [n, d] : inst.divisors)
        {
            const auto sb = series::stable_base_locus(adelic::adelic_series(d), 10).locus;
            std::optional<CoordinateFlatSet> first;
            for (const auto& a : inst.amples)
            {
                const auto bp = adelic::augmented_base_locus(d, a, 8).locus;
                o.require(bp.contains(sb), name + "/" + n + ": SB not inside B+");
                o.require(!first || *first == bp, name + "/" + n + ": B+ depends on the ample reference");
                first = bp;
                ++pairs;
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(pairs) + " (divisor, ample) pairs";
    return o;
}

// 8. Lattice index of the semigroups.
Outcome lattice_indices()
{
    Outcome o;
    long big = 0;
    for (const auto& name : shipped())
    {
        const auto inst = io::load_instance(kDir / (name + ".json"));
        for (const auto& [n, d] : inst.divisors)
        {
            if (!d.is_big())
                continue;
            const auto g = core::materialize(adelic::adelic_series(d), Flag::standard(d.dim()), 6, n);
            const auto rep = core::check_conditions(g);
            o.require(rep.index && *rep.index == 1, name + "/" + n + ": index != 1");
            ++big;
        }
    }
    const auto inst = io::load_instance(kDir / "interval.json");
    const auto body = global::build_global(inst.divisor("D"), inst.divisor("E"), Flag::standard(1), 2, 3);
    const auto idx = global::global_lattice_index(body.semigroup);
    o.require(idx && *idx == 1, "global index != 1");
    if (o.pass)
        o.detail = std::to_string(big) + " big divisors plus the global P1 pair";
    return o;
}

// 9. Log-concavity of volumes.
Outcome log_concavity()
{
    Outcome o;
    using adelic::ToricFrame;
    const std::vector<ToricFrame> frames{
        ToricFrame({{1}, {-1}}, {1}),
        ToricFrame({{1, 0}, {0, 1}, {-1, -1}}, {2}),
        ToricFrame({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {2, 3}),
        ToricFrame({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {3}),
        ToricFrame({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, {3, 4, 5})};
    std::mt19937_64 rng(20240917);
    long violations = 0;
    for (int i = 0; i < 10; ++i)
    {
        const auto& f = frames[static_cast<std::size_t>(i) % frames.size()];
        const auto p = global::random_effective(f, rng);
        const auto q = global::random_effective(f, rng);
        violations += !global::log_concavity_check(f, p, q).holds;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass)
        o.detail = "10 seeded pairs, d <= 3, zero violations";
    return o;
}

// 10. Continuity under boundary perturbations.
Outcome continuity()
{
    Outcome o;
    const auto inst = io::load_instance(kDir / "interval.json");
    const auto& d = inst.divisor("D");
    std::vector<Rational> ts;
    for (long n = 0; n <= 10; ++n)
        ts.push_back(1 / two_pow(n));
    const auto& d0 = d.boundary().divisor();
    for (int sign : {1, -1})
    {
        const auto t = global::continuity_experiment(d, Rational(sign) * d0, ts, Flag::standard(1));
        o.require(t.base_volume == 1, "base volume");
        o.require(t.ok(), "gaps not shrinking");
        for (const auto& r : t.rows)
            o.require(r.volume == 1 + sign * r.t, "row at t=" + to_string(r.t));
    }
    if (o.pass)
        o.detail = "rows 1 +- 2^-n for n <= 10";
    return o;
}

// 11. Echelon-valuation property.
Outcome echelon()
{
    Outcome o;
    std::mt19937_64 rng(11);
    long violations = 0, dense = 0;
    for (int i = 0; i < 100; ++i)
    {
        const auto t = series::echelon_trial(rng);
        violations += !t.ok();
        dense += !t.monomial;
        o.require(t.ambient_dim <= 3 && t.dim <= 12, "space outside the size bounds");
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass)
        o.detail = "100 spaces (" + std::to_string(dense) + " dense), zero violations";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"volume identity on P2/O(1)", volume_identity},
        {"sandwich inclusions", sandwich},
        {"Hausdorff convergence of model bodies", hausdorff_convergence},
        {"homogeneity t in {2,3,5}", homogeneity},
        {"global cone fibers", fibers},
        {"restricted body on V(x1)", restricted},
        {"base loci", base_loci},
        {"lattice index of semigroups", lattice_indices},
        {"log-concavity of volume", log_concavity},
        {"continuity under perturbation", continuity},
        {"echelon valuation property", echelon},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL")
                  << " (" << o.detail << ")\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
