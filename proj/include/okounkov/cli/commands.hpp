#pragma once

#include <cstdlib>
#include <functional>

#include "okounkov/cli/report.hpp"
#include "okounkov/global/experiments.hpp"
#include "okounkov/series/random.hpp"

namespace okounkov::cli {

using global::GradingPair;

struct RunOptions
{
    std::string divisor = "D";
    std::optional<std::pair<std::string, std::string>> pair;
    long max_degree = 0;   // 0: instance default
    long amax = 0;
    long stages = 0;
    std::vector<GradingPair> fibers;
    std::string flat;
    std::string flag;
    std::uint64_t seed = 1;
    bool all = false;
    std::vector<std::string> suites;
    std::filesystem::path out;
};

inline const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"body",     "volume",    "converge",   "global",
                                                "restricted", "baselocus", "continuity", "verify"};
    return names;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"cauchy",     "sandwich", "homogeneity", "conditions",
                                                "baselocus",  "convergence", "continuity", "global",
                                                "restricted", "logconcavity", "echelon",  "fujita"};
    return names;
}

/// --out, else $OKOUNKOV_OUT, else ./okounkov_out.
inline std::filesystem::path output_dir(const RunOptions& o)
{
    if (!o.out.empty())
        return o.out;
    if (const char* env = std::getenv("OKOUNKOV_OUT"); env && *env)
        return env;
    return "okounkov_out";
}

inline GradingPair parse_pair(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a1,a2 but got \"" + s + "\"");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

namespace detail {

using adelic::ToricAdelicDivisor;
using series::Flag;

struct Context
{
    const io::Instance& inst;
    const RunOptions& opts;
    std::filesystem::path out;
    RunReport& report;

    long max_degree() const { return opts.max_degree > 0 ? opts.max_degree : inst.experiments.max_degree; }
    long amax() const { return opts.amax > 0 ? opts.amax : inst.experiments.amax; }
    long stages(const std::string& n) const
    {
        return inst.stage_bound(n, opts.stages > 0 ? opts.stages : inst.experiments.stages);
    }

    Flag flag() const
    {
        if (opts.flag.empty())
            return Flag::standard(inst.frame.dim());
        auto it = inst.flags.find(opts.flag);
        if (it == inst.flags.end())
            throw io::SchemaError("instance " + inst.name + ": no flag named \"" + opts.flag + "\"");
        if (!it->second.mask().empty())
            throw io::SchemaError("flag " + opts.flag + " restricts coordinates; use the restricted command");
        return it->second;
    }

    std::pair<std::string, std::string> pair_names() const
    {
        if (opts.pair)
            return *opts.pair;
        return {"D", "E"};
    }

    std::vector<GradingPair> fibers() const
    {
        if (!opts.fibers.empty())
            return opts.fibers;
        auto r = [](long x) { return Rational(x); };
        return {{r(1), r(0)}, {r(1), r(1)}, {r(2), r(1)}, {r(1), r(2)}, {r(1), r(-1)}};
    }

    void write(const std::string& rel, const std::string& text)
    {
        io::write_text(out / rel, text);
        report.artifacts.push_back(rel);
    }

    void plot(const std::string& rel, const std::vector<PlotLayer>& layers)
    {
        const std::size_t d = layers.empty() ? 0 : layers.front().body.ambient_dim();
        if (d >= 1 && d <= 2)
            write(rel, render_svg(layers));
    }
};

inline Json pair_json(const GradingPair& a) { return Json::array({io::to_json(a.first), io::to_json(a.second)}); }

inline std::string pair_text(const GradingPair& a) { return cell(a.first) + "," + cell(a.second); }

inline Rational normalized(const geom::RatPolytope& p)
{
    return Rational(factorial(static_cast<unsigned>(p.ambient_dim()))) * geom::polytope_volume(p);
}

// ---------------------------------------------------------------- body / volume

inline void body_command(Context& ctx)
{
    const std::string& name = ctx.opts.divisor;
    const auto& d = ctx.inst.divisor(name);
    const Flag flag = ctx.flag();
    const long m = ctx.max_degree();
    const auto s = adelic::adelic_series(d);
    const auto approx = core::okounkov_truncated(s, flag, m);
    const auto& exact = *approx.exact_body;

    ctx.report.data["exact_body"] = io::to_json(exact);
    ctx.report.data["inner_body"] = io::to_json(approx.inner_body);
    ctx.report.data["volume"] = io::rational_report(geom::polytope_volume(exact));
    ctx.report.data["normalized_volume"] = io::rational_report(normalized(exact));
    ctx.report.data["inner_normalized_volume"] = io::rational_report(normalized(approx.inner_body));
    ctx.report.data["bigness"] = approx.big_observed() ? "big" : "not big (exact body has zero volume)";

    ctx.report.check("inner body contained in exact body",
                     approx.inner_body.is_empty() || approx.inner_body.subset_of(exact));
    const auto g = core::materialize(s, flag, std::min<long>(m, 12), name);
    const auto bad = core::additivity_violation(g);
    ctx.report.check("semigroup additivity up to degree " + std::to_string(g.max_degree()), !bad,
                     bad ? "fails at degrees " + std::to_string(bad->first) + "+" + std::to_string(bad->second) : "");
    const auto cond = core::check_conditions(g);
    ctx.report.data["conditions"] = Json{{"gamma0", cond.gamma0_ok},
                                         {"b", io::rational_report(cond.b)},
                                         {"bounded", cond.bounded_ok},
                                         {"lattice_index", cond.index ? cond.index->get_str() : "infinite"},
                                         {"degenerate", cond.degenerate}};
    if (approx.big_observed())
        ctx.report.check("structural conditions (Γ₀ = {0}, bounded, lattice index 1)", cond.ok(),
                         "index " + (cond.index ? cond.index->get_str() : std::string("infinite")));
    else
        ctx.report.note("structural conditions", false, "degenerate: divisor not big");

    Json bodies{{"exact", io::to_json(exact)}, {"inner", io::to_json(approx.inner_body)}, {"truncation", m}};
    ctx.write("bodies/" + name + ".json", io::dump(bodies));
    Csv csv({"m", "count", "scaled", "scaled_decimal"});
    for (const auto& r : approx.volume_sequence)
        csv.row({std::to_string(r.m), std::to_string(r.count), cell(r.scaled), cell_decimal(r.scaled)});
    ctx.write("tables/" + name + "_counts.csv", csv.str());
    ctx.plot("plots/" + name + ".svg", {{"exact body", exact}, {"inner body at M", approx.inner_body}});
}

inline void volume_command(Context& ctx)
{
    const std::string& name = ctx.opts.divisor;
    const auto& d = ctx.inst.divisor(name);
    const long m = ctx.max_degree();
    const auto s = adelic::adelic_series(d);
    const auto approx = core::okounkov_truncated(s, s.natural_flag(), m);
    const auto est = core::volume_estimate(approx);
    ctx.report.data["estimate"] = io::rational_report(est.estimate);
    ctx.report.data["lower"] = io::rational_report(est.lower);
    ctx.report.data["exact"] = io::rational_report(*est.upper);
    ctx.report.data["truncation"] = m;
    ctx.report.check("inner volume at most exact volume", est.lower <= *est.upper);
    ctx.report.note("lattice-count estimate at least the inner volume", est.estimate >= est.lower);
    if (auto r0 = core::eventual_nonvanishing(s, m))
        ctx.report.data["eventual_nonvanishing_from"] = *r0 + 1;
    else
        ctx.report.data["eventual_nonvanishing_from"] = "not observed";

    Csv csv({"m", "count", "normalized_estimate", "normalized_estimate_decimal"});
    const Rational df(factorial(static_cast<unsigned>(approx.dim)));
    for (const auto& r : approx.volume_sequence)
        csv.row({std::to_string(r.m), std::to_string(r.count), cell(Rational(df * r.scaled)),
                 cell_decimal(Rational(df * r.scaled))});
    ctx.write("tables/" + name + "_volume.csv", csv.str());
}

// ---------------------------------------------------------------- convergence / continuity

inline void converge_command(Context& ctx)
{
    const std::string& name = ctx.opts.divisor;
    const auto& d = ctx.inst.divisor(name);
    const Flag flag = ctx.flag();
    const long j = ctx.stages(name);
    const auto t = global::model_convergence_experiment(d, flag, j, std::min<long>(ctx.max_degree(), 12));

    ctx.report.data["limit_volume"] = io::rational_report(t.limit_volume);
    ctx.report.data["estimate"] = io::rational_report(t.estimate);
    ctx.report.data["rate_constant"] = t.constant ? io::rational_report(*t.constant) : Json("undefined (q = 0)");
    ctx.report.data["rate_constant_norm"] = "L-infinity; the constant depends on this choice";
    ctx.report.check("Hausdorff distances nonincreasing in j", t.distances_nonincreasing);
    ctx.report.check("volume gaps nonincreasing in j", t.volume_gaps_nonincreasing);
    ctx.report.check("distance bounded by c*q_j", t.within_bound);

    Csv csv({"j", "distance", "q", "body_volume", "volume", "volume_decimal"});
    std::vector<PlotLayer> layers;
    for (const auto& r : t.rows)
    {
        csv.row({std::to_string(r.j), cell(r.distance), cell(r.q), cell(r.body_volume), cell(r.volume),
                 cell_decimal(r.volume)});
        if (r.j <= 5)
            layers.push_back({"stage " + std::to_string(r.j),
                              geom::project(adelic::chart_polytope(d.frame(), d.stage(r.j).divisor), flag.order())});
    }
    layers.push_back({"limit", geom::project(d.chart_polytope(), flag.order())});
    ctx.write("tables/" + name + "_convergence.csv", csv.str());
    ctx.plot("plots/" + name + "_convergence.svg", layers);
}

inline std::vector<Rational> default_ts(const io::Instance& inst)
{
    if (!inst.experiments.ts.empty())
        return inst.experiments.ts;
    std::vector<Rational> ts;
    for (unsigned n = 0; n <= 10; ++n)
        ts.push_back(1 / pow(Rational(2), n));
    return ts;
}

inline void continuity_command(Context& ctx)
{
    const std::string& name = ctx.opts.divisor;
    const auto& d = ctx.inst.divisor(name);
    const Flag flag = ctx.flag();
    const auto ts = default_ts(ctx.inst);
    const auto& d0 = d.boundary().divisor();
    Csv csv({"direction", "t", "volume", "volume_decimal", "distance"});
    Json rows = Json::object();
    for (int sign : {1, -1})
    {
        const std::string dir = sign > 0 ? "+D0" : "-D0";
        try
        {
            const auto table = global::continuity_experiment(d, Rational(sign) * d0, ts, flag);
            ctx.report.data["base_volume"] = io::rational_report(table.base_volume);
            ctx.report.check("continuity along " + dir + ": gaps shrink monotonically as t -> 0", table.ok());
            for (const auto& r : table.rows)
                csv.row({dir, cell(r.t), cell(r.volume), cell_decimal(r.volume), cell(r.distance)});
            rows[dir] = table.rows.size();
        }
        catch (const core::CoreError& e)
        {
            ctx.report.note("continuity along " + dir, false, e.what());
        }
    }
    ctx.report.data["rows"] = rows;
    ctx.write("tables/" + name + "_continuity.csv", csv.str());
}

// ---------------------------------------------------------------- global / restricted

inline void report_fibers(Context& ctx, const std::vector<global::FiberReport>& fibers, const std::string& stem)
{
    Csv csv({"a1", "a2", "status", "gap", "interior"});
    Json js = Json::array();
    for (const auto& f : fibers)
    {
        const std::string label = "fiber at (" + pair_text(f.a) + ")";
        Json one{{"a", pair_json(f.a)}};
        if (f.skipped)
        {
            ctx.report.note(label, true, "skipped: " + f.reason);
            one["status"] = "skipped";
            one["reason"] = f.reason;
            csv.row({cell(f.a.first), cell(f.a.second), "skipped", "", ""});
        }
        else
        {
            const std::string gap = "gap " + (f.gap ? cell(*f.gap) : std::string("undefined"));
            if (f.demanded())
                ctx.report.check(label + " equals the cone slice", f.ok(), gap);
            else
                ctx.report.note(label + " equals the cone slice", f.equal,
                                gap + "; outside the interior of the sampled support, equality not demanded");
            one["status"] = f.equal ? "equal" : "different";
            one["gap"] = f.gap ? io::rational_report(*f.gap) : Json(nullptr);
            one["direct"] = io::to_json(f.direct);
            one["slice"] = io::to_json(f.slice);
            one["interior"] = f.interior;
            csv.row({cell(f.a.first), cell(f.a.second), f.equal ? "equal" : "different",
                     f.gap ? cell(*f.gap) : "", f.interior ? "1" : "0"});
        }
        js.push_back(one);
    }
    ctx.report.data["fibers"] = js;
    ctx.write("tables/" + stem + "_fibers.csv", csv.str());
    ctx.write("bodies/" + stem + "_fibers.json", io::dump(js));
}

inline void global_command(Context& ctx)
{
    const auto [dn, en] = ctx.pair_names();
    const auto& d = ctx.inst.divisor(dn);
    const auto& e = ctx.inst.divisor(en);
    const Flag flag = ctx.flag();
    const auto body = global::build_global(d, e, flag, ctx.amax(), ctx.max_degree());
    ctx.report.data["pair"] = Json::array({dn, en});
    ctx.report.data["semigroup_points"] = body.semigroup.points.size();
    Json support = Json::array();
    for (const auto& g : body.cone.support.generators())
        support.push_back(io::to_json(g));
    ctx.report.data["support_generators"] = support;
    const auto idx = global::global_lattice_index(body.semigroup);
    ctx.report.data["lattice_index"] = idx ? idx->get_str() : "infinite";
    ctx.report.check("global lattice index 1 in dimension d+2", idx && *idx == 1);

    std::vector<global::FiberReport> fibers;
    for (const auto& a : ctx.fibers())
        fibers.push_back(global::fiber_check(d, e, body, a, flag));
    report_fibers(ctx, fibers, "global_" + dn + "_" + en);
}

inline std::pair<std::string, std::vector<std::size_t>> pick_flat(const Context& ctx)
{
    if (!ctx.opts.flat.empty())
        return {ctx.opts.flat, ctx.inst.flat(ctx.opts.flat)};
    if (ctx.inst.flats.empty())
        throw io::SchemaError("instance " + ctx.inst.name + " declares no flats");
    return *ctx.inst.flats.begin();
}

inline void restricted_command(Context& ctx)
{
    const std::string& name = ctx.opts.divisor;
    const auto& d = ctx.inst.divisor(name);
    const auto [flat_name, t] = pick_flat(ctx);
    const long m = ctx.max_degree();
    ctx.report.data["flat"] = flat_name;
    std::optional<adelic::Series> s;
    try
    {
        s = core::restricted_series(d, t);
    }
    catch (const core::CoreError&)
    {
        ctx.report.check("flat outside the augmented base locus", false,
                         "restricted bodies are undefined when the flat lies in the augmented base locus");
        return;
    }
    ctx.report.check("flat outside the augmented base locus", true);
    const Flag flag = s->natural_flag();
    ctx.report.data["flag_order"] = flag.order();
    if (flag.dim() == 0)
    {
        ctx.report.note("restricted volume", false, "zero-dimensional restriction");
        return;
    }
    const auto approx = core::okounkov_truncated(*s, flag, m);
    const auto est = core::volume_estimate(approx);
    const auto& exact = *approx.exact_body;
    ctx.report.data["exact_body"] = io::to_json(exact);
    ctx.report.data["inner_body"] = io::to_json(approx.inner_body);
    ctx.report.data["restricted_volume"] = io::rational_report(normalized(exact));
    ctx.report.data["estimate"] = io::rational_report(est.estimate);
    ctx.report.check("inner restricted body contained in exact body",
                     approx.inner_body.is_empty() || approx.inner_body.subset_of(exact));

    Csv csv({"m", "count", "scaled", "scaled_decimal"});
    for (const auto& r : approx.volume_sequence)
        csv.row({std::to_string(r.m), std::to_string(r.count), cell(r.scaled), cell_decimal(r.scaled)});
    const std::string stem = name + "_" + flat_name;
    ctx.write("tables/" + stem + "_restricted.csv", csv.str());
    ctx.write("bodies/" + stem + "_restricted.json",
              io::dump(Json{{"exact", io::to_json(exact)}, {"inner", io::to_json(approx.inner_body)}}));
    ctx.plot("plots/" + stem + "_restricted.svg", {{"exact", exact}, {"inner", approx.inner_body}});

    if (ctx.opts.pair)
    {
        const auto [dn, en] = *ctx.opts.pair;
        const auto r = global::restricted_global(ctx.inst.divisor(dn), ctx.inst.divisor(en), t, ctx.amax(),
                                                 std::min<long>(m, 6), ctx.fibers());
        ctx.report.data["restricted_global_points"] = r.body.semigroup.points.size();
        report_fibers(ctx, r.fibers, "restricted_" + dn + "_" + en + "_" + flat_name);
    }
}

// ---------------------------------------------------------------- base loci

inline std::vector<adelic::ModelDivisor> ample_references(const io::Instance& inst)
{
    if (!inst.amples.empty())
        return inst.amples;
    return {inst.boundary.divisor()};
}

inline void baselocus_for(Context& ctx, const std::string& name, long m)
{
    const auto& d = ctx.inst.divisor(name);
    const auto sb = series::stable_base_locus(adelic::adelic_series(d), m);
    Json entry{{"stable", flats_json(sb.locus)},
               {"stable_text", flats_text(sb.locus)},
               {"stable_from", sb.stabilization_degree},
               {"stable_confirmed", sb.confirmed}};
    Json plus = Json::array();
    std::optional<series::CoordinateFlatSet> first;
    bool agree = true, contains_sb = true;
    for (const auto& a : ample_references(ctx.inst))
    {
        const auto bp = adelic::augmented_base_locus(d, a, std::min<long>(m, core::kBplusDegree));
        plus.push_back(Json{{"ample", io::to_json(a.coeffs)},
                            {"locus", flats_json(bp.locus)},
                            {"text", flats_text(bp.locus)},
                            {"stable_from", bp.stabilization_degree},
                            {"confirmed", bp.confirmed}});
        if (first && !(*first == bp.locus))
            agree = false;
        if (!first)
            first = bp.locus;
        contains_sb = contains_sb && bp.locus.contains(sb.locus);
    }
    entry["augmented"] = plus;
    ctx.report.data["base_loci"][name] = entry;
    ctx.report.check(name + ": augmented base locus independent of the ample reference", agree);
    ctx.report.check(name + ": stable base locus inside augmented base locus", contains_sb);
}

inline void baselocus_command(Context& ctx) { baselocus_for(ctx, ctx.opts.divisor, ctx.max_degree()); }

// ---------------------------------------------------------------- verify suites

inline void suite_cauchy(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        const long j = ctx.stages(n);
        if (j < 2)
            continue;
        const auto rep = adelic::verify_cauchy(d, j);
        ctx.report.check(n + ": Cauchy conditions up to stage " + std::to_string(j), rep.ok(),
                         std::to_string(rep.violations.size()) + " violation(s)");
    }
}

inline void suite_sandwich(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        const long jmax = std::min<long>(ctx.stages(n), 8);
        const long mmax = std::min<long>(ctx.max_degree(), d.dim() == 1 ? 20 : 8);
        const Flag flag = Flag::standard(d.dim());
        long bad = 0;
        for (long j = 1; j <= jmax; ++j)
            for (long m = 1; m <= mmax; ++m)
            {
                const auto s = adelic::sandwich_spaces(d, j, m);
                const auto lo = series::leading_exponents(s.lower, flag);
                const auto mid = series::leading_exponents(s.middle, flag);
                const auto hi = series::leading_exponents(s.upper, flag);
                const bool slices = std::includes(mid.begin(), mid.end(), lo.begin(), lo.end()) &&
                                    std::includes(hi.begin(), hi.end(), mid.begin(), mid.end());
                bad += !(s.ok() && slices);
            }
        ctx.report.check(n + ": sandwich inclusions for j <= " + std::to_string(jmax) + ", m <= " +
                             std::to_string(mmax),
                         bad == 0, std::to_string(bad) + " violation(s)");
    }
}

inline void suite_homogeneity(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        const auto base = adelic::adelic_series(d);
        for (long t : {2L, 3L, 5L})
        {
            const auto scaled = adelic::adelic_series(adelic::combine(d, d, Rational(t), Rational(0)));
            const auto rep = core::homogeneity_check(base, scaled, t, std::min<long>(ctx.max_degree(), 4),
                                                     Flag::standard(d.dim()));
            ctx.report.check(n + ": body of " + std::to_string(t) + "D equals " + std::to_string(t) + " times body",
                             rep.ok(), "gap " + cell(rep.gap));
        }
    }
}

inline void suite_conditions(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        const auto g = core::materialize(adelic::adelic_series(d), Flag::standard(d.dim()),
                                         std::min<long>(ctx.max_degree(), d.dim() == 1 ? 20 : 10), n);
        const auto cond = core::check_conditions(g);
        const auto bad = core::additivity_violation(g);
        ctx.report.check(n + ": semigroup additivity", !bad);
        const std::string idx = cond.index ? cond.index->get_str() : "infinite";
        if (d.is_big())
            ctx.report.check(n + ": structural conditions with lattice index 1", cond.ok(), "index " + idx);
        else
            ctx.report.note(n + ": structural conditions", cond.ok(), "not big; index " + idx);
    }
}

inline void suite_baselocus(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
        baselocus_for(ctx, n, std::min<long>(ctx.max_degree(), 10));
}

inline void suite_convergence(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        const long j = ctx.stages(n);
        if (j < 2)
            continue;
        const auto t = global::model_convergence_experiment(d, Flag::standard(d.dim()), j, 4);
        ctx.report.check(n + ": model bodies converge in Hausdorff distance and volume", t.ok());
    }
}

inline void suite_continuity(Context& ctx)
{
    const auto ts = default_ts(ctx.inst);
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        if (!d.is_big())
            continue;
        const auto t = global::continuity_experiment(d, d.boundary().divisor(), ts, Flag::standard(d.dim()));
        ctx.report.check(n + ": volume continuous along +D0", t.ok());
    }
}

inline void suite_global(Context& ctx)
{
    auto [dn, en] = ctx.pair_names();
    if (!ctx.inst.divisors.count(dn) || !ctx.inst.divisors.count(en) || !ctx.inst.divisor(dn).is_big())
    {
        ctx.report.note("global body", true, "skipped: no big pair " + dn + "," + en);
        return;
    }
    const auto& d = ctx.inst.divisor(dn);
    const auto& e = ctx.inst.divisor(en);
    const Flag flag = Flag::standard(d.dim());
    const long amax = std::min<long>(ctx.amax(), 2), m = std::min<long>(ctx.max_degree(), d.dim() == 1 ? 6 : 3);
    const auto body = global::build_global(d, e, flag, amax, m);
    const auto idx = global::global_lattice_index(body.semigroup);
    ctx.report.check("global semigroup lattice index 1", idx && *idx == 1);
    for (const auto& a : ctx.fibers())
    {
        const auto f = global::fiber_check(d, e, body, a, flag);
        if (f.skipped)
            ctx.report.note("global fiber (" + pair_text(a) + ")", true, "skipped: " + f.reason);
        else if (f.demanded())
            ctx.report.check("global fiber (" + pair_text(a) + ") equals the direct body", f.ok(),
                             "gap " + (f.gap ? cell(*f.gap) : std::string("undefined")));
        else
            ctx.report.note("global fiber (" + pair_text(a) + ") equals the direct body", f.equal,
                            "outside the interior of the sampled support");
    }
}

inline void suite_restricted(Context& ctx)
{
    for (const auto& [fn, t] : ctx.inst.flats)
        for (const auto& [n, d] : ctx.inst.divisors)
        {
            if (!d.is_big())
                continue;
            std::optional<adelic::Series> s;
            try
            {
                s = core::restricted_series(d, t);
            }
            catch (const core::CoreError&)
            {
                ctx.report.note(n + " on " + fn + ": restricted body", true, "skipped: flat in augmented base locus");
                continue;
            }
            const Flag flag = s->natural_flag();
            if (flag.dim() == 0)
                continue;
            const auto approx = core::okounkov_truncated(*s, flag, std::min<long>(ctx.max_degree(), 12));
            ctx.report.check(n + " on " + fn + ": inner restricted body inside exact body",
                             approx.inner_body.is_empty() || approx.inner_body.subset_of(*approx.exact_body));
        }
}

inline void suite_logconcavity(Context& ctx)
{
    std::mt19937_64 rng(ctx.opts.seed);
    long bad = 0, trials = 0;
    for (int i = 0; i < 10; ++i)
    {
        const auto p = global::random_effective(ctx.inst.frame, rng);
        const auto q = global::random_effective(ctx.inst.frame, rng);
        bad += !global::log_concavity_check(ctx.inst.frame, p, q).holds;
        ++trials;
    }
    ctx.report.check("log-concavity of volume on " + std::to_string(trials) + " random pairs", bad == 0,
                     std::to_string(bad) + " violation(s)");
}

inline void suite_echelon(Context& ctx)
{
    std::mt19937_64 rng(ctx.opts.seed);
    long bad = 0;
    for (int i = 0; i < 100; ++i)
        bad += !series::echelon_trial(rng).ok();
    ctx.report.check("echelon valuation property on 100 random spaces", bad == 0,
                     std::to_string(bad) + " violation(s)");
}

inline void suite_fujita(Context& ctx)
{
    for (const auto& [n, d] : ctx.inst.divisors)
    {
        if (!d.is_big())
            continue;
        bool ok = true;
        for (const Rational& eps : {make_rational(1, 10), make_rational(1, 1000)})
            ok = ok && global::fujita_inner_polytope(d.chart_polytope(), eps).ok();
        ctx.report.check(n + ": rational inner polytopes approximate the body", ok);
    }
}

inline void verify_command(Context& ctx)
{
    static const std::map<std::string, std::function<void(Context&)>> suites{
        {"cauchy", suite_cauchy},           {"sandwich", suite_sandwich},     {"homogeneity", suite_homogeneity},
        {"conditions", suite_conditions},   {"baselocus", suite_baselocus},   {"convergence", suite_convergence},
        {"continuity", suite_continuity},   {"global", suite_global},         {"restricted", suite_restricted},
        {"logconcavity", suite_logconcavity}, {"echelon", suite_echelon},     {"fujita", suite_fujita}};
    std::vector<std::string> chosen = ctx.opts.all || ctx.opts.suites.empty() ? suite_names() : ctx.opts.suites;
    for (const auto& name : chosen)
    {
        auto it = suites.find(name);
        if (it == suites.end())
            throw std::invalid_argument("unknown suite \"" + name + "\"");
        it->second(ctx);
    }
    ctx.report.data["suites"] = chosen;
}

inline Json options_json(const RunOptions& o)
{
    Json j{{"divisor", o.divisor}, {"max_degree", o.max_degree}, {"amax", o.amax},
           {"stages", o.stages},   {"seed", o.seed},             {"all", o.all}};
    if (o.pair)
        j["pair"] = Json::array({o.pair->first, o.pair->second});
    if (!o.fibers.empty())
    {
        Json f = Json::array();
        for (const auto& a : o.fibers)
            f.push_back(pair_json(a));
        j["fibers"] = f;
    }
    if (!o.flat.empty())
        j["flat"] = o.flat;
    if (!o.flag.empty())
        j["flag"] = o.flag;
    if (!o.suites.empty())
        j["suites"] = o.suites;
    return j;
}

} // namespace detail

/// Runs one subcommand on a loaded instance and writes report.json plus
/// artifacts under the output directory. Model, series and core errors raised
/// by the pipeline become failed hard checks.
inline RunReport run(const std::string& command, const io::Instance& inst, const RunOptions& opts)
{
    static const std::map<std::string, std::function<void(detail::Context&)>> commands{
        {"body", detail::body_command},         {"volume", detail::volume_command},
        {"converge", detail::converge_command}, {"global", detail::global_command},
        {"restricted", detail::restricted_command}, {"baselocus", detail::baselocus_command},
        {"continuity", detail::continuity_command}, {"verify", detail::verify_command}};
    auto it = commands.find(command);
    if (it == commands.end())
        throw std::invalid_argument("unknown command \"" + command + "\"");

    RunReport report;
    report.command = command;
    report.instance = inst.name;
    report.options = detail::options_json(opts);
    detail::Context ctx{inst, opts, output_dir(opts), report};
    try
    {
        it->second(ctx);
    }
    catch (const adelic::ModelError& e)
    {
        report.check("model hypotheses", false, e.what());
    }
    catch (const core::CoreError& e)
    {
        report.check("hypotheses", false, e.what());
    }
    catch (const series::SeriesError& e)
    {
        report.check("series hypotheses", false, e.what());
    }
    catch (const GeometryError& e)
    {
        report.check("geometry", false, e.what());
    }
    report.artifacts.push_back("report.json");
    io::write_text(ctx.out / "report.json", io::dump(report.to_json()));
    return report;
}

inline RunReport run(const std::string& command, const std::filesystem::path& instance, const RunOptions& opts)
{
    return run(command, io::load_instance(instance), opts);
}

} // namespace okounkov::cli
