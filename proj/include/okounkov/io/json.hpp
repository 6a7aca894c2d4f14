#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "okounkov/adelic/sections.hpp"
#include "okounkov/series/graded.hpp"

namespace okounkov::io {

using namespace okounkov::series;

using Json = nlohmann::json;

class SchemaError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- rationals

namespace detail {

inline Json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

inline Integer integer_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
    {
        const auto s = j.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
            return Integer(s);
    }
    if (j.is_number_float())
        throw SchemaError(where + ": decimal literals are not accepted, use [num, den]");
    throw SchemaError(where + ": expected an integer");
}

} // namespace detail

/// [num, den], reduced with the sign on the numerator. Integers beyond 64 bits
/// are written as decimal strings.
inline Json to_json(const Rational& r)
{
    return Json::array({detail::integer_to_json(r.get_num()), detail::integer_to_json(r.get_den())});
}

/// Accepts [num, den] or a bare integer.
inline Rational rational_from_json(const Json& j, const std::string& where = "rational")
{
    if (j.is_array())
    {
        if (j.size() != 2)
            throw SchemaError(where + ": expected [num, den]");
        const Integer num = detail::integer_from_json(j[0], where);
        const Integer den = detail::integer_from_json(j[1], where);
        if (den == 0)
            throw SchemaError(where + ": zero denominator");
        return make_rational(num, den);
    }
    return Rational(detail::integer_from_json(j, where));
}

inline std::string fraction_string(const Rational& r) { return to_string(r); }

inline std::string decimal_string(const Rational& r, int digits = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
    return buf;
}

/// Report rendering: exact fraction plus a decimal for reading.
inline Json rational_report(const Rational& r) { return Json{{"fraction", fraction_string(r)}, {"decimal", decimal_string(r)}}; }

inline Json to_json(const RatVec& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

inline RatVec ratvec_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + ": expected an array of rationals");
    RatVec out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline Exponent exponent_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + ": expected an integer array");
    Exponent out;
    for (const auto& x : j)
    {
        if (!x.is_number_integer())
            throw SchemaError(where + ": exponents must be integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

// ---------------------------------------------------------------- polytopes

inline Json to_json(const geom::RatPolytope& p)
{
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(to_json(v));
    auto halfspaces = [](const std::vector<geom::Halfspace>& hs) {
        Json out = Json::array();
        for (const auto& h : hs)
            out.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
        return out;
    };
    return Json{{"vertices", verts},
                {"ambient_dim", p.ambient_dim()},
                {"dim", p.dim()},
                {"facets", halfspaces(p.halfspaces())},
                {"equations", halfspaces(p.equations())}};
}

/// Only the vertex list is read back; the H-description is recomputed.
inline geom::RatPolytope polytope_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vertices"))
        throw SchemaError("polytope: missing \"vertices\"");
    std::vector<RatVec> pts;
    for (const auto& v : j["vertices"])
        pts.push_back(ratvec_from_json(v, "polytope vertex"));
    std::size_t ambient = 0;
    if (j.contains("ambient_dim"))
        ambient = j["ambient_dim"].get<std::size_t>();
    else if (!pts.empty())
        ambient = pts.front().size();
    else
        throw SchemaError("polytope: empty vertex list needs \"ambient_dim\"");
    return geom::convex_hull(std::move(pts), ambient);
}

// ---------------------------------------------------------------- sections

inline Json to_json(const LaurentSection<Rational>& s)
{
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"exp", e}, {"coef", to_json(c)}});
    return Json{{"terms", terms}};
}

inline LaurentSection<Rational> section_from_json(const Json& j, std::size_t d)
{
    if (!j.is_object() || !j.contains("terms"))
        throw SchemaError("section: missing \"terms\"");
    LaurentSection<Rational> s(d);
    for (const auto& t : j["terms"])
    {
        Exponent e = exponent_from_json(t.at("exp"), "section exponent");
        if (e.size() != d)
            throw SchemaError("section: exponent length " + std::to_string(e.size()) + " != " + std::to_string(d));
        s.add_term(std::move(e), rational_from_json(t.at("coef"), "section coefficient"));
    }
    return s;
}

// ---------------------------------------------------------------- instances

struct Experiments
{
    long max_degree = 12;
    long amax = 2;
    long stages = 10;
    std::vector<Rational> ts;
};

struct Instance
{
    std::string name;
    adelic::ToricFrame frame;
    adelic::BoundaryDivisor boundary;
    std::map<std::string, adelic::ToricAdelicDivisor> divisors;
    std::map<std::string, Flag> flags;
    std::map<std::string, std::vector<std::size_t>> flats;   // 0-based in memory
    std::vector<adelic::ModelDivisor> amples;
    std::map<std::string, GradedSeries<Rational>> series;
    Experiments experiments;
    /// number of listed stages; absent for closed-form and constant divisors
    std::map<std::string, long> listed_stages;

    /// Stage bound usable for divisor n: the listed count or `wanted`.
    long stage_bound(const std::string& n, long wanted) const
    {
        auto it = listed_stages.find(n);
        return it == listed_stages.end() ? wanted : std::min(wanted, it->second);
    }

    const adelic::ToricAdelicDivisor& divisor(const std::string& n) const
    {
        auto it = divisors.find(n);
        if (it == divisors.end())
            throw SchemaError("instance " + name + ": no divisor named \"" + n + "\"");
        return it->second;
    }

    const std::vector<std::size_t>& flat(const std::string& n) const
    {
        auto it = flats.find(n);
        if (it == flats.end())
            throw SchemaError("instance " + name + ": no flat named \"" + n + "\"");
        return it->second;
    }
};

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(where + ": missing \"" + key + "\"");
    return j[key];
}

inline std::vector<std::size_t> index_list(const Json& j, const std::string& where, std::size_t base)
{
    if (!j.is_array())
        throw SchemaError(where + ": expected an index array");
    std::vector<std::size_t> out;
    for (const auto& x : j)
    {
        if (!x.is_number_integer() || x.get<long>() < static_cast<long>(base))
            throw SchemaError(where + ": indices must be integers >= " + std::to_string(base));
        out.push_back(x.get<std::size_t>() - base);
    }
    return out;
}

inline adelic::ToricAdelicDivisor divisor_from_json(const Json& j, const std::string& name,
                                                    const adelic::ToricFrame& frame,
                                                    const adelic::BoundaryDivisor& boundary)
{
    using namespace adelic;
    const std::string where = "divisor " + name;
    ModelDivisor limit{ratvec_from_json(require(j, "limit", where), where + ".limit")};
    if (!j.contains("stages") || (j["stages"].is_string() && j["stages"] == "constant"))
        return ToricAdelicDivisor::constant(frame, boundary, limit);
    const Json& st = j["stages"];
    if (st.contains("closed_form"))
    {
        const Json& cf = st["closed_form"];
        std::vector<ClosedFormCoeff> coeffs;
        for (const auto& c : require(cf, "coeffs", where))
        {
            RatVec v = ratvec_from_json(c, where + ".coeffs");
            if (v.size() != 3)
                throw SchemaError(where + ": closed-form coefficient must be [c, r, s]");
            coeffs.push_back({v[0], v[1], v[2]});
        }
        RatVec q = ratvec_from_json(require(cf, "q", where), where + ".q");
        if (q.size() != 2)
            throw SchemaError(where + ": closed-form q must be [r, s]");
        auto d = ToricAdelicDivisor::closed_form(frame, boundary, std::move(coeffs), q[0], q[1]);
        if (d.limit().coeffs != limit.coeffs)
            throw SchemaError(where + ": declared limit differs from the closed-form limit");
        return d;
    }
    if (st.contains("list"))
    {
        std::vector<Stage> stages;
        for (const auto& s : st["list"])
            stages.push_back(Stage{ModelDivisor{ratvec_from_json(require(s, "coeffs", where), where + ".list")},
                                   rational_from_json(require(s, "q", where), where + ".list.q")});
        if (stages.empty())
            throw SchemaError(where + ": empty stage list");
        return ToricAdelicDivisor::listed(frame, boundary, limit, std::move(stages));
    }
    throw SchemaError(where + ": stages must be \"constant\", {closed_form} or {list}");
}

} // namespace detail

inline Instance instance_from_json(const Json& j, std::string name = "instance")
{
    using namespace adelic;
    const Json& fj = detail::require(j, "frame", name);
    std::vector<Exponent> rays;
    for (const auto& r : detail::require(fj, "rays", "frame"))
        rays.push_back(exponent_from_json(r, "frame.rays"));
    ToricFrame frame(rays, detail::index_list(detail::require(fj, "boundary", "frame"), "frame.boundary", 0));
    BoundaryDivisor boundary(
        frame, ModelDivisor{ratvec_from_json(detail::require(j, "boundary_divisor", name), "boundary_divisor")});
    Instance inst{std::move(name), frame, boundary, {}, {}, {}, {}, {}, {}, {}};
    const std::size_t d = frame.dim();

    if (j.contains("experiments"))
    {
        const Json& e = j["experiments"];
        auto get_long = [&](const char* k, long& out) {
            if (e.contains(k))
            {
                if (!e[k].is_number_integer() || e[k].get<long>() < 1)
                    throw SchemaError(std::string("experiments.") + k + ": expected a positive integer");
                out = e[k].get<long>();
            }
        };
        get_long("max_degree", inst.experiments.max_degree);
        get_long("amax", inst.experiments.amax);
        get_long("stages", inst.experiments.stages);
        if (e.contains("ts"))
            inst.experiments.ts = ratvec_from_json(e["ts"], "experiments.ts");
    }

    for (const auto& [n, dj] : detail::require(j, "divisors", inst.name).items())
    {
        auto div = detail::divisor_from_json(dj, n, frame, boundary);
        const bool listed = dj.contains("stages") && dj["stages"].is_object() && dj["stages"].contains("list");
        if (listed)
            inst.listed_stages[n] = static_cast<long>(dj["stages"]["list"].size());
        const long check_to = inst.stage_bound(n, inst.experiments.stages);
        if (check_to >= 2)
        {
            auto rep = verify_cauchy(div, check_to);
            if (!rep.ok())
                throw SchemaError("divisor " + n + ": Cauchy condition violated at " +
                                  std::to_string(rep.violations.size()) + " stage pair(s)");
        }
        inst.divisors.emplace(n, std::move(div));
    }

    if (j.contains("flats"))
        for (const auto& [n, fl] : j["flats"].items())
        {
            auto t = detail::index_list(fl, "flats." + n, 1);
            std::sort(t.begin(), t.end());
            for (auto i : t)
                if (i >= d)
                    throw SchemaError("flats." + n + ": coordinate out of range");
            inst.flats.emplace(n, std::move(t));
        }

    if (j.contains("flags"))
        for (const auto& [n, fl] : j["flags"].items())
        {
            auto order = detail::index_list(detail::require(fl, "order", "flags." + n), "flags." + n, 1);
            std::vector<std::size_t> mask;
            if (fl.contains("mask"))
                mask = detail::index_list(fl["mask"], "flags." + n + ".mask", 1);
            std::sort(mask.begin(), mask.end());
            if (!mask.empty() && std::none_of(inst.flats.begin(), inst.flats.end(),
                                              [&](const auto& kv) { return kv.second == mask; }))
                throw SchemaError("flags." + n + ": restriction mask is not a declared flat");
            try
            {
                inst.flags.emplace(n, Flag(d, std::move(order), std::move(mask)));
            }
            catch (const SeriesError& e)
            {
                throw SchemaError("flags." + n + ": " + e.what());
            }
        }

    if (j.contains("ample"))
        for (const auto& a : j["ample"])
        {
            ModelDivisor m{ratvec_from_json(a, "ample")};
            if (!is_ample(frame, m))
                throw SchemaError("ample: reference divisor is not ample");
            inst.amples.push_back(std::move(m));
        }

    if (j.contains("series"))
        for (const auto& [n, sj] : j["series"].items())
        {
            std::vector<SectionSpace<Rational>> slices;
            long m = 0;
            for (const auto& slice : detail::require(sj, "slices", "series." + n))
            {
                ++m;
                std::vector<LaurentSection<Rational>> gens;
                for (const auto& s : slice)
                    gens.push_back(section_from_json(s, d));
                slices.emplace_back(d, m, std::move(gens));
            }
            inst.series.emplace(n, explicit_series<Rational>(d, std::move(slices)));
        }
    return inst;
}

inline Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path.string());
    try
    {
        return Json::parse(in);
    }
    catch (const Json::parse_error& e)
    {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

inline Instance load_instance(const std::filesystem::path& path)
{
    try
    {
        return instance_from_json(read_json_file(path), path.stem().string());
    }
    catch (const Json::exception& e)
    {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SchemaError("cannot write " + path.string());
    out << text;
}

} // namespace okounkov::io
