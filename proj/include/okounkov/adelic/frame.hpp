#pragma once

#include "okounkov/geometry/linalg.hpp"
#include "okounkov/geometry/polytope.hpp"

namespace okounkov::adelic {

class ModelError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Complete fan with rays v_ρ in Z^d. Boundary rays cut out X \ U; the
/// remaining rays are the chart rays, which must form a lattice basis so that
/// U is the affine chart A^d with coordinates x_i vanishing on D_{chart_i}.
class ToricFrame
{
public:
    ToricFrame(std::vector<Exponent> rays, std::vector<std::size_t> boundary)
        : rays_(std::move(rays)), boundary_(std::move(boundary))
    {
        if (rays_.empty())
            throw ModelError("frame: no rays");
        d_ = rays_.front().size();
        if (d_ == 0 || d_ > geom::kMaxHullDimension)
            throw ModelError("frame: dimension must be between 1 and 4");
        is_boundary_.assign(rays_.size(), false);
        for (auto i : boundary_)
        {
            if (i >= rays_.size() || is_boundary_[i])
                throw ModelError("frame: invalid boundary ray index");
            is_boundary_[i] = true;
        }
        if (boundary_.empty())
            throw ModelError("frame: boundary rays must be nonempty");
        std::sort(boundary_.begin(), boundary_.end());
        for (std::size_t i = 0; i < rays_.size(); ++i)
        {
            if (rays_[i].size() != d_)
                throw ModelError("frame: ray dimension mismatch");
            if (std::all_of(rays_[i].begin(), rays_[i].end(), [](auto x) { return x == 0; }))
                throw ModelError("frame: zero ray");
            if (normalize_ray(to_ratvec(rays_[i])) != to_ratvec(rays_[i]))
                throw ModelError("frame: ray " + std::to_string(i) + " is not primitive");
            if (!is_boundary_[i])
                chart_.push_back(i);
        }
        if (chart_.size() != d_)
            throw ModelError("frame: non-boundary rays must form a basis of the lattice (U = A^d)");
        geom::RatMatrix b;
        for (auto i : chart_)
            b.push_back(to_ratvec(rays_[i]));
        if (abs(geom::determinant(b)) != 1)
            throw ModelError("frame: non-boundary rays must form a basis of the lattice (U = A^d)");
        // coordinates of every ray in the chart basis: v_ρ = Σ w_i v_{chart_i}
        geom::RatMatrix bt(d_, RatVec(d_));
        for (std::size_t r = 0; r < d_; ++r)
            for (std::size_t c = 0; c < d_; ++c)
                bt[r][c] = b[c][r];
        for (const auto& v : rays_)
            chart_coords_.push_back(*geom::solve(bt, to_ratvec(v)));
        // a boundary ray inside cone(chart rays) would subdivide the chart cone
        for (auto i : boundary_)
            if (std::all_of(chart_coords_[i].begin(), chart_coords_[i].end(), [](const Rational& w) { return w >= 0; }))
                throw ModelError("frame: boundary ray " + std::to_string(i) + " lies in the chart cone");
    }

    std::size_t dim() const { return d_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<Exponent>& rays() const { return rays_; }
    const std::vector<std::size_t>& boundary() const { return boundary_; }
    const std::vector<std::size_t>& chart() const { return chart_; }
    bool is_boundary(std::size_t ray) const { return is_boundary_[ray]; }
    /// v_ρ expressed in the basis of chart rays.
    const RatVec& chart_coords(std::size_t ray) const { return chart_coords_[ray]; }

    friend bool operator==(const ToricFrame& a, const ToricFrame& b)
    {
        return a.rays_ == b.rays_ && a.boundary_ == b.boundary_;
    }

private:
    std::vector<Exponent> rays_;
    std::vector<std::size_t> boundary_, chart_;
    std::vector<bool> is_boundary_;
    std::vector<RatVec> chart_coords_;
    std::size_t d_ = 0;
};

/// Q-divisor Σ a_ρ D_ρ on the frame, coefficients indexed by ray.
struct ModelDivisor
{
    RatVec coeffs;

    bool is_effective() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& a) { return a >= 0; });
    }

    friend ModelDivisor operator+(const ModelDivisor& a, const ModelDivisor& b) { return {add(a.coeffs, b.coeffs)}; }
    friend ModelDivisor operator-(const ModelDivisor& a, const ModelDivisor& b) { return {sub(a.coeffs, b.coeffs)}; }
    friend ModelDivisor operator*(const Rational& t, const ModelDivisor& a) { return {mul(t, a.coeffs)}; }
    friend bool operator==(const ModelDivisor&, const ModelDivisor&) = default;
};

inline void check_divisor(const ToricFrame& f, const ModelDivisor& a)
{
    if (a.coeffs.size() != f.ray_count())
        throw ModelError("divisor: coefficient count differs from the frame's ray count");
}

/// Effective divisor supported exactly on the boundary rays.
class BoundaryDivisor
{
public:
    BoundaryDivisor(const ToricFrame& f, ModelDivisor d) : d_(std::move(d))
    {
        check_divisor(f, d_);
        for (std::size_t i = 0; i < f.ray_count(); ++i)
            if (f.is_boundary(i) ? d_.coeffs[i] <= 0 : d_.coeffs[i] != 0)
                throw ModelError("boundary divisor: must be positive exactly on the boundary rays");
    }

    const ModelDivisor& divisor() const { return d_; }
    const Rational& operator[](std::size_t ray) const { return d_.coeffs[ray]; }

private:
    ModelDivisor d_;
};

/// The polytope of D in chart exponents: α = B u + a_chart for u with
/// ⟨u, v_ρ⟩ >= -a_ρ, where B has the chart rays as rows. Chart monomials
/// x^α with α ∈ (mP) ∩ Z^d are the sections of mD.
inline geom::RatPolytope chart_polytope(const ToricFrame& f, const ModelDivisor& a)
{
    check_divisor(f, a);
    const std::size_t d = f.dim();
    RatVec a_chart(d);
    for (std::size_t i = 0; i < d; ++i)
        a_chart[i] = a.coeffs[f.chart()[i]];
    std::vector<geom::Halfspace> hs;
    // ⟨u, v_ρ⟩ = Σ w_i (α_i - a_chart_i) >= -a_ρ
    for (std::size_t r = 0; r < f.ray_count(); ++r)
    {
        const RatVec& w = f.chart_coords(r);
        hs.push_back({mul(Rational(-1), w), Rational(a.coeffs[r] - dot(w, a_chart))});
    }
    return geom::polytope_from_halfspaces(hs, d);
}

/// Non-boundary coefficients must be integral (integral divisor on U).
inline void check_integral_on_chart(const ToricFrame& f, const ModelDivisor& a)
{
    for (auto i : f.chart())
        if (!is_integral(a.coeffs[i]))
            throw ModelError("divisor: coefficients on non-boundary rays must be integral");
}

/// Toric ampleness surrogate: full-dimensional chart polytope on which every
/// ray inequality supports a facet.
inline bool is_ample(const ToricFrame& f, const ModelDivisor& a)
{
    const geom::RatPolytope p = chart_polytope(f, a);
    if (!p.is_full_dimensional())
        return false;
    const std::size_t d = f.dim();
    RatVec a_chart(d);
    for (std::size_t i = 0; i < d; ++i)
        a_chart[i] = a.coeffs[f.chart()[i]];
    for (std::size_t r = 0; r < f.ray_count(); ++r)
    {
        const geom::Halfspace h{mul(Rational(-1), f.chart_coords(r)),
                                Rational(a.coeffs[r] - dot(f.chart_coords(r), a_chart))};
        std::vector<RatVec> tight;
        for (const auto& v : p.vertices())
            if (h.tight_at(v))
                tight.push_back(v);
        if (tight.empty() || geom::affine_hull(tight).dim() + 1 != d)
            return false;
    }
    return true;
}

/// ‖A - B‖ in the boundary norm of D0: max over boundary rays of
/// |a_ρ - b_ρ| / D0_ρ; nullopt (infinite) when A - B is nonzero on U.
inline std::optional<Rational> boundary_distance(const ToricFrame& f, const ModelDivisor& a, const ModelDivisor& b,
                                                 const BoundaryDivisor& d0)
{
    check_divisor(f, a);
    check_divisor(f, b);
    Rational best(0);
    for (std::size_t r = 0; r < f.ray_count(); ++r)
    {
        const Rational diff = abs(Rational(a.coeffs[r] - b.coeffs[r]));
        if (!f.is_boundary(r))
        {
            if (diff != 0)
                return std::nullopt;
            continue;
        }
        best = std::max(best, Rational(diff / d0[r]));
    }
    return best;
}

} // namespace okounkov::adelic
