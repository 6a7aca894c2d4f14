#pragma once

#include <cstdint>
#include <ostream>

#include "okounkov/rational.hpp"

namespace okounkov::series {

/// Integers modulo a fixed prime P < 2^31, for characteristic-p stress runs.
template <std::uint32_t P>
class PrimeField
{
    static_assert(P > 1 && P < (1u << 31));

public:
    PrimeField() = default;
    PrimeField(long v) : v_(reduce(v)) {}

    std::uint32_t value() const { return v_; }

    friend PrimeField operator+(PrimeField a, PrimeField b) { return from_raw((a.v_ + b.v_) % P); }
    friend PrimeField operator-(PrimeField a, PrimeField b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend PrimeField operator-(PrimeField a) { return from_raw((P - a.v_) % P); }
    friend PrimeField operator*(PrimeField a, PrimeField b)
    {
        return from_raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % P));
    }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
    PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
    PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
    PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
    friend bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }
    friend bool operator==(PrimeField a, long b) { return a == PrimeField(b); }

    PrimeField inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("inverse of zero in prime field");
        PrimeField out(1), base = *this;
        for (std::uint64_t e = P - 2; e; e >>= 1, base *= base)
            if (e & 1)
                out *= base;
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, PrimeField a) { return os << a.v_; }

private:
    static std::uint32_t reduce(long v)
    {
        long r = v % static_cast<long>(P);
        return static_cast<std::uint32_t>(r < 0 ? r + P : r);
    }
    static PrimeField from_raw(std::uint32_t v)
    {
        PrimeField f;
        f.v_ = v;
        return f;
    }

    std::uint32_t v_ = 0;
};

} // namespace okounkov::series
