#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "koszul/errors.hpp"

namespace koszul {

class Scalar;

/// Ground field of a computation session: the rationals (characteristic 0)
/// or a prime field F_p with p < 2^31.
class Field {
public:
    Field() = default;
    explicit Field(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long value) const;
    Scalar fraction(long num, long den) const;
    /// Parses "a" or "a/b" (optionally signed). In F_p the value is a/b mod p.
    Scalar parse(const std::string& text) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    std::string description() const;

private:
    std::uint64_t p_ = 0;
};

/// Exact field element: a reduced rational or a residue mod p. All arithmetic
/// is exact; combining scalars of different characteristic throws.
class Scalar {
public:
    Scalar() = default;  // rational zero

    std::uint64_t characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;
    /// Sign of a rational (-1, 0, 1); residues report 0 vs 1 only.
    int sign() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "a" or "a/b" over Q, the residue over F_p.
    std::string str() const;

    const mpq_class& rational() const;

private:
    friend class Field;
    void check_compatible(const Scalar& o) const;

    std::uint64_t p_ = 0;   // 0 = rational
    mpq_class q_{0};        // value when p_ == 0
    std::uint64_t r_ = 0;   // value in [0, p) when p_ > 0
};

}  // namespace koszul
