#pragma once

#include <vector>

#include "defectus/errors.hpp"

namespace defectus {

/// Dense univariate polynomial over the prime field F_q.
/// Coefficients are residues in [0, q), lowest degree first, no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
class FqPoly {
public:
    explicit FqPoly(long q) : q_(q) {}
    FqPoly(long q, std::vector<long> coeffs);

    static FqPoly constant(long q, long value);
    static FqPoly monomial(long q, long degree, long coeff = 1);

    long modulus() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Order at t = 0 (index of the lowest nonzero coefficient). Zero polynomial is the caller's problem.
    long order() const;

    long constant_term() const { return c_.empty() ? 0 : c_[0]; }
    long leading_coeff() const { return c_.empty() ? 0 : c_.back(); }
    long coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<long>& coeffs() const { return c_; }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly operator-() const;

    bool operator==(const FqPoly& o) const { return q_ == o.q_ && c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    FqPoly scaled(long factor) const;
    FqPoly monic() const;

    /// Quotient and remainder by a nonzero divisor.
    struct DivMod;
    DivMod divmod(const FqPoly& divisor) const;

    /// Exact quotient; throws if the division leaves a remainder.
    FqPoly divide_exact(const FqPoly& divisor) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static FqPoly gcd(FqPoly a, FqPoly b);

    /// Human-readable form like "2*t^3 + t + 1"; used in messages only.
    std::string to_string() const;

private:
    void trim();
    void check_same_field(const FqPoly& o) const;

    long q_;
    std::vector<long> c_;
};

struct FqPoly::DivMod {
    FqPoly quo, rem;
};

/// Inverse of a nonzero residue mod the prime q.
long mod_inverse(long value, long q);

} // namespace defectus
