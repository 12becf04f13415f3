#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "defectus/backend.hpp"
#include "defectus/fqpoly.hpp"
#include "defectus/valuation.hpp"

namespace defectus {

/// An exact element of the chosen DVR, stored as a reduced fraction whose
/// denominator is a unit of the ring:
///   int_local:  canonical mpq with denominator not divisible by p,
///   poly_local: num/den over F_q[t], gcd 1, den monic with nonzero constant term.
class Scalar {
public:
    static Scalar zero(const Backend& bk);
    static Scalar one(const Backend& bk);

    /// Image of an integer under Z -> O.
    static Scalar from_int(const Backend& bk, long value);

    /// The element pi^k for the backend's uniformizer pi.
    static Scalar uniformizer_power(const Backend& bk, long k);

    /// Checked constructors; throw not_in_ring when the value lies outside O.
    static Scalar from_rational(const Backend& bk, mpq_class value);
    static Scalar from_poly_fraction(const Backend& bk, FqPoly num, FqPoly den);

    /// Parses the scalar text grammar: int_local "[-]digits[/digits]";
    /// poly_local a JSON record {"num": [...], "den": [...]} with den defaulting to [1].
    static Scalar parse(const Backend& bk, const std::string& text);
    std::string to_text() const;

    const Backend& backend() const { return bk_; }
    bool is_zero() const;
    bool is_unit() const { return !is_zero() && valuation() == Valuation::of(0); }

    Valuation valuation() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse of a unit; throws not_a_unit otherwise.
    Scalar unit_inverse() const;

    /// Quotient in the fraction field, required to land back in O.
    Scalar divide_exact(const Scalar& divisor) const;

    const mpq_class& rational() const;
    const FqPoly& poly_num() const;
    const FqPoly& poly_den() const;

private:
    struct PolyFrac {
        FqPoly num, den;
        bool operator==(const PolyFrac& o) const {
            return num == o.num && den == o.den;
        }
    };

    Scalar(Backend bk, mpq_class v) : bk_(bk), v_(std::move(v)) {}
    Scalar(Backend bk, PolyFrac v) : bk_(bk), v_(std::move(v)) {}

    static PolyFrac reduce(FqPoly num, FqPoly den);
    void check_backend(const Scalar& o) const;

    Backend bk_;
    std::variant<mpq_class, PolyFrac> v_;
};

} // namespace defectus
