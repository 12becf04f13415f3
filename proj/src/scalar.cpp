#include "defectus/scalar.hpp"

#include "json.hpp"

#include <cctype>
#include <utility>

namespace defectus {

using json = nlohmann::json;

namespace {

bool divisible_by(const mpz_class& v, long p) {
    return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

} // namespace

Scalar Scalar::zero(const Backend& bk) { return from_int(bk, 0); }
Scalar Scalar::one(const Backend& bk) { return from_int(bk, 1); }

Scalar Scalar::from_int(const Backend& bk, long value) {
    if (bk.kind() == BackendKind::int_local) return Scalar(bk, mpq_class(value));
    return Scalar(bk, PolyFrac{FqPoly::constant(bk.prime(), value), FqPoly::constant(bk.prime(), 1)});
}

Scalar Scalar::uniformizer_power(const Backend& bk, long k) {
    if (k < 0) throw Error(ErrorCode::bad_input, "uniformizer power must be nonnegative");
    if (bk.kind() == BackendKind::int_local) {
        mpz_class num;
        mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(bk.prime()),
                      static_cast<unsigned long>(k));
        return Scalar(bk, mpq_class(num));
    }
    return Scalar(bk, PolyFrac{FqPoly::monomial(bk.prime(), k), FqPoly::constant(bk.prime(), 1)});
}

Scalar Scalar::from_rational(const Backend& bk, mpq_class value) {
    if (bk.kind() != BackendKind::int_local)
        throw Error(ErrorCode::backend_mismatch, "rational payload requires an int-local backend");
    value.canonicalize();
    if (value.get_den() == 0)
        throw Error(ErrorCode::not_in_ring, "denominator is zero");
    if (divisible_by(value.get_den(), bk.prime()))
        throw Error(ErrorCode::not_in_ring,
                    "denominator divisible by " + std::to_string(bk.prime()));
    return Scalar(bk, std::move(value));
}

Scalar::PolyFrac Scalar::reduce(FqPoly num, FqPoly den) {
    const long q = num.modulus();
    if (den.is_zero())
        throw Error(ErrorCode::division_by_zero, "polynomial fraction with zero denominator");
    if (num.is_zero()) return {FqPoly(q), FqPoly::constant(q, 1)};
    FqPoly g = FqPoly::gcd(num, den);
    num = num.divide_exact(g);
    den = den.divide_exact(g);
    long u = mod_inverse(den.leading_coeff(), q);
    return {num.scaled(u), den.scaled(u)};
}

Scalar Scalar::from_poly_fraction(const Backend& bk, FqPoly num, FqPoly den) {
    if (bk.kind() != BackendKind::poly_local)
        throw Error(ErrorCode::backend_mismatch, "polynomial payload requires a poly-local backend");
    if (num.modulus() != bk.prime() || den.modulus() != bk.prime())
        throw Error(ErrorCode::backend_mismatch, "coefficient field does not match backend");
    if (den.is_zero())
        throw Error(ErrorCode::not_in_ring, "denominator has zero constant term");
    PolyFrac f = reduce(std::move(num), std::move(den));
    if (f.den.constant_term() == 0)
        throw Error(ErrorCode::not_in_ring, "denominator has zero constant term");
    return Scalar(bk, std::move(f));
}

Scalar Scalar::parse(const Backend& bk, const std::string& text) {
    if (bk.kind() == BackendKind::int_local) {
        // grammar: [-]digits[/digits]
        size_t pos = 0;
        if (pos < text.size() && text[pos] == '-') ++pos;
        size_t num_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == num_start)
            throw Error(ErrorCode::parse_error, "expected digits in '" + text + "'");
        std::string num_part = text.substr(0, pos);
        std::string den_part = "1";
        if (pos < text.size()) {
            if (text[pos] != '/')
                throw Error(ErrorCode::parse_error, "unexpected character in '" + text + "'");
            ++pos;
            size_t den_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == den_start || pos != text.size())
                throw Error(ErrorCode::parse_error, "bad denominator in '" + text + "'");
            den_part = text.substr(den_start);
        }
        mpq_class v{mpz_class(num_part), mpz_class(den_part)};
        return from_rational(bk, std::move(v));
    }

    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("bad poly scalar: ") + e.what());
    }
    if (!j.is_object() || !j.contains("num"))
        throw Error(ErrorCode::parse_error, "poly scalar must be {\"num\": [...], \"den\": [...]}");
    auto read_coeffs = [&](const json& arr) {
        if (!arr.is_array())
            throw Error(ErrorCode::parse_error, "poly coefficients must be an array");
        std::vector<long> c;
        c.reserve(arr.size());
        for (const auto& v : arr) {
            if (!v.is_number_integer())
                throw Error(ErrorCode::parse_error, "poly coefficients must be integers");
            c.push_back(v.get<long>());
        }
        return c;
    };
    FqPoly num(bk.prime(), read_coeffs(j.at("num")));
    FqPoly den = j.contains("den") ? FqPoly(bk.prime(), read_coeffs(j.at("den")))
                                   : FqPoly::constant(bk.prime(), 1);
    return from_poly_fraction(bk, std::move(num), std::move(den));
}

std::string Scalar::to_text() const {
    if (bk_.kind() == BackendKind::int_local) return std::get<mpq_class>(v_).get_str();
    const auto& f = std::get<PolyFrac>(v_);
    json j;
    j["num"] = f.num.coeffs();
    if (!f.den.is_one()) j["den"] = f.den.coeffs();
    return j.dump();
}

bool Scalar::is_zero() const {
    if (bk_.kind() == BackendKind::int_local) return std::get<mpq_class>(v_) == 0;
    return std::get<PolyFrac>(v_).num.is_zero();
}

Valuation Scalar::valuation() const {
    if (is_zero()) return Valuation::infinity();
    if (bk_.kind() == BackendKind::int_local) {
        // denominator is a unit, so only the numerator carries valuation
        mpz_class num = std::get<mpq_class>(v_).get_num();
        mpz_class reduced;
        mp_bitcnt_t k = mpz_remove(reduced.get_mpz_t(), num.get_mpz_t(),
                                   mpz_class(bk_.prime()).get_mpz_t());
        return Valuation::of(static_cast<long>(k));
    }
    return Valuation::of(std::get<PolyFrac>(v_).num.order());
}

void Scalar::check_backend(const Scalar& o) const {
    if (bk_ != o.bk_)
        throw Error(ErrorCode::backend_mismatch,
                    "mixed backends " + bk_.to_string() + " and " + o.bk_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_backend(o);
    if (bk_.kind() == BackendKind::int_local)
        return Scalar(bk_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    const auto& a = std::get<PolyFrac>(v_);
    const auto& b = std::get<PolyFrac>(o.v_);
    return Scalar(bk_, reduce(a.num * b.den + b.num * a.den, a.den * b.den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_backend(o);
    if (bk_.kind() == BackendKind::int_local)
        return Scalar(bk_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    const auto& a = std::get<PolyFrac>(v_);
    const auto& b = std::get<PolyFrac>(o.v_);
    return Scalar(bk_, reduce(a.num * b.num, a.den * b.den));
}

Scalar Scalar::operator-() const {
    if (bk_.kind() == BackendKind::int_local)
        return Scalar(bk_, mpq_class(-std::get<mpq_class>(v_)));
    const auto& a = std::get<PolyFrac>(v_);
    return Scalar(bk_, PolyFrac{-a.num, a.den});
}

bool Scalar::operator==(const Scalar& o) const {
    if (bk_ != o.bk_) return false;
    return v_ == o.v_;
}

Scalar Scalar::unit_inverse() const {
    if (is_zero() || valuation() != Valuation::of(0))
        throw Error(ErrorCode::not_a_unit, "element has positive valuation or is zero");
    if (bk_.kind() == BackendKind::int_local)
        return Scalar(bk_, mpq_class(1 / std::get<mpq_class>(v_)));
    const auto& a = std::get<PolyFrac>(v_);
    return Scalar(bk_, reduce(a.den, a.num));
}

Scalar Scalar::divide_exact(const Scalar& divisor) const {
    check_backend(divisor);
    if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "exact division by zero");
    if (bk_.kind() == BackendKind::int_local) {
        mpq_class r = std::get<mpq_class>(v_) / std::get<mpq_class>(divisor.v_);
        if (divisible_by(r.get_den(), bk_.prime()))
            throw Error(ErrorCode::not_in_ring, "quotient leaves the ring");
        return Scalar(bk_, std::move(r));
    }
    const auto& a = std::get<PolyFrac>(v_);
    const auto& b = std::get<PolyFrac>(divisor.v_);
    PolyFrac r = reduce(a.num * b.den, a.den * b.num);
    if (r.den.constant_term() == 0)
        throw Error(ErrorCode::not_in_ring, "quotient leaves the ring");
    return Scalar(bk_, std::move(r));
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }
const FqPoly& Scalar::poly_num() const { return std::get<PolyFrac>(v_).num; }
const FqPoly& Scalar::poly_den() const { return std::get<PolyFrac>(v_).den; }

} // namespace defectus
