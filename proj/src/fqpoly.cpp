#include "defectus/fqpoly.hpp"

#include <algorithm>
#include <string>

namespace defectus {

namespace {

long mod_reduce(long v, long q) {
    long r = v % q;
    return r < 0 ? r + q : r;
}

} // namespace

long mod_inverse(long value, long q) {
    long a = mod_reduce(value, q);
    if (a == 0) throw Error(ErrorCode::division_by_zero, "inverse of 0 mod " + std::to_string(q));
    // extended Euclid on (a, q)
    long old_r = a, r = q;
    long old_s = 1, s = 0;
    while (r != 0) {
        long k = old_r / r;
        long tmp = old_r - k * r;
        old_r = r;
        r = tmp;
        tmp = old_s - k * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, q);
}

FqPoly::FqPoly(long q, std::vector<long> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (auto& v : c_) v = mod_reduce(v, q_);
    trim();
}

FqPoly FqPoly::constant(long q, long value) { return FqPoly(q, {value}); }

FqPoly FqPoly::monomial(long q, long degree, long coeff) {
    std::vector<long> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = coeff;
    return FqPoly(q, std::move(c));
}

long FqPoly::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FqPoly::check_same_field(const FqPoly& o) const {
    if (q_ != o.q_)
        throw Error(ErrorCode::backend_mismatch, "polynomials over different prime fields");
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    check_same_field(o);
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = mod_reduce(coeff(static_cast<long>(i)) + o.coeff(static_cast<long>(i)), q_);
    return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    check_same_field(o);
    std::vector<long> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = mod_reduce(coeff(static_cast<long>(i)) - o.coeff(static_cast<long>(i)), q_);
    return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::operator-() const {
    std::vector<long> c(c_);
    for (auto& v : c) v = mod_reduce(-v, q_);
    return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return FqPoly(q_);
    std::vector<long> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            // c_[i]*o.c_[j] < q^2 < 2^62, plus the accumulated residue stays in int64
            c[i + j] = mod_reduce(c[i + j] + c_[i] * o.c_[j], q_);
        }
    }
    return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::scaled(long factor) const {
    std::vector<long> c(c_);
    long f = mod_reduce(factor, q_);
    for (auto& v : c) v = mod_reduce(v * f, q_);
    return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inverse(leading_coeff(), q_));
}

FqPoly::DivMod FqPoly::divmod(const FqPoly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero())
        throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
    FqPoly rem = *this;
    FqPoly quo(q_);
    const long dd = divisor.degree();
    const long lc_inv = mod_inverse(divisor.leading_coeff(), q_);
    while (!rem.is_zero() && rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        long factor = mod_reduce(rem.leading_coeff() * lc_inv, q_);
        FqPoly term = monomial(q_, shift, factor);
        quo = quo + term;
        rem = rem - term * divisor;
    }
    return {quo, rem};
}

FqPoly FqPoly::divide_exact(const FqPoly& divisor) const {
    auto dm = divmod(divisor);
    if (!dm.rem.is_zero())
        throw Error(ErrorCode::not_in_ring, "polynomial division is not exact");
    return dm.quo;
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a.divmod(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string FqPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        long v = coeff(i);
        if (v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(v);
        } else {
            if (v != 1) out += std::to_string(v) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace defectus
