#pragma once

#include <string>

#include "defectus/errors.hpp"

namespace defectus {

/// A normalized valuation value: a natural number or infinity.
/// Infinity corresponds exactly to the zero element and absorbs addition.
class Valuation {
public:
    Valuation() : inf_(false), v_(0) {}

    static Valuation of(long v) {
        if (v < 0) throw Error(ErrorCode::bad_input, "valuation must be nonnegative");
        Valuation r;
        r.v_ = v;
        return r;
    }

    static Valuation infinity() {
        Valuation r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }

    long value() const {
        if (inf_) throw Error(ErrorCode::bad_input, "valuation is infinite");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return of(v_ + o.v_);
    }

    Valuation& operator+=(const Valuation& o) {
        *this = *this + o;
        return *this;
    }

    /// k-fold sum; times(0) is 0 even for the infinite valuation.
    Valuation times(long k) const {
        if (k < 0) throw Error(ErrorCode::bad_input, "multiplier must be nonnegative");
        if (k == 0) return of(0);
        if (inf_) return infinity();
        return of(v_ * k);
    }

    bool operator==(const Valuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    bool inf_;
    long v_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

} // namespace defectus
