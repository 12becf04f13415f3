#pragma once

#include <string>

#include "defectus/errors.hpp"

namespace defectus {

enum class BackendKind { int_local, poly_local };

/// The concrete discrete valuation ring:
///   int_local(p):  integers localized at the prime p, uniformizer p.
///   poly_local(q): F_q[t] localized at (t), uniformizer t.
/// Primality of p (resp. q) is checked at construction.
class Backend {
public:
    static Backend int_local(long p);
    static Backend poly_local(long q);

    BackendKind kind() const { return kind_; }
    long prime() const { return prime_; }

    bool operator==(const Backend& o) const {
        return kind_ == o.kind_ && prime_ == o.prime_;
    }
    bool operator!=(const Backend& o) const { return !(*this == o); }

    /// Flag grammar form: "int:5" or "poly:3".
    std::string to_string() const;
    static Backend parse(const std::string& text);

private:
    Backend(BackendKind kind, long prime) : kind_(kind), prime_(prime) {}

    BackendKind kind_;
    long prime_;
};

} // namespace defectus
