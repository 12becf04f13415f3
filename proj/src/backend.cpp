#include "defectus/backend.hpp"

#include <gmpxx.h>

namespace defectus {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace

Backend Backend::int_local(long p) {
    if (!is_prime(p))
        throw Error(ErrorCode::not_prime, "int-local base " + std::to_string(p) + " is not prime");
    return Backend(BackendKind::int_local, p);
}

Backend Backend::poly_local(long q) {
    if (!is_prime(q))
        throw Error(ErrorCode::not_prime, "poly-local base " + std::to_string(q) + " is not prime");
    // residues are multiplied in int64; keep q below 2^31 so products cannot overflow
    if (q >= (1L << 31))
        throw Error(ErrorCode::bad_input, "poly-local base must be below 2^31");
    return Backend(BackendKind::poly_local, q);
}

std::string Backend::to_string() const {
    return (kind_ == BackendKind::int_local ? "int:" : "poly:") + std::to_string(prime_);
}

Backend Backend::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::parse_error, "backend must look like int:<p> or poly:<q>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::parse_error, "bad backend prime '" + num + "'");
    long p;
    try {
        p = std::stol(num);
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "backend prime out of range: '" + num + "'");
    }
    if (kind == "int") return int_local(p);
    if (kind == "poly") return poly_local(p);
    throw Error(ErrorCode::parse_error, "unknown backend kind '" + kind + "'");
}

} // namespace defectus
