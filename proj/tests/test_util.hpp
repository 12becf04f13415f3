#pragma once

#include <functional>

#include "defectus/errors.hpp"
#include "doctest.h"

// Runs `body` and checks that it throws an Error carrying exactly `expected`.
inline void expect_error(defectus::ErrorCode expected, const std::function<void()>& body) {
    bool threw = false;
    try {
        body();
    } catch (const defectus::Error& e) {
        threw = true;
        CHECK(e.code() == expected);
    }
    CHECK(threw);
}
