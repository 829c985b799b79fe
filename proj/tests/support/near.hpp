#pragma once

#include <cmath>

#include <doctest.h>

/// Absolute-tolerance comparison with value reporting on failure.
#define CHECK_NEAR(a, b, tol)                                                                 \
    do {                                                                                      \
        const double check_near_a = (a);                                                      \
        const double check_near_b = (b);                                                      \
        CHECK_MESSAGE(std::abs(check_near_a - check_near_b) <= (tol),                         \
                      #a " = " << check_near_a << ", " #b " = " << check_near_b);             \
    } while (0)
