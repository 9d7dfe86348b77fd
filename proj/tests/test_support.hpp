#pragma once

#include <cmath>

#include "doctest.h"

// |x/ref - 1| <= tol, with a readable failure message.
#define CHECK_REL(x, ref, tol)                                                   \
    do {                                                                         \
        const double x_ = (x);                                                   \
        const double ref_ = (ref);                                               \
        CHECK_MESSAGE(std::abs(x_ / ref_ - 1.0) <= (tol),                        \
                      "value ", x_, " vs reference ", ref_, " (rel ",            \
                      std::abs(x_ / ref_ - 1.0), " > ", (tol), ")");             \
    } while (0)

#define CHECK_ABS(x, ref, tol)                                                   \
    do {                                                                         \
        const double x_ = (x);                                                   \
        const double ref_ = (ref);                                               \
        CHECK_MESSAGE(std::abs(x_ - ref_) <= (tol), "value ", x_,                \
                      " vs reference ", ref_, " (abs ", std::abs(x_ - ref_),     \
                      " > ", (tol), ")");                                        \
    } while (0)
