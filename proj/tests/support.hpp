#pragma once

#include <doctest.h>

#include "rwind/error.hpp"

// Expects expr to throw rwind::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)                     \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const rwind::Error& e_) {                            \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());     \
    }                                                             \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);      \
  } while (0)
