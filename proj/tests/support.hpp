#pragma once

#include "doctest.h"
#include "obstructa/error.hpp"

// Error code thrown by fn, failing the test when nothing is thrown.
template <class Fn>
obstructa::ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const obstructa::Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return obstructa::ErrorCode::ParseError;
}
