#pragma once

// Printed reference data for the flow-shop example and the small examples
// used across the test binaries.

#include "maxplus/matrix.hpp"
#include "maxplus/semimodule.hpp"

namespace fixtures {

inline maxplus::Matrix flowshop_e() {
    return maxplus::Matrix::parse(
        "0 e e e e e e e e e e e e e e; e 0 e e e e e e e e e e e e e; "
        "e e 0 e e e e e e e e e e e e; e e e 0 e e e e e e e e e e e; "
        "e e e e 0 e e e e e e e e e e; e e e e e 0 e e e e e e e e e; "
        "e e e e e e 0 e e e e e e e e; e e e e e e e 0 e e e e e e e; "
        "e e e e e e e e 0 e e e e e e; e e e e e e e e e 0 0 e e e e; "
        "e e e e e e e e e e e 0 0 e e; e e e e e e e e e e e e e 0 0");
}

inline maxplus::Matrix flowshop_a() {
    return maxplus::Matrix::parse(
        "e e 4 e e e 2 e e e e e e e e; e e e e e e e 3 e 1 7 e e e e; "
        "e 5 e e e e e e 1 e e e e e e; 4 e e e e 3 e e e e e e e e e; "
        "e e e e e e e e e e e 3 5 1 3; e e 5 e 4 e e e e e e e e e e; "
        "e e e 4 e e e e 3 e e e e e e; e e e e 3 e 5 e e e e e e e e; "
        "e e e e e 2 e 4 e e e e e e e; e e 4 e e e 2 e e e e e e e e; "
        "e e 4 e e e 2 e e e e e e e e; e e e e e e e 3 e 1 7 e e e e; "
        "e e e e e e e 3 e 1 7 e e e e; 4 e e e e 3 e e e e e e e e e; "
        "4 e e e e 3 e e e e e e e e e");
}

inline maxplus::Matrix flowshop_c() {
    return maxplus::Matrix::parse(
        "e e 0 e e e e e e e e e e e e; e e e e e 0 e e e e e e e e e; "
        "e e e e e e e 0 e e e e e e e");
}

inline maxplus::Matrix flowshop_f() {
    return maxplus::Matrix::parse(
        "0 e e e e e e e e e e e e e e; e e e 0 e e e e e e e e e e e; "
        "e e e e e e 0 e e e e e e e e; e e e e e e e e 0 e e e e e e; "
        "e e e e e e e e e 0 0 e e e e; e e e e e e e e e e e e e 0 0");
}

inline maxplus::Matrix flowshop_u() {
    return maxplus::Matrix::parse(
        "e e 2 e e e; 4 e e e e e; e 4 e 3 e e; e e e e e e; e e 2 e e e; 4 e e e e e");
}

inline maxplus::Matrix flowshop_v() {
    return maxplus::Matrix::parse("4 e e; e 3 e; e e e; e 2 4; 4 e e; e 3 e");
}

}  // namespace fixtures
