#include "maxplus/scalar.hpp"

namespace maxplus {

std::string Scalar::to_string() const {
    if (is_eps()) return "e";
    if (is_top()) return "T";
    return std::to_string(raw_);
}

Scalar residual(Scalar a, Scalar b) {
    if (a.is_eps()) return Scalar::top();
    if (b.is_top()) return Scalar::top();
    if (a.is_top() || b.is_eps()) return Scalar::eps();
    return Scalar::finite(b.value() - a.value());
}

Scalar negate(Scalar a) {
    if (a.is_eps()) return Scalar::top();
    if (a.is_top()) return Scalar::eps();
    return Scalar::finite(-a.value());
}

}  // namespace maxplus
