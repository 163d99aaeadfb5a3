#pragma once

#include <stdexcept>

namespace cvxtrunc {

/// Value of a support function: a finite real or plus infinity. Nonempty
/// closed convex sets never have a support value of minus infinity, so that
/// case is unrepresentable.
class SupportValue {
public:
    static SupportValue finite(double v) { return SupportValue(true, v); }
    static SupportValue plus_infinity() { return SupportValue(false, 0.0); }

    bool is_finite() const { return finite_; }
    double value() const {
        if (!finite_) throw std::logic_error("SupportValue: value() on plus infinity");
        return value_;
    }

private:
    SupportValue(bool finite, double value) : finite_(finite), value_(value) {}
    bool finite_;
    double value_;
};

}  // namespace cvxtrunc
