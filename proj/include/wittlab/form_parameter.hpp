#pragma once

#include <string>

#include "wittlab/integer.hpp"

namespace wittlab {

/// The subgroup Lambda of Z a quadratic refinement takes values modulo.
enum class LambdaSub { zero, even, all };

inline std::string to_string(LambdaSub l) {
    switch (l) {
        case LambdaSub::zero: return "zero";
        case LambdaSub::even: return "even";
        case LambdaSub::all: return "all";
    }
    return "?";
}

/// A form parameter (epsilon, Lambda). Over Z only three combinations exist:
/// (+1, {0}), (-1, 2Z), (-1, Z); the constructor rejects everything else.
class FormParameter {
  public:
    FormParameter(int epsilon, LambdaSub lambda) : epsilon_(epsilon), lambda_(lambda) {
        const bool ok = (epsilon == 1 && lambda == LambdaSub::zero) ||
                        (epsilon == -1 && lambda == LambdaSub::even) ||
                        (epsilon == -1 && lambda == LambdaSub::all);
        if (!ok) throw input_error("form parameter must be (+1,{0}), (-1,2Z) or (-1,Z)");
    }

    static FormParameter symmetric_zero() { return {+1, LambdaSub::zero}; }
    static FormParameter skew_even() { return {-1, LambdaSub::even}; }
    static FormParameter skew_all() { return {-1, LambdaSub::all}; }

    int epsilon() const { return epsilon_; }
    LambdaSub lambda_sub() const { return lambda_; }

    bool operator==(const FormParameter& o) const {
        return epsilon_ == o.epsilon_ && lambda_ == o.lambda_;
    }
    bool operator!=(const FormParameter& o) const { return !(*this == o); }

    bool lambda_contains(const Int& a) const {
        switch (lambda_) {
            case LambdaSub::zero: return a == 0;
            case LambdaSub::even: return a % 2 == 0;
            case LambdaSub::all: return true;
        }
        return false;
    }

  private:
    int epsilon_;
    LambdaSub lambda_;
};

/// An element of Z/Lambda: a full integer for Lambda={0}, a bit for
/// Lambda=2Z, and no information at all for Lambda=Z.
class MuValue {
  public:
    MuValue() : lambda_(LambdaSub::all), value_(0) {}
    MuValue(LambdaSub lambda, const Int& raw) : lambda_(lambda), value_(reduce(lambda, raw)) {}

    static MuValue zero(LambdaSub lambda) { return MuValue(lambda, 0); }

    LambdaSub lambda_sub() const { return lambda_; }
    const Int& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    MuValue operator+(const MuValue& o) const {
        require_same(o);
        return MuValue(lambda_, value_ + o.value_);
    }
    MuValue operator-(const MuValue& o) const {
        require_same(o);
        return MuValue(lambda_, value_ - o.value_);
    }
    /// Scaling by an integer (group scaling in Z/Lambda, not the quadratic a^2 rule).
    MuValue scaled(const Int& a) const { return MuValue(lambda_, value_ * a); }

    bool operator==(const MuValue& o) const {
        return lambda_ == o.lambda_ && value_ == o.value_;
    }
    bool operator!=(const MuValue& o) const { return !(*this == o); }

    static Int reduce(LambdaSub lambda, const Int& raw) {
        switch (lambda) {
            case LambdaSub::zero: return raw;
            case LambdaSub::even: return ((raw % 2) + 2) % 2;
            case LambdaSub::all: return 0;
        }
        return raw;
    }

  private:
    void require_same(const MuValue& o) const {
        if (lambda_ != o.lambda_) throw input_error("mu values over different Lambda");
    }

    LambdaSub lambda_;
    Int value_;
};

}  // namespace wittlab
