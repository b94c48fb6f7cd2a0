#pragma once

#include <gmpxx.h>

#include <string>

namespace freedist {

// Exact element a + b*sqrt(2) of Q(sqrt2).
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactScalar(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b))
    {
        a_.canonicalize();
        b_.canonicalize();
    }

    static ExactScalar rational(long num, long den);
    static ExactScalar sqrt2() { return ExactScalar(0, 1); }
    static ExactScalar inv_sqrt2() { return ExactScalar(0, mpq_class(1, 2)); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;

    ExactScalar inverse() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
    ExactScalar operator-() const { return ExactScalar(-a_, -b_); }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    // Grammar-compatible rendering: "3/2", "sqrt2", "-1/2*sqrt2", "(1 + sqrt2)".
    std::string to_string() const;

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

}  // namespace freedist
