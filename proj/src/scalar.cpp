#include "freedist/scalar.hpp"

#include "freedist/errors.hpp"

namespace freedist {

ExactScalar ExactScalar::rational(long num, long den)
{
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
}

int ExactScalar::sign() const
{
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with 2 b^2.
    mpq_class lhs = a_ * a_;
    mpq_class rhs = 2 * b_ * b_;
    return lhs > rhs ? sa : sb;
}

ExactScalar ExactScalar::inverse() const
{
    if (is_zero()) throw DivisionByZero();
    // Norm a^2 - 2b^2 vanishes only at zero since sqrt2 is irrational.
    mpq_class norm = a_ * a_ - 2 * b_ * b_;
    return ExactScalar(a_ / norm, -b_ / norm);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o)
{
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o)
{
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string ExactScalar::to_string() const
{
    if (sgn(b_) == 0) return a_.get_str();
    std::string root;
    if (b_ == 1)
        root = "sqrt2";
    else if (b_ == -1)
        root = "-sqrt2";
    else
        root = b_.get_str() + "*sqrt2";
    if (sgn(a_) == 0) return root;
    std::string s = "(" + a_.get_str();
    if (sgn(b_) < 0)
        s += " - " + (b_ == -1 ? std::string("sqrt2") : mpq_class(-b_).get_str() + "*sqrt2");
    else
        s += " + " + root;
    return s + ")";
}

}  // namespace freedist
