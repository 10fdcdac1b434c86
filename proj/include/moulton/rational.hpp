#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "moulton/errors.hpp"

namespace moulton {

/// Arbitrary-precision rational, always in canonical form: lowest terms,
/// positive denominator. Equality is plain value equality. Division by zero
/// and zero denominators raise GeometryError instead of aborting.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw GeometryError("zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw GeometryError("zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    /// Accepts "n" or "n/d" with optional sign; anything else is a ParseError.
    static Rat parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    /// Always renders as "n/d", e.g. "-4/3", "5/1".
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    /// Decimal rendering with exactly `digits` fractional digits, truncated
    /// toward zero. Used only for deterministic drawing output.
    std::string decimal(int digits) const;

    double approx() const { return q_.get_d(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw GeometryError("division by zero");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_; // canonical: arithmetic results of canonical operands stay canonical
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Optional rational used for open interval bounds; empty means unbounded.
using Bound = std::optional<Rat>;

} // namespace moulton
