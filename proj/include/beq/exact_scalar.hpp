#pragma once

#include "beq/errors.hpp"
#include "beq/rational.hpp"

namespace beq {

/// Element of Q or of the quadratic extension Q(sqrt(n)): rat + rad * sqrt(radicand).
/// radicand == 0 means pure rational. Values with different nonzero radicands
/// never mix; that is a hard error, not a coercion.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(int v) : rat_(v) {}                      // NOLINT(google-explicit-constructor)
    ExactScalar(const Rat& v) : rat_(v) {}               // NOLINT(google-explicit-constructor)
    ExactScalar(Rat rat, Rat rad, unsigned radicand) : rat_(std::move(rat)), rad_(std::move(rad)), radicand_(radicand) {
        normalize();
    }

    static ExactScalar sqrt_of(unsigned n) { return ExactScalar(0, 1, n); }

    const Rat& rational_part() const { return rat_; }
    const Rat& radical_part() const { return rad_; }
    unsigned radicand() const { return radicand_; }

    bool is_rational() const { return radicand_ == 0; }
    bool is_zero() const { return rat_ == 0 && rad_ == 0; }

    ExactScalar operator-() const { return ExactScalar(-rat_, -rad_, radicand_); }

    ExactScalar& operator+=(const ExactScalar& o) {
        unsigned n = merge_radicand(o);
        rat_ += o.rat_;
        rad_ += o.rad_;
        radicand_ = n;
        normalize();
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }

    ExactScalar& operator*=(const ExactScalar& o) {
        unsigned n = merge_radicand(o);
        Rat rat = rat_ * o.rat_ + rad_ * o.rad_ * Rat(n);
        Rat rad = rat_ * o.rad_ + rad_ * o.rat_;
        rat_ = std::move(rat);
        rad_ = std::move(rad);
        radicand_ = n;
        normalize();
        return *this;
    }

    ExactScalar conjugate() const { return ExactScalar(rat_, -rad_, radicand_); }

    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw SingularError("division by zero ExactScalar");
        if (o.rad_ == 0) {
            rat_ /= o.rat_;
            rad_ /= o.rat_;
            return *this;
        }
        // 1/(a+b*sqrt(n)) = (a-b*sqrt(n)) / (a^2 - n*b^2); the norm is rational.
        unsigned n = merge_radicand(o);
        (void)n;
        Rat norm = o.rat_ * o.rat_ - Rat(o.radicand_) * o.rad_ * o.rad_;
        if (norm == 0) throw SingularError("division by zero norm in Q(sqrt(n))");
        *this *= o.conjugate();
        rat_ /= norm;
        rad_ /= norm;
        normalize();
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.rat_ == b.rat_ && a.rad_ == b.rad_ &&
               (a.rad_ == 0 || a.radicand_ == b.radicand_);
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// The rational value; throws if a radical survives.
    Rat as_rational() const {
        if (rad_ != 0) throw RadicandMismatchError("ExactScalar is not rational");
        return rat_;
    }

    std::string str() const {
        if (rad_ == 0) return rat_to_string(rat_);
        return rat_to_string(rat_) + " + " + rat_to_string(rad_) + "*sqrt(" + std::to_string(radicand_) + ")";
    }

private:
    void normalize() {
        if (radicand_ == 1) {  // sqrt(1) folds into the rational part
            rat_ += rad_;
            rad_ = 0;
        }
        if (rad_ == 0) radicand_ = 0;
        if (radicand_ == 0 && rad_ != 0)
            throw RadicandMismatchError("radical part without radicand");
    }

    unsigned merge_radicand(const ExactScalar& o) const {
        if (radicand_ == o.radicand_ || o.radicand_ == 0) return radicand_;
        if (radicand_ == 0) return o.radicand_;
        throw RadicandMismatchError("mixing sqrt(" + std::to_string(radicand_) + ") with sqrt(" +
                                    std::to_string(o.radicand_) + ")");
    }

    Rat rat_ = 0;
    Rat rad_ = 0;
    unsigned radicand_ = 0;
};

} // namespace beq
