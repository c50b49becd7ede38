#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruledres {

/// Exact rational extended with +infinity, the value of 0.
///
/// Infinity absorbs addition and positive scaling and compares greater
/// than every finite value. Combinations without a valuation-theoretic
/// meaning (inf - inf, 0 * inf, negation of inf) throw.
class ExtRat {
public:
    ExtRat() : q_(0), inf_(false) {}
    ExtRat(long n) : q_(n), inf_(false) {}
    ExtRat(long n, long d) : q_(n, d), inf_(false) {
        if (d == 0) throw std::domain_error("ExtRat: zero denominator");
        q_.canonicalize();
    }
    ExtRat(const mpq_class& q) : q_(q), inf_(false) { q_.canonicalize(); }

    static ExtRat inf() {
        ExtRat r;
        r.inf_ = true;
        return r;
    }

    bool is_inf() const { return inf_; }

    const mpq_class& rat() const {
        if (inf_) throw std::domain_error("ExtRat: infinite value has no rational part");
        return q_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return inf();
        return ExtRat(mpq_class(a.q_ + b.q_));
    }

    // a - b: the subtrahend must be finite.
    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) {
        if (b.inf_) throw std::domain_error("ExtRat: cannot subtract infinity");
        if (a.inf_) return inf();
        return ExtRat(mpq_class(a.q_ - b.q_));
    }

    ExtRat operator-() const {
        if (inf_) throw std::domain_error("ExtRat: cannot negate infinity");
        return ExtRat(mpq_class(-q_));
    }

    friend ExtRat operator*(const mpq_class& s, const ExtRat& a) {
        if (a.inf_) {
            if (s <= 0) throw std::domain_error("ExtRat: non-positive multiple of infinity");
            return inf();
        }
        return ExtRat(mpq_class(s * a.q_));
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

    /// "n", "n/d" or "inf".
    std::string str() const;
    static ExtRat parse(const std::string& s);

private:
    mpq_class q_;
    bool inf_;
};

/// Finitely generated (hence cyclic) subgroup of the rationals,
/// stored by its canonical generator g >= 0. g = 0 is the zero group.
class RatGroup {
public:
    RatGroup() : gen_(0) {}
    explicit RatGroup(const mpq_class& g) : gen_(abs(g)) { gen_.canonicalize(); }

    static RatGroup from_generators(const std::vector<ExtRat>& gens);

    bool is_zero() const { return gen_ == 0; }
    const mpq_class& generator() const { return gen_; }

    bool contains(const ExtRat& x) const;

    /// Smallest e >= 1 with e*gamma in the group; the index (G + Z gamma : G).
    long order_mod(const ExtRat& gamma) const;

    /// The group generated by this group together with x.
    RatGroup joined_with(const mpq_class& x) const;

    friend bool operator==(const RatGroup& a, const RatGroup& b) { return a.gen_ == b.gen_; }
    friend bool operator!=(const RatGroup& a, const RatGroup& b) { return !(a == b); }

    std::string str() const;

private:
    mpq_class gen_;
};

}  // namespace ruledres
