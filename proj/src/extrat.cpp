#include "ruledres/extrat.hpp"

namespace ruledres {

std::string ExtRat::str() const {
    if (inf_) return "inf";
    return q_.get_str();
}

ExtRat ExtRat::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "inf" || t == "INF" || t == "+inf") return inf();
    if (t.empty()) throw std::invalid_argument("ExtRat: empty string");
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("ExtRat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("ExtRat: zero denominator in '" + s + "'");
    q.canonicalize();
    return ExtRat(q);
}

// gcd of two non-negative rationals over a common denominator.
static mpq_class rat_gcd(const mpq_class& a, const mpq_class& b) {
    mpz_class num = gcd(a.get_num() * b.get_den(), b.get_num() * a.get_den());
    mpq_class g(num, a.get_den() * b.get_den());
    g.canonicalize();
    return g;
}

RatGroup RatGroup::from_generators(const std::vector<ExtRat>& gens) {
    mpq_class g = 0;
    for (const ExtRat& x : gens) {
        if (x.is_inf())
            throw std::domain_error("RatGroup: infinite generator");
        mpq_class a = abs(x.rat());
        if (a == 0) continue;
        g = (g == 0) ? a : rat_gcd(g, a);
    }
    return RatGroup(g);
}

bool RatGroup::contains(const ExtRat& x) const {
    if (x.is_inf()) throw std::domain_error("RatGroup: membership of infinity is undefined");
    if (gen_ == 0) return x.rat() == 0;
    mpq_class r = x.rat() / gen_;
    return r.get_den() == 1;
}

long RatGroup::order_mod(const ExtRat& gamma) const {
    if (gamma.is_inf()) throw std::domain_error("RatGroup: order of infinity is undefined");
    if (gen_ == 0) {
        if (gamma.rat() == 0) return 1;
        throw std::domain_error("RatGroup: no finite order modulo the zero group");
    }
    mpq_class r = gamma.rat() / gen_;
    // e * r integral iff e is a multiple of den(r).
    if (!r.get_den().fits_slong_p())
        throw std::overflow_error("RatGroup: order does not fit in long");
    return r.get_den().get_si();
}

RatGroup RatGroup::joined_with(const mpq_class& x) const {
    return from_generators({ExtRat(gen_), ExtRat(x)});
}

std::string RatGroup::str() const {
    if (gen_ == 0) return "{0}";
    if (gen_ == 1) return "Z";
    return "(" + gen_.get_str() + ")Z";
}

}  // namespace ruledres
