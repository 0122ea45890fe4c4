#include "bigrade/polynomial.hpp"

#include <algorithm>
#include <map>

namespace bigrade {

Polynomial::Polynomial(RingDescriptor ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
    std::sort(terms.begin(), terms.end(), [this](const Term& l, const Term& r) {
        return mono_less(r.m, l.m, ring_);
    });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().m == t.m)
            terms_.back().c = terms_.back().c + t.c;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const Term& t) { return t.c.is_zero(); });
}

Polynomial Polynomial::constant(const RingDescriptor& ring, const Coeff& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(ring)});
    return p;
}

Polynomial Polynomial::monomial(const RingDescriptor& ring, Monomial m,
                                std::optional<Coeff> c) {
    Polynomial p(ring);
    Coeff cc = c.value_or(Coeff::one(ring.field));
    if (!cc.is_zero()) p.terms_.push_back({cc, std::move(m)});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw contract_error("zero polynomial has no leading term");
    return terms_.front();
}

Bidegree Polynomial::bidegree() const {
    if (terms_.empty()) throw contract_error("zero polynomial has no bidegree");
    Bidegree d = terms_.front().m.bidegree();
    for (const auto& t : terms_)
        if (t.m.bidegree() != d)
            throw contract_error("polynomial is not bihomogeneous");
    return d;
}

bool Polynomial::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    Bidegree d = terms_.front().m.bidegree();
    for (const auto& t : terms_)
        if (t.m.bidegree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Ordering ord = compare(terms_[i].m, o.terms_[j].m, ring_);
        if (ord == Ordering::Greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (ord == Ordering::Less) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coeff c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({-t.c, t.m});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Coeff& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.c * c, t.m});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.c, t.m * m});
    return r;
}

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.c * c, t.m * m});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    // Accumulate via repeated merge; fine at the term counts we see.
    Polynomial r(ring_);
    if (terms_.size() > o.terms_.size()) return o * *this;
    for (const auto& t : terms_) r = r + o.times_term(t.c, t.m);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != o.terms_[i].c || !(terms_[i].m == o.terms_[i].m))
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inv());
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty() || !ring_.field.is_rational()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.c.value().get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.c.value().get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_coeff().value() < 0) scale = -scale;
    return scaled(Coeff(scale, ring_.field));
}

std::optional<Polynomial> Polynomial::divided_exact(const Polynomial& d) const {
    check_same_ring(ring_, d.ring_);
    if (d.is_zero()) throw contract_error("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(ring_);
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!d.leading_monomial().divides(lt.m)) return std::nullopt;
        Coeff c = lt.c / d.leading_coeff();
        Monomial q = d.leading_monomial().quotient_of(lt.m);
        quot = quot + Polynomial::monomial(ring_, q, c);
        rem = rem - d.times_term(c, q);
    }
    return quot;
}

bool Polynomial::well_formed() const {
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].c.is_zero()) return false;
        if (i + 1 < terms_.size() &&
            compare(terms_[i].m, terms_[i + 1].m, ring_) != Ordering::Greater)
            return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        std::string c = t.c.str();
        bool neg = !c.empty() && c[0] == '-';
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (neg) c = c.substr(1);
        if (t.m.is_one()) {
            s += c;
        } else {
            if (c != "1") s += c + "*";
            s += t.m.str(ring_);
        }
    }
    return s;
}

} // namespace bigrade
