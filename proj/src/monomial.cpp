#include "bigrade/monomial.hpp"

#include <algorithm>

namespace bigrade {

Monomial::Monomial(std::vector<int> alpha, std::vector<int> beta, int te)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), t_(te) {
    for (int e : alpha_)
        if (e < 0) throw contract_error("negative exponent");
    for (int e : beta_)
        if (e < 0) throw contract_error("negative exponent");
    if (t_ < 0) throw contract_error("negative exponent");
}

Monomial Monomial::one(const RingDescriptor& ring) {
    return Monomial(std::vector<int>(ring.nx, 0), std::vector<int>(ring.ny, 0));
}

Monomial Monomial::xvar(const RingDescriptor& ring, int i) {
    Monomial m = one(ring);
    m.alpha_.at(i) = 1;
    return m;
}

Monomial Monomial::yvar(const RingDescriptor& ring, int j) {
    Monomial m = one(ring);
    m.beta_.at(j) = 1;
    return m;
}

Monomial Monomial::tvar(const RingDescriptor& ring) {
    if (!ring.aux_var) throw contract_error("ring has no elimination variable");
    Monomial m = one(ring);
    m.t_ = 1;
    return m;
}

bool Monomial::is_one() const {
    if (t_ != 0) return false;
    auto zero = [](int e) { return e == 0; };
    return std::all_of(alpha_.begin(), alpha_.end(), zero) &&
           std::all_of(beta_.begin(), beta_.end(), zero);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < r.alpha_.size(); ++i) r.alpha_[i] += o.alpha_[i];
    for (size_t j = 0; j < r.beta_.size(); ++j) r.beta_[j] += o.beta_[j];
    r.t_ += o.t_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (t_ > o.t_) return false;
    for (size_t i = 0; i < alpha_.size(); ++i)
        if (alpha_[i] > o.alpha_[i]) return false;
    for (size_t j = 0; j < beta_.size(); ++j)
        if (beta_[j] > o.beta_[j]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    if (!divides(o)) throw contract_error("monomial quotient is not exact");
    Monomial r = o;
    for (size_t i = 0; i < alpha_.size(); ++i) r.alpha_[i] -= alpha_[i];
    for (size_t j = 0; j < beta_.size(); ++j) r.beta_[j] -= beta_[j];
    r.t_ -= t_;
    return r;
}

Monomial lcm(const Monomial& l, const Monomial& r) {
    Monomial m = l;
    for (size_t i = 0; i < m.alpha_.size(); ++i)
        m.alpha_[i] = std::max(m.alpha_[i], r.alpha_[i]);
    for (size_t j = 0; j < m.beta_.size(); ++j)
        m.beta_[j] = std::max(m.beta_[j], r.beta_[j]);
    m.t_ = std::max(m.t_, r.t_);
    return m;
}

Monomial gcd(const Monomial& l, const Monomial& r) {
    Monomial m = l;
    for (size_t i = 0; i < m.alpha_.size(); ++i)
        m.alpha_[i] = std::min(m.alpha_[i], r.alpha_[i]);
    for (size_t j = 0; j < m.beta_.size(); ++j)
        m.beta_[j] = std::min(m.beta_[j], r.beta_[j]);
    m.t_ = std::min(m.t_, r.t_);
    return m;
}

Ordering compare(const Monomial& m1, const Monomial& m2, const RingDescriptor& ring) {
    if ((int)m1.alpha().size() != ring.nx || (int)m2.alpha().size() != ring.nx ||
        (int)m1.beta().size() != ring.ny || (int)m2.beta().size() != ring.ny)
        throw contract_error("monomial does not belong to ring");
    if (!ring.aux_var && (m1.texp() != 0 || m2.texp() != 0))
        throw contract_error("monomial does not belong to ring");

    // The elimination variable outranks everything else.
    if (m1.texp() != m2.texp())
        return m1.texp() < m2.texp() ? Ordering::Less : Ordering::Greater;

    int d1 = m1.xdeg() + m1.ydeg();
    int d2 = m2.xdeg() + m2.ydeg();
    if (d1 != d2) return d1 < d2 ? Ordering::Less : Ordering::Greater;

    // Leftmost nonzero entry of exp(m2)-exp(m1), variables listed from
    // the smallest block upward: negative means m1 > m2.
    auto scan = [](const std::vector<int>& e1, const std::vector<int>& e2) -> int {
        for (size_t i = 0; i < e1.size(); ++i) {
            int d = e2[i] - e1[i];
            if (d != 0) return d;
        }
        return 0;
    };
    int d;
    if (ring.block_order == BlockOrder::XBlockLow) {
        d = scan(m1.alpha(), m2.alpha());
        if (d == 0) d = scan(m1.beta(), m2.beta());
    } else {
        d = scan(m1.beta(), m2.beta());
        if (d == 0) d = scan(m1.alpha(), m2.alpha());
    }
    if (d == 0) return Ordering::Equal;
    return d < 0 ? Ordering::Less : Ordering::Greater;
}

namespace {

void enumerate_exponents(int nvars, int deg, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == nvars - 1) {
        cur.push_back(deg);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exponents(nvars, deg - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> exponents_of_degree(int nvars, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_exponents(nvars, deg, cur, out);
    return out;
}

} // namespace

std::vector<Monomial> monomials_of_bidegree(const RingDescriptor& ring, Bidegree d) {
    std::vector<Monomial> out;
    if (d.a < 0 || d.b < 0) return out;
    auto xs = exponents_of_degree(ring.nx, d.a);
    auto ys = exponents_of_degree(ring.ny, d.b);
    out.reserve(xs.size() * ys.size());
    for (const auto& a : xs)
        for (const auto& b : ys) out.emplace_back(a, b);
    return out;
}

long monomial_count(const RingDescriptor& ring, Bidegree d) {
    if (d.a < 0 || d.b < 0) return 0;
    auto binom = [](long top, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
        return r;
    };
    return binom(d.a + ring.nx - 1, ring.nx - 1) * binom(d.b + ring.ny - 1, ring.ny - 1);
}

std::string Monomial::str(const RingDescriptor& ring) const {
    std::string s;
    auto emit = [&s](const std::string& v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    if (ring.aux_var) emit("t", t_);
    for (int i = 0; i < ring.nx; ++i) emit("x" + std::to_string(i), alpha_[i]);
    for (int j = 0; j < ring.ny; ++j) emit("y" + std::to_string(j), beta_[j]);
    return s.empty() ? "1" : s;
}

} // namespace bigrade
