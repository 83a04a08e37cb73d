#include "chainwarn/chainring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace chainwarn {

namespace {

// --- small dense polynomials over F_p, used only to pick the modulus ---

using FpPoly = std::vector<u64>;  // coefficients, low degree first, trimmed

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly mod(FpPoly a, const FpPoly& b, u64 p) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        // b is monic, so the quotient digit is just the leading coefficient
        u64 c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            u64 sub = (c * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible_mod_p(const FpPoly& f, u64 p) {
    int deg = int(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        u64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (u64 m = 0; m < count; ++m) {
            FpPoly g(d + 1);
            u64 t = m;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<u64> find_modulus(u64 p, int ell) {
    if (ell == 1) return {0, 1};  // degenerate "x": Z/p^v itself
    u64 count = 1;
    for (int i = 0; i < ell; ++i) count *= p;
    for (u64 m = 0; m < count; ++m) {
        FpPoly f(ell + 1);
        u64 t = m;
        for (int i = 0; i < ell; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[ell] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    // monic irreducibles of every degree exist over F_p
    throw std::logic_error("no irreducible modulus found");
}

u128 mod_coeff(i64 x, u128 m) {
    if (x >= 0) return u128(u64(x)) % m;
    u128 r = u128(u64(-x)) % m;
    return r == 0 ? 0 : m - r;
}

}  // namespace

// --- ChainRing ---

ChainRing::ChainRing(u64 p, int ell, int v, std::vector<u64> modulus)
    : p_(p), ell_(ell), v_(v), modulus_(std::move(modulus)) {
    coeff_mod_ = pow_u128(p, v, u128(1) << 64);
    q_ = u64(pow_u128(p, ell, u128(1) << 63));
    reduction_.resize(ell_);
    for (int i = 0; i < ell_; ++i) {
        u128 r = coeff_mod_ - (u128(modulus_[i]) % coeff_mod_);
        reduction_[i] = u64(r % coeff_mod_);
    }
}

RingPtr ChainRing::make(u64 p, int ell, int v) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    if (ell < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (v < 1) throw std::invalid_argument("length must be >= 1");
    pow_u128(p, v, u128(1) << 64);   // coefficient modulus must fit
    pow_u128(p, ell, u128(1) << 32); // residue field stays enumerable
    return RingPtr(new ChainRing(p, ell, v, find_modulus(p, ell)));
}

RingPtr make_chain_ring(u64 p, int ell, int v) { return ChainRing::make(p, ell, v); }

u128 ChainRing::cardinality() const {
    u128 c = 1;
    for (int i = 0; i < ell_; ++i) c *= coeff_mod_;
    return c;
}

RingElement ChainRing::zero() const {
    return RingElement(shared_from_this(), std::vector<u64>(ell_, 0));
}

RingElement ChainRing::one() const { return from_int(1); }

RingElement ChainRing::from_int(i64 n) const {
    std::vector<u64> c(ell_, 0);
    c[0] = u64(mod_coeff(n, coeff_mod_));
    return RingElement(shared_from_this(), std::move(c));
}

RingElement ChainRing::element(const std::vector<i64>& coeffs) const {
    if (int(coeffs.size()) > ell_)
        throw std::invalid_argument("coefficient vector longer than extension degree");
    std::vector<u64> c(ell_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = u64(mod_coeff(coeffs[i], coeff_mod_));
    return RingElement(shared_from_this(), std::move(c));
}

RingElement ChainRing::element_at(u128 idx) const {
    std::vector<u64> c(ell_);
    for (int i = 0; i < ell_; ++i) {
        c[i] = u64(idx % coeff_mod_);
        idx /= coeff_mod_;
    }
    if (idx != 0) throw std::invalid_argument("element index out of range");
    return RingElement(shared_from_this(), std::move(c));
}

// --- RingElement ---

RingElement::RingElement(RingPtr ring, std::vector<u64> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    assert(int(coeffs_.size()) == ring_->ell());
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

namespace {
const ChainRing& common_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring() || !b.ring()) throw std::invalid_argument("uninitialized ring element");
    if (!a.ring()->same_ring(*b.ring()))
        throw std::invalid_argument("ring elements from different rings");
    return *a.ring();
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    const ChainRing& r = common_ring(*this, o);
    std::vector<u64> c(r.ell());
    for (int i = 0; i < r.ell(); ++i)
        c[i] = u64((u128(coeffs_[i]) + o.coeffs_[i]) % r.coeff_modulus());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const {
    const ChainRing& r = common_ring(*this, o);
    std::vector<u64> c(r.ell());
    for (int i = 0; i < r.ell(); ++i) {
        u128 d = u128(coeffs_[i]) + r.coeff_modulus() - o.coeffs_[i];
        c[i] = u64(d % r.coeff_modulus());
    }
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-() const {
    return ring_->zero() - *this;
}

RingElement RingElement::operator*(const RingElement& o) const {
    const ChainRing& r = common_ring(*this, o);
    const int ell = r.ell();
    const u128 m = r.coeff_modulus();
    if (ell == 1) {
        u128 prod = (u128(coeffs_[0]) * o.coeffs_[0]) % m;
        return RingElement(ring_, {u64(prod)});
    }
    // schoolbook convolution, then fold x^(ell+j) down via the modulus
    std::vector<u128> acc(2 * ell - 1, 0);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            acc[i + j] = (acc[i + j] + u128(coeffs_[i]) * o.coeffs_[j]) % m;
    const std::vector<u64>& red = ring_->reduction_;
    for (int k = 2 * ell - 2; k >= ell; --k) {
        u128 c = acc[k];
        if (c == 0) continue;
        acc[k] = 0;
        for (int i = 0; i < ell; ++i)
            acc[k - ell + i] = (acc[k - ell + i] + c * red[i]) % m;
    }
    std::vector<u64> out(ell);
    for (int i = 0; i < ell; ++i) out[i] = u64(acc[i]);
    return RingElement(ring_, std::move(out));
}

bool RingElement::operator==(const RingElement& o) const {
    common_ring(*this, o);
    return coeffs_ == o.coeffs_;
}

bool RingElement::operator<(const RingElement& o) const {
    common_ring(*this, o);
    return coeffs_ < o.coeffs_;
}

std::string RingElement::str() const {
    if (ring_->ell() == 1) return std::to_string(coeffs_[0]);
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s + "]";
}

int pi_valuation(const RingElement& x) {
    const ChainRing& r = *x.ring();
    int v = r.length();
    int best = v;
    for (u64 c : x.coeffs()) {
        if (c == 0) continue;
        int ord = 0;
        while (ord < best && c % r.p() == 0) {
            c /= r.p();
            ++ord;
        }
        best = std::min(best, ord);
        if (best == 0) break;
    }
    return best;
}

std::vector<RingElement> coset_representatives(const RingPtr& ring, int a) {
    if (a < 1 || a > ring->length())
        throw std::invalid_argument("coset exponent out of [1, length]");
    u128 digit = pow_u128(ring->p(), a, u128(1) << 64);
    u128 total = 1;
    for (int i = 0; i < ring->ell(); ++i) {
        if (total > (u128(1) << 24))
            throw BudgetError("coset enumeration too large", u128_str(total));
        total *= digit;
    }
    if (total > (u128(1) << 24))
        throw BudgetError("coset enumeration too large", u128_str(total));
    std::vector<RingElement> out;
    out.reserve(size_t(total));
    for (u128 idx = 0; idx < total; ++idx) {
        std::vector<u64> c(ring->ell());
        u128 t = idx;
        for (int i = 0; i < ring->ell(); ++i) {
            c[i] = u64(t % digit);
            t /= digit;
        }
        out.emplace_back(ring, std::move(c));
    }
    return out;
}

std::vector<RingElement> all_elements(const RingPtr& ring) {
    return coset_representatives(ring, ring->length());
}

RingElement lift_element(const RingPtr& target, const RingElement& x) {
    const ChainRing& s = *x.ring();
    if (target->p() != s.p() || target->ell() != s.ell())
        throw std::invalid_argument("lift requires same (p, ell)");
    if (target->length() < s.length())
        throw std::invalid_argument("lift target must not be shorter");
    return RingElement(target, x.coeffs());
}

RingElement reduce_element(const RingPtr& target, const RingElement& x) {
    const ChainRing& s = *x.ring();
    if (target->p() != s.p() || target->ell() != s.ell())
        throw std::invalid_argument("reduction requires same (p, ell)");
    if (target->length() > s.length())
        throw std::invalid_argument("reduction target must not be longer");
    std::vector<u64> c(x.coeffs());
    for (u64& ci : c) ci = u64(u128(ci) % target->coeff_modulus());
    return RingElement(target, std::move(c));
}

SubsetSpec::SubsetSpec(std::vector<RingElement> elems) : elements(std::move(elems)) {
    if (elements.empty()) throw std::invalid_argument("subset must be nonempty");
    std::set<std::vector<u64>> seen;
    for (const auto& e : elements) {
        common_ring(e, elements.front());
        if (!seen.insert(e.coeffs()).second)
            throw std::invalid_argument("duplicate element in subset");
    }
}

bool check_condition(const SubsetSpec& s, Condition) {
    // unit <=> non-zero-divisor in a finite chain ring, so (F) and (D)
    // are decided identically
    for (size_t i = 0; i < s.elements.size(); ++i)
        for (size_t j = i + 1; j < s.elements.size(); ++j)
            if (pi_valuation(s.elements[i] - s.elements[j]) != 0) return false;
    return true;
}

}  // namespace chainwarn
