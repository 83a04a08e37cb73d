#include "chainwarn/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace chainwarn {

namespace {
void require_same(const MPoly& a, const MPoly& b) {
    if (!a.ring()->same_ring(*b.ring()) || a.nvars() != b.nvars())
        throw std::invalid_argument("polynomials from different rings or variable counts");
}
}  // namespace

MPoly::MPoly(RingPtr ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars_ < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

MPoly MPoly::constant(RingPtr ring, int nvars, const RingElement& c) {
    MPoly f(std::move(ring), nvars);
    f.add_term(ExpVec(nvars, 0), c);
    return f;
}

MPoly MPoly::monomial(RingPtr ring, int nvars, const RingElement& c, int var, unsigned exp) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
    MPoly f(std::move(ring), nvars);
    ExpVec e(nvars, 0);
    e[var] = exp;
    f.add_term(e, c);
    return f;
}

void MPoly::add_term(const ExpVec& exps, const RingElement& c) {
    if (int(exps.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    if (!ring_->same_ring(*c.ring()))
        throw std::invalid_argument("coefficient from a different ring");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exps, c);
        return;
    }
    RingElement sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

std::optional<i64> MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    i64 best = 0;
    for (const auto& [e, c] : terms_) {
        i64 d = std::accumulate(e.begin(), e.end(), i64(0));
        best = std::max(best, d);
    }
    return best;
}

RingElement MPoly::eval(const std::vector<RingElement>& point) const {
    if (int(point.size()) != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
    for (const auto& x : point)
        if (!ring_->same_ring(*x.ring()))
            throw std::invalid_argument("evaluation point from a different ring");
    RingElement acc = ring_->zero();
    for (const auto& [e, c] : terms_) {
        RingElement term = c;
        for (int i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
        }
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::operator+(const MPoly& o) const {
    require_same(*this, o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    require_same(*this, o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    require_same(*this, o);
    MPoly out(ring_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool MPoly::operator==(const MPoly& o) const {
    require_same(*this, o);
    return terms_ == o.terms_;
}

MPoly MPoly::convert(const RingPtr& target) const {
    MPoly out(target, nvars_);
    bool lifting = target->length() >= ring_->length();
    for (const auto& [e, c] : terms_)
        out.add_term(e, lifting ? lift_element(target, c) : reduce_element(target, c));
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            s += "*t" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

MPoly poly_product_expand(const RingPtr& ring, int nvars, const std::vector<MPoly>& factors) {
    MPoly acc = MPoly::constant(ring, nvars, ring->one());
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

}  // namespace chainwarn
