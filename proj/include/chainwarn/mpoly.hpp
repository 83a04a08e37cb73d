#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainwarn/chainring.hpp"

namespace chainwarn {

/// Sparse multivariate polynomial over a chain ring. Terms are keyed by
/// exponent vector (length nvars); zero coefficients are never stored,
/// so equal polynomials have identical term maps.
class MPoly {
public:
    using ExpVec = std::vector<unsigned>;
    using TermMap = std::map<ExpVec, RingElement>;

    MPoly(RingPtr ring, int nvars);
    static MPoly constant(RingPtr ring, int nvars, const RingElement& c);
    /// Monomial c * t_(var)^exp (var is 0-based).
    static MPoly monomial(RingPtr ring, int nvars, const RingElement& c, int var, unsigned exp = 1);

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * t^exps into the polynomial (canonicalizing away zeros).
    void add_term(const ExpVec& exps, const RingElement& c);

    /// Max exponent sum over stored terms; nullopt for the zero
    /// polynomial. Degree is over the ring: a term whose coefficient is
    /// a zero divisor still counts.
    std::optional<i64> total_degree() const;

    RingElement eval(const std::vector<RingElement>& point) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const;

    /// Same polynomial with canonically lifted/reduced coefficients in a
    /// ring of different length (same p, ell).
    MPoly convert(const RingPtr& target) const;

    std::string str() const;

private:
    RingPtr ring_;
    int nvars_ = 0;
    TermMap terms_;
};

/// Fully expanded product of the factors; the empty product is the
/// constant 1. Degree may drop below the sum of factor degrees when
/// leading coefficients multiply to zero.
MPoly poly_product_expand(const RingPtr& ring, int nvars, const std::vector<MPoly>& factors);

}  // namespace chainwarn
