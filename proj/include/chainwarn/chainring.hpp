#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chainwarn/util.hpp"

namespace chainwarn {

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Element of a finite chain ring GR(p^v, ell), stored as its canonical
/// coefficient vector: ell entries in [0, p^v), low degree first.
/// Elements carry their owner ring; mixing rings is a hard error.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, std::vector<u64> coeffs);

    const RingPtr& ring() const { return ring_; }
    const std::vector<u64>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    /// Lexicographic on coefficient vectors; total order within one ring.
    bool operator<(const RingElement& o) const;

    std::string str() const;  // "[c0,c1,...]" (bare integer when ell = 1)

private:
    RingPtr ring_;
    std::vector<u64> coeffs_;
};

/// The Galois ring GR(p^v, ell) = Z/p^v[x]/(f) with f monic of degree ell
/// and irreducible mod p: a finite chain ring with maximal ideal (p),
/// length v and residue field F_q, q = p^ell. Immutable after construction.
class ChainRing : public std::enable_shared_from_this<ChainRing> {
public:
    u64 p() const { return p_; }
    int ell() const { return ell_; }
    int length() const { return v_; }          // nilpotency index of (p)
    u128 coeff_modulus() const { return coeff_mod_; }  // p^v
    u64 residue_size() const { return q_; }    // q = p^ell
    u128 cardinality() const;                  // p^(v*ell)
    /// Monic modulus polynomial, coefficients in [0, p), degree ell
    /// (constant term first, leading 1 last). For ell = 1 this is "x".
    const std::vector<u64>& modulus_poly() const { return modulus_; }

    bool same_ring(const ChainRing& o) const {
        return p_ == o.p_ && ell_ == o.ell_ && v_ == o.v_;
    }

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(i64 n) const;
    /// Builds an element from arbitrary integer coefficients (reduced
    /// mod p^v). Length must be <= ell; missing entries are zero.
    RingElement element(const std::vector<i64>& coeffs) const;
    /// Element number `idx` in counter order: coefficient c0 varies
    /// fastest, each digit in [0, p^v). idx < cardinality().
    RingElement element_at(u128 idx) const;

    static RingPtr make(u64 p, int ell, int v);

private:
    ChainRing(u64 p, int ell, int v, std::vector<u64> modulus);
    friend class RingElement;

    u64 p_ = 0;
    int ell_ = 0;
    int v_ = 0;
    u64 q_ = 0;
    u128 coeff_mod_ = 0;
    std::vector<u64> modulus_;
    std::vector<u64> reduction_;  // x^ell = sum reduction_[i] x^i  (mod p^v)
};

/// Validated construction; p must be prime, ell, v >= 1, and p^v <= 2^64.
/// The modulus is the monic degree-ell lift whose non-leading coefficient
/// vector, read as the base-p number sum a_i p^i, is minimal among
/// irreducibles mod p.
RingPtr make_chain_ring(u64 p, int ell, int v);

/// pi-adic valuation: the unique i with x in (p^i) \ (p^(i+1)), and
/// ord(0) = v (the length) by convention.
int pi_valuation(const RingElement& x);

inline bool is_unit(const RingElement& x) { return pi_valuation(x) == 0; }

/// Canonical coset representatives for (p^a): all coefficient vectors
/// with entries in [0, p^a), in counter order. Exactly q^a elements.
std::vector<RingElement> coset_representatives(const RingPtr& ring, int a);

/// All p^(v*ell) elements in counter order (throws BudgetError when the
/// ring is too large to enumerate).
std::vector<RingElement> all_elements(const RingPtr& ring);

/// Same-(p,ell) ring with length target->length() >= x's; identical
/// canonical coefficients. Used to compute valuations past a short
/// ring's truncation point.
RingElement lift_element(const RingPtr& target, const RingElement& x);

/// Reduce to a shorter ring of the same (p, ell): coefficients mod p^v'.
RingElement reduce_element(const RingPtr& target, const RingElement& x);

/// Finite nonempty set of ring elements, duplicates rejected.
struct SubsetSpec {
    std::vector<RingElement> elements;
    explicit SubsetSpec(std::vector<RingElement> elems);
    size_t size() const { return elements.size(); }
};

enum class Condition { F, D };

/// Condition (F): all pairwise differences of distinct elements are
/// units; Condition (D): all are non-zero-divisors. In a finite chain
/// ring the two agree (unit <=> valuation 0 <=> non-zero-divisor).
bool check_condition(const SubsetSpec& s, Condition kind);

}  // namespace chainwarn
