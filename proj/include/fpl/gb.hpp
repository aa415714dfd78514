#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpl/poly.hpp"

// Buchberger's algorithm with normal pair selection and Gebauer-Moeller pair
// pruning, plus normal forms and the derived ideal operations (intersection
// via elimination, colon ideals, Frobenius powers).
//
// Effort is metered in S-pair reductions so runs are deterministic; hitting
// the cap raises gb_timeout, which callers surface as a distinct verdict.

namespace fpl {

struct GBStats {
    uint64_t spair_reductions = 0;
    uint64_t pairs_pruned = 0;
    uint64_t basis_additions = 0;
};

struct EffortMeter {
    uint64_t cap = 200'000'000;
    uint64_t used = 0;

    void spend(uint64_t k = 1);
    uint64_t remaining() const { return cap > used ? cap - used : 0; }
};

class gb_timeout : public std::runtime_error {
  public:
    explicit gb_timeout(GBStats s)
        : std::runtime_error("groebner effort budget exceeded"), stats(s) {}
    GBStats stats;
};

class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, Order ord, std::vector<Poly> basis)
        : ring_(std::move(ring)), ord_(ord), basis_(std::move(basis)) {}

    const RingPtr& ring() const { return ring_; }
    const Order& order() const { return ord_; }
    const std::vector<Poly>& basis() const { return basis_; }
    bool is_trivial() const;  // contains 1

  private:
    RingPtr ring_;
    Order ord_;
    std::vector<Poly> basis_;  // reduced, monic, sorted ascending by lead monomial
};

struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Poly> g);  // drops zero generators
    bool is_zero() const { return gens.empty(); }
};

// Reduced Groebner basis, canonical for (ideal, order).
GroebnerBasis buchberger(const Ideal& ideal, const Order& ord, EffortMeter* meter = nullptr,
                         GBStats* stats = nullptr);

// Unique remainder of f modulo gb: no term divisible by a basis lead monomial.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool member(const Poly& f, const GroebnerBasis& gb);
bool member(const Poly& f, const Ideal& ideal, EffortMeter* meter = nullptr);

// I cap J via elimination of t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b, EffortMeter* meter = nullptr);

// I : f and I : J (generator by generator, interreducing between steps).
Ideal quotient(const Ideal& ideal, const Poly& f, EffortMeter* meter = nullptr);
Ideal quotient_ideal(const Ideal& ideal, const Ideal& by, EffortMeter* meter = nullptr);

// Generators f^q; q must be a power of the characteristic.
Ideal frobenius_power(const Ideal& ideal, uint64_t q);

// Containment of f in a monomial ideal: every term divisible by a generator.
// Returns the first violating term when false.
struct MonomialContainment {
    bool contained = false;
    std::optional<Term> violating;
};
MonomialContainment monomial_ideal_contains(const std::vector<Monomial>& gens, const Poly& f);

// Exact division by a polynomial: g = q*f, throws if the remainder is nonzero.
Poly divide_exact(const Poly& g, const Poly& f);

// Krull dimension of R/I from the lead monomials of a Groebner basis
// (largest variable subset meeting no lead monomial support).
int dimension(const GroebnerBasis& gb);

// Minimize + tail-reduce a basis already known to be a Groebner basis.
std::vector<Poly> interreduce(std::vector<Poly> basis, const Order& ord);

}  // namespace fpl
