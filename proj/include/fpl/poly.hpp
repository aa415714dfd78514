#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fpl/modp.hpp"
#include "fpl/monomial.hpp"

// Sparse multivariate polynomials over Z/pZ.
//
// Polynomials store their terms strictly descending under the ring's
// canonical grevlex order; every operation restores that normal form, so
// equality is plain vector comparison. The Groebner engine re-sorts working
// copies under its own active order.

namespace fpl {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
    uint32_t p = 2;
    int nvars = 0;
    std::vector<std::string> names;

    // k[x1..xn, y1..yn]; variable i-1 is x_i, variable n+i-1 is y_i.
    static RingPtr bei(uint32_t p, int n);
    // k[x1..xk]
    static RingPtr generic(uint32_t p, int k);
    static RingPtr with_names(uint32_t p, std::vector<std::string> names);

    // Same ring with one elimination variable "t" prepended as variable 0.
    RingPtr extended() const;

    Order canon() const { return Order::grevlex(nvars); }
    int xvar(int vertex) const { return vertex - 1; }            // 1-based vertex
    int yvar(int vertex) const { return nvars / 2 + vertex - 1; }

    bool compatible(const Ring& o) const { return p == o.p && nvars == o.nvars; }
};

struct Term {
    Monomial m;
    uint32_t c = 0;  // in 1..p-1 when stored
    bool operator==(const Term& o) const = default;
};

class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Term& lead() const { return t_.front(); }
    uint32_t total_degree() const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    std::string str() const;                  // canonical grevlex term order
    std::string str(const Order& ord) const;  // explicit term order

  private:
    RingPtr ring_;
    std::vector<Term> t_;
};

Poly poly_zero(const RingPtr& r);
Poly poly_const(const RingPtr& r, uint32_t c);
Poly poly_mono(const RingPtr& r, const Monomial& m, uint32_t c = 1);
Poly poly_var(const RingPtr& r, int var, unsigned k = 1);
// x_i*y_j - x_j*y_i for 1-based vertices i, j of a binomial-edge ring.
Poly edge_binomial(const RingPtr& r, int i, int j);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, uint32_t c);
Poly mul(const Poly& a, const Poly& b);
Poly mul_serial(const Poly& a, const Poly& b);
Poly mul_omp(const Poly& a, const Poly& b);
Poly mul_mono(const Poly& a, const Monomial& m, uint32_t c = 1);
Poly pow(const Poly& a, unsigned k);
// Divide every term by mono; throws input_error if some term is not divisible.
Poly exact_divide(const Poly& a, const Monomial& mono);
// Remove the terms whose monomial is divisible by mono.
Poly drop_multiples(const Poly& a, const Monomial& mono);
Poly make_monic(const Poly& a);

// Lift into r->extended(); contract back (requires no t in any term).
Poly lift(const Poly& a, const RingPtr& ext);
Poly contract(const Poly& a, const RingPtr& base);

// Parse the display grammar: terms of the form [coeff][*]var[^k][*var[^k]...],
// joined with + or -. Variable names must match the ring's.
Poly parse_poly(const RingPtr& r, const std::string& text);

class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace fpl
