// Compares the serial polynomial-product kernel against the OpenMP one on
// the expansion workloads the verifier leans on.

#include <chrono>
#include <functional>
#include <iostream>

#include "fpl/poly.hpp"

using namespace fpl;

namespace {

double time_ms(const std::function<Poly()>& f, Poly& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_case(const std::string& name, const Poly& a, const Poly& b) {
    Poly rs, rp;
    double ts = time_ms([&] { return mul_serial(a, b); }, rs);
    double tp = time_ms([&] { return mul_omp(a, b); }, rp);
    std::cout << name << ": |a|=" << a.size() << " |b|=" << b.size() << " -> " << rs.size()
              << " terms; serial " << ts << " ms, omp " << tp << " ms, speedup "
              << (tp > 0 ? ts / tp : 0.0) << (rs == rp ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main() {
    for (uint32_t p : {5u, 7u, 11u}) {
        RingPtr r = Ring::bei(p, 3);
        Poly tri = mul(mul(edge_binomial(r, 1, 2), edge_binomial(r, 2, 3)), edge_binomial(r, 1, 3));
        Poly half = pow(tri, (p - 1) / 2);
        bench_case("triangle p=" + std::to_string(p), half, pow(tri, p - 1 - (p - 1) / 2));
    }
    {
        RingPtr r = Ring::bei(7, 6);
        Poly f = edge_binomial(r, 1, 2);
        for (int i = 2; i <= 5; ++i) f = mul(f, edge_binomial(r, i, i + 1));
        Poly g = pow(f, 2);
        bench_case("path chain p=7", g, g);
    }
    return 0;
}
