#include <doctest.h>

#include "tracealg/characters.hpp"
#include "tracealg/formanek.hpp"

using namespace tracealg;

TEST_CASE("partition generation and centralizer orders") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(6, 2).size() == 4); // 6, 51, 42, 33
    CHECK(z_order({3, 1, 1}) == 6);         // 3 * 1^2 * 2!
    CHECK(class_size({2, 1}) == 3);
    Int total = 0;
    for (auto& rho : partitions_of(7)) total += class_size(rho);
    CHECK(total == factorial(7));
}

TEST_CASE("trivial and sign characters") {
    CharCache cache;
    for (int k = 1; k <= 8; ++k) {
        Partition triv{uint8_t(k)};
        Partition sign(size_t(k), 1);
        for (auto& rho : partitions_of(k)) {
            CHECK(cache.value(triv, rho) == 1);
            int even_parts = 0;
            for (auto p : rho)
                if (p % 2 == 0) ++even_parts;
            CHECK(cache.value(sign, rho) == (even_parts % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("first-column orthogonality oracle, weight <= 6") {
    CharCache cache;
    for (int k = 1; k <= 6; ++k) {
        auto parts = partitions_of(k);
        for (auto& lam : parts)
            for (auto& mu : parts) {
                Int s = 0;
                for (auto& rho : parts)
                    s += class_size(rho) * Int(cache.value(lam, rho)) * Int(cache.value(mu, rho));
                CHECK(s == (lam == mu ? factorial(k) : Int(0)));
            }
    }
}

TEST_CASE("row orthogonality up to weight 10") {
    CharCache cache;
    for (int k = 7; k <= 10; ++k) {
        auto parts = partitions_of(k);
        // spot-check a sample of pairs rather than all p(k)^2
        for (size_t i = 0; i < parts.size(); i += 3)
            for (size_t j = i; j < parts.size(); j += 4) {
                Int s = 0;
                for (auto& rho : parts)
                    s += class_size(rho) * Int(cache.value(parts[i], rho)) *
                         Int(cache.value(parts[j], rho));
                CHECK(s == (parts[i] == parts[j] ? factorial(k) : Int(0)));
            }
    }
}

TEST_CASE("kronecker coefficients: small anchors") {
    CharCache cache;
    CHECK(kronecker_coeff({1, 1}, {1, 1}, {2}, cache) == 1);
    CHECK(kronecker_coeff({1, 1}, {1, 1}, {1, 1}, cache) == 0);
    // g(lam, mu, (k)) = delta_{lam,mu}
    for (auto& lam : partitions_of(5))
        for (auto& mu : partitions_of(5))
            CHECK(kronecker_coeff(lam, mu, {5}, cache) == (lam == mu ? 1 : 0));
}

TEST_CASE("kronecker symmetry under permutations, weight <= 8") {
    CharCache cache;
    auto parts = partitions_of(8);
    for (size_t a = 0; a < parts.size(); a += 5)
        for (size_t b = a; b < parts.size(); b += 7)
            for (size_t c = b; c < parts.size(); c += 9) {
                Int g1 = kronecker_coeff(parts[a], parts[b], parts[c], cache);
                CHECK(g1 == kronecker_coeff(parts[b], parts[a], parts[c], cache));
                CHECK(g1 == kronecker_coeff(parts[c], parts[b], parts[a], cache));
                CHECK(g1 == kronecker_coeff(parts[a], parts[c], parts[b], cache));
                CHECK(g1 >= 0);
            }
}

TEST_CASE("dimension bookkeeping: sum g(mu,mu,nu) dim(nu) = dim(mu)^2, weight <= 8") {
    CharCache cache;
    for (int k = 2; k <= 8; k += 2) {
        auto parts = partitions_of(k);
        for (size_t i = 0; i < parts.size(); i += 3) {
            Int lhs = 0;
            for (auto& nu : parts)
                lhs += kronecker_coeff(parts[i], parts[i], nu, cache) * Int(cache.dimension(nu));
            Int d = cache.dimension(parts[i]);
            CHECK(lhs == d * d);
        }
    }
}

TEST_CASE("degree-3 two-row projection anchors") {
    // Coefficient of f_{2,1} in the n=5 degree-3 component is 1; of f_3 is 3.
    auto ex = formanek::pure(5, 3);
    CHECK(ex.by_degree[3].coeffs.at({2, 1}) == 1);
    CHECK(ex.by_degree[3].coeffs.at({3, 0}) == 3);
}

TEST_CASE("pure expansions: small n") {
    // n=1: coefficient of t^k is k+1
    auto e1 = formanek::pure(1, 8);
    for (int k = 0; k <= 8; ++k) CHECK(e1.single.coeff1(k) == k + 1);
    // n=5 single-graded through degree 7
    auto e5 = formanek::pure(5, 7);
    std::vector<long> want{1, 2, 6, 14, 34, 74, 159, 324};
    for (int k = 0; k <= 7; ++k) CHECK(e5.single.coeff1(k) == want[size_t(k)]);
    // bigraded symmetry coeff(a,b) == coeff(b,a)
    for (auto& [key, v] : e5.bigraded.coeffs()) CHECK(e5.bigraded.coeff({key[1], key[0]}) == v);
}

TEST_CASE("mixed expansions: small n") {
    auto e2 = formanek::mixed(2, 4);
    std::vector<long> want{1, 4, 11, 24, 46};
    for (int k = 0; k <= 4; ++k) CHECK(e2.single.coeff1(k) == want[size_t(k)]);
    auto e1 = formanek::mixed(1, 6);
    for (int k = 0; k <= 6; ++k) CHECK(e1.single.coeff1(k) == k + 1);
}

TEST_CASE("limit products") {
    auto [pure_prod, mixed_prod] = formanek::limit_products(8);
    std::vector<long> a{1, 2, 6, 14, 34, 74, 166};
    for (int k = 0; k <= 6; ++k) CHECK(pure_prod.coeff1(k) == a[size_t(k)]);
    CHECK(mixed_prod.coeff1(0) == 1);
    std::vector<long> b{1, 4, 14, 42, 118, 310};
    for (int k = 0; k <= 5; ++k) CHECK(mixed_prod.coeff1(k) == b[size_t(k)]);
}
