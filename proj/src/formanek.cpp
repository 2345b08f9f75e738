#include "tracealg/formanek.hpp"

#include <stdexcept>

namespace tracealg::formanek {

namespace {

// theta_n(rho) = sum over mu |- k, l(mu) <= n, of chi^mu(rho)^2.
std::vector<Int> theta_values(int n, int k, const std::vector<Partition>& rhos, CharCache& cache) {
    std::vector<Int> theta(rhos.size(), Int(0));
    for (const Partition& mu : partitions_of(k, n)) {
        for (size_t r = 0; r < rhos.size(); ++r) {
            Int v = cache.value(mu, rhos[r]);
            theta[r] += v * v;
        }
    }
    return theta;
}

SchurExpansion project_two_rows(int k, const std::vector<Partition>& rhos,
                                const std::vector<Int>& theta, CharCache& cache) {
    SchurExpansion ex;
    ex.k = k;
    Int kf = factorial(k);
    std::vector<Int> sizes(rhos.size());
    for (size_t r = 0; r < rhos.size(); ++r) sizes[r] = class_size(rhos[r]);
    for (int q = 0; 2 * q <= k; ++q) {
        int p = k - q;
        Partition pq;
        pq.push_back(uint8_t(p));
        if (q > 0) pq.push_back(uint8_t(q));
        if (p == 0) pq.clear();
        Int total = 0;
        for (size_t r = 0; r < rhos.size(); ++r)
            total += sizes[r] * Int(cache.value(pq, rhos[r])) * theta[r];
        if (total % kf != 0) throw std::logic_error("non-integral Schur coefficient");
        Int c = total / kf;
        if (c < 0) throw std::logic_error("negative Schur coefficient");
        if (c != 0) ex.coeffs[{p, q}] = c;
    }
    return ex;
}

Expansion assemble(std::vector<SchurExpansion> parts, int D) {
    Expansion out;
    out.bigraded = TruncSeries(2, D);
    out.single = TruncSeries(1, D);
    for (auto& ex : parts) {
        for (auto& [pq, c] : ex.coeffs) {
            auto [p, q] = pq;
            // f_{p,q} = (st)^q (s^{p-q} + ... + t^{p-q})
            for (int a = q; a <= p; ++a) out.bigraded.add({a, p + q - a}, c);
            out.single.add({p + q, 0}, c * (p - q + 1));
        }
    }
    out.by_degree = std::move(parts);
    return out;
}

} // namespace

Expansion pure(int n, int D) {
    CharCache cache;
    std::vector<SchurExpansion> parts;
    for (int k = 0; k <= D; ++k) {
        auto rhos = partitions_of(k);
        auto theta = theta_values(n, k, rhos, cache);
        parts.push_back(project_two_rows(k, rhos, theta, cache));
    }
    return assemble(std::move(parts), D);
}

Expansion mixed(int n, int D) {
    CharCache cache;
    std::vector<SchurExpansion> parts;
    for (int k = 0; k <= D; ++k) {
        auto rhos = partitions_of(k);
        // Restriction to S_k of the degree-(k+1) character: evaluate at the
        // cycle type with an extra fixed point.
        std::vector<Partition> lifted(rhos.size());
        for (size_t r = 0; r < rhos.size(); ++r) {
            lifted[r] = rhos[r];
            lifted[r].push_back(1);
        }
        std::vector<Int> theta(rhos.size(), Int(0));
        for (const Partition& mu : partitions_of(k + 1, n)) {
            for (size_t r = 0; r < rhos.size(); ++r) {
                Int v = cache.value(mu, lifted[r]);
                theta[r] += v * v;
            }
        }
        parts.push_back(project_two_rows(k, rhos, theta, cache));
    }
    return assemble(std::move(parts), D);
}

std::pair<TruncSeries, TruncSeries> limit_products(int D) {
    auto geom2 = [&](int k, int power) {
        // (1 - 2 t^k)^{-power} as a series
        TruncSeries g(1, D);
        for (int j = 0; j * k <= D; ++j) {
            Int c = binomial(j + power - 1, power - 1);
            Int tw = 1;
            for (int i = 0; i < j; ++i) tw *= 2;
            g.add({j * k, 0}, c * tw);
        }
        return g;
    };
    TruncSeries pure_prod = TruncSeries::one(1, D);
    for (int k = 1; k <= D; ++k) pure_prod = pure_prod * geom2(k, 1);
    TruncSeries mixed_prod = geom2(1, 2);
    for (int k = 2; k <= D; ++k) mixed_prod = mixed_prod * geom2(k, 1);
    return {pure_prod, mixed_prod};
}

} // namespace tracealg::formanek
