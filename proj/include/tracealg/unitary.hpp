#pragma once

#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace tracealg {

using CMat = Eigen::MatrixXcd;

struct SimVerdict {
    bool similar = false;
    std::string witness; // first violating word when not similar
};

// Unitary-similarity test for 4x4 complex matrices via the 20-word trace
// test set: a ~ b iff tr w(a, a*) == tr w(b, b*) for every listed word,
// within tol scaled by max(1, magnitudes).
SimVerdict unitary_similar(const CMat& a, const CMat& b, double tol = 1e-8);

// Complete test for n x n matrices by comparing traces of all cyclic words
// of length <= L in (m, m*); complete when L >= n^2, a necessary condition
// otherwise.
SimVerdict exhaustive_word_test(const CMat& a, const CMat& b, int L, double tol = 1e-8);

CMat random_complex(int n, std::mt19937_64& rng);
CMat random_unitary(int n, std::mt19937_64& rng);

std::complex<double> trace_of_word(const std::string& letters, const CMat& m);

} // namespace tracealg
