#include "tracealg/unitary.hpp"

#include <stdexcept>

#include "tracealg/gensets.hpp"

namespace tracealg {

std::complex<double> trace_of_word(const std::string& letters, const CMat& m) {
    CMat adj = m.adjoint();
    CMat acc = CMat::Identity(m.rows(), m.cols());
    for (char c : letters) acc = acc * (c == 'x' ? m : adj);
    return acc.trace();
}

namespace {

bool traces_agree(const std::string& w, const CMat& a, const CMat& b, double tol) {
    std::complex<double> ta = trace_of_word(w, a);
    std::complex<double> tb = trace_of_word(w, b);
    double scale = std::max({1.0, std::abs(ta), std::abs(tb)});
    return std::abs(ta - tb) <= tol * scale;
}

} // namespace

SimVerdict unitary_similar(const CMat& a, const CMat& b, double tol) {
    if (a.rows() != 4 || a.cols() != 4 || b.rows() != 4 || b.cols() != 4)
        throw std::invalid_argument("the 20-word test set applies to 4x4 matrices");
    static const std::vector<TraceWord> words = unitary_test_words();
    for (const TraceWord& w : words)
        if (!traces_agree(w.letters(), a, b, tol)) return {false, w.letters()};
    return {true, ""};
}

SimVerdict exhaustive_word_test(const CMat& a, const CMat& b, int L, double tol) {
    if (a.rows() != b.rows()) throw std::invalid_argument("size mismatch");
    static std::vector<TraceWord> cache;
    static int cached_L = 0;
    if (cached_L < L) {
        cache = words_up_to(L);
        cached_L = L;
    }
    for (const TraceWord& w : cache) {
        if (w.length() > L) continue;
        if (!traces_agree(w.letters(), a, b, tol)) return {false, w.letters()};
    }
    return {true, ""};
}

CMat random_complex(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
    return m;
}

CMat random_unitary(int n, std::mt19937_64& rng) {
    CMat m = random_complex(n, rng);
    Eigen::HouseholderQR<CMat> qr(m);
    CMat q = qr.householderQ();
    return q;
}

} // namespace tracealg
