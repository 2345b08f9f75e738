#include "tracealg/traceword.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tracealg {

namespace {

std::string least_rotation(const std::string& s) {
    std::string best = s;
    std::string cur = s;
    for (size_t i = 1; i < s.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

} // namespace

TraceWord::TraceWord(std::string letters) {
    for (char c : letters)
        if (c != 'x' && c != 'y') throw std::invalid_argument("trace word letters must be x or y");
    if (letters.empty()) throw std::invalid_argument("empty trace word");
    letters_ = least_rotation(letters);
}

std::pair<int, int> TraceWord::bidegree() const {
    int a = 0, b = 0;
    for (char c : letters_) (c == 'x' ? a : b)++;
    return {a, b};
}

TraceWord TraceWord::swapped() const {
    std::string s = letters_;
    for (char& c : s) c = (c == 'x') ? 'y' : 'x';
    return TraceWord(s);
}

std::vector<TraceWord> words_up_to(int L, int min_len) {
    std::vector<TraceWord> out;
    for (int len = min_len; len <= L; ++len) {
        std::set<std::string> seen;
        for (uint64_t bits = 0; bits < (uint64_t(1) << len); ++bits) {
            std::string w(size_t(len), 'x');
            for (int i = 0; i < len; ++i)
                if ((bits >> i) & 1) w[size_t(i)] = 'y';
            std::string canon = least_rotation(w);
            if (seen.insert(canon).second) out.emplace_back(canon);
        }
    }
    return out;
}

} // namespace tracealg
