#pragma once

#include <string>
#include <vector>

namespace tracealg {

// Word over {x, y}, stored as the lexicographically least cyclic rotation
// (traces are invariant under rotation, so this is the natural key).
class TraceWord {
  public:
    TraceWord() = default;
    explicit TraceWord(std::string letters);

    const std::string& letters() const { return letters_; }
    int length() const { return int(letters_.size()); }
    std::pair<int, int> bidegree() const; // (#x, #y)

    TraceWord swapped() const; // x <-> y

    bool operator==(const TraceWord& o) const { return letters_ == o.letters_; }
    bool operator<(const TraceWord& o) const {
        if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }

  private:
    std::string letters_;
};

// All cyclic-canonical words of each length 1..L (necklace representatives).
std::vector<TraceWord> words_up_to(int L, int min_len = 1);

// Formal integer combination of trace words (bihomogeneous in our uses).
struct TraceElement {
    std::vector<std::pair<int, TraceWord>> terms;
    int degree() const { return terms.empty() ? 0 : terms.front().second.length(); }
    std::pair<int, int> bidegree() const {
        return terms.empty() ? std::pair<int, int>{0, 0} : terms.front().second.bidegree();
    }
    TraceElement swapped() const {
        TraceElement r;
        for (auto& [c, w] : terms) r.terms.emplace_back(c, w.swapped());
        return r;
    }
};

} // namespace tracealg
