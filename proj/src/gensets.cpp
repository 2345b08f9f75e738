#include "tracealg/gensets.hpp"

#include <fstream>

#include "tracealg/tables.hpp"

namespace tracealg {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string l;
    while (std::getline(in, l)) {
        if (l.empty() || l[0] == '#') continue;
        lines.push_back(l);
    }
    return lines;
}

GeneratorSet load_word_list(const std::string& name) {
    GeneratorSet s;
    s.name = name;
    for (auto& l : read_lines(tables::data_dir() + "/gensets/" + name + ".txt"))
        s.elements.push_back(TraceElement{{{1, TraceWord(l)}}});
    return s;
}

GeneratorSet load_p171() {
    GeneratorSet s;
    s.name = "p171";
    enum { none, sym, skew, paired } mode = none;
    for (auto& l : read_lines(tables::data_dir() + "/gensets/p171.txt")) {
        if (l == "[symmetric]") {
            mode = sym;
            continue;
        }
        if (l == "[skew]") {
            mode = skew;
            continue;
        }
        if (l == "[paired]") {
            mode = paired;
            continue;
        }
        if (mode == skew) {
            auto pos = l.find(" - ");
            if (pos == std::string::npos) throw std::runtime_error("bad skew line: " + l);
            TraceElement e;
            e.terms.emplace_back(1, TraceWord(l.substr(0, pos)));
            e.terms.emplace_back(-1, TraceWord(l.substr(pos + 3)));
            s.elements.push_back(e);
        } else if (mode == paired) {
            TraceElement e{{{1, TraceWord(l)}}};
            s.elements.push_back(e);
            s.elements.push_back(e.swapped());
        } else if (mode == sym) {
            s.elements.push_back(TraceElement{{{1, TraceWord(l)}}});
        } else {
            throw std::runtime_error("line outside any section: " + l);
        }
    }
    if (s.elements.size() != 171)
        throw std::runtime_error("expected 171 elements, found " + std::to_string(s.elements.size()));
    return s;
}

} // namespace

GeneratorSet load_generator_set(const std::string& name) {
    if (name == "p171") return load_p171();
    GeneratorSet s = load_word_list(name);
    size_t expect = name == "ter1" ? 17 : (name == "gen1" || name == "gen1_alt") ? 32 : 0;
    if (expect && s.elements.size() != expect)
        throw std::runtime_error(name + ": unexpected cardinality " +
                                 std::to_string(s.elements.size()));
    return s;
}

std::vector<TraceWord> unitary_test_words() {
    std::vector<TraceWord> words;
    for (auto& l : read_lines(tables::data_dir() + "/gensets/unsim20.txt"))
        words.emplace_back(l);
    if (words.size() != 20) throw std::runtime_error("expected 20 test words");
    return words;
}

} // namespace tracealg
