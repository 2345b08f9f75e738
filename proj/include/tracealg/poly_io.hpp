#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "tracealg/ratfn.hpp"

namespace tracealg {

// Text format, one term per line:
//   vars s t
//   <coeff> <e1> ... <ek>
//   den <e1> ... <ek> <multiplicity>
// plus optional directives understood by the fixture loader:
//   palindromic_prefix <d>    terms listed are the total-degree-<=d half
// Lines starting with '#' are comments.  Term order on output is graded
// lexicographic (total degree, then first-variable degree, then lex).
struct ParsedRatFn {
    std::vector<std::string> var_names;
    Poly num;
    std::map<Monomial, int> den;
    std::optional<int> palindromic_prefix;
};

inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    int ta = 0, tb = 0;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
        ta += a.e[i];
        tb += b.e[i];
    }
    if (ta != tb) return ta < tb;
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
    return a.e < b.e;
}

inline std::string poly_to_text(const Poly& p, const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << "vars";
    for (auto& v : vars) os << ' ' << v;
    os << '\n';
    auto ts = p.terms();
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return graded_lex_less(x.first, y.first); });
    for (auto& [m, c] : ts) {
        os << c;
        for (size_t i = 0; i < vars.size(); ++i) os << ' ' << m.e[i];
        os << '\n';
    }
    return os.str();
}

inline std::string ratfn_to_text(const RatFn& f, const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << poly_to_text(f.num, vars);
    std::vector<std::pair<Monomial, int>> ds(f.den.begin(), f.den.end());
    std::sort(ds.begin(), ds.end(),
              [](const auto& x, const auto& y) { return graded_lex_less(x.first, y.first); });
    for (auto& [u, m] : ds) {
        os << "den";
        for (size_t i = 0; i < vars.size(); ++i) os << ' ' << u.e[i];
        os << ' ' << m << '\n';
    }
    return os.str();
}

inline ParsedRatFn parse_ratfn_text(std::istream& in) {
    ParsedRatFn out;
    std::string line;
    std::vector<Poly::Term> terms;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "vars") {
            std::string v;
            while (ls >> v) out.var_names.push_back(v);
            if (int(out.var_names.size()) > Monomial::kMaxVars)
                throw std::runtime_error("too many variables");
        } else if (head == "den" || head == "DEN") {
            std::vector<int> nums;
            int v;
            while (ls >> v) nums.push_back(v);
            if (nums.size() != out.var_names.size() + 1)
                throw std::runtime_error("bad den line: " + line);
            Monomial u;
            for (size_t i = 0; i + 1 < nums.size(); ++i) u.e[i] = int16_t(nums[i]);
            out.den[u] += nums.back();
        } else if (head == "palindromic_prefix") {
            int d;
            ls >> d;
            out.palindromic_prefix = d;
        } else {
            Int c(head);
            Monomial m;
            int v;
            size_t i = 0;
            while (ls >> v) {
                if (i >= out.var_names.size()) throw std::runtime_error("bad term line: " + line);
                m.e[i++] = int16_t(v);
            }
            if (i != out.var_names.size()) throw std::runtime_error("bad term line: " + line);
            terms.emplace_back(m, c);
        }
    }
    out.num = Poly::from_terms(std::move(terms));
    return out;
}

inline ParsedRatFn parse_ratfn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ratfn_text(in);
}

// Pretty form like "1 - s*t + 3*s^2*t^2" for human-facing output.
inline std::string poly_to_pretty(const Poly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    auto ts = p.terms();
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return graded_lex_less(x.first, y.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && !m.is_one();
        if (!unit) os << a;
        bool any = !unit;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (any || !unit) os << '*';
            os << vars[i];
            if (m.e[i] != 1) os << '^' << int(m.e[i]);
            any = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace tracealg
