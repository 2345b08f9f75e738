#include "tracealg/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "tracealg/poly_io.hpp"

namespace tracealg::tables {

std::string data_dir() {
    if (const char* env = std::getenv("TRACEALG_DATA_DIR")) return env;
#ifdef TRACEALG_DATA_DIR
    return TRACEALG_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

struct LoadedRatFn {
    Poly num;
    std::map<Monomial, int> den;
    Poly den_extra;
};

int total_deg(const Monomial& m) {
    int d = 0;
    for (int i = 0; i < Monomial::kMaxVars; ++i) d += m.e[i];
    return d;
}

// Completes a palindromic-prefix fixture: terms whose mirror lands beyond
// the stored prefix are added; overlapping mirrors must agree.
Poly complete_palindromic(const Poly& prefix, int d, int nvars) {
    int maxdeg = 0;
    for (auto& [m, c] : prefix.terms()) maxdeg = std::max(maxdeg, total_deg(m));
    std::vector<Poly::Term> ts(prefix.terms().begin(), prefix.terms().end());
    for (auto& [m, c] : prefix.terms()) {
        Monomial mm = m;
        for (int i = 0; i < nvars; ++i) mm.e[i] = int16_t(d - mm.e[i]);
        if (total_deg(mm) > maxdeg)
            ts.emplace_back(mm, c);
        else if (prefix.coeff(mm) != c)
            throw std::runtime_error("inconsistent palindromic prefix");
    }
    Poly full = Poly::from_terms(std::move(ts));
    if (!is_palindromic(full, d, nvars)) throw std::runtime_error("reconstruction not palindromic");
    return full;
}

LoadedRatFn load(const std::string& file) {
    std::ifstream in(data_dir() + "/" + file);
    if (!in) throw std::runtime_error("missing fixture " + file);
    LoadedRatFn out;
    std::string line;
    std::vector<Poly::Term> terms;
    std::vector<std::string> vars;
    std::optional<int> pal;
    std::vector<Int> denext;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "vars") {
            std::string v;
            while (ls >> v) vars.push_back(v);
        } else if (head == "palindromic_prefix") {
            int d;
            ls >> d;
            pal = d;
        } else if (head == "den") {
            std::vector<long> nums;
            long v;
            while (ls >> v) nums.push_back(v);
            Monomial u;
            for (size_t i = 0; i + 1 < nums.size(); ++i) u.e[i] = int16_t(nums[i]);
            out.den[u] += int(nums.back());
        } else if (head == "denext") {
            std::string tok;
            while (ls >> tok) denext.emplace_back(tok);
        } else {
            Int c(head);
            Monomial m;
            long v;
            size_t i = 0;
            while (ls >> v) m.e[i++] = int16_t(v);
            terms.emplace_back(m, c);
        }
    }
    out.num = Poly::from_terms(std::move(terms));
    if (pal) out.num = complete_palindromic(out.num, *pal, int(vars.size()));
    for (size_t i = 0; i < denext.size(); ++i)
        if (denext[i] != 0) out.den_extra.add_term(Monomial::var(0, int(i)), denext[i]);
    return out;
}

FixtureRatFn to_fixture(LoadedRatFn l) {
    FixtureRatFn f;
    f.fn.num = std::move(l.num);
    f.fn.den = std::move(l.den);
    f.den_extra = std::move(l.den_extra);
    return f;
}

} // namespace

TruncSeries FixtureRatFn::expand(const VarCtx& ctx, int D) const {
    TruncSeries s = ratfn_expand(fn, ctx, D);
    if (den_extra.is_zero()) return s;
    // Divide by the extra polynomial (constant term 1) coefficient by
    // coefficient; univariate in the first variable.
    std::vector<Int> div(size_t(D) + 1, Int(0));
    for (auto& [m, c] : den_extra.terms()) {
        if (m.e[0] <= D) div[size_t(m.e[0])] = c;
    }
    if (div[0] != 1) throw std::logic_error("den_extra must have constant term 1");
    std::vector<Int> num = s.coeff_list();
    std::vector<Int> q(size_t(D) + 1, Int(0));
    for (int k = 0; k <= D; ++k) {
        Int acc = num[size_t(k)];
        for (int j = 1; j <= k; ++j) acc -= div[size_t(j)] * q[size_t(k - j)];
        q[size_t(k)] = acc;
    }
    TruncSeries out(1, D);
    for (int k = 0; k <= D; ++k) out.set({k, 0}, q[size_t(k)]);
    return out;
}

std::map<Monomial, int> pi_factors(int n) {
    std::map<Monomial, int> den;
    Monomial s = Monomial::var(0), t = Monomial::var(1);
    for (int i = 1; i <= n; ++i) {
        den[s.pow(i)] += 1;
        den[t.pow(i)] += 1;
        for (int j = 1; j <= i - 1; ++j) {
            Monomial u = s.pow(i - j) * t.pow(j);
            den[u] += std::min(i, n + 1 - i);
        }
    }
    return den;
}

std::map<Monomial, int> pure_den_factors(int n) {
    auto den = pi_factors(n);
    if (n == 6) {
        Monomial st = Monomial::var(0) * Monomial::var(1);
        den[st] += 1;
    }
    return den;
}

std::map<Monomial, int> mixed_den_factors(int n) {
    auto den = pure_den_factors(n);
    Monomial s = Monomial::var(0), t = Monomial::var(1);
    auto swap_factor = [&](const Monomial& from, const Monomial& to) {
        auto it = den.find(from);
        if (it == den.end() || it->second == 0) throw std::logic_error("missing factor");
        if (--it->second == 0) den.erase(it);
        den[to] += 1;
    };
    swap_factor(s.pow(n), s);
    swap_factor(t.pow(n), t);
    return den;
}

Poly assembled_numerator(char kind) {
    Monomial s = Monomial::var(0), t = Monomial::var(1);
    auto load_part = [&](const std::string& f) { return load(f).num; };
    auto subst_st = [&](const Poly& p) {
        // univariate x -> monomial st
        std::vector<Poly::Term> ts;
        for (auto& [m, c] : p.terms()) {
            Monomial mm;
            mm.e[0] = mm.e[1] = m.e[0];
            ts.emplace_back(mm, c);
        }
        return Poly::from_terms(std::move(ts));
    };
    auto mirror50 = [&](const Poly& p, int d) { return mirror_small(p, d, 2); };
    if (kind == 'c') {
        Poly f1 = subst_st(load_part("asm_c62_f1.poly"));
        Poly f2 = load_part("asm_c62_f2.poly");
        Poly f3 = load_part("asm_c62_f3.poly");
        // -2 s^17 t^33 f2(s/t)
        std::vector<Poly::Term> g;
        for (auto& [m, c] : f2.terms()) {
            Monomial mm;
            mm.e[0] = int16_t(17 + m.e[0]);
            mm.e[1] = int16_t(33 - m.e[0]);
            g.emplace_back(mm, Int(-2) * c);
        }
        Poly f = f1 + Poly::from_terms(std::move(g));
        // - s t^2 f3(s,t) - s^2 t f3(t,s)
        Poly f3swap = Poly::from_terms([&] {
            std::vector<Poly::Term> ts;
            for (auto& [m, c] : f3.terms()) {
                Monomial mm = m;
                std::swap(mm.e[0], mm.e[1]);
                ts.emplace_back(mm, c);
            }
            return ts;
        }());
        f -= f3.scaled(Int(1), s * t.pow(2));
        f -= f3swap.scaled(Int(1), s.pow(2) * t);
        Poly num = f + mirror50(f, 50);
        Monomial c25;
        c25.e[0] = c25.e[1] = 25;
        num.add_term(c25, Int(-18142));
        if (num.size() != 1169) throw std::runtime_error("pure assembly term count mismatch");
        return num;
    }
    Poly g1 = subst_st(load_part("asm_t62_g1.poly"));
    Poly g2 = load_part("asm_t62_g2.poly");
    Poly g2swap = Poly::from_terms([&] {
        std::vector<Poly::Term> ts;
        for (auto& [m, c] : g2.terms()) {
            Monomial mm = m;
            std::swap(mm.e[0], mm.e[1]);
            ts.emplace_back(mm, c);
        }
        return ts;
    }());
    Poly one_st(Int(1));
    one_st.add_term(s * t, Int(1));
    Poly part1 = one_st * (g1 + mirror50(g1, 44));
    Poly part2 = (g2 + mirror50(g2swap, 42)).scaled(Int(1), s * t.pow(2));
    Poly part3 = (g2swap + mirror50(g2, 42)).scaled(Int(1), s.pow(2) * t);
    Poly num = part1 - part2 - part3;
    if (num.size() != 854) throw std::runtime_error("mixed assembly term count mismatch");
    return num;
}

Poly bigraded_num(char kind, int n) {
    if (kind == 'c') {
        if (n <= 2) return Poly(Int(1));
        if (n == 6) return assembled_numerator('c');
        return load("num_c_st_" + std::to_string(n) + ".poly").num;
    }
    if (n <= 3) return Poly(Int(1));
    if (n == 6) return assembled_numerator('t');
    return load("num_t_st_" + std::to_string(n) + ".poly").num;
}

RatFn bigraded(char kind, int n) {
    RatFn f;
    f.num = bigraded_num(kind, n);
    f.den = (kind == 'c') ? pure_den_factors(n) : mixed_den_factors(n);
    return f;
}

FixtureRatFn single_graded(char kind, int n) {
    return to_fixture(load(std::string("single_") + kind + "_" + std::to_string(n) + ".ratfn"));
}

FixtureRatFn star_single(char kind, int n) {
    return to_fixture(load(std::string("star_") + kind + "_" + std::to_string(n) + ".ratfn"));
}

Poly star_multiplier(char kind, int n) {
    return load(std::string("mult_") + kind + "_" + std::to_string(n) + ".poly").num;
}

FixtureRatFn star_bigraded(int n) { return to_fixture(load("star2_c_" + std::to_string(n) + ".ratfn")); }

FixtureRatFn sharp(int n) { return to_fixture(load("sharp_" + std::to_string(n) + ".ratfn")); }

FixtureRatFn bullet(int n) { return to_fixture(load("bullet_" + std::to_string(n) + ".ratfn")); }

Poly gcd_fixture(int n) { return load("gcd_" + std::to_string(n) + ".poly").num; }

namespace {

std::map<int, std::vector<Int>> load_table(const std::string& file) {
    std::ifstream in(data_dir() + "/" + file);
    if (!in) throw std::runtime_error("missing fixture " + file);
    std::map<int, std::vector<Int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int key;
        ls >> key;
        std::vector<Int>& row = out[key];
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
    }
    return out;
}

} // namespace

const std::map<int, std::vector<Int>>& taylor(const std::string& family) {
    static std::map<std::string, std::map<int, std::vector<Int>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(family);
    if (it == cache.end()) it = cache.emplace(family, load_table("taylor_" + family + ".txt")).first;
    return it->second;
}

const std::vector<std::vector<Int>>& table_c_coeffs() {
    static std::vector<std::vector<Int>> rows = [] {
        auto m = load_table("table10.txt");
        std::vector<std::vector<Int>> r;
        for (auto& [k, v] : m) r.push_back(v);
        return r;
    }();
    return rows;
}

const std::vector<std::vector<Int>>& table_t_coeffs() {
    static std::vector<std::vector<Int>> rows = [] {
        auto m = load_table("table12.txt");
        std::vector<std::vector<Int>> r;
        for (auto& [k, v] : m) r.push_back(v);
        return r;
    }();
    return rows;
}

const std::vector<Int>& alpha_sequence() {
    static std::vector<Int> a = [] {
        auto m = load_table("alpha.txt");
        std::vector<Int> r;
        for (auto& [k, v] : m) r.push_back(v.at(0));
        return r;
    }();
    return a;
}

const std::map<std::pair<int, int>, Int>& schur_c52() {
    static std::map<std::pair<int, int>, Int> table = [] {
        std::ifstream in(data_dir() + "/schur_c52.txt");
        if (!in) throw std::runtime_error("missing fixture schur_c52.txt");
        std::map<std::pair<int, int>, Int> t;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            int p, q;
            std::string c;
            ls >> p >> q >> c;
            t[{p, q}] = Int(c);
        }
        return t;
    }();
    return table;
}

const std::vector<int>& generator_degree_counts() {
    static std::vector<int> counts = [] {
        auto m = load_table("drensky_degrees.txt");
        std::vector<int> r{0}; // degree 0 slot
        for (auto& [k, v] : m) r.push_back(int(v.at(0)));
        return r;
    }();
    return counts;
}

} // namespace tracealg::tables
