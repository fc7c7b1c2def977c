#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "weyl/graph.hpp"

namespace weyl {

// Words over group generators: letter +k means generator k-1, letter -k its
// inverse (1-based so the sign survives).
using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

inline Word free_reduce(Word w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

struct GroupPresentation {
    int ngens = 0;
    std::vector<std::string> names; // optional, for display
    std::vector<Word> relators;

    void add_relator(Word w) {
        w = free_reduce(std::move(w));
        if (w.empty()) return;
        for (int x : w)
            if (x == 0 || std::abs(x) > ngens)
                throw std::domain_error("presentation: relator letter out of range");
        relators.push_back(std::move(w));
    }

    std::string generator_name(int i) const {
        if (i < static_cast<int>(names.size())) return names[i];
        return "g" + std::to_string(i + 1);
    }
};

// Symmetric matrix of orders m[i][j] with m[i][i] = 1; entry 0 denotes
// infinity. Dynkin variants carry vertex colors.
struct CoxeterMatrix {
    int rank = 0;
    std::vector<std::vector<int>> m;
    std::vector<Color> colors; // empty for simply laced / non-crystallographic

    static CoxeterMatrix path(int rank, const std::vector<int>& edge_labels) {
        CoxeterMatrix cm;
        cm.rank = rank;
        cm.m.assign(rank, std::vector<int>(rank, 2));
        for (int i = 0; i < rank; ++i) cm.m[i][i] = 1;
        for (int i = 0; i + 1 < rank; ++i) cm.m[i][i + 1] = cm.m[i + 1][i] = edge_labels[i];
        return cm;
    }

    void set_edge(int i, int j, int label) { m[i][j] = m[j][i] = label; }

    bool all_finite_entries() const {
        for (const auto& row : m)
            for (int v : row)
                if (v == 0) return false;
        return true;
    }

    // Catalog names: A1.., B2.., C2.., D4.., E6..E8, F4, G2, H3, H4, I2(m).
    static CoxeterMatrix catalog(const std::string& name);
};

inline CoxeterMatrix CoxeterMatrix::catalog(const std::string& name) {
    auto chain3 = [](int n) { return std::vector<int>(std::max(n - 1, 0), 3); };
    if (name.size() >= 2 && name[0] == 'I') {
        // I2(m)
        size_t open = name.find('(');
        size_t close = name.find(')');
        if (name[1] != '2' || open == std::string::npos || close == std::string::npos)
            throw std::domain_error("catalog: expected I2(m), got '" + name + "'");
        int m = std::stoi(name.substr(open + 1, close - open - 1));
        if (m < 3) throw std::domain_error("I2(m) requires m >= 3");
        return path(2, {m});
    }
    char fam = name[0];
    int n = std::stoi(name.substr(1));
    switch (fam) {
        case 'A': {
            if (n < 1) throw std::domain_error("A_n requires n >= 1");
            return path(n, chain3(n));
        }
        case 'B':
        case 'C': {
            if (n < 2) throw std::domain_error("B_n/C_n require n >= 2");
            std::vector<int> labels = chain3(n);
            labels.back() = 4;
            CoxeterMatrix cm = path(n, labels);
            // B: chain of long root reflections ending in one short; C dual
            cm.colors.assign(n, fam == 'B' ? Color::long_v : Color::short_v);
            cm.colors.back() = fam == 'B' ? Color::short_v : Color::long_v;
            return cm;
        }
        case 'D': {
            if (n < 4) throw std::domain_error("D_n requires n >= 4");
            CoxeterMatrix cm = path(n, chain3(n));
            cm.set_edge(n - 2, n - 1, 2);
            cm.set_edge(n - 3, n - 1, 3);
            return cm;
        }
        case 'E': {
            if (n < 6 || n > 8) throw std::domain_error("E_n requires n in {6,7,8}");
            CoxeterMatrix cm = path(n, chain3(n));
            cm.set_edge(n - 2, n - 1, 2);
            cm.set_edge(2, n - 1, 3);
            return cm;
        }
        case 'F': {
            if (n != 4) throw std::domain_error("F_n requires n = 4");
            CoxeterMatrix cm = path(4, {3, 4, 3});
            cm.colors = {Color::long_v, Color::long_v, Color::short_v, Color::short_v};
            return cm;
        }
        case 'G': {
            if (n != 2) throw std::domain_error("G_n requires n = 2");
            CoxeterMatrix cm = path(2, {6});
            cm.colors = {Color::short_v, Color::long_v};
            return cm;
        }
        case 'H': {
            if (n == 3) return path(3, {5, 3});
            if (n == 4) return path(4, {5, 3, 3});
            throw std::domain_error("H_n requires n in {3,4}");
        }
        default: throw std::domain_error("catalog: unknown diagram '" + name + "'");
    }
}

// Relators s_i^2 and (s_i s_j)^{m_ij}; infinite entries are rejected.
inline GroupPresentation coxeter_presentation(const CoxeterMatrix& cm) {
    if (!cm.all_finite_entries())
        throw std::domain_error("coxeter_presentation: infinite entry m[i][j]");
    GroupPresentation p;
    p.ngens = cm.rank;
    for (int i = 0; i < cm.rank; ++i) p.names.push_back("s" + std::to_string(i + 1));
    for (int i = 0; i < cm.rank; ++i) p.add_relator({i + 1, i + 1});
    for (int i = 0; i < cm.rank; ++i)
        for (int j = i + 1; j < cm.rank; ++j) {
            Word w;
            for (int k = 0; k < cm.m[i][j]; ++k) {
                w.push_back(i + 1);
                w.push_back(j + 1);
            }
            p.add_relator(std::move(w));
        }
    return p;
}

// --- textual presentations --------------------------------------------------------
//
//   gens: a b c d; rels: a^2, (a b)^3, (a (b^c))^2
//
// x^k for integer k is a power; x^y for a word y is the conjugate y^-1 x y.

namespace detail {

class PresentationParser {
public:
    explicit PresentationParser(const std::string& text) : s_(text) {}

    GroupPresentation parse() {
        expect_keyword("gens");
        expect(':');
        GroupPresentation p;
        while (true) {
            skip_ws();
            if (peek() == ';') break;
            std::string name = parse_ident();
            if (name.empty()) throw err("expected generator name");
            if (index_.count(name)) throw err("duplicate generator '" + name + "'");
            index_[name] = static_cast<int>(p.names.size());
            p.names.push_back(name);
        }
        expect(';');
        p.ngens = static_cast<int>(p.names.size());
        if (p.ngens == 0) throw err("no generators");
        expect_keyword("rels");
        expect(':');
        while (true) {
            p.add_relator(parse_word());
            skip_ws();
            if (pos_ >= s_.size()) break;
            expect(',');
        }
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    std::map<std::string, int> index_;

    std::domain_error err(const std::string& msg) const {
        return std::domain_error("presentation parse error at position " + std::to_string(pos_) +
                                 ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw err(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_keyword(const std::string& kw) {
        skip_ws();
        if (s_.compare(pos_, kw.size(), kw) != 0) throw err("expected '" + kw + "'");
        pos_ += kw.size();
    }
    std::string parse_ident() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() &&
               (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            out.push_back(s_[pos_++]);
        return out;
    }

    // word := factor+ ; factor := primary ('^' (int | primary))*
    Word parse_word() {
        Word w;
        while (true) {
            char c = peek();
            if (c == '\0' || c == ',' || c == ')' || c == ';') break;
            Word f = parse_factor();
            w.insert(w.end(), f.begin(), f.end());
        }
        if (w.empty()) throw err("empty word");
        return w;
    }

    Word parse_factor() {
        Word base = parse_primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() &&
                (isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
                bool neg = s_[pos_] == '-';
                if (neg) ++pos_;
                if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw err("expected exponent");
                int k = 0;
                while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_])))
                    k = k * 10 + (s_[pos_++] - '0');
                Word unit = neg ? word_inverse(base) : base;
                Word out;
                for (int t = 0; t < k; ++t) out.insert(out.end(), unit.begin(), unit.end());
                base = std::move(out);
            } else {
                // conjugation x^y = y^-1 x y
                Word by = parse_primary();
                Word out = word_inverse(by);
                out.insert(out.end(), base.begin(), base.end());
                out.insert(out.end(), by.begin(), by.end());
                base = std::move(out);
            }
        }
        return base;
    }

    Word parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = parse_word();
            expect(')');
            return w;
        }
        std::string name = parse_ident();
        if (name.empty()) throw err("expected generator or '('");
        auto it = index_.find(name);
        if (it == index_.end()) throw err("unknown generator '" + name + "'");
        return {it->second + 1};
    }
};

} // namespace detail

inline GroupPresentation parse_presentation(const std::string& text) {
    return detail::PresentationParser(text).parse();
}

} // namespace weyl
