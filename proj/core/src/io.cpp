#include "gibs/io.hpp"

#include "gibs/errors.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace gibs {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Strips a trailing '#' comment and right whitespace.
std::string strip_line(const std::string& line) {
    std::string s = line;
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    return s;
}

class LineParser {
public:
    LineParser(const std::string& line, int lineno,
               const std::unordered_map<std::string, int>& vars, int nvars)
        : s_(line), lineno_(lineno), vars_(vars), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial p;
        skip_ws();
        if (at_end()) fail("expected a polynomial");
        bool first = true;
        while (!at_end()) {
            double sign = 1.0;
            bool saw_sign = false;
            while (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -sign;
                saw_sign = true;
                ++pos_;
                skip_ws();
            }
            if (!first && !saw_sign)
                fail("expected '+', '-' or end of line between terms");
            if (at_end()) fail("expected a term after the sign");
            auto [coeff, mono] = parse_term();
            p.add_term(mono, sign * coeff);
            first = false;
            skip_ws();
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, lineno_, static_cast<int>(pos_) + 1);
    }

    std::pair<double, Monomial> parse_term() {
        double coeff = 1.0;
        Monomial mono(static_cast<std::size_t>(nvars_), 0);
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end()) {
                if (!any) fail("expected a term");
                break;
            }
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                coeff *= parse_number();
            } else if (is_ident_start(c)) {
                const auto [var, exp] = parse_power();
                mono[static_cast<std::size_t>(var)] += exp;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            if (at_end() || peek() == '+' || peek() == '-') break;
            fail("expected '*', '+', '-' or end of line after a factor");
        }
        return {coeff, mono};
    }

    double parse_number() {
        const char* start = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - start);
        if (!at_end() && is_ident_start(peek()))
            fail("missing '*' between a coefficient and a variable");
        return v;
    }

    std::pair<int, int> parse_power() {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        const auto it = vars_.find(name);
        if (it == vars_.end()) {
            pos_ = start; // point the error at the name
            fail("unknown variable '" + name + "'");
        }
        int exp = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a nonnegative integer exponent after '^'");
            exp = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                exp = exp * 10 + (peek() - '0');
                if (exp > 1000) fail("exponent out of range");
                ++pos_;
            }
        }
        return {it->second, exp};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int lineno_;
    const std::unordered_map<std::string, int>& vars_;
    int nvars_;
};

} // namespace

PolySystem parse_system(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string rawline;
    int lineno = 0;

    // Header: vars: <name> <name> ...
    std::vector<std::string> names;
    std::unordered_map<std::string, int> vars;
    bool have_header = false;
    int header_line = 0;
    PolySystem P;

    while (std::getline(in, rawline)) {
        ++lineno;
        const std::string line = strip_line(rawline);
        if (line.empty()) continue;

        if (!have_header) {
            if (line.rfind("vars:", 0) != 0)
                throw parse_error("expected a 'vars:' header line", lineno, 1);
            std::istringstream hs(line.substr(5));
            std::string name;
            while (hs >> name) {
                if (!is_ident_start(name[0]))
                    throw parse_error("invalid variable name '" + name + "'", lineno, 1);
                for (char c : name)
                    if (!is_ident_char(c))
                        throw parse_error("invalid variable name '" + name + "'",
                                          lineno, 1);
                if (vars.count(name))
                    throw parse_error("duplicate variable '" + name + "'", lineno, 1);
                vars.emplace(name, static_cast<int>(names.size()));
                names.push_back(name);
            }
            if (names.empty())
                throw parse_error("the 'vars:' header names no variables", lineno, 6);
            have_header = true;
            header_line = lineno;
            continue;
        }

        LineParser lp(line, lineno, vars, static_cast<int>(names.size()));
        Polynomial p = lp.parse();
        if (clean(p).is_zero()) {
            if (warnings)
                warnings->push_back("line " + std::to_string(lineno) +
                                    ": polynomial cancels to zero; dropped");
            continue;
        }
        P.polys.push_back(std::move(p));
    }

    if (!have_header) throw parse_error("expected a 'vars:' header line", lineno + 1, 1);
    if (P.polys.empty())
        throw parse_error("the system has no nonzero polynomials", header_line, 1);
    P.nvars = static_cast<int>(names.size());
    P.varnames = std::move(names);
    P.validate();
    return P;
}

std::string format_poly(const Polynomial& p, const std::vector<std::string>& names,
                        int digits) {
    if (p.is_zero()) return "0";
    std::string out;
    char buf[64];
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        std::snprintf(buf, sizeof(buf), "%+.*g", digits, c);
        if (!first) out += ' ';
        out += buf;
        std::string ms;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!ms.empty()) ms += '*';
            ms += i < names.size() ? names[i] : "v" + std::to_string(i);
            if (mono[i] > 1) ms += '^' + std::to_string(mono[i]);
        }
        if (!ms.empty()) {
            out += '*';
            out += ms;
        }
        first = false;
    }
    return out;
}

std::string format_system(const PolySystem& P, int digits) {
    const auto names = display_names(P.nvars, P.varnames);
    std::string out = "vars:";
    for (const auto& n : names) {
        out += ' ';
        out += n;
    }
    out += '\n';
    for (const auto& p : P.polys) {
        out += format_poly(p, names, digits);
        out += '\n';
    }
    return out;
}

} // namespace gibs
