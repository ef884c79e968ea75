#include "vperiod/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vperiod {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& src) : s_(src) { skip_ws(); }

    bool at_end() const { return i_ >= s_.size(); }
    std::size_t pos() const { return i_; }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        skip_ws();
        return true;
    }

    std::string found_desc() const {
        if (at_end()) return "end of input";
        return std::string("'") + s_[i_] + "'";
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw LaurentParseError(i_, expected, found_desc());
    }

    Int read_int() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("an integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s_[i_++]);
        skip_ws();
        return Int(digits);
    }

    std::int64_t read_signed_int() {
        bool negative = accept('-');
        Int v = read_int();
        if (!v.fits_slong_p()) fail("an exponent within machine range");
        std::int64_t x = v.get_si();
        return negative ? -x : x;
    }

private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

void parse_factor(Scanner& sc, ParsedTerm& term, unsigned& max_var) {
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        term.int_coef *= sc.read_int();
        return;
    }
    if (sc.accept('g')) {
        std::int64_t e = 1;
        if (sc.accept('^')) e = sc.read_signed_int();
        term.g_power += e;
        return;
    }
    if (sc.accept('x')) {
        if (!std::isdigit(static_cast<unsigned char>(sc.peek())))
            sc.fail("a variable index after 'x'");
        Int idx = sc.read_int();
        if (idx < 1 || idx > 64) sc.fail("a variable index between 1 and 64");
        unsigned var = static_cast<unsigned>(idx.get_ui());
        max_var = std::max(max_var, var);
        std::int64_t e = 1;
        if (sc.accept('^')) e = sc.read_signed_int();
        term.var_powers.emplace_back(var, e);
        return;
    }
    sc.fail("a coefficient, 'g', or a variable like 'x1'");
}

}  // namespace

ParsedLaurent parse_laurent(const std::string& src) {
    Scanner sc(src);
    ParsedLaurent out;
    if (sc.at_end()) sc.fail("a term");

    bool negate = sc.accept('-');
    while (true) {
        ParsedTerm term;
        if (negate) term.int_coef = -1;
        parse_factor(sc, term, out.max_var);
        while (sc.accept('*')) parse_factor(sc, term, out.max_var);
        out.terms.push_back(std::move(term));

        if (sc.at_end()) break;
        if (sc.accept('+')) {
            negate = false;
        } else if (sc.accept('-')) {
            negate = true;
        } else {
            sc.fail("'+', '-', '*', or end of input");
        }
        if (sc.at_end()) sc.fail("a term after '+' or '-'");
    }
    return out;
}

LaurentPoly materialize(const ParsedLaurent& ast, const GaloisField& F, unsigned mvars) {
    if (mvars == 0) mvars = std::max(ast.max_var, 1u);
    if (ast.max_var > mvars)
        throw std::invalid_argument("materialize: polynomial uses more variables than declared");

    std::map<std::vector<std::int64_t>, std::uint64_t> acc;
    for (const ParsedTerm& t : ast.terms) {
        std::uint64_t coef = F.element_from_int(t.int_coef);
        if (coef != 0 && t.g_power != 0)
            coef = F.mul(coef, F.pow(F.generator(), t.g_power));
        if (coef == 0) continue;
        std::vector<std::int64_t> exps(mvars, 0);
        for (const auto& [var, e] : t.var_powers) exps[var - 1] += e;
        auto [it, inserted] = acc.emplace(std::move(exps), coef);
        if (!inserted) it->second = F.add(it->second, coef);
    }

    LaurentPoly poly;
    poly.mvars = mvars;
    for (auto& [exps, coef] : acc)
        if (coef != 0) poly.terms.emplace_back(exps, coef);
    return poly;
}

LaurentPoly parse_laurent_poly(const std::string& src, const GaloisField& F, unsigned mvars) {
    return materialize(parse_laurent(src), F, mvars);
}

}  // namespace vperiod
