#include "interlace/error.hpp"
#include "interlace/poly.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace interlace {

namespace {

using Factor = Monomial::Factor;

std::vector<Factor> canonical_factors(const Monomial& m) {
    std::vector<Factor> f = m.factors();
    std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.first, b.first); });
    return f;
}

/// Graded lexicographic: higher total degree first; ties broken at the
/// first variable (in printed order) whose exponents differ, larger first.
bool graded_lex_before(const std::vector<Factor>& a, std::uint32_t deg_a, const std::vector<Factor>& b,
                       std::uint32_t deg_b) {
    if (deg_a != deg_b) return deg_a > deg_b;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second > b[j].second;
            ++i;
            ++j;
        } else {
            return canonical_less(a[i].first, b[j].first);
        }
    }
    return i < a.size();
}

std::string monomial_text(const std::vector<Factor>& factors) {
    std::string out;
    for (const auto& [var, e] : factors) {
        if (!out.empty()) out.push_back('*');
        out += var.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

struct Ordered {
    std::vector<Factor> factors;
    std::uint32_t degree;
    const BigInt* coef;
};

std::vector<Ordered> ordered_terms(const MPoly& p) {
    std::vector<Ordered> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({canonical_factors(t.monomial), t.monomial.degree(), &t.coef});
    std::sort(terms.begin(), terms.end(), [](const Ordered& a, const Ordered& b) {
        return graded_lex_before(a.factors, a.degree, b.factors, b.degree);
    });
    return terms;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MPoly parse() {
        MPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expression() {
        skip_space();
        MPoly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = power();
        while (accept('*')) acc *= power();
        return acc;
    }

    MPoly power() {
        MPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const auto digits = std::string(text_.substr(start, pos_ - start));
            if (digits.size() > 9) fail("exponent too large");
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MPoly primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MPoly(BigInt(std::string(text_.substr(start, pos_ - start)), 10));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') ++pos_;
                else break;
            }
            const auto name = text_.substr(start, pos_ - start);
            try {
                return MPoly(VarId::parse(name));
            } catch (const ParseError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : ordered_terms(p)) {
        const bool negative = sgn(*t.coef) < 0;
        BigInt magnitude = abs(*t.coef);
        if (first) {
            if (negative) out.push_back('-');
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_text(t.factors);
        if (mono.empty()) out += magnitude.get_str();
        else if (magnitude == 1) out += mono;
        else out += magnitude.get_str() + "*" + mono;
    }
    return out;
}

MPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_json_string(const MPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : ordered_terms(p)) {
        nlohmann::json term;
        if (t.coef->fits_slong_p()) term["coef"] = t.coef->get_si();
        else term["coef"] = t.coef->get_str();
        nlohmann::json pows = nlohmann::json::object();
        for (const auto& [var, e] : t.factors) pows[var.name()] = e;
        term["pows"] = std::move(pows);
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"terms", std::move(terms)}}.dump();
}

MPoly parse_poly_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial JSON: expected {\"terms\": [...]}");
    std::vector<MPoly::Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef")) throw ParseError("polynomial JSON: term without coef");
        BigInt coef;
        const auto& c = t["coef"];
        if (c.is_number_integer()) coef = BigInt(std::to_string(c.get<long long>()), 10);
        else if (c.is_string()) {
            try {
                coef = BigInt(c.get<std::string>(), 10);
            } catch (const std::invalid_argument&) {
                throw ParseError("polynomial JSON: bad coefficient '" + c.get<std::string>() + "'");
            }
        } else
            throw ParseError("polynomial JSON: coef must be an integer or a decimal string");
        std::vector<Monomial::Factor> factors;
        if (t.contains("pows")) {
            if (!t["pows"].is_object()) throw ParseError("polynomial JSON: pows must be an object");
            for (const auto& [name, e] : t["pows"].items()) {
                if (!e.is_number_unsigned()) throw ParseError("polynomial JSON: bad exponent for " + name);
                factors.emplace_back(VarId::parse(name), e.get<std::uint32_t>());
            }
        }
        terms.push_back({Monomial::from_factors(std::move(factors)), std::move(coef)});
    }
    return MPoly::from_terms(std::move(terms));
}

}  // namespace interlace
