#include "interlace/poly.hpp"

#include "interlace/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace interlace {

namespace {

/// Process-wide interned vertex names. Symbol 0 is the empty name used by
/// the global indeterminates.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    std::uint32_t intern(std::string_view name) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto [it, inserted] = ids_.emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
        if (inserted) names_.emplace_back(name);
        return it->second;
    }

    const std::string& name(std::uint32_t id) const {
        std::shared_lock lock(mutex_);
        return names_[id];
    }

private:
    SymbolTable() {
        names_.emplace_back();
        ids_.emplace(std::string(), 0);
    }

    mutable std::shared_mutex mutex_;
    std::deque<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

constexpr std::string_view kind_prefix(VarKind k) {
    switch (k) {
        case VarKind::y: return "y";
        case VarKind::x: return "x";
        case VarKind::u: return "u";
        case VarKind::v: return "v";
        case VarKind::phi: return "phi";
        case VarKind::chi: return "chi";
        case VarKind::psi: return "psi";
        case VarKind::x_of: return "x";
        case VarKind::y_of: return "y";
    }
    return "?";
}

bool valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '.';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

VarId VarId::of(VarKind kind, std::string_view vertex) {
    if (kind < VarKind::phi) return VarId(kind, 0);
    if (!valid_vertex_name(vertex))
        throw PreconditionError("invalid vertex name '" + std::string(vertex) +
                                "' (allowed: letters, digits, '_', '.')");
    return VarId(kind, SymbolTable::instance().intern(vertex));
}

VarId VarId::parse(std::string_view name) {
    if (name == "y") return y();
    if (name == "x") return x();
    if (name == "u") return u();
    if (name == "v") return v();
    const auto us = name.find('_');
    if (us != std::string_view::npos && us + 1 < name.size()) {
        const auto prefix = name.substr(0, us);
        const auto rest = name.substr(us + 1);
        if (valid_vertex_name(rest)) {
            if (prefix == "phi") return phi(rest);
            if (prefix == "chi") return chi(rest);
            if (prefix == "psi") return psi(rest);
            if (prefix == "x") return x_of(rest);
            if (prefix == "y") return y_of(rest);
        }
    }
    throw ParseError("unknown indeterminate '" + std::string(name) + "'");
}

const std::string& VarId::vertex() const { return SymbolTable::instance().name(static_cast<std::uint32_t>(packed_ >> 8)); }

std::string VarId::name() const {
    std::string out(kind_prefix(kind()));
    if (per_vertex()) {
        out.push_back('_');
        out += vertex();
    }
    return out;
}

bool canonical_less(VarId a, VarId b) {
    if (a.per_vertex() != b.per_vertex()) return !a.per_vertex();
    if (!a.per_vertex()) return a.kind() < b.kind();
    if (a.packed() >> 8 != b.packed() >> 8) return a.vertex() < b.vertex();
    return a.kind() < b.kind();
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, std::uint32_t exponent) {
    if (exponent != 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& f : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == f.first) m.factors_.back().second += f.second;
        else m.factors_.push_back(f);
    }
    std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
    return m;
}

std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
    for (const auto& f : factors_)
        if (f.first == v) return f.second;
    return 0;
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const auto& f : factors_)
        if (f.first != v) m.factors_.push_back(f);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) out.factors_.push_back(*i++);
        else if (j->first < i->first) out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(long value) {
    if (value != 0) terms_.push_back({Monomial{}, BigInt(value)});
}

MPoly::MPoly(const BigInt& value) {
    if (value != 0) terms_.push_back({Monomial{}, value});
}

MPoly::MPoly(VarId v) { terms_.push_back({Monomial(v), BigInt(1)}); }

MPoly::MPoly(const Monomial& m, const BigInt& coef) {
    if (coef != 0) terms_.push_back({m, coef});
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    MPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) p.terms_.back().coef += t.coef;
        else {
            if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    return p;
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

BigInt MPoly::constant() const {
    // Monomial{} sorts first.
    if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coef;
    return 0;
}

std::uint32_t MPoly::degree_in(VarId v) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
    return d;
}

std::uint32_t MPoly::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

BigInt MPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial < key; });
    if (it != terms_.end() && it->monomial == m) return it->coef;
    return 0;
}

std::vector<VarId> MPoly::variables() const {
    std::vector<VarId> out;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors()) out.push_back(f.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    if (&other == this) {
        const MPoly copy = other;
        return *this += copy;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        if (i->monomial < j->monomial) merged.push_back(std::move(*i++));
        else if (j->monomial < i->monomial) merged.push_back(*j++);
        else {
            BigInt c = i->coef + j->coef;
            if (c != 0) merged.push_back({std::move(i->monomial), std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
    merged.insert(merged.end(), j, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

MPoly& MPoly::operator-=(const MPoly& other) { return *this += -other; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    std::vector<MPoly::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, BigInt(s.coef * t.coef)});
    return MPoly::from_terms(std::move(products));
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly pow(const MPoly& base, unsigned exponent) {
    MPoly out = MPoly::one();
    MPoly b = base;
    while (exponent != 0) {
        if (exponent & 1U) out *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return out;
}

MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& bindings) {
    MPoly out;
    for (const auto& t : p.terms()) {
        MPoly term(Monomial{}, t.coef);
        std::vector<Monomial::Factor> kept;
        for (const auto& [var, e] : t.monomial.factors()) {
            if (auto it = bindings.find(var); it != bindings.end()) term *= pow(it->second, e);
            else kept.emplace_back(var, e);
        }
        term *= MPoly(Monomial::from_factors(std::move(kept)), BigInt(1));
        out += term;
    }
    return out;
}

Rational evaluate(const MPoly& p, const std::map<VarId, Rational>& bindings) {
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational term(t.coef);
        for (const auto& [var, e] : t.monomial.factors()) {
            auto it = bindings.find(var);
            if (it == bindings.end()) throw PreconditionError("evaluate: unbound variable " + var.name());
            term *= pow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

ClearedSubstitution substitute_ratio(const MPoly& p, VarId var, const MPoly& num, const MPoly& den) {
    const unsigned d = p.degree_in(var);
    std::vector<MPoly> num_pows{MPoly::one()}, den_pows{MPoly::one()};
    for (unsigned k = 1; k <= d; ++k) {
        num_pows.push_back(num_pows.back() * num);
        den_pows.push_back(den_pows.back() * den);
    }
    MPoly out;
    for (const auto& t : p.terms()) {
        const unsigned k = t.monomial.exponent(var);
        out += MPoly(t.monomial.without(var), t.coef) * num_pows[k] * den_pows[d - k];
    }
    return {std::move(out), d};
}

MPoly interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& points, std::size_t degree_bound,
                             VarId var) {
    const std::size_t m = degree_bound + 1;
    if (points.size() < m)
        throw PreconditionError("interpolate: need " + std::to_string(m) + " points, got " +
                                std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw PreconditionError("interpolate: duplicate abscissa " + to_string(points[i].first));

    // Newton divided differences on the first m points.
    std::vector<Rational> xs(m), dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = points[i].first;
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // Expand to the monomial basis by Horner on the Newton form.
    std::vector<Rational> coef{dd[m - 1]};
    for (std::size_t k = m - 1; k-- > 0;) {
        // coef := coef * (t - xs[k]) + dd[k]
        std::vector<Rational> next(coef.size() + 1, Rational(0));
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] += coef[i];
            next[i] -= coef[i] * xs[k];
        }
        next[0] += dd[k];
        coef = std::move(next);
    }
    for (std::size_t extra = m; extra < points.size(); ++extra) {
        Rational value(0);
        for (std::size_t i = coef.size(); i-- > 0;) value = value * points[extra].first + coef[i];
        if (value != points[extra].second)
            throw PreconditionError("interpolate: point " + std::to_string(extra) +
                                    " disagrees with the degree-bounded fit");
    }
    std::vector<MPoly::Term> terms;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        coef[i].canonicalize();
        if (coef[i].get_den() != 1)
            throw Error("interpolate: non-integer coefficient " + to_string(coef[i]) + " at degree " +
                        std::to_string(i));
        if (coef[i] != 0)
            terms.push_back({Monomial(var, static_cast<std::uint32_t>(i)), BigInt(coef[i].get_num())});
    }
    return MPoly::from_terms(std::move(terms));
}

}  // namespace interlace
