#pragma once

#include "interlace/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interlace {

/// Indeterminate kinds. The per-vertex kinds carry a vertex name.
enum class VarKind : std::uint8_t { y = 0, x = 1, u = 2, v = 3, phi = 4, chi = 5, psi = 6, x_of = 7, y_of = 8 };

/// An indeterminate. Per-vertex names are interned process-wide, so a VarId
/// is a single word and compares in O(1). The built-in ordering is an
/// internal total order (globals first); use canonical_less() for the
/// printed order.
class VarId {
public:
    static VarId y() noexcept { return VarId(VarKind::y, 0); }
    static VarId x() noexcept { return VarId(VarKind::x, 0); }
    static VarId u() noexcept { return VarId(VarKind::u, 0); }
    static VarId v() noexcept { return VarId(VarKind::v, 0); }
    static VarId phi(std::string_view vertex) { return of(VarKind::phi, vertex); }
    static VarId chi(std::string_view vertex) { return of(VarKind::chi, vertex); }
    static VarId psi(std::string_view vertex) { return of(VarKind::psi, vertex); }
    static VarId x_of(std::string_view vertex) { return of(VarKind::x_of, vertex); }
    static VarId y_of(std::string_view vertex) { return of(VarKind::y_of, vertex); }
    static VarId of(VarKind kind, std::string_view vertex);

    /// Parses "y", "x", "u", "v", "phi_<name>", "chi_<name>", "psi_<name>",
    /// "x_<name>", "y_<name>". Throws ParseError.
    static VarId parse(std::string_view name);

    VarKind kind() const noexcept { return static_cast<VarKind>(packed_ & 0xFF); }
    bool per_vertex() const noexcept { return kind() >= VarKind::phi; }
    /// Empty for global indeterminates.
    const std::string& vertex() const;
    std::string name() const;

    std::uint64_t packed() const noexcept { return packed_; }

    friend bool operator==(VarId, VarId) = default;
    friend auto operator<=>(VarId a, VarId b) noexcept { return a.packed_ <=> b.packed_; }

private:
    VarId(VarKind kind, std::uint32_t symbol) noexcept
        : packed_((static_cast<std::uint64_t>(symbol) << 8) | static_cast<std::uint64_t>(kind)) {}
    std::uint64_t packed_;
};

/// Printed order: y < x < u < v < per-vertex variables by (vertex name, kind
/// with phi < chi < psi < x < y).
bool canonical_less(VarId a, VarId b);

/// Product of indeterminate powers, factors sorted by VarId, exponents > 0.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(VarId v, std::uint32_t exponent = 1);
    /// Factors in any order; duplicates are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint32_t degree() const noexcept;
    std::uint32_t exponent(VarId v) const noexcept;
    /// Copy without the factor on `v`.
    Monomial without(VarId v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept sorted by monomial with no zero
/// coefficients, so structural equality is polynomial equality.
class MPoly {
public:
    struct Term {
        Monomial monomial;
        BigInt coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    MPoly() = default;
    MPoly(long value);  // NOLINT(google-explicit-constructor): ring literal
    MPoly(const BigInt& value);  // NOLINT(google-explicit-constructor)
    MPoly(VarId v);  // NOLINT(google-explicit-constructor)
    MPoly(const Monomial& m, const BigInt& coef);

    static MPoly zero() { return {}; }
    static MPoly one() { return MPoly(1L); }
    /// Takes arbitrary terms; sorts and combines them.
    static MPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero when absent).
    BigInt constant() const;
    std::uint32_t degree_in(VarId v) const noexcept;
    std::uint32_t total_degree() const noexcept;
    /// Coefficient of the exact monomial m.
    BigInt coefficient(const Monomial& m) const;
    std::vector<VarId> variables() const;

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly& operator*=(const MPoly& other);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    std::vector<Term> terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// Replaces every bound variable by its image. Unbound variables stay.
MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& bindings);

/// Full evaluation over the rationals. Throws PreconditionError naming the
/// first unbound variable.
Rational evaluate(const MPoly& p, const std::map<VarId, Rational>& bindings);

/// Result of substituting var -> numerator/denominator with denominators
/// cleared: value == numerator / denominator^exponent.
struct ClearedSubstitution {
    MPoly numerator;
    unsigned exponent = 0;
};

/// Substitutes var -> num/den and multiplies through by den^d, where d is
/// the degree of p in var.
ClearedSubstitution substitute_ratio(const MPoly& p, VarId var, const MPoly& num, const MPoly& den);

/// Unique polynomial in `var` of degree <= degree_bound through the points.
/// Needs at least degree_bound+1 points with distinct abscissae; extra
/// points must agree with the fitted polynomial. Throws PreconditionError on
/// duplicates/too few points/inconsistent extras, and Error when a
/// coefficient is not an integer.
MPoly interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& points, std::size_t degree_bound,
                             VarId var = VarId::y());

/// Graded-lexicographic text: "y^2 + 2*y", "phi_a*chi_b - 3".
std::string to_string(const MPoly& p);
/// Inverse of to_string; also accepts parentheses and general sums,
/// products and powers. Throws ParseError with a 1-based column.
MPoly parse_poly(std::string_view text);

/// {"terms":[{"coef":2,"pows":{"y":1}}]}; coefficients beyond 64 bits are
/// emitted as decimal strings.
std::string to_json_string(const MPoly& p);
MPoly parse_poly_json(std::string_view json_text);

}  // namespace interlace
