#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "csf/partition.hpp"
#include "csf/scalar.hpp"

namespace csf {

enum class Basis { star, power };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// A homogeneous symmetric function of degree n, stored as a sparse map
/// from partitions of n to exact rational coefficients in one of two
/// multiplicative bases. Zero coefficients are never stored; iteration is in
/// increasing lexicographic order.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    SymFunc(Basis basis, int degree);

    static SymFunc monomial(Basis basis, const Partition& lambda, const Rational& coeff = 1);
    /// The degree-0 unit 1 = b_().
    static SymFunc unit(Basis basis);

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Partition& lambda) const;

    /// Adds `coeff` to the coefficient of `lambda`; throws
    /// `std::invalid_argument` if lambda is not a partition of the degree.
    void add_term(const Partition& lambda, const Rational& coeff);

    bool is_integral() const;

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    void check_compatible(const SymFunc& other, const char* op) const;

    Basis basis_;
    int degree_;
    Terms terms_;
};

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc subtract(const SymFunc& f, const SymFunc& g);
SymFunc scale(const SymFunc& f, const Rational& c);
bool equals(const SymFunc& f, const SymFunc& g);

inline SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }
inline SymFunc operator-(const SymFunc& f, const SymFunc& g) { return subtract(f, g); }

/// Product in a multiplicative basis: b_lambda * b_mu = b_(lambda ∪ mu).
/// Throws on mixed bases.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return multiply(f, g); }

/// Power-sum expansion of the star st_k:
///   sum_{r=0}^{k-1} (-1)^r C(k-1, r) p_(r+1, 1^(k-r-1)).
SymFunc star_monomial_to_power(int k);

/// Star basis to power-sum basis.
SymFunc to_power(const SymFunc& f);

/// Power-sum basis to star basis, by an exact rational solve against the
/// (cached, per-degree) star-to-power change-of-basis matrix.
SymFunc to_star(const SymFunc& f);

/// Principal specialization x_1 = ... = x_k = 1, x_{k+1} = ... = 0: in the
/// power basis p_lambda -> k^length(lambda), in the star basis
/// st_lambda -> prod k (k-1)^(lambda_i - 1). Throws if the result is not an
/// integer.
Integer evaluate_at_ones(const SymFunc& f, int k);

/// Text form with terms in increasing lexicographic order, e.g.
/// "-st(4,2,1) + st(4,3) - 2 st(6,1) + st(7)"; power basis uses "p(...)".
/// The zero function renders as "0".
std::string to_text(const SymFunc& f);

/// Parses the text form. The degree is taken from the terms; pass `degree`
/// to pin it (required for "0").
SymFunc parse_text(std::string_view text, int degree = -1);

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

/// {"basis":"star","n":7,"terms":[{"partition":[4,2,1],"coeff":"-1"},...]}
void to_json(nlohmann::json& j, const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

}  // namespace csf
