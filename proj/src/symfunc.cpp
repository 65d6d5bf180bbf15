#include "csf/symfunc.hpp"

#include <cctype>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace csf {

std::string_view basis_name(Basis b)
{
    return b == Basis::star ? "star" : "power";
}

Basis parse_basis(std::string_view name)
{
    if (name == "star")
        return Basis::star;
    if (name == "power")
        return Basis::power;
    throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree)
{
    if (degree < 0)
        throw std::invalid_argument("symmetric function degree must be non-negative");
}

SymFunc SymFunc::monomial(Basis basis, const Partition& lambda, const Rational& coeff)
{
    SymFunc f(basis, lambda.degree());
    f.add_term(lambda, coeff);
    return f;
}

SymFunc SymFunc::unit(Basis basis)
{
    return monomial(basis, Partition{});
}

Rational SymFunc::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff)
{
    if (lambda.degree() != degree_)
        throw std::invalid_argument("term " + lambda.to_string() + " does not have degree " +
                                    std::to_string(degree_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool SymFunc::is_integral() const
{
    for (const auto& [lambda, c] : terms_) {
        if (!csf::is_integral(c))
            return false;
    }
    return true;
}

void SymFunc::check_compatible(const SymFunc& other, const char* op) const
{
    if (basis_ != other.basis_)
        throw std::invalid_argument(std::string(op) + ": mixed bases");
    if (degree_ != other.degree_)
        throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                    std::to_string(degree_) + " vs " +
                                    std::to_string(other.degree_) + ")");
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    check_compatible(other, "add");
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    check_compatible(other, "subtract");
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, -c);
    return *this;
}

SymFunc add(const SymFunc& f, const SymFunc& g)
{
    SymFunc out = f;
    out += g;
    return out;
}

SymFunc subtract(const SymFunc& f, const SymFunc& g)
{
    SymFunc out = f;
    out -= g;
    return out;
}

SymFunc scale(const SymFunc& f, const Rational& c)
{
    SymFunc out(f.basis(), f.degree());
    for (const auto& [lambda, coeff] : f.terms())
        out.add_term(lambda, coeff * c);
    return out;
}

bool equals(const SymFunc& f, const SymFunc& g)
{
    return f == g;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
    if (f.basis() != g.basis())
        throw std::invalid_argument("multiply: mixed bases");
    SymFunc out(f.basis(), f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms())
            out.add_term(partition_union(a, b), ca * cb);
    }
    return out;
}

SymFunc star_monomial_to_power(int k)
{
    if (k < 1)
        throw std::invalid_argument("star order must be positive");
    SymFunc out(Basis::power, k);
    for (int r = 0; r < k; ++r) {
        std::vector<int> parts(k - r - 1, 1);
        parts.push_back(r + 1);
        Rational c = Rational(binomial(k - 1, r));
        out.add_term(Partition::from_multiset(std::move(parts)), r % 2 ? -c : c);
    }
    return out;
}

namespace {

/// Power-sum expansions of st_lambda, cached per lambda. Construction is
/// idempotent so concurrent first use only costs duplicate work under the
/// lock.
class StarColumns {
public:
    const SymFunc& column(const Partition& lambda)
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(lambda);
        if (it != cache_.end())
            return it->second;
        SymFunc col = SymFunc::unit(Basis::power);
        for (int part : lambda.parts())
            col = multiply(col, star_monomial_to_power(part));
        return cache_.emplace(lambda, std::move(col)).first->second;
    }

private:
    std::mutex mutex_;
    std::unordered_map<Partition, SymFunc> cache_;
};

StarColumns& star_columns()
{
    static StarColumns instance;
    return instance;
}

}  // namespace

SymFunc to_power(const SymFunc& f)
{
    if (f.basis() != Basis::star)
        throw std::invalid_argument("to_power expects a star-basis function");
    SymFunc out(Basis::power, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& [mu, d] : star_columns().column(lambda).terms())
            out.add_term(mu, c * d);
    }
    return out;
}

SymFunc to_star(const SymFunc& f)
{
    if (f.basis() != Basis::power)
        throw std::invalid_argument("to_star expects a power-basis function");
    // st_lambda = ±p_lambda + (terms p_nu, nu a proper refinement of lambda,
    // hence lexicographically smaller), so the change-of-basis matrix is
    // triangular with diagonal ±1 in lexicographic order. Peel off the
    // largest remaining power-sum term until nothing is left.
    SymFunc residual = f;
    SymFunc out(Basis::star, f.degree());
    while (!residual.is_zero()) {
        const auto& [lambda, c] = *residual.terms().rbegin();
        const Partition top = lambda;
        const SymFunc& col = star_columns().column(top);
        const Rational diag = col.coefficient(top);
        if (diag == 0)
            throw std::logic_error("to_star: singular change of basis at " + top.to_string());
        const Rational x = c / diag;
        out.add_term(top, x);
        residual -= scale(col, x);
        if (residual.coefficient(top) != 0)
            throw std::logic_error("to_star: elimination did not clear " + top.to_string());
    }
    return out;
}

Integer evaluate_at_ones(const SymFunc& f, int k)
{
    if (k < 1)
        throw std::invalid_argument("evaluate_at_ones requires k >= 1");
    using boost::multiprecision::pow;
    Rational total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        // p_lambda -> k^length; st_lambda -> prod k (k-1)^(part-1)
        Integer value = 1;
        if (f.basis() == Basis::power) {
            value = pow(Integer(k), static_cast<unsigned>(lambda.length()));
        } else {
            for (int part : lambda.parts())
                value *= k * pow(Integer(k - 1), static_cast<unsigned>(part - 1));
        }
        total += c * Rational(value);
    }
    return to_integer(total);
}

std::string to_text(const SymFunc& f)
{
    if (f.is_zero())
        return "0";
    const char* symbol = f.basis() == Basis::star ? "st" : "p";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += to_decimal(mag) + " ";
        out += symbol;
        out += lambda.to_string();
        first = false;
    }
    return out;
}

SymFunc parse_text(std::string_view text, int degree)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    }
    if (s == "0") {
        if (degree < 0)
            throw std::invalid_argument("parse_text: degree required for the zero function");
        return SymFunc(Basis::star, degree);
    }

    std::optional<Basis> basis;
    std::vector<std::pair<Partition, Rational>> terms;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_text: " + why + " at offset " + std::to_string(i) +
                                    " in '" + std::string(text) + "'");
    };
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        Rational coeff = start == i ? Rational(1) : parse_rational(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*')
            ++i;
        Basis term_basis;
        if (s.compare(i, 2, "st") == 0) {
            term_basis = Basis::star;
            i += 2;
        } else if (s.compare(i, 1, "p") == 0) {
            term_basis = Basis::power;
            i += 1;
        } else {
            fail("expected 'st(' or 'p('");
        }
        if (basis && *basis != term_basis)
            fail("mixed bases");
        basis = term_basis;
        auto close = s.find(')', i);
        if (i >= s.size() || s[i] != '(' || close == std::string::npos)
            fail("expected a parenthesized partition");
        terms.emplace_back(Partition::parse(s.substr(i, close - i + 1)), sign * coeff);
        i = close + 1;
    }
    if (terms.empty())
        fail("no terms");
    const int n = degree >= 0 ? degree : terms.front().first.degree();
    SymFunc out(*basis, n);
    for (const auto& [lambda, c] : terms)
        out.add_term(lambda, c);
    return out;
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f)
{
    return os << to_text(f);
}

void to_json(nlohmann::json& j, const SymFunc& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", lambda}, {"coeff", to_decimal(c)}});
    j = {{"basis", basis_name(f.basis())}, {"n", f.degree()}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("basis") || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("symmetric function JSON needs 'basis', 'n' and 'terms'");
    SymFunc out(parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        Partition lambda = term.at("partition").get<Partition>();
        const auto& coeff = term.at("coeff");
        Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                                       : Rational(coeff.get<long long>());
        out.add_term(lambda, c);
    }
    return out;
}

}  // namespace csf
