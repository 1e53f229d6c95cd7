#include "symforge/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symforge/detail/family_bijection.hpp"

namespace symforge {

std::string Atom::to_string() const
{
    switch (kind) {
    case AtomKind::feyn:
        return "x" + std::to_string(i);
    case AtomKind::leg:
        return "z" + std::to_string(i);
    case AtomKind::dot:
        return "sp(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case AtomKind::mass:
        return "msq" + std::to_string(i);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Atom a, std::uint32_t power)
{
    if (power > 0) {
        factors_.emplace_back(a, power);
        degree_ = power;
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& l, const Factor& r) { return l.first < r.first; });
    Monomial m;
    for (const auto& [atom, power] : factors) {
        if (power == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == atom) {
            m.factors_.back().second += power;
        } else {
            m.factors_.emplace_back(atom, power);
        }
        m.degree_ += power;
    }
    return m;
}

std::uint32_t Monomial::degree_in(AtomKind kind) const
{
    std::uint32_t d = 0;
    for (const auto& [atom, power] : factors_) {
        if (atom.kind == kind) {
            d += power;
        }
    }
    return d;
}

std::uint32_t Monomial::exponent(Atom a) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), a,
                               [](const Factor& f, const Atom& x) { return f.first < x; });
    return it != factors_.end() && it->first == a ? it->second : 0;
}

std::pair<Monomial, Monomial> Monomial::split_feyn() const
{
    Monomial feyn;
    Monomial rest;
    for (const auto& f : factors_) {
        Monomial& target = f.first.is_feyn() ? feyn : rest;
        target.factors_.push_back(f);
        target.degree_ += f.second;
    }
    return {std::move(feyn), std::move(rest)};
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const
{
    Monomial q;
    auto it = factors_.begin();
    for (const auto& [atom, power] : divisor.factors_) {
        while (it != factors_.end() && it->first < atom) {
            q.factors_.push_back(*it++);
        }
        if (it == factors_.end() || it->first != atom || it->second < power) {
            return std::nullopt;
        }
        if (it->second > power) {
            q.factors_.emplace_back(atom, it->second - power);
        }
        ++it;
    }
    q.factors_.insert(q.factors_.end(), it, factors_.end());
    q.degree_ = degree_ - divisor.degree_;
    return q;
}

std::string Monomial::to_string() const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [atom, power] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += atom.to_string();
        if (power > 1) {
            out += '^' + std::to_string(power);
        }
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first < ib->first) {
            m.factors_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            m.factors_.push_back(*ib++);
        } else {
            m.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    m.factors_.insert(m.factors_.end(), ia, a.factors_.end());
    m.factors_.insert(m.factors_.end(), ib, b.factors_.end());
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    // Same degree: the first atom (in atom order) where the exponents differ
    // decides; the larger exponent comes first.
    const auto fa = a.factors();
    const auto fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) {
                return fa[i].second > fb[j].second;
            }
            ++i;
            ++j;
        } else {
            return fa[i].first < fb[j].first;
        }
    }
    return i < fa.size() && j == fb.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c)
{
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

Poly::Poly(Atom a) { terms_.emplace(Monomial(a), Integer(1)); }

Poly::Poly(const Monomial& m, const Integer& c)
{
    if (c != 0) {
        terms_.emplace(m, c);
    }
}

Poly::Poly(Terms terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

std::uint32_t Poly::degree() const
{
    // Terms are graded, so the leading term has the largest degree.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Integer& c)
{
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Poly& Poly::operator+=(const Poly& b)
{
    for (const auto& [m, c] : b.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& b)
{
    for (const auto& [m, c] : b.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Poly& Poly::operator*=(const Poly& b)
{
    *this = *this * b;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Poly operator*(const Integer& c, const Poly& p)
{
    if (c == 0) {
        return Poly{};
    }
    Poly out = p;
    for (auto& [m, coeff] : out.terms_) {
        coeff *= c;
    }
    return out;
}

Poly operator-(const Poly& p) { return Integer(-1) * p; }

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Integer magnitude = abs(c);
        if (m.is_one()) {
            os << magnitude.get_str();
        } else if (magnitude == 1) {
            os << m.to_string();
        } else {
            os << magnitude.get_str() << '*' << m.to_string();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw PreconditionError("exact_div: division by the zero polynomial");
    }
    const auto& [lead_m, lead_c] = b.leading_term();
    Poly quotient;
    Poly remainder = a;
    while (!remainder.is_zero()) {
        const auto [rm, rc] = remainder.leading_term();
        auto qm = rm.divide(lead_m);
        if (!qm || mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()) == 0) {
            throw NotDivisible();
        }
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        const Poly step(*qm, qc);
        quotient += step;
        remainder -= step * b;
    }
    return quotient;
}

std::vector<Poly> grade_by_leg_degree(const Poly& w)
{
    std::vector<Poly::Terms> grades(1);
    for (const auto& [m, c] : w.terms()) {
        const auto k = m.degree_in(AtomKind::leg);
        if (grades.size() <= k) {
            grades.resize(k + 1);
        }
        grades[k].emplace(m, c);
    }
    std::vector<Poly> out;
    out.reserve(grades.size());
    for (auto& g : grades) {
        out.emplace_back(std::move(g));
    }
    return out;
}

Poly reciprocal_transform(const Poly& p, std::span<const std::uint32_t> vars)
{
    const std::set<std::uint32_t> domain(vars.begin(), vars.end());
    Poly::Terms out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> factors;
        std::set<std::uint32_t> present;
        for (const auto& [atom, power] : m.factors()) {
            if (!atom.is_feyn()) {
                factors.emplace_back(atom, power);
                continue;
            }
            if (power > 1) {
                throw NotMultilinear("reciprocal_transform: " + atom.to_string() + " appears squared");
            }
            if (!domain.contains(atom.i)) {
                throw NotMultilinear("reciprocal_transform: " + atom.to_string() + " is outside the variable set");
            }
            present.insert(atom.i);
        }
        for (const auto v : domain) {
            if (!present.contains(v)) {
                factors.emplace_back(Atom::feyn(v), 1);
            }
        }
        // Distinct input monomials map to distinct outputs: the map is a bijection.
        out.emplace(Monomial::from_factors(std::move(factors)), c);
    }
    return Poly(std::move(out));
}

bool is_multilinear(const Poly& p, std::span<const std::uint32_t> vars)
{
    for (const auto& [m, c] : p.terms()) {
        for (const auto v : vars) {
            if (m.exponent(Atom::feyn(v)) > 1) {
                return false;
            }
        }
    }
    return true;
}

bool is_homogeneous(const Poly& p, std::span<const std::uint32_t> vars, std::uint32_t degree)
{
    const std::set<std::uint32_t> domain(vars.begin(), vars.end());
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t d = 0;
        for (const auto& [atom, power] : m.factors()) {
            if (atom.is_feyn() && domain.contains(atom.i)) {
                d += power;
            }
        }
        if (d != degree) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> feyn_variables(const Poly& p)
{
    std::set<std::uint32_t> vars;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [atom, power] : m.factors()) {
            if (atom.is_feyn()) {
                vars.insert(atom.i);
            }
        }
    }
    return {vars.begin(), vars.end()};
}

Poly substitute(const Poly& p, Atom a, const Poly& value)
{
    Poly out;
    std::vector<Poly> powers{Poly(1L)};
    for (const auto& [m, c] : p.terms()) {
        const auto e = m.exponent(a);
        if (e == 0) {
            out += Poly(m, c);
            continue;
        }
        while (powers.size() <= e) {
            powers.push_back(powers.back() * value);
        }
        std::vector<Monomial::Factor> rest;
        for (const auto& f : m.factors()) {
            if (f.first != a) {
                rest.push_back(f);
            }
        }
        out += Poly(Monomial::from_factors(std::move(rest)), c) * powers[e];
    }
    return out;
}

Poly rename_variables(const Poly& p, const VariableMap& sigma)
{
    Poly::Terms out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> factors(m.factors().begin(), m.factors().end());
        for (auto& [atom, power] : factors) {
            if (atom.is_feyn()) {
                if (auto it = sigma.find(atom.i); it != sigma.end()) {
                    atom = Atom::feyn(it->second);
                }
            }
        }
        out.emplace(Monomial::from_factors(std::move(factors)), c);
    }
    return Poly(std::move(out));
}

std::optional<VariableMap> find_variable_isomorphism(const Poly& p, const Poly& q)
{
    // Everything except the Feynman part of a term is an invariant label.
    std::map<std::pair<Monomial, Integer>, std::uint32_t> labels;
    auto to_items = [&labels](const Poly& poly) {
        std::vector<detail::FamilyItem> items;
        for (const auto& [m, c] : poly.terms()) {
            auto [feyn, rest] = m.split_feyn();
            auto [it, inserted] = labels.try_emplace({rest, c}, static_cast<std::uint32_t>(labels.size()));
            detail::FamilyItem item;
            item.label = it->second;
            for (const auto& [atom, power] : feyn.factors()) {
                item.elements.emplace_back(atom.i, power);
            }
            items.push_back(std::move(item));
        }
        return items;
    };
    const auto items_p = to_items(p);
    const auto items_q = to_items(q);
    return detail::find_family_bijection(feyn_variables(p), items_p, feyn_variables(q), items_q);
}

std::string to_string(const VariableMap& sigma)
{
    std::string out = "{";
    for (const auto& [from, to] : sigma) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += "x" + std::to_string(from) + "->x" + std::to_string(to);
    }
    return out + "}";
}

}  // namespace symforge
