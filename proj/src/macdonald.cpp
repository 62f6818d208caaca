#include "symprod/macdonald.hpp"

#include "symprod/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace symprod::mac {

namespace {

std::uint64_t exterior_bits(const Monomial& m) { return std::uint64_t(m.x) | (std::uint64_t(m.xp) << 32); }

std::uint32_t full_mask(unsigned g) { return g >= 32 ? ~0u : ((1u << g) - 1); }

void check_g(unsigned g)
{
    if (g == 0 || g > 32)
        throw std::out_of_range("genus must be in 1..32");
}

}  // namespace

unsigned Monomial::max_index() const
{
    std::uint32_t bits = x | xp;
    return bits ? 32u - static_cast<unsigned>(std::countl_zero(bits)) : 0u;
}

int multiply(const Monomial& l, const Monomial& r, Monomial& out)
{
    const std::uint64_t lb = exterior_bits(l);
    std::uint64_t rb = exterior_bits(r);
    if (lb & rb)
        return 0;
    unsigned parity = 0;
    // Each variable of r moves left past the variables of l that come after it.
    while (rb) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(rb));
        std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t(0) << (bit + 1));
        parity += static_cast<unsigned>(std::popcount(lb & above));
        rb &= rb - 1;
    }
    out.x = l.x | r.x;
    out.xp = l.xp | r.xp;
    out.q = l.q + r.q;
    return parity % 2 ? -1 : 1;
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& coeff)
{
    Polynomial f;
    f.add(m, coeff);
    return f;
}

void Polynomial::add(const Monomial& m, const Integer& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const
{
    std::optional<unsigned> deg;
    for (const auto& [m, c] : terms_) {
        if (deg && *deg != m.degree())
            return std::nullopt;
        deg = m.degree();
    }
    return deg;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    Monomial m;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            int sign = multiply(ma, mb, m);
            if (sign)
                out.add(m, sign > 0 ? Integer(ca * cb) : Integer(-ca * cb));
        }
    return out;
}

Polynomial s_of_p(const Monomial& p)
{
    const std::uint32_t k = p.x & p.xp;
    Polynomial f = Polynomial::monomial({p.x & ~k, 0, 0}) * Polynomial::monomial({0, p.xp & ~k, 0});
    for (std::uint32_t bits = k; bits; bits &= bits - 1) {
        std::uint32_t bit = bits & (~bits + 1);
        Polynomial factor = Polynomial::monomial(Monomial::y_power(1));
        factor.add({bit, bit, 0}, -1);
        f = f * factor;
    }
    return f * Polynomial::monomial(Monomial::y_power(p.q));
}

std::string to_string(Mode mode)
{
    switch (mode) {
    case Mode::full:
        return "full";
    case Mode::stable:
        return "stable";
    case Mode::minimal_odd:
        return "minimal_odd";
    case Mode::minimal_even:
        return "minimal_even";
    }
    return "?";
}

Mode parse_mode(std::string_view text, unsigned n)
{
    if (text == "full")
        return Mode::full;
    if (text == "stable")
        return Mode::stable;
    if (text == "minimal_odd")
        return Mode::minimal_odd;
    if (text == "minimal_even")
        return Mode::minimal_even;
    if (text == "minimal")
        return n % 2 ? Mode::minimal_odd : Mode::minimal_even;
    throw InvalidMode("unknown generator mode '" + std::string(text) + "'");
}

std::vector<Monomial> weight_monomials(unsigned g, unsigned weight)
{
    check_g(g);
    std::vector<Monomial> out;
    const std::uint32_t all = full_mask(g);
    for (std::uint64_t s = 0; s <= all; ++s)
        for (std::uint64_t t = 0; t <= all; ++t) {
            unsigned ext = static_cast<unsigned>(std::popcount(s) + std::popcount(t));
            if (ext <= weight)
                out.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t), weight - ext});
        }
    std::sort(out.begin(), out.end());
    return out;
}

GeneratorSet generators(unsigned g, unsigned n, Mode mode)
{
    check_g(g);
    if (n < 2)
        throw InvalidMode("generator sets require n >= 2");
    GeneratorSet set{mode, g, n, {}};
    const std::uint32_t all = full_mask(g);
    switch (mode) {
    case Mode::full:
        for (const Monomial& p : weight_monomials(g, n + 1))
            set.polynomials.push_back(s_of_p(p));
        break;
    case Mode::stable:
        if (n + 1 < 2 * g)
            throw InvalidMode("stable mode requires n >= 2g-1");
        set.polynomials.push_back(s_of_p({all, all, n + 1 - 2 * g}));
        break;
    case Mode::minimal_odd:
    case Mode::minimal_even: {
        if (n + 2 > 2 * g)
            throw InvalidMode("minimal modes require n <= 2g-2");
        bool even = mode == Mode::minimal_even;
        if ((n % 2 == 0) != even)
            throw InvalidMode("minimal mode parity does not match n");
        for (const Monomial& p : weight_monomials(g, n + 1))
            if (p.q == 0)
                set.polynomials.push_back(s_of_p(p));
        if (even) {
            std::uint32_t first = (1u << (n / 2)) - 1;
            set.polynomials.push_back(s_of_p({first, first, 1}));
        }
        break;
    }
    }
    return set;
}

Polynomial normal_form(const Polynomial& f, unsigned g, unsigned n)
{
    if (!f.is_zero() && !f.homogeneous_degree())
        throw MalformedElement("normal_form needs a homogeneous polynomial");
    for (const auto& [m, c] : f.terms())
        if (m.max_index() > g)
            throw MalformedElement("monomial " + to_string(m) + " uses a variable beyond g=" + std::to_string(g));

    // Ordered by (weight, monomial) so the heaviest monomial is always last.
    std::map<std::pair<unsigned, Monomial>, Integer> work;
    for (const auto& [m, c] : f.terms())
        work.emplace(std::make_pair(m.weight(), m), c);
    auto add = [&](const Monomial& m, const Integer& c) {
        auto key = std::make_pair(m.weight(), m);
        auto [it, inserted] = work.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                work.erase(it);
        }
    };

    std::map<Monomial, Polynomial> cache;
    while (!work.empty()) {
        auto last = std::prev(work.end());
        if (last->first.first <= n)
            break;
        const Monomial p = last->first.second;
        const Integer c = last->second;
        work.erase(last);
        if (p.c() == 0)
            continue;  // S(P) = +-P lies in the ideal
        auto [it, fresh] = cache.try_emplace(p);
        if (fresh)
            it->second = s_of_p(p);
        const Polynomial& sp = it->second;
        const Integer eps = sp.coefficient(p);
        // P = eps * (S(P) - rest) with everything in rest strictly lighter.
        for (const auto& [m, cm] : sp.terms())
            if (!(m == p))
                add(m, -c * eps * cm);
    }

    Polynomial out;
    for (const auto& [key, c] : work)
        out.add(key.second, c);
    return out;
}

Polynomial multiply_nf(const Polynomial& f, const Polynomial& h, unsigned g, unsigned n)
{
    if (!f.is_zero() && !f.homogeneous_degree())
        throw MalformedElement("multiply_nf needs homogeneous factors");
    if (!h.is_zero() && !h.homogeneous_degree())
        throw MalformedElement("multiply_nf needs homogeneous factors");
    return normal_form(f * h, g, n);
}

Integer betti(unsigned g, unsigned n, unsigned k)
{
    if (k > 2 * n)
        throw std::out_of_range("Betti index " + std::to_string(k) + " exceeds 2n=" + std::to_string(2 * n));
    if (k > n)
        k = 2 * n - k;
    Integer b = 0;
    for (long j = k; j >= 0; j -= 2)
        b += binomial(2 * long(g), j);
    return b;
}

std::vector<Monomial> monomials_of_degree(unsigned g, unsigned s)
{
    check_g(g);
    std::vector<Monomial> out;
    const std::uint32_t all = full_mask(g);
    for (std::uint64_t x = 0; x <= all; ++x)
        for (std::uint64_t xp = 0; xp <= all; ++xp) {
            unsigned ext = static_cast<unsigned>(std::popcount(x) + std::popcount(xp));
            if (ext <= s && (s - ext) % 2 == 0)
                out.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(xp), (s - ext) / 2});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> quotient_basis(unsigned g, unsigned n, unsigned s)
{
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(g, s))
        if (m.weight() <= n)
            out.push_back(m);
    return out;
}

IntegerVector coordinates(const Polynomial& f, const std::vector<Monomial>& basis)
{
    IntegerVector v(basis.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw DimensionMismatch("monomial " + to_string(m) + " is outside the coordinate basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

IntegerMatrix ideal_lattice(const std::vector<Polynomial>& generators, unsigned g, unsigned s)
{
    const std::vector<Monomial> basis = monomials_of_degree(g, s);
    IntegerMatrix rows(0, basis.size());
    for (const Polynomial& r : generators) {
        auto d = r.homogeneous_degree();
        if (!d)
            throw MalformedElement("ideal generators must be homogeneous");
        if (*d > s)
            continue;
        for (const Monomial& m : monomials_of_degree(g, s - *d)) {
            Polynomial prod = Polynomial::monomial(m) * r;
            if (!prod.is_zero())
                rows.append_row(coordinates(prod, basis));
        }
    }
    return rows;
}

std::vector<DegreeTorsion> torsion_check(unsigned g, unsigned n, unsigned max_degree)
{
    const GeneratorSet full = generators(g, n, Mode::full);
    std::vector<DegreeTorsion> out;
    for (unsigned s = 0; s <= max_degree; ++s) {
        DegreeTorsion d;
        d.degree = s;
        IntegerMatrix lattice = ideal_lattice(full.polynomials, g, s);
        d.ambient_rank = lattice.cols();
        for (const Integer& inv : smith(lattice))
            if (inv != 0)
                d.invariants.push_back(inv);
        d.ideal_rank = d.invariants.size();
        d.torsion_free = std::all_of(d.invariants.begin(), d.invariants.end(), [](const Integer& v) { return v == 1; });
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<bool> ideals_equal_by_degree(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                         unsigned g, unsigned max_degree)
{
    std::vector<bool> out;
    for (unsigned s = 0; s <= max_degree; ++s)
        out.push_back(lattice_equal(ideal_lattice(a, g, s), ideal_lattice(b, g, s)));
    return out;
}

MinimalityReport verify_minimality(unsigned g, unsigned n)
{
    check_g(g);
    if (n < 2)
        throw std::out_of_range("verify_minimality requires n >= 2");
    MinimalityReport report;
    report.g = g;
    report.n = n;
    report.expected_q0 = binomial(2 * long(g), n + 1);
    const GeneratorSet full = generators(g, n, Mode::full);

    if (n + 1 >= 2 * g) {
        report.note = "n >= 2g-1: stable case, checked against the single stable generator";
        const GeneratorSet stable = generators(g, n, Mode::stable);
        report.equal_by_degree = ideals_equal_by_degree(stable.polynomials, full.polynomials, g, 2 * n);
        report.passed = std::all_of(report.equal_by_degree.begin(), report.equal_by_degree.end(), [](bool b) { return b; });
        return report;
    }
    report.applicable = true;

    std::vector<Polynomial> q0;
    for (const Monomial& p : weight_monomials(g, n + 1))
        if (p.q == 0)
            q0.push_back(s_of_p(p));
    report.q0_count = q0.size();
    const std::vector<Monomial> top = monomials_of_degree(g, n + 1);
    IntegerMatrix q0_rows(0, top.size());
    for (const Polynomial& r : q0)
        q0_rows.append_row(coordinates(r, top));
    report.q0_rank = rank(q0_rows);

    if (n % 2 == 0) {
        std::uint32_t first = (1u << (n / 2)) - 1;
        Polynomial extra = s_of_p({first, first, 1});
        IntegerMatrix sub = ideal_lattice(q0, g, n + 2);
        report.extra_outside = !lattice_membership(coordinates(extra, monomials_of_degree(g, n + 2)), sub);
    }

    const GeneratorSet minimal = generators(g, n, n % 2 ? Mode::minimal_odd : Mode::minimal_even);
    report.equal_by_degree = ideals_equal_by_degree(minimal.polynomials, full.polynomials, g, 2 * n);

    report.passed = report.q0_count == report.expected_q0 && report.q0_rank == report.expected_q0 &&
                    report.extra_outside.value_or(true) &&
                    std::all_of(report.equal_by_degree.begin(), report.equal_by_degree.end(), [](bool b) { return b; });
    return report;
}

}  // namespace symprod::mac
