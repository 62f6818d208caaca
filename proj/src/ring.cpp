#include "symprod/ring.hpp"

#include "symprod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symprod {

RingElement RingElement::basis(BasisId id, const Rational& coeff)
{
    RingElement e;
    e.add(id, coeff);
    return e;
}

void RingElement::add(BasisId id, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(id, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational RingElement::coefficient(BasisId id) const
{
    auto it = terms_.find(id);
    return it == terms_.end() ? Rational(0) : it->second;
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    for (const auto& [id, c] : other.terms_)
        add(id, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    for (const auto& [id, c] : other.terms_)
        add(id, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [id, c] : terms_)
        c *= scalar;
    return *this;
}

bool is_integral(const RingElement& a)
{
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [](const auto& t) { return is_integer(t.second); });
}

const Generator& RingPresentation::generator(BasisId id) const
{
    if (id == kUnit || id > generators_.size())
        throw MalformedElement("basis id " + std::to_string(id) + " is not a generator");
    return generators_[id - 1];
}

std::optional<BasisId> RingPresentation::find(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return static_cast<BasisId>(i + 1);
    return std::nullopt;
}

std::vector<BasisId> RingPresentation::odd_generators() const { return odd_; }
std::vector<BasisId> RingPresentation::even_generators() const { return even_; }

unsigned RingPresentation::parity_rank(BasisId id) const
{
    const auto& list = odd(id) ? odd_ : even_;
    auto it = std::find(list.begin(), list.end(), id);
    if (id == kUnit || it == list.end())
        throw MalformedElement("basis id " + std::to_string(id) + " is not a generator");
    return static_cast<unsigned>(it - list.begin()) + 1;
}

BasisId RingPresentation::odd_generator(unsigned rank) const
{
    if (rank == 0 || rank > odd_.size())
        throw MalformedElement("no odd generator with index " + std::to_string(rank));
    return odd_[rank - 1];
}

BasisId RingPresentation::even_generator(unsigned rank) const
{
    if (rank == 0 || rank > even_.size())
        throw MalformedElement("no even generator with index " + std::to_string(rank));
    return even_[rank - 1];
}

const RingElement& RingPresentation::product(BasisId a, BasisId b) const
{
    if (a >= basis_size() || b >= basis_size())
        throw MalformedElement("product references a basis id outside the presentation");
    return table_[a * basis_size() + b];
}

std::optional<unsigned> RingPresentation::homogeneous_degree(const RingElement& a) const
{
    std::optional<unsigned> deg;
    for (const auto& [id, c] : a.terms()) {
        unsigned d = degree(id);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

RingBuilder& RingBuilder::add_generator(std::string name, unsigned degree)
{
    generators_.push_back({std::move(name), degree});
    return *this;
}

RingBuilder& RingBuilder::set_product(std::string_view left, std::string_view right,
                                      std::vector<std::pair<std::string, Integer>> result)
{
    products_.push_back({std::string(left), std::string(right), std::move(result)});
    return *this;
}

RingPresentation RingBuilder::build() const
{
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty() || g.name == "1")
            throw MalformedElement("generator name '" + g.name + "' is reserved or empty");
        if (g.degree == 0)
            throw MalformedElement("generator '" + g.name + "' must have positive degree");
        if (!seen.insert(g.name).second)
            throw MalformedElement("duplicate generator '" + g.name + "'");
    }
    if (generators_.size() >= 0xFFFF)
        throw MalformedElement("too many generators");

    std::vector<std::size_t> order(generators_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = generators_[a];
        const auto& gb = generators_[b];
        if (ga.odd() != gb.odd())
            return ga.odd();
        return ga.degree < gb.degree;
    });

    RingPresentation p;
    for (std::size_t i : order)
        p.generators_.push_back(generators_[i]);
    for (std::size_t i = 0; i < p.generators_.size(); ++i)
        (p.generators_[i].odd() ? p.odd_ : p.even_).push_back(static_cast<BasisId>(i + 1));

    const std::size_t size = p.basis_size();
    p.table_.assign(size * size, RingElement{});
    for (std::size_t i = 0; i < size; ++i) {
        p.table_[i] = RingElement::basis(static_cast<BasisId>(i));
        p.table_[i * size] = RingElement::basis(static_cast<BasisId>(i));
    }

    auto lookup = [&](const std::string& name) {
        auto id = p.find(name);
        if (!id)
            throw MalformedElement("product references unknown generator '" + name + "'");
        return *id;
    };
    std::set<std::pair<BasisId, BasisId>> defined;
    for (const auto& e : products_) {
        BasisId l = lookup(e.left);
        BasisId r = lookup(e.right);
        if (!defined.insert({l, r}).second)
            throw MalformedElement("duplicate product " + e.left + "*" + e.right);
        RingElement value;
        for (const auto& [gen, coeff] : e.result)
            value.add(lookup(gen), Rational(coeff));
        p.table_[l * size + r] = std::move(value);
    }
    return p;
}

ValidationReport validate(const RingPresentation& p)
{
    const auto n = static_cast<BasisId>(p.generator_count());
    auto fail = [](std::string inv, std::vector<BasisId> w, std::string msg) {
        return ValidationReport{false, std::move(inv), std::move(w), std::move(msg)};
    };
    for (BasisId i = 1; i <= n; ++i)
        for (BasisId j = 1; j <= n; ++j) {
            const RingElement& ij = p.product(i, j);
            for (const auto& [k, c] : ij.terms())
                if (p.degree(k) != p.degree(i) + p.degree(j))
                    return fail("degree additivity", {i, j},
                                p.name(i) + "*" + p.name(j) + " contains " + p.name(k) +
                                    " of the wrong degree");
            if (!is_integral(ij))
                return fail("integrality", {i, j}, p.name(i) + "*" + p.name(j) + " has non-integer coefficients");
        }
    for (BasisId i = 1; i <= n; ++i)
        if (p.odd(i) && !p.product(i, i).is_zero())
            return fail("odd squares vanish", {i, i}, p.name(i) + " is odd but its square is nonzero");
    for (BasisId i = 1; i <= n; ++i)
        for (BasisId j = 1; j <= n; ++j) {
            int sign = (p.odd(i) && p.odd(j)) ? -1 : 1;
            if (p.product(j, i) != p.product(i, j) * Rational(sign))
                return fail("graded commutativity", {i, j},
                            p.name(j) + "*" + p.name(i) + " != (-1)^{|i||j|} " + p.name(i) + "*" + p.name(j));
        }
    for (BasisId i = 1; i <= n; ++i)
        for (BasisId j = 1; j <= n; ++j)
            for (BasisId k = 1; k <= n; ++k) {
                RingElement left = multiply(p, p.product(i, j), RingElement::basis(k));
                RingElement right = multiply(p, RingElement::basis(i), p.product(j, k));
                if (left != right)
                    return fail("associativity", {i, j, k},
                                "(" + p.name(i) + "*" + p.name(j) + ")*" + p.name(k) + " != " + p.name(i) + "*(" +
                                    p.name(j) + "*" + p.name(k) + ")");
            }
    return {};
}

RingElement multiply(const RingPresentation& p, const RingElement& a, const RingElement& b)
{
    RingElement out;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) {
            const RingElement& ij = p.product(i, j);
            for (const auto& [k, ck] : ij.terms())
                out.add(k, ci * cj * ck);
        }
    return out;
}

}  // namespace symprod
