#include "symprod/sym.hpp"

#include "symprod/errors.hpp"
#include "symprod/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace symprod {

std::size_t SymBasisIndex::arity() const
{
    std::size_t k = odd.size() + pad;
    for (const auto& [j, m] : even)
        k += m;
    return k;
}

Slots SymBasisIndex::leading_slots() const
{
    Slots s(odd.begin(), odd.end());
    for (const auto& [j, m] : even)
        s.insert(s.end(), m, j);
    s.insert(s.end(), pad, kUnit);
    return s;
}

Integer SymBasisIndex::multiplicity_factorial() const
{
    Integer f = 1;
    for (const auto& [j, m] : even)
        f *= factorial(m);
    return f;
}

unsigned degree(const RingPresentation& p, const SymBasisIndex& idx)
{
    unsigned d = 0;
    for (BasisId i : idx.odd)
        d += p.degree(i);
    for (const auto& [j, m] : idx.even)
        d += m * p.degree(j);
    return d;
}

void check_index(const RingPresentation& p, std::size_t n, const SymBasisIndex& idx)
{
    if (idx.arity() != n)
        throw MalformedElement("basis index has arity " + std::to_string(idx.arity()) + ", expected " +
                               std::to_string(n));
    for (std::size_t i = 0; i < idx.odd.size(); ++i) {
        if (idx.odd[i] == kUnit || idx.odd[i] > p.generator_count() || !p.odd(idx.odd[i]))
            throw MalformedElement("odd part references a non-odd generator");
        if (i > 0 && idx.odd[i - 1] >= idx.odd[i])
            throw MalformedElement("odd indices must be strictly increasing");
    }
    for (std::size_t i = 0; i < idx.even.size(); ++i) {
        auto [j, m] = idx.even[i];
        if (j == kUnit || j > p.generator_count() || p.odd(j))
            throw MalformedElement("even part references a non-even generator");
        if (m == 0)
            throw MalformedElement("even multiplicities must be positive");
        if (i > 0 && idx.even[i - 1].first >= j)
            throw MalformedElement("even indices must be strictly increasing");
    }
}

SymBasisIndex index_of_arrangement(const RingPresentation& p, const Slots& sorted)
{
    SymBasisIndex idx;
    for (BasisId id : sorted) {
        if (id == kUnit)
            ++idx.pad;
        else if (p.odd(id))
            idx.odd.push_back(id);
        else if (!idx.even.empty() && idx.even.back().first == id)
            ++idx.even.back().second;
        else
            idx.even.emplace_back(id, 1);
    }
    return idx;
}

std::string to_string(const RingPresentation& p, const SymBasisIndex& idx)
{
    std::string s = "chi(";
    for (std::size_t i = 0; i < idx.odd.size(); ++i)
        s += (i ? "," : "") + p.name(idx.odd[i]);
    s += "|";
    for (std::size_t i = 0; i < idx.even.size(); ++i) {
        s += (i ? "," : "") + p.name(idx.even[i].first);
        if (idx.even[i].second > 1)
            s += "^" + std::to_string(idx.even[i].second);
    }
    return s + ";r=" + std::to_string(idx.pad) + ")";
}

std::vector<SymBasisIndex> enumerate_basis(const RingPresentation& p, std::size_t n,
                                           std::optional<unsigned> degree_filter,
                                           std::optional<unsigned> max_degree)
{
    std::optional<unsigned> bound = max_degree;
    if (degree_filter && (!bound || *degree_filter < *bound))
        bound = degree_filter;

    const auto odds = p.odd_generators();
    const auto evens = p.even_generators();
    std::vector<SymBasisIndex> out;
    SymBasisIndex cur;

    auto even_rec = [&](auto&& self, std::size_t from, std::size_t used, unsigned deg) -> void {
        if (cur.odd.size() + cur.even.size() >= 1 && (!degree_filter || deg == *degree_filter)) {
            SymBasisIndex idx = cur;
            idx.pad = static_cast<unsigned>(n - used);
            out.push_back(std::move(idx));
        }
        for (std::size_t e = from; e < evens.size(); ++e) {
            unsigned d = p.degree(evens[e]);
            for (unsigned m = 1; used + m <= n; ++m) {
                if (bound && deg + m * d > *bound)
                    break;
                cur.even.emplace_back(evens[e], m);
                self(self, e + 1, used + m, deg + m * d);
                cur.even.pop_back();
            }
        }
    };
    auto odd_rec = [&](auto&& self, std::size_t from, unsigned deg) -> void {
        even_rec(even_rec, 0, cur.odd.size(), deg);
        if (cur.odd.size() == n)
            return;
        for (std::size_t o = from; o < odds.size(); ++o) {
            unsigned d = p.degree(odds[o]);
            if (bound && deg + d > *bound)
                continue;
            cur.odd.push_back(odds[o]);
            self(self, o + 1, deg + d);
            cur.odd.pop_back();
        }
    };
    odd_rec(odd_rec, 0, 0);

    std::vector<std::pair<unsigned, SymBasisIndex>> keyed;
    keyed.reserve(out.size());
    for (auto& idx : out)
        keyed.emplace_back(degree(p, idx), std::move(idx));
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [d, idx] : keyed)
        out.push_back(std::move(idx));
    return out;
}

TensorElement realize(const RingPresentation& p, const SymBasisIndex& idx)
{
    TensorElement t = signed_orbit_sum(p, idx.leading_slots());
    t *= Rational(idx.multiplicity_factorial());
    return t;
}

TensorElement chi(const RingPresentation& p, std::size_t n, const std::vector<RingElement>& odd,
                  const std::vector<RingElement>& even)
{
    const std::size_t used = odd.size() + even.size();
    if (used > n)
        throw ArityMismatch("chi with more classes than tensor factors");
    std::vector<RingElement> factors(odd);
    factors.insert(factors.end(), even.begin(), even.end());
    factors.resize(n, RingElement::basis(kUnit));
    Rational scale(factorial(n), factorial(n - used));
    scale.canonicalize();
    return symmetrize(p, tensor_of(factors)) * scale;
}

DualElement dual_element(const RingPresentation& p, const SymBasisIndex& idx)
{
    (void)p;
    Rational c(Integer(1), idx.multiplicity_factorial());
    c.canonicalize();
    return {c, idx.leading_slots()};
}

Rational pair(const RingPresentation& p, const TensorElement& t, const DualElement& c)
{
    Rational coeff = t.coefficient(c.slots);
    if (coeff == 0)
        return 0;
    unsigned parity = 0;
    unsigned before = 0;
    for (BasisId id : c.slots) {
        parity += before * p.degree(id);
        before += p.degree(id);
    }
    Rational v = coeff * c.coeff;
    return parity % 2 ? Rational(-v) : v;
}

Rational pair(const RingPresentation& p, const SymBasisIndex& idx, const DualElement& c)
{
    return pair(p, realize(p, idx), c);
}

namespace {

std::vector<Slots> orbit_representatives(const RingPresentation& p, const TensorElement& t)
{
    std::vector<Slots> reps;
    for (const auto& [slots, c] : t.terms()) {
        Arrangement a = canonical_arrangement(p, slots);
        if (!a.repeated_odd)
            reps.push_back(std::move(a.slots));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

void check_residual(const RingPresentation& p, const TensorElement& t, const TensorElement& residual)
{
    if (residual.is_zero())
        return;
    if (!is_invariant(p, t))
        throw NotSymmetric("tensor is not invariant under the symmetric group");
    throw InternalInconsistency("nonzero residual after expanding an invariant tensor");
}

}  // namespace

SymCombination expand(const RingPresentation& p, const TensorElement& t)
{
    SymCombination out;
    TensorElement residual = t;
    for (const Slots& w : orbit_representatives(p, t)) {
        Rational lead = t.coefficient(w);
        if (lead == 0)
            continue;
        SymBasisIndex idx = index_of_arrangement(p, w);
        Rational c = lead / Rational(idx.multiplicity_factorial());
        residual -= realize(p, idx) * c;
        out.emplace(std::move(idx), c);
    }
    check_residual(p, t, residual);
    return out;
}

SymCombination expand_by_pairing(const RingPresentation& p, const TensorElement& t)
{
    SymCombination out;
    TensorElement residual = t;
    for (const Slots& w : orbit_representatives(p, t)) {
        SymBasisIndex idx = index_of_arrangement(p, w);
        DualElement c = dual_element(p, idx);
        Rational diagonal = pair(p, idx, c);
        Rational v = pair(p, t, c) / diagonal;
        if (v == 0)
            continue;
        residual -= realize(p, idx) * v;
        out.emplace(std::move(idx), v);
    }
    check_residual(p, t, residual);
    return out;
}

TensorElement evaluate(const RingPresentation& p, std::size_t n, const SymCombination& combo)
{
    TensorElement out(n);
    for (const auto& [idx, c] : combo)
        out += realize(p, idx) * c;
    return out;
}

std::optional<std::size_t> StructureTable::position(const SymBasisIndex& idx) const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == idx)
            return i;
    return std::nullopt;
}

SymCombination StructureTable::multiply(const SymCombination& a, const SymCombination& b) const
{
    std::map<SymBasisIndex, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i)
        pos.emplace(basis[i], i);
    auto locate = [&](const SymBasisIndex& idx) {
        auto it = pos.find(idx);
        if (it == pos.end())
            throw std::out_of_range("basis index outside the structure table");
        return it->second;
    };
    SymCombination out;
    auto accumulate = [&](const SymBasisIndex& idx, const Rational& c) {
        if (c == 0)
            return;
        Rational& slot = out[idx];
        slot += c;
        if (slot == 0)
            out.erase(idx);
    };
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            if (x.is_unit()) {
                accumulate(y, cx * cy);
                continue;
            }
            if (y.is_unit()) {
                accumulate(x, cx * cy);
                continue;
            }
            auto it = products.find({locate(x), locate(y)});
            if (it == products.end())
                throw std::out_of_range("product exceeds the degree bound of the structure table");
            for (const auto& [k, nu] : it->second)
                accumulate(basis[k], cx * cy * Rational(nu));
        }
    return out;
}

StructureTable structure_constants(const RingPresentation& p, std::size_t n, unsigned up_to_degree,
                                   const ComputeOptions& options)
{
    StructureTable table;
    table.n = n;
    table.max_degree = up_to_degree;
    table.basis = enumerate_basis(p, n, std::nullopt, up_to_degree);

    std::map<SymBasisIndex, std::size_t> pos;
    std::vector<unsigned> degs;
    std::vector<TensorElement> realized;
    for (std::size_t i = 0; i < table.basis.size(); ++i) {
        pos.emplace(table.basis[i], i);
        degs.push_back(degree(p, table.basis[i]));
        realized.push_back(realize(p, table.basis[i]));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < table.basis.size(); ++i)
        for (std::size_t j = 0; j < table.basis.size(); ++j)
            if (degs[i] + degs[j] <= up_to_degree)
                pairs.emplace_back(i, j);

    std::vector<std::vector<std::pair<std::size_t, Integer>>> results(pairs.size());
    parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
        auto [i, j] = pairs[k];
        if (options.max_tensor_terms &&
            realized[i].terms().size() * realized[j].terms().size() > options.max_tensor_terms)
            throw ResourceLimitExceeded("product of " + to_string(p, table.basis[i]) + " and " +
                                        to_string(p, table.basis[j]) + " exceeds the tensor term bound");
        TensorElement prod = tensor_multiply(p, realized[i], realized[j]);
        for (const auto& [idx, c] : expand(p, prod)) {
            if (!is_integer(c))
                throw TheoremViolation("non-integral structure constant " + to_string(c) + " for " +
                                       to_string(p, table.basis[i]) + " * " + to_string(p, table.basis[j]) +
                                       " at " + to_string(p, idx));
            auto it = pos.find(idx);
            if (it == pos.end())
                throw InternalInconsistency("product expands outside the enumerated basis");
            results[k].emplace_back(it->second, c.get_num());
        }
        std::sort(results[k].begin(), results[k].end());
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
        table.products.emplace(pairs[k], std::move(results[k]));
    return table;
}

}  // namespace symprod
