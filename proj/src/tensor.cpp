#include "symprod/tensor.hpp"

#include "symprod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace symprod {

Permutation Permutation::identity(std::size_t n)
{
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
}

Permutation Permutation::from_images(std::vector<unsigned> images)
{
    std::vector<bool> hit(images.size(), false);
    for (unsigned v : images) {
        if (v >= images.size() || hit[v])
            throw ArityMismatch("permutation images are not a bijection");
        hit[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(std::size_t n, unsigned i, unsigned j)
{
    Permutation p = identity(n);
    std::swap(p.images_.at(i), p.images_.at(j));
    return p;
}

std::vector<Permutation> Permutation::all(std::size_t n)
{
    std::vector<Permutation> out;
    Permutation p = identity(n);
    do
        out.push_back(p);
    while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.images_.resize(images_.size());
    for (unsigned i = 0; i < images_.size(); ++i)
        p.images_[images_[i]] = i;
    return p;
}

Permutation operator*(const Permutation& s, const Permutation& t)
{
    if (s.size() != t.size())
        throw ArityMismatch("composing permutations of different sizes");
    Permutation p;
    p.images_.resize(t.size());
    for (unsigned i = 0; i < t.size(); ++i)
        p.images_[i] = s.images_[t.images_[i]];
    return p;
}

TensorElement TensorElement::elementary(Slots slots, const Rational& coeff)
{
    TensorElement t(slots.size());
    t.add(slots, coeff);
    return t;
}

void TensorElement::add(const Slots& slots, const Rational& coeff)
{
    if (slots.size() != arity_)
        throw ArityMismatch("elementary tensor of length " + std::to_string(slots.size()) +
                            " added to an element of arity " + std::to_string(arity_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(slots, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational TensorElement::coefficient(const Slots& slots) const
{
    auto it = terms_.find(slots);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TensorElement::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    if (other.arity_ != arity_ && !other.is_zero())
        throw ArityMismatch("adding tensors of different arity");
    for (const auto& [s, c] : other.terms_)
        add(s, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    if (other.arity_ != arity_ && !other.is_zero())
        throw ArityMismatch("subtracting tensors of different arity");
    for (const auto& [s, c] : other.terms_)
        add(s, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_)
        c *= scalar;
    return *this;
}

unsigned slots_degree(const RingPresentation& p, const Slots& slots)
{
    unsigned d = 0;
    for (BasisId id : slots)
        d += p.degree(id);
    return d;
}

std::optional<unsigned> homogeneous_degree(const RingPresentation& p, const TensorElement& t)
{
    std::optional<unsigned> deg;
    for (const auto& [s, c] : t.terms()) {
        unsigned d = slots_degree(p, s);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

TensorElement tensor_of(const std::vector<RingElement>& factors)
{
    TensorElement out(factors.size());
    Slots slots(factors.size());
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
        if (i == factors.size()) {
            out.add(slots, coeff);
            return;
        }
        for (const auto& [id, c] : factors[i].terms()) {
            slots[i] = id;
            self(self, i + 1, coeff * c);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

namespace {

int act_sign(const RingPresentation& p, const Permutation& inv, const Slots& a)
{
    unsigned parity = 0;
    for (unsigned i = 0; i < a.size(); ++i) {
        if (!p.odd(a[i]))
            continue;
        for (unsigned j = i + 1; j < a.size(); ++j)
            if (p.odd(a[j]) && inv(i) > inv(j))
                parity ^= 1;
    }
    return parity ? -1 : 1;
}

std::uint32_t order_key(BasisId id) { return id == kUnit ? 0x10000u : id; }

}  // namespace

TensorElement act(const RingPresentation& p, const Permutation& sigma, const TensorElement& t)
{
    if (sigma.size() != t.arity())
        throw ArityMismatch("permutation of size " + std::to_string(sigma.size()) + " acting on arity " +
                            std::to_string(t.arity()));
    Permutation inv = sigma.inverse();
    TensorElement out(t.arity());
    Slots moved(t.arity());
    for (const auto& [a, c] : t.terms()) {
        for (unsigned i = 0; i < a.size(); ++i)
            moved[i] = a[sigma(i)];
        out.add(moved, c * act_sign(p, inv, a));
    }
    return out;
}

TensorElement tensor_multiply(const RingPresentation& p, const TensorElement& s, const TensorElement& t)
{
    if (s.arity() != t.arity())
        throw ArityMismatch("multiplying tensors of different arity");
    const std::size_t n = s.arity();
    TensorElement out(n);
    std::vector<const RingElement*> slot_products(n);
    Slots slots(n);
    for (const auto& [a, ca] : s.terms())
        for (const auto& [b, cb] : t.terms()) {
            unsigned parity = 0;
            unsigned later_a = 0;
            bool zero = false;
            for (std::size_t i = n; i-- > 0;) {
                parity += p.degree(b[i]) * later_a;
                later_a += p.degree(a[i]);
                slot_products[i] = &p.product(a[i], b[i]);
                if (slot_products[i]->is_zero())
                    zero = true;
            }
            if (zero)
                continue;
            Rational coeff = ca * cb;
            if (parity % 2)
                coeff = -coeff;
            auto rec = [&](auto&& self, std::size_t i, const Rational& c) -> void {
                if (i == n) {
                    out.add(slots, c);
                    return;
                }
                for (const auto& [id, ci] : slot_products[i]->terms()) {
                    slots[i] = id;
                    self(self, i + 1, c * ci);
                }
            };
            rec(rec, 0, coeff);
        }
    return out;
}

Arrangement canonical_arrangement(const RingPresentation& p, const Slots& slots)
{
    Arrangement r;
    r.slots = slots;
    unsigned parity = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!p.odd(slots[i]))
            continue;
        for (std::size_t j = i + 1; j < slots.size(); ++j) {
            if (!p.odd(slots[j]))
                continue;
            if (slots[i] == slots[j])
                r.repeated_odd = true;
            else if (slots[i] > slots[j])
                parity ^= 1;
        }
    }
    r.sign = parity ? -1 : 1;
    std::stable_sort(r.slots.begin(), r.slots.end(),
                     [](BasisId a, BasisId b) { return order_key(a) < order_key(b); });
    return r;
}

TensorElement signed_orbit_sum(const RingPresentation& p, const Slots& sorted)
{
    TensorElement out(sorted.size());
    Slots u = sorted;
    auto less = [](BasisId a, BasisId b) { return order_key(a) < order_key(b); };
    do {
        // `sorted` is canonical, so the sign of reaching u is the parity of odd inversions in u.
        out.add(u, canonical_arrangement(p, u).sign);
    } while (std::next_permutation(u.begin(), u.end(), less));
    return out;
}

TensorElement symmetrize(const RingPresentation& p, const TensorElement& t)
{
    const std::size_t n = t.arity();
    std::map<Slots, Rational> orbits;
    for (const auto& [slots, c] : t.terms()) {
        Arrangement a = canonical_arrangement(p, slots);
        if (a.repeated_odd)
            continue;
        orbits[a.slots] += c * a.sign;
    }
    TensorElement out(n);
    const Integer nfact = factorial(n);
    for (const auto& [w, c] : orbits) {
        if (c == 0)
            continue;
        Integer stabilizer = 1;
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && w[j] == w[i])
                ++j;
            stabilizer *= factorial(j - i);
            i = j;
        }
        TensorElement orbit = signed_orbit_sum(p, w);
        Rational scale(stabilizer, nfact);
        scale.canonicalize();
        orbit *= c * scale;
        out += orbit;
    }
    return out;
}

bool is_invariant(const RingPresentation& p, const TensorElement& t)
{
    for (unsigned i = 0; i + 1 < t.arity(); ++i)
        if (act(p, Permutation::transposition(t.arity(), i, i + 1), t) != t)
            return false;
    return true;
}

}  // namespace symprod
