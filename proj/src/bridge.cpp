#include "symprod/bridge.hpp"

#include "symprod/errors.hpp"
#include "symprod/parallel.hpp"
#include "symprod/ring_json.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symprod {

RingPresentation surface_ring(unsigned g)
{
    if (g == 0)
        throw std::out_of_range("surface_ring needs g >= 1");
    RingBuilder b;
    for (unsigned i = 1; i <= 2 * g; ++i)
        b.add_generator("a" + std::to_string(i), 1);
    b.add_generator("b", 2);
    for (unsigned i = 1; i <= g; ++i) {
        std::string lo = "a" + std::to_string(i), hi = "a" + std::to_string(i + g);
        b.set_product(lo, hi, {{"b", 1}});
        b.set_product(hi, lo, {{"b", -1}});
    }
    return b.build();
}

std::string to_string(Route r)
{
    return r == Route::direct ? "direct" : "table";
}

Route parse_route(std::string_view text)
{
    if (text == "direct")
        return Route::direct;
    if (text == "table")
        return Route::table;
    throw InvalidMode("unknown route '" + std::string(text) + "'");
}

SurfaceMap::SurfaceMap(unsigned g, std::size_t n, Route route, std::size_t max_tensor_terms)
    : g_(g), n_(n), route_(route), max_terms_(max_tensor_terms), ring_(surface_ring(g))
{
    if (n == 0)
        throw std::out_of_range("SurfaceMap needs n >= 1");
    if (route == Route::table)
        table_ = structure_constants(ring_, n, static_cast<unsigned>(2 * n), {1, max_tensor_terms});
}

namespace {

BasisId alpha(const RingPresentation& p, unsigned i)
{
    return *p.find("a" + std::to_string(i));
}

// Last variable of m in canonical order (0..g-1 = x, g..2g-1 = x', 2g = y) and m without it.
std::pair<unsigned, mac::Monomial> split_last(const mac::Monomial& m, unsigned g)
{
    mac::Monomial rest = m;
    if (m.q > 0) {
        --rest.q;
        return {2 * g, rest};
    }
    if (m.xp) {
        unsigned bit = 31u - static_cast<unsigned>(std::countl_zero(m.xp));
        rest.xp &= ~(1u << bit);
        return {g + bit, rest};
    }
    unsigned bit = 31u - static_cast<unsigned>(std::countl_zero(m.x));
    rest.x &= ~(1u << bit);
    return {bit, rest};
}

}  // namespace

TensorElement SurfaceMap::generator_tensor(unsigned var) const
{
    if (var == 2 * g_)
        return chi(ring_, n_, {}, {RingElement::basis(*ring_.find("b"))});
    return chi(ring_, n_, {RingElement::basis(alpha(ring_, var + 1))}, {});
}

SymCombination SurfaceMap::generator_combination(unsigned var) const
{
    SymBasisIndex idx;
    idx.pad = static_cast<unsigned>(n_ - 1);
    if (var == 2 * g_)
        idx.even.emplace_back(*ring_.find("b"), 1);
    else
        idx.odd.push_back(alpha(ring_, var + 1));
    return {{idx, Rational(1)}};
}

TensorElement SurfaceMap::tensor_image(const mac::Monomial& m)
{
    if (m.max_index() > g_)
        throw MalformedElement("monomial " + mac::to_string(m) + " uses a variable beyond g");
    if (m == mac::Monomial{})
        return TensorElement::elementary(Slots(n_, kUnit));
    auto it = tensors_.find(m);
    if (it != tensors_.end())
        return it->second;
    auto [var, rest] = split_last(m, g_);
    TensorElement left = tensor_image(rest);
    TensorElement right = generator_tensor(var);
    if (max_terms_ && left.terms().size() * right.terms().size() > max_terms_)
        throw ResourceLimitExceeded("image of " + mac::to_string(m) + " exceeds the tensor term bound");
    TensorElement out = tensor_multiply(ring_, left, right);
    tensors_.emplace(m, out);
    return out;
}

SymCombination SurfaceMap::image(const mac::Monomial& m)
{
    if (m.max_index() > g_)
        throw MalformedElement("monomial " + mac::to_string(m) + " uses a variable beyond g");
    if (m == mac::Monomial{})
        return {{SymBasisIndex::unit(n_), Rational(1)}};
    auto it = images_.find(m);
    if (it != images_.end())
        return it->second;
    SymCombination out;
    if (route_ == Route::direct) {
        out = expand(ring_, tensor_image(m));
    } else if (m.degree() <= 2 * n_) {
        auto [var, rest] = split_last(m, g_);
        out = table_->multiply(image(rest), generator_combination(var));
    }
    images_.emplace(m, out);
    return out;
}

SymCombination SurfaceMap::image(const mac::Polynomial& f)
{
    SymCombination out;
    for (const auto& [m, c] : f.terms())
        for (const auto& [idx, v] : image(m)) {
            Rational& slot = out[idx];
            slot += v * Rational(c);
            if (slot == 0)
                out.erase(idx);
        }
    return out;
}

bool relations_sound(SurfaceMap& f)
{
    for (const mac::Polynomial& r : mac::generators(f.g(), static_cast<unsigned>(f.n()), mac::Mode::full).polynomials)
        if (!f.image(r).empty())
            return false;
    return true;
}

bool multiplicativity_spot_check(SurfaceMap& f, unsigned samples, std::uint64_t seed)
{
    const unsigned g = f.g(), n = static_cast<unsigned>(f.n());
    std::vector<mac::Monomial> pool;
    for (unsigned s = 0; s <= 2 * n; ++s)
        for (const mac::Monomial& m : mac::quotient_basis(g, n, s))
            pool.push_back(m);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (pool[i].degree() + pool[j].degree() <= 2 * n)
                pairs.emplace_back(i, j);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const RingPresentation& p = f.ring();
    for (unsigned k = 0; k < samples; ++k) {
        auto [i, j] = pairs[pick(rng)];
        const mac::Monomial &a = pool[i], &b = pool[j];
        mac::Polynomial prod = mac::Polynomial::monomial(a) * mac::Polynomial::monomial(b);
        SymCombination lhs = f.image(mac::normal_form(prod, g, n));
        TensorElement rhs_tensor = tensor_multiply(p, evaluate(p, f.n(), f.image(a)), evaluate(p, f.n(), f.image(b)));
        if (lhs != expand(p, rhs_tensor))
            return false;
    }
    return true;
}

namespace {

DegreeBlock compute_block(SurfaceMap& f, unsigned s)
{
    const unsigned g = f.g(), n = static_cast<unsigned>(f.n());
    const RingPresentation& p = f.ring();
    DegreeBlock block;
    block.degree = s;
    std::vector<mac::Monomial> rows = mac::quotient_basis(g, n, s);
    std::vector<SymBasisIndex> cols = s == 0 ? std::vector{SymBasisIndex::unit(n)} : enumerate_basis(p, n, s);
    for (const auto& m : rows)
        block.rows.push_back(mac::to_string(m));
    for (const auto& idx : cols)
        block.cols.push_back(to_string(p, idx));
    block.matrix = IntegerMatrix(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [idx, c] : f.image(rows[r])) {
            auto it = std::find(cols.begin(), cols.end(), idx);
            if (it == cols.end())
                throw InternalInconsistency("image of " + block.rows[r] + " leaves degree " + std::to_string(s));
            if (!is_integer(c))
                throw TheoremViolation("image of " + block.rows[r] + " has non-integral coordinate " + to_string(c) +
                                       " at " + to_string(p, idx));
            block.matrix(r, static_cast<std::size_t>(it - cols.begin())) = c.get_num();
        }
    block.smith = smith(block.matrix);
    block.betti = mac::betti(g, n, s);
    block.mac_rank = rows.size();
    block.sym_rank = cols.size();
    block.square = rows.size() == cols.size();
    block.unimodular = is_unimodular(block.matrix);
    return block;
}

}  // namespace

BridgeReport check_isomorphism(unsigned g, std::size_t n, Route route, const BridgeLimits& limits)
{
    BridgeReport report;
    report.g = g;
    report.n = n;
    report.route = route;
    const unsigned top = static_cast<unsigned>(2 * n);

    std::optional<SurfaceMap> prototype;
    try {
        prototype.emplace(g, n, route, limits.max_tensor_terms);
    } catch (const ResourceLimitExceeded& e) {
        report.cutoff = 0;
        report.cutoff_reason = e.what();
        report.verdict = "partial";
        return report;
    }

    std::vector<std::optional<DegreeBlock>> blocks(top + 1);
    std::vector<std::string> failures(top + 1);
    parallel_for(top + 1, limits.jobs, [&](std::size_t s) {
        SurfaceMap f = *prototype;
        try {
            blocks[s] = compute_block(f, static_cast<unsigned>(s));
        } catch (const ResourceLimitExceeded& e) {
            failures[s] = e.what();
        }
    });
    for (unsigned s = 0; s <= top; ++s) {
        if (!blocks[s]) {
            report.cutoff = s;
            report.cutoff_reason = failures[s];
            break;
        }
        report.blocks.push_back(std::move(*blocks[s]));
    }

    try {
        SurfaceMap f = *prototype;
        report.relations_sound = relations_sound(f);
        report.multiplicative = multiplicativity_spot_check(f, limits.spot_checks, limits.seed);
    } catch (const ResourceLimitExceeded&) {
    }

    if (report.cutoff) {
        report.verdict = "partial";
    } else {
        bool ok = true;
        for (const DegreeBlock& b : report.blocks)
            ok = ok && b.square && b.unimodular && Integer(b.mac_rank) == b.betti && Integer(b.sym_rank) == b.betti;
        report.verdict = ok ? "isomorphism" : "not an isomorphism";
    }
    return report;
}

nlohmann::json report_to_json(const BridgeReport& r)
{
    using nlohmann::json;
    json blocks = json::array();
    for (const DegreeBlock& b : r.blocks) {
        json matrix = json::array();
        for (std::size_t i = 0; i < b.matrix.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < b.matrix.cols(); ++j)
                row.push_back(integer_to_json(b.matrix(i, j)));
            matrix.push_back(std::move(row));
        }
        json smith = json::array();
        for (const Integer& d : b.smith)
            smith.push_back(integer_to_json(d));
        blocks.push_back({{"degree", b.degree},
                          {"rows", b.rows},
                          {"cols", b.cols},
                          {"matrix", std::move(matrix)},
                          {"smith", std::move(smith)},
                          {"betti", integer_to_json(b.betti)},
                          {"mac_rank", b.mac_rank},
                          {"sym_rank", b.sym_rank},
                          {"square", b.square},
                          {"unimodular", b.unimodular}});
    }
    json doc = {{"g", r.g}, {"n", r.n}, {"route", to_string(r.route)}, {"verdict", r.verdict}, {"blocks", blocks}};
    doc["cutoff"] = r.cutoff ? json(*r.cutoff) : json(nullptr);
    doc["cutoff_reason"] = r.cutoff_reason;
    doc["relations_sound"] = r.relations_sound ? json(*r.relations_sound) : json(nullptr);
    doc["multiplicative"] = r.multiplicative ? json(*r.multiplicative) : json(nullptr);
    return doc;
}

BridgeReport report_from_json(const nlohmann::json& doc)
{
    try {
        BridgeReport r;
        r.g = doc.at("g").get<unsigned>();
        r.n = doc.at("n").get<std::size_t>();
        r.route = parse_route(doc.at("route").get<std::string>());
        r.verdict = doc.at("verdict").get<std::string>();
        if (!doc.at("cutoff").is_null())
            r.cutoff = doc.at("cutoff").get<unsigned>();
        r.cutoff_reason = doc.at("cutoff_reason").get<std::string>();
        if (!doc.at("relations_sound").is_null())
            r.relations_sound = doc.at("relations_sound").get<bool>();
        if (!doc.at("multiplicative").is_null())
            r.multiplicative = doc.at("multiplicative").get<bool>();
        const auto& blocks = doc.at("blocks");
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const auto& jb = blocks[k];
            const std::string where = "$.blocks[" + std::to_string(k) + "]";
            DegreeBlock b;
            b.degree = jb.at("degree").get<unsigned>();
            b.rows = jb.at("rows").get<std::vector<std::string>>();
            b.cols = jb.at("cols").get<std::vector<std::string>>();
            const auto& m = jb.at("matrix");
            b.matrix = IntegerMatrix(b.rows.size(), b.cols.size());
            if (m.size() != b.rows.size())
                throw ParseError(where + ".matrix", "row count does not match rows");
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i].size() != b.cols.size())
                    throw ParseError(where + ".matrix[" + std::to_string(i) + "]", "column count does not match cols");
                for (std::size_t j = 0; j < m[i].size(); ++j)
                    b.matrix(i, j) = integer_from_json(m[i][j], where + ".matrix[" + std::to_string(i) + "][" +
                                                                    std::to_string(j) + "]");
            }
            for (std::size_t i = 0; i < jb.at("smith").size(); ++i)
                b.smith.push_back(integer_from_json(jb["smith"][i], where + ".smith[" + std::to_string(i) + "]"));
            b.betti = integer_from_json(jb.at("betti"), where + ".betti");
            b.mac_rank = jb.at("mac_rank").get<std::size_t>();
            b.sym_rank = jb.at("sym_rank").get<std::size_t>();
            b.square = jb.at("square").get<bool>();
            b.unimodular = jb.at("unimodular").get<bool>();
            r.blocks.push_back(std::move(b));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("$", e.what());
    }
}

std::string report_to_text(const BridgeReport& r)
{
    std::ostringstream out;
    out << "g=" << r.g << " n=" << r.n << " route=" << to_string(r.route) << "\n";
    out << "deg  betti  rows  cols  unimodular  smith\n";
    for (const DegreeBlock& b : r.blocks) {
        out << b.degree << "  " << to_string(b.betti) << "  " << b.mac_rank << "  " << b.sym_rank << "  "
            << (b.unimodular ? "yes" : "no") << "  ";
        for (std::size_t i = 0; i < b.smith.size(); ++i)
            out << (i ? " " : "") << to_string(b.smith[i]);
        out << "\n";
    }
    if (r.cutoff)
        out << "cutoff at degree " << *r.cutoff << ": " << r.cutoff_reason << "\n";
    auto flag = [](const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "not checked"; };
    out << "relations sound: " << flag(r.relations_sound) << "\n";
    out << "multiplicative: " << flag(r.multiplicative) << "\n";
    out << "verdict: " << r.verdict << "\n";
    return out.str();
}

}  // namespace symprod
