#include "symprod/sym_json.hpp"

#include "symprod/errors.hpp"
#include "symprod/ring_json.hpp"

namespace symprod {

using nlohmann::json;

json index_to_json(const RingPresentation& p, const SymBasisIndex& idx)
{
    json odd = json::array();
    for (BasisId i : idx.odd)
        odd.push_back(p.parity_rank(i));
    json even = json::array();
    for (const auto& [j, m] : idx.even)
        even.push_back({p.parity_rank(j), m});
    return {{"odd", odd}, {"even", even}, {"pad", idx.pad}};
}

SymBasisIndex index_from_json(const RingPresentation& p, const json& v, const std::string& where)
{
    auto natural = [&](const json& x, const std::string& w) {
        if (!x.is_number_unsigned())
            throw ParseError(w, "expected a non-negative integer");
        return x.get<unsigned>();
    };
    if (!v.is_object() || !v.contains("odd") || !v.contains("even") || !v.contains("pad"))
        throw ParseError(where, "expected {odd, even, pad}");
    SymBasisIndex idx;
    try {
        const json& odd = v["odd"];
        if (!odd.is_array())
            throw ParseError(where + ".odd", "expected an array");
        for (std::size_t i = 0; i < odd.size(); ++i)
            idx.odd.push_back(p.odd_generator(natural(odd[i], where + ".odd[" + std::to_string(i) + "]")));
        const json& even = v["even"];
        if (!even.is_array())
            throw ParseError(where + ".even", "expected an array");
        for (std::size_t i = 0; i < even.size(); ++i) {
            std::string w = where + ".even[" + std::to_string(i) + "]";
            if (!even[i].is_array() || even[i].size() != 2)
                throw ParseError(w, "expected [j, m]");
            idx.even.emplace_back(p.even_generator(natural(even[i][0], w + "[0]")), natural(even[i][1], w + "[1]"));
        }
        idx.pad = natural(v["pad"], where + ".pad");
        check_index(p, idx.arity(), idx);
    } catch (const MalformedElement& e) {
        throw ParseError(where, e.what());
    }
    return idx;
}

json table_to_json(const RingPresentation& p, const StructureTable& table)
{
    json gens = json::array();
    for (const auto& idx : table.basis)
        gens.push_back({{"name", to_string(p, idx)}, {"degree", degree(p, idx)}, {"index", index_to_json(p, idx)}});
    json prods = json::array();
    for (const auto& [ij, result] : table.products) {
        if (result.empty())
            continue;
        json terms = json::array();
        for (const auto& [k, nu] : result)
            terms.push_back({{"gen", to_string(p, table.basis[k])}, {"coeff", integer_to_json(nu)}});
        prods.push_back({{"left", to_string(p, table.basis[ij.first])},
                         {"right", to_string(p, table.basis[ij.second])},
                         {"result", terms}});
    }
    return {{"n", table.n}, {"max_degree", table.max_degree}, {"generators", gens}, {"products", prods}};
}

StructureTable table_from_json(const RingPresentation& p, const json& doc)
{
    StructureTable table;
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned())
        throw ParseError("$.n", "expected a non-negative integer");
    if (!doc.contains("max_degree") || !doc["max_degree"].is_number_unsigned())
        throw ParseError("$.max_degree", "expected a non-negative integer");
    table.n = doc["n"].get<std::size_t>();
    table.max_degree = doc["max_degree"].get<unsigned>();

    std::map<std::string, std::size_t> by_name;
    const json& gens = doc.at("generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string where = "$.generators[" + std::to_string(i) + "]";
        if (!gens[i].contains("index"))
            throw ParseError(where + ".index", "missing field");
        SymBasisIndex idx = index_from_json(p, gens[i]["index"], where + ".index");
        if (idx.arity() != table.n)
            throw ParseError(where + ".index", "arity differs from n");
        by_name.emplace(gens[i].value("name", to_string(p, idx)), table.basis.size());
        table.basis.push_back(std::move(idx));
    }
    for (std::size_t i = 0; i < table.basis.size(); ++i)
        for (std::size_t j = 0; j < table.basis.size(); ++j)
            if (degree(p, table.basis[i]) + degree(p, table.basis[j]) <= table.max_degree)
                table.products[{i, j}];

    auto lookup = [&](const json& v, const std::string& where) {
        if (!v.is_string() || !by_name.count(v.get<std::string>()))
            throw ParseError(where, "unknown basis element " + v.dump());
        return by_name.at(v.get<std::string>());
    };
    if (doc.contains("products")) {
        const json& prods = doc["products"];
        for (std::size_t i = 0; i < prods.size(); ++i) {
            std::string where = "$.products[" + std::to_string(i) + "]";
            std::size_t l = lookup(prods[i].value("left", json()), where + ".left");
            std::size_t r = lookup(prods[i].value("right", json()), where + ".right");
            auto it = table.products.find({l, r});
            if (it == table.products.end())
                throw ParseError(where, "product exceeds max_degree");
            for (std::size_t t = 0; t < prods[i]["result"].size(); ++t) {
                std::string tw = where + ".result[" + std::to_string(t) + "]";
                const json& term = prods[i]["result"][t];
                it->second.emplace_back(lookup(term.value("gen", json()), tw + ".gen"),
                                        integer_from_json(term.value("coeff", json()), tw + ".coeff"));
            }
            std::sort(it->second.begin(), it->second.end());
        }
    }
    return table;
}

}  // namespace symprod
