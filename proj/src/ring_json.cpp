#include "symprod/ring_json.hpp"

#include "symprod/errors.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace symprod {

using nlohmann::json;

nlohmann::json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return json(static_cast<long long>(z.get_si()));
    return json(z.get_str());
}

Integer integer_from_json(const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long long>()))
                                      : Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        Integer z;
        if (parse_integer(v.get<std::string>(), z))
            return z;
    }
    throw ParseError(where, "expected a decimal integer, got " + v.dump());
}

namespace {

const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object())
        throw ParseError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + "." + key, "missing field");
    return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where)
{
    const json& v = field(obj, key, where);
    if (!v.is_string())
        throw ParseError(where + "." + key, "expected a string");
    return v.get<std::string>();
}

}  // namespace

RingPresentation ring_from_json(const json& doc)
{
    RingBuilder builder;
    const json& gens = field(doc, "generators", "$");
    if (!gens.is_array())
        throw ParseError("$.generators", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string where = "$.generators[" + std::to_string(i) + "]";
        std::string name = string_field(gens[i], "name", where);
        const json& deg = field(gens[i], "degree", where);
        if (!deg.is_number_integer() || deg.get<long long>() < 1 ||
            deg.get<long long>() > std::numeric_limits<unsigned>::max())
            throw ParseError(where + ".degree", "expected a positive integer");
        if (name.empty() || name == "1")
            throw ParseError(where + ".name", "reserved or empty generator name");
        if (!names.insert(name).second)
            throw ParseError(where + ".name", "duplicate generator '" + name + "'");
        builder.add_generator(name, static_cast<unsigned>(deg.get<long long>()));
    }

    std::set<std::pair<std::string, std::string>> seen;
    if (doc.contains("products")) {
        const json& prods = doc["products"];
        if (!prods.is_array())
            throw ParseError("$.products", "expected an array");
        for (std::size_t i = 0; i < prods.size(); ++i) {
            std::string where = "$.products[" + std::to_string(i) + "]";
            std::string left = string_field(prods[i], "left", where);
            std::string right = string_field(prods[i], "right", where);
            if (!names.count(left))
                throw ParseError(where + ".left", "unknown generator '" + left + "'");
            if (!names.count(right))
                throw ParseError(where + ".right", "unknown generator '" + right + "'");
            if (!seen.insert({left, right}).second)
                throw ParseError(where, "duplicate product " + left + "*" + right);
            const json& result = field(prods[i], "result", where);
            if (!result.is_array())
                throw ParseError(where + ".result", "expected an array");
            std::vector<std::pair<std::string, Integer>> terms;
            for (std::size_t t = 0; t < result.size(); ++t) {
                std::string tw = where + ".result[" + std::to_string(t) + "]";
                std::string gen = string_field(result[t], "gen", tw);
                if (!names.count(gen))
                    throw ParseError(tw + ".gen", "unknown generator '" + gen + "'");
                terms.emplace_back(gen, integer_from_json(field(result[t], "coeff", tw), tw + ".coeff"));
            }
            builder.set_product(left, right, std::move(terms));
        }
    }
    return builder.build();
}

json ring_to_json(const RingPresentation& p)
{
    json gens = json::array();
    for (BasisId i = 1; i <= p.generator_count(); ++i)
        gens.push_back({{"name", p.name(i)}, {"degree", p.degree(i)}});
    json prods = json::array();
    for (BasisId i = 1; i <= p.generator_count(); ++i)
        for (BasisId j = 1; j <= p.generator_count(); ++j) {
            const RingElement& e = p.product(i, j);
            if (e.is_zero())
                continue;
            json result = json::array();
            for (const auto& [k, c] : e.terms())
                result.push_back({{"gen", p.name(k)}, {"coeff", integer_to_json(c.get_num())}});
            prods.push_back({{"left", p.name(i)}, {"right", p.name(j)}, {"result", result}});
        }
    return {{"generators", gens}, {"products", prods}};
}

RingPresentation load_ring(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string(), "cannot open file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + "@byte " + std::to_string(e.byte), e.what());
    }
    try {
        return ring_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

}  // namespace symprod
