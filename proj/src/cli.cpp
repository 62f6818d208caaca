#include "symprod/cli.hpp"

#include "symprod/bridge.hpp"
#include "symprod/errors.hpp"
#include "symprod/fixtures.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/ring_json.hpp"
#include "symprod/sym_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace symprod {

namespace {

using nlohmann::json;

struct Options {
    std::string spec;
    std::string poly;
    std::string fixture;
    std::string output;
    std::string mode = "full";
    std::string route = "direct";
    std::string format = "text";
    unsigned n = 0;
    unsigned g = 0;
    std::optional<unsigned> degree;
    unsigned max_degree = 0;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t max_terms = 0;
    unsigned samples = 16;
    long param = 1;
    bool list = false;
};

std::filesystem::path resolve_spec(const std::string& spec)
{
    std::filesystem::path path(spec);
    if (std::filesystem::exists(path))
        return path;
    std::filesystem::path fallback = fixture_dir() / path;
    if (std::filesystem::exists(fallback))
        return fallback;
    fallback = fixture_dir() / path.filename();
    if (std::filesystem::exists(fallback))
        return fallback;
    return path;
}

bool as_json(const Options& o) { return o.format == "json"; }

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out)
{
    RingPresentation p = load_ring(resolve_spec(o.spec));
    ValidationReport r = validate(p);
    if (as_json(o)) {
        json witness = json::array();
        for (BasisId id : r.witness)
            witness.push_back(p.name(id));
        print_json(out, {{"ok", r.ok}, {"invariant", r.invariant}, {"witness", witness}, {"message", r.message}});
    } else if (r.ok) {
        out << "ok: " << p.generator_count() << " generators\n";
    } else {
        out << "invalid (" << r.invariant << "):";
        for (BasisId id : r.witness)
            out << " " << p.name(id);
        out << "\n" << r.message << "\n";
    }
    return r.ok ? kExitOk : kExitFailure;
}

RingPresentation load_valid(const Options& o)
{
    RingPresentation p = load_ring(resolve_spec(o.spec));
    ValidationReport r = validate(p);
    if (!r.ok)
        throw MalformedElement("ring spec fails " + r.invariant + ": " + r.message);
    return p;
}

int cmd_sym_basis(const Options& o, std::ostream& out)
{
    RingPresentation p = load_valid(o);
    auto basis = enumerate_basis(p, o.n, o.degree);
    if (as_json(o)) {
        json arr = json::array();
        for (const auto& idx : basis)
            arr.push_back({{"degree", degree(p, idx)}, {"name", to_string(p, idx)}, {"index", index_to_json(p, idx)}});
        print_json(out, arr);
    } else {
        for (const auto& idx : basis)
            out << degree(p, idx) << "\t" << to_string(p, idx) << "\n";
    }
    return kExitOk;
}

int cmd_sym_table(const Options& o, std::ostream& out)
{
    RingPresentation p = load_valid(o);
    StructureTable t = structure_constants(p, o.n, o.max_degree, {o.jobs, o.max_terms});
    if (as_json(o)) {
        print_json(out, table_to_json(p, t));
        return kExitOk;
    }
    for (const auto& [ij, row] : t.products) {
        if (row.empty())
            continue;
        out << to_string(p, t.basis[ij.first]) << " * " << to_string(p, t.basis[ij.second]) << " =";
        for (const auto& [k, nu] : row)
            out << " " << (nu < 0 ? "-" : "+") << to_string(Integer(abs(nu))) << "*" << to_string(p, t.basis[k]);
        out << "\n";
    }
    return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out)
{
    std::vector<Integer> b;
    for (unsigned k = 0; k <= 2 * o.n; ++k)
        b.push_back(mac::betti(o.g, o.n, k));
    if (as_json(o)) {
        json arr = json::array();
        for (const auto& v : b)
            arr.push_back(integer_to_json(v));
        print_json(out, {{"g", o.g}, {"n", o.n}, {"betti", arr}});
    } else {
        for (std::size_t k = 0; k < b.size(); ++k)
            out << (k ? " " : "") << to_string(b[k]);
        out << "\n";
    }
    return kExitOk;
}

int cmd_mac(const Options& o, std::ostream& out)
{
    mac::GeneratorSet set = mac::generators(o.g, o.n, mac::parse_mode(o.mode, o.n));
    if (as_json(o)) {
        json arr = json::array();
        for (const auto& f : set.polynomials)
            arr.push_back(mac::to_string(f));
        print_json(out, {{"g", o.g}, {"n", o.n}, {"mode", mac::to_string(set.mode)}, {"generators", arr}});
    } else {
        for (const auto& f : set.polynomials)
            out << mac::to_string(f) << "\n";
    }
    return kExitOk;
}

int cmd_nf(const Options& o, std::ostream& out)
{
    mac::Polynomial f = mac::parse_polynomial(o.poly);
    mac::Polynomial r = mac::normal_form(f, o.g, o.n);
    if (as_json(o))
        print_json(out, {{"input", mac::to_string(f)}, {"normal_form", mac::to_string(r)}});
    else
        out << mac::to_string(r) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const unsigned top = 2 * o.n + 3;
    auto torsion = mac::torsion_check(o.g, o.n, top);
    mac::MinimalityReport mr = mac::verify_minimality(o.g, o.n);

    std::string witness;
    for (const auto& d : torsion) {
        bool ok = d.degree <= 2 * o.n ? d.torsion_free : d.torsion_free && d.ideal_rank == d.ambient_rank;
        if (!ok && witness.empty()) {
            std::ostringstream w;
            w << "degree " << d.degree << ": invariants";
            for (const auto& v : d.invariants)
                w << " " << to_string(v);
            w << " (rank " << d.ideal_rank << " of " << d.ambient_rank << ")";
            witness = w.str();
        }
    }

    if (as_json(o)) {
        json degrees = json::array();
        for (const auto& d : torsion) {
            json inv = json::array();
            for (const auto& v : d.invariants)
                inv.push_back(integer_to_json(v));
            degrees.push_back({{"degree", d.degree},
                               {"ambient_rank", d.ambient_rank},
                               {"ideal_rank", d.ideal_rank},
                               {"invariants", inv},
                               {"torsion_free", d.torsion_free}});
        }
        json minimal = {{"applicable", mr.applicable},
                        {"note", mr.note},
                        {"q0_count", mr.q0_count},
                        {"q0_rank", mr.q0_rank},
                        {"expected_q0", integer_to_json(mr.expected_q0)},
                        {"extra_outside", mr.extra_outside ? json(*mr.extra_outside) : json(nullptr)},
                        {"equal_by_degree", mr.equal_by_degree},
                        {"passed", mr.passed}};
        print_json(out, {{"g", o.g}, {"n", o.n}, {"torsion", degrees}, {"minimality", minimal}, {"witness", witness}});
    } else {
        out << "deg  ambient  ideal  torsion-free\n";
        for (const auto& d : torsion)
            out << d.degree << "  " << d.ambient_rank << "  " << d.ideal_rank << "  "
                << (d.torsion_free ? "yes" : "no") << "\n";
        if (!mr.applicable) {
            out << "minimality: " << mr.note << "\n";
        } else {
            out << "minimality: q=0 relations " << mr.q0_count << ", rank " << mr.q0_rank << ", expected "
                << to_string(mr.expected_q0) << "\n";
            if (mr.extra_outside)
                out << "extra relation outside q=0 ideal: " << (*mr.extra_outside ? "yes" : "no") << "\n";
        }
        out << "ideal equality by degree:";
        for (bool b : mr.equal_by_degree)
            out << " " << (b ? "yes" : "no");
        out << "\nminimality " << (mr.passed ? "passed" : "failed") << "\n";
        if (!witness.empty())
            out << "torsion witness: " << witness << "\n";
    }
    if (!witness.empty() || !mr.passed)
        return kExitTheorem;
    return kExitOk;
}

int cmd_bridge(const Options& o, std::ostream& out)
{
    BridgeLimits limits;
    limits.jobs = o.jobs;
    limits.max_tensor_terms = o.max_terms;
    limits.seed = o.seed;
    limits.spot_checks = o.samples;
    BridgeReport r = check_isomorphism(o.g, o.n, parse_route(o.route), limits);
    if (as_json(o))
        print_json(out, report_to_json(r));
    else
        out << report_to_text(r);
    if (r.cutoff)
        return kExitResource;
    if (r.verdict != "isomorphism" || r.relations_sound == false || r.multiplicative == false)
        return kExitTheorem;
    return kExitOk;
}

int cmd_fixture(const Options& o, std::ostream& out)
{
    if (o.list) {
        for (const auto& name : fixture_names())
            out << name << "\n";
        return kExitOk;
    }
    json doc = ring_to_json(named_fixture(o.fixture, o.param));
    if (o.output.empty()) {
        print_json(out, doc);
    } else {
        std::ofstream file(o.output);
        if (!file)
            throw Error("cannot write " + o.output);
        file << doc.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Integral cohomology of symmetric products"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto gn = [&](CLI::App* sub) {
        sub->add_option("--g", o.g, "Genus")->required()->check(CLI::Range(1u, 32u));
        sub->add_option("--n", o.n, "Symmetric power")->required()->check(CLI::Range(1u, 64u));
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a ring spec");
    validate_cmd->add_option("spec", o.spec, "Ring spec file")->required();
    format(validate_cmd);

    auto* basis_cmd = app.add_subcommand("sym-basis", "List the additive basis of Sym^n");
    basis_cmd->add_option("spec", o.spec, "Ring spec file")->required();
    basis_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1u, 64u));
    basis_cmd->add_option("--degree", o.degree);
    format(basis_cmd);

    auto* table_cmd = app.add_subcommand("sym-table", "Structure constants of Sym^n");
    table_cmd->add_option("spec", o.spec, "Ring spec file")->required();
    table_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1u, 64u));
    table_cmd->add_option("--max-degree", o.max_degree)->required();
    table_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
    table_cmd->add_option("--max-terms", o.max_terms, "Tensor term bound (0 = none)");
    format(table_cmd);

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of Sym^n of a genus-g surface");
    gn(betti_cmd);
    format(betti_cmd);

    auto* mac_cmd = app.add_subcommand("mac", "Macdonald ideal generators");
    gn(mac_cmd);
    mac_cmd->add_option("--mode", o.mode)
        ->check(CLI::IsMember({"full", "stable", "minimal", "minimal_odd", "minimal_even"}));
    format(mac_cmd);

    auto* nf_cmd = app.add_subcommand("nf", "Normal form modulo the Macdonald ideal");
    gn(nf_cmd);
    nf_cmd->add_option("poly", o.poly, "Polynomial")->required();
    format(nf_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Torsion and minimality checks");
    gn(verify_cmd);
    format(verify_cmd);

    auto* bridge_cmd = app.add_subcommand("bridge", "Compare the Macdonald ring with Sym^n of the surface");
    gn(bridge_cmd);
    bridge_cmd->add_option("--route", o.route)->check(CLI::IsMember({"direct", "table"}));
    bridge_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
    bridge_cmd->add_option("--max-terms", o.max_terms, "Tensor term bound (0 = none)");
    bridge_cmd->add_option("--seed", o.seed, "Seed for the multiplicativity spot-check");
    bridge_cmd->add_option("--samples", o.samples);
    format(bridge_cmd);

    auto* fixture_cmd = app.add_subcommand("fixture", "Write a fixture ring spec");
    fixture_cmd->add_option("name", o.fixture, "Fixture name");
    fixture_cmd->add_option("--param", o.param, "k for hopf_2k, s for sullivan_mu_s, g for surface");
    fixture_cmd->add_option("--output,-o", o.output);
    fixture_cmd->add_flag("--list", o.list);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (fixture_cmd->parsed() && !o.list && o.fixture.empty())
            throw CLI::RequiredError("name");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(o, out);
        if (basis_cmd->parsed())
            return cmd_sym_basis(o, out);
        if (table_cmd->parsed())
            return cmd_sym_table(o, out);
        if (betti_cmd->parsed())
            return cmd_betti(o, out);
        if (mac_cmd->parsed())
            return cmd_mac(o, out);
        if (nf_cmd->parsed())
            return cmd_nf(o, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (bridge_cmd->parsed())
            return cmd_bridge(o, out);
        if (fixture_cmd->parsed())
            return cmd_fixture(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return kExitTheorem;
    } catch (const ResourceLimitExceeded& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace symprod
