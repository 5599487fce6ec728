#include "resl/resl.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace resl;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string codomain;
    std::string cls = "all";
    std::string state;
    std::string filter;
    std::string problem = "type2-subset-type1";
    std::string format = "text";
    std::string out_dir;
    std::string kind = "lukasiewicz";
    std::uint64_t budget = 100'000'000;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t max_order = 4;
    std::int64_t grid = 20;
    std::size_t samples = 10000;
};

json report_json(const SuiteReport& r)
{
    json items = json::array();
    for (const auto& it : r.items())
        items.push_back({{"name", it.name}, {"status", std::string(to_string(it.status))}, {"checked", it.checked},
            {"witness", it.witness}, {"note", it.note}});
    return {{"title", r.title()}, {"items", items}};
}

json classification_json(const ClassificationReport& c)
{
    json j;
    const auto f = c.flags();
    for (std::size_t i = 0; i < f.size(); ++i)
        j[ClassificationReport::names[i]] = f[i];
    j["witnesses"] = c.witnesses;
    return j;
}

std::string classification_text(const FiniteResiduatedLattice& A, const ClassificationReport& c)
{
    std::string out;
    const auto f = c.flags();
    for (std::size_t i = 0; i < f.size(); ++i) {
        out += std::string(ClassificationReport::names[i]) + "=" + (f[i] ? "true" : "false");
        if (auto it = c.witnesses.find(ClassificationReport::names[i]); !f[i] && it != c.witnesses.end()) {
            out += "  witness";
            for (Element e : it->second)
                out += " " + A.label(e);
        }
        out += "\n";
    }
    return out;
}

EnumerationOptions enum_opts(const RunConfig& cfg) { return {cfg.budget, cfg.jobs}; }

AlgebraPtr codomain_of(const RunConfig& cfg, const AlgebraPtr& A)
{
    return cfg.codomain.empty() ? A : load_algebra(cfg.codomain);
}

int cmd_validate(const RunConfig& cfg)
{
    const auto raw = raw_from_json(read_json_file(cfg.input));
    const auto A = make_algebra(raw);
    const auto ids = identity_suite(*A);
    const auto c = classify(*A);
    if (cfg.format == "json") {
        std::cout << json{{"valid", true}, {"order", A->size()}, {"identities", report_json(ids)},
                              {"classification", classification_json(c)}}
                         .dump(1)
                  << "\n";
    } else {
        std::cout << "valid residuated lattice of order " << A->size() << "\n" << ids.to_text() << classification_text(*A, c);
    }
    return ids.passed() ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg)
{
    const auto A = load_algebra(cfg.input);
    const auto c = classify(*A);
    if (cfg.format == "json")
        std::cout << classification_json(c).dump(1) << "\n";
    else
        std::cout << classification_text(*A, c);
    return 0;
}

int cmd_states(const RunConfig& cfg)
{
    const auto A = load_algebra(cfg.input);
    const auto L = codomain_of(cfg, A);
    const auto cls = parse_state_class(cfg.cls);
    if (!cls)
        throw Error(ErrorKind::parse_error, "unknown class '" + cfg.cls + "'");
    const auto rows = census(A, L, *cls, enum_opts(cfg));
    if (cfg.format == "csv")
        std::cout << census_csv(*A, rows);
    else if (cfg.format == "json")
        std::cout << census_json(*A, rows).dump(1) << "\n";
    else
        std::cout << census_text(*A, rows);
    return 0;
}

std::string quotient_text(const QuotientAlgebra& q)
{
    const auto& A = *q.base;
    std::string out = std::to_string(q.classes.size()) + " classes\n";
    for (Element k = 0; k < q.classes.size(); ++k) {
        out += "  [" + q.ops->label(k) + "] = {";
        for (std::size_t i = 0; i < q.classes[k].size(); ++i)
            out += (i ? "," : "") + A.label(q.classes[k][i]);
        out += "}\n";
    }
    out += classification_text(*q.ops, classify(*q.ops));
    return out;
}

int cmd_quotient(const RunConfig& cfg)
{
    const auto A = load_algebra(cfg.input);
    if (cfg.filter.empty() == cfg.state.empty())
        throw Error(ErrorKind::parse_error, "give exactly one of --filter or --state");
    if (!cfg.filter.empty()) {
        std::vector<Element> elems;
        for (const auto& tok : split_list(cfg.filter))
            elems.push_back(parse_element(*A, tok));
        const auto F = make_filter(A, elems);
        const auto p = filter_props(F);
        std::cout << "filter: proper=" << p.proper << " prime=" << p.prime << " maximal=" << p.maximal << "\n";
        std::cout << quotient_text(quotient(F));
        return 0;
    }
    const auto s = select_state(A, codomain_of(cfg, A), cfg.state, enum_opts(cfg));
    const auto ind = induced_state(s);
    std::cout << "kernel: {" << table_text(*A, kernel(s).elements()) << "}\n" << quotient_text(ind.quotient);
    std::cout << "induced state: " << table_text(*s.cod, ind.state.table) << "\n";
    std::cout << quotient_theorem_suite(s).to_text() << state_morphism_suite(s).to_text();
    return 0;
}

int cmd_completion(const RunConfig& cfg)
{
    const auto A = load_algebra(cfg.input);
    if (cfg.state.empty())
        throw Error(ErrorKind::parse_error, "--state is required");
    const auto s = select_state(A, codomain_of(cfg, A), cfg.state, enum_opts(cfg));
    const auto comp = completion(s);
    const auto ind = induced_state(s);
    const auto via_quotient = universal_property_check(s, comp, ind.state, ind.quotient.proj);
    const auto via_self = universal_property_check(s, comp, comp.lifted_state, comp.embed);
    if (cfg.format == "json") {
        std::cout << json{{"order", comp.completed->size()}, {"embed", comp.embed}, {"lifted_state", comp.lifted_state.table},
                              {"embed_injective", comp.embed_injective()}, {"clauses", report_json(comp.clauses)},
                              {"factor_through_quotient", via_quotient.f_tilde},
                              {"factor_unique", via_quotient.unique() && via_self.unique()}}
                         .dump(1)
                  << "\n";
    } else {
        std::cout << completion_text(s, comp);
        std::cout << "factor through A/Ker(s): " << table_text(*ind.quotient.ops, via_quotient.f_tilde)
                  << (via_quotient.unique() ? " (unique)" : " (not unique)") << "\n";
        std::cout << "factor through itself: " << table_text(*comp.completed, via_self.f_tilde)
                  << (via_self.unique() ? " (unique)" : " (not unique)") << "\n";
    }
    return comp.clauses.passed() ? 0 : 1;
}

int cmd_suites(const RunConfig& cfg)
{
    const auto A = load_algebra(cfg.input);
    if (cfg.state.empty())
        throw Error(ErrorKind::parse_error, "--state is required");
    const auto s = select_state(A, codomain_of(cfg, A), cfg.state, enum_opts(cfg));
    const auto c = classify_state_with_riecan(s);
    std::vector<SuiteReport> reports;
    if (c.type_i)
        reports.push_back(consequence_suite_type_i(s));
    if (c.type_ii)
        reports.push_back(consequence_suite_type_ii(s));
    if (c.op_type_i() || c.type_ii) {
        reports.push_back(quotient_theorem_suite(s));
        reports.push_back(state_morphism_suite(s));
    }
    reports.push_back(similarity_suite(s));
    reports.push_back(continuity_suite(s));
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.to_text();
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

std::vector<LatticeCatalogEntry> obtain_catalog(const RunConfig& cfg)
{
    const auto dir = cfg.out_dir.empty() ? catalog_dir() : std::filesystem::path(cfg.out_dir);
    if (std::filesystem::exists(dir / "index.json")) {
        auto cat = load_catalog(dir);
        std::size_t have = 0;
        for (const auto& e : cat)
            have = std::max(have, e.algebra->size());
        if (have >= cfg.max_order)
            return cat;
    }
    CatalogOptions opt;
    opt.max_order = std::max<std::size_t>(6, cfg.max_order);
    opt.budget = cfg.budget;
    opt.jobs = cfg.jobs;
    return build_catalog(cfg.max_order, opt);
}

int cmd_scan(const RunConfig& cfg)
{
    const auto cat = obtain_catalog(cfg);
    const auto r = run_scan(cfg.problem, cat, cfg.max_order, enum_opts(cfg));
    std::cout << r.csv();
    return 0;
}

int cmd_catalog(const RunConfig& cfg)
{
    CatalogOptions opt;
    opt.max_order = std::max<std::size_t>(6, cfg.max_order);
    opt.budget = cfg.budget;
    opt.jobs = cfg.jobs;
    const auto cat = build_catalog(cfg.max_order, opt);
    if (!cfg.out_dir.empty() || std::getenv("RESL_CATALOG_DIR")) {
        const auto dir = cfg.out_dir.empty() ? catalog_dir() : std::filesystem::path(cfg.out_dir);
        save_catalog(dir, cat);
        std::cerr << "wrote " << cat.size() << " entries to " << dir.string() << "\n";
    }
    if (cfg.format == "json") {
        std::cout << index_json(cat).dump(1) << "\n";
        return 0;
    }
    std::cout << "id,order";
    for (const char* name : ClassificationReport::names)
        std::cout << "," << name;
    std::cout << "\n";
    for (const auto& e : cat) {
        std::cout << e.id << "," << e.algebra->size();
        for (bool b : e.classification.flags())
            std::cout << (b ? ",1" : ",0");
        std::cout << "\n";
    }
    return 0;
}

int cmd_tnorm(const RunConfig& cfg)
{
    std::optional<TNormKind> kind;
    for (auto k : all_tnorm_kinds)
        if (to_string(k) == cfg.kind)
            kind = k;
    if (!kind)
        throw Error(ErrorKind::parse_error, "unknown t-norm '" + cfg.kind + "'");
    if (cfg.grid < 1)
        throw Error(ErrorKind::parse_error, "--grid must be positive");
    auto r = tnorm_grid_suite(*kind, cfg.grid);
    r.add(tnorm_residuation_sample(*kind, 100, cfg.samples, cfg.seed));
    std::cout << r.to_text();
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite residuated lattices and their generalized states"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--budget", cfg.budget, "candidate budget")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("algebra", cfg.input, "algebra JSON file")->required();
        common(sub);
    };
    auto with_state = [&](CLI::App* sub) {
        sub->add_option("--state", cfg.state, "value list, census row sK, <class>:<k> or a state file");
        sub->add_option("--codomain", cfg.codomain, "codomain algebra (default: the domain)");
    };

    auto* validate = app.add_subcommand("validate", "check axioms, identities and classification");
    with_input(validate);
    auto* classify_cmd = app.add_subcommand("classify", "print class memberships with witnesses");
    with_input(classify_cmd);
    auto* states = app.add_subcommand("states", "census of states A -> L");
    with_input(states);
    states->add_option("codomain", cfg.codomain, "codomain algebra (default: the domain)");
    states->add_option("--class", cfg.cls, "all, type1, type2, type3, op-type1, state-morphism, riecan");
    auto* quot = app.add_subcommand("quotient", "quotient by a filter or by a state kernel");
    with_input(quot);
    with_state(quot);
    quot->add_option("--filter", cfg.filter, "comma-separated filter elements");
    auto* comp = app.add_subcommand("completion", "completion of A along a state");
    with_input(comp);
    with_state(comp);
    auto* suites = app.add_subcommand("suites", "run every applicable theorem suite on one state");
    with_input(suites);
    with_state(suites);
    auto* scan = app.add_subcommand("scan", "exhaustive open-problem scan over the catalog");
    common(scan);
    scan->add_option("--problem", cfg.problem, "type2-subset-type1, type3-join or mv-corollary")
        ->check(CLI::IsMember({"type2-subset-type1", "type3-join", "mv-corollary"}));
    scan->add_option("--max-order", cfg.max_order, "largest algebra order")->check(CLI::Range(2, 7));
    scan->add_option("--catalog", cfg.out_dir, "catalog directory");
    auto* catalog = app.add_subcommand("catalog", "enumerate residuated lattices up to isomorphism");
    common(catalog);
    catalog->add_option("--max-order", cfg.max_order, "largest order")->check(CLI::Range(2, 7));
    catalog->add_option("--out", cfg.out_dir, "write the catalog to this directory");
    auto* tn = app.add_subcommand("tnorm", "exact t-norm checks on rational grids");
    common(tn);
    tn->add_option("--kind", cfg.kind, "lukasiewicz, goedel or product");
    tn->add_option("--grid", cfg.grid, "grid denominator for exhaustive checks");
    tn->add_option("--samples", cfg.samples, "random triples on the 1/100 grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed())
            return cmd_validate(cfg);
        if (classify_cmd->parsed())
            return cmd_classify(cfg);
        if (states->parsed())
            return cmd_states(cfg);
        if (quot->parsed())
            return cmd_quotient(cfg);
        if (comp->parsed())
            return cmd_completion(cfg);
        if (suites->parsed())
            return cmd_suites(cfg);
        if (scan->parsed())
            return cmd_scan(cfg);
        if (catalog->parsed())
            return cmd_catalog(cfg);
        if (tn->parsed())
            return cmd_tnorm(cfg);
    } catch (const Error& e) {
        std::cerr << e.what();
        if (!e.witness().empty()) {
            std::cerr << " [witness";
            for (Element w : e.witness())
                std::cerr << " " << w;
            std::cerr << "]";
        }
        std::cerr << "\n";
        return e.kind() == ErrorKind::parse_error ? 2 : 1;
    }
    return 2;
}
