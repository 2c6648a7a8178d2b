#include "qsch/parallel.hpp"
#include "qsch/qhring.hpp"
#include "qsch/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace qsch;

namespace {

enum Exit { ok = 0, assertion_failed = 1, usage = 2, disagreement = 3, internal = 4 };

struct Options {
    std::string format = "pretty";
    std::string cache_dir;
    int jobs = 0;
    bool allow_large = false;

    std::string ring;
    int n = 0;
    std::string lambda, mu, nu;
    int degree = 0;
    std::string provenance = "vi";
    std::string suite;
};

// Failure record on stderr; `reason` is the stable machine-readable part.
int fail(const Options& o, int code, const std::string& reason, const std::string& message) {
    if (o.format == "json")
        std::cerr << nlohmann::json{{"error", reason}, {"message", message}, {"exit_code", code}}.dump() << "\n";
    else
        std::cerr << "qschub: " << message << " [" << reason << "]\n";
    return code;
}

void bounds(const Options& o, int limit, const std::string& what) {
    if (o.n <= limit) return;
    if (!o.allow_large)
        throw std::out_of_range(what + " n = " + std::to_string(o.n) + " exceeds the default bound " + std::to_string(limit) +
                                " (pass --allow-large to override)");
    std::cerr << "qschub: warning: " << what << " n = " << o.n
              << " is beyond the desk-scale bound; runtime grows like n! and may be very long\n";
}

RingTag ring_of(const Options& o) {
    RingTag tag = RingTag::parse(o.ring, o.n);
    bounds(o, tag.kind == RingKind::og ? 5 : 4, tag.to_string());
    return tag;
}

int cmd_gw(const Options& o) {
    RingTag tag = ring_of(o);
    StrictPartition l = StrictPartition::parse(o.lambda, o.n), m = StrictPartition::parse(o.mu, o.n),
                    v = StrictPartition::parse(o.nu, o.n);
    const int lhs = l.weight() + m.weight(), rhs = v.weight() + tag.q_degree() * o.degree;
    Integer value = o.degree < 0 ? Integer(0) : engine(tag).gw(l, m, v, o.degree);
    if (o.format == "json") {
        nlohmann::json rec{{"ring", o.ring},
                           {"n", o.n},
                           {"lambda", l.to_string()},
                           {"mu", m.to_string()},
                           {"nu", v.to_string()},
                           {"degree", o.degree},
                           {"degree_condition", {{"lhs", lhs}, {"rhs", rhs}, {"satisfied", lhs == rhs}}},
                           {"value", value.get_str()},
                           {"provenance", to_string(Provenance::vi_formula)},
                           {"library_version", QSCH_VERSION}};
        std::cout << rec.dump(1) << "\n";
    } else {
        if (lhs != rhs)
            std::cerr << "qschub: note: degree condition fails (" << lhs << " != " << rhs << "), invariant vanishes\n";
        std::cout << value.get_str() << "\n";
    }
    return ok;
}

MultTable cached_table(const TableCache& cache, RingTag tag, Provenance p, int jobs) {
    if (auto hit = cache.load(tag, p)) {
        std::cerr << "qschub: cache hit " << cache.path_for(tag, p).string() << " checksum " << table_checksum(*hit) << "\n";
        return *hit;
    }
    MultTable t = full_table(tag, p, jobs);
    cache.store(t);
    std::cerr << "qschub: computed " << to_string(p) << " table, stored " << cache.path_for(tag, p).string() << "\n";
    return t;
}

std::string entry_string(const MultTable& t, const std::pair<StrictPartition, StrictPartition>& key) {
    QHClass c(t.tag);
    auto it = t.entries.find(key);
    if (it != t.entries.end())
        for (const auto& [term, coeff] : it->second) c.add_term(term.first, term.second, coeff);
    return c.to_string();
}

int cmd_table(const Options& o) {
    RingTag tag = ring_of(o);
    TableCache cache(o.cache_dir.empty() ? TableCache::default_dir() : std::filesystem::path(o.cache_dir));
    std::vector<Provenance> wanted;
    if (o.provenance == "all")
        wanted = {Provenance::vi_formula, Provenance::ortho_extraction, Provenance::ideal_reduction};
    else
        wanted = {parse_provenance(o.provenance)};
    std::vector<MultTable> tables;
    for (Provenance p : wanted) tables.push_back(cached_table(cache, tag, p, o.jobs));
    for (std::size_t i = 1; i < tables.size(); ++i)
        if (auto diff = first_difference(tables[0], tables[i])) {
            const std::string key = "(" + diff->first.to_string() + ") * (" + diff->second.to_string() + ")";
            return fail(o, disagreement, "engine_disagreement",
                        to_string(tables[0].provenance) + " and " + to_string(tables[i].provenance) + " differ at " + key +
                            ": " + entry_string(tables[0], *diff) + " vs " + entry_string(tables[i], *diff));
        }
    const MultTable& t = tables[0];
    if (o.format == "json") {
        std::cout << table_to_json(t) << "\n";
    } else if (o.format == "csv") {
        std::cout << table_to_csv(t);
    } else {
        const char* name = tag.kind == RingKind::og ? "tau" : "sigma";
        for (const auto& [key, coeffs] : t.entries)
            std::cout << name << "[" << key.first.to_string() << "] * " << name << "[" << key.second.to_string()
                      << "] = " << entry_string(t, key) << "\n";
        std::cout << "# " << t.entries.size() << " entries, checksum " << table_checksum(t) << "\n";
    }
    return ok;
}

int cmd_verify(const Options& o) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UnknownSuite("unknown suite '" + o.suite + "'");
    bounds(o, o.suite == "counts-53" ? 10 : 4, o.suite);
    SuiteResult r = run_suite(o.suite, o.n);
    if (o.format == "json") {
        std::cout << suite_to_json(r) << "\n";
    } else {
        for (const auto& c : r.checks) {
            std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.checked - c.failed << "/" << c.checked << ")";
            if (!c.first_failure.empty()) std::cout << " first failure: " << c.first_failure;
            std::cout << "\n";
        }
        std::cout << o.suite << " n=" << o.n << ": " << (r.ok() ? "pass" : "fail") << "\n";
    }
    return r.ok() ? ok : assertion_failed;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact quantum Schubert calculus for LG(n) and OG(n)", "qschub"};
    app.set_version_flag("--version", std::string(QSCH_VERSION));
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--cache-dir", o.cache_dir, "Table cache directory")->envname("QSCHUB_CACHE_DIR");
    app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_flag("--allow-large", o.allow_large, "Lift the default bounds on n");

    auto* gw = app.add_subcommand("gw", "Three-point invariant <lambda, mu, nu-dual>_d");
    gw->add_option("ring", o.ring, "og or lg")->required()->check(CLI::IsMember({"og", "lg"}));
    gw->add_option("--n", o.n, "Rank")->required();
    gw->add_option("--lambda", o.lambda, "Strict partition, comma separated");
    gw->add_option("--mu", o.mu, "Strict partition, comma separated");
    gw->add_option("--nu", o.nu, "Strict partition, comma separated");
    gw->add_option("--k,--d", o.degree, "Degree of q");

    auto* table = app.add_subcommand("table", "Full multiplication table");
    table->add_option("ring", o.ring, "og or lg")->required()->check(CLI::IsMember({"og", "lg"}));
    table->add_option("--n", o.n, "Rank")->required();
    table->add_option("--provenance", o.provenance, "vi, ortho, ideal or all")
        ->check(CLI::IsMember({"vi", "ortho", "ideal", "all", "vi_formula", "ortho_extraction", "ideal_reduction"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name")->required();
    verify->add_option("--n", o.n, "Rank")->required();
    verify->footer("Suites: " + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (o.n < 1) throw std::out_of_range("n must be at least 1");
        set_default_jobs(o.jobs);
        if (gw->parsed()) return cmd_gw(o);
        if (table->parsed()) return cmd_table(o);
        return cmd_verify(o);
    } catch (const PartitionError& e) {
        return fail(o, usage, "parse_error", e.what());
    } catch (const UnknownSuite& e) {
        return fail(o, usage, "unknown_suite", e.what());
    } catch (const std::out_of_range& e) {
        return fail(o, usage, "out_of_bounds", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(o, usage, "validation_error", e.what());
    } catch (const FormulaError& e) {
        return fail(o, internal, "formula_error", e.what());
    } catch (const std::exception& e) {
        return fail(o, internal, "internal_error", e.what());
    }
}
