#include "configcomplex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "configcomplex/complex.hpp"
#include "configcomplex/constructions.hpp"
#include "configcomplex/correspondence.hpp"
#include "configcomplex/error.hpp"
#include "configcomplex/formats.hpp"

namespace configcomplex::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

// Everything a command needs to print.
struct Ctx {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;
};

class UsageError : public Error {
public:
    using Error::Error;
};

template <typename T, typename F>
T load(const std::string& path, F&& reader) {
    std::istringstream in(read_file(path));
    return reader(in);
}

ColoredConfiguration load_config(const std::string& path) {
    return load<ColoredConfiguration>(path, [](std::istream& in) { return read_config(in); });
}

// Writes `text` to `path`, or to stdout when no path was given.
void deliver(Ctx& ctx, const std::string& path, const std::string& text) {
    if (path.empty())
        ctx.out << text;
    else
        write_file(path, text);
}

template <typename W, typename T>
std::string render(W&& writer, const T& value) {
    std::ostringstream ss;
    writer(ss, value);
    return ss.str();
}

json report_json(const Report& r) {
    json j;
    j["ok"] = r.ok();
    j["failures"] = json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
    j["notes"] = r.notes;
    return j;
}

int emit_report(Ctx& ctx, const std::string& title, const Report& r, json extra = json::object(),
                const std::vector<std::string>& info = {}) {
    if (ctx.format == Format::json) {
        json j = report_json(r);
        j["subject"] = title;
        j.update(extra);
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << title << ": " << (r.ok() ? "valid" : "INVALID") << '\n';
        for (const auto& f : r.failures) ctx.out << "  " << f.check << ": " << f.detail << '\n';
        for (const auto& line : info) ctx.out << "  " << line << '\n';
        for (const auto& n : r.notes) ctx.out << "  note: " << n << '\n';
    }
    return r.ok() ? 0 : 1;
}

std::size_t face_cap() {
    const char* env = std::getenv("CONFIGCOMPLEX_FACE_CAP");
    if (!env || !*env) return kDefaultFaceCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("CONFIGCOMPLEX_FACE_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> parse_group_spec(const std::string& spec) {
    std::vector<std::int64_t> moduli;
    std::string part;
    std::istringstream ss(spec);
    while (std::getline(ss, part, 'x')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size() || v < 1) throw std::invalid_argument("bad modulus");
            moduli.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("group spec must look like 7 or 3x3, got '" + spec + "'");
        }
    }
    if (moduli.empty()) throw UsageError("empty group spec");
    return moduli;
}

json element_json(const GroupElement& e) { return json(e); }

// complex check ------------------------------------------------------------

struct Row {
    std::string name;
    std::string status;  // pass, FAIL, skip, info
    std::string value;
};

int complex_check(Ctx& ctx, const std::string& path) {
    const ColoredConfiguration c = load_config(path);
    std::vector<Row> rows;
    auto row = [&](std::string name, std::string status, std::string value) {
        rows.push_back({std::move(name), std::move(status), std::move(value)});
    };
    auto verdict = [](bool ok) { return std::string(ok ? "pass" : "FAIL"); };

    const Report valid = validate_colored_configuration(c);
    row("colored configuration", verdict(valid.ok()),
        valid.ok() ? std::to_string(c.k()) + " colors, " + std::to_string(c.num_points()) + " points"
                   : valid.failures.front().detail);
    if (valid.ok() && c.k() < 2) {
        row("quotient complex", "FAIL", "needs at least 2 colors");
    } else if (valid.ok()) {
        const int k = c.k() - 1;
        const auto n = c.num_points();
        const QuotientComplex x = quotient_complex(c);
        const auto& facets = x.complex.facets();

        row("vertices", "info", std::to_string(x.complex.num_vertices()));
        row("degenerate", "info",
            x.degenerate ? "yes (" + std::to_string(x.coincidences.size()) + " positive/negative facets coincide)"
                         : "no");
        if (x.degenerate) {
            row("facets", "skip", std::to_string(facets.size()) + " distinct; 2n count needs distinct families");
        } else {
            bool sizes = std::all_of(facets.begin(), facets.end(),
                                     [&](const Facet& f) { return static_cast<int>(f.size()) == k + 1; });
            row("facets", verdict(sizes && static_cast<int>(facets.size()) == 2 * n),
                std::to_string(facets.size()) + " (" + std::to_string(n) + " positive + " + std::to_string(n) +
                    " negative, size " + std::to_string(k + 1) + ")");
        }
        row("lattice cross-check", verdict(cross_check_with_lattice(c)), "W_k/H vs direct construction");
        row("reference color independence", verdict(reference_color_independence(c)), "");
        if (c.k() <= 8) {
            const bool pos = is_isomorphic(facet_family(x, FacetSign::positive), c).has_value();
            const bool neg = is_isomorphic(facet_family(x, FacetSign::negative), dual(c)).has_value();
            row("facet families", verdict(pos && neg), "positive ~ C, negative ~ dual(C)");
        } else {
            row("facet families", "skip", "more than 8 colors");
        }
        if (x.degenerate)
            row("unique facets (dim >= 2)", "skip", "coinciding facets");
        else
            row("unique facets (dim >= 2)", verdict(faces_have_unique_facets(x.complex)), "");

        const bool plane = is_projective_plane(c);
        row("projective plane", "info", plane ? "yes" : "no");
        const bool neighborly = is_two_neighborly(x.complex);
        row("2-neighborly", plane ? verdict(neighborly) : "info", neighborly ? "yes" : "no");

        const LatticeAction action = LatticeAction::build(c);
        const LinearCode h = stabilizer_code(action);
        const ConfigAction t = translation_action(action, h);
        Report act = verify_free_action(c, t);
        act.merge(verify_complex_action(x, t.group, t.point_perm));
        row("free action", verdict(act.ok()), act.ok() ? t.group.name() : act.failures.front().detail);

        const int top = x.complex.dimension();
        const HomologyResult hr = homology(x.complex, top, face_cap());
        std::int64_t alternating = 0;
        for (std::size_t d = 0; d < hr.groups.size(); ++d) {
            const auto& g = hr.groups[d];
            alternating += d % 2 == 0 ? g.rank : -g.rank;
            std::string status = "info";
            if (d == 0) status = verdict(g == HomologyGroup{1, {}});
            if (d == 1) status = verdict(g == HomologyGroup{k, {}});
            row("H_" + std::to_string(d), status, g.to_string());
        }
        const std::int64_t chi = euler_characteristic(x.complex, face_cap());
        row("Euler characteristic", "info", std::to_string(chi));
        row("Euler-Poincare", verdict(chi == alternating), "sum of (-1)^d rank H_d = " + std::to_string(alternating));
    }

    const bool ok = std::none_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == "FAIL"; });
    if (ctx.format == Format::json) {
        json j;
        j["ok"] = ok;
        j["properties"] = json::array();
        for (const auto& r : rows) j["properties"].push_back({{"name", r.name}, {"status", r.status}, {"value", r.value}});
        ctx.out << j.dump(2) << '\n';
    } else {
        for (const auto& r : rows)
            ctx.out << std::left << std::setw(30) << r.name << std::setw(6) << r.status << r.value << '\n';
        ctx.out << (ok ? "all required properties hold" : "some required properties FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

int complex_homology(Ctx& ctx, const std::string& path, int max_dim) {
    const SimplicialComplex x = load<SimplicialComplex>(path, [](std::istream& in) { return read_complex(in); });
    const HomologyResult hr = homology(x, max_dim, face_cap());
    if (ctx.format == Format::json) {
        json j;
        j["face_counts"] = hr.face_counts;
        j["homology"] = json::array();
        for (const auto& g : hr.groups) j["homology"].push_back({{"rank", g.rank}, {"torsion", g.torsion}});
        ctx.out << j.dump(2) << '\n';
    } else {
        for (std::size_t d = 0; d < hr.groups.size(); ++d) ctx.out << "H_" << d << " = " << hr.groups[d].to_string() << '\n';
    }
    return 0;
}

// validate -----------------------------------------------------------------

int validate(Ctx& ctx, const std::string& kind, const std::string& path) {
    if (kind == "config") {
        const ColoredConfiguration c = load_config(path);
        const Report r = validate_colored_configuration(c);
        std::vector<std::string> info{std::to_string(c.k()) + " colors, " + std::to_string(c.num_points()) +
                                      " points, " + std::to_string(c.num_lines()) + " lines"};
        json extra{{"k", c.k()}, {"points", c.num_points()}, {"lines", c.num_lines()}};
        if (r.ok()) {
            const bool plane = is_projective_plane(c);
            info.push_back(std::string("projective plane: ") + (plane ? "yes" : "no"));
            extra["projective_plane"] = plane;
        }
        return emit_report(ctx, "configuration", r, extra, info);
    }
    if (kind == "diffset") {
        const DifferenceSet d = load<DifferenceSet>(path, [](std::istream& in) { return read_difference_set(in); });
        const Report r = validate_difference_set(d);
        return emit_report(ctx, "difference set", r, {{"group", d.group.name()}, {"order", d.order()}},
                           {"group " + d.group.name() + ", order " + std::to_string(d.order())});
    }
    if (kind == "semifield") {
        const Semifield s = load<Semifield>(path, [](std::istream& in) { return read_semifield(in); });
        return emit_report(ctx, "semifield", validate_semifield(s), {{"q", s.q}}, {"q = " + std::to_string(s.q)});
    }
    if (kind == "sidon") {
        const SidonSet b = load<SidonSet>(path, [](std::istream& in) { return read_sidon(in); });
        return emit_report(ctx, "Sidon set", validate_sidon(b), {{"group", b.group.name()}, {"size", b.elements.size()}},
                           {"group " + b.group.name() + ", size " + std::to_string(b.elements.size())});
    }
    // code
    const CodeFile cf = load<CodeFile>(path, [](std::istream& in) { return read_code(in); });
    if (!cf.was_canonical) ctx.err << "warning: basis was not in Hermite normal form; canonicalized\n";
    const LinearCode& l = cf.code;
    const bool r1 = code_is_radius1(l);
    const bool perfect = code_is_perfect(l);
    const std::string group = l.quotient().group().name();
    Report r;
    return emit_report(ctx, "linear code", r,
                       {{"k", l.k()}, {"index", l.index()}, {"group", group}, {"radius1", r1}, {"perfect", perfect},
                        {"canonical", cf.was_canonical}},
                       {"k = " + std::to_string(l.k()) + ", index " + std::to_string(l.index()) + ", A_k/L = " + group,
                        std::string("radius 1: ") + (r1 ? "yes" : "no"), std::string("perfect: ") + (perfect ? "yes" : "no")});
}

// correspond ---------------------------------------------------------------

int correspond(Ctx& ctx, const std::string& kind, const std::string& path, const std::string& output) {
    auto code_from = [&]() {
        const CodeFile cf = load<CodeFile>(path, [](std::istream& in) { return read_code(in); });
        if (!cf.was_canonical) ctx.err << "warning: basis was not in Hermite normal form; canonicalized\n";
        return cf.code;
    };
    if (kind == "sidon-to-code") {
        const SidonSet b = load<SidonSet>(path, [](std::istream& in) { return read_sidon(in); });
        deliver(ctx, output, render(write_code, sidon_to_code(b)));
    } else if (kind == "code-to-sidon") {
        deliver(ctx, output, render(write_sidon, code_to_sidon(code_from())));
    } else if (kind == "code-to-config") {
        deliver(ctx, output, render(write_config, code_to_config(code_from())));
    } else if (kind == "config-to-code") {
        deliver(ctx, output, render(write_code, config_to_code(load_config(path))));
    } else if (kind == "recover") {
        deliver(ctx, output, render(write_difference_set, recover_difference_set(load_config(path))));
    } else {
        const RoundTrip rt = roundtrip_config(load_config(path));
        json extra{{"identity_colors", rt.identity_colors}, {"index", rt.code.index()}};
        return emit_report(ctx, "round trip", rt.report, extra);
    }
    return 0;
}

// search -------------------------------------------------------------------

int search_diffsets(Ctx& ctx, std::int64_t n, std::size_t size) {
    const DifferenceSetSearch s = search_difference_sets(n, size);
    if (ctx.format == Format::json) {
        json sets = json::array();
        for (const auto& d : s.sets) {
            json e = json::array();
            for (const auto& x : d.elements) e.push_back(x.front());
            sets.push_back(e);
        }
        ctx.out << json{{"n", n}, {"size", size}, {"sets", sets}, {"reason", s.reason}}.dump(2) << '\n';
        return 0;
    }
    for (const auto& d : s.sets) {
        for (std::size_t i = 0; i < d.elements.size(); ++i) ctx.out << (i ? " " : "") << d.elements[i].front();
        ctx.out << '\n';
    }
    if (s.sets.empty()) ctx.out << "# none: " << s.reason << '\n';
    return 0;
}

int search_sidon(Ctx& ctx, const std::string& spec, std::size_t size) {
    const auto moduli = parse_group_spec(spec);
    const FiniteAbelianGroup g = FiniteAbelianGroup::from_moduli(moduli);
    const auto sets = search_sidon_sets(g, size);
    if (ctx.format == Format::json) {
        json arr = json::array();
        for (const auto& b : sets) {
            json e = json::array();
            for (const auto& x : b.elements) e.push_back(element_json(x));
            arr.push_back(e);
        }
        ctx.out << json{{"group", g.factors()}, {"size", size}, {"sets", arr}}.dump(2) << '\n';
        return 0;
    }
    ctx.out << "# group " << g.name() << ", " << sets.size() << " set(s)\n";
    for (const auto& b : sets) {
        for (std::size_t i = 0; i < b.elements.size(); ++i) ctx.out << (i ? " " : "") << g.element_name(b.elements[i]);
        ctx.out << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored configurations, their quotient complexes, and Sidon sets / lattice codes"};
    app.name("configcomplex");
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string output, file, table;
    std::int64_t q = 0, n = 0;
    std::size_t size = 0;
    int max_dim = 2;
    bool as_diffset = false, generic = false;
    std::string group_spec;

    auto* construct = app.add_subcommand("construct", "Build a colored configuration");
    construct->require_subcommand(1);
    auto* singer = construct->add_subcommand("singer", "Singer difference set plane of order q");
    singer->add_option("--q", q, "Prime power q <= 16")->required();
    singer->add_flag("--as-diffset", as_diffset, "Write the difference set instead of the configuration");
    singer->add_option("-o,--output", output);
    auto* semifield = construct->add_subcommand("semifield", "Affine configuration of a commutative semifield");
    auto* field_opt = semifield->add_option("--field", q, "Use GF(q)");
    auto* table_opt = semifield->add_option("--table", table, "Semifield table file");
    field_opt->excludes(table_opt);
    semifield->add_option("-o,--output", output);
    auto* from_diffset = construct->add_subcommand("from-diffset", "Configuration of a planar difference set");
    from_diffset->add_option("file", file)->required();
    from_diffset->add_option("-o,--output", output);

    auto* validate_cmd = app.add_subcommand("validate", "Validate a file");
    validate_cmd->require_subcommand(1);
    for (const char* kind : {"config", "diffset", "semifield", "sidon", "code"})
        validate_cmd->add_subcommand(kind)->add_option("file", file)->required();

    auto* complex_cmd = app.add_subcommand("complex", "Quotient complex X(C)");
    complex_cmd->require_subcommand(1);
    auto* build = complex_cmd->add_subcommand("build", "Write X(C) for a configuration");
    build->add_option("config", file)->required();
    build->add_option("-o,--output", output);
    build->add_flag("--generic", generic, "Bare facet list with 0-based indices");
    auto* hom = complex_cmd->add_subcommand("homology", "Integral homology of a complex file");
    hom->add_option("complex", file)->required();
    hom->add_option("--max-dim", max_dim)->check(CLI::NonNegativeNumber);
    auto* check = complex_cmd->add_subcommand("check", "Verify the properties of X(C)");
    check->add_option("config", file)->required();

    auto* corr = app.add_subcommand("correspond", "Sidon sets, codes and configurations");
    corr->require_subcommand(1);
    for (const char* kind : {"sidon-to-code", "code-to-sidon", "code-to-config", "config-to-code", "roundtrip", "recover"}) {
        auto* sub = corr->add_subcommand(kind);
        sub->add_option("file", file)->required();
        sub->add_option("-o,--output", output);
    }

    auto* search = app.add_subcommand("search", "Exhaustive searches");
    search->require_subcommand(1);
    auto* sd = search->add_subcommand("diffsets", "Planar difference sets in Z_n");
    sd->add_option("--n", n)->required();
    sd->add_option("--size", size)->required();
    auto* ss = search->add_subcommand("sidon", "Generating Sidon sets in a finite abelian group");
    ss->add_option("--group", group_spec, "Moduli such as 8 or 3x3")->required();
    ss->add_option("--size", size)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    Ctx ctx{out, err, format == "json" ? Format::json : Format::text};
    try {
        if (*singer) {
            const DifferenceSet d = singer_difference_set(q);
            if (as_diffset)
                deliver(ctx, output, render(write_difference_set, d));
            else
                deliver(ctx, output, render(write_config, config_from_difference_set(d).config));
        } else if (*semifield) {
            if (field_opt->count() + table_opt->count() != 1) throw UsageError("give exactly one of --field or --table");
            const Semifield s = table.empty() ? semifield_from_field(q)
                                              : load<Semifield>(table, [](std::istream& in) { return read_semifield(in); });
            deliver(ctx, output, render(write_config, config_from_semifield(s)));
        } else if (*from_diffset) {
            const DifferenceSet d = load<DifferenceSet>(file, [](std::istream& in) { return read_difference_set(in); });
            deliver(ctx, output, render(write_config, config_from_difference_set(d).config));
        } else if (*validate_cmd) {
            return validate(ctx, validate_cmd->get_subcommands().front()->get_name(), file);
        } else if (*build) {
            const QuotientComplex x = quotient_complex(load_config(file));
            if (x.degenerate)
                err << "note: " << x.coincidences.size() << " positive/negative facet pair(s) coincide\n";
            deliver(ctx, output, generic ? render(write_facet_list, x.complex) : render(write_complex, x));
        } else if (*hom) {
            return complex_homology(ctx, file, max_dim);
        } else if (*check) {
            return complex_check(ctx, file);
        } else if (*corr) {
            return correspond(ctx, corr->get_subcommands().front()->get_name(), file, output);
        } else if (*sd) {
            return search_diffsets(ctx, n, size);
        } else if (*ss) {
            return search_sidon(ctx, group_spec, size);
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace configcomplex::cli
