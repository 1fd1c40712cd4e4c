#include "drinfeld/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "drinfeld/census.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/report.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

struct Config {
    int p = 0;
    int s = 1;
    int d = 0;
    int m = 1;
    std::optional<int> n;
    std::optional<std::string> P;
    std::string g = "0";
    std::string delta = "1";
    std::string i1, i2;
    std::string format = "json";
    std::string out;
    int jobs = 1;
    std::string hurwitz = "auto";
    bool no_sweep = false;
    std::string trend;
};

int default_jobs() {
    if (const char* v = std::getenv("DRINFELD_JOBS")) {
        try {
            const int j = std::stoi(v);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// Tower for n = m·deg P and P parsed in it.
std::pair<TowerPtr, UPoly> tower_and_P(const Config& c) {
    if (!c.P) throw ValidationError("--P is required");
    const TowerPtr base = FieldTower::build(c.p, c.s, 1);
    const int d = parse_upoly(base.get(), *c.P).deg();
    if (d < 1) throw ValidationError("P must have positive degree");
    int n = d * c.m;
    if (c.n) {
        if (*c.n < 1 || *c.n % d != 0)
            throw ValidationError("deg P = " + std::to_string(d) + " does not divide n = " + std::to_string(*c.n));
        n = *c.n;
    }
    TowerPtr tower = FieldTower::build(c.p, c.s, n);
    UPoly P = parse_upoly(tower.get(), *c.P);
    return {tower, P};
}

std::pair<int, int> prime_power(int q) {
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            int s = 0, r = q;
            while (r % p == 0) {
                r /= p;
                ++s;
            }
            if (r != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
            return {p, s};
        }
    throw ValidationError("invalid q in --trend");
}

std::vector<std::pair<int, int>> parse_trend(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(prime_power(std::stoi(item)));
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed --trend entry '" + item + "'");
        }
    }
    return out;
}

std::string flat_csv(const Json& j) {
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_structured()) continue;
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += it.key();
        row += '"' + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + '"';
    }
    return header + "\n" + row + "\n";
}

std::string flat_text(const Json& j, const std::string& indent = "") {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_object()) {
            s += indent + it.key() + ":\n" + flat_text(it.value(), indent + "  ");
        } else {
            s += indent + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
        }
    }
    return s;
}

std::string render(const Json& j, const std::string& format) {
    if (format == "csv") return flat_csv(j);
    if (format == "text") return flat_text(j);
    return dump(j);
}

// Writes to a sibling temporary and renames, so a failed run leaves no partial file.
void emit(const Config& c, const std::string& body, std::ostream& out) {
    if (c.out.empty()) {
        out << body;
        return;
    }
    const std::filesystem::path target(c.out);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ValidationError("cannot open " + tmp.string() + " for writing");
        f << body;
        if (!f.flush()) throw ValidationError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ValidationError("cannot rename output to " + target.string() + ": " + ec.message());
    }
}

int cmd_charpoly(const Config& c, std::ostream& out) {
    const auto [tower, P] = tower_and_P(c);
    DrinfeldModule phi(tower, P, parse_elem(*tower, c.g), parse_elem(*tower, c.delta));
    const CharPoly cp = char_poly(phi);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["g"] = format_elem(*tower, phi.g());
    j["delta"] = format_elem(*tower, phi.delta());
    j.update(charpoly_json(phi, cp));
    emit(c, render(j, c.format), out);
    return kExitOk;
}

int cmd_structure(const Config& c, std::ostream& out) {
    const auto [tower, P] = tower_and_P(c);
    DrinfeldModule phi(tower, P, parse_elem(*tower, c.g), parse_elem(*tower, c.delta));
    const CharPoly cp = char_poly(phi);
    const InvariantFactors inv = structure(phi);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["g"] = format_elem(*tower, phi.g());
    j["delta"] = format_elem(*tower, phi.delta());
    j["ordinary"] = phi.height() == 1;
    j.update(structure_json(inv, check_criteria(phi, inv, cp)));
    emit(c, render(j, c.format), out);
    return kExitOk;
}

int cmd_realize(const Config& c, std::ostream& out) {
    const auto [tower, P] = tower_and_P(c);
    const UPoly i1 = parse_upoly(tower.get(), c.i1);
    const UPoly i2 = parse_upoly(tower.get(), c.i2);
    const RealizeResult r = realize(tower, P, i1, i2);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j.update(realize_json(*tower, i1, i2, r));
    emit(c, render(j, c.format), out);
    return r.realized() ? kExitOk : kExitNotRealizable;
}

int cmd_census(const Config& c, std::ostream& out) {
    CensusOptions opt;
    opt.jobs = c.jobs;
    opt.hurwitz = c.hurwitz == "on" ? HurwitzMode::On : c.hurwitz == "off" ? HurwitzMode::Off : HurwitzMode::Auto;
    opt.sweep_modules = !c.no_sweep;
    if (!c.trend.empty()) {
        const auto rows = trend_probe(parse_trend(c.trend), c.d, c.m, opt);
        Json j = trend_json(rows, c.d, c.m);
        j["schema_version"] = kSchemaVersion;
        emit(c, c.format == "json" ? dump(j) : flat_text(j), out);
        return kExitOk;
    }
    const CensusReport r = run_census(c.p, c.s, c.d, c.m, c.P, opt);
    std::string body;
    if (c.format == "csv") body = census_csv(r);
    else if (c.format == "text") body = census_text(r);
    else body = dump(census_json(r));
    emit(c, body, out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-2 Drinfeld modules over finite fields"};
    app.require_subcommand(1);
    Config c;
    c.jobs = default_jobs();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", c.p, "characteristic")->required();
        sub->add_option("--s", c.s, "q = p^s")->capture_default_str();
        sub->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", c.out, "write output to this file");
    };
    auto add_module = [&](CLI::App* sub) {
        sub->add_option("--P", c.P, "monic irreducible A-characteristic, e.g. \"T^2+1\"")->required();
        sub->add_option("--m", c.m, "n = m deg P")->capture_default_str();
        sub->add_option("--n", c.n, "extension degree, alternative to --m");
    };

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of Frobenius");
    add_common(charpoly);
    add_module(charpoly);
    charpoly->add_option("--g", c.g, "coefficient of tau")->capture_default_str();
    charpoly->add_option("--delta", c.delta, "coefficient of tau^2")->capture_default_str();

    CLI::App* structure_cmd = app.add_subcommand("structure", "invariant factors of L as an A-module");
    add_common(structure_cmd);
    add_module(structure_cmd);
    structure_cmd->add_option("--g", c.g)->capture_default_str();
    structure_cmd->add_option("--delta", c.delta)->capture_default_str();

    CLI::App* realize_cmd = app.add_subcommand("realize", "find a module with prescribed structure");
    add_common(realize_cmd);
    add_module(realize_cmd);
    realize_cmd->add_option("--i1", c.i1)->required();
    realize_cmd->add_option("--i2", c.i2)->required();

    CLI::App* census = app.add_subcommand("census", "exhaustive census for (q, d, m)");
    add_common(census);
    census->add_option("--d", c.d, "deg P")->required();
    census->add_option("--m", c.m, "n = m d")->capture_default_str();
    census->add_option("--P", c.P, "A-characteristic; default the first monic irreducible of degree d");
    census->add_option("--jobs", c.jobs, "worker threads (default $DRINFELD_JOBS or 1)")->check(CLI::PositiveNumber);
    census->add_option("--hurwitz", c.hurwitz, "class-number cross-checks")
        ->check(CLI::IsMember({"auto", "on", "off"}))
        ->capture_default_str();
    census->add_flag("--no-sweep", c.no_sweep, "analyse class representatives only");
    census->add_option("--trend", c.trend, "comma-separated q values; prints C and C0 across q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (charpoly->parsed()) return cmd_charpoly(c, out);
        if (structure_cmd->parsed()) return cmd_structure(c, out);
        if (realize_cmd->parsed()) return cmd_realize(c, out);
        return cmd_census(c, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace drinfeld
