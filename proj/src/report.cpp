#include "projclose/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "json.hpp"

#include "projclose/density.hpp"
#include "projclose/errors.hpp"
#include "projclose/parallel.hpp"
#include "projclose/subplane.hpp"

namespace projclose::cli {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t at = s.find(sep, begin);
        if (at == std::string::npos) {
            parts.push_back(s.substr(begin));
            return parts;
        }
        parts.push_back(s.substr(begin, at - begin));
        begin = at + 1;
    }
}

RationalTriple parse_triple(const std::string& text, bool approx_floats,
                            std::string* warning) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3)
        raise(ErrorKind::parse_error,
              "expected three comma-separated coordinates in '" + text + "'");
    return {parse_coordinate(parts[0], approx_floats, warning),
            parse_coordinate(parts[1], approx_floats, warning),
            parse_coordinate(parts[2], approx_floats, warning)};
}

std::string triple_str(const RationalTriple& t) {
    return t[0].str() + "," + t[1].str() + "," + t[2].str();
}

ordered_json coords_json(const HPoint& p) {
    return ordered_json::array(
        {p.x1().get_str(), p.x2().get_str(), p.x3().get_str()});
}

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["command"] = to_string(c.command);
    if (c.basis)
        j["basis"] = triple_str(c.basis->u) + ";" + triple_str(c.basis->v) + ";" +
                     triple_str(c.basis->w);
    if (c.quadrangle)
        j["quadrangle"] = triple_str((*c.quadrangle)[0]) + ";" +
                          triple_str((*c.quadrangle)[1]) + ";" +
                          triple_str((*c.quadrangle)[2]) + ";" +
                          triple_str((*c.quadrangle)[3]);
    j["levels"] = c.caps.max_level;
    j["max_points"] = c.caps.max_points;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["format"] = to_string(c.format);
    if (!c.output.empty()) j["output"] = c.output;
    j["approx_floats"] = c.approx_floats;
    j["timings"] = c.include_timings;
    return j;
}

ordered_json trace_json(const ClosureTrace& trace, bool timings) {
    ordered_json arr = ordered_json::array();
    for (const LevelStat& ls : trace.levels) {
        ordered_json e;
        e["level"] = ls.level;
        e["points"] = ls.points;
        e["new_points"] = ls.new_points;
        if (timings) e["ms"] = ls.ms;
        arr.push_back(std::move(e));
    }
    return arr;
}

const char* to_string(CapHit cap) {
    switch (cap) {
        case CapHit::none: return "none";
        case CapHit::level_cap: return "level_cap";
        case CapHit::point_cap: return "point_cap";
    }
    return "?";
}

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["kind"] = projclose::to_string(c.kind);
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

ordered_json axioms_json(const AxiomReport& a) {
    ordered_json j;
    j["p1_checked"] = a.p1_checked;
    j["p1_failures"] = a.p1_failures;
    j["p2_checked"] = a.p2_checked;
    j["p2_failures"] = a.p2_failures;
    j["p2_open"] = a.p2_open;
    j["p3_found"] = a.p3_found;
    if (a.p3_witness) {
        ordered_json w = ordered_json::array();
        for (const HPoint& p : *a.p3_witness) w.push_back(coords_json(p));
        j["p3_witness"] = std::move(w);
    }
    j["ortho_checked"] = a.ortho_checked;
    j["ortho_failures"] = a.ortho_failures;
    return j;
}

ordered_json density_json(const DensityReport& d) {
    ordered_json arr = ordered_json::array();
    for (const LevelDensity& l : d.levels) {
        ordered_json e;
        e["level"] = l.level;
        e["covering_radius"] = l.covering_radius;
        e["min_separation"] = l.min_separation;
        arr.push_back(std::move(e));
    }
    return arr;
}

// Partial files never become visible under the target name.
void write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp(path + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorKind::invalid_argument, "cannot write to '" + path + "'");
        out << content;
        if (!out.flush()) raise(ErrorKind::invalid_argument, "short write to '" + path + "'");
    }
    fs::rename(tmp, target);
}

std::string points_csv(const PointStore& store) {
    std::string csv = "level,x1,x2,x3\n";
    for (std::size_t i = 0; i < store.size(); ++i) {
        const HPoint& p = store.point(i);
        csv += std::to_string(store.level(i));
        csv += ',';
        csv += p.x1().get_str();
        csv += ',';
        csv += p.x2().get_str();
        csv += ',';
        csv += p.x3().get_str();
        csv += '\n';
    }
    return csv;
}

std::string csv_sibling(const std::string& output) {
    std::filesystem::path p(output);
    p.replace_extension();
    p += ".points.csv";
    return p.string();
}

} // namespace

Command parse_command(const std::string& name) {
    if (name == "closure") return Command::closure;
    if (name == "classify") return Command::classify;
    if (name == "density") return Command::density;
    if (name == "verify") return Command::verify;
    if (name == "moebius") return Command::moebius;
    raise(ErrorKind::parse_error, "unknown command '" + name + "'");
}

const char* to_string(Command c) {
    switch (c) {
        case Command::closure: return "closure";
        case Command::classify: return "classify";
        case Command::density: return "density";
        case Command::verify: return "verify";
        case Command::moebius: return "moebius";
    }
    return "?";
}

const char* to_string(OutputFormat f) {
    return f == OutputFormat::json ? "json" : "csv";
}

ExactScalar parse_coordinate(const std::string& text, bool approx_floats,
                             std::string* warning) {
    const std::string t = trim(text);
    if (t.empty()) raise(ErrorKind::parse_error, "empty coordinate");
    if (t.find_first_of(".eE") == std::string::npos) return ExactScalar::parse(t);

    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(t, &used);
    } catch (const std::exception&) {
        raise(ErrorKind::parse_error, "cannot parse coordinate '" + t + "'");
    }
    if (used != t.size() || !std::isfinite(x))
        raise(ErrorKind::parse_error, "cannot parse coordinate '" + t + "'");
    if (!approx_floats)
        raise(ErrorKind::parse_error,
              "float coordinate '" + t + "' requires --approx-floats");
    const ExactScalar r = ExactScalar::from_double(x);
    if (warning) {
        if (!warning->empty()) *warning += "; ";
        *warning += "approximated " + t + " as " + r.str();
    }
    return r;
}

BasisSpec parse_basis(const std::string& text, bool approx_floats, std::string* warning) {
    const std::vector<std::string> parts = split(text, ';');
    if (parts.size() != 3)
        raise(ErrorKind::parse_error, "expected three semicolon-separated vectors");
    return {parse_triple(parts[0], approx_floats, warning),
            parse_triple(parts[1], approx_floats, warning),
            parse_triple(parts[2], approx_floats, warning)};
}

std::array<RationalTriple, 4> parse_quadrangle(const std::string& text, bool approx_floats,
                                               std::string* warning) {
    const std::vector<std::string> parts = split(text, ';');
    if (parts.size() != 4)
        raise(ErrorKind::parse_error, "expected four semicolon-separated vectors");
    return {parse_triple(parts[0], approx_floats, warning),
            parse_triple(parts[1], approx_floats, warning),
            parse_triple(parts[2], approx_floats, warning),
            parse_triple(parts[3], approx_floats, warning)};
}

int run(const RunConfig& config) {
    try {
        const int threads = resolve_threads(config.threads);
        const bool wants_points =
            config.command == Command::closure || config.command == Command::density ||
            config.command == Command::moebius;
        if (config.format == OutputFormat::csv && !wants_points)
            raise(ErrorKind::invalid_argument,
                  "csv format applies to point-producing commands only");

        auto require_basis = [&]() -> const BasisSpec& {
            if (!config.basis)
                raise(ErrorKind::invalid_argument,
                      "--basis is required for this command");
            return *config.basis;
        };

        ordered_json report;
        report["config"] = config_json(config);

        std::optional<PointStore> store;
        CapHit cap = CapHit::none;

        switch (config.command) {
            case Command::classify: {
                report["classification"] = classification_json(classify_basis(require_basis()));
                break;
            }
            case Command::closure: {
                const BasisSpec& basis = require_basis();
                ClosureResult res =
                    run_closure(basis, config.caps, ClosureOptions{threads});
                report["classification"] = classification_json(classify_basis(basis));
                report["trace"] = trace_json(res.trace, config.include_timings);
                report["stabilized"] = res.trace.stabilized;
                report["cap_hit"] = to_string(res.trace.cap_hit);
                cap = res.trace.cap_hit;
                store = std::move(res.store);
                break;
            }
            case Command::density: {
                const BasisSpec& basis = require_basis();
                DensityRun dens = density_curve(basis, config.caps, config.samples, threads);
                report["classification"] = classification_json(classify_basis(basis));
                report["trace"] = trace_json(dens.closure.trace, config.include_timings);
                report["density"] = density_json(dens.report);
                report["stabilized"] = dens.closure.trace.stabilized;
                report["cap_hit"] = to_string(dens.closure.trace.cap_hit);
                cap = dens.closure.trace.cap_hit;
                store = std::move(dens.closure.store);
                break;
            }
            case Command::verify: {
                const BasisSpec& basis = require_basis();
                ClosureResult res =
                    run_closure(basis, config.caps, ClosureOptions{threads});
                report["classification"] = classification_json(classify_basis(basis));
                report["trace"] = trace_json(res.trace, config.include_timings);
                report["axioms"] =
                    axioms_json(verify_axioms(res.store, config.samples, config.seed));
                report["stabilized"] = res.trace.stabilized;
                report["cap_hit"] = to_string(res.trace.cap_hit);
                cap = res.trace.cap_hit;
                break;
            }
            case Command::moebius: {
                if (!config.quadrangle)
                    raise(ErrorKind::invalid_argument,
                          "--quadrangle is required for the moebius command");
                MoebiusResult res =
                    run_moebius(*config.quadrangle, config.caps.max_level, config.caps);
                report["trace"] = trace_json(res.trace, config.include_timings);
                report["stabilized"] = res.trace.stabilized;
                report["cap_hit"] = to_string(res.trace.cap_hit);
                cap = res.trace.cap_hit;
                store = std::move(res.store);
                break;
            }
        }

        if (config.format == OutputFormat::csv) {
            const std::string csv = points_csv(*store);
            if (config.output.empty())
                std::cout << csv;
            else
                write_file(config.output, csv);
        } else {
            const std::string body = report.dump(2) + "\n";
            if (config.output.empty()) {
                std::cout << body;
            } else {
                write_file(config.output, body);
                if (store) write_file(csv_sibling(config.output), points_csv(*store));
            }
        }

        return cap == CapHit::point_cap ? 3 : 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace projclose::cli
