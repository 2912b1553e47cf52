#include "permstats/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permstats/bijections.hpp"
#include "permstats/distributions.hpp"
#include "permstats/errors.hpp"
#include "permstats/render.hpp"

namespace permstats {

namespace {

struct GlobalOptions {
    Limits limits{};
    unsigned workers = 1;
    std::string cache_dir;
    bool offline = false;
};

struct DistArgs {
    std::string stat, avoid, n = "0", method = "oracle", format = "json";
};

struct MapArgs {
    std::string bijection, input, format = "text";
};

struct VerifyArgs {
    bool all = false;
    std::vector<std::string> only;
    unsigned max_n = 8;
    std::string format = "text", report_path, fault;
};

struct SeriesArgs {
    std::string name, format = "markdown";
    unsigned max_n = 8;
};

struct OeisArgs {
    std::string formula, sequence, format = "bfile";
    unsigned max_n = 10;
    bool check = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "5" or "3..8".
std::pair<unsigned, unsigned> parse_n_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const unsigned n = static_cast<unsigned>(std::stoul(text, &used));
            if (used != text.size()) throw std::invalid_argument(text);
            return {n, n};
        }
        const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots), &used));
        if (used != dots) throw std::invalid_argument(text);
        const std::string rest = text.substr(dots + 2);
        const unsigned hi = static_cast<unsigned>(std::stoul(rest, &used));
        if (used != rest.size() || lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad --n value '" + text + "' (expected N or LO..HI)");
    }
}

int cmd_dist(const DistArgs& a, const GlobalOptions& g, CliIo& io)
{
    const StatKind stat = parse_stat(a.stat);
    const PatternSet basis = PatternSet::parse(a.avoid);
    const Method method = parse_method(a.method);
    const OutputFormat format = parse_format(a.format);
    const auto [lo, hi] = parse_n_range(a.n);
    const DistTable table = distribution_table(stat, basis, lo, hi, method, {g.workers, g.limits});
    io.out << render_table(table, format);
    return kExitOk;
}

using Summary = std::vector<std::pair<std::string, std::string>>;

void add_perm_stats(Summary& s, const std::string& prefix, const Perm& p)
{
    for (StatKind k : kAllStats) s.emplace_back(prefix + std::string(stat_name(k)), std::to_string(stat(k, p)));
}

std::string ltr_label(const Perm& p)
{
    std::string out;
    for (const auto& pt : ltr_maxima(p)) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(pt.position) + "," + std::to_string(pt.value) + ")";
    }
    return out;
}

std::string perm_text(const Perm& p) { return p.empty() ? "e" : p.to_string(); }
std::string dyck_text(const DyckWord& d) { return d.empty() ? "e" : d.str(); }

DyckWord parse_dyck_input(const std::string& text) { return text == "e" ? DyckWord{} : DyckWord::parse(text); }

struct MapResult {
    std::string output;
    Summary summary;
};

MapResult run_map(const std::string& name, const std::string& input)
{
    using Handler = std::function<MapResult(const std::string&)>;
    const auto encoder = [](Bits (*enc)(const Perm&)) {
        return Handler([enc](const std::string& in) {
            const Perm p = Perm::parse(in);
            const Bits s = enc(p);
            MapResult r{s.empty() ? "e" : s.to_string(), {}};
            add_perm_stats(r.summary, "", p);
            return r;
        });
    };
    const auto decoder = [](Perm (*dec)(const Bits&)) {
        return Handler([dec](const std::string& in) {
            const Perm p = dec(Bits::parse(in));
            MapResult r{perm_text(p), {}};
            add_perm_stats(r.summary, "", p);
            return r;
        });
    };
    static const std::map<std::string, Handler> handlers = [&] {
        std::map<std::string, Handler> h;
        h["phi"] = [](const std::string& in) {
            const Perm p = Perm::parse(in);
            const DyckWord d = phi231(p);
            return MapResult{dyck_text(d),
                             {{"pk", std::to_string(stat(StatKind::pk, p))}, {"DUU", std::to_string(factor_count(d, "DUU"))}}};
        };
        h["phi-inv"] = [](const std::string& in) {
            const Perm p = phi231_inv(parse_dyck_input(in));
            return MapResult{perm_text(p), {{"pk", std::to_string(stat(StatKind::pk, p))}}};
        };
        h["psi"] = [](const std::string& in) {
            const Perm p = Perm::parse(in);
            const DyckWord d = psi321(p);
            return MapResult{dyck_text(d),
                             {{"pk", std::to_string(stat(StatKind::pk, p))},
                              {"st*", std::to_string(st_star(d))},
                              {"st", std::to_string(st(d))},
                              {"des", std::to_string(stat(StatKind::des, p))}}};
        };
        h["psi-inv"] = [](const std::string& in) {
            const DyckWord d = parse_dyck_input(in);
            const Perm p = psi321_inv(d);
            return MapResult{perm_text(p),
                             {{"st", std::to_string(st(d))},
                              {"st*", std::to_string(st_star(d))},
                              {"des", std::to_string(stat(StatKind::des, p))},
                              {"pk", std::to_string(stat(StatKind::pk, p))}}};
        };
        h["psi-hat"] = [](const std::string& in) {
            const Perm p = Perm::parse(in);
            const DyckWord d = psi_hat(p);
            return MapResult{dyck_text(d),
                             {{"des", std::to_string(stat(StatKind::des, p))}, {"st*", std::to_string(st_star(d))}}};
        };
        h["zeta"] = [](const std::string& in) {
            const Perm p = Perm::parse(in);
            const Perm q = zeta(p);
            return MapResult{perm_text(q),
                             {{"pk", std::to_string(stat(StatKind::pk, p))},
                              {"pk(image)", std::to_string(stat(StatKind::pk, q))},
                              {"ltr-maxima", ltr_label(q)}}};
        };
        h["zeta-inv"] = [](const std::string& in) {
            const Perm q = Perm::parse(in);
            const Perm p = zeta_inv(q);
            return MapResult{perm_text(p),
                             {{"pk", std::to_string(stat(StatKind::pk, q))},
                              {"pk(image)", std::to_string(stat(StatKind::pk, p))},
                              {"ltr-maxima", ltr_label(p)}}};
        };
        h["iota"] = [](const std::string& in) {
            const DyckWord d = parse_dyck_input(in);
            const DyckWord e = iota(d);
            return MapResult{dyck_text(e),
                             {{"st", std::to_string(st(d))},
                              {"des", std::to_string(stat(StatKind::des, psi321_inv(d)))},
                              {"st(image)", std::to_string(st(e))},
                              {"des(image)", std::to_string(stat(StatKind::des, psi321_inv(e)))}}};
        };
        h["enc132213"] = encoder(enc_132_213);
        h["dec132213"] = decoder(dec_132_213);
        h["enc213231"] = encoder(enc_213_231);
        h["dec213231"] = decoder(dec_213_231);
        h["enc123132"] = encoder(enc_123_132);
        h["dec123132"] = decoder(dec_123_132);
        return h;
    }();
    const auto it = handlers.find(name);
    if (it == handlers.end()) {
        std::string known;
        for (const auto& [k, v] : handlers) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown bijection '" + name + "' (known: " + known + ")");
    }
    return it->second(input);
}

int cmd_map(const MapArgs& a, CliIo& io)
{
    const MapResult r = run_map(a.bijection, a.input);
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["bijection"] = a.bijection;
        j["input"] = a.input;
        j["output"] = r.output;
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.summary) summary[k] = v;
        j["summary"] = std::move(summary);
        io.out << j.dump() << '\n';
    } else if (a.format == "text") {
        io.out << r.output << '\n';
        for (const auto& [k, v] : r.summary) io.out << k << ": " << v << '\n';
    } else {
        throw UsageError("map supports --format text or json");
    }
    return kExitOk;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items)
{
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) out.push_back(part);
        }
    }
    return out;
}

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g, CliIo& io)
{
    if (a.all == !a.only.empty()) throw UsageError("verify needs exactly one of --all or --only");
    if (a.format != "text" && a.format != "json") throw UsageError("verify supports --format text or json");
    VerifyOptions opts;
    opts.max_n = a.max_n;
    opts.selection = split_commas(a.only);
    opts.workers = g.workers;
    opts.limits = g.limits;
    if (!a.fault.empty()) opts.fault = parse_formula_id(a.fault);
    const auto reports = verify_all(opts);
    const std::string json = render_reports_json(reports, a.max_n);
    io.out << (a.format == "json" ? json : render_reports_text(reports));
    if (!a.report_path.empty()) {
        std::ofstream file(a.report_path, std::ios::binary | std::ios::trunc);
        file << json;
        if (!file) {
            io.err << "error: cannot write report to " << a.report_path << '\n';
            return kExitEnvironment;
        }
    }
    return all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

int cmd_series(const SeriesArgs& a, const GlobalOptions& g, CliIo& io)
{
    const OutputFormat format = parse_format(a.format);
    if (a.max_n > g.limits.series_cap) {
        throw ResourceLimit("max n " + std::to_string(a.max_n) + " exceeds the series cap " +
                            std::to_string(g.limits.series_cap));
    }
    io.out << render_series(a.name, series_by_name(a.name, a.max_n), a.max_n, format);
    return kExitOk;
}

int cmd_oeis(const OeisArgs& a, const GlobalOptions& g, CliIo& io)
{
    if (a.formula.empty() == a.sequence.empty()) throw UsageError("oeis needs exactly one of --formula or --sequence");
    if (!a.sequence.empty()) validate_oeis_id(a.sequence);
    if (!a.formula.empty()) parse_formula_id(a.formula);
    const Flattening& f = find_flattening(a.formula.empty() ? a.sequence : a.formula);
    if (a.format != "bfile") throw UsageError("oeis supports --format bfile only");
    const std::vector<Count> local = flatten(f, a.max_n);
    if (!a.check) {
        io.out << render_bfile(local);
        return kExitOk;
    }
    OeisOptions opts;
    opts.cache_dir = g.cache_dir;
    opts.offline = g.offline;
    opts.transport = io.transport;
    OeisClient client(std::move(opts));
    const OeisRef ref = client.fetch(f.id);
    const MatchReport m = compare(local, ref, f.offset);
    io.out << f.id << " (" << f.description << "): " << m.prefix << "/" << m.compared << " terms match"
           << " [source: " << (ref.source == OeisSource::cache ? "cache" : "network") << ", offset " << f.offset << "]\n";
    if (m.mismatch) {
        io.out << "first mismatch at term " << m.mismatch->position << ": local " << m.mismatch->local << ", OEIS "
               << m.mismatch->reference << '\n';
    }
    return m.matched() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, CliIo io)
{
    CLI::App app{"Permutation statistics over pattern-avoiding classes", "permstats"};
    app.set_config("--config", "", "key=value file supplying any global option");
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);

    GlobalOptions g;
    app.add_option("--perm-cap,--perm_cap", g.limits.perm_cap, "Largest n for permutation enumeration")->capture_default_str();
    app.add_option("--dyck-cap,--dyck_cap", g.limits.dyck_cap, "Largest semilength for Dyck enumeration")->capture_default_str();
    app.add_option("--bits-cap,--bits_cap", g.limits.bits_cap, "Largest binary word length")->capture_default_str();
    app.add_option("--series-cap,--series_cap", g.limits.series_cap, "Largest series degree")->capture_default_str();
    app.add_option("--workers", g.workers, "Threads for oracle enumeration")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--cache-dir,--cache_dir", g.cache_dir, "OEIS cache directory (default: $PERMSTATS_OEIS_CACHE)");
    app.add_flag("--offline", g.offline, "Use only cached OEIS data");

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Distribution table of a statistic over a class");
    dist_cmd->add_option("--stat", dist.stat, "asc, des, dasc, ddes, pk or vl")->required();
    dist_cmd->add_option("--avoid", dist.avoid, "Basis, e.g. 132,213")->required();
    dist_cmd->add_option("--n", dist.n, "Length N or range LO..HI")->required();
    dist_cmd->add_option("--method", dist.method, "oracle, closed_form or series")->capture_default_str();
    dist_cmd->add_option("--format", dist.format, "json, csv, markdown or bfile")->capture_default_str();

    MapArgs map;
    auto* map_cmd = app.add_subcommand("map", "Apply a bijection or encoding");
    map_cmd->add_option("--bijection", map.bijection, "phi, phi-inv, psi, psi-inv, psi-hat, zeta, zeta-inv, iota, "
                                                      "enc132213, dec132213, enc213231, dec213231, enc123132, dec123132")
        ->required();
    map_cmd->add_option("--input", map.input, "Permutation, Dyck word or binary word")->required();
    map_cmd->add_option("--format", map.format, "text or json")->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check formulas, bijections and identities against brute force");
    verify_cmd->add_flag("--all", verify.all, "Run every check");
    verify_cmd->add_option("--only", verify.only, "Comma-separated check names");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest n to check")->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "text or json")->capture_default_str();
    verify_cmd->add_option("--report", verify.report_path, "Also write the JSON report here");
    verify_cmd->add_option("--inject-fault", verify.fault, "Perturb a closed form")->group("");
    bool list_checks = false;
    verify_cmd->add_flag("--list", list_checks, "Print the check names and exit");

    SeriesArgs series;
    auto* series_cmd = app.add_subcommand("series", "Coefficient triangle of a generating function");
    series_cmd->add_option("--name", series.name, "des321, pk321, B, D or ddes132213")->required();
    series_cmd->add_option("--max-n", series.max_n, "Largest z-degree")->capture_default_str();
    series_cmd->add_option("--format", series.format, "json, csv, markdown or bfile")->capture_default_str();

    OeisArgs oeis;
    auto* oeis_cmd = app.add_subcommand("oeis", "Export a flattened triangle, optionally checked against OEIS");
    oeis_cmd->add_option("--formula", oeis.formula, "Formula name, e.g. PK231");
    oeis_cmd->add_option("--sequence", oeis.sequence, "OEIS id, e.g. A091894");
    oeis_cmd->add_option("--max-n", oeis.max_n, "Largest n")->capture_default_str();
    oeis_cmd->add_option("--format", oeis.format, "bfile")->capture_default_str();
    oeis_cmd->add_flag("--check", oeis.check, "Fetch the b-file and compare");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*dist_cmd) return cmd_dist(dist, g, io);
        if (*map_cmd) return cmd_map(map, io);
        if (*verify_cmd) {
            if (list_checks) {
                for (const auto& name : verify_check_names()) io.out << name << '\n';
                return kExitOk;
            }
            return cmd_verify(verify, g, io);
        }
        if (*series_cmd) return cmd_series(series, g, io);
        if (*oeis_cmd) return cmd_oeis(oeis, g, io);
    } catch (const PreconditionError& e) {
        io.err << "error: " << e.what() << " (violates " << e.violated_pattern() << ")\n";
        return kExitUsage;
    } catch (const InvalidDyck& e) {
        io.err << "error: " << e.what() << " (at index " << e.index() << ")\n";
        return kExitUsage;
    } catch (const OeisOffline& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitEnvironment;
    } catch (const OeisNotFound& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitEnvironment;
    } catch (const OeisParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitEnvironment;
    } catch (const std::filesystem::filesystem_error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitEnvironment;
    } catch (const InvalidInput& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Unsupported& e) {
        io.err << "error: unsupported: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArithmeticOverflow& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace permstats
