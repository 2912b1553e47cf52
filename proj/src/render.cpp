#include "permstats/render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "permstats/errors.hpp"

namespace permstats {

using ordered_json = nlohmann::ordered_json;

std::string_view format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::bfile: return "bfile";
    }
    return "?";
}

OutputFormat parse_format(std::string_view name)
{
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "markdown" || name == "md") return OutputFormat::markdown;
    if (name == "bfile") return OutputFormat::bfile;
    throw InvalidInput("unknown format '" + std::string(name) + "'");
}

namespace {

ordered_json row_json(const DistTable& table, unsigned n, const DistRow& row)
{
    ordered_json counts = ordered_json::object();
    for (const auto& [k, c] : row) {
        if (c) counts[std::to_string(k)] = c;
    }
    ordered_json j;
    j["basis"] = table.basis.to_strings();
    j["stat"] = stat_name(table.stat);
    j["n"] = n;
    j["counts"] = std::move(counts);
    j["method"] = method_name(table.method);
    return j;
}

unsigned max_key(const DistRow& row)
{
    unsigned m = 0;
    for (const auto& [k, c] : row) {
        if (c) m = std::max(m, k);
    }
    return m;
}

template <typename Row>
std::string markdown_triangle(const std::map<unsigned, Row>& rows)
{
    unsigned kmax = 0;
    for (const auto& [n, row] : rows) {
        for (const auto& [k, c] : row) {
            if (c) kmax = std::max(kmax, k);
        }
    }
    std::ostringstream out;
    out << "| n |";
    for (unsigned k = 0; k <= kmax; ++k) out << " k=" << k << " |";
    out << "\n|---|";
    for (unsigned k = 0; k <= kmax; ++k) out << "---|";
    out << "\n";
    for (const auto& [n, row] : rows) {
        out << "| " << n << " |";
        for (unsigned k = 0; k <= kmax; ++k) {
            const auto it = row.find(k);
            out << " " << (it == row.end() ? 0 : it->second) << " |";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string render_bfile(const std::vector<Count>& terms, std::int64_t first_index)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) out << first_index + static_cast<std::int64_t>(i) << ' ' << terms[i] << '\n';
    return out.str();
}

std::string render_table(const DistTable& table, OutputFormat format)
{
    switch (format) {
    case OutputFormat::json: {
        if (table.rows.size() == 1) {
            const auto& [n, row] = *table.rows.begin();
            return row_json(table, n, row).dump() + "\n";
        }
        ordered_json arr = ordered_json::array();
        for (const auto& [n, row] : table.rows) arr.push_back(row_json(table, n, row));
        return arr.dump() + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream out;
        out << "n,k,count\n";
        for (const auto& [n, row] : table.rows) {
            for (const auto& [k, c] : row) {
                if (c) out << n << ',' << k << ',' << c << '\n';
            }
        }
        return out.str();
    }
    case OutputFormat::markdown: return markdown_triangle(table.rows);
    case OutputFormat::bfile: {
        std::vector<Count> terms;
        for (const auto& [n, row] : table.rows) {
            for (unsigned k = 0; k <= max_key(row); ++k) {
                const auto it = row.find(k);
                terms.push_back(it == row.end() ? 0 : it->second);
            }
        }
        return render_bfile(terms);
    }
    }
    return {};
}

DistTable parse_table_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object()) j = ordered_json::array({j});
    if (!j.is_array() || j.empty()) throw InvalidInput("expected a table object or a nonempty array");

    std::optional<DistTable> table;
    try {
        for (const auto& obj : j) {
            std::vector<Perm> patterns;
            for (const auto& p : obj.at("basis")) patterns.push_back(Perm::parse(p.get<std::string>()));
            PatternSet basis(std::move(patterns));
            const StatKind stat = parse_stat(obj.at("stat").get<std::string>());
            const Method method = parse_method(obj.at("method").get<std::string>());
            if (!table) table = DistTable{basis, stat, method, {}};
            if (table->basis != basis || table->stat != stat || table->method != method) {
                throw InvalidInput("rows disagree on basis, stat or method");
            }
            DistRow row;
            for (const auto& [k, c] : obj.at("counts").items()) {
                const Count v = c.get<Count>();
                if (v) row[static_cast<unsigned>(std::stoul(k))] = v;
            }
            table->rows[obj.at("n").get<unsigned>()] = std::move(row);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed table JSON: ") + e.what());
    }
    return *table;
}

std::string render_series(std::string_view name, const BivariateSeries& series, unsigned max_n, OutputFormat format)
{
    std::map<unsigned, std::map<unsigned, std::int64_t>> rows;
    for (unsigned n = 0; n <= max_n; ++n) {
        const auto coeffs = series.row(n);
        auto& row = rows[n];
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k]) row[static_cast<unsigned>(k)] = coeffs[k];
        }
    }
    switch (format) {
    case OutputFormat::json: {
        ordered_json j;
        j["series"] = name;
        j["max_n"] = max_n;
        ordered_json jr = ordered_json::object();
        for (const auto& [n, row] : rows) {
            ordered_json coeffs = ordered_json::object();
            for (const auto& [k, c] : row) coeffs[std::to_string(k)] = c;
            jr[std::to_string(n)] = std::move(coeffs);
        }
        j["rows"] = std::move(jr);
        return j.dump() + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream out;
        out << "n,k,coefficient\n";
        for (const auto& [n, row] : rows) {
            for (const auto& [k, c] : row) out << n << ',' << k << ',' << c << '\n';
        }
        return out.str();
    }
    case OutputFormat::markdown: return markdown_triangle(rows);
    case OutputFormat::bfile: {
        std::ostringstream out;
        std::int64_t index = 1;
        for (const auto& [n, row] : rows) {
            const unsigned kmax = row.empty() ? 0 : row.rbegin()->first;
            for (unsigned k = 0; k <= kmax; ++k) {
                const auto it = row.find(k);
                out << index++ << ' ' << (it == row.end() ? 0 : it->second) << '\n';
            }
        }
        return out.str();
    }
    }
    return {};
}

std::string render_reports_text(const std::vector<VerifyReport>& reports)
{
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " n=" << r.n_min << ".." << r.n_max;
        if (r.first_failure) {
            const auto& f = *r.first_failure;
            out << ": n=" << f.n;
            if (f.k) out << " k=" << *f.k << " expected " << f.expected << " got " << f.actual;
            out << " (" << f.message << ")";
        }
        out << '\n';
    }
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    out << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks passed\n";
    return out.str();
}

std::string render_reports_json(const std::vector<VerifyReport>& reports, unsigned max_n)
{
    ordered_json j;
    j["max_n"] = max_n;
    j["passed"] = all_passed(reports);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json o;
        o["name"] = r.name;
        o["n_min"] = r.n_min;
        o["n_max"] = r.n_max;
        o["passed"] = r.passed();
        ordered_json per_n = ordered_json::object();
        for (const auto& [n, ok] : r.per_n) per_n[std::to_string(n)] = ok;
        o["per_n"] = std::move(per_n);
        if (r.first_failure) {
            const auto& f = *r.first_failure;
            ordered_json fj;
            fj["n"] = f.n;
            if (f.k) {
                fj["k"] = *f.k;
                fj["expected"] = f.expected;
                fj["actual"] = f.actual;
            }
            fj["message"] = f.message;
            o["first_failure"] = std::move(fj);
        } else {
            o["first_failure"] = nullptr;
        }
        arr.push_back(std::move(o));
    }
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

} // namespace permstats
