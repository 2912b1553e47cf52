#include "permstats/distributions.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "permstats/bijections.hpp"
#include "permstats/dyck.hpp"
#include "permstats/errors.hpp"

namespace permstats {

namespace {

// Runs task(i) for i in [0, count) on up to `workers` threads. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task)
{
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

void check_perm_cap(unsigned n, const Limits& limits)
{
    if (n > limits.perm_cap) {
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds the permutation cap " +
                            std::to_string(limits.perm_cap));
    }
}

// Class members in lexicographic order, scanned in parallel by first entry.
std::vector<Perm> class_members(const PatternSet& basis, unsigned n, const DistOptions& opts)
{
    check_perm_cap(n, opts.limits);
    if (n == 0) return {Perm{}};
    std::vector<std::vector<Perm>> parts(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        parts[i] = gen_class_starting_with(n, basis, static_cast<int>(i) + 1, opts.limits).collect();
    });
    std::vector<Perm> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

std::array<DistRow, 6> rows_of(const std::vector<Perm>& members)
{
    std::array<DistRow, 6> rows;
    for (const auto& p : members) {
        const auto s = all_stats(p.values());
        for (std::size_t j = 0; j < s.size(); ++j) ++rows[j][s[j]];
    }
    return rows;
}

DistRow row_from_coefficients(const std::vector<std::int64_t>& coeffs, std::string_view what)
{
    DistRow row;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] < 0) throw std::logic_error("negative coefficient in " + std::string(what));
        if (coeffs[k] > 0) row[static_cast<unsigned>(k)] = static_cast<Count>(coeffs[k]);
    }
    return row;
}

DistRow closed_form_row(FormulaId id, unsigned n, std::optional<FormulaId> fault = std::nullopt)
{
    DistRow row;
    for (unsigned k = 0; k <= n; ++k) {
        Count v = closed_form(id, n, k).value();
        if (fault && *fault == id && k == 0) ++v;
        if (v) row[k] = v;
    }
    return row;
}

std::string basis_label(const PatternSet& basis) { return "{" + basis.to_string() + "}"; }

} // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::oracle: return "oracle";
    case Method::closed_form: return "closed_form";
    case Method::series: return "series";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    if (name == "oracle") return Method::oracle;
    if (name == "closed_form" || name == "closed-form" || name == "formula") return Method::closed_form;
    if (name == "series") return Method::series;
    throw InvalidInput("unknown method '" + std::string(name) + "'");
}

DistRow normalized(DistRow row)
{
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    return row;
}

std::array<DistRow, 6> oracle_rows(const PatternSet& basis, unsigned n, const DistOptions& opts)
{
    check_perm_cap(n, opts.limits);
    if (n == 0) return rows_of({Perm{}});
    std::vector<std::array<DistRow, 6>> parts(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        auto& rows = parts[i];
        gen_class_starting_with(n, basis, static_cast<int>(i) + 1, opts.limits).for_each([&](const Perm& p) {
            const auto s = all_stats(p.values());
            for (std::size_t j = 0; j < s.size(); ++j) ++rows[j][s[j]];
        });
    });
    std::array<DistRow, 6> merged;
    for (const auto& part : parts) {
        for (std::size_t j = 0; j < merged.size(); ++j) {
            for (const auto& [k, c] : part[j]) merged[j][k] = checked_add(merged[j][k], c);
        }
    }
    return merged;
}

DistRow distribution(StatKind stat, const PatternSet& basis, unsigned n, Method method, const DistOptions& opts)
{
    switch (method) {
    case Method::oracle: return oracle_rows(basis, n, opts)[static_cast<std::size_t>(stat)];
    case Method::closed_form: {
        const auto ids = formulas_for(stat, basis);
        if (ids.empty()) {
            throw Unsupported("no closed form for " + std::string(stat_name(stat)) + " over " + basis_label(basis));
        }
        for (FormulaId id : ids) {
            if (n >= 1 && n >= formula_info(id).min_n) return closed_form_row(id, n);
        }
        throw Unsupported("closed form " + std::string(formula_name(ids.front())) + " does not cover n = " +
                          std::to_string(n) + " (holds for n >= " +
                          std::to_string(std::max(1u, formula_info(ids.front()).min_n)) + ")");
    }
    case Method::series: {
        const auto name = series_for(stat, basis);
        if (!name) {
            throw Unsupported("no series for " + std::string(stat_name(stat)) + " over " + basis_label(basis));
        }
        if (n > opts.limits.series_cap) {
            throw ResourceLimit("n = " + std::to_string(n) + " exceeds the series cap " +
                                std::to_string(opts.limits.series_cap));
        }
        return row_from_coefficients(series_by_name(*name, n).row(n), *name);
    }
    }
    throw Unsupported("unknown method");
}

DistTable distribution_table(StatKind stat, const PatternSet& basis, unsigned n_min, unsigned n_max, Method method,
                             const DistOptions& opts)
{
    if (n_min > n_max) throw InvalidInput("empty n range");
    DistTable table{basis, stat, method, {}};
    if (method == Method::series) {
        const auto name = series_for(stat, basis);
        if (!name) {
            throw Unsupported("no series for " + std::string(stat_name(stat)) + " over " + basis_label(basis));
        }
        if (n_max > opts.limits.series_cap) {
            throw ResourceLimit("n = " + std::to_string(n_max) + " exceeds the series cap " +
                                std::to_string(opts.limits.series_cap));
        }
        const auto series = series_by_name(*name, n_max);
        for (unsigned n = n_min; n <= n_max; ++n) table.rows[n] = row_from_coefficients(series.row(n), *name);
        return table;
    }
    for (unsigned n = n_min; n <= n_max; ++n) table.rows[n] = distribution(stat, basis, n, method, opts);
    return table;
}

std::vector<Method> supported_methods(StatKind stat, const PatternSet& basis, unsigned n)
{
    std::vector<Method> out{Method::oracle};
    for (FormulaId id : formulas_for(stat, basis)) {
        if (n >= 1 && n >= formula_info(id).min_n) {
            out.push_back(Method::closed_form);
            break;
        }
    }
    if (series_for(stat, basis)) out.push_back(Method::series);
    return out;
}

std::string_view transform_name(Transform t)
{
    switch (t) {
    case Transform::identity: return "identity";
    case Transform::r: return "r";
    case Transform::c: return "c";
    case Transform::rc: return "rc";
    }
    return "?";
}

Transform parse_transform(std::string_view name)
{
    if (name == "identity" || name == "id") return Transform::identity;
    if (name == "r") return Transform::r;
    if (name == "c") return Transform::c;
    if (name == "rc") return Transform::rc;
    throw InvalidInput("unknown transform '" + std::string(name) + "'");
}

PatternSet apply_transform(const PatternSet& basis, Transform t)
{
    switch (t) {
    case Transform::identity: return basis;
    case Transform::r: return basis.reversed();
    case Transform::c: return basis.complemented();
    case Transform::rc: return basis.reversed().complemented();
    }
    return basis;
}

StatKind partner_stat(StatKind stat, Transform t)
{
    const bool flips_direction = t == Transform::r || t == Transform::c;
    const bool flips_extremum = t == Transform::c || t == Transform::rc;
    switch (stat) {
    case StatKind::asc: return flips_direction ? StatKind::des : StatKind::asc;
    case StatKind::des: return flips_direction ? StatKind::asc : StatKind::des;
    case StatKind::dasc: return flips_direction ? StatKind::ddes : StatKind::dasc;
    case StatKind::ddes: return flips_direction ? StatKind::dasc : StatKind::ddes;
    case StatKind::pk: return flips_extremum ? StatKind::vl : StatKind::pk;
    case StatKind::vl: return flips_extremum ? StatKind::pk : StatKind::vl;
    }
    return stat;
}

bool VerifyReport::passed() const { return !first_failure.has_value(); }

bool all_passed(const std::vector<VerifyReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed(); });
}

namespace {

class Reporter {
public:
    Reporter(std::string name, unsigned lo, unsigned hi)
    {
        report_.name = std::move(name);
        report_.n_min = lo;
        report_.n_max = hi;
        for (unsigned n = lo; n <= hi; ++n) report_.per_n[n] = true;
    }

    unsigned lo() const { return report_.n_min; }
    unsigned hi() const { return report_.n_max; }
    bool ok(unsigned n) const { return report_.per_n.at(n); }

    void fail(Discrepancy d)
    {
        report_.per_n[d.n] = false;
        if (!report_.first_failure) report_.first_failure = std::move(d);
    }

    void fail(unsigned n, std::string message) { fail(Discrepancy{n, std::nullopt, 0, 0, std::move(message)}); }

    // Whole-row comparison; records the smallest k where the rows differ.
    bool compare(unsigned n, const DistRow& expected, const DistRow& actual, std::string message)
    {
        std::set<unsigned> keys;
        for (const auto& [k, c] : expected) keys.insert(k);
        for (const auto& [k, c] : actual) keys.insert(k);
        for (unsigned k : keys) {
            const Count e = expected.count(k) ? expected.at(k) : 0;
            const Count a = actual.count(k) ? actual.at(k) : 0;
            if (e != a) {
                fail(Discrepancy{n, k, e, a, std::move(message)});
                return false;
            }
        }
        return true;
    }

    VerifyReport finish() { return std::move(report_); }

private:
    VerifyReport report_;
};

class Context {
public:
    explicit Context(const VerifyOptions& opts) : opts_(opts), dist_opts_{opts.workers, opts.limits} {}

    const VerifyOptions& options() const { return opts_; }
    unsigned max_n() const { return opts_.max_n; }

    const std::vector<Perm>& members(const PatternSet& basis, unsigned n)
    {
        auto key = std::make_pair(basis.to_string(), n);
        auto it = members_.find(key);
        if (it == members_.end()) it = members_.emplace(key, class_members(basis, n, dist_opts_)).first;
        return it->second;
    }

    const std::vector<Perm>& members(std::string_view basis, unsigned n)
    {
        return members(PatternSet::parse(basis), n);
    }

    const DistRow& row(StatKind stat, const PatternSet& basis, unsigned n)
    {
        auto key = std::make_pair(basis.to_string(), n);
        auto it = rows_.find(key);
        if (it == rows_.end()) it = rows_.emplace(key, rows_of(members(basis, n))).first;
        return it->second[static_cast<std::size_t>(stat)];
    }

    const DistRow& row(StatKind stat, std::string_view basis, unsigned n)
    {
        return row(stat, PatternSet::parse(basis), n);
    }

    const BivariateSeries& series(std::string_view name)
    {
        const std::string key(name);
        auto it = series_.find(key);
        if (it == series_.end()) it = series_.emplace(key, series_by_name(name, series_degree())).first;
        return it->second;
    }

    // Largest degree any check needs, bounded by the series cap.
    std::size_t series_degree() const { return std::min(opts_.max_n + 1, opts_.limits.series_cap); }

private:
    VerifyOptions opts_;
    DistOptions dist_opts_;
    std::map<std::pair<std::string, unsigned>, std::vector<Perm>> members_;
    std::map<std::pair<std::string, unsigned>, std::array<DistRow, 6>> rows_;
    std::map<std::string, BivariateSeries> series_;
};

const std::vector<std::string> kSingles{"123", "132", "213", "231", "312", "321"};
const std::vector<std::string> kPairs{"213,312", "132,213", "213,231", "123,132", "132,321", "123,321"};

std::string perm_label(const Perm& p) { return p.empty() ? "e" : p.to_string(); }

template <typename T>
DistRow tally(const std::vector<T>& items, const std::function<unsigned(const T&)>& f)
{
    DistRow row;
    for (const auto& x : items) ++row[f(x)];
    return row;
}

VerifyReport check_cardinality(Context& ctx, const std::string& name, const std::vector<std::string>& bases,
                               unsigned lo)
{
    Reporter rep(name, lo, ctx.max_n());
    for (unsigned n = lo; n <= rep.hi(); ++n) {
        for (const auto& b : bases) {
            const auto basis = PatternSet::parse(b);
            const Count expected = class_size(basis, n).value();
            const Count actual = ctx.members(basis, n).size();
            if (expected != actual) {
                rep.fail(Discrepancy{n, std::nullopt, expected, actual, "|S_n(" + b + ")|"});
            }
        }
    }
    return rep.finish();
}

VerifyReport check_structured(Context& ctx)
{
    Reporter rep("STRUCTURED_GENERATORS", 0, ctx.max_n());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (const auto& basis : structured_bases()) {
            auto built = gen_class({n, basis, GenMethod::structured}, ctx.options().limits).collect();
            const std::size_t produced = built.size();
            std::sort(built.begin(), built.end());
            const auto& expected = ctx.members(basis, n);
            if (std::adjacent_find(built.begin(), built.end()) != built.end()) {
                rep.fail(n, "structured generator for " + basis_label(basis) + " repeats a permutation");
            } else if (built != expected) {
                rep.fail(Discrepancy{n, std::nullopt, expected.size(), produced,
                                     "structured generator for " + basis_label(basis) + " differs from filter"});
            }
        }
    }
    return rep.finish();
}

VerifyReport check_formula(Context& ctx, const FormulaInfo& info)
{
    Reporter rep(std::string(info.name), std::max(1u, info.min_n), ctx.max_n());
    for (unsigned n = rep.lo(); n <= rep.hi(); ++n) {
        const DistRow expected = closed_form_row(info.id, n, ctx.options().fault);
        for (const auto& target : info.targets) {
            rep.compare(n, expected, ctx.row(target.stat, target.basis, n),
                        std::string(stat_name(target.stat)) + " over {" + target.basis + "}");
        }
    }
    return rep.finish();
}

VerifyReport check_pk312_pk321(Context& ctx)
{
    Reporter rep("PK312_EQ_PK321", 0, ctx.max_n());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        rep.compare(n, ctx.row(StatKind::pk, "321", n), ctx.row(StatKind::pk, "312", n), "pk over {312} vs {321}");
    }
    return rep.finish();
}

VerifyReport check_zeta(Context& ctx)
{
    Reporter rep("ZETA_ROUNDTRIP", 0, ctx.max_n());
    const Perm p321 = Perm::parse("321");
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        std::set<Perm> images;
        for (const auto& p : ctx.members("312", n)) {
            const Perm q = zeta(p);
            if (contains(q, p321)) {
                rep.fail(n, "zeta(" + perm_label(p) + ") contains 321");
                break;
            }
            if (ltr_maxima(p) != ltr_maxima(q)) {
                rep.fail(n, "zeta moves a left-to-right maximum of " + perm_label(p));
                break;
            }
            if (zeta_inv(q) != p) {
                rep.fail(n, "zeta_inv(zeta(p)) != p for p = " + perm_label(p));
                break;
            }
            images.insert(q);
        }
        if (rep.ok(n) && images.size() != ctx.members("312", n).size()) rep.fail(n, "zeta is not injective");
        for (const auto& q : ctx.members("321", n)) {
            if (zeta(zeta_inv(q)) != q) {
                rep.fail(n, "zeta(zeta_inv(q)) != q for q = " + perm_label(q));
                break;
            }
        }
    }
    return rep.finish();
}

VerifyReport check_series(Context& ctx, const std::string& name, const std::string& series, StatKind stat,
                          const std::string& basis)
{
    Reporter rep(name, 0, std::min<unsigned>(ctx.max_n(), ctx.series_degree()));
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        rep.compare(n, ctx.row(stat, basis, n), row_from_coefficients(ctx.series(series).row(n), series),
                    series + " vs " + std::string(stat_name(stat)) + " over {" + basis + "}");
    }
    return rep.finish();
}

VerifyReport check_st_des(Context& ctx)
{
    Reporter rep("ST_DES_EQUIDISTRIBUTION", 0, std::min(ctx.max_n(), ctx.options().limits.dyck_cap));
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        DistRow st_row;
        gen_dyck(n, ctx.options().limits).for_each([&](const DyckWord& d) { ++st_row[st(d)]; });
        rep.compare(n, ctx.row(StatKind::des, "321", n), st_row, "st over Dyck words vs des over {321}");
    }
    return rep.finish();
}

VerifyReport check_iota(Context& ctx)
{
    Reporter rep("IOTA_INVOLUTION", 0, std::min(ctx.max_n(), ctx.options().limits.dyck_cap));
    const auto des_of = [](const DyckWord& d) { return stat(StatKind::des, psi321_inv(d)); };
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        gen_dyck(n, ctx.options().limits).for_each([&](const DyckWord& d) {
            if (!rep.ok(n)) return;
            const DyckWord e = iota(d);
            const std::size_t s = st(d), t = des_of(d);
            const std::size_t se = st(e), te = des_of(e);
            std::string problem;
            if (e.semilength() != d.semilength()) problem = "changes semilength";
            else if (iota(e) != d) problem = "is not an involution";
            else if (s == t && e != d) problem = "moves a word with st = des";
            else if (t == s + 1 && !(se == s + 1 && te == s)) problem = "does not map (st k, des k+1) to (st k+1, des k)";
            else if (s == t + 1 && !(se == t && te == t + 1)) problem = "does not map (st k+1, des k) to (st k, des k+1)";
            if (!problem.empty()) rep.fail(n, "iota " + problem + " at " + d.str());
        });
    }
    return rep.finish();
}

VerifyReport check_st_star(Context& ctx)
{
    const auto& limits = ctx.options().limits;
    const unsigned hi = std::min({ctx.max_n(), limits.dyck_cap - 1, static_cast<unsigned>(ctx.series_degree()) - 1});
    Reporter rep("ST_STAR_INDECOMPOSABLE", 0, hi);
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        DistRow star_row;
        gen_indec(n + 1, limits).for_each([&](const DyckWord& d) { ++star_row[st_star(d)]; });
        const DistRow& des_row = ctx.row(StatKind::des, "321", n);
        if (!rep.compare(n, des_row, star_row, "st* over indecomposable words vs des over {321}")) continue;
        rep.compare(n, row_from_coefficients(ctx.series("des321").row(n), "des321"),
                    row_from_coefficients(ctx.series("D").row(n + 1), "D"), "D vs z A");
    }
    return rep.finish();
}

VerifyReport check_b_identity(Context& ctx)
{
    const auto& limits = ctx.options().limits;
    const unsigned hi = std::min({ctx.max_n(), limits.dyck_cap - 1, static_cast<unsigned>(ctx.series_degree()) - 1});
    Reporter rep("B_IDENTITY", 0, hi);
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        // [z^{n+1}] B = [n = 0](1 - q) + sum_k a_pk(n, k; 231) q^{k+1}
        std::vector<std::int64_t> expected(n + 2, 0);
        if (n == 0) {
            expected[0] += 1;
            expected[1] -= 1;
        }
        for (const auto& [k, c] : ctx.row(StatKind::pk, "231", n)) expected[k + 1] += static_cast<std::int64_t>(c);
        const DistRow b_row = row_from_coefficients(ctx.series("B").row(n + 1), "B");
        if (!rep.compare(n, row_from_coefficients(expected, "pk over {231}"), b_row, "B vs pk over {231}")) continue;
        DistRow st_row;
        gen_indec(n + 1, limits).for_each([&](const DyckWord& d) { ++st_row[st(d)]; });
        rep.compare(n, st_row, b_row, "B vs st over indecomposable words");
    }
    return rep.finish();
}

VerifyReport check_ddes_series(Context& ctx)
{
    Reporter rep("DDES_132_213_SERIES", 0, std::min<unsigned>(ctx.max_n(), ctx.series_degree()));
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        const DistRow series_row = row_from_coefficients(ctx.series("ddes132213").row(n), "ddes132213");
        for (const auto* basis : {"132,213", "213,231"}) {
            for (StatKind stat : {StatKind::ddes, StatKind::dasc}) {
                rep.compare(n, series_row, ctx.row(stat, basis, n),
                            "series vs " + std::string(stat_name(stat)) + " over {" + basis + "}");
            }
        }
    }
    return rep.finish();
}

VerifyReport check_transport_phi(Context& ctx)
{
    Reporter rep("TRANSPORT_PHI231", 0, ctx.max_n());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (const auto& p : ctx.members("231", n)) {
            const DyckWord d = phi231(p);
            if (factor_count(d, "DUU") != stat(StatKind::pk, p)) {
                rep.fail(n, "pk != #DUU for " + perm_label(p));
                break;
            }
        }
    }
    return rep.finish();
}

VerifyReport check_transport_psi(Context& ctx)
{
    Reporter rep("TRANSPORT_PSI321", 0, ctx.max_n());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (const auto& p : ctx.members("321", n)) {
            if (st_star(psi321(p)) != stat(StatKind::pk, p)) {
                rep.fail(n, "pk != st*(psi) for " + perm_label(p));
                break;
            }
            if (st_star(psi_hat(p)) != stat(StatKind::des, p)) {
                rep.fail(n, "des != st*(psi_hat) for " + perm_label(p));
                break;
            }
        }
    }
    return rep.finish();
}

using Encoder = Bits (*)(const Perm&);
using Decoder = Perm (*)(const Bits&);

// Expected statistics of the permutation encoded by s, indexed by StatKind.
using Transport = std::array<std::size_t, 6> (*)(const Bits& s);

std::array<std::size_t, 6> transport_binary_ascents(const Bits& s)
{
    return {s.ones(),
            s.zeros(),
            s.factor_count("11"),
            s.factor_count("00"),
            s.factor_count("10"),
            s.factor_count("01")};
}

std::array<std::size_t, 6> transport_123_132(const Bits& s)
{
    const std::size_t lead00 = s.starts_with("00") ? 1 : 0;
    const std::size_t asc = (!s.empty() && !s[0] ? 1 : 0) + s.factor_count("10");
    return {asc,
            s.size() - asc,
            0,
            s.factor_count("00") + s.factor_count("11") - lead00,
            s.factor_count("01"),
            lead00 + s.factor_count("10")};
}

VerifyReport check_transport_enc(Context& ctx, const std::string& name, const std::string& basis, Encoder enc,
                                 Transport rule)
{
    Reporter rep(name, 1, ctx.max_n());
    for (unsigned n = 1; n <= rep.hi(); ++n) {
        for (const auto& p : ctx.members(basis, n)) {
            const Bits s = enc(p);
            const auto expected = rule(s);
            const auto actual = all_stats(p.values());
            for (StatKind k : kAllStats) {
                const auto i = static_cast<std::size_t>(k);
                if (expected[i] != actual[i]) {
                    rep.fail(Discrepancy{n, std::nullopt, expected[i], actual[i],
                                         std::string(stat_name(k)) + " of " + perm_label(p) + " vs its code " +
                                             s.to_string()});
                    break;
                }
            }
            if (!rep.ok(n)) break;
        }
    }
    return rep.finish();
}

VerifyReport check_roundtrips(Context& ctx)
{
    const auto& limits = ctx.options().limits;
    Reporter rep("ROUNDTRIPS", 0, ctx.max_n());
    struct Pair {
        const char* name;
        const char* basis;
        Encoder enc;
        Decoder dec;
    };
    const Pair pairs[] = {{"132,213 code", "132,213", enc_132_213, dec_132_213},
                          {"213,231 code", "213,231", enc_213_231, dec_213_231},
                          {"123,132 code", "123,132", enc_123_132, dec_123_132}};
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (const auto& p : ctx.members("231", n)) {
            if (phi231_inv(phi231(p)) != p) {
                rep.fail(n, "phi231 round trip fails at " + perm_label(p));
                break;
            }
        }
        for (const auto& p : ctx.members("321", n)) {
            if (psi321_inv(psi321(p)) != p) {
                rep.fail(n, "psi321 round trip fails at " + perm_label(p));
                break;
            }
        }
        if (n <= limits.dyck_cap) {
            gen_dyck(n, limits).for_each([&](const DyckWord& d) {
                if (!rep.ok(n)) return;
                if (phi231(phi231_inv(d)) != d) rep.fail(n, "phi231 inverse round trip fails at " + d.str());
                else if (psi321(psi321_inv(d)) != d) rep.fail(n, "psi321 inverse round trip fails at " + d.str());
            });
        }
        if (n == 0) continue;
        for (const auto& pair : pairs) {
            for (const auto& p : ctx.members(pair.basis, n)) {
                if (pair.dec(pair.enc(p)) != p) {
                    rep.fail(n, std::string(pair.name) + " round trip fails at " + perm_label(p));
                    break;
                }
            }
            gen_bits(n - 1, limits).for_each([&](const Bits& s) {
                if (!rep.ok(n)) return;
                const Perm p = pair.dec(s);
                if (!avoids_all(p, PatternSet::parse(pair.basis)) || pair.enc(p) != s) {
                    rep.fail(n, std::string(pair.name) + " decode round trip fails at " + s.to_string());
                }
            });
        }
    }
    return rep.finish();
}

VerifyReport check_symmetry(Context& ctx)
{
    Reporter rep("SYMMETRY_IDENTITIES", 0, ctx.max_n());
    std::vector<std::string> bases = kSingles;
    bases.insert(bases.end(), kPairs.begin(), kPairs.end());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (const auto& b : bases) {
            const auto basis = PatternSet::parse(b);
            for (Transform t : {Transform::r, Transform::c, Transform::rc}) {
                const auto image = apply_transform(basis, t);
                for (StatKind stat : kAllStats) {
                    const StatKind partner = partner_stat(stat, t);
                    rep.compare(n, ctx.row(stat, basis, n), ctx.row(partner, image, n),
                                std::string(stat_name(stat)) + " over " + basis_label(basis) + " vs " +
                                    std::string(stat_name(partner)) + " over " + basis_label(image) + " (" +
                                    std::string(transform_name(t)) + ")");
                }
            }
        }
    }
    return rep.finish();
}

VerifyReport check_st_wilf(Context& ctx)
{
    Reporter rep("ST_WILF_132_213_213_231", 0, ctx.max_n());
    for (unsigned n = 0; n <= rep.hi(); ++n) {
        for (StatKind stat : kAllStats) {
            rep.compare(n, ctx.row(stat, "132,213", n), ctx.row(stat, "213,231", n),
                        std::string(stat_name(stat)) + " over {132,213} vs {213,231}");
        }
    }
    return rep.finish();
}

using Check = std::function<VerifyReport(Context&)>;

const std::vector<std::pair<std::string, Check>>& check_registry()
{
    static const std::vector<std::pair<std::string, Check>> registry = [] {
        std::vector<std::pair<std::string, Check>> r;
        r.emplace_back("CARDINALITY_SINGLE",
                       [](Context& c) { return check_cardinality(c, "CARDINALITY_SINGLE", kSingles, 0); });
        r.emplace_back("CARDINALITY_PAIRS",
                       [](Context& c) { return check_cardinality(c, "CARDINALITY_PAIRS", kPairs, 0); });
        r.emplace_back("STRUCTURED_GENERATORS", check_structured);
        for (const auto& info : formula_registry()) {
            r.emplace_back(std::string(info.name), [&info](Context& c) { return check_formula(c, info); });
        }
        r.emplace_back("PK312_EQ_PK321", check_pk312_pk321);
        r.emplace_back("ZETA_ROUNDTRIP", check_zeta);
        r.emplace_back("PK321_SERIES",
                       [](Context& c) { return check_series(c, "PK321_SERIES", "pk321", StatKind::pk, "321"); });
        r.emplace_back("DES321_SERIES",
                       [](Context& c) { return check_series(c, "DES321_SERIES", "des321", StatKind::des, "321"); });
        r.emplace_back("ST_DES_EQUIDISTRIBUTION", check_st_des);
        r.emplace_back("IOTA_INVOLUTION", check_iota);
        r.emplace_back("ST_STAR_INDECOMPOSABLE", check_st_star);
        r.emplace_back("B_IDENTITY", check_b_identity);
        r.emplace_back("DDES_132_213_SERIES", check_ddes_series);
        r.emplace_back("TRANSPORT_PHI231", check_transport_phi);
        r.emplace_back("TRANSPORT_PSI321", check_transport_psi);
        r.emplace_back("TRANSPORT_ENC_132_213", [](Context& c) {
            return check_transport_enc(c, "TRANSPORT_ENC_132_213", "132,213", enc_132_213, transport_binary_ascents);
        });
        r.emplace_back("TRANSPORT_ENC_213_231", [](Context& c) {
            return check_transport_enc(c, "TRANSPORT_ENC_213_231", "213,231", enc_213_231, transport_binary_ascents);
        });
        r.emplace_back("TRANSPORT_ENC_123_132", [](Context& c) {
            return check_transport_enc(c, "TRANSPORT_ENC_123_132", "123,132", enc_123_132, transport_123_132);
        });
        r.emplace_back("ROUNDTRIPS", check_roundtrips);
        r.emplace_back("SYMMETRY_IDENTITIES", check_symmetry);
        r.emplace_back("ST_WILF_132_213_213_231", check_st_wilf);
        return r;
    }();
    return registry;
}

} // namespace

VerifyReport symmetry_check(StatKind stat, const PatternSet& basis, Transform t, unsigned max_n,
                            const DistOptions& opts)
{
    const PatternSet image = apply_transform(basis, t);
    const StatKind partner = partner_stat(stat, t);
    Reporter rep(std::string(stat_name(stat)) + " over " + basis_label(basis) + " vs " +
                     std::string(stat_name(partner)) + " over " + basis_label(image),
                 0, max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
        const DistRow left = distribution(stat, basis, n, Method::oracle, opts);
        const DistRow right = t == Transform::identity && partner == stat
                                  ? left
                                  : distribution(partner, image, n, Method::oracle, opts);
        rep.compare(n, left, right, std::string(transform_name(t)));
    }
    return rep.finish();
}

std::vector<std::string> verify_check_names()
{
    std::vector<std::string> names;
    for (const auto& [name, check] : check_registry()) names.push_back(name);
    return names;
}

std::vector<VerifyReport> verify_all(const VerifyOptions& opts)
{
    const auto& registry = check_registry();
    for (const auto& name : opts.selection) {
        const bool known = std::any_of(registry.begin(), registry.end(), [&](const auto& e) { return e.first == name; });
        if (!known) throw InvalidInput("unknown check '" + name + "'");
    }
    if (opts.max_n > opts.limits.perm_cap) {
        throw ResourceLimit("max n " + std::to_string(opts.max_n) + " exceeds the permutation cap " +
                            std::to_string(opts.limits.perm_cap));
    }
    Context ctx(opts);
    std::vector<VerifyReport> reports;
    for (const auto& [name, check] : registry) {
        const bool selected = opts.selection.empty() ||
                              std::find(opts.selection.begin(), opts.selection.end(), name) != opts.selection.end();
        if (selected) reports.push_back(check(ctx));
    }
    return reports;
}

} // namespace permstats
