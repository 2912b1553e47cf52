#include "permstats/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstats/errors.hpp"
#include "permstats/stats.hpp"

namespace permstats {

namespace {

void require_avoids(const Perm& p, std::string_view pattern, std::string_view map)
{
    const Perm rho = Perm::parse(pattern);
    if (contains(p, rho)) {
        throw PreconditionError(std::string(map) + ": input " + p.to_string() + " contains " + std::string(pattern),
                                std::string(pattern));
    }
}

void require_nonempty(const Perm& p, std::string_view map)
{
    if (p.empty()) throw InvalidInput(std::string(map) + ": needs a permutation of length >= 1");
}

std::string phi231_steps(std::span<const int> p)
{
    if (p.empty()) return {};
    const auto top = std::max_element(p.begin(), p.end());
    const auto at = static_cast<std::size_t>(top - p.begin());
    const Perm alpha = reduce(p.subspan(0, at));
    const Perm beta = reduce(p.subspan(at + 1));
    return phi231_steps(alpha.values()) + "U" + phi231_steps(beta.values()) + "D";
}

std::vector<int> phi231_values(std::string_view s)
{
    if (s.empty()) return {};
    // The final D closes the U that follows the last return to the axis before the end.
    long height = 0;
    std::size_t split = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (height == 0) split = i;
        height += s[i] == 'U' ? 1 : -1;
    }
    std::vector<int> alpha = phi231_values(s.substr(0, split));
    const std::vector<int> beta = phi231_values(s.substr(split + 1, s.size() - split - 2));
    const int a = static_cast<int>(alpha.size());
    const int n = a + static_cast<int>(beta.size()) + 1;
    alpha.push_back(n);
    for (int x : beta) alpha.push_back(x + a);
    return alpha;
}

} // namespace

Bits Bits::parse(std::string_view text)
{
    if (text == "e") return Bits();
    std::vector<bool> out;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw InvalidInput("binary word may only contain 0 and 1: '" + std::string(text) + "'");
        out.push_back(ch == '1');
    }
    return Bits(std::move(out));
}

std::size_t Bits::ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::size_t Bits::factor_count(std::string_view factor) const
{
    if (factor.empty()) throw InvalidInput("factor must be nonempty");
    std::size_t count = 0;
    for (std::size_t i = 0; i + factor.size() <= bits_.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < factor.size() && match; ++j) match = bits_[i + j] == (factor[j] == '1');
        count += match;
    }
    return count;
}

bool Bits::starts_with(std::string_view prefix) const
{
    if (prefix.size() > bits_.size()) return false;
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        if (bits_[j] != (prefix[j] == '1')) return false;
    }
    return true;
}

std::string Bits::to_string() const
{
    std::string out;
    for (bool b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

DyckWord phi231(const Perm& p)
{
    require_avoids(p, "231", "phi231");
    return unchecked_dyck(phi231_steps(p.values()));
}

Perm phi231_inv(const DyckWord& d) { return unchecked_perm(phi231_values(d.str())); }

DyckWord psi321(const Perm& p)
{
    require_avoids(p, "321", "psi321");
    const auto v = p.values();
    const std::size_t n = v.size();
    std::string out;
    out.reserve(2 * n);
    // Lattice path from (1, 0) to (n + 1, n): E steps become U, N steps become D.
    std::size_t x = 1;
    int y = 0;
    int best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] > best) {
            best = v[i];
            continue;
        }
        const std::size_t position = i + 1;
        out.append(position - x, 'U');
        out.append(static_cast<std::size_t>(v[i] - y), 'D');
        x = position;
        y = v[i];
    }
    out.append(n + 1 - x, 'U');
    out.append(static_cast<std::size_t>(static_cast<int>(n) - y), 'D');
    return unchecked_dyck(std::move(out));
}

Perm psi321_inv(const DyckWord& d)
{
    const std::string& s = d.str();
    const std::size_t n = d.semilength();
    if (n == 0) return Perm();
    // Every maximal block U^a D^b except the last ends at a non-maximum point (x, y).
    std::vector<int> values(n, 0);
    std::vector<bool> used(n + 1, false);
    std::size_t x = 1;
    int y = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t ups = 0, downs = 0;
        while (i < s.size() && s[i] == 'U') ++ups, ++i;
        while (i < s.size() && s[i] == 'D') ++downs, ++i;
        if (i == s.size()) break;
        x += ups;
        y += static_cast<int>(downs);
        values[x - 1] = y;
        used[static_cast<std::size_t>(y)] = true;
    }
    // Left-to-right maxima take the remaining values in increasing order.
    int next = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (values[pos] != 0) continue;
        while (used[static_cast<std::size_t>(next)]) ++next;
        values[pos] = next++;
    }
    return unchecked_perm(std::move(values));
}

DyckWord psi_hat(const Perm& p) { return unchecked_dyck("U" + psi321(p).str() + "D"); }

Perm zeta(const Perm& p)
{
    require_avoids(p, "312", "zeta");
    const auto v = p.values();
    const auto maxima = ltr_maxima(v);
    std::vector<int> out(v.size(), 0);
    std::vector<bool> is_max(v.size() + 1, false);
    for (const auto& m : maxima) {
        out[m.position - 1] = m.value;
        is_max[static_cast<std::size_t>(m.value)] = true;
    }
    int next = 1;
    for (auto& x : out) {
        if (x != 0) continue;
        while (is_max[static_cast<std::size_t>(next)]) ++next;
        x = next++;
    }
    return unchecked_perm(std::move(out));
}

Perm zeta_inv(const Perm& p)
{
    require_avoids(p, "321", "zeta_inv");
    const auto v = p.values();
    const std::size_t n = v.size();
    const auto maxima = ltr_maxima(v);
    std::vector<int> out(n, 0);
    std::vector<bool> used(n + 1, false);
    for (const auto& m : maxima) {
        out[m.position - 1] = m.value;
        used[static_cast<std::size_t>(m.value)] = true;
    }
    // Fill the other positions with the largest unused value below the current maximum.
    int current_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (out[i] != 0 && out[i] > current_max) {
            current_max = out[i];
            continue;
        }
        int candidate = current_max - 1;
        while (candidate > 0 && used[static_cast<std::size_t>(candidate)]) --candidate;
        if (candidate <= 0) throw std::logic_error("zeta_inv: no value available at position " + std::to_string(i + 1));
        out[i] = candidate;
        used[static_cast<std::size_t>(candidate)] = true;
    }
    return unchecked_perm(std::move(out));
}

DyckWord iota(const DyckWord& d)
{
    if (d.empty()) return d;
    const std::size_t up_uud = st(d);
    const std::size_t descents = stat(StatKind::des, psi321_inv(d));
    if (up_uud == descents) return d;

    const std::string& w = d.str();
    const std::size_t len = w.size();
    std::size_t tail_downs = 0;
    while (tail_downs < len && w[len - 1 - tail_downs] == 'D') ++tail_downs;
    std::size_t last_ups = 0;
    while (last_ups + tail_downs < len && w[len - 1 - tail_downs - last_ups] == 'U') ++last_ups;
    const std::string body = w.substr(0, len - tail_downs - last_ups);
    const bool starts_ud = w.compare(0, 2, "UD") == 0;

    if (descents == up_uud + 1) {
        // d = (UD)^i e' U D^j with e' empty or ending in D and not beginning with UD.
        if (last_ups != 1 || !starts_ud || body.empty()) throw std::logic_error("iota: unexpected shape " + w);
        std::size_t i = 0;
        while (body.compare(2 * i, 2, "UD") == 0) ++i;
        std::string out = body.substr(2 * i);
        out += 'U';
        out.append(i, 'U');
        out.append(i + tail_downs, 'D');
        return unchecked_dyck(std::move(out));
    }
    if (up_uud == descents + 1) {
        // d = e U^i D^j with i >= 2, j >= i, e empty or ending in D.
        if (last_ups < 2 || starts_ud || tail_downs < last_ups) throw std::logic_error("iota: unexpected shape " + w);
        std::string out;
        for (std::size_t r = 0; r + 1 < last_ups; ++r) out += "UD";
        out += body;
        out += 'U';
        out.append(tail_downs - last_ups + 1, 'D');
        return unchecked_dyck(std::move(out));
    }
    throw std::logic_error("iota: st and des differ by more than one on " + w);
}

Bits enc_132_213(const Perm& p)
{
    require_nonempty(p, "enc_132_213");
    require_avoids(p, "132", "enc_132_213");
    require_avoids(p, "213", "enc_132_213");
    const auto v = p.values();
    std::vector<bool> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i] < v[i + 1]);
    return Bits(std::move(out));
}

Perm dec_132_213(const Bits& s)
{
    // Maximal runs of 1s delimit the increasing blocks of I_{i1} skew ... skew I_{im}.
    std::vector<std::size_t> blocks{1};
    for (bool b : s.bits()) {
        if (b) ++blocks.back();
        else blocks.push_back(1);
    }
    const std::size_t n = s.size() + 1;
    std::vector<int> out;
    out.reserve(n);
    std::size_t placed = 0;
    for (std::size_t len : blocks) {
        const std::size_t first = n - placed - len + 1;
        for (std::size_t r = 0; r < len; ++r) out.push_back(static_cast<int>(first + r));
        placed += len;
    }
    return unchecked_perm(std::move(out));
}

Bits enc_213_231(const Perm& p)
{
    require_nonempty(p, "enc_213_231");
    require_avoids(p, "213", "enc_213_231");
    require_avoids(p, "231", "enc_213_231");
    const auto v = p.values();
    std::vector<bool> out;
    int lo = 1, hi = static_cast<int>(v.size());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // Every entry is the min or the max of what remains; the set of remaining values is [lo, hi].
        if (v[i] == hi) {
            out.push_back(false);
            --hi;
        } else {
            out.push_back(true);
            ++lo;
        }
    }
    return Bits(std::move(out));
}

Perm dec_213_231(const Bits& s)
{
    int lo = 1, hi = static_cast<int>(s.size()) + 1;
    std::vector<int> out;
    for (bool b : s.bits()) out.push_back(b ? lo++ : hi--);
    out.push_back(lo);
    return unchecked_perm(std::move(out));
}

Bits enc_123_132(const Perm& p)
{
    require_nonempty(p, "enc_123_132");
    require_avoids(p, "123", "enc_123_132");
    require_avoids(p, "132", "enc_123_132");
    std::vector<int> cur(p.values().begin(), p.values().end());
    std::vector<bool> rev;
    while (cur.size() > 1) {
        const std::size_t n = cur.size();
        if (cur[n - 1] == 1) {
            rev.push_back(true);
            cur.erase(cur.end() - 1);
        } else {
            // The avoidance check guarantees 1 sits in one of the last two positions.
            rev.push_back(false);
            cur.erase(cur.end() - 2);
        }
        for (int& x : cur) --x;
    }
    return Bits(std::vector<bool>(rev.rbegin(), rev.rend()));
}

Perm dec_123_132(const Bits& s)
{
    const int n = static_cast<int>(s.size()) + 1;
    std::vector<int> out{n};
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const int value = n - static_cast<int>(i);
        if (s[i - 1]) out.push_back(value);
        else out.insert(out.end() - 1, value);
    }
    return unchecked_perm(std::move(out));
}

} // namespace permstats
