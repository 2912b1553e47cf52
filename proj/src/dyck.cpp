#include "permstats/dyck.hpp"

#include <algorithm>

#include "permstats/errors.hpp"

namespace permstats {

DyckWord DyckWord::parse(std::string_view text, StepAlphabet alphabet)
{
    std::string steps;
    steps.reserve(text.size());
    long height = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == alphabet.up) {
            steps.push_back('U');
            ++height;
        } else if (ch == alphabet.down) {
            steps.push_back('D');
            if (--height < 0) throw InvalidDyck("Dyck word falls below the axis at index " + std::to_string(i), i);
        } else {
            throw InvalidDyck("invalid step character '" + std::string(1, ch) + "' at index " + std::to_string(i), i);
        }
    }
    if (height != 0) throw InvalidDyck("unbalanced Dyck word: final height " + std::to_string(height), text.size());
    return DyckWord(std::move(steps));
}

std::string DyckWord::to_string(StepAlphabet alphabet) const
{
    std::string out(steps_);
    for (char& ch : out) ch = ch == 'U' ? alphabet.up : alphabet.down;
    return out;
}

DyckWord unchecked_dyck(std::string steps) { return DyckWord(std::move(steps)); }

std::size_t factor_count(const DyckWord& d, std::string_view factor)
{
    if (factor.empty()) throw InvalidInput("factor must be nonempty");
    const std::string& s = d.str();
    std::size_t count = 0;
    for (std::size_t pos = s.find(factor); pos != std::string::npos; pos = s.find(factor, pos + 1)) ++count;
    return count;
}

std::size_t st(const DyckWord& d) { return factor_count(d, "UUD"); }

std::size_t st_star(const DyckWord& d)
{
    const std::string& s = d.str();
    const std::size_t last_up = s.rfind('U');
    std::size_t count = 0;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i] == 'U' && s[i + 1] == 'U' && s[i + 2] == 'D' && i + 1 < last_up) ++count;
    }
    return count;
}

bool is_indecomposable(const DyckWord& d)
{
    if (d.empty()) return false;
    long height = 0;
    for (std::size_t i = 0; i + 1 < d.length(); ++i) {
        height += d[i] == 'U' ? 1 : -1;
        if (height == 0) return false;
    }
    return true;
}

std::vector<DyckWord> decompose(const DyckWord& d)
{
    std::vector<DyckWord> parts;
    long height = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < d.length(); ++i) {
        height += d[i] == 'U' ? 1 : -1;
        if (height == 0) {
            parts.push_back(unchecked_dyck(d.str().substr(start, i + 1 - start)));
            start = i + 1;
        }
    }
    return parts;
}

DyckWord reverse_path(const DyckWord& d)
{
    std::string s(d.str().rbegin(), d.str().rend());
    for (char& ch : s) ch = ch == 'U' ? 'D' : 'U';
    return unchecked_dyck(std::move(s));
}

DyckWord operator+(const DyckWord& a, const DyckWord& b) { return unchecked_dyck(a.str() + b.str()); }

} // namespace permstats
