#include "nilcone/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nilcone/errors.hpp"

namespace nilcone {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
        throw std::invalid_argument("negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

long Partition::sum_of_squares() const {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

std::string Partition::to_string(TextStyle style) const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        const std::size_t run = j - i;
        if (style == TextStyle::compact) {
            if (!out.empty()) out += ',';
            out += std::to_string(parts_[i]);
            if (run > 1) out += '^' + std::to_string(run);
        } else {
            for (std::size_t r = 0; r < run; ++r) {
                if (!out.empty()) out += ',';
                out += std::to_string(parts_[i]);
            }
        }
        i = j;
    }
    return out;
}

Partition add(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<int> s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = a[i] + b[i];
    return Partition(std::move(s));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw SizeMismatch("dominance of partitions of " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition parse_partition(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty() || t == "\xE2\x88\x85") return {};  // "" or "∅"
    std::vector<int> parts;
    for (auto tok : split(t, ',')) {
        tok = trim(tok);
        const auto caret = tok.find('^');
        const int value = parse_int(tok.substr(0, caret), text);
        const int reps = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), text);
        if (value <= 0 || reps <= 0) throw ParseError("parts and exponents must be positive in '" + std::string(text) + "'");
        parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Bipartition::to_string(TextStyle style) const {
    return "(" + mu.to_string(style) + ";" + nu.to_string(style) + ")";
}

std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
    if (auto c = a.mu.size() <=> b.mu.size(); c != 0) return c;
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    return a.nu <=> b.nu;
}

namespace {

Partition double_parts(const Partition& p) {
    std::vector<int> d;
    for (int x : p.parts()) d.insert(d.end(), 2, x);
    return Partition(std::move(d));
}

bool even_runs(const Partition& p) {
    for (int x : p.parts())
        if (p.multiplicity(x) % 2 != 0) return false;
    return true;
}

Partition halve_parts(const Partition& p) {
    std::vector<int> h;
    for (std::size_t i = 0; i < p.length(); i += 2) h.push_back(p[i]);
    return Partition(std::move(h));
}

}  // namespace

Bipartition double_bipartition(const Bipartition& b) { return {double_parts(b.mu), double_parts(b.nu)}; }

bool is_doubled(const Bipartition& b) { return even_runs(b.mu) && even_runs(b.nu); }

Bipartition halve_bipartition(const Bipartition& b) {
    if (!is_doubled(b)) throw NotDoubled(b.to_string() + " is not of the form (μ∪μ;ν∪ν)");
    return {halve_parts(b.mu), halve_parts(b.nu)};
}

std::vector<Bipartition> enumerate_bipartitions(int n, int budget) {
    if (n < 0) throw std::invalid_argument("bipartitions of a negative number");
    if (n > budget) throw BudgetExceeded("bipartitions of " + std::to_string(n) + " exceed budget " + std::to_string(budget));
    std::vector<Bipartition> out;
    out.reserve(bipartition_count(n));
    for (int m = n; m >= 0; --m) {
        const auto mus = partitions_of(m);
        const auto nus = partitions_of(n - m);
        for (const auto& mu : mus)
            for (const auto& nu : nus) out.push_back({mu, nu});
    }
    return out;
}

bool ah_closure_leq(const Bipartition& a, const Bipartition& b) {
    if (a.n() != b.n())
        throw SizeMismatch("closure order between sizes " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    const std::size_t len = std::max({a.mu.length(), a.nu.length(), b.mu.length(), b.nu.length()});
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < len; ++k) {
        if (sa + a.mu[k] > sb + b.mu[k]) return false;
        sa += a.mu[k] + a.nu[k];
        sb += b.mu[k] + b.nu[k];
        if (sa > sb) return false;
    }
    return true;
}

Bipartition parse_bipartition(std::string_view text) {
    std::string_view t = trim(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
        t = t.substr(1, t.size() - 2);
    }
    const auto halves = split(t, ';');
    if (halves.size() != 2) throw ParseError("expected 'μ;ν' but got '" + std::string(text) + "'");
    return {parse_partition(halves[0]), parse_partition(halves[1])};
}

std::vector<Bipartition> parse_bipartition_list(std::string_view text) {
    std::vector<Bipartition> out;
    for (auto tok : split(text, '|')) out.push_back(parse_bipartition(tok));
    return out;
}

Composition::Composition(std::vector<int> p, int k) : parts(std::move(p)), marked(k) {
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x <= 0; }))
        throw std::invalid_argument("composition parts must be positive");
    if (k < 0 || k > static_cast<int>(parts.size())) throw std::invalid_argument("marked prefix out of range");
}

int Composition::size() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += (static_cast<int>(i) == marked ? " | " : ",");
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Composition parse_composition(std::string_view text, int marked) {
    std::vector<int> parts;
    for (auto tok : split(trim(text), ',')) {
        const int v = parse_int(tok, text);
        if (v <= 0) throw ParseError("composition parts must be positive in '" + std::string(text) + "'");
        parts.push_back(v);
    }
    if (marked < 0 || marked > static_cast<int>(parts.size()))
        throw ParseError("marked prefix " + std::to_string(marked) + " out of range");
    return Composition(std::move(parts), marked);
}

std::uint64_t partition_count(int n) {
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return p[static_cast<std::size_t>(n)];
}

std::uint64_t bipartition_count(int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
    return total;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.to_string() << ")"; }
std::ostream& operator<<(std::ostream& os, const Bipartition& b) { return os << b.to_string(); }

}  // namespace nilcone
