#include "nilcone/jordan_classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

bool canonical_before(const Bipartition& a, const Bipartition& b) {
    if (a.n() != b.n()) return a.n() > b.n();
    return a > b;
}

std::uint64_t multichoose(std::uint64_t k, std::uint64_t d) {
    // C(k + d − 1, d)
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= d; ++i) r = r * (k + i - 1) / i;
    return r;
}

}  // namespace

ClassLabel::ClassLabel(Partition l, std::vector<Bipartition> b) : lambda(std::move(l)), blocks(std::move(b)) {
    if (blocks.size() != lambda.length()) throw std::invalid_argument("class label needs one block per part of λ");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].n() != lambda[i]) throw std::invalid_argument("block " + blocks[i].to_string() + " does not match λ");
        if (i && canonical_before(blocks[i], blocks[i - 1]))
            throw std::invalid_argument("class label blocks are not in canonical order");
    }
}

ClassLabel ClassLabel::canonical(std::vector<Bipartition> b) {
    std::stable_sort(b.begin(), b.end(), canonical_before);
    std::vector<int> parts;
    for (const auto& x : b) {
        if (x.n() == 0) throw std::invalid_argument("class blocks must be nonempty");
        parts.push_back(x.n());
    }
    return ClassLabel(Partition(std::move(parts)), std::move(b));
}

ClassLabel ClassLabel::nilpotent(const Bipartition& b) { return canonical({b}); }

std::string ClassLabel::to_string(TextStyle style) const {
    std::string out = "λ=[" + lambda.to_string(TextStyle::expanded) + "] ; blocks=[";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ',';
        out += blocks[i].to_string(style);
    }
    return out + "]";
}

InductionDatum ClassLabel::datum() const { return InductionDatum::from_blocks(blocks); }

ClassLabel parse_class_label(std::string_view text) {
    const auto open = text.find("blocks=[");
    const auto close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("expected 'λ=[…] ; blocks=[…]' but got '" + std::string(text) + "'");
    std::string_view body = text.substr(open + 8, close - open - 8);
    std::vector<Bipartition> blocks;
    std::size_t pos = 0;
    while (pos < body.size()) {
        const auto lp = body.find('(', pos);
        if (lp == std::string_view::npos) break;
        const auto rp = body.find(')', lp);
        if (rp == std::string_view::npos) throw ParseError("unbalanced block in '" + std::string(text) + "'");
        blocks.push_back(parse_bipartition(body.substr(lp, rp - lp + 1)));
        pos = rp + 1;
    }
    ClassLabel c;
    try {
        c = ClassLabel::canonical(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const auto lam_open = text.find('[');
    if (lam_open < open) {
        const auto lam_close = text.find(']', lam_open);
        if (parse_partition(text.substr(lam_open + 1, lam_close - lam_open - 1)) != c.lambda)
            throw ParseError("λ does not match the block sizes in '" + std::string(text) + "'");
    }
    return c;
}

std::uint64_t class_count(int n) {
    std::uint64_t total = 0;
    for (const auto& lambda : partitions_of(n)) {
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < lambda.length();) {
            std::size_t j = i;
            while (j < lambda.length() && lambda[j] == lambda[i]) ++j;
            prod *= multichoose(bipartition_count(lambda[i]), j - i);
            i = j;
        }
        total += prod;
    }
    return total;
}

std::vector<ClassLabel> enumerate_classes(int n) {
    if (n > 12) throw BudgetExceeded("class enumeration budget is n ≤ 12 (got " + std::to_string(n) + ")");
    if (n < 0) throw std::invalid_argument("classes of a negative number");
    std::vector<ClassLabel> out;
    for (const auto& lambda : partitions_of(n)) {
        // Runs of equal parts; each run picks a weakly decreasing multiset of labels.
        std::vector<std::pair<int, std::size_t>> runs;
        for (std::size_t i = 0; i < lambda.length();) {
            std::size_t j = i;
            while (j < lambda.length() && lambda[j] == lambda[i]) ++j;
            runs.emplace_back(lambda[i], j - i);
            i = j;
        }
        std::vector<std::vector<Bipartition>> pools;
        for (const auto& [part, d] : runs) pools.push_back(enumerate_bipartitions(part));
        std::vector<Bipartition> cur;
        std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t run, std::size_t taken, std::size_t min_idx) {
            if (run == runs.size()) {
                out.emplace_back(lambda, cur);
                return;
            }
            if (taken == runs[run].second) {
                rec(run + 1, 0, 0);
                return;
            }
            const auto& pool = pools[run];
            for (std::size_t idx = min_idx; idx < pool.size(); ++idx) {
                cur.push_back(pool[idx]);
                rec(run, taken + 1, idx);
                cur.pop_back();
            }
        };
        rec(0, 0, 0);
    }
    return out;
}

long class_orbit_dim(const ClassLabel& c) {
    const long n = c.n();
    long d = n * n - c.lambda.sum_of_squares();
    for (const auto& b : c.blocks) d += orbit_dim(b);
    return d;
}

long class_dim_enhanced(const ClassLabel& c) { return class_orbit_dim(c) + static_cast<long>(c.lambda.length()); }

long class_dim_exotic(const ClassLabel& c) { return 2 * class_orbit_dim(c) + static_cast<long>(c.lambda.length()); }

namespace {

// Restriction of (v, x) to the image of an idempotent commuting with x.
std::pair<Vector, Matrix> restrict_to_image(const Matrix& idem, const Vector& v, const Matrix& x) {
    const Field& f = x.field();
    const std::size_t n = x.rows();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(idem.column(j));
    const std::vector<Vector> basis_cols = independent_subset(f, n, cols);
    const Matrix basis = Matrix::from_columns(f, n, basis_cols);
    const std::size_t m = basis_cols.size();
    std::vector<Vector> images;
    for (const auto& b : basis_cols) images.push_back(*coordinates(basis, x * b));
    return {*coordinates(basis, idem * v), Matrix::from_columns(f, m, images)};
}

template <class Identify>
ClassIdentification identify_by_eigenspaces(const Vector& v, const Matrix& x, Identify identify) {
    const JordanChevalley jc = jordan_chevalley_split(x);
    std::vector<std::pair<Bipartition, Scalar>> parts;
    for (std::size_t i = 0; i < jc.eigenvalues.size(); ++i) {
        auto [vi, xi] = restrict_to_image(jc.idempotents[i], v, jc.nilpotent);
        parts.emplace_back(identify(vi, xi), jc.eigenvalues[i].first);
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
    ClassIdentification out;
    std::vector<Bipartition> blocks;
    for (auto& [b, s] : parts) {
        blocks.push_back(b);
        out.eigenvalues.push_back(s);
    }
    out.label = ClassLabel::canonical(std::move(blocks));
    return out;
}

}  // namespace

ClassIdentification identify_class_detailed(const EnhancedElement& e) {
    return identify_by_eigenspaces(e.v, e.x, [](const Vector& v, const Matrix& x) { return identify_orbit({v, x}); });
}

ClassLabel identify_class(const EnhancedElement& e) { return identify_class_detailed(e).label; }

ClassIdentification identify_class_detailed(const ExoticElement& e) {
    return identify_by_eigenspaces(e.v, e.x, [](const Vector& v, const Matrix& x) {
        return halve_bipartition(identify_orbit({v, x}));
    });
}

ClassLabel identify_class(const ExoticElement& e) { return identify_class_detailed(e).label; }

EnhancedElement class_representative(const ClassLabel& c, const Field& f, std::vector<Scalar> eigenvalues) {
    if (eigenvalues.empty())
        for (std::size_t i = 0; i < c.blocks.size(); ++i) eigenvalues.emplace_back(f, static_cast<long>(i));
    if (eigenvalues.size() != c.blocks.size()) throw SizeMismatch("need one eigenvalue per block");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j]) throw RepeatedEigenvalue(eigenvalues[i].to_string() + " repeated");
    EnhancedElement e = EnhancedElement::zero(f, static_cast<std::size_t>(c.n()));
    std::size_t offset = 0;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        const EnhancedElement r = build_representative(c.blocks[i], f);
        for (std::size_t a = 0; a < r.n(); ++a) {
            e.v[offset + a] = r.v[a];
            for (std::size_t b = 0; b < r.n(); ++b) e.x(offset + a, offset + b) = r.x(a, b);
            e.x(offset + a, offset + a) += eigenvalues[i];
        }
        offset += r.n();
    }
    return e;
}

Bipartition class_nilcone_orbit(const ClassLabel& c) { return induce(c.datum()); }

bool class_closure_leq(const ClassLabel& c1, const ClassLabel& c2) {
    if (c1.n() != c2.n())
        throw SizeMismatch("class comparison between sizes " + std::to_string(c1.n()) + " and " + std::to_string(c2.n()));
    const std::size_t r1 = c1.blocks.size(), r2 = c2.blocks.size();
    if (r1 > r2) return false;
    std::vector<int> room(r1);
    for (std::size_t j = 0; j < r1; ++j) room[j] = c1.lambda[j];
    std::vector<Bipartition> merged(r1);
    std::vector<std::size_t> used(r1, 0);

    // Assign the parts of c2 in order; sums must fill every part of c1 exactly.
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == r2) {
            for (std::size_t j = 0; j < r1; ++j)
                if (room[j] != 0 || !closure_leq(c1.blocks[j], merged[j])) return false;
            return true;
        }
        const Bipartition& b = c2.blocks[i];
        for (std::size_t j = 0; j < r1; ++j) {
            if (room[j] < b.n()) continue;
            // Parts of c1 that are identical so far are interchangeable: only try the first empty one.
            if (used[j] == 0) {
                bool seen = false;
                for (std::size_t t = 0; t < j; ++t)
                    if (used[t] == 0 && c1.lambda[t] == c1.lambda[j] && c1.blocks[t] == c1.blocks[j]) seen = true;
                if (seen) continue;
            }
            const Bipartition saved = merged[j];
            room[j] -= b.n();
            ++used[j];
            merged[j] = {add(merged[j].mu, b.mu), add(merged[j].nu, b.nu)};
            if (rec(i + 1)) return true;
            merged[j] = saved;
            room[j] += b.n();
            --used[j];
        }
        return false;
    };
    return rec(0);
}

}  // namespace nilcone
