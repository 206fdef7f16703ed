#include "nilcone/sheets.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"

namespace nilcone {

SheetLabel::SheetLabel(Partition l, std::vector<SheetChoice> c) : lambda(std::move(l)), choice(std::move(c)) {
    if (choice.size() != lambda.length()) throw std::invalid_argument("sheet label needs one choice per part of λ");
    for (std::size_t i = 1; i < choice.size(); ++i)
        if (lambda[i] == lambda[i - 1] && choice[i - 1] == SheetChoice::zero && choice[i] == SheetChoice::vec)
            throw std::invalid_argument("VEC must precede ZERO within equal parts");
}

SheetLabel SheetLabel::canonical(std::vector<std::pair<int, SheetChoice>> parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second == SheetChoice::vec && b.second == SheetChoice::zero;
    });
    std::vector<int> lam;
    std::vector<SheetChoice> ch;
    for (const auto& [m, c] : parts) {
        lam.push_back(m);
        ch.push_back(c);
    }
    return SheetLabel(Partition(std::move(lam)), std::move(ch));
}

ClassLabel SheetLabel::dense_class() const {
    std::vector<Bipartition> blocks;
    for (std::size_t i = 0; i < choice.size(); ++i) {
        const Partition col = Partition::column(lambda[i]);
        blocks.push_back(choice[i] == SheetChoice::vec ? Bipartition{col, {}} : Bipartition{{}, col});
    }
    return ClassLabel(lambda, std::move(blocks));
}

std::string SheetLabel::to_string() const {
    std::string out = "λ=[" + lambda.to_string(TextStyle::expanded) + "] ; choice=[";
    for (std::size_t i = 0; i < choice.size(); ++i) {
        if (i) out += ',';
        out += choice[i] == SheetChoice::vec ? "VEC" : "ZERO";
    }
    return out + "]";
}

std::uint64_t sheet_count(int n) {
    std::uint64_t total = 0;
    for (const auto& lambda : partitions_of(n)) {
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < lambda.length();) {
            std::size_t j = i;
            while (j < lambda.length() && lambda[j] == lambda[i]) ++j;
            prod *= j - i + 1;
            i = j;
        }
        total += prod;
    }
    return total;
}

std::vector<SheetLabel> enumerate_sheets(int n) {
    if (n > 20) throw BudgetExceeded("sheet enumeration budget is n ≤ 20 (got " + std::to_string(n) + ")");
    if (n < 0) throw std::invalid_argument("sheets of a negative number");
    std::vector<SheetLabel> out;
    for (const auto& lambda : partitions_of(n)) {
        std::vector<std::size_t> run_start, run_len;
        for (std::size_t i = 0; i < lambda.length();) {
            std::size_t j = i;
            while (j < lambda.length() && lambda[j] == lambda[i]) ++j;
            run_start.push_back(i);
            run_len.push_back(j - i);
            i = j;
        }
        // Odometer over the number of VEC entries in each run, most VEC first.
        std::vector<std::size_t> vecs(run_len);
        while (true) {
            std::vector<SheetChoice> choice(lambda.length(), SheetChoice::zero);
            for (std::size_t r = 0; r < run_len.size(); ++r)
                for (std::size_t t = 0; t < vecs[r]; ++t) choice[run_start[r] + t] = SheetChoice::vec;
            out.emplace_back(lambda, std::move(choice));
            std::size_t r = run_len.size();
            while (r > 0 && vecs[r - 1] == 0) {
                vecs[r - 1] = run_len[r - 1];
                --r;
            }
            if (r == 0) break;
            --vecs[r - 1];
        }
    }
    return out;
}

long sheet_dim_enhanced(const SheetLabel& s) { return class_dim_enhanced(s.dense_class()); }

long sheet_dim_exotic(const SheetLabel& s) { return class_dim_exotic(s.dense_class()); }

Bipartition sheet_nilpotent_orbit(const SheetLabel& s) { return class_nilcone_orbit(s.dense_class()); }

std::vector<ClassLabel> rank_stratum(int n, long k) {
    std::vector<ClassLabel> out;
    for (auto& c : enumerate_classes(n))
        if (class_orbit_dim(c) == k) out.push_back(std::move(c));
    return out;
}

MaximalityReport sheets_maximality(int n) {
    if (n > 6) throw BudgetExceeded("maximality check budget is n ≤ 6 (got " + std::to_string(n) + ")");
    MaximalityReport report;
    report.n = n;
    std::map<long, std::vector<ClassLabel>> strata;
    for (auto& c : enumerate_classes(n)) strata[class_orbit_dim(c)].push_back(std::move(c));
    std::vector<ClassLabel> sheet_classes;
    for (const auto& s : enumerate_sheets(n)) sheet_classes.push_back(s.dense_class());
    auto is_sheet = [&](const ClassLabel& c) {
        return std::find(sheet_classes.begin(), sheet_classes.end(), c) != sheet_classes.end();
    };
    report.strata = strata.size();
    for (const auto& [k, classes] : strata) {
        for (const auto& c : classes) {
            bool maximal = true;
            for (const auto& d : classes)
                if (!(d == c) && class_closure_leq(c, d)) {
                    maximal = false;
                    break;
                }
            if (maximal && !is_sheet(c)) report.unexpected_maximal.push_back(c);
            if (!maximal && is_sheet(c)) report.sheets_not_maximal.push_back(c);
        }
    }
    return report;
}

bool sheets_are_maximal_check(int n) { return sheets_maximality(n).ok(); }

InvariantVector enhanced_invariants(const EnhancedElement& e) { return char_poly(e.x); }

InvariantVector exotic_invariants(const ExoticElement& e) {
    const Polynomial chi = char_polynomial(e.x);
    const auto root = square_root(chi);
    if (!root) throw NotPerfectSquare("characteristic polynomial " + chi.to_string() + " is not a square");
    InvariantVector out;
    const int d = root->degree();
    for (int i = d - 1; i >= 0; --i) out.push_back(root->coeff(static_cast<std::size_t>(i)));
    return out;
}

InvariantVector invariants(const AnyElement& e) {
    if (const auto* en = std::get_if<EnhancedElement>(&e)) return enhanced_invariants(*en);
    return exotic_invariants(std::get<ExoticElement>(e));
}

bool same_fiber(const AnyElement& a, const AnyElement& b) {
    if (a.index() != b.index()) throw ModuleMismatch("cannot compare enhanced and exotic invariants");
    const Field& fa = std::visit([](const auto& x) -> const Field& { return x.field(); }, a);
    const Field& fb = std::visit([](const auto& x) -> const Field& { return x.field(); }, b);
    if (!(fa == fb)) throw FieldMismatch("elements over " + fa.name() + " and " + fb.name());
    return invariants(a) == invariants(b);
}

FiberCensus fiber_census(int n, std::uint32_t p) {
    if (n < 1 || n > 2 || p > 5) throw BudgetExceeded("fiber census budget is n ≤ 2, p ≤ 5");
    const Field f = Field::prime(p);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t coords = un + un * un;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < coords; ++i) total *= p;
    FiberCensus census;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        EnhancedElement e = EnhancedElement::zero(f, un);
        for (std::size_t i = 0; i < un; ++i, t /= p) e.v[i] = Scalar(f, static_cast<long>(t % p));
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j, t /= p) e.x(i, j) = Scalar(f, static_cast<long>(t % p));
        ++census.points;
        std::string key;
        for (const auto& c : enhanced_invariants(e)) key += (key.empty() ? "" : ",") + c.to_string();
        auto& fiber = census.fibers[key];
        try {
            const ClassIdentification id = identify_class_detailed(e);
            std::string label = id.label.to_string() + " @";
            for (const auto& s : id.eigenvalues) label += " " + s.to_string();
            ++fiber[label];
        } catch (const NonSplitSpectrum&) {
            ++census.non_split;
            ++fiber["non-split"];
        }
    }
    return census;
}

}  // namespace nilcone
