#include "nilcone/enhanced.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"

namespace nilcone {

EnhancedElement::EnhancedElement(Vector v_, Matrix x_) : v(std::move(v_)), x(std::move(x_)) {
    if (!x.is_square() || x.rows() != v.dim()) throw DimensionMismatch("enhanced element needs v ∈ k^n, x ∈ gl_n");
    if (!(x.field() == v.field())) throw FieldMismatch("enhanced element v and x over different fields");
}

EnhancedElement EnhancedElement::zero(const Field& f, std::size_t n) { return {Vector(f, n), Matrix(f, n, n)}; }

long orbit_dim(const Bipartition& b) {
    const long n = b.n();
    return n * n - b.jordan_type().transpose().sum_of_squares() + b.mu.size();
}

long orbit_codim(const Bipartition& b) {
    const long n = b.n();
    return n + n * n - orbit_dim(b);
}

EnhancedElement build_representative(const Bipartition& b, const Field& f, RepresentativeConvention conv) {
    const Partition lambda = b.jordan_type();
    const auto n = static_cast<std::size_t>(b.n());
    EnhancedElement e = EnhancedElement::zero(f, n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        const auto len = static_cast<std::size_t>(lambda[i]);
        for (std::size_t j = 1; j < len; ++j) e.x(offset + j - 1, offset + j) = Scalar::one(f);
        const auto mu_i = static_cast<std::size_t>(b.mu[i]);
        if (mu_i > 0) {
            if (conv == RepresentativeConvention::mu_endpoints) {
                e.v[offset + mu_i - 1] = Scalar::one(f);
            } else {
                for (std::size_t j = 0; j < mu_i; ++j) e.v[offset + j] = Scalar::one(f);
            }
        }
        offset += len;
    }
    return e;
}

Bipartition identify_orbit(const EnhancedElement& e) {
    auto [mu, nu] = restricted_jordan_type(e.x, e.v);
    return {std::move(mu), std::move(nu)};
}

std::pair<EnhancedElement, EnhancedElement> jkv_decompose(const EnhancedElement& e) {
    const JordanChevalley jc = jordan_chevalley_split(e.x);
    return {EnhancedElement(Vector(e.field(), e.n()), jc.semisimple), EnhancedElement(e.v, jc.nilpotent)};
}

InductionDatum::InductionDatum(Composition c, std::vector<Bipartition> blocks)
    : composition(std::move(c)), per_block(std::move(blocks)) {
    if (per_block.size() != composition.parts.size())
        throw SizeMismatch("datum has " + std::to_string(composition.parts.size()) + " blocks but " +
                           std::to_string(per_block.size()) + " labels");
    for (std::size_t i = 0; i < per_block.size(); ++i)
        if (per_block[i].n() != composition.parts[i])
            throw SizeMismatch("block " + std::to_string(i + 1) + " has size " + std::to_string(composition.parts[i]) +
                               " but label " + per_block[i].to_string());
}

InductionDatum InductionDatum::rigid(const Composition& c) {
    std::vector<Bipartition> blocks;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        const Partition col = Partition::column(c.parts[i]);
        if (static_cast<int>(i) < c.marked)
            blocks.push_back({col, {}});
        else
            blocks.push_back({{}, col});
    }
    return InductionDatum(c, std::move(blocks));
}

InductionDatum InductionDatum::from_blocks(std::vector<Bipartition> blocks) {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(b.n());
    return InductionDatum(Composition(std::move(sizes), 0), std::move(blocks));
}

bool InductionDatum::is_rigid() const {
    for (std::size_t i = 0; i < per_block.size(); ++i) {
        const Partition col = Partition::column(composition.parts[i]);
        const Bipartition expected = static_cast<int>(i) < composition.marked ? Bipartition{col, {}} : Bipartition{{}, col};
        if (per_block[i] != expected) return false;
    }
    return true;
}

Bipartition induce_from_vector(const InductionDatum& d) {
    if (!d.is_rigid())
        throw NotRigidDatum("blocks must be (1^n_i;) on the marked prefix and (;1^n_i) after it");
    const auto& parts = d.composition.parts;
    const int width = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    std::vector<int> mu, nu;
    for (int j = 1; j <= width; ++j) {
        int m = 0, v = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] >= j) ++(static_cast<int>(i) < d.composition.marked ? m : v);
        if (m) mu.push_back(m);
        if (v) nu.push_back(v);
    }
    return {Partition(std::move(mu)), Partition(std::move(nu))};
}

Bipartition induce(const InductionDatum& d) {
    Bipartition out;
    for (const auto& b : d.per_block) {
        out.mu = add(out.mu, b.mu);
        out.nu = add(out.nu, b.nu);
    }
    return out;
}

EnhancedElement column_rule_representative(const Composition& c, const Field& f) {
    const auto n = static_cast<std::size_t>(c.size());
    EnhancedElement e = EnhancedElement::zero(f, n);
    std::vector<std::size_t> offset(c.parts.size() + 1, 0);
    for (std::size_t j = 0; j < c.parts.size(); ++j) offset[j + 1] = offset[j] + static_cast<std::size_t>(c.parts[j]);
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
        for (int row = 0; row < c.parts[j]; ++row) {
            const std::size_t src = offset[j] + static_cast<std::size_t>(row);
            for (std::size_t l = j; l-- > 0;) {
                if (c.parts[l] > row) {
                    e.x(offset[l] + static_cast<std::size_t>(row), src) = Scalar::one(f);
                    break;
                }
            }
            if (static_cast<int>(j) < c.marked) e.v[src] = Scalar::one(f);
        }
    }
    return e;
}

EnhancedElement induction_representative(const InductionDatum& d, const Field& f) {
    if (d.is_rigid()) return column_rule_representative(d.composition, f);
    std::vector<int> marked, unmarked;
    for (const auto& b : d.per_block) {
        const InductionDatum r = rigid_datum(b);
        for (std::size_t i = 0; i < r.composition.parts.size(); ++i)
            (static_cast<int>(i) < r.composition.marked ? marked : unmarked).push_back(r.composition.parts[i]);
    }
    const int k = static_cast<int>(marked.size());
    marked.insert(marked.end(), unmarked.begin(), unmarked.end());
    return column_rule_representative(Composition(std::move(marked), k), f);
}

bool is_rigid(const Bipartition& b) {
    const Partition col = Partition::column(b.n());
    return (b.mu == col && b.nu.empty()) || (b.mu.empty() && b.nu == col);
}

InductionDatum rigid_datum(const Bipartition& b) {
    std::vector<int> cols = b.mu.transpose().parts();
    std::reverse(cols.begin(), cols.end());
    const int k = static_cast<int>(cols.size());
    const Partition nu_cols = b.nu.transpose();
    cols.insert(cols.end(), nu_cols.parts().begin(), nu_cols.parts().end());
    return InductionDatum::rigid(Composition(std::move(cols), k));
}

bool closure_leq(const Bipartition& a, const Bipartition& b) { return ah_closure_leq(a, b); }

}  // namespace nilcone
