#include "nilcone/closure_oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

using Code = std::uint32_t;

// F_p^n with vectors packed as base-p integers (coordinate j is digit j).
struct SmallSpace {
    unsigned n = 0;
    std::uint32_t p = 2;
    Code size = 1;
    std::vector<Code> place;

    SmallSpace(unsigned n_, std::uint32_t p_) : n(n_), p(p_) {
        for (unsigned j = 0; j < n; ++j) {
            place.push_back(size);
            size *= p;
        }
    }
    std::uint32_t digit(Code a, unsigned j) const { return (a / place[j]) % p; }
    Code add(Code a, Code b) const {
        Code out = 0;
        for (unsigned j = 0; j < n; ++j) out += ((digit(a, j) + digit(b, j)) % p) * place[j];
        return out;
    }
    Code scale(std::uint32_t c, Code a) const {
        Code out = 0;
        for (unsigned j = 0; j < n; ++j) out += ((c * digit(a, j)) % p) * place[j];
        return out;
    }
};

struct Bits {
    std::vector<std::uint64_t> words;
    explicit Bits(Code size = 0) : words((size + 63) / 64, 0) {}
    void set(Code a) { words[a / 64] |= std::uint64_t{1} << (a % 64); }
    bool test(Code a) const { return (words[a / 64] >> (a % 64)) & 1U; }
};

struct Subspace {
    std::vector<Code> basis;
    Bits members;
};

std::uint32_t small_residue(const Scalar& s, std::uint32_t p) {
    if (s.field().is_prime()) {
        if (s.field().characteristic() != p) throw FieldMismatch("oracle prime differs from the element's field");
        return s.residue();
    }
    const mpq_class& q = s.rational();
    if (q.get_den() != 1) throw FieldMismatch("oracle input must have integral entries");
    mpz_class r = q.get_num() % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

// x and v reduced mod p, x as an apply table over all codes.
struct Reduced {
    std::vector<std::vector<std::uint32_t>> x;
    std::vector<std::uint32_t> v;
};

Reduced reduce(const EnhancedElement& e, std::uint32_t p) {
    const std::size_t n = e.n();
    Reduced r{std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n)), std::vector<std::uint32_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        r.v[i] = small_residue(e.v[i], p);
        for (std::size_t j = 0; j < n; ++j) r.x[i][j] = small_residue(e.x(i, j), p);
    }
    return r;
}

std::vector<Subspace> subspaces_of_dim(const SmallSpace& sp, unsigned d) {
    std::vector<Subspace> out;
    enumerate_subspaces(sp.n, d, sp.p, [&](const Matrix& rref) {
        Subspace s{{}, Bits(sp.size)};
        for (std::size_t i = 0; i < rref.rows(); ++i) {
            Code c = 0;
            for (unsigned j = 0; j < sp.n; ++j) c += rref(i, j).residue() * sp.place[j];
            s.basis.push_back(c);
        }
        std::vector<Code> span{0};
        for (Code b : s.basis) {
            const std::size_t before = span.size();
            for (std::uint32_t c = 1; c < sp.p; ++c)
                for (std::size_t t = 0; t < before; ++t) span.push_back(sp.add(span[t], sp.scale(c, b)));
        }
        for (Code m : span) s.members.set(m);
        out.push_back(std::move(s));
    });
    return out;
}

void check_prime(std::uint32_t p) {
    if (!is_prime_number(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::vector<int> prefix_dims(const Composition& c) {
    std::vector<int> dims{0};
    for (int part : c.parts) dims.push_back(dims.back() + part);
    return dims;
}

class FlagSearch {
public:
    FlagSearch(const EnhancedElement& e, const Composition& c, std::uint32_t p) : sp_(static_cast<unsigned>(e.n()), p), c_(c) {
        dims_ = prefix_dims(c);
        const Reduced r = reduce(e, p);
        apply_.resize(sp_.size);
        for (Code a = 0; a < sp_.size; ++a) {
            Code out = 0;
            for (unsigned i = 0; i < sp_.n; ++i) {
                std::uint32_t s = 0;
                for (unsigned j = 0; j < sp_.n; ++j) s += r.x[i][j] * sp_.digit(a, j);
                out += (s % p) * sp_.place[i];
            }
            apply_[a] = out;
        }
        for (unsigned i = 0; i < sp_.n; ++i) v_ += r.v[i] * sp_.place[i];
        levels_.resize(c.parts.size() + 1);
        for (std::size_t i = 1; i < c.parts.size(); ++i) levels_[i] = subspaces_of_dim(sp_, static_cast<unsigned>(dims_[i]));
        full_.members = Bits(sp_.size);
        for (Code a = 0; a < sp_.size; ++a) full_.members.set(a);
        for (unsigned j = 0; j < sp_.n; ++j) full_.basis.push_back(sp_.place[j]);
    }

    bool run(Execution exec) const {
        const std::size_t r = c_.parts.size();
        if (r == 0) return true;
        if (c_.marked == 0 && v_ != 0) return false;
        if (r == 1) return admissible(1, full_, full_);
        if (exec == Execution::serial) return extend(r - 1, full_);
        const auto& top = levels_[r - 1];
        std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t t = 0; t < top.size(); ++t) {
            if (found.load(std::memory_order_relaxed)) continue;
            if (admissible(r - 1, top[t], full_) && (r - 1 == 1 || extend(r - 2, top[t])))
                found.store(true, std::memory_order_relaxed);
        }
        return found.load();
    }

private:
    // Conditions tying F_i = s to F_{i+1} = upper (and to F_0 = 0 when i = 1).
    bool admissible(std::size_t i, const Subspace& s, const Subspace& upper) const {
        for (Code b : s.basis)
            if (!upper.members.test(b)) return false;
        for (Code b : upper.basis)
            if (!s.members.test(apply_[b])) return false;
        if (static_cast<int>(i) == c_.marked && !s.members.test(v_)) return false;
        if (i == 1)
            for (Code b : s.basis)
                if (apply_[b] != 0) return false;
        return true;
    }

    bool extend(std::size_t i, const Subspace& upper) const {
        for (const auto& s : levels_[i]) {
            if (!admissible(i, s, upper)) continue;
            if (i == 1 || extend(i - 1, s)) return true;
        }
        return false;
    }

    SmallSpace sp_;
    Composition c_;
    std::vector<int> dims_;
    std::vector<Code> apply_;
    Code v_ = 0;
    std::vector<std::vector<Subspace>> levels_;
    Subspace full_;
};

using SmallMat = std::vector<std::uint32_t>;  // row-major n×n mod p

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    for (std::uint32_t e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
        if (e & 1U) r = r * b % p;
    return r;
}

bool invert_mod(SmallMat m, std::size_t n, std::uint32_t p, SmallMat& out) {
    out.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) return false;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m[piv * n + j], m[col * n + j]);
            std::swap(out[piv * n + j], out[col * n + j]);
        }
        const std::uint32_t s = inv_mod(m[col * n + col], p);
        for (std::size_t j = 0; j < n; ++j) {
            m[col * n + j] = m[col * n + j] * s % p;
            out[col * n + j] = out[col * n + j] * s % p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i * n + col] == 0) continue;
            const std::uint32_t f = p - m[i * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i * n + j] = (m[i * n + j] + f * m[col * n + j]) % p;
                out[i * n + j] = (out[i * n + j] + f * out[col * n + j]) % p;
            }
        }
    }
    return true;
}

}  // namespace

bool flag_witness_exists(const EnhancedElement& e, const Composition& c, std::uint32_t p, Execution exec) {
    check_prime(p);
    if (c.size() != static_cast<int>(e.n()))
        throw SizeMismatch("composition of " + std::to_string(c.size()) + " for an element of size " + std::to_string(e.n()));
    if (e.n() > 5 || p > 5)
        throw BudgetExceeded("flag oracle budget is n ≤ 5, p ≤ 5 (got n=" + std::to_string(e.n()) + ", p=" + std::to_string(p) + ")");
    return FlagSearch(e, c, p).run(exec);
}

bool sweep_witness_exists(const EnhancedElement& e, const Composition& c, std::uint32_t p, Execution exec) {
    check_prime(p);
    const std::size_t n = e.n();
    if (c.size() != static_cast<int>(n))
        throw SizeMismatch("composition of " + std::to_string(c.size()) + " for an element of size " + std::to_string(n));
    if (n > 3 || p > 5)
        throw BudgetExceeded("sweep oracle budget is n ≤ 3, p ≤ 5 (got n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
    const Reduced r = reduce(e, p);
    const std::vector<int> dims = prefix_dims(c);
    std::vector<std::size_t> block(n);
    for (std::size_t b = 0; b + 1 < dims.size(); ++b)
        for (int a = dims[b]; a < dims[b + 1]; ++a) block[static_cast<std::size_t>(a)] = b;
    const auto vec_end = static_cast<std::size_t>(dims[static_cast<std::size_t>(c.marked)]);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= p;

    auto witnesses = [&](std::uint64_t index) {
        SmallMat g(n * n), gi;
        for (std::size_t i = 0; i < n * n; ++i, index /= p) g[i] = static_cast<std::uint32_t>(index % p);
        if (!invert_mod(g, n, p, gi)) return false;
        for (std::size_t a = vec_end; a < n; ++a) {
            std::uint32_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s += g[a * n + j] * r.v[j];
            if (s % p) return false;
        }
        SmallMat gx(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t s = 0;
                for (std::size_t t = 0; t < n; ++t) s += g[a * n + t] * r.x[t][j];
                gx[a * n + j] = s % p;
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (block[a] < block[b]) continue;
                std::uint32_t s = 0;
                for (std::size_t t = 0; t < n; ++t) s += gx[a * n + t] * gi[t * n + b];
                if (s % p) return false;
            }
        return true;
    };

    if (exec == Execution::serial) {
        for (std::uint64_t t = 0; t < total; ++t)
            if (witnesses(t)) return true;
        return false;
    }
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 512)
    for (std::uint64_t t = 0; t < total; ++t) {
        if (found.load(std::memory_order_relaxed)) continue;
        if (witnesses(t)) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

bool closure_oracle_flag(const Bipartition& small, const Bipartition& big, std::uint32_t p, Execution exec) {
    if (small.n() != big.n()) throw SizeMismatch("oracle pair of sizes " + std::to_string(small.n()) + " and " + std::to_string(big.n()));
    check_prime(p);
    return flag_witness_exists(build_representative(small, Field::prime(p)), rigid_datum(big).composition, p, exec);
}

bool closure_oracle_sweep(const Bipartition& small, const Bipartition& big, std::uint32_t p, Execution exec) {
    if (small.n() != big.n()) throw SizeMismatch("oracle pair of sizes " + std::to_string(small.n()) + " and " + std::to_string(big.n()));
    check_prime(p);
    return sweep_witness_exists(build_representative(small, Field::prime(p)), rigid_datum(big).composition, p, exec);
}

Composition alternative_rigid_ordering(const Bipartition& b) {
    const Composition c = rigid_datum(b).composition;
    std::vector<int> parts = c.parts;
    std::reverse(parts.begin(), parts.begin() + c.marked);
    std::reverse(parts.begin() + c.marked, parts.end());
    return Composition(std::move(parts), c.marked);
}

GateReport closure_gate(int n, std::uint32_t p, bool with_sweep, Execution exec) {
    check_prime(p);
    const std::vector<Bipartition> orbits = enumerate_bipartitions(n);
    const std::size_t m = orbits.size();
    GateReport report;
    report.n = n;
    report.p = p;
    report.pairs = m * m;
    report.swept = with_sweep;

    std::vector<EnhancedElement> reps;
    for (const auto& b : orbits) reps.push_back(build_representative(b, Field::prime(p)));
    std::vector<Composition> datum, alt;
    for (const auto& b : orbits) {
        datum.push_back(rigid_datum(b).composition);
        alt.push_back(alternative_rigid_ordering(b));
    }

    std::vector<int> status(m * m, 0);  // 1 = mismatch
    std::vector<GateMismatch> found(m * m);
    auto check = [&](std::size_t idx) {
        const std::size_t a = idx / m, b = idx % m;
        GateMismatch g{orbits[a], orbits[b]};
        g.rule = closure_leq(orbits[a], orbits[b]);
        g.flag = flag_witness_exists(reps[a], datum[b], p);
        g.flag_alternative = flag_witness_exists(reps[a], alt[b], p);
        bool bad = g.rule != g.flag || g.flag != g.flag_alternative;
        if (with_sweep) {
            g.sweep = sweep_witness_exists(reps[a], datum[b], p) ? 1 : 0;
            bad = bad || (g.sweep == 1) != g.flag;
        }
        if (bad) {
            status[idx] = 1;
            found[idx] = std::move(g);
        }
    };

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t idx = 0; idx < m * m; ++idx) check(idx);
    } else {
        for (std::size_t idx = 0; idx < m * m; ++idx) check(idx);
    }
    for (std::size_t idx = 0; idx < m * m; ++idx)
        if (status[idx]) report.mismatches.push_back(std::move(found[idx]));
    return report;
}

}  // namespace nilcone
