#include "nilcone/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include <json.hpp>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body with a fresh group and stores its timing.
void timed_group(VerifyReport& r, const std::string& name, const std::function<void(CheckGroup&)>& body) {
    CheckGroup g;
    g.name = name;
    const auto t0 = Clock::now();
    body(g);
    g.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r.groups.push_back(std::move(g));
}

void finish(VerifyReport& r, Clock::time_point t0) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_budget(bool ok, const std::string& what) {
    if (!ok) throw BudgetExceeded(what);
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition({}, 0)};
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1U << i))
                parts.push_back(1);
            else
                ++parts.back();
        }
        out.emplace_back(std::move(parts), 0);
    }
    return out;
}

// Calls visit for every choice of one bipartition per part.
void for_each_datum(const Composition& c, const std::function<void(const InductionDatum&)>& visit) {
    std::vector<std::vector<Bipartition>> pools;
    for (int part : c.parts) pools.push_back(enumerate_bipartitions(part));
    std::vector<Bipartition> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pools.size()) {
            visit(InductionDatum(c, cur));
            return;
        }
        for (const auto& b : pools[i]) {
            cur.push_back(b);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::string describe(const InductionDatum& d) {
    std::string s;
    for (const auto& b : d.per_block) s += (s.empty() ? "" : "|") + b.to_string();
    return s;
}

Matrix random_int_matrix(std::mt19937_64& rng, const Field& f, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(f, dist(rng));
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, const Field& f, std::size_t n) {
    while (true) {
        Matrix g = random_int_matrix(rng, f, n, -2, 2);
        if (!determinant(g).is_zero()) return g;
    }
}

bool all_zero(const InvariantVector& c) {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace

void CheckGroup::record(bool pass, const std::string& detail) {
    ++checks;
    if (!pass) {
        ++failures;
        if (examples.size() < 20) examples.push_back(detail);
    }
}

std::size_t VerifyReport::checks() const {
    std::size_t t = 0;
    for (const auto& g : groups) t += g.checks;
    return t;
}

std::size_t VerifyReport::failures() const {
    std::size_t t = 0;
    for (const auto& g : groups) t += g.failures;
    return t;
}

std::string VerifyReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n"] = n;
    if (p) j["p"] = p;
    if (suite == "quotient") j["seed"] = seed;
    j["status"] = ok() ? "pass" : "fail";
    j["checks"] = checks();
    j["failures"] = failures();
    j["elapsed_ms"] = elapsed_ms;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto& g : groups)
        j["groups"].push_back({{"name", g.name},
                               {"status", g.failures ? "fail" : "pass"},
                               {"checks", g.checks},
                               {"failures", g.failures},
                               {"elapsed_ms", g.elapsed_ms},
                               {"examples", g.examples}});
    return j.dump(indent);
}

EnhancedElement jkv_example_element(long a, long b) {
    const Field q = Field::rationals();
    return {Vector::from_ints(q, {1, 1}), Matrix::from_ints(q, {{a, 1}, {0, b}})};
}

JkvAxioms check_jkv_axioms(const EnhancedElement& e, const Matrix& s, const std::vector<int>& weights) {
    JkvAxioms ax;
    const ClassLabel c = identify_class(EnhancedElement(Vector(e.field(), e.n()), s));
    ax.semisimple = true;
    for (const auto& b : c.blocks) ax.semisimple = ax.semisimple && b == Bipartition{{}, Partition::column(b.n())};

    bool in_centralizer = weights.size() == e.n();
    for (std::size_t i = 0; in_centralizer && i < e.n(); ++i)
        for (std::size_t j = 0; j < e.n(); ++j)
            if (weights[i] != weights[j] && !s(i, j).is_zero()) in_centralizer = false;
    if (in_centralizer) {
        const auto lim = limit_along_cocharacter(weights, e.v, e.x - s);
        ax.nilpotent = lim && lim->first.is_zero() && lim->second.is_zero();
    }

    ax.stabilizer = true;
    for (const auto& a : stabilizer_basis_gl(e.v, e.x)) ax.stabilizer = ax.stabilizer && a * s == s * a;
    return ax;
}

VerifyReport verify_doubling(int n) {
    check_budget(n >= 0 && n <= 5, "doubling suite budget is n ≤ 5");
    const auto t0 = Clock::now();
    VerifyReport r{"doubling", n};
    struct Row {
        Bipartition b;
        long enh, exo, gl2n;
        bool labels;
    };
    std::vector<Row> rows;
    for (const auto& b : enumerate_bipartitions(n)) {
        const EnhancedElement e = build_representative(b);
        const ExoticElement ex = embed_phi(e);
        const EnhancedElement big = embed_psi(ex);
        rows.push_back({b, static_cast<long>(n) * n - static_cast<long>(stabilizer_dim_gl(e.v, e.x)),
                        exotic_orbit_dim_of(ex), 4L * n * n - static_cast<long>(stabilizer_dim_gl(big.v, big.x)),
                        identify_exotic_orbit(ex) == b && identify_orbit(big) == double_bipartition(b)});
    }
    auto detail = [](const Row& w) {
        return w.b.to_string() + ": enhanced " + std::to_string(w.enh) + ", exotic " + std::to_string(w.exo) +
               ", GL_2n " + std::to_string(w.gl2n) + ", formula " + std::to_string(orbit_dim(w.b));
    };
    timed_group(r, "enhanced = formula", [&](CheckGroup& g) {
        for (const auto& w : rows) g.record(w.enh == orbit_dim(w.b), detail(w));
    });
    timed_group(r, "exotic = 2 × enhanced", [&](CheckGroup& g) {
        for (const auto& w : rows) g.record(w.exo == 2 * w.enh && w.exo == exotic_orbit_dim(w.b), detail(w));
    });
    timed_group(r, "labels double", [&](CheckGroup& g) {
        for (const auto& w : rows) g.record(w.labels, detail(w));
    });
    timed_group(r, "GL_2n = formula on the doubled label", [&](CheckGroup& g) {
        for (const auto& w : rows) g.record(w.gl2n == orbit_dim(double_bipartition(w.b)), detail(w));
    });
    timed_group(r, "GL_2n = 4 × enhanced", [&](CheckGroup& g) {
        for (const auto& w : rows) g.record(w.gl2n == 4 * w.enh, detail(w));
    });
    finish(r, t0);
    return r;
}

VerifyReport verify_closure(int n, std::uint32_t p, Execution exec) {
    check_budget(n >= 0 && n <= 4, "closure suite budget is n ≤ 4");
    const auto t0 = Clock::now();
    VerifyReport r{"closure", n, p};
    timed_group(r, n <= 3 ? "rule vs flag vs sweep" : "rule vs flag", [&](CheckGroup& g) {
        const GateReport gate = closure_gate(n, p, n <= 3, exec);
        std::set<std::pair<std::string, std::string>> bad;
        for (const auto& m : gate.mismatches) {
            bad.emplace(m.small.to_string(), m.big.to_string());
            g.record(false, m.small.to_string() + " ≤ " + m.big.to_string() + ": rule " + std::to_string(m.rule) +
                                ", flag " + std::to_string(m.flag) + ", alternative " +
                                std::to_string(m.flag_alternative) + ", sweep " + std::to_string(m.sweep));
        }
        for (std::size_t i = bad.size(); i < gate.pairs; ++i) g.record(true);
    });
    finish(r, t0);
    return r;
}

VerifyReport verify_induction(int n) {
    check_budget(n >= 0 && n <= 8, "induction suite budget is n ≤ 8");
    const auto t0 = Clock::now();
    VerifyReport r{"induction", n};
    timed_group(r, "codimension preserved", [&](CheckGroup& g) {
        for (int m = 1; m <= std::min(n, 6); ++m)
            for (const auto& c : compositions_of(m))
                for_each_datum(c, [&](const InductionDatum& d) {
                    long codim_l = m;
                    for (std::size_t i = 0; i < d.per_block.size(); ++i)
                        codim_l += static_cast<long>(c.parts[i]) * c.parts[i] - orbit_dim(d.per_block[i]);
                    g.record(orbit_codim(induce(d)) == codim_l, describe(d));
                });
    });
    timed_group(r, "transitivity", [&](CheckGroup& g) {
        for (int m = 1; m <= std::min(n, 6); ++m)
            for (const auto& c : compositions_of(m)) {
                const std::size_t r_ = c.parts.size();
                for (unsigned cut = 0; cut < (1U << (r_ ? r_ - 1 : 0)); ++cut)
                    for_each_datum(c, [&](const InductionDatum& d) {
                        // Induce inside each group of consecutive blocks, then across the groups.
                        std::vector<Bipartition> stage;
                        std::vector<Bipartition> group;
                        for (std::size_t i = 0; i < r_; ++i) {
                            group.push_back(d.per_block[i]);
                            if (i + 1 == r_ || (cut & (1U << i))) {
                                stage.push_back(induce(InductionDatum::from_blocks(group)));
                                group.clear();
                            }
                        }
                        g.record(induce(InductionDatum::from_blocks(stage)) == induce(d), describe(d));
                    });
            }
    });
    timed_group(r, "representatives", [&](CheckGroup& g) {
        for (int m = 1; m <= std::min(n, 4); ++m)
            for (const auto& c : compositions_of(m))
                for_each_datum(c, [&](const InductionDatum& d) {
                    g.record(identify_orbit(induction_representative(d)) == induce(d), describe(d));
                });
    });
    timed_group(r, "column rule", [&](CheckGroup& g) {
        for (int m = 1; m <= std::min(n, 5); ++m)
            for (const auto& c : compositions_of(m))
                for (int k = 0; k <= static_cast<int>(c.parts.size()); ++k) {
                    const Composition marked(c.parts, k);
                    const Bipartition expected = induce_from_vector(InductionDatum::rigid(marked));
                    g.record(identify_orbit(column_rule_representative(marked)) == expected &&
                                 induce(InductionDatum::rigid(marked)) == expected,
                             marked.to_string());
                }
    });
    timed_group(r, "rigidity", [&](CheckGroup& g) {
        for (int m = 1; m <= n; ++m) {
            std::set<Bipartition> induced;
            for (int a = 1; a < m; ++a)
                for (const auto& b1 : enumerate_bipartitions(a))
                    for (const auto& b2 : enumerate_bipartitions(m - a))
                        induced.insert(induce(InductionDatum::from_blocks({b1, b2})));
            std::size_t rigid = 0;
            bool agree = true;
            for (const auto& b : enumerate_bipartitions(m)) {
                const bool is_r = !induced.count(b);
                rigid += is_r;
                agree = agree && is_r == is_rigid(b);
                g.record(induce_from_vector(rigid_datum(b)) == b, "rigid datum of " + b.to_string());
            }
            g.record(rigid == 2 && agree, "n=" + std::to_string(m) + ": " + std::to_string(rigid) + " rigid orbits");
        }
    });
    finish(r, t0);
    return r;
}

VerifyReport verify_classes(int n) {
    check_budget(n >= 0 && n <= 6, "classes suite budget is n ≤ 6");
    const auto t0 = Clock::now();
    VerifyReport r{"classes", n};
    const auto classes = enumerate_classes(n);
    timed_group(r, "counts", [&](CheckGroup& g) {
        g.record(classes.size() == class_count(n), "classes " + std::to_string(classes.size()));
        g.record(enumerate_sheets(n).size() == sheet_count(n), "sheets");
        std::set<std::string> distinct;
        for (const auto& c : classes) distinct.insert(c.to_string());
        g.record(distinct.size() == classes.size(), "labels distinct");
    });
    timed_group(r, "dimensions", [&](CheckGroup& g) {
        for (const auto& c : classes) {
            const long l = static_cast<long>(c.lambda.length());
            g.record(class_dim_exotic(c) - l == 2 * (class_dim_enhanced(c) - l), c.to_string());
        }
    });
    timed_group(r, "identification", [&](CheckGroup& g) {
        for (const auto& c : classes) {
            const EnhancedElement e = class_representative(c);
            const long stab = static_cast<long>(stabilizer_dim_gl(e.v, e.x));
            g.record(identify_class(e) == c && static_cast<long>(n) * n - stab == class_orbit_dim(c) &&
                         identify_class(embed_phi(e)) == c,
                     c.to_string());
        }
    });
    timed_group(r, "closure order", [&](CheckGroup& g) {
        const std::size_t m = classes.size();
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) leq[a][b] = class_closure_leq(classes[a], classes[b]);
        for (std::size_t a = 0; a < m; ++a) {
            g.record(leq[a][a], "reflexive " + classes[a].to_string());
            for (std::size_t b = 0; b < m; ++b) {
                if (!leq[a][b]) continue;
                g.record(a == b || !leq[b][a], "antisymmetric " + classes[a].to_string() + " " + classes[b].to_string());
                g.record(class_dim_enhanced(classes[a]) <= class_dim_enhanced(classes[b]),
                         "monotone " + classes[a].to_string() + " " + classes[b].to_string());
                if (n <= 4)
                    for (std::size_t c = 0; c < m; ++c)
                        if (leq[b][c]) g.record(leq[a][c], "transitive via " + classes[b].to_string());
            }
        }
    });
    timed_group(r, "sheets maximal", [&](CheckGroup& g) {
        const MaximalityReport mr = sheets_maximality(n);
        for (const auto& c : mr.unexpected_maximal) g.record(false, "maximal but not a sheet: " + c.to_string());
        for (const auto& c : mr.sheets_not_maximal) g.record(false, "sheet not maximal: " + c.to_string());
        g.record(mr.ok(), "n=" + std::to_string(n));
    });
    finish(r, t0);
    return r;
}

VerifyReport verify_quotient(int n, std::uint64_t seed) {
    check_budget(n >= 1 && n <= 6, "quotient suite budget is 1 ≤ n ≤ 6");
    const auto t0 = Clock::now();
    VerifyReport r{"quotient", n, 0, seed};
    std::mt19937_64 rng(seed);
    const Field q = Field::rationals();
    const auto un = static_cast<std::size_t>(n);
    std::vector<EnhancedElement> samples;
    for (int i = 0; i < 200; ++i) {
        Vector v(q, un);
        for (std::size_t j = 0; j < un; ++j) v[j] = Scalar(q, std::uniform_int_distribution<int>(-3, 3)(rng));
        samples.emplace_back(std::move(v), random_int_matrix(rng, q, un, -3, 3));
    }
    timed_group(r, "exotic ∘ φ = enhanced", [&](CheckGroup& g) {
        for (const auto& e : samples) g.record(exotic_invariants(embed_phi(e)) == enhanced_invariants(e), "sample");
    });
    timed_group(r, "zero invariants ⟺ nilpotent", [&](CheckGroup& g) {
        for (const auto& e : samples) g.record(all_zero(enhanced_invariants(e)) == e.x.pow(un).is_zero(), "sample");
        for (const auto& b : enumerate_bipartitions(n)) {
            const EnhancedElement rep = build_representative(b);
            const Matrix h = random_invertible(rng, q, un);
            const EnhancedElement conj(h * rep.v, h * rep.x * inverse(h));
            g.record(all_zero(enhanced_invariants(conj)) && all_zero(exotic_invariants(embed_phi(conj))), b.to_string());
        }
    });
    timed_group(r, "conjugation invariance", [&](CheckGroup& g) {
        for (const auto& e : samples) {
            const InvariantVector base = enhanced_invariants(e);
            for (int t = 0; t < 20; ++t) {
                const Matrix h = random_invertible(rng, q, un);
                const EnhancedElement conj(h * e.v, h * e.x * inverse(h));
                g.record(enhanced_invariants(conj) == base && same_fiber(AnyElement(e), AnyElement(conj)), "sample");
            }
        }
    });
    finish(r, t0);
    return r;
}

VerifyReport verify_jkv() {
    const auto t0 = Clock::now();
    VerifyReport r{"jkv", 2};
    const Field q = Field::rationals();
    // b − a = 1 is excluded: then v is an eigenvector of x and its stabilizer is not inside G^s.
    for (const auto& [a, b] : {std::pair<long, long>{1, 3}, std::pair<long, long>{-2, 5}}) {
        const EnhancedElement e = jkv_example_element(a, b);
        timed_group(r, "decompositions a=" + std::to_string(a) + " b=" + std::to_string(b), [&](CheckGroup& g) {
            const auto [ss, nil] = jkv_decompose(e);
            g.record(check_jkv_axioms(e, ss.x, {1, 1}).all(), "Jordan–Chevalley split with weights (1,1)");
            const Matrix s = Matrix::diagonal({Scalar(q, a), Scalar(q, b)});
            g.record(check_jkv_axioms(e, s, {2, 1}).all(), "s = diag(a, b) with weights (2,1)");
            g.record(!(ss.x == s), "the two semisimple parts differ");
        });
    }
    finish(r, t0);
    return r;
}

}  // namespace nilcone
