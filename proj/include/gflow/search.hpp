#pragma once

#include <future>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gflow/group.hpp"

namespace gflow {

// ---------------------------------------------------------------------------
// Value domains for the zero-sum solver.
// ---------------------------------------------------------------------------

// Precomputed arithmetic over element indices of a finite abelian group plus
// an alphabet membership mask.
struct GroupTables {
    int order = 0;
    std::vector<int> add;     // order x order
    std::vector<int> neg;     // order
    std::vector<char> member; // order

    GroupTables(const FiniteAbelianGroup& g, const std::vector<GroupElement>& alphabet) {
        if (g.order() > 1024) throw Error("group too large for search tables: " + g.label());
        order = static_cast<int>(g.order());
        add.resize(static_cast<size_t>(order) * order);
        neg.resize(order);
        member.assign(order, 0);
        for (int i = 0; i < order; ++i) {
            GroupElement a = g.element_at(i);
            neg[i] = static_cast<int>(g.index_of(g.neg(a)));
            for (int j = 0; j < order; ++j)
                add[static_cast<size_t>(i) * order + j] =
                    static_cast<int>(g.index_of(g.add(a, g.element_at(j))));
        }
        for (const auto& e : alphabet) member[g.index_of(e)] = 1;
    }
};

struct GroupIndexOps {
    using value_t = int;
    std::shared_ptr<const GroupTables> t;

    value_t zero() const { return 0; }
    value_t add(value_t a, value_t b) const { return t->add[static_cast<size_t>(a) * t->order + b]; }
    value_t neg(value_t a) const { return t->neg[a]; }
    bool is_zero(value_t a) const { return a == 0; }
    bool member(value_t a) const { return t->member[a] != 0; }
    bool equal(value_t a, value_t b) const { return a == b; }
};

// Integer arithmetic for k-flow search; sums stay in Z and are never reduced.
struct IntegerOps {
    using value_t = long long;
    int k = 0;

    value_t zero() const { return 0; }
    value_t add(value_t a, value_t b) const { return a + b; }
    value_t neg(value_t a) const { return -a; }
    bool is_zero(value_t a) const { return a == 0; }
    bool member(value_t a) const { return a != 0 && a >= -(k - 1) && a <= k - 1; }
    bool equal(value_t a, value_t b) const { return a == b; }
};

// Exact arithmetic in Z[w], w a primitive cube root of unity (w^2 = -1 - w).
// Used for symbolic unit-circle flow classes.
struct Eisenstein {
    int a = 0, b = 0;  // a + b*w
    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
};

struct EisensteinOps {
    using value_t = Eisenstein;
    std::shared_ptr<const std::vector<Eisenstein>> allowed;

    value_t zero() const { return {0, 0}; }
    value_t add(value_t x, value_t y) const { return {x.a + y.a, x.b + y.b}; }
    value_t neg(value_t x) const { return {-x.a, -x.b}; }
    bool is_zero(value_t x) const { return x.a == 0 && x.b == 0; }
    bool member(value_t x) const {
        for (const auto& v : *allowed)
            if (v == x) return true;
        return false;
    }
    bool equal(value_t x, value_t y) const { return x == y; }
};

// ---------------------------------------------------------------------------
// Zero-sum constraint problem: every constraint demands that the signed sum
// of its variables vanish. Variables range over a finite ordered domain.
// ---------------------------------------------------------------------------

template <class Ops>
struct ZeroSumProblem {
    using value_t = typename Ops::value_t;

    struct Constraint {
        std::vector<std::pair<int, int>> terms;  // (variable, sign +1/-1), no variable repeated
    };

    Ops ops;
    int num_vars = 0;
    std::vector<value_t> domain;                     // branch order = alphabet construction order
    std::vector<std::pair<int, value_t>> fixed;      // pre-assigned variables
    std::vector<Constraint> constraints;
};

// Depth-first search with unit propagation: whenever a constraint has one
// unassigned variable left, its value is forced. Variables branch in index
// order and values in domain order, so the first solution found is the
// lexicographically least one; propagation only ever assigns implied values
// and cannot change that.
template <class Ops>
class ZeroSumSolver {
public:
    using value_t = typename Ops::value_t;

    explicit ZeroSumSolver(const ZeroSumProblem<Ops>& p)
        : ops_(p.ops), num_vars_(p.num_vars), domain_(p.domain) {
        val_.assign(num_vars_, ops_.zero());
        assigned_.assign(num_vars_, 0);
        var_cons_.assign(num_vars_, {});
        for (const auto& c : p.constraints) {
            if (c.terms.empty()) continue;
            int ci = static_cast<int>(cons_.size());
            cons_.push_back(c.terms);
            acc_.push_back(ops_.zero());
            remaining_.push_back(static_cast<int>(c.terms.size()));
            for (auto [var, sign] : c.terms) var_cons_[var].push_back({ci, sign});
        }
        fixed_ = p.fixed;
    }

    // Lexicographically first solution, or absent. threads > 1 splits the
    // branches of the first free variable across async workers; results are
    // joined in value order, so the answer matches the sequential search.
    std::optional<std::vector<value_t>> first(int threads = 1) {
        pending_.clear();
        for (auto& [var, v] : fixed_)
            if (!do_assign(var, v) || !propagate()) return std::nullopt;
        int var = next_unassigned();
        if (var < 0) {
            for (int c = 0; c < static_cast<int>(cons_.size()); ++c)
                if (!ops_.is_zero(acc_[c])) return std::nullopt;
            return snapshot();
        }
        if (threads > 1 && !domain_.empty()) {
            std::vector<std::future<std::optional<std::vector<value_t>>>> futs;
            futs.reserve(domain_.size());
            for (const value_t& v : domain_) {
                ZeroSumSolver branch(*this);
                futs.push_back(std::async(
                    std::launch::async,
                    [b = std::move(branch), var, v]() mutable -> std::optional<std::vector<value_t>> {
                        b.pending_.clear();
                        size_t mark = b.trail_.size();
                        if (!b.do_assign(var, v) || !b.propagate()) {
                            b.undo_to(mark);
                            return std::nullopt;
                        }
                        std::vector<value_t> out;
                        if (b.search_first(out)) return out;
                        return std::nullopt;
                    }));
            }
            for (auto& f : futs) {
                auto r = f.get();
                if (r) return r;
            }
            return std::nullopt;
        }
        std::vector<value_t> out;
        if (search_first(out)) return out;
        return std::nullopt;
    }

    // Exhaustive solution count; order independent.
    unsigned long long count() {
        pending_.clear();
        for (auto& [var, v] : fixed_)
            if (!do_assign(var, v) || !propagate()) return 0;
        if (next_unassigned() < 0) {
            for (int c = 0; c < static_cast<int>(cons_.size()); ++c)
                if (!ops_.is_zero(acc_[c])) return 0;
            return 1;
        }
        return search_count();
    }

private:
    Ops ops_;
    int num_vars_;
    std::vector<value_t> domain_;
    std::vector<std::pair<int, value_t>> fixed_;

    std::vector<std::vector<std::pair<int, int>>> cons_;  // constraint -> (var, sign)
    std::vector<value_t> acc_;
    std::vector<int> remaining_;
    std::vector<std::vector<std::pair<int, int>>> var_cons_;  // var -> (constraint, sign)
    std::vector<value_t> val_;
    std::vector<char> assigned_;
    std::vector<int> trail_;
    std::vector<std::pair<int, value_t>> pending_;

    std::vector<value_t> snapshot() const { return val_; }

    int next_unassigned() const {
        for (int v = 0; v < num_vars_; ++v)
            if (!assigned_[v]) return v;
        return -1;
    }

    bool do_assign(int var, value_t v) {
        if (assigned_[var]) return ops_.equal(val_[var], v);
        if (!ops_.member(v)) return false;
        assigned_[var] = 1;
        val_[var] = v;
        trail_.push_back(var);
        // apply every constraint update even after a violation, so that
        // undo_to can reverse them symmetrically
        bool ok = true;
        for (auto [c, sign] : var_cons_[var]) {
            acc_[c] = ops_.add(acc_[c], sign > 0 ? v : ops_.neg(v));
            if (--remaining_[c] == 0) {
                if (!ops_.is_zero(acc_[c])) ok = false;
            } else if (ok && remaining_[c] == 1) {
                int u = -1, usign = 0;
                for (auto [tv, ts] : cons_[c])
                    if (!assigned_[tv]) {
                        u = tv;
                        usign = ts;
                        break;
                    }
                if (u >= 0) {
                    value_t f = usign > 0 ? ops_.neg(acc_[c]) : acc_[c];
                    pending_.push_back({u, f});
                }
            }
        }
        return ok;
    }

    bool propagate() {
        while (!pending_.empty()) {
            auto [var, v] = pending_.back();
            pending_.pop_back();
            if (!do_assign(var, v)) {
                pending_.clear();
                return false;
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int var = trail_.back();
            trail_.pop_back();
            for (auto [c, sign] : var_cons_[var]) {
                acc_[c] = ops_.add(acc_[c], sign > 0 ? ops_.neg(val_[var]) : val_[var]);
                ++remaining_[c];
            }
            assigned_[var] = 0;
        }
    }

    bool search_first(std::vector<value_t>& out) {
        int var = next_unassigned();
        if (var < 0) {
            out = snapshot();
            return true;
        }
        for (const value_t& v : domain_) {
            size_t mark = trail_.size();
            pending_.clear();
            if (do_assign(var, v) && propagate() && search_first(out)) return true;
            undo_to(mark);
        }
        return false;
    }

    unsigned long long search_count() {
        int var = next_unassigned();
        if (var < 0) return 1;
        unsigned long long total = 0;
        for (const value_t& v : domain_) {
            size_t mark = trail_.size();
            pending_.clear();
            if (do_assign(var, v) && propagate()) total += search_count();
            undo_to(mark);
        }
        return total;
    }
};

template <class Ops>
std::optional<std::vector<typename Ops::value_t>> zero_sum_first(const ZeroSumProblem<Ops>& p,
                                                                 int threads = 1) {
    ZeroSumSolver<Ops> s(p);
    return s.first(threads);
}

template <class Ops>
unsigned long long zero_sum_count(const ZeroSumProblem<Ops>& p) {
    ZeroSumSolver<Ops> s(p);
    return s.count();
}

}  // namespace gflow
