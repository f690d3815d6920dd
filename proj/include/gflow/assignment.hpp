#pragma once

#include <string>
#include <vector>

#include "gflow/group.hpp"
#include "gflow/multigraph.hpp"

namespace gflow {

// A total map from edges to values, stored on the canonical orientation
// (tail = endpoint earlier in vertex input order). Reading an edge against
// its canonical orientation negates the value; antisymmetry is definitional
// rather than stored. Values are either elements of one finite abelian group
// or plain integers (the k-flow value domain).
class EdgeAssignment {
public:
    static EdgeAssignment group_valued(const FiniteAbelianGroup& g, std::vector<GroupElement> values) {
        EdgeAssignment a;
        a.integer_domain_ = false;
        a.group_ = g;
        for (auto& v : values) g.check(v);
        a.gvalues_ = std::move(values);
        return a;
    }

    static EdgeAssignment integer_valued(int k, std::vector<long long> values) {
        EdgeAssignment a;
        a.integer_domain_ = true;
        a.k_ = k;
        a.ivalues_ = std::move(values);
        return a;
    }

    bool integer_domain() const { return integer_domain_; }
    const FiniteAbelianGroup& group() const {
        if (integer_domain_) throw Error("integer-valued assignment has no group");
        return group_;
    }
    int k() const { return k_; }

    int size() const {
        return static_cast<int>(integer_domain_ ? ivalues_.size() : gvalues_.size());
    }

    const std::vector<GroupElement>& group_values() const { return gvalues_; }
    const std::vector<long long>& integer_values() const { return ivalues_; }

    const GroupElement& gvalue(int e) const { return gvalues_.at(e); }
    long long ivalue(int e) const { return ivalues_.at(e); }

    void set_gvalue(int e, GroupElement v) {
        if (integer_domain_) throw Error("integer-valued assignment has no group values");
        group_.check(v);
        gvalues_.at(e) = std::move(v);
    }

    // Value of edge e as seen entering vertex v (group domain).
    GroupElement gvalue_into(const Multigraph& g, int e, int v) const {
        const GroupElement& x = gvalues_.at(e);
        return g.canonical_head(e) == v ? x : group_.neg(x);
    }

    long long ivalue_into(const Multigraph& g, int e, int v) const {
        long long x = ivalues_.at(e);
        return g.canonical_head(e) == v ? x : -x;
    }

    bool operator==(const EdgeAssignment& o) const {
        return integer_domain_ == o.integer_domain_ && gvalues_ == o.gvalues_ && ivalues_ == o.ivalues_ &&
               k_ == o.k_ && (integer_domain_ || group_ == o.group_);
    }

private:
    bool integer_domain_ = false;
    FiniteAbelianGroup group_;
    int k_ = 0;
    std::vector<GroupElement> gvalues_;
    std::vector<long long> ivalues_;
};

}  // namespace gflow
