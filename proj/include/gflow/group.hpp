#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gflow/multigraph.hpp"

namespace gflow {

// Element of a finite abelian group presented as a direct sum of cyclic
// groups: one residue per modulus.
struct GroupElement {
    std::vector<int> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator!=(const GroupElement& o) const { return coords != o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }

    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }
};

// Direct sum of cyclic groups Z_{m_1} + ... + Z_{m_t}. The empty sum is the
// trivial group. Exact arithmetic throughout; elements are enumerable in
// ascending mixed-radix order with zero first.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : label_("Z1") {}

    explicit FiniteAbelianGroup(std::vector<int> moduli, std::string label = "")
        : moduli_(std::move(moduli)), label_(std::move(label)) {
        for (int m : moduli_)
            if (m < 2) throw Error("group modulus must be at least 2");
        if (label_.empty()) label_ = default_label(moduli_);
    }

    static FiniteAbelianGroup cyclic(int k, std::string label = "") {
        return FiniteAbelianGroup({k}, std::move(label));
    }

    // The k-th roots of unity form a cyclic group of order k; we carry them
    // as that abstract group under the label R<k>.
    static FiniteAbelianGroup roots_of_unity(int k) {
        return cyclic(k, "R" + std::to_string(k));
    }

    const std::vector<int>& moduli() const { return moduli_; }
    const std::string& label() const { return label_; }
    int rank() const { return static_cast<int>(moduli_.size()); }

    long long order() const {
        long long o = 1;
        for (int m : moduli_) o *= m;
        return o;
    }

    GroupElement zero() const { return GroupElement{std::vector<int>(moduli_.size(), 0)}; }

    GroupElement make(const std::vector<int>& coords) const {
        if (coords.size() != moduli_.size()) throw Error("element arity does not match group " + label_);
        GroupElement e{coords};
        for (size_t i = 0; i < coords.size(); ++i) {
            int m = moduli_[i];
            int c = coords[i] % m;
            if (c < 0) c += m;
            e.coords[i] = c;
        }
        return e;
    }

    void check(const GroupElement& a) const {
        if (a.coords.size() != moduli_.size()) throw Error("element does not belong to group " + label_);
        for (size_t i = 0; i < a.coords.size(); ++i)
            if (a.coords[i] < 0 || a.coords[i] >= moduli_[i])
                throw Error("element coordinate out of range for group " + label_);
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        check(a);
        check(b);
        GroupElement r = zero();
        for (size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
        return r;
    }

    GroupElement neg(const GroupElement& a) const {
        check(a);
        GroupElement r = zero();
        for (size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = a.coords[i] == 0 ? 0 : moduli_[i] - a.coords[i];
        return r;
    }

    template <class It>
    GroupElement sum(It first, It last) const {
        GroupElement acc = zero();
        for (; first != last; ++first) acc = add(acc, *first);
        return acc;
    }

    GroupElement sum(const std::vector<GroupElement>& xs) const { return sum(xs.begin(), xs.end()); }

    // Mixed-radix rank; zero has rank 0.
    long long index_of(const GroupElement& a) const {
        check(a);
        long long idx = 0;
        for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + a.coords[i];
        return idx;
    }

    GroupElement element_at(long long idx) const {
        GroupElement e = zero();
        for (size_t i = moduli_.size(); i-- > 0;) {
            e.coords[i] = static_cast<int>(idx % moduli_[i]);
            idx /= moduli_[i];
        }
        return e;
    }

    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<size_t>(order()));
        for (long long i = 0; i < order(); ++i) out.push_back(element_at(i));
        return out;
    }

    // Invariant factor decomposition d_1 | d_2 | ... | d_r; two groups are
    // isomorphic as abstract groups exactly when these match.
    std::vector<long long> invariant_factors() const {
        // primary decomposition: collect prime powers per prime
        std::map<long long, std::vector<long long>> primary;  // prime -> prime powers, descending later
        for (int m : moduli_) {
            long long rest = m;
            for (long long p = 2; p * p <= rest; ++p) {
                if (rest % p) continue;
                long long q = 1;
                while (rest % p == 0) {
                    rest /= p;
                    q *= p;
                }
                primary[p].push_back(q);
            }
            if (rest > 1) primary[rest].push_back(rest);
        }
        size_t slots = 0;
        for (auto& [p, qs] : primary) {
            std::sort(qs.begin(), qs.end(), std::greater<>());
            slots = std::max(slots, qs.size());
        }
        std::vector<long long> factors(slots, 1);
        for (auto& [p, qs] : primary)
            for (size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
        std::sort(factors.begin(), factors.end());
        return factors;
    }

    bool isomorphic_to(const FiniteAbelianGroup& o) const { return invariant_factors() == o.invariant_factors(); }

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

    static std::string default_label(const std::vector<int>& moduli) {
        if (moduli.empty()) return "Z1";
        std::string s;
        for (size_t i = 0; i < moduli.size(); ++i) {
            if (i) s += "x";
            s += "Z" + std::to_string(moduli[i]);
        }
        return s;
    }

private:
    std::vector<int> moduli_;
    std::string label_;
};

inline bool same_order(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.order() == b.order();
}

// Parses CLI group spec strings: "Z4", "Z2xZ2", "Z2xZ3", "R3".
inline FiniteAbelianGroup parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw Error("empty group spec");
    if (spec[0] == 'R') {
        int k = 0;
        try {
            k = std::stoi(spec.substr(1));
        } catch (...) {
            throw Error("bad group spec: " + spec);
        }
        if (k < 2) throw Error("bad group spec: " + spec);
        return FiniteAbelianGroup::roots_of_unity(k);
    }
    std::vector<int> moduli;
    size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z') throw Error("bad group spec: " + spec);
        size_t end = pos + 1;
        while (end < spec.size() && isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == pos + 1) throw Error("bad group spec: " + spec);
        int m = std::stoi(spec.substr(pos + 1, end - pos - 1));
        if (m < 1) throw Error("bad group spec: " + spec);
        if (m > 1) moduli.push_back(m);  // Z1 factors are trivial
        pos = end;
        if (pos < spec.size()) {
            if (spec[pos] != 'x') throw Error("bad group spec: " + spec);
            ++pos;
        }
    }
    return FiniteAbelianGroup(moduli, spec);
}

// The allowed edge values of a flow problem: either a finite subset of a
// finite abelian group, or the integer value set {-(k-1),...,-1,1,...,k-1}.
// Integer values deliberately live outside any FiniteAbelianGroup so that
// sums are taken in Z, not reduced.
class FlowAlphabet {
public:
    enum class Kind { group_subset, integer_k };

    static FlowAlphabet nonzero(const FiniteAbelianGroup& g) {
        FlowAlphabet a;
        a.kind_ = Kind::group_subset;
        a.group_ = g;
        for (long long i = 1; i < g.order(); ++i) a.elements_.push_back(g.element_at(i));
        if (a.elements_.empty()) throw Error("alphabet of nonzero elements is empty for trivial group");
        return a;
    }

    static FlowAlphabet of(const FiniteAbelianGroup& g, std::vector<GroupElement> elements) {
        if (elements.empty()) throw Error("flow alphabet must be nonempty");
        FlowAlphabet a;
        a.kind_ = Kind::group_subset;
        a.group_ = g;
        for (auto& e : elements) {
            g.check(e);
            if (std::find(a.elements_.begin(), a.elements_.end(), e) == a.elements_.end())
                a.elements_.push_back(e);
        }
        return a;
    }

    static FlowAlphabet k_flow(int k) {
        if (k < 2) throw Error("k-flow requires k >= 2");
        FlowAlphabet a;
        a.kind_ = Kind::integer_k;
        a.k_ = k;
        return a;
    }

    Kind kind() const { return kind_; }
    const FiniteAbelianGroup& group() const {
        if (kind_ != Kind::group_subset) throw Error("integer alphabet has no group");
        return group_;
    }
    const std::vector<GroupElement>& elements() const {
        if (kind_ != Kind::group_subset) throw Error("integer alphabet has no element list");
        return elements_;
    }
    int k() const {
        if (kind_ != Kind::integer_k) throw Error("group alphabet has no integer bound");
        return k_;
    }

    // The integer candidate values in branch order.
    std::vector<long long> integer_values() const {
        std::vector<long long> out;
        for (int v = -(k_ - 1); v <= k_ - 1; ++v)
            if (v != 0) out.push_back(v);
        return out;
    }

    bool contains(const GroupElement& e) const {
        return std::find(elements_.begin(), elements_.end(), e) != elements_.end();
    }

    bool contains_integer(long long v) const { return v != 0 && v >= -(k_ - 1) && v <= k_ - 1; }

    bool closed_under_negation() const {
        if (kind_ == Kind::integer_k) return true;
        for (const auto& e : elements_)
            if (!contains(group_.neg(e))) return false;
        return true;
    }

    // Zero excluded and every nonzero element present.
    bool non_elusive() const {
        if (kind_ == Kind::integer_k) return false;
        if (static_cast<long long>(elements_.size()) != group_.order() - 1) return false;
        for (const auto& e : elements_)
            if (e.is_zero()) return false;
        return true;
    }

    size_t size() const { return kind_ == Kind::integer_k ? 2 * (k_ - 1) : elements_.size(); }

    std::string describe() const {
        if (kind_ == Kind::integer_k) return "k-flow values, k=" + std::to_string(k_);
        if (non_elusive()) return "nonzero elements of " + group_.label();
        return std::to_string(elements_.size()) + " elements of " + group_.label();
    }

private:
    Kind kind_ = Kind::group_subset;
    FiniteAbelianGroup group_;
    std::vector<GroupElement> elements_;
    int k_ = 0;
};

inline FlowAlphabet alphabet_nonzero(const FiniteAbelianGroup& g) { return FlowAlphabet::nonzero(g); }
inline FlowAlphabet alphabet_k_flow(int k) { return FlowAlphabet::k_flow(k); }

}  // namespace gflow
