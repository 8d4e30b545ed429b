#include "graded/mult_set.hpp"

#include <deque>

#include "graded/errors.hpp"

namespace graded {

MultSet::MultSet(RingPtr ring, DenseSet set, std::vector<Index> gens)
    : ring_(std::move(ring)), set_(std::move(set)), gens_(std::move(gens)) {
    sorted_ = set_.elements();
}

MultSet MultSet::closure(RingPtr ring, const std::vector<Index>& gens) {
    for (Index g : gens) {
        if (!ring->is_homogeneous(g))
            throw precondition_error("multiplicative set generator is not homogeneous");
    }
    DenseSet set(ring->order());
    set.insert(ring->one());
    std::deque<Index> work{ring->one()};
    while (!work.empty()) {
        Index x = work.front();
        work.pop_front();
        for (Index g : gens) {
            Index y = ring->mul(x, g);
            if (y == ring->zero())
                throw precondition_error("multiplicative closure reaches 0");
            if (!set.contains(y)) {
                set.insert(y);
                work.push_back(y);
            }
        }
    }
    return MultSet(std::move(ring), std::move(set), gens);
}

MultSet MultSet::from_elements(RingPtr ring, const DenseSet& elems) {
    if (elems.contains(ring->zero()))
        throw precondition_error("multiplicative set contains 0");
    if (!elems.contains(ring->one()))
        throw precondition_error("multiplicative set misses 1");
    std::vector<Index> members = elems.elements();
    for (Index x : members) {
        if (!ring->is_homogeneous(x))
            throw precondition_error("multiplicative set member is not homogeneous");
        for (Index y : members)
            if (!elems.contains(ring->mul(x, y)))
                throw precondition_error("set not closed under multiplication");
    }
    return MultSet(std::move(ring), elems, members);
}

bool MultSet::in_identity_component() const {
    const int e = ring_->grade_group().identity();
    for (Index x : sorted_)
        if (!ring_->component_set(e).contains(x)) return false;
    return true;
}

bool MultSet::all_units() const {
    for (Index x : sorted_)
        if (!ring_->is_unit(x)) return false;
    return true;
}

bool MultSet::all_regular() const {
    for (Index x : sorted_)
        if (!ring_->is_regular(x)) return false;
    return true;
}

} // namespace graded
