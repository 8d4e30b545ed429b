#pragma once

#include <string>
#include <vector>

namespace graded {

/// Finite abelian grading group, a direct product of cyclic groups.
/// Group elements are identified with integers 0..size()-1 through a
/// mixed-radix encoding of their residue tuples; the identity is 0.
class GradeGroup {
public:
    /// Orders of the cyclic factors, each >= 1.  An empty list is the
    /// trivial group.
    explicit GradeGroup(std::vector<int> cyclic_orders);

    static GradeGroup trivial() { return GradeGroup(std::vector<int>{}); }
    static GradeGroup cyclic(int n) { return GradeGroup(std::vector<int>{n}); }

    int size() const { return size_; }
    int identity() const { return 0; }

    int add(int a, int b) const;
    int neg(int a) const;
    /// k-fold sum of g (k may be negative or zero).
    int scale(long long k, int g) const;

    std::vector<int> residues(int g) const;
    int from_residues(const std::vector<int>& r) const;

    const std::vector<int>& orders() const { return orders_; }

    bool operator==(const GradeGroup& o) const { return orders_ == o.orders_; }

    std::string to_string() const;

private:
    std::vector<int> orders_;
    std::vector<int> strides_;
    int size_ = 1;
};

} // namespace graded
