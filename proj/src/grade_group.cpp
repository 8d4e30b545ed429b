#include "graded/grade_group.hpp"

#include "graded/errors.hpp"

namespace graded {

GradeGroup::GradeGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    strides_.reserve(orders_.size());
    for (int n : orders_) {
        if (n < 1) throw spec_error("grade group factor order must be >= 1");
        strides_.push_back(size_);
        if (size_ > (1 << 20) / n) throw cap_error("grade group too large");
        size_ *= n;
    }
}

int GradeGroup::add(int a, int b) const {
    int out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int ra = (a / strides_[i]) % orders_[i];
        int rb = (b / strides_[i]) % orders_[i];
        out += ((ra + rb) % orders_[i]) * strides_[i];
    }
    return out;
}

int GradeGroup::neg(int a) const {
    int out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int ra = (a / strides_[i]) % orders_[i];
        out += ((orders_[i] - ra) % orders_[i]) * strides_[i];
    }
    return out;
}

int GradeGroup::scale(long long k, int g) const {
    int out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int rg = (g / strides_[i]) % orders_[i];
        long long r = (k * rg) % orders_[i];
        if (r < 0) r += orders_[i];
        out += static_cast<int>(r) * strides_[i];
    }
    return out;
}

std::vector<int> GradeGroup::residues(int g) const {
    std::vector<int> out(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        out[i] = (g / strides_[i]) % orders_[i];
    return out;
}

int GradeGroup::from_residues(const std::vector<int>& r) const {
    if (r.size() != orders_.size())
        throw spec_error("grade residue tuple has wrong arity");
    int out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int ri = r[i] % orders_[i];
        if (ri < 0) ri += orders_[i];
        out += ri * strides_[i];
    }
    return out;
}

std::string GradeGroup::to_string() const {
    if (orders_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(orders_[i]);
    }
    return s;
}

} // namespace graded
