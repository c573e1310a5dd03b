// Graded vector spaces with ordered string-labeled bases, sparse elements,
// and degree-shifting linear maps.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainfk/field.hpp"

namespace ainfk {

struct GradedSpace {
    // degree -> ordered (lexicographic) basis labels
    std::map<int, std::vector<std::string>> degrees;

    void add_label(int degree, const std::string& label) {
        auto& v = degrees[degree];
        auto it = std::lower_bound(v.begin(), v.end(), label);
        if (it != v.end() && *it == label)
            throw std::invalid_argument("duplicate basis label: " + label);
        v.insert(it, label);
    }

    int dim(int degree) const {
        auto it = degrees.find(degree);
        return it == degrees.end() ? 0 : static_cast<int>(it->second.size());
    }

    int total_dim() const {
        int n = 0;
        for (auto& [d, v] : degrees) n += static_cast<int>(v.size());
        return n;
    }

    const std::string& label(int degree, int idx) const { return degrees.at(degree).at(idx); }

    int index_of(int degree, const std::string& label) const {
        auto it = degrees.find(degree);
        if (it == degrees.end()) return -1;
        auto jt = std::lower_bound(it->second.begin(), it->second.end(), label);
        if (jt == it->second.end() || *jt != label) return -1;
        return static_cast<int>(jt - it->second.begin());
    }

    bool operator==(const GradedSpace& o) const { return degrees == o.degrees; }
};

// Homogeneous sparse element of a graded space: (degree, index -> coefficient).
struct Element {
    int degree = 0;
    std::map<int, Scalar> coeffs;  // basis index within the degree -> scalar

    bool is_zero() const { return coeffs.empty(); }
};

inline void elem_axpy(const Field& F, Element& acc, const Scalar& c, const Element& x) {
    if (acc.coeffs.empty()) acc.degree = x.degree;
    for (auto& [i, v] : x.coeffs) {
        Scalar s = F.add(acc.coeffs.count(i) ? acc.coeffs[i] : F.zero(), F.mul(c, v));
        if (F.is_zero(s))
            acc.coeffs.erase(i);
        else
            acc.coeffs[i] = s;
    }
}

// Degree-shifting linear map between graded spaces; entries column-sparse.
struct LinearMap {
    const GradedSpace* source = nullptr;
    const GradedSpace* target = nullptr;
    int shift = 0;
    // (source degree, source index) -> sparse column in target degree d+shift
    std::map<std::pair<int, int>, std::map<int, Scalar>> entries;

    std::map<int, Scalar> apply_basis(int degree, int idx) const {
        auto it = entries.find({degree, idx});
        return it == entries.end() ? std::map<int, Scalar>{} : it->second;
    }

    Element apply(const Field& F, const Element& x) const {
        Element out;
        out.degree = x.degree + shift;
        for (auto& [i, c] : x.coeffs) {
            Element col{x.degree + shift, apply_basis(x.degree, i)};
            elem_axpy(F, out, c, col);
        }
        out.degree = x.degree + shift;
        return out;
    }
};

// Koszul sign for moving a symbol of degree `moved` past symbols of the given degrees.
inline int koszul_sign(int moved_degree, const std::vector<int>& passed_degrees) {
    long s = 0;
    for (int d : passed_degrees) s += static_cast<long>(moved_degree) * d;
    return (s % 2 == 0) ? 1 : -1;
}

}  // namespace ainfk
