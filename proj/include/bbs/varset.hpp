#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bbs {

// Ordered set of variable names. The listing order is the canonical variable
// order used by every ordering and by all I/O. Two flavours appear in
// practice: ambient ring variables x1..xn, and coefficient variables c[i,j]
// laid out row-major (flat index (i-1)*ncols + j).
class VarSet {
public:
    VarSet() = default;

    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        build_index();
    }

    static VarSet ambient(int n) {
        std::vector<std::string> v;
        v.reserve(n);
        for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
        return VarSet(std::move(v));
    }

    // c[1,1], c[1,2], ..., c[nrows,ncols] in row-major order.
    static VarSet coefficients(int nrows, int ncols) {
        std::vector<std::string> v;
        v.reserve(static_cast<size_t>(nrows) * ncols);
        for (int i = 1; i <= nrows; ++i)
            for (int j = 1; j <= ncols; ++j)
                v.push_back("c[" + std::to_string(i) + "," + std::to_string(j) + "]");
        VarSet vs(std::move(v));
        vs.c_rows_ = nrows;
        vs.c_cols_ = ncols;
        return vs;
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int idx) const { return names_.at(idx); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown variable: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    // For coefficient variable sets: flat index of c[i,j], 1-based i,j.
    int c_index(int i, int j) const {
        if (c_rows_ == 0) throw std::logic_error("not a coefficient variable set");
        if (i < 1 || i > c_rows_ || j < 1 || j > c_cols_)
            throw std::out_of_range("coefficient index out of range");
        return (i - 1) * c_cols_ + (j - 1);
    }

    std::pair<int, int> c_pair(int idx) const {
        if (c_rows_ == 0) throw std::logic_error("not a coefficient variable set");
        return {idx / c_cols_ + 1, idx % c_cols_ + 1};
    }

    int c_rows() const { return c_rows_; }
    int c_cols() const { return c_cols_; }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    void build_index() {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    int c_rows_ = 0, c_cols_ = 0;
};

} // namespace bbs
