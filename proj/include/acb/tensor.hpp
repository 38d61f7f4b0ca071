#pragma once

#include "acb/scalar.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <vector>

namespace acb {

/// Numbers of contravariant and covariant slots, e.g. {1,2} for Γ.
struct Variance {
    unsigned upper = 0;
    unsigned lower = 0;
    unsigned rank() const { return upper + lower; }
    friend bool operator==(const Variance&, const Variance&) = default;
};

/// Dense array of Scalars over a basis of dimension `dim`, indexed in the
/// order the components are written (Γ_{ij}^k is stored at (i, j, k)).
class Tensor {
public:
    Tensor() = default;
    Tensor(std::size_t dim, Variance variance)
        : dim_(dim)
        , variance_(variance)
        , data_(power(dim, variance.rank()))
    {
    }

    std::size_t dim() const { return dim_; }
    Variance variance() const { return variance_; }
    unsigned rank() const { return variance_.rank(); }
    std::size_t size() const { return data_.size(); }

    template <typename... I>
    Scalar& operator()(I... idx)
    {
        return data_[offset({static_cast<std::size_t>(idx)...})];
    }
    template <typename... I>
    const Scalar& operator()(I... idx) const
    {
        return data_[offset({static_cast<std::size_t>(idx)...})];
    }

    /// Flat access in row-major (last slot fastest) order.
    Scalar& flat(std::size_t i) { return data_[i]; }
    const Scalar& flat(std::size_t i) const { return data_[i]; }

    /// Multi-index of flat position i.
    std::vector<std::size_t> index_of(std::size_t flat_index) const
    {
        std::vector<std::size_t> idx(rank());
        for (std::size_t s = rank(); s-- > 0;) {
            idx[s] = flat_index % dim_;
            flat_index /= dim_;
        }
        return idx;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.data_ == b.data_;
    }

private:
    static std::size_t power(std::size_t base, unsigned exp)
    {
        std::size_t r = 1;
        for (unsigned i = 0; i < exp; ++i)
            r *= base;
        return r;
    }

    std::size_t offset(std::initializer_list<std::size_t> idx) const
    {
        assert(idx.size() == rank());
        std::size_t off = 0;
        for (std::size_t i : idx) {
            assert(i < dim_);
            off = off * dim_ + i;
        }
        return off;
    }

    std::size_t dim_ = 0;
    Variance variance_;
    std::vector<Scalar> data_;
};

} // namespace acb
