#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wf/error.hpp"

namespace wf {

// Dense row-major tensor. Images are [H,W,C], token matrices [N,D].
template <typename T>
struct TensorT {
    std::vector<int> shape;
    std::vector<T> data;

    TensorT() = default;
    explicit TensorT(std::vector<int> s) : shape(std::move(s)), data(count(shape), T(0)) {}
    TensorT(std::vector<int> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
        if (static_cast<std::int64_t>(data.size()) != count(shape))
            throw ShapeError("tensor data size does not match shape");
    }

    static std::int64_t count(const std::vector<int>& s) {
        std::int64_t n = 1;
        for (int d : s) {
            if (d < 0) throw ShapeError("negative dimension");
            n *= d;
        }
        return n;
    }

    static TensorT zeros(std::vector<int> s) { return TensorT(std::move(s)); }

    static TensorT full(std::vector<int> s, T v) {
        TensorT t(std::move(s));
        for (auto& x : t.data) x = v;
        return t;
    }

    std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
    int ndim() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    T& operator[](std::int64_t i) { return data[static_cast<size_t>(i)]; }
    const T& operator[](std::int64_t i) const { return data[static_cast<size_t>(i)]; }

    // 2-D and 3-D accessors for the common layouts.
    T& at(int i, int j) { return data[static_cast<size_t>(i) * shape[1] + j]; }
    const T& at(int i, int j) const { return data[static_cast<size_t>(i) * shape[1] + j]; }
    T& at(int i, int j, int k) {
        return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
    }
    const T& at(int i, int j, int k) const {
        return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
    }

    bool same_shape(const TensorT& o) const { return shape == o.shape; }

    std::string shape_str() const {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < shape.size(); ++i) {
            if (i) os << ',';
            os << shape[i];
        }
        os << ']';
        return os.str();
    }

    template <typename U>
    TensorT<U> cast() const {
        TensorT<U> out;
        out.shape = shape;
        out.data.resize(data.size());
        for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }
};

using Tensor = TensorT<float>;
using TensorD = TensorT<double>;

template <typename T>
void check_same_shape(const TensorT<T>& a, const TensorT<T>& b, const char* what) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

} // namespace wf
