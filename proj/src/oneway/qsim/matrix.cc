// Copyright 2026 The Oneway Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oneway/qsim/matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oneway {

Matrix::Matrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

Matrix::Matrix(size_t dim, std::initializer_list<Complex> row_major) : dim_(dim), data_(row_major) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("Matrix: expected " + std::to_string(dim * dim) + " entries.");
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("Matrix product: dimension mismatch.");
    }
    Matrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            for (size_t j = 0; j < dim_; j++) {
                r(i, j) += a * other(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator*(Complex scale) const {
    Matrix r = *this;
    for (auto &e : r.data_) {
        e *= scale;
    }
    return r;
}

Matrix Matrix::kron(const Matrix &other) const {
    size_t d = dim_ * other.dim_;
    Matrix r(d);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            for (size_t k = 0; k < other.dim_; k++) {
                for (size_t l = 0; l < other.dim_; l++) {
                    r(i * other.dim_ + k, j * other.dim_ + l) = (*this)(i, j) * other(k, l);
                }
            }
        }
    }
    return r;
}

double Matrix::unitarity_error() const {
    Matrix p = adjoint() * *this;
    return p.max_abs_diff(identity(dim_));
}

double Matrix::frobenius_norm() const {
    double t = 0;
    for (const auto &e : data_) {
        t += std::norm(e);
    }
    return std::sqrt(t);
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("Matrix comparison: dimension mismatch.");
    }
    double worst = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

std::string Matrix::str() const {
    std::stringstream ss;
    ss << "[";
    for (size_t i = 0; i < dim_; i++) {
        ss << (i ? "; " : "");
        for (size_t j = 0; j < dim_; j++) {
            ss << (j ? ", " : "") << (*this)(i, j);
        }
    }
    ss << "]";
    return ss.str();
}

double overlap_up_to_phase(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap_up_to_phase: dimension mismatch.");
    }
    Complex t = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            t += std::conj(a(i, j)) * b(i, j);
        }
    }
    return std::abs(t) / (a.frobenius_norm() * b.frobenius_norm());
}

}  // namespace oneway
