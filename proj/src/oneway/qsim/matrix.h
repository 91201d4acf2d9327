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

#ifndef ONEWAY_QSIM_MATRIX_H
#define ONEWAY_QSIM_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace oneway {

using Complex = std::complex<double>;

/// Small dense complex square matrix (row-major). Used for one- and two-qubit operators.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::initializer_list<Complex> row_major);

    static Matrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return data_[row * dim_ + col];
    }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &other) const;
    Matrix operator*(Complex scale) const;
    Matrix kron(const Matrix &other) const;

    /// Largest entrywise |U^dag U - 1|.
    double unitarity_error() const;
    bool is_unitary(double tolerance) const {
        return unitarity_error() <= tolerance;
    }
    double frobenius_norm() const;
    double max_abs_diff(const Matrix &other) const;
    std::string str() const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// |tr(A^dag B)| / (|A| |B|): equals 1 exactly when A and B agree up to a global phase and scale.
double overlap_up_to_phase(const Matrix &a, const Matrix &b);

}  // namespace oneway

#endif
