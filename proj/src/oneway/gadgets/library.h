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

#ifndef ONEWAY_GADGETS_LIBRARY_H
#define ONEWAY_GADGETS_LIBRARY_H

#include "oneway/gadgets/pattern.h"
#include "oneway/qsim/matrix.h"

namespace oneway {

/// Corrected action of an even-length wire: the Hadamard gate.
Matrix even_wire_unitary();

/// Chain (0,0)..(0,n-1) with X measurements on all but the last site. Odd n implements the
/// identity and even n implements even_wire_unitary(). Requires n >= 1 (n = 1 is the empty
/// pattern with input = output).
MeasurementPattern build_wire(int n);

/// Chain (0,0)..(0,4) implementing U_x(zeta) U_z(eta) U_x(xi).
///
/// Site 0 is measured in X. Sites 1, 2, 3 are measured in the X-Y plane at -xi, -eta, -zeta,
/// each negated depending on earlier outcomes and the incoming frame.
MeasurementPattern build_rotation(double xi, double eta, double zeta);

/// Four-site CNOT. Target chain (1,0) - (1,1) - (1,2), control at (0,1) attached to (1,1).
/// Wire 0 is the control (input = output = (0,1)), wire 1 the target ((1,0) -> (1,2)).
/// X measurements on (1,0) then (1,1).
MeasurementPattern build_cnot_minimal();

/// Width of build_cnot_composable in columns, including input and output columns.
constexpr int kComposableCnotWidth = 7;

/// CNOT on a 3 x 7 region: control wire along row 0, target wire along row 2, inputs in
/// column 0 and outputs in column 6, joined by a bridge at (1,2).
///
/// The other row-1 sites of columns 1..5 are Z-measured by the pattern. Sites (1,0) and (1,6)
/// are not part of the pattern; they must be absent or removed by the caller. All measurements
/// are Pauli measurements, so no step depends on another.
MeasurementPattern build_cnot_composable();

/// Rotation pattern mapping |+> on its input site to alpha|0> + beta|1>. Requires
/// |alpha|^2 + |beta|^2 = 1 within 1e-10.
MeasurementPattern build_input_prep(Complex alpha, Complex beta);

}  // namespace oneway

#endif
