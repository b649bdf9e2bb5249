// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_LIBRARY_H
#define QCX_LIBRARY_H

#include <string>
#include <vector>

#include "qcx/codes.h"

namespace qcx {

/// Cells of the 15-qubit tetrahedron: red, green, blue, yellow.
enum class Cell { R, G, B, Y };

std::vector<size_t> cell_support(Cell c);
/// The face shared by two distinct cells.
std::vector<size_t> interior_face_support(Cell a, Cell b);
/// The three boundary faces of a cell.
std::vector<std::vector<size_t>> corner_faces(Cell c);
/// All 18 faces of the four cells, sorted.
std::vector<std::vector<size_t>> all_faces();
/// Faces of the yellow cell (three interior, three on the boundary).
std::vector<std::vector<size_t>> yellow_faces();
/// The face of a red, green or blue cell lying on qubits 0..6.
std::vector<size_t> steane_face_support(Cell c);

SubsystemCode steane7();
SubsystemCode rm15();
SubsystemCode extended_steane15();
SubsystemCode bacon_shor_3x3();
SubsystemCode six_qubit_6113();

std::vector<std::string> library_names();
/// Throws InvalidArgument for an unknown name.
SubsystemCode library_code(const std::string &name);

}  // namespace qcx

#endif
