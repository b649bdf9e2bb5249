// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/library.h"

#include <algorithm>

#include "qcx/errors.h"

namespace qcx {

namespace {

// Vertices 0, 4, 6, 10 of the tetrahedron; edge midpoints 1, 3, 5, 7, 8, 9;
// face centres 2, 11, 12, 14; body centre 13.
const std::vector<size_t> kCells[4] = {
    {0, 1, 2, 3, 7, 12, 13, 14},
    {1, 2, 4, 5, 8, 11, 13, 14},
    {2, 3, 5, 6, 9, 11, 12, 13},
    {7, 8, 9, 10, 11, 12, 13, 14},
};

const std::vector<std::vector<size_t>> kCorners[4] = {
    {{0, 1, 2, 3}, {0, 1, 7, 14}, {0, 3, 7, 12}},
    {{1, 2, 4, 5}, {1, 4, 8, 14}, {4, 5, 8, 11}},
    {{2, 3, 5, 6}, {3, 6, 9, 12}, {5, 6, 9, 11}},
    {{7, 8, 10, 14}, {7, 9, 10, 12}, {8, 9, 10, 11}},
};

size_t idx(Cell c) {
    return static_cast<size_t>(c);
}

std::vector<PauliOperator> face_ops(size_t n, char letter, const std::vector<std::vector<size_t>> &faces) {
    std::vector<PauliOperator> out;
    for (const auto &f : faces) {
        out.push_back(PauliOperator::on(n, letter, f));
    }
    return out;
}

}  // namespace

std::vector<size_t> cell_support(Cell c) {
    return kCells[idx(c)];
}

std::vector<size_t> interior_face_support(Cell a, Cell b) {
    if (a == b) {
        throw InvalidArgument("interior faces join two different cells");
    }
    std::vector<size_t> out;
    std::set_intersection(kCells[idx(a)].begin(), kCells[idx(a)].end(), kCells[idx(b)].begin(),
                          kCells[idx(b)].end(), std::back_inserter(out));
    return out;
}

std::vector<std::vector<size_t>> corner_faces(Cell c) {
    return kCorners[idx(c)];
}

std::vector<std::vector<size_t>> all_faces() {
    std::vector<std::vector<size_t>> out;
    const Cell cells[] = {Cell::R, Cell::G, Cell::B, Cell::Y};
    for (size_t i = 0; i < 4; i++) {
        for (const auto &f : kCorners[i]) {
            out.push_back(f);
        }
        for (size_t j = i + 1; j < 4; j++) {
            out.push_back(interior_face_support(cells[i], cells[j]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<size_t>> yellow_faces() {
    std::vector<std::vector<size_t>> out = kCorners[idx(Cell::Y)];
    for (Cell c : {Cell::R, Cell::G, Cell::B}) {
        out.push_back(interior_face_support(c, Cell::Y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<size_t> steane_face_support(Cell c) {
    if (c == Cell::Y) {
        throw InvalidArgument("the yellow cell does not touch qubits 0..6");
    }
    return kCorners[idx(c)][0];
}

SubsystemCode steane7() {
    std::vector<std::vector<size_t>> faces = {{0, 1, 2, 3}, {1, 2, 4, 5}, {2, 3, 5, 6}};
    auto gens = face_ops(7, 'X', faces);
    for (auto &p : face_ops(7, 'Z', faces)) {
        gens.push_back(p);
    }
    return code_from_gauge_generators(7, gens, "steane-7");
}

SubsystemCode rm15() {
    std::vector<std::vector<size_t>> cells(std::begin(kCells), std::end(kCells));
    auto gens = face_ops(15, 'X', cells);
    for (auto &p : face_ops(15, 'Z', cells)) {
        gens.push_back(p);
    }
    for (auto &p : face_ops(15, 'Z', all_faces())) {
        gens.push_back(p);
    }
    return code_from_gauge_generators(15, gens, "rm-15");
}

SubsystemCode extended_steane15() {
    std::vector<std::vector<size_t>> faces;
    for (Cell c : {Cell::R, Cell::G, Cell::B}) {
        faces.push_back(steane_face_support(c));
    }
    for (const auto &f : yellow_faces()) {
        faces.push_back(f);
    }
    auto gens = face_ops(15, 'X', faces);
    for (auto &p : face_ops(15, 'Z', faces)) {
        gens.push_back(p);
    }
    return code_from_gauge_generators(15, gens, "extended-steane-15");
}

SubsystemCode bacon_shor_3x3() {
    // Qubit (r, c) is 3r + c.
    std::vector<PauliOperator> gens;
    for (size_t r = 0; r + 1 < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            gens.push_back(PauliOperator::on(9, 'X', {3 * r + c, 3 * (r + 1) + c}));
        }
    }
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c + 1 < 3; c++) {
            gens.push_back(PauliOperator::on(9, 'Z', {3 * r + c, 3 * r + c + 1}));
        }
    }
    return code_from_gauge_generators(9, gens, "bacon-shor-9");
}

SubsystemCode six_qubit_6113() {
    // Four stabilizers plus one gauge pair.
    auto gens = parse_pauli_list("YIZXXY,ZXIIXZ,IZXXXX,ZZZIZI,X3,Z3*Z5", 6);
    return code_from_gauge_generators(6, gens, "six-qubit-6113");
}

std::vector<std::string> library_names() {
    return {"bacon-shor-9", "extended-steane-15", "rm-15", "six-qubit-6113", "steane-7"};
}

SubsystemCode library_code(const std::string &name) {
    if (name == "bacon-shor-9") {
        return bacon_shor_3x3();
    }
    if (name == "extended-steane-15") {
        return extended_steane15();
    }
    if (name == "rm-15") {
        return rm15();
    }
    if (name == "six-qubit-6113") {
        return six_qubit_6113();
    }
    if (name == "steane-7") {
        return steane7();
    }
    throw InvalidArgument("unknown library code '" + name + "'");
}

}  // namespace qcx
