// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/pauli.h"

#include <cctype>

namespace qcx {

PauliOperator::PauliOperator(BitVec x_, BitVec z_, bool negative_)
    : x(std::move(x_)), z(std::move(z_)), negative(negative_) {
    if (x.size() != z.size()) {
        throw DimensionMismatch("x and z parts have different lengths");
    }
}

PauliOperator PauliOperator::identity(size_t n) {
    return PauliOperator(BitVec(n), BitVec(n), false);
}

PauliOperator PauliOperator::minus_identity(size_t n) {
    return PauliOperator(BitVec(n), BitVec(n), true);
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char letter) {
    return on(n, letter, {qubit});
}

PauliOperator PauliOperator::on(size_t n, char letter, const std::vector<size_t> &qubits) {
    PauliOperator p = identity(n);
    for (size_t q : qubits) {
        if (q >= n) {
            throw InvalidArgument("qubit index out of range");
        }
        switch (letter) {
            case 'I':
                break;
            case 'X':
                p.x.set(q, true);
                break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                break;
            case 'Z':
                p.z.set(q, true);
                break;
            default:
                throw InvalidArgument(std::string("unknown Pauli letter '") + letter + "'");
        }
    }
    return p;
}

char PauliOperator::letter(size_t qubit) const {
    return "IXZY"[x.get(qubit) + 2 * z.get(qubit)];
}

PauliOperator PauliOperator::negated() const {
    return PauliOperator(x, z, !negative);
}

BitVec PauliOperator::symplectic() const {
    return x.concat(z);
}

PauliOperator PauliOperator::from_symplectic(const BitVec &xz, bool negative) {
    if (xz.size() % 2) {
        throw DimensionMismatch("symplectic vector has odd length");
    }
    size_t n = xz.size() / 2;
    return PauliOperator(xz.slice(0, n), xz.slice(n, 2 * n), negative);
}

std::strong_ordering PauliOperator::operator<=>(const PauliOperator &other) const {
    if (auto c = negative <=> other.negative; c != 0) {
        return c;
    }
    if (auto c = x <=> other.x; c != 0) {
        return c;
    }
    return z <=> other.z;
}

size_t PauliHash::operator()(const PauliOperator &p) const {
    size_t h = p.x.hash();
    h ^= p.z.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<size_t>(p.negative);
}

GroupElement GroupElement::from_pauli(const PauliOperator &p) {
    // Y = iXZ, so each Y contributes one factor of i.
    uint8_t phase = static_cast<uint8_t>((2 * p.negative + (p.x & p.z).popcount()) & 3);
    return GroupElement{p.x, p.z, phase};
}

GroupElement GroupElement::identity(size_t n) {
    return GroupElement{BitVec(n), BitVec(n), 0};
}

bool GroupElement::is_real() const {
    return ((phase - (x & z).popcount()) & 1) == 0;
}

PauliOperator GroupElement::to_pauli() const {
    if (!is_real()) {
        throw NotRealPhase("group element has an imaginary phase");
    }
    size_t d = (phase + 4 - (x & z).popcount() % 4) % 4;
    return PauliOperator(x, z, d == 2);
}

PauliOperator GroupElement::hermitian_part() const {
    if (is_real()) {
        return to_pauli();
    }
    GroupElement g = *this;
    g.phase = static_cast<uint8_t>((g.phase + 3) & 3);
    return g.to_pauli();
}

GroupElement mul(const GroupElement &a, const GroupElement &b) {
    if (a.x.size() != b.x.size()) {
        throw DimensionMismatch("operators act on different numbers of qubits");
    }
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    uint8_t phase = static_cast<uint8_t>((a.phase + b.phase + 2 * a.z.dot(b.x)) & 3);
    return GroupElement{a.x ^ b.x, a.z ^ b.z, phase};
}

GroupElement mul(const PauliOperator &a, const PauliOperator &b) {
    return mul(GroupElement::from_pauli(a), GroupElement::from_pauli(b));
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionMismatch("operators act on different numbers of qubits");
    }
    return p.x.dot(q.z) == p.z.dot(q.x);
}

PauliOperator commuting_product(const PauliOperator &p, const PauliOperator &q) {
    if (!commutes(p, q)) {
        throw AnticommutingFactors("factors " + format_pauli(p) + " and " + format_pauli(q) + " anticommute");
    }
    return mul(p, q).to_pauli();
}

size_t weight(const PauliOperator &p) {
    return (p.x | p.z).popcount();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

void apply_letter(PauliOperator &p, size_t q, char c, std::string_view text) {
    switch (c) {
        case 'I':
            return;
        case 'X':
            p.x.set(q, true);
            return;
        case 'Y':
            p.x.set(q, true);
            p.z.set(q, true);
            return;
        case 'Z':
            p.z.set(q, true);
            return;
        default:
            throw ParseError("malformed Pauli '" + std::string(text) + "': unexpected character '" + c + "'");
    }
}

}  // namespace

PauliOperator parse_pauli(std::string_view text, size_t n) {
    std::string_view body = trim(text);
    PauliOperator p = PauliOperator::identity(n);
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        p.negative = body[0] == '-';
        body = trim(body.substr(1));
    }
    if (body.empty() || body == "I") {
        return p;
    }
    bool sparse = false;
    for (char c : body) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            sparse = true;
        }
    }
    if (!sparse) {
        if (body.size() != n) {
            throw ParseError("malformed Pauli '" + std::string(text) + "': dense form has " +
                             std::to_string(body.size()) + " letters, expected " + std::to_string(n));
        }
        for (size_t q = 0; q < n; q++) {
            apply_letter(p, q, body[q], text);
        }
        return p;
    }
    std::vector<bool> seen(n, false);
    size_t pos = 0;
    while (pos < body.size()) {
        char c = body[pos];
        if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
            pos++;
            continue;
        }
        size_t digits = pos + 1;
        while (digits < body.size() && std::isdigit(static_cast<unsigned char>(body[digits]))) {
            digits++;
        }
        if (digits == pos + 1) {
            throw ParseError("malformed Pauli '" + std::string(text) + "': letter without qubit index");
        }
        size_t q = 0;
        for (size_t k = pos + 1; k < digits; k++) {
            q = q * 10 + static_cast<size_t>(body[k] - '0');
            if (q > (1u << 30)) {
                throw ParseError("malformed Pauli '" + std::string(text) + "': index too large");
            }
        }
        if (q >= n) {
            throw ParseError("malformed Pauli '" + std::string(text) + "': index " + std::to_string(q) +
                             " >= " + std::to_string(n));
        }
        if (seen[q]) {
            throw ParseError("malformed Pauli '" + std::string(text) + "': index " + std::to_string(q) +
                             " repeated");
        }
        seen[q] = true;
        apply_letter(p, q, c, text);
        pos = digits;
    }
    return p;
}

std::string format_pauli(const PauliOperator &p, PauliStyle style) {
    std::string out = p.negative ? "-" : "+";
    size_t n = p.num_qubits();
    if (style == PauliStyle::Dense) {
        for (size_t q = 0; q < n; q++) {
            out += p.letter(q);
        }
        return out;
    }
    bool first = true;
    for (size_t q = 0; q < n; q++) {
        char c = p.letter(q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            out += '*';
        }
        first = false;
        out += c;
        out += std::to_string(q);
    }
    if (first) {
        out += 'I';
    }
    return out;
}

std::vector<PauliOperator> parse_pauli_list(std::string_view text, size_t n) {
    std::vector<PauliOperator> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view item = trim(text.substr(start, comma - start));
        if (item.empty()) {
            throw ParseError("empty entry in Pauli list '" + std::string(text) + "'");
        }
        out.push_back(parse_pauli(item, n));
        start = comma + 1;
    }
    return out;
}

}  // namespace qcx
