// Copyright 2026 The gadsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "gadsim/circuit.hpp"

namespace gadsim {

/// One parsed statement: gate name, parameters in radians, physical qubit
/// operands, and classical operands (measure only).
struct QasmInstruction {
  std::string name;
  std::vector<double> params;
  std::vector<std::size_t> qubits;
  std::vector<std::size_t> clbits;

  bool operator==(const QasmInstruction&) const = default;
};

/// Structured OpenQASM 2.0 program over a single quantum and a single
/// classical register, the dialect of composer-generated circuit dumps.
struct QasmProgram {
  std::string version = "2.0";
  std::string qreg_name;
  std::size_t qreg_size = 0;
  std::string creg_name;
  std::size_t creg_size = 0;
  std::vector<QasmInstruction> instructions;
};

class QasmParseError : public std::runtime_error {
 public:
  QasmParseError(const std::string& message, std::size_t line,
                 std::size_t column)
      : std::runtime_error("qasm parse error at line " +
                           std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Bijection between circuit wires and physical qubit indices.
class WireMapping {
 public:
  /// wire_to_physical[w] is the physical qubit for circuit wire w. Must be a
  /// permutation of 0..n-1.
  explicit WireMapping(std::vector<std::size_t> wire_to_physical);

  static WireMapping identity(std::size_t n);

  /// The simulator layout: E -> q[0], A -> q[1] (prep rotation), Q -> q[2].
  static WireMapping simulator_default();

  std::size_t size() const { return wire_to_physical_.size(); }
  std::size_t physical(std::size_t wire) const;
  std::size_t wire(std::size_t physical) const;

 private:
  std::vector<std::size_t> wire_to_physical_;
  std::vector<std::size_t> physical_to_wire_;
};

/// Serialize a {CNOT, RY}-only circuit to OpenQASM 2.0 text: header,
/// qreg/creg declarations sized to the circuit width, one instruction per
/// line in circuit order, then optional measure lines (sorted by physical
/// index). Angles are rendered as plain shortest-round-trip decimals (no
/// symbolic pi fractions): the emitted bytes are stable for a given circuit
/// and mapping, and parsing them back recovers the angle bit-exactly.
/// Throws on X or CONTROLLED_U gates.
std::string emit(const Circuit& c, const WireMapping& mapping,
                 const std::set<std::size_t>& measure_wires = {});

/// Parse the supported OpenQASM 2.0 subset: OPENQASM header, include
/// (ignored), qreg/creg, ry, cx, x, measure, barrier (ignored). Angle
/// expressions accept plain decimals plus pi forms (pi, pi/2, 2*pi, ...).
/// Anything else raises QasmParseError with line/column.
QasmProgram parse(const std::string& text);

/// Rebuild a Circuit from a parsed program, mapping physical qubits back to
/// circuit wires. Measures and barriers carry no gate; a measure-only
/// program yields an empty circuit. Throws on qubits outside the mapping.
Circuit to_circuit(const QasmProgram& prog, const WireMapping& mapping);

/// 12-significant-digit decimal rendering used for CSV values and reports;
/// locale-independent.
std::string format_g12(double value);

/// Shortest decimal that parses back to the identical double; used for
/// emitted gate angles.
std::string format_exact(double value);

}  // namespace gadsim
