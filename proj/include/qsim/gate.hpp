#pragma once

#include "qsim/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsim {

// Dense 2^k x 2^k unitary, row-major. Unitarity (M†M = I) is checked on
// construction to 1e-10.
class GateMatrix {
  public:
    GateMatrix(int arity, std::vector<Amp> entries);

    int arity() const { return arity_; }
    Index dim() const { return index_bit(arity_); }
    const Amp& at(Index row, Index col) const { return entries_[row * dim() + col]; }
    const std::vector<Amp>& entries() const { return entries_; }

    static GateMatrix identity(int arity);

  private:
    int arity_;
    std::vector<Amp> entries_;
};

// One circuit element: a unitary with ordered targets and optional controls,
// or a barrier fence (no matrix). Target list position p corresponds to bit p
// of the local 2^k group index; the first target is the least significant
// fused bit.
class Gate {
  public:
    static Gate unitary(GateMatrix matrix, std::vector<int> targets,
                        std::vector<int> controls, std::string label,
                        std::vector<double> params = {});
    static Gate barrier(std::vector<int> qubits);

    bool is_fence() const { return !matrix_.has_value(); }
    const GateMatrix& matrix() const { return *matrix_; }
    int arity() const { return matrix_ ? matrix_->arity() : 0; }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<int>& controls() const { return controls_; }
    const std::string& label() const { return label_; }
    const std::vector<double>& params() const { return params_; }

    bool is_single_qubit() const { return !is_fence() && arity() == 1 && controls_.empty(); }
    bool is_controlled() const { return !controls_.empty(); }
    // All qubits the gate touches (targets then controls).
    std::vector<int> qubits() const;
    int max_qubit() const;

  private:
    Gate() = default;

    std::optional<GateMatrix> matrix_;
    std::vector<int> targets_;
    std::vector<int> controls_;
    std::string label_;
    std::vector<double> params_;
};

// Standard gate constructors (matrices in the conventional little-endian
// single-qubit forms).
namespace gates {

Gate h(int q);
Gate x(int q);
Gate y(int q);
Gate z(int q);
Gate s(int q);
Gate sdg(int q);
Gate t(int q);
Gate tdg(int q);
Gate rx(int q, double theta);
Gate ry(int q, double theta);
Gate rz(int q, double theta);
Gate u1(int q, double lambda);
Gate p(int q, double lambda);
Gate cx(int control, int target);
Gate cz(int control, int target);
Gate cp(int control, int target, double lambda);
Gate cu1(int control, int target, double lambda);
Gate cu(int control, int target, GateMatrix u, std::string label = "CU");

// Builds a gate from a QASM mnemonic; throws std::invalid_argument for an
// unknown name or wrong arity.
Gate from_mnemonic(const std::string& mnemonic, const std::vector<double>& params,
                   const std::vector<int>& qubits);

} // namespace gates

} // namespace qsim
