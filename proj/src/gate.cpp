#include "qsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qsim {

namespace {

constexpr double kUnitarityTol = 1e-10;

void check_unitary(int arity, const std::vector<Amp>& m) {
    const Index d = index_bit(arity);
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            Amp dot = 0.0;
            for (Index k = 0; k < d; ++k)
                dot += std::conj(m[k * d + r]) * m[k * d + c];
            const Amp want = (r == c) ? Amp{1.0, 0.0} : Amp{0.0, 0.0};
            if (std::abs(dot - want) > kUnitarityTol)
                throw std::invalid_argument("gate matrix is not unitary");
        }
    }
}

} // namespace

GateMatrix::GateMatrix(int arity, std::vector<Amp> entries)
    : arity_(arity), entries_(std::move(entries)) {
    if (arity_ < 1)
        throw std::invalid_argument("gate arity must be >= 1");
    const Index d = index_bit(arity_);
    if (entries_.size() != d * d)
        throw std::invalid_argument("gate matrix has wrong dimension");
    check_unitary(arity_, entries_);
}

GateMatrix GateMatrix::identity(int arity) {
    const Index d = index_bit(arity);
    std::vector<Amp> m(d * d, Amp{0.0, 0.0});
    for (Index i = 0; i < d; ++i)
        m[i * d + i] = 1.0;
    return GateMatrix(arity, std::move(m));
}

Gate Gate::unitary(GateMatrix matrix, std::vector<int> targets,
                   std::vector<int> controls, std::string label,
                   std::vector<double> params) {
    if (static_cast<std::size_t>(matrix.arity()) != targets.size())
        throw std::invalid_argument("target count must equal gate arity");
    std::set<int> seen;
    for (int q : targets)
        if (q < 0 || !seen.insert(q).second)
            throw std::invalid_argument("invalid or duplicate target qubit");
    for (int q : controls)
        if (q < 0 || !seen.insert(q).second)
            throw std::invalid_argument("control qubit duplicates another operand");
    Gate g;
    g.matrix_ = std::move(matrix);
    g.targets_ = std::move(targets);
    g.controls_ = std::move(controls);
    g.label_ = std::move(label);
    g.params_ = std::move(params);
    return g;
}

Gate Gate::barrier(std::vector<int> qubits) {
    std::set<int> seen;
    for (int q : qubits)
        if (q < 0 || !seen.insert(q).second)
            throw std::invalid_argument("invalid or duplicate barrier qubit");
    Gate g;
    g.targets_ = std::move(qubits);
    g.label_ = "barrier";
    return g;
}

std::vector<int> Gate::qubits() const {
    std::vector<int> qs = targets_;
    qs.insert(qs.end(), controls_.begin(), controls_.end());
    return qs;
}

int Gate::max_qubit() const {
    int m = -1;
    for (int q : targets_)
        m = std::max(m, q);
    for (int q : controls_)
        m = std::max(m, q);
    return m;
}

namespace gates {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr Amp kI{0.0, 1.0};

Gate single(int q, std::vector<Amp> m, std::string label, std::vector<double> params = {}) {
    return Gate::unitary(GateMatrix(1, std::move(m)), {q}, {}, std::move(label),
                         std::move(params));
}

Gate controlled(int c, int t, std::vector<Amp> m, std::string label,
                std::vector<double> params = {}) {
    return Gate::unitary(GateMatrix(1, std::move(m)), {t}, {c}, std::move(label),
                         std::move(params));
}

} // namespace

Gate h(int q) { return single(q, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}, "h"); }
Gate x(int q) { return single(q, {0.0, 1.0, 1.0, 0.0}, "x"); }
Gate y(int q) { return single(q, {0.0, -kI, kI, 0.0}, "y"); }
Gate z(int q) { return single(q, {1.0, 0.0, 0.0, -1.0}, "z"); }
Gate s(int q) { return single(q, {1.0, 0.0, 0.0, kI}, "s"); }
Gate sdg(int q) { return single(q, {1.0, 0.0, 0.0, -kI}, "sdg"); }
Gate t(int q) { return single(q, {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)}, "t"); }
Gate tdg(int q) { return single(q, {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)}, "tdg"); }

Gate rx(int q, double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return single(q, {c, -kI * s, -kI * s, c}, "rx", {theta});
}

Gate ry(int q, double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return single(q, {c, -s, s, c}, "ry", {theta});
}

Gate rz(int q, double theta) {
    return single(q, {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)},
                  "rz", {theta});
}

Gate u1(int q, double lambda) {
    return single(q, {1.0, 0.0, 0.0, std::polar(1.0, lambda)}, "u1", {lambda});
}

Gate p(int q, double lambda) {
    return single(q, {1.0, 0.0, 0.0, std::polar(1.0, lambda)}, "p", {lambda});
}

Gate cx(int control, int target) {
    return controlled(control, target, {0.0, 1.0, 1.0, 0.0}, "cx");
}

Gate cz(int control, int target) {
    return controlled(control, target, {1.0, 0.0, 0.0, -1.0}, "cz");
}

Gate cp(int control, int target, double lambda) {
    return controlled(control, target, {1.0, 0.0, 0.0, std::polar(1.0, lambda)}, "cp",
                      {lambda});
}

Gate cu1(int control, int target, double lambda) {
    return controlled(control, target, {1.0, 0.0, 0.0, std::polar(1.0, lambda)}, "cu1",
                      {lambda});
}

Gate cu(int control, int target, GateMatrix u, std::string label) {
    if (u.arity() != 1)
        throw std::invalid_argument("cu expects a single-qubit matrix");
    return Gate::unitary(std::move(u), {target}, {control}, std::move(label));
}

Gate from_mnemonic(const std::string& mnemonic, const std::vector<double>& params,
                   const std::vector<int>& qubits) {
    auto expect = [&](std::size_t nparams, std::size_t nqubits) {
        if (params.size() != nparams)
            throw std::invalid_argument("gate '" + mnemonic + "' expects " +
                                        std::to_string(nparams) + " parameter(s)");
        if (qubits.size() != nqubits)
            throw std::invalid_argument("gate '" + mnemonic + "' expects " +
                                        std::to_string(nqubits) + " qubit(s)");
    };
    if (mnemonic == "h") { expect(0, 1); return h(qubits[0]); }
    if (mnemonic == "x") { expect(0, 1); return x(qubits[0]); }
    if (mnemonic == "y") { expect(0, 1); return y(qubits[0]); }
    if (mnemonic == "z") { expect(0, 1); return z(qubits[0]); }
    if (mnemonic == "s") { expect(0, 1); return s(qubits[0]); }
    if (mnemonic == "sdg") { expect(0, 1); return sdg(qubits[0]); }
    if (mnemonic == "t") { expect(0, 1); return t(qubits[0]); }
    if (mnemonic == "tdg") { expect(0, 1); return tdg(qubits[0]); }
    if (mnemonic == "rx") { expect(1, 1); return rx(qubits[0], params[0]); }
    if (mnemonic == "ry") { expect(1, 1); return ry(qubits[0], params[0]); }
    if (mnemonic == "rz") { expect(1, 1); return rz(qubits[0], params[0]); }
    if (mnemonic == "u1") { expect(1, 1); return u1(qubits[0], params[0]); }
    if (mnemonic == "p") { expect(1, 1); return p(qubits[0], params[0]); }
    if (mnemonic == "cx") { expect(0, 2); return cx(qubits[0], qubits[1]); }
    if (mnemonic == "cz") { expect(0, 2); return cz(qubits[0], qubits[1]); }
    if (mnemonic == "cp") { expect(1, 2); return cp(qubits[0], qubits[1], params[0]); }
    if (mnemonic == "cu1") { expect(1, 2); return cu1(qubits[0], qubits[1], params[0]); }
    throw std::invalid_argument("unknown gate mnemonic '" + mnemonic + "'");
}

} // namespace gates

} // namespace qsim
