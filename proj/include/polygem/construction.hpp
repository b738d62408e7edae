#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polygem/milgram.hpp"
#include "polygem/smith.hpp"

namespace polygem {

enum class GeneratorStatus { Live, Killed };

/// A generator of H*P_n tracked through the construction.
struct LedgerRecord {
    int degree = 0;
    std::size_t factor = 0;  // index into the P-factor list
    std::string name;
    GeneratorOrigin origin = GeneratorOrigin::SubILabel;
    bool primitive = false;
    /// Part of the exterior factor: squares to zero and is never killed.
    bool exterior = false;
    ModuleElement representative;  // ReducedFree or SubI of its factor
    GeneratorStatus status = GeneratorStatus::Live;
    int killed_at_step = 0;
    std::size_t killer = 0;  // domain summand whose generator kills it
    /// Power known to vanish in the limit: 2 for exterior classes, 4 once killed.
    std::optional<int> nilpotency_bound;
    /// Index of the step that will process a live record.
    int pending_step() const { return degree - 1; }
};

struct VerificationEntry {
    int step = 0;
    std::string property;  // "P1", "P2", "P3", "init"
    bool ok = true;
    std::string detail;
    std::optional<int> failed_degree;
    std::optional<std::string> witness;
};

/// X_n as the fiber of f_n : P_n -> G_n.
struct ConstructionState {
    int l = 2;
    int n = 1;
    int max_degree = 0;
    std::vector<SpaceFactor> p_factors;  // all MilgramE
    std::vector<SpaceFactor> g_factors;  // all EMF2
    /// Domain summand i is Free(m) for G-factor i; P-factor j owns codomain
    /// summands 2j (ReducedFree) and 2j+1 (SubI).
    PrimitiveMap f;
    std::vector<LedgerRecord> ledger;
    std::vector<VerificationEntry> log;
    /// Steps at which factors were added, in order.
    std::vector<int> nontrivial_steps;
    /// Series of H*X_n through max_degree.
    PoincareSeries series;

    int connectivity() const { return 2 * l - 1; }
};

/// X_1 = P_1 = E_{2l}, G_1 = point. Requires l >= 2 and max_degree >= 2l.
ConstructionState init(int l, int max_degree);

/// Kills the live polynomial generators in degree n+1; identity when there
/// are none. Requires state.n == n.
ConstructionState step(const ConstructionState& state, int n);

/// Properties 1-3 for the step from `before` (index n) to `after`.
std::vector<VerificationEntry> verify_step(const ConstructionState& before,
                                           const ConstructionState& after, int n);

struct DegreeReport {
    int degree = 0;
    std::int64_t dimension = 0;
    int stable_from = 1;  // H^d X_k is constant for k >= stable_from
};

struct ColimitReport {
    int l = 2;
    int steps = 0;
    int max_degree = 0;
    ConstructionState final_state;
    std::vector<DegreeReport> degrees;
    /// Every degree <= max_degree is covered by the iso bounds of the run.
    bool complete = true;
    bool verified = true;
    /// Degree-2l class of the fundamental ibar.
    bool nontrivial = false;

    /// Sections `# run`, `# factors`, `# series`, `# ledger`, `# verification`.
    std::string to_tsv(bool with_witnesses = false) const;
};

/// Runs steps 1..steps, verifying each. Stops at the first failed check.
ColimitReport run(int l, int steps, int max_degree);

}  // namespace polygem
