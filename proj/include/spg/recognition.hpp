#pragma once

#include <optional>
#include <vector>

#include "spg/profile.hpp"

namespace spg {

enum class Verdict { Compatible, Incompatible };

// One leaf-elimination step: the removed candidate, the full attachment set
// computed on the profile restricted to the candidates remaining at that
// point, and the attachment edge actually chosen for the witness.
struct EliminationStep {
    int removed;
    std::vector<int> attach_set;
    Edge chosen;
};

struct EliminationCertificate {
    std::vector<EliminationStep> steps;
    std::vector<int> core;  // candidates never eliminated
};

struct RecognitionResult {
    Verdict verdict;
    std::optional<Graph> witness;
    std::optional<EliminationCertificate> certificate;

    bool compatible() const { return verdict == Verdict::Compatible; }
};

// A(k): intersection over voters of the candidates they rank strictly above
// k, except that a voter ranking k first contributes the singleton holding
// its second candidate. Empty result means k cannot be a leaf.
std::vector<int> a_set(const Profile& p, int k);

// Leaf elimination: repeatedly removes a candidate ranked last by some voter
// whose attachment set is nonempty. Witness attaches each leaf to the
// lowest-index member of its set; ties between last-ranked candidates go to
// the lowest index.
RecognitionResult recognize_tree(const Profile& p);

// Tree elimination with the rebuilt graph constrained to stay a path. After
// a successful elimination, reachable (end,end) pairs are propagated step by
// step; a candidate may only attach to a current path end inside its
// attachment set.
RecognitionResult recognize_path(const Profile& p);

// Cyclic order such that every ranking prefix is a contiguous arc. Reduced
// to a consecutive-ones test on the prefix sets, with rows containing a
// fixed cut candidate complemented. Requires m >= 3.
RecognitionResult recognize_cycle(const Profile& p);

// Detaches any candidate with a nonempty attachment set while more than 3
// candidates remain, then looks for a cycle on the residue. Requires m >= 3.
// scan_order, when given, is the candidate preference order for picking the
// next leaf (used to check order independence); default is ascending.
RecognitionResult recognize_pseudotree(const Profile& p,
                                       const std::vector<int>* scan_order = nullptr);

}  // namespace spg
