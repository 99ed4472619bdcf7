#pragma once

#include "parking/count.hpp"
#include "parking/enumeration.hpp"
#include "parking/probabilistic.hpp"
#include "parking/procedure.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parking {

// Plane binary tree. Nodes are numbered 0..size()-1 in in-order, which is
// what ties them to spots once the tree sits on a block.
class BinaryTree {
public:
    static constexpr int kNone = -1;

    BinaryTree() = default;
    static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

    // Decreasing tree of a sequence of distinct labels: the largest label is
    // the root, the entries before/after it build the left/right subtrees.
    static BinaryTree from_sequence(std::span<const std::size_t> labels);

    // "" for the empty tree, "(" left "." right ")" for a node.
    static BinaryTree parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return left_.size(); }
    bool empty() const { return left_.empty(); }
    int root() const { return root_; }
    int left(int n) const { return left_[static_cast<std::size_t>(n)]; }
    int right(int n) const { return right_[static_cast<std::size_t>(n)]; }
    int parent(int n) const;

    // In-order span [first, last] of the subtree rooted at n.
    std::pair<int, int> span(int n) const;

    auto operator<=>(const BinaryTree&) const = default;

private:
    std::vector<int> left_;
    std::vector<int> right_;
    int root_ = kNone;
};

// All binary trees with n nodes (Catalan many), in a fixed order.
std::vector<BinaryTree> all_binary_trees(std::size_t n);

// n! / prod(subtree sizes).
Count decreasing_labelings(const BinaryTree& tree);

struct NodeInterval {
    Spot node = 0;
    Spot lo = 0;
    Spot hi = 0;

    bool operator==(const NodeInterval&) const = default;
};

// A support set with one binary tree per block; node k of the tree on block
// {lo..hi} is spot lo+k (canonical labeling).
class IndexedForest {
public:
    IndexedForest() = default;
    // Throws std::invalid_argument if tree sizes do not match the blocks.
    IndexedForest(SpotSet support, std::vector<BinaryTree> trees);

    const SpotSet& support() const { return support_; }
    const std::vector<BinaryTree>& trees() const { return trees_; }
    std::size_t size() const { return support_.size(); }

    // Subtree span of the node sitting on `spot`.
    NodeInterval interval(Spot spot) const;

    // Parent spot of a node, if it is not a root.
    std::optional<Spot> parent(Spot spot) const;

    bool is_single_tree_on_1_to(std::size_t r) const;

    // Blocks as "lo..hi:shape", space separated.
    std::string to_string() const;

    auto operator<=>(const IndexedForest&) const = default;

private:
    std::pair<std::size_t, Spot> locate(Spot spot) const;

    SpotSet support_;
    std::vector<BinaryTree> trees_;
};

// Shape with two labelings, both listed in support order: p_labels are the
// preferences, q_labels the arrival indices (a decreasing labeling).
struct ForestPair {
    IndexedForest shape;
    std::vector<Letter> p_labels;
    std::vector<std::size_t> q_labels;

    auto operator<=>(const ForestPair&) const = default;
};

ForestPair encode(const Procedure& procedure, std::span<const Letter> word);

SpotSet project(const ForestPair& pair);

// The only word that could encode to `pair`: car q_i prefers p_i.
Word decode(const ForestPair& pair);

bool in_image(const Procedure& procedure, const ForestPair& pair);

// Calls visit(labels) for every decreasing labeling of the forest, labels in
// support order.
void for_each_decreasing_labeling(const IndexedForest& forest,
                                  const std::function<void(const std::vector<std::size_t>&)>& visit);

// Preferences that can sit on `interval.node` given its subtree span:
// {j | Dir({lo..node-1}, j) = right} ∪ {node} ∪ {j | Dir({node+1..hi}, j) = left}.
// Throws std::invalid_argument unless memoryless and locally decided.
std::set<Letter> label_set(const Procedure& procedure, const NodeInterval& interval);

// Same set from a Dir(r, i) table for local procedures:
// 1 + R_{node-lo} + L_{hi-node} elements.
std::size_t label_set_size_from_counts(const Procedure& procedure, const NodeInterval& interval);

// Parking words whose outcome is sigma (sigma[k-1] = arrival index of the
// car on spot k), as the product of label-set sizes over the decreasing tree.
Count fiber_count(const Procedure& procedure, std::span<const std::size_t> sigma);

// Parking words of length r tallied by outcome permutation.
std::map<std::vector<std::size_t>, Count> fiber_table_brute(const Procedure& procedure, int r,
                                                            const EnumerationOptions& options = {});

// Parking words whose forest pair has this shape on {1..r}.
Count shape_count(const Procedure& procedure, const BinaryTree& shape);

struct CorrespondenceReport {
    bool good = true;
    // A pair in the image, and a relabeling of it that is not.
    std::optional<std::pair<ForestPair, ForestPair>> witness;
};

// Words of length 1..r_max over {1..r_max+1}: every decreasing relabeling of
// an image pair must be in the image again.
CorrespondenceReport is_good_correspondence(const Procedure& procedure, int r_max);

// Sum over cars of |preferred spot - parked spot|.
Count total_displacement(const Procedure& procedure, std::span<const Letter> word);

// Every branch of a probabilistic run yields a forest pair; weights of equal
// pairs are added. Memoryless procedures only.
std::map<ForestPair, Rational> weighted_encodings(const ProbProcedure& procedure,
                                                  std::span<const Letter> word);

std::string to_json(const ForestPair& pair);
ForestPair forest_pair_from_json(std::string_view json_text);

// Labelings per 3-node shape, sorted nonincreasingly, for the Dyck path
// and Shi tree encodings of parking functions. Reference only.
inline constexpr std::array<Count, 5> kOtherBijectionShapeCountsR3{6, 3, 3, 3, 1};

} // namespace parking
