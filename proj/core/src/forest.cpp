#include "parking/forest.hpp"

#include "parking/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace parking {

// ---- BinaryTree -----------------------------------------------------------

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right)
{
    BinaryTree tree;
    int offset = static_cast<int>(left.size()) + 1;
    auto shifted = [](int child, int by) { return child == kNone ? kNone : child + by; };

    tree.left_ = left.left_;
    tree.right_ = left.right_;
    tree.left_.push_back(left.root_);
    tree.right_.push_back(right.empty() ? kNone : right.root_ + offset);
    for (std::size_t k = 0; k < right.size(); ++k) {
        tree.left_.push_back(shifted(right.left_[k], offset));
        tree.right_.push_back(shifted(right.right_[k], offset));
    }
    tree.root_ = offset - 1;
    return tree;
}

BinaryTree BinaryTree::from_sequence(std::span<const std::size_t> labels)
{
    if (labels.empty()) return {};
    auto top = std::max_element(labels.begin(), labels.end()) - labels.begin();
    return node(from_sequence(labels.first(static_cast<std::size_t>(top))),
                from_sequence(labels.subspan(static_cast<std::size_t>(top) + 1)));
}

namespace {

BinaryTree parse_tree(std::string_view text, std::size_t& pos)
{
    if (pos >= text.size() || text[pos] != '(') return {};
    ++pos;
    BinaryTree left = parse_tree(text, pos);
    if (pos >= text.size() || text[pos] != '.') throw std::invalid_argument("bad tree string");
    ++pos;
    BinaryTree right = parse_tree(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("bad tree string");
    ++pos;
    return BinaryTree::node(left, right);
}

} // namespace

BinaryTree BinaryTree::parse(std::string_view text)
{
    std::size_t pos = 0;
    BinaryTree tree = parse_tree(text, pos);
    if (pos != text.size()) throw std::invalid_argument("bad tree string '" + std::string(text) + "'");
    return tree;
}

std::string BinaryTree::to_string() const
{
    std::function<std::string(int)> render = [&](int n) -> std::string {
        if (n == kNone) return "";
        return "(" + render(left(n)) + "." + render(right(n)) + ")";
    };
    return render(root_);
}

int BinaryTree::parent(int n) const
{
    for (std::size_t k = 0; k < size(); ++k)
        if (left_[k] == n || right_[k] == n) return static_cast<int>(k);
    return kNone;
}

std::pair<int, int> BinaryTree::span(int n) const
{
    int first = n;
    while (left(first) != kNone) first = left(first);
    int last = n;
    while (right(last) != kNone) last = right(last);
    return {first, last};
}

std::vector<BinaryTree> all_binary_trees(std::size_t n)
{
    if (n == 0) return {BinaryTree{}};
    std::vector<BinaryTree> out;
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& left : all_binary_trees(k))
            for (const auto& right : all_binary_trees(n - 1 - k)) out.push_back(BinaryTree::node(left, right));
    }
    return out;
}

Count decreasing_labelings(const BinaryTree& tree)
{
    Count result = factorial(static_cast<unsigned>(tree.size()));
    for (std::size_t n = 0; n < tree.size(); ++n) {
        auto [first, last] = tree.span(static_cast<int>(n));
        result /= static_cast<Count>(last - first + 1);
    }
    return result;
}

// ---- IndexedForest --------------------------------------------------------

IndexedForest::IndexedForest(SpotSet support, std::vector<BinaryTree> trees)
    : support_(std::move(support)), trees_(std::move(trees))
{
    const auto& blocks = support_.blocks();
    if (blocks.size() != trees_.size()) throw std::invalid_argument("one tree per block required");
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].size() != trees_[b].size())
            throw std::invalid_argument("tree size does not match block " + std::to_string(blocks[b].lo) +
                                        ".." + std::to_string(blocks[b].hi));
}

std::pair<std::size_t, Spot> IndexedForest::locate(Spot spot) const
{
    const auto& blocks = support_.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].contains(spot)) return {b, blocks[b].lo};
    throw std::out_of_range("spot " + std::to_string(spot) + " is not a node");
}

NodeInterval IndexedForest::interval(Spot spot) const
{
    auto [b, lo] = locate(spot);
    auto [first, last] = trees_[b].span(static_cast<int>(spot - lo));
    return {spot, lo + first, lo + last};
}

std::optional<Spot> IndexedForest::parent(Spot spot) const
{
    auto [b, lo] = locate(spot);
    int p = trees_[b].parent(static_cast<int>(spot - lo));
    if (p == BinaryTree::kNone) return std::nullopt;
    return lo + p;
}

bool IndexedForest::is_single_tree_on_1_to(std::size_t r) const
{
    return trees_.size() == 1 && support_.is_interval(1, static_cast<Spot>(r));
}

std::string IndexedForest::to_string() const
{
    std::string out;
    const auto& blocks = support_.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += " ";
        out += std::to_string(blocks[b].lo) + ".." + std::to_string(blocks[b].hi) + ":" + trees_[b].to_string();
    }
    return out;
}

// ---- correspondence -------------------------------------------------------

namespace {

ForestPair pair_from_run(std::span<const Letter> word, const SpotSet& occupied, const Outcome& outcome)
{
    std::vector<std::size_t> arrivals = outcome.arrivals_by_spot();
    std::vector<BinaryTree> trees;
    std::size_t offset = 0;
    for (const Block& b : occupied.blocks()) {
        trees.push_back(BinaryTree::from_sequence(std::span(arrivals).subspan(offset, b.size())));
        offset += b.size();
    }
    ForestPair pair{IndexedForest(occupied, std::move(trees)), {}, arrivals};
    for (std::size_t q : arrivals) pair.p_labels.push_back(word[q - 1]);
    return pair;
}

} // namespace

ForestPair encode(const Procedure& procedure, std::span<const Letter> word)
{
    RunResult result = run(procedure, word);
    return pair_from_run(word, result.occupied, result.outcome);
}

SpotSet project(const ForestPair& pair)
{
    return pair.shape.support();
}

Word decode(const ForestPair& pair)
{
    Word word(pair.q_labels.size());
    for (std::size_t k = 0; k < pair.q_labels.size(); ++k) {
        std::size_t q = pair.q_labels[k];
        if (q < 1 || q > word.size()) throw std::invalid_argument("q labels must be 1..r");
        word[q - 1] = pair.p_labels[k];
    }
    return word;
}

bool in_image(const Procedure& procedure, const ForestPair& pair)
{
    return encode(procedure, decode(pair)) == pair;
}

void for_each_decreasing_labeling(const IndexedForest& forest,
                                  const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    // Global node k is the k-th spot of the support.
    const auto& spots = forest.support().spots();
    std::size_t n = spots.size();
    std::vector<std::vector<std::size_t>> children(n);
    std::vector<std::size_t> roots;
    for (std::size_t k = 0; k < n; ++k) {
        auto parent = forest.parent(spots[k]);
        if (!parent) {
            roots.push_back(k);
            continue;
        }
        auto pk = static_cast<std::size_t>(std::lower_bound(spots.begin(), spots.end(), *parent) - spots.begin());
        children[pk].push_back(k);
    }

    // Hand out labels n, n-1, ..., 1; the next label may go to any node
    // whose parent is already labeled.
    std::vector<std::size_t> labels(n, 0);
    std::vector<std::size_t> available = roots;
    std::function<void(std::size_t)> place = [&](std::size_t label) {
        if (label == 0) {
            visit(labels);
            return;
        }
        for (std::size_t idx = 0; idx < available.size(); ++idx) {
            std::size_t node = available[idx];
            labels[node] = label;
            std::vector<std::size_t> saved = available;
            available.erase(available.begin() + static_cast<std::ptrdiff_t>(idx));
            available.insert(available.end(), children[node].begin(), children[node].end());
            place(label - 1);
            available = std::move(saved);
            labels[node] = 0;
        }
    };
    place(n);
}

std::set<Letter> label_set(const Procedure& procedure, const NodeInterval& interval)
{
    if (!procedure.flags().memoryless || !procedure.flags().locally_decided)
        throw std::invalid_argument(procedure.name() + " is not memoryless and locally decided");
    std::set<Letter> out{interval.node};
    if (interval.lo < interval.node) {
        SpotSet left = SpotSet::interval(interval.lo, interval.node - 1);
        for (Spot j = interval.lo; j < interval.node; ++j)
            if (dir_of_set(procedure, left, j) == Direction::Right) out.insert(j);
    }
    if (interval.node < interval.hi) {
        SpotSet right = SpotSet::interval(interval.node + 1, interval.hi);
        for (Spot j = interval.node + 1; j <= interval.hi; ++j)
            if (dir_of_set(procedure, right, j) == Direction::Left) out.insert(j);
    }
    return out;
}

std::size_t label_set_size_from_counts(const Procedure& procedure, const NodeInterval& interval)
{
    if (!procedure.flags().local() || !procedure.flags().memoryless)
        throw std::invalid_argument(procedure.name() + " is not a local memoryless procedure");
    auto right_count = [&](int k) {
        std::size_t count = 0;
        for (int i = 1; i <= k; ++i)
            if (dir_of(procedure, k, i) == Direction::Right) ++count;
        return count;
    };
    int left_size = static_cast<int>(interval.node - interval.lo);
    int right_size = static_cast<int>(interval.hi - interval.node);
    std::size_t r_left = right_count(left_size);
    std::size_t l_right = static_cast<std::size_t>(right_size) - right_count(right_size);
    return 1 + r_left + l_right;
}

namespace {

Count label_product(const Procedure& procedure, const BinaryTree& tree)
{
    IndexedForest forest(SpotSet::interval(1, static_cast<Spot>(tree.size())), {tree});
    Count product = 1;
    for (Spot s = 1; s <= static_cast<Spot>(tree.size()); ++s)
        product *= label_set(procedure, forest.interval(s)).size();
    return product;
}

} // namespace

Count fiber_count(const Procedure& procedure, std::span<const std::size_t> sigma)
{
    std::vector<std::size_t> sorted(sigma.begin(), sigma.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != k + 1) throw std::invalid_argument("sigma is not a permutation of 1..r");
    return label_product(procedure, BinaryTree::from_sequence(sigma));
}

std::map<std::vector<std::size_t>, Count> fiber_table_brute(const Procedure& procedure, int r,
                                                            const EnumerationOptions& options)
{
    std::map<std::vector<std::size_t>, Count> table;
    for (const Word& word : parking_words(procedure, r, options))
        ++table[outcome<Letter>(procedure, word).arrivals_by_spot()];
    return table;
}

Count shape_count(const Procedure& procedure, const BinaryTree& shape)
{
    return label_product(procedure, shape) * decreasing_labelings(shape);
}

CorrespondenceReport is_good_correspondence(const Procedure& procedure, int r_max)
{
    CorrespondenceReport report;
    std::set<ForestPair> checked;
    for (int length = 1; length <= r_max && report.good; ++length) {
        for_each_word(static_cast<std::size_t>(length), 1, r_max + 1, [&](const Word& word) {
            if (!report.good) return;
            ForestPair pair = encode(procedure, word);
            if (!checked.insert(pair).second) return;
            for_each_decreasing_labeling(pair.shape, [&](const std::vector<std::size_t>& labels) {
                if (!report.good) return;
                ForestPair relabeled{pair.shape, pair.p_labels, labels};
                if (relabeled == pair) return;
                if (!in_image(procedure, relabeled)) {
                    report.good = false;
                    report.witness = {pair, relabeled};
                } else {
                    checked.insert(relabeled);
                }
            });
        });
    }
    return report;
}

Count total_displacement(const Procedure& procedure, std::span<const Letter> word)
{
    ForestPair pair = encode(procedure, word);
    Count total = 0;
    const auto& spots = pair.shape.support().spots();
    for (std::size_t k = 0; k < spots.size(); ++k) {
        Letter d = pair.p_labels[k] - spots[k];
        total += static_cast<Count>(d < 0 ? -d : d);
    }
    return total;
}

std::map<ForestPair, Rational> weighted_encodings(const ProbProcedure& procedure, std::span<const Letter> word)
{
    if (!procedure.flags().memoryless)
        throw std::invalid_argument(procedure.name() + " is not memoryless");

    std::map<ForestPair, Rational> out;
    SpotSet occupied;
    State state = procedure.initial_state();
    std::vector<Spot> parked;
    std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t step, const Rational& weight) {
        if (step == word.size()) {
            out[pair_from_run(word, occupied, Outcome(parked))] += weight;
            return;
        }
        Letter a = word[step];
        auto branch = [&](Spot spot, const Rational& w) {
            SpotSet saved_set = occupied;
            State saved_state = state;
            occupied.insert(spot);
            parked.push_back(spot);
            procedure.update(state, a, spot, occupied);
            walk(step + 1, w);
            parked.pop_back();
            occupied = std::move(saved_set);
            state = std::move(saved_state);
        };
        auto block = occupied.block_of(a);
        if (!block) {
            branch(a, weight);
            return;
        }
        Rational p = procedure.decide(state, word.first(step), occupied, *block, a);
        if (p != 0) branch(block->hi + 1, weight * p);
        if (p != 1) branch(block->lo - 1, weight * (1 - p));
    };
    walk(0, Rational(1));
    return out;
}

// ---- serialization --------------------------------------------------------

std::string to_json(const ForestPair& pair)
{
    nlohmann::ordered_json doc;
    doc["support"] = pair.shape.support().spots();
    auto blocks = nlohmann::ordered_json::array();
    const auto& bs = pair.shape.support().blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        nlohmann::ordered_json block;
        block["lo"] = bs[b].lo;
        block["hi"] = bs[b].hi;
        block["shape"] = pair.shape.trees()[b].to_string();
        blocks.push_back(block);
    }
    doc["blocks"] = blocks;
    doc["p_labels"] = pair.p_labels;
    doc["q_labels"] = pair.q_labels;
    return doc.dump();
}

ForestPair forest_pair_from_json(std::string_view json_text)
{
    try {
        auto doc = nlohmann::json::parse(json_text);
        SpotSet support(doc.at("support").get<std::vector<Spot>>());
        std::vector<BinaryTree> trees;
        for (const auto& block : doc.at("blocks")) trees.push_back(BinaryTree::parse(block.at("shape").get<std::string>()));
        ForestPair pair{IndexedForest(std::move(support), std::move(trees)),
                        doc.at("p_labels").get<std::vector<Letter>>(),
                        doc.at("q_labels").get<std::vector<std::size_t>>()};
        if (pair.p_labels.size() != pair.shape.size() || pair.q_labels.size() != pair.shape.size())
            throw std::invalid_argument("label arrays must match the support size");
        return pair;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("forest JSON: ") + e.what());
    }
}

} // namespace parking
