#include "parking/probabilistic.hpp"

#include "parking/enumeration.hpp"
#include "parking/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace parking {

namespace {

constexpr ProcedureFlags kLocalMemoryless{true, true, true};

void check_cap(int r, const ProbOptions& options)
{
    if (r < 1) throw std::domain_error("exhaustive evaluation needs r >= 1");
    if (r > options.cap)
        throw CapExceeded("r = " + std::to_string(r) + " exceeds the probabilistic cap " +
                          std::to_string(options.cap));
}

} // namespace

Rational ProbProcedure::decide(const State& state, std::span<const Letter> history,
                               const SpotSet& occupied, const Block& block, Letter letter) const
{
    Rational p = decide_(state, history, occupied, block, letter);
    if (p < 0 || p > 1) throw std::logic_error(name_ + ": probability " + to_string(p) + " outside [0,1]");
    return p;
}

ProbProcedure kw_procedure(const Rational& q)
{
    if (q < 0 || q > 1) throw std::invalid_argument("kw needs 0 <= q <= 1");
    return ProbProcedure("kw:q=" + to_string(q), kLocalMemoryless,
                         [q](const State&, std::span<const Letter>, const SpotSet&, const Block&,
                             Letter) { return q; });
}

ProbProcedure kw_sequence_procedure(std::vector<Rational> q_by_car)
{
    if (q_by_car.empty()) throw std::invalid_argument("kwseq needs at least one probability");
    std::string name = "kwseq:q=";
    for (std::size_t i = 0; i < q_by_car.size(); ++i) {
        if (q_by_car[i] < 0 || q_by_car[i] > 1) throw std::invalid_argument("kwseq needs 0 <= q_i <= 1");
        name += (i ? "+" : "") + to_string(q_by_car[i]);
    }
    return ProbProcedure(std::move(name), {true, true, false},
                         [q = std::move(q_by_car)](const State&, std::span<const Letter>,
                                                   const SpotSet& occupied, const Block&, Letter) {
                             std::size_t car = occupied.size() + 1;
                             return q[std::min(car, q.size()) - 1];
                         });
}

ProbProcedure pq_procedure(const QParam& q)
{
    return ProbProcedure("pq:q=" + q.to_string(), kLocalMemoryless,
                         [q](const State&, std::span<const Letter>, const SpotSet&, const Block& b,
                             Letter a) {
                             return q_ratio(static_cast<int>(a - b.lo + 1),
                                            static_cast<int>(b.size()) + 1, q);
                         });
}

ProbProcedure embed(const Procedure& procedure)
{
    return ProbProcedure(
        procedure.name(), procedure.flags(),
        [procedure](const State& state, std::span<const Letter> history, const SpotSet& occupied,
                    const Block& block, Letter a) {
            return Rational(procedure.decide(state, history, occupied, block, a) == Direction::Right ? 1 : 0);
        },
        [procedure](State& state, Letter a, Spot parked, const SpotSet& occupied) {
            procedure.update(state, a, parked, occupied);
        },
        procedure.initial_state());
}

ProbProcedure prob_builtin(const ProcSpec& spec)
{
    auto only_q = [&] {
        for (const auto& [key, value] : spec.params)
            if (key != "q") throw std::invalid_argument("unknown parameter '" + key + "' for " + spec.name);
        auto it = spec.params.find("q");
        if (it == spec.params.end()) throw std::invalid_argument(spec.name + " needs q=...");
        return it->second;
    };
    if (spec.name == "kw") return kw_procedure(parse_rational(only_q()));
    if (spec.name == "pq") return pq_procedure(parse_q(only_q()));
    if (spec.name == "kwseq") {
        std::string text = only_q();
        std::vector<Rational> q;
        std::size_t start = 0;
        while (true) {
            auto plus = text.find('+', start);
            q.push_back(parse_rational(std::string_view(text).substr(start, plus - start)));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return kw_sequence_procedure(std::move(q));
    }
    return embed(builtin(spec));
}

Measure::Measure(std::map<SpotSet, Rational> weights)
    : weights_(std::move(weights))
{
    std::erase_if(weights_, [](const auto& entry) { return entry.second == 0; });
}

Rational Measure::at(const SpotSet& set) const
{
    auto it = weights_.find(set);
    return it == weights_.end() ? Rational(0) : it->second;
}

Rational Measure::total() const
{
    Rational sum = 0;
    for (const auto& [set, w] : weights_) sum += w;
    return sum;
}

Measure measure(const ProbProcedure& procedure, std::span<const Letter> word)
{
    using Config = std::pair<SpotSet, State>;
    std::map<Config, Rational> current;
    current.emplace(Config{SpotSet{}, procedure.initial_state()}, Rational(1));

    for (std::size_t step = 0; step < word.size(); ++step) {
        Letter a = word[step];
        std::span<const Letter> history = word.first(step);
        std::map<Config, Rational> next;
        auto advance = [&](const Config& from, Spot parked, const Rational& weight) {
            Config to = from;
            to.first.insert(parked);
            procedure.update(to.second, a, parked, to.first);
            next[std::move(to)] += weight;
        };
        for (const auto& [config, weight] : current) {
            const auto& [occupied, state] = config;
            auto block = occupied.block_of(a);
            if (!block) {
                advance(config, a, weight);
                continue;
            }
            Rational p = procedure.decide(state, history, occupied, *block, a);
            if (p != 0) advance(config, block->hi + 1, weight * p);
            if (p != 1) advance(config, block->lo - 1, weight * (1 - p));
        }
        current = std::move(next);
    }

    std::map<SpotSet, Rational> weights;
    for (const auto& [config, weight] : current) weights[config.first] += weight;
    return Measure(std::move(weights));
}

Rational parking_probability(const ProbProcedure& procedure, std::span<const Letter> word)
{
    return measure(procedure, word).at(SpotSet::interval(1, static_cast<Spot>(word.size())));
}

Rational total_parking_mass(const ProbProcedure& procedure, int r, const ProbOptions& options)
{
    check_cap(r, options);
    auto partial = map_tasks<Rational>(static_cast<std::size_t>(r + 1), options.jobs, [&](std::size_t i) {
        Rational sum = 0;
        for_each_word(
            static_cast<std::size_t>(r), 1, r + 1,
            [&](const Word& word) { sum += parking_probability(procedure, word); },
            Word{static_cast<Letter>(i + 1)});
        return sum;
    });
    Rational total = 0;
    for (const auto& part : partial) total += part;
    return total;
}

std::vector<std::pair<Word, Rational>> orbit_masses(const ProbProcedure& procedure, int r,
                                                    const ProbOptions& options)
{
    check_cap(r, options);
    std::size_t tasks = r >= 2 ? static_cast<std::size_t>(r + 1) : 1;
    auto partial = map_tasks<std::vector<std::pair<Word, Rational>>>(tasks, options.jobs, [&](std::size_t i) {
        std::vector<std::pair<Word, Rational>> out;
        Word prefix{1};
        if (r >= 2) prefix.push_back(static_cast<Letter>(i + 1));
        for_each_word(
            static_cast<std::size_t>(r), 1, r + 1,
            [&](const Word& representative) {
                Rational mass = 0;
                Word current = representative;
                for (int k = 0; k <= r; ++k) {
                    mass += parking_probability(procedure, current);
                    current = rotate(current, r);
                }
                out.emplace_back(representative, std::move(mass));
            },
            prefix);
        return out;
    });
    std::vector<std::pair<Word, Rational>> all;
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    return all;
}

AbelianReport is_abelian(const ProbProcedure& procedure, int r_max, const ProbOptions& options)
{
    check_cap(r_max, options);
    std::map<Word, Measure> sorted_measures;
    for (int length = 1; length <= r_max; ++length) {
        AbelianReport report;
        for_each_word(static_cast<std::size_t>(length), 1, length + 1, [&](const Word& word) {
            if (!report.abelian) return;
            Word sorted = word;
            std::sort(sorted.begin(), sorted.end());
            auto it = sorted_measures.find(sorted);
            if (it == sorted_measures.end())
                it = sorted_measures.emplace(sorted, measure(procedure, sorted)).first;
            if (sorted != word && measure(procedure, word) != it->second) {
                report.abelian = false;
                report.witness = {word, sorted};
            }
        });
        if (!report.abelian) return report;
    }
    return {};
}

ProbTable::ProbTable(int r_max)
    : r_max_(r_max)
{
    for (int r = 1; r <= r_max; ++r) rows_.emplace_back(static_cast<std::size_t>(r), Rational(0));
}

const Rational& ProbTable::at(int r, int i) const
{
    if (r < 1 || r > r_max_ || i < 1 || i > r) throw std::out_of_range("ProbTable index");
    return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)];
}

void ProbTable::set(int r, int i, Rational p)
{
    if (r < 1 || r > r_max_ || i < 1 || i > r) throw std::out_of_range("ProbTable index");
    if (p < 0 || p > 1) throw std::domain_error("probability outside [0,1]");
    rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)] = std::move(p);
}

ProbTable probability_table(const ProbProcedure& procedure, int r_max)
{
    if (!procedure.flags().memoryless) throw std::invalid_argument(procedure.name() + " is not memoryless");
    ProbTable table(r_max);
    for (int r = 1; r <= r_max; ++r) {
        SpotSet block = SpotSet::interval(1, r);
        for (int i = 1; i <= r; ++i)
            table.set(r, i, procedure.decide(procedure.initial_state(), {}, block, Block{1, r}, i));
    }
    return table;
}

ProbTable pq_table(const QParam& q, int r_max)
{
    ProbTable table(r_max);
    for (int r = 1; r <= r_max; ++r)
        for (int i = 1; i <= r; ++i) table.set(r, i, q_ratio(i, r + 1, q));
    return table;
}

ProbProcedure table_prob_procedure(ProbTable table, std::string name)
{
    return ProbProcedure(std::move(name), kLocalMemoryless,
                         [table = std::move(table)](const State&, std::span<const Letter>, const SpotSet&,
                                                    const Block& b, Letter a) {
                             if (static_cast<int>(b.size()) > table.r_max())
                                 throw std::out_of_range("block larger than the probability table");
                             return table.at(static_cast<int>(b.size()), static_cast<int>(a - b.lo + 1));
                         });
}

std::string to_string(Recurrence eq)
{
    return eq == Recurrence::Ratio ? "ratio" : "diagonal";
}

UniquenessReport abelian_uniqueness_check(const ProbTable& table, int r_max)
{
    if (r_max > table.r_max()) throw std::out_of_range("table shorter than r_max");
    UniquenessReport report;
    const Rational& p11 = table.at(1, 1);
    report.q = p11 == 0 ? QParam::infinity() : QParam(1 / p11 - 1);
    const QParam& q = report.q;

    // 1/(1+q) and q/(1+q), with their limits 0 and 1 at q = inf.
    Rational stay = q.is_infinite() ? Rational(0) : Rational(1 / (1 + q.value()));
    Rational carry = q.is_infinite() ? Rational(1) : Rational(q.value() / (1 + q.value()));

    for (int r = 2; r <= r_max && !report.failure; ++r) {
        const Rational& prr = table.at(r, r);
        for (int i = 1; i < r; ++i) {
            Rational expected = q_ratio(i, r, q) * prr;
            if (table.at(r, i) != expected) {
                report.failure = RecurrenceFailure{r, i, Recurrence::Ratio, expected, table.at(r, i)};
                break;
            }
        }
        if (report.failure) break;
        Rational expected = stay + carry * table.at(r, r - 1);
        if (prr != expected) report.failure = RecurrenceFailure{r, r, Recurrence::Diagonal, expected, prr};
    }

    report.matches_pq = true;
    for (int r = 1; r <= r_max && report.matches_pq; ++r)
        for (int i = 1; i <= r; ++i)
            if (table.at(r, i) != q_ratio(i, r + 1, q)) {
                report.matches_pq = false;
                break;
            }
    return report;
}

} // namespace parking
