#include "cli/app.hpp"

#include "cli/report.hpp"

#include <parking/builtins.hpp>
#include <parking/colored.hpp>
#include <parking/dir_table.hpp>
#include <parking/enumeration.hpp>
#include <parking/flags.hpp>
#include <parking/forest.hpp>
#include <parking/probabilistic.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

namespace parking::cli {
namespace {

constexpr int kDeterministicCap = 7;
constexpr int kProbabilisticCap = 5;
constexpr int kUnsafeCap = 1000;

class ExpectationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string proc = "right";
    std::string proc_file;
    std::string format = "table";
    std::optional<unsigned> jobs;
    bool cap_unsafe = false;
    bool timing = false;
};

void add_common(CLI::App& sub, Common& c)
{
    auto* proc = sub.add_option("--proc", c.proc, "procedure NAME[:k=v,...]");
    sub.add_option("--proc-file", c.proc_file, "DirTable JSON file")->excludes(proc);
    sub.add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub.add_option("--jobs", c.jobs, "worker threads, 0 = all (default: $PARKING_JOBS or 0)");
    sub.add_flag("--cap-unsafe", c.cap_unsafe, "lift the exhaustive size cap");
    sub.add_flag("--timing", c.timing, "report wall-clock time");
}

unsigned jobs_of(const Common& c)
{
    if (c.jobs) return *c.jobs;
    const char* env = std::getenv("PARKING_JOBS");
    if (!env || !*env) return 0;
    unsigned value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("PARKING_JOBS must be a non-negative integer");
    return value;
}

EnumerationOptions enum_options(const Common& c)
{
    return {c.cap_unsafe ? kUnsafeCap : kDeterministicCap, jobs_of(c)};
}

ProbOptions prob_options(const Common& c)
{
    return {c.cap_unsafe ? kUnsafeCap : kProbabilisticCap, jobs_of(c)};
}

void check_cap(int r, int cap)
{
    if (r > cap)
        throw CapExceeded("r = " + std::to_string(r) + " exceeds the exhaustive cap " + std::to_string(cap) +
                          " (use --cap-unsafe)");
}

void require_r(int r)
{
    if (r < 1) throw std::invalid_argument("--r must be at least 1");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string proc_label(const Common& c)
{
    if (!c.proc_file.empty()) return "file:" + c.proc_file;
    return format_proc_spec(parse_proc_spec(c.proc));
}

Procedure load_procedure(const Common& c)
{
    if (!c.proc_file.empty()) return table_procedure(parse_dir_table(read_file(c.proc_file)));
    return builtin(parse_proc_spec(c.proc));
}

ProbProcedure load_prob_procedure(const Common& c)
{
    if (!c.proc_file.empty()) return embed(load_procedure(c));
    return prob_builtin(parse_proc_spec(c.proc));
}

std::string word_text(std::span<const Letter> word)
{
    bool digits = std::all_of(word.begin(), word.end(), [](Letter a) { return a >= 0 && a <= 9; });
    return digits ? format_compact(word) : format_word(word);
}

template <class T>
std::string list_text(const std::vector<T>& items, const std::function<std::string(const T&)>& show)
{
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + show(items[i]);
    return out + "}";
}

std::string sequence_text(std::span<const std::size_t> values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::vector<std::size_t> parse_sequence(const std::string& text)
{
    std::vector<std::size_t> out;
    for (Letter a : parse_word(text)) {
        if (a < 1) throw std::invalid_argument("permutation entries start at 1");
        out.push_back(static_cast<std::size_t>(a));
    }
    return out;
}

Word parse_word_option(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("--word is empty");
    return parse_word(text);
}

// enumerate ------------------------------------------------------------------

struct EnumerateArgs {
    int r = 0;
    bool expect_universal = false;
    bool list = false;
};

void cmd_enumerate(const Common& c, const EnumerateArgs& a, Report& report)
{
    require_r(a.r);
    Procedure p = load_procedure(c);
    auto options = enum_options(c);
    check_cap(a.r, options.cap);

    report.parameters = {{"proc", proc_label(c)}, {"r", a.r}};
    Count count = count_parking(p, a.r, options);
    Count expected = cayley_count(static_cast<unsigned>(a.r));
    report.results["count"] = count_json(count);
    report.results["expected"] = count_json(expected);
    report.results["universal"] = count == expected;

    report.line(to_string(count));
    report.row({"r", "count", "expected"});
    report.row({std::to_string(a.r), to_string(count), to_string(expected)});

    if (a.list) {
        Json words = Json::array();
        for (const Word& w : parking_words(p, a.r, options)) {
            words.push_back(format_word(w));
            report.line("  " + word_text(w));
        }
        report.results["words"] = std::move(words);
    }
    if (a.expect_universal && count != expected)
        throw ExpectationFailed("expected " + to_string(expected) + " parking words, found " + to_string(count));
}

// orbits ---------------------------------------------------------------------

struct OrbitsArgs {
    int r = 0;
    bool expect_one = false;
};

void cmd_orbits(const Common& c, const OrbitsArgs& a, Report& report)
{
    require_r(a.r);
    Procedure p = load_procedure(c);
    auto options = enum_options(c);
    check_cap(a.r, options.cap);

    report.parameters = {{"proc", proc_label(c)}, {"r", a.r}};
    OrbitReport audit = orbit_audit(p, a.r, options);

    Json histogram = Json::object();
    for (const auto& [per_orbit, orbits] : audit.histogram) histogram[to_string(per_orbit)] = count_json(orbits);
    Json violations = Json::array();
    for (const auto& v : audit.violations) {
        Json members = Json::array();
        for (const Word& w : v.members) members.push_back(format_word(w));
        violations.push_back({{"members", members}, {"parking_words", count_json(v.parking_words)}});
    }
    report.results["orbits"] = count_json(audit.orbit_count);
    report.results["parking_total"] = count_json(audit.parking_total());
    report.results["histogram"] = histogram;
    report.results["violations"] = violations;

    report.line("orbits: " + to_string(audit.orbit_count));
    if (audit.ok()) {
        report.line("all orbits: 1");
    } else {
        for (const auto& [per_orbit, orbits] : audit.histogram)
            report.line("orbits with " + to_string(per_orbit) + " parking words: " + to_string(orbits));
        for (const auto& v : audit.violations) {
            std::string members =
                list_text<Word>(v.members, [](const Word& w) { return word_text(w); });
            report.line(members + ": " + to_string(v.parking_words));
        }
    }

    report.row({"members", "parking_words"});
    for (const auto& v : audit.violations) {
        std::string members;
        for (const Word& w : v.members) members += (members.empty() ? "" : " ") + word_text(w);
        report.row({members, to_string(v.parking_words)});
    }

    if (a.expect_one && !audit.ok())
        throw ExpectationFailed(std::to_string(audit.violations.size()) + " orbits without exactly one parking word");
}

// prob -----------------------------------------------------------------------

struct ProbArgs {
    std::string word;
    int mass = 0;
    bool orbits = false;
    bool expect_universal = false;
};

void cmd_prob(const Common& c, const ProbArgs& a, Report& report)
{
    ProbProcedure p = load_prob_procedure(c);
    report.parameters["proc"] = proc_label(c);

    if (!a.word.empty()) {
        Word w = parse_word_option(a.word);
        report.parameters["word"] = format_word(w);
        Measure m = measure(p, w);
        Rational parking = m.at(SpotSet::interval(1, static_cast<Spot>(w.size())));
        Json support = Json::array();
        report.row({"set", "probability"});
        for (const auto& [set, weight] : m.support()) {
            support.push_back({{"set", set.to_string()}, {"probability", to_string(weight)}});
            report.row({set.to_string(), to_string(weight)});
        }
        report.results["parking_probability"] = to_string(parking);
        report.results["measure"] = support;
        report.line(to_string(parking));
        for (const auto& [set, weight] : m.support()) report.line("  " + set.to_string() + ": " + to_string(weight));
        return;
    }

    if (a.mass == 0) throw std::invalid_argument("prob needs --word or --mass");
    require_r(a.mass);
    auto options = prob_options(c);
    check_cap(a.mass, options.cap);
    report.parameters["mass"] = a.mass;

    Rational total = total_parking_mass(p, a.mass, options);
    Rational expected = parse_rational(to_string(cayley_count(static_cast<unsigned>(a.mass))));
    report.results["mass"] = to_string(total);
    report.results["expected"] = to_string(expected);
    report.line(to_string(total));
    report.row({"r", "mass", "expected"});
    report.row({std::to_string(a.mass), to_string(total), to_string(expected)});

    if (a.orbits) {
        Json per_orbit = Json::array();
        for (const auto& [rep, mass] : orbit_masses(p, a.mass, options)) {
            per_orbit.push_back({{"representative", format_word(rep)}, {"mass", to_string(mass)}});
            report.line("  " + word_text(rep) + ": " + to_string(mass));
        }
        report.results["orbit_masses"] = per_orbit;
    }
    if (a.expect_universal && total != expected)
        throw ExpectationFailed("parking mass " + to_string(total) + " differs from " + to_string(expected));
}

// abelian --------------------------------------------------------------------

struct AbelianArgs {
    int r = 0;
    bool uniqueness = false;
    bool expect_abelian = false;
};

void cmd_abelian(const Common& c, const AbelianArgs& a, Report& report)
{
    require_r(a.r);
    ProbProcedure p = load_prob_procedure(c);
    auto options = prob_options(c);
    check_cap(a.r, options.cap);
    report.parameters = {{"proc", proc_label(c)}, {"r", a.r}};

    AbelianReport ab = is_abelian(p, a.r, options);
    report.results["abelian"] = ab.abelian;
    report.line(std::string("abelian: ") + (ab.abelian ? "yes" : "no"));
    report.row({"check", "result", "detail"});
    if (ab.witness) {
        const auto& [u, v] = *ab.witness;
        report.results["witness"] = {format_word(u), format_word(v)};
        report.line("witness: " + word_text(u) + " vs " + word_text(v));
        report.row({"abelian", "no", word_text(u) + " " + word_text(v)});
    } else {
        report.row({"abelian", "yes", ""});
    }

    if (a.uniqueness) {
        UniquenessReport u = abelian_uniqueness_check(probability_table(p, a.r), a.r);
        Json uj;
        uj["q"] = u.q.to_string();
        uj["passed"] = u.passed();
        uj["matches_pq"] = u.matches_pq;
        report.line("q: " + u.q.to_string());
        if (u.failure) {
            const auto& f = *u.failure;
            uj["failure"] = {{"r", f.r},
                             {"i", f.i},
                             {"equation", to_string(f.equation)},
                             {"expected", to_string(f.expected)},
                             {"actual", to_string(f.actual)}};
            report.line("recurrence " + to_string(f.equation) + " fails at (" + std::to_string(f.r) + "," +
                        std::to_string(f.i) + "): expected " + to_string(f.expected) + ", table has " +
                        to_string(f.actual));
            report.row({"uniqueness", "fail",
                        to_string(f.equation) + " at " + std::to_string(f.r) + " " + std::to_string(f.i)});
        } else {
            report.line("recurrences hold; table equals [i]/[r+1]: " + std::string(u.matches_pq ? "yes" : "no"));
            report.row({"uniqueness", "pass", "q=" + u.q.to_string()});
        }
        report.results["uniqueness"] = uj;
    }
    if (a.expect_abelian && !ab.abelian) throw ExpectationFailed("procedure is not abelian");
}

// fibers ---------------------------------------------------------------------

struct FibersArgs {
    int r = 0;
    std::string sigma;
    std::string method = "both";
};

void cmd_fibers(const Common& c, const FibersArgs& a, Report& report)
{
    Procedure p = load_procedure(c);
    bool formula = a.method != "brute";
    bool brute = a.method != "formula";
    if (formula && !(p.flags().memoryless && p.flags().locally_decided))
        throw std::invalid_argument("the fiber formula needs a memoryless, locally decided procedure (try --method brute)");
    auto options = enum_options(c);

    std::vector<std::size_t> sigma;
    int r = a.r;
    if (!a.sigma.empty()) {
        sigma = parse_sequence(a.sigma);
        if (r != 0 && static_cast<std::size_t>(r) != sigma.size())
            throw std::invalid_argument("--sigma has " + std::to_string(sigma.size()) + " entries but --r is " +
                                        std::to_string(r));
        r = static_cast<int>(sigma.size());
    }
    require_r(r);
    check_cap(r, options.cap);
    report.parameters = {{"proc", proc_label(c)}, {"r", r}, {"method", a.method}};

    std::map<std::vector<std::size_t>, Count> brute_table;
    std::vector<Word> parkers;
    if (brute) {
        parkers = parking_words(p, r, options);
        for (const Word& w : parkers) ++brute_table[outcome<Letter>(p, w).arrivals_by_spot()];
    }
    auto brute_at = [&](const std::vector<std::size_t>& s) {
        auto it = brute_table.find(s);
        return it == brute_table.end() ? Count(0) : it->second;
    };

    bool agree = true;
    if (!sigma.empty()) {
        report.parameters["sigma"] = sequence_text(sigma);
        std::string shown;
        if (formula) {
            Count f = fiber_count(p, sigma);
            report.results["formula"] = count_json(f);
            shown = to_string(f);
        }
        if (brute) {
            Count b = brute_at(sigma);
            report.results["brute"] = count_json(b);
            if (formula && to_string(b) != shown) agree = false;
            if (!formula) shown = to_string(b);
        }
        report.line(shown);
        report.row({"sigma", "formula", "brute"});
        report.row({sequence_text(sigma), formula ? to_string(fiber_count(p, sigma)) : "",
                    brute ? to_string(brute_at(sigma)) : ""});
    } else {
        std::vector<std::size_t> perm(static_cast<std::size_t>(r));
        std::iota(perm.begin(), perm.end(), 1);
        Json rows = Json::array();
        Count total = 0;
        report.row({"sigma", "formula", "brute"});
        report.line("sigma  formula  brute");
        do {
            Json row;
            row["sigma"] = sequence_text(perm);
            std::string fs, bs;
            Count f = 0, b = 0;
            if (formula) {
                f = fiber_count(p, perm);
                row["formula"] = count_json(f);
                fs = to_string(f);
            }
            if (brute) {
                b = brute_at(perm);
                row["brute"] = count_json(b);
                bs = to_string(b);
            }
            if (formula && brute && f != b) agree = false;
            total += formula ? f : b;
            rows.push_back(row);
            report.row({sequence_text(perm), fs, bs});
            report.line(sequence_text(perm) + "  " + (fs.empty() ? "-" : fs) + "  " + (bs.empty() ? "-" : bs));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::map<BinaryTree, Count> brute_shapes;
        if (brute)
            for (const Word& w : parkers) ++brute_shapes[encode(p, w).shape.trees().front()];
        Json shapes = Json::array();
        std::vector<Count> multiset;
        for (const BinaryTree& tree : all_binary_trees(static_cast<std::size_t>(r))) {
            Json entry;
            entry["shape"] = tree.to_string();
            Count n = 0;
            if (formula) {
                n = shape_count(p, tree);
                entry["formula"] = count_json(n);
            }
            if (brute) {
                auto it = brute_shapes.find(tree);
                Count b = it == brute_shapes.end() ? Count(0) : it->second;
                entry["brute"] = count_json(b);
                if (formula && b != n) agree = false;
                if (!formula) n = b;
            }
            multiset.push_back(n);
            shapes.push_back(entry);
        }
        std::sort(multiset.rbegin(), multiset.rend());
        Json ms = Json::array();
        for (Count n : multiset) ms.push_back(count_json(n));

        report.results["fibers"] = rows;
        report.results["total"] = count_json(total);
        report.results["shapes"] = shapes;
        report.results["shape_multiset"] = ms;
        report.line("total: " + to_string(total));
        report.line("shape counts: " + list_text<Count>(multiset, [](const Count& n) { return to_string(n); }));
    }
    if (formula && brute) {
        report.results["agree"] = agree;
        if (!agree) {
            report.line("formula and brute force disagree");
            throw ExpectationFailed("formula and brute-force fiber counts disagree");
        }
    }
}

// encode ---------------------------------------------------------------------

struct EncodeArgs {
    std::string word;
};

void cmd_encode(const Common& c, const EncodeArgs& a, Report& report)
{
    Procedure p = load_procedure(c);
    Word w = parse_word_option(a.word);
    report.parameters = {{"proc", proc_label(c)}, {"word", format_word(w)}};

    ForestPair pair = encode(p, w);
    const IndexedForest& forest = pair.shape;
    Count displacement = total_displacement(p, w);
    bool parking = forest.is_single_tree_on_1_to(w.size());

    Json nodes = Json::array();
    report.line("support: " + forest.support().to_string());
    report.line("forest: " + forest.to_string());
    report.row({"spot", "car", "preference", "parent", "side"});
    const auto& spots = forest.support().spots();
    for (std::size_t k = 0; k < spots.size(); ++k) {
        Spot s = spots[k];
        auto parent = forest.parent(s);
        std::string side = parent ? (s < *parent ? "left" : "right") : "root";
        Json node = {{"spot", s}, {"car", pair.q_labels[k]}, {"preference", pair.p_labels[k]}};
        node["parent"] = parent ? Json(*parent) : Json(nullptr);
        node["side"] = side;
        nodes.push_back(node);
        std::string where = parent ? side + " child of " + std::to_string(*parent) : "root";
        report.line("  spot " + std::to_string(s) + ": car " + std::to_string(pair.q_labels[k]) + ", prefers " +
                    std::to_string(pair.p_labels[k]) + ", " + where);
        report.row({std::to_string(s), std::to_string(pair.q_labels[k]), std::to_string(pair.p_labels[k]),
                    parent ? std::to_string(*parent) : "", side});
    }
    Json p_labels = Json::array(), q_labels = Json::array();
    for (Letter l : pair.p_labels) p_labels.push_back(l);
    for (std::size_t l : pair.q_labels) q_labels.push_back(l);

    std::string pl, ql;
    for (std::size_t k = 0; k < pair.p_labels.size(); ++k) {
        pl += (k ? "," : "") + std::to_string(pair.p_labels[k]);
        ql += (k ? "," : "") + std::to_string(pair.q_labels[k]);
    }
    report.line("p-labels: [" + pl + "]");
    report.line("q-labels: [" + ql + "]");
    report.line("displacement: " + to_string(displacement));
    report.line(std::string("parking: ") + (parking ? "yes" : "no"));

    report.results["support"] = forest.support().to_string();
    report.results["forest"] = forest.to_string();
    report.results["nodes"] = nodes;
    report.results["p_labels"] = p_labels;
    report.results["q_labels"] = q_labels;
    report.results["displacement"] = count_json(displacement);
    report.results["parking"] = parking;
    report.results["pair"] = Json::parse(to_json(pair));
}

// flags ----------------------------------------------------------------------

struct FlagsArgs {
    int r = 4;
};

void cmd_flags(const Common& c, const FlagsArgs& a, Report& report)
{
    require_r(a.r);
    Procedure p = load_procedure(c);
    check_cap(a.r, enum_options(c).cap);
    report.parameters = {{"proc", proc_label(c)}, {"r", a.r}};

    FlagReport flags = check_flags(p, a.r);
    Json checks = Json::array();
    report.row({"property", "declared", "holds", "witness"});
    for (const auto& check : flags.checks) {
        Json entry = {{"property", to_string(check.property)}, {"declared", check.declared}, {"holds", check.holds}};
        std::string witness;
        if (check.witness) {
            entry["witness"] = {format_word(check.witness->first), format_word(check.witness->second)};
            witness = word_text(check.witness->first) + " " + word_text(check.witness->second);
        }
        checks.push_back(entry);
        report.line(to_string(check.property) + ": declared " + (check.declared ? "yes" : "no") + ", holds " +
                    (check.holds ? "yes" : "no") + (witness.empty() ? "" : " (" + witness + ")"));
        report.row({to_string(check.property), check.declared ? "yes" : "no", check.holds ? "yes" : "no", witness});
    }
    report.results["checks"] = checks;
    report.results["declared_flags_hold"] = flags.declared_flags_hold();
    if (!flags.declared_flags_hold()) throw ExpectationFailed("a declared property does not hold");
}

// colored --------------------------------------------------------------------

struct ColoredArgs {
    int r = 0;
    std::string word;
    std::string colors = "1,2";
};

void cmd_colored(const Common& c, const ColoredArgs& a, Report& report)
{
    ColoredProcedure p = colored_lbs_procedure();
    report.parameters["proc"] = p.name();

    if (!a.word.empty()) {
        ColoredWord w = parse_colored_word(a.word);
        report.parameters["word"] = format_colored_word(w);
        RunResult result = colored_run(p, w);
        bool parking = result.occupied.is_interval(1, static_cast<Spot>(w.size()));
        report.results["occupied"] = result.occupied.to_string();
        report.results["parking"] = parking;
        report.line("occupied: " + result.occupied.to_string());
        report.line(std::string("parking: ") + (parking ? "yes" : "no"));
        report.row({"occupied", "parking"});
        report.row({result.occupied.to_string(), parking ? "yes" : "no"});
        return;
    }

    if (a.r == 0) throw std::invalid_argument("colored needs --word or --r");
    require_r(a.r);
    std::vector<Color> colors;
    for (Letter col : parse_word(a.colors)) colors.push_back(col);
    auto options = enum_options(c);
    report.parameters["r"] = a.r;
    report.parameters["colors"] = format_word(parse_word(a.colors));

    ColoredOrbitReport audit = colored_orbit_audit(p, distinct_letters_language(), a.r, colors, options);
    Json histogram = Json::object();
    for (const auto& [k, n] : audit.histogram) histogram[to_string(k)] = count_json(n);
    Json violations = Json::array();
    for (const auto& v : audit.violations) {
        Json members = Json::array();
        for (const auto& w : v.members) members.push_back(format_colored_word(w));
        violations.push_back({{"members", members}, {"parking_words", count_json(v.parking_words)}});
    }
    report.results["classes"] = count_json(audit.orbit_count);
    report.results["histogram"] = histogram;
    report.results["violations"] = violations;
    report.line("classes: " + to_string(audit.orbit_count));
    report.line(audit.ok() ? "all classes: 1" : std::to_string(audit.violations.size()) + " classes violate");
    report.row({"classes", "violations"});
    report.row({to_string(audit.orbit_count), std::to_string(audit.violations.size())});
    if (!audit.ok()) throw ExpectationFailed("colored classes without exactly one parking word");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app("Bilateral parking procedures: enumeration, orbits, probabilities, forests.", "parking");
    app.require_subcommand(1);

    Common common;
    Report report;
    std::function<void()> action;

    EnumerateArgs enumerate_args;
    auto* enumerate = app.add_subcommand("enumerate", "count parking words of length r");
    add_common(*enumerate, common);
    enumerate->add_option("--r", enumerate_args.r, "word length")->required();
    enumerate->add_flag("--expect-universal", enumerate_args.expect_universal, "exit 1 unless the count is (r+1)^(r-1)");
    enumerate->add_flag("--list", enumerate_args.list, "list the parking words");
    enumerate->callback([&] { action = [&] { cmd_enumerate(common, enumerate_args, report); }; });

    OrbitsArgs orbits_args;
    auto* orbits = app.add_subcommand("orbits", "parking words per cyclic orbit");
    add_common(*orbits, common);
    orbits->add_option("--r", orbits_args.r, "word length")->required();
    orbits->add_flag("--expect-one", orbits_args.expect_one, "exit 1 if some orbit has other than one parking word");
    orbits->callback([&] { action = [&] { cmd_orbits(common, orbits_args, report); }; });

    ProbArgs prob_args;
    auto* prob = app.add_subcommand("prob", "exact parking probabilities");
    add_common(*prob, common);
    auto* prob_word = prob->add_option("--word", prob_args.word, "preference word, comma separated");
    auto* prob_mass = prob->add_option("--mass", prob_args.mass, "total parking mass over {1..r+1}^r");
    prob_word->excludes(prob_mass);
    prob->add_flag("--orbits", prob_args.orbits, "with --mass, list the mass of each cyclic orbit")->needs(prob_mass);
    prob->add_flag("--expect-universal", prob_args.expect_universal, "with --mass, exit 1 unless the mass is (r+1)^(r-1)")
        ->needs(prob_mass);
    prob->callback([&] { action = [&] { cmd_prob(common, prob_args, report); }; });

    AbelianArgs abelian_args;
    auto* abelian = app.add_subcommand("abelian", "invariance of the occupied-set distribution under reordering");
    add_common(*abelian, common);
    abelian->add_option("--r", abelian_args.r, "largest word length")->required();
    abelian->add_flag("--uniqueness", abelian_args.uniqueness, "check the p(r,i) recurrences of the rule table");
    abelian->add_flag("--expect-abelian", abelian_args.expect_abelian, "exit 1 if a witness is found");
    abelian->callback([&] { action = [&] { cmd_abelian(common, abelian_args, report); }; });

    FibersArgs fibers_args;
    auto* fibers = app.add_subcommand("fibers", "parking words per outcome permutation and per tree shape");
    add_common(*fibers, common);
    fibers->add_option("--r", fibers_args.r, "word length");
    fibers->add_option("--sigma", fibers_args.sigma, "a single permutation, comma separated");
    fibers->add_option("--method", fibers_args.method, "formula, brute or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    fibers->callback([&] { action = [&] { cmd_fibers(common, fibers_args, report); }; });

    EncodeArgs encode_args;
    auto* encode_cmd = app.add_subcommand("encode", "forest pair of a word");
    add_common(*encode_cmd, common);
    encode_cmd->add_option("--word", encode_args.word, "preference word, comma separated")->required();
    encode_cmd->callback([&] { action = [&] { cmd_encode(common, encode_args, report); }; });

    FlagsArgs flags_args;
    auto* flags = app.add_subcommand("flags", "test declared properties exhaustively");
    add_common(*flags, common);
    flags->add_option("--r", flags_args.r, "largest word length");
    flags->callback([&] { action = [&] { cmd_flags(common, flags_args, report); }; });

    ColoredArgs colored_args;
    auto* colored = app.add_subcommand("colored", "colored LBS on words with distinct letters");
    add_common(*colored, common);
    auto* colored_r = colored->add_option("--r", colored_args.r, "word length for the class audit");
    colored->add_option("--word", colored_args.word, "colored word, value:color comma separated")->excludes(colored_r);
    colored->add_option("--colors", colored_args.colors, "color window, comma separated");
    colored->callback([&] { action = [&] { cmd_colored(common, colored_args, report); }; });

    std::vector<std::string> argv_store{"parking"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, err, err);
        return kInputError;
    }

    Format format = Format::Table;
    try {
        format = parse_format(common.format);
        report.command = app.get_subcommands().front()->get_name();
        auto start = std::chrono::steady_clock::now();
        int code = kOk;
        try {
            action();
        } catch (const ExpectationFailed& e) {
            err << "expectation failed: " << e.what() << "\n";
            code = kExpectationFailed;
        }
        if (common.timing)
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.render(out, format);
        return code;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace parking::cli
