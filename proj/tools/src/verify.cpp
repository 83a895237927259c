#include "cores/toolkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cores/cores.hpp"
#include "cores/toolkit/sampling.hpp"
#include "cores/toolkit/text.hpp"

namespace cores::verify {

namespace {

// Largest partition size swept exhaustively by the oracle suite.
constexpr std::int64_t kOracleSize = 16;
// Size bound for random s-cores in the Olsson suite.
constexpr std::int64_t kRandomCoreSize = 200;

class Recorder {
public:
    Recorder(std::vector<Check>& out, std::string suite, std::string name)
        : out_(out), index_(out.size()) {
        out_.push_back(Check{std::move(suite), std::move(name), 0, 0, {}});
    }

    void expect(bool ok, const std::function<std::string()>& describe) {
        Check& c = out_[index_];
        ++c.cases;
        if (ok) return;
        if (c.failures++ == 0) c.first_failure = describe();
    }

private:
    std::vector<Check>& out_;
    std::size_t index_;
};

std::string pair_label(std::int64_t s, std::int64_t t) {
    return "s=" + std::to_string(s) + " t=" + std::to_string(t);
}

void core_oracle_suite(const Options& o, std::vector<Check>& out) {
    const std::string suite = "core-oracle";
    std::vector<Partition> corpus;
    for (std::int64_t n = 0; n <= kOracleSize; ++n) {
        auto ps = partitions_of(n);
        corpus.insert(corpus.end(), ps.begin(), ps.end());
    }
    {
        Recorder r(out, suite, "abacus core equals rim-hook removal");
        for (std::int64_t s = 1; s <= o.s_max; ++s)
            for (const auto& p : corpus)
                r.expect(core(p, s) == brute_core(p, s),
                         [&] { return "p=" + text::format(p) + " s=" + std::to_string(s); });
    }
    {
        Recorder r(out, suite, "hook criterion equals abacus criterion");
        for (std::int64_t s = 1; s <= o.s_max; ++s)
            for (const auto& p : corpus)
                r.expect(is_s_core(p, s) == is_s_core_by_hooks(p, s),
                         [&] { return "p=" + text::format(p) + " s=" + std::to_string(s); });
    }
    {
        Recorder r(out, suite, "q_set round trip on s-cores");
        for (std::int64_t s = 2; s <= o.s_max; ++s)
            for (const auto& p : corpus)
                if (is_s_core(p, s))
                    r.expect(core_from_s_set(q_set(p, s)) == p,
                             [&] { return "p=" + text::format(p) + " s=" + std::to_string(s); });
    }
    {
        Recorder r(out, suite, "level-1 residue action equals box toggle");
        for (std::int64_t s = 2; s <= o.s_max; ++s)
            for (const auto& p : corpus)
                if (is_s_core(p, s))
                    for (std::int64_t i = 0; i < s; ++i)
                        r.expect(chi_on_core(i, 1, p, s) == toggle_residue(p, chi1_toggle_residue(i), s), [&] {
                            return "p=" + text::format(p) + " s=" + std::to_string(s) + " i=" + std::to_string(i);
                        });
    }
}

void actions_suite(const Options& o, std::vector<Check>& out) {
    const std::string suite = "actions";
    sampling::Rng rng(o.seed);
    Recorder involution(out, suite, "generators are involutions");
    Recorder commuting(out, suite, "commuting relations");
    Recorder braid(out, suite, "braid relations");
    Recorder commute(out, suite, "reflection and residue actions commute on alcoves");
    Recorder adjacency(out, suite, "level-1 residue generators move to adjacent alcoves");
    Recorder rotation(out, suite, "alpha has order s");
    Recorder walls(out, suite, "reflections permute hyperplanes consistently");

    for (auto [s, t] : sampling::coprime_pairs(2, o.s_max, 1, o.t_max)) {
        for (std::int64_t trial = 0; trial < o.trials; ++trial) {
            const SPoint p = sampling::random_s_point(rng, s, 6);
            const auto where = [&] { return pair_label(s, t) + " p=" + text::format(p); };
            for (Action act : {Action::psi, Action::chi}) {
                for (std::int64_t i = 0; i < s; ++i) {
                    involution.expect(apply_word(Word{i, i}, act, t, p) == p, where);
                    for (std::int64_t j = i + 1; j < s; ++j) {
                        const bool adjacent = mod(i - j - 1, s) == 0 || mod(i - j + 1, s) == 0;
                        if (!adjacent) {
                            commuting.expect(apply_word(Word{i, j}, act, t, p) == apply_word(Word{j, i}, act, t, p), where);
                        } else if (s >= 3) {
                            braid.expect(apply_word(Word{i, j, i}, act, t, p) == apply_word(Word{j, i, j}, act, t, p), where);
                        }
                    }
                }
            }
            for (std::int64_t a = 0; a < s; ++a)
                for (std::int64_t b = 0; b < s; ++b)
                    commute.expect(alcove_key(psi_gen(a, t, chi_gen(b, t, p))) == alcove_key(chi_gen(b, t, psi_gen(a, t, p))), where);
            for (std::int64_t i = 0; i < s; ++i)
                adjacency.expect(separating_hyperplanes(p, chi_gen(i, 1, p)).size() == 1, where);
            SPoint q = p;
            for (std::int64_t n = 0; n < s; ++n) q = alpha(q, t);
            rotation.expect(q == p, where);

            const std::int64_t i1 = rng.uniform(1, s - 1);
            const Hyperplane h(rng.uniform(1, i1), i1 + 1, rng.uniform(-3, 3));
            const std::int64_t i2 = rng.uniform(1, s - 1);
            const Hyperplane mirror(rng.uniform(1, i2), i2 + 1, rng.uniform(-3, 3));
            // reflections may reverse a hyperplane's orientation, so compare relative sides
            const SPoint other = sampling::random_s_point(rng, s, 6);
            const Hyperplane image = reflect_hyperplane(h, mirror, s);
            walls.expect(side_of(reflect(p, mirror), image) * side_of(reflect(other, mirror), image) ==
                             side_of(p, h) * side_of(other, h),
                         where);
        }
    }
    Recorder agree(out, suite, "level-1 actions agree on the fundamental alcove");
    for (std::int64_t s = 2; s <= o.s_max; ++s)
        for (std::int64_t i = 0; i < s; ++i)
            agree.expect(alcove_key(psi_gen(i, 1, origin(s))) == alcove_key(chi_gen(i, 1, origin(s))),
                         [&] { return "s=" + std::to_string(s) + " i=" + std::to_string(i); });
}

void olsson_suite(const Options& o, std::vector<Check>& out) {
    const std::string suite = "olsson";
    sampling::Rng rng(o.seed);
    const auto pairs = sampling::coprime_pairs(2, o.s_max, 2, o.t_max);
    Recorder olsson(out, suite, "t-core of an s-core is an s-core");
    Recorder descent(out, suite, "orbit descent reaches the abacus t-core");
    Recorder chi(out, suite, "residue action preserves the t-core");
    Recorder psi(out, suite, "reflection action and rotation preserve the t-core");
    for (std::int64_t trial = 0; trial < o.trials; ++trial) {
        const auto [s, t] = pairs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pairs.size()) - 1))];
        const Partition lambda = sampling::random_s_core(rng, s, kRandomCoreSize);
        const auto where = [&] { return pair_label(s, t) + " lambda=" + text::format(lambda); };
        const Partition nu = core(lambda, t);
        olsson.expect(is_s_core(nu, s), where);

        const auto result = descend_to_t_core(lambda, s, t);
        bool decreasing = true;
        std::int64_t energy = q_set(lambda, s).sum_of_squares();
        for (const auto& step : result.trace.steps) {
            decreasing = decreasing && step.s_set.sum_of_squares() < energy;
            energy = step.s_set.sum_of_squares();
        }
        descent.expect(decreasing && result.t_core == nu, where);

        const std::int64_t i = rng.uniform(0, s - 1);
        chi.expect(core(chi_on_core(i, t, lambda, s), t) == nu, where);
        const SPoint p = SPoint::from_s_set(q_set(lambda, s));
        const auto t_core_of = [&](const SPoint& x) { return core(core_from_s_set(x.to_s_set()), t); };
        psi.expect(t_core_of(psi_gen(i, t, p)) == nu && t_core_of(alpha(p, t)) == nu, where);
    }
}

void vandehey_suite(const Options& o, std::vector<Check>& out) {
    const std::string suite = "vandehey";
    Recorder count(out, suite, "rhomboid enumeration matches the Anderson count");
    Recorder largest(out, suite, "largest core has size (s^2-1)(t^2-1)/24");
    Recorder contained(out, suite, "every (s,t)-core lies inside kappa");
    Recorder chains(out, suite, "galleries to the tip grow monotonically to kappa");
    for (auto [s, t] : sampling::coprime_pairs(2, o.s_max, 2, o.t_max)) {
        const auto where = [&] { return pair_label(s, t); };
        const Partition top = kappa(s, t);
        const auto all = enumerate_st_cores(s, t);
        count.expect(static_cast<std::int64_t>(all.size()) == anderson_count(s, t), where);
        largest.expect(24 * top.size() == (s * s - 1) * (t * t - 1), where);
        for (const auto& nu : all)
            contained.expect(contains(top, nu), [&] { return where() + " nu=" + text::format(nu); });
        for (const auto& p : rhomboid_points(s, t)) {
            const auto chain = containment_chain(p, s, t);
            chains.expect(chain.monotone() && chain.cores.back() == top,
                          [&] { return where() + " p=" + text::format(p); });
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core-oracle", "actions", "olsson", "vandehey"};
    return names;
}

std::vector<Check> run(std::string_view suite, const Options& options) {
    if (options.s_max < 2 || options.t_max < 2) throw DomainError("--s-max and --t-max must be at least 2");
    if (options.trials < 1) throw DomainError("--trials must be positive");
    std::vector<Check> out;
    const bool all = suite == "all";
    bool matched = all;
    if (all || suite == "core-oracle") core_oracle_suite(options, out), matched = true;
    if (all || suite == "actions") actions_suite(options, out), matched = true;
    if (all || suite == "olsson") olsson_suite(options, out), matched = true;
    if (all || suite == "vandehey") vandehey_suite(options, out), matched = true;
    if (!matched) throw DomainError("unknown suite '" + std::string(suite) + "'");
    return out;
}

std::string report(const std::vector<Check>& checks) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.suite.size() + c.name.size() + 3);
    for (const auto& c : checks) {
        os << (c.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
           << (c.suite + " / " + c.name) << "  " << c.cases << " cases";
        if (!c.passed()) os << ", " << c.failures << " failed; first: " << c.first_failure;
        os << '\n';
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); });
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    return os.str();
}

}  // namespace cores::verify
