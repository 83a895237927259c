// cores: command-line front end for the core-partition library.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cores/cores.hpp"
#include "cores/toolkit/json_io.hpp"
#include "cores/toolkit/render.hpp"
#include "cores/toolkit/text.hpp"
#include "cores/toolkit/verify.hpp"

namespace {

using namespace cores;
using json_io::json;

constexpr int kUsage = 1;
constexpr int kDomain = 2;
constexpr int kVerifyFailed = 3;

struct Args {
    bool json = false;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::string partition;
    std::string point;
    std::string word;
    std::string action;
    std::string suite = "all";
    std::string mode = "cores";
    std::string output;
    std::int64_t depth = 5;
    verify::Options verify;
};

void emit(const Args& a, const json& doc, const std::string& plain) {
    if (a.json)
        std::cout << doc.dump() << '\n';
    else
        std::cout << plain << '\n';
}

std::string records(const std::vector<std::pair<std::string, SSet>>& steps) {
    std::string out;
    for (std::size_t n = 0; n < steps.size(); ++n) {
        if (n) out += '\n';
        out += "step " + std::to_string(n) + ": gen=" + steps[n].first + " sset=" + text::format(steps[n].second) +
               " core=" + text::format(core_from_s_set(steps[n].second));
    }
    return out;
}

int cmd_core(const Args& a) {
    const Partition p = text::parse_partition(a.partition);
    const Partition c = core(p, a.s);
    emit(a, json_io::envelope(json_io::to_json(p), json_io::to_json(c), a.s), text::format(c));
    return 0;
}

int cmd_qset(const Args& a) {
    const Partition p = text::parse_partition(a.partition);
    const SSet q = q_set(p, a.s);
    emit(a, json_io::envelope(json_io::to_json(p), json_io::to_json(q), a.s), text::format(q));
    return 0;
}

int cmd_act(const Args& a) {
    const SPoint p = text::parse_s_point(a.point);
    if (p.s() != a.s) throw DomainError("point has " + std::to_string(p.s()) + " coordinates but --s is " + std::to_string(a.s));
    const Word w = text::parse_word(a.word);
    const SPoint q = apply_word(w, a.action == "psi" ? Action::psi : Action::chi, a.t, p);
    json input{{"action", a.action}, {"word", w}, {"point", json_io::to_json(p)}};
    emit(a, json_io::envelope(std::move(input), json_io::to_json(q), a.s, a.t), text::format(q));
    return 0;
}

int cmd_kappa(const Args& a) {
    const Partition k = kappa(a.s, a.t);
    emit(a, json_io::envelope(nullptr, json_io::to_json(k), a.s, a.t), text::format(k));
    return 0;
}

int cmd_count(const Args& a) {
    const std::int64_t n = anderson_count(a.s, a.t);
    emit(a, json_io::envelope(nullptr, n, a.s, a.t), std::to_string(n));
    return 0;
}

int cmd_enumerate(const Args& a) {
    const auto all = enumerate_st_cores(a.s, a.t);
    json result = json::array();
    std::string plain;
    for (std::size_t n = 0; n < all.size(); ++n) {
        result.push_back(json_io::to_json(all[n]));
        if (n) plain += '\n';
        plain += text::format(all[n]);
    }
    emit(a, json_io::envelope(nullptr, result, a.s, a.t), plain);
    return 0;
}

int cmd_orbit_min(const Args& a) {
    const Partition p = text::parse_partition(a.partition);
    const auto res = descend_to_t_core(p, a.s, a.t);
    std::vector<std::pair<std::string, SSet>> steps{{"-", q_set(p, a.s)}};
    for (const auto& st : res.trace.steps) steps.emplace_back(std::to_string(st.generator), st.s_set);
    emit(a, json_io::envelope(json_io::to_json(p), json_io::to_json(res.trace), a.s, a.t), records(steps));
    return 0;
}

int cmd_chain(const Args& a) {
    const SPoint p = text::parse_s_point(a.point);
    const auto chain = containment_chain(p, a.s, a.t);
    std::vector<std::pair<std::string, SSet>> steps{{"-", chain.points.front().to_s_set()}};
    for (std::size_t l = 0; l < chain.generators.size(); ++l)
        steps.emplace_back(std::to_string(chain.generators[l]), chain.points[l + 1].to_s_set());
    emit(a, json_io::envelope(json_io::to_json(p), json_io::to_json(chain), a.s, a.t), records(steps));
    return 0;
}

int cmd_verify(const Args& a) {
    const auto checks = verify::run(a.suite, a.verify);
    bool ok = true;
    json rows = json::array();
    for (const auto& c : checks) {
        ok = ok && c.passed();
        rows.push_back({{"suite", c.suite}, {"check", c.name}, {"cases", c.cases}, {"failures", c.failures},
                        {"first_failure", c.first_failure}});
    }
    if (a.json) {
        json input{{"suite", a.suite}, {"s_max", a.verify.s_max}, {"t_max", a.verify.t_max},
                   {"seed", a.verify.seed}, {"trials", a.verify.trials}};
        std::cout << json_io::envelope(std::move(input), rows, a.verify.s_max, a.verify.t_max).dump() << '\n';
    } else {
        std::cout << verify::report(checks);
    }
    return ok ? 0 : kVerifyFailed;
}

int cmd_diagram(const Args& a) {
    render::RenderSpec spec;
    spec.s = a.s;
    spec.t = a.t > 0 ? a.t : 1;
    spec.depth = a.depth;
    spec.mode = a.mode == "tcores" ? render::Mode::tcores : render::Mode::cores;
    const std::string doc = render::svg(spec);
    if (!a.output.empty()) {
        std::ofstream out(a.output, std::ios::binary);
        if (!out) throw DomainError("cannot open " + a.output + " for writing");
        out << doc;
    }
    if (a.json) {
        json input{{"mode", a.mode}, {"depth", a.depth}};
        json result{{"svg", a.output.empty() ? json(doc) : json(a.output)}};
        std::cout << json_io::envelope(std::move(input), std::move(result), spec.s, spec.t).dump() << '\n';
    } else if (a.output.empty()) {
        std::cout << doc;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Core partitions, abacus displays and alcove geometry"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_flag("--json", a.json, "Emit a JSON document instead of text");

    auto s_opt = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--s", a.s, "Modulus s");
        if (required) opt->required();
    };
    auto t_opt = [&](CLI::App* sub) { sub->add_option("--t", a.t, "Level / second modulus t")->required(); };

    int (*handler)(const Args&) = nullptr;

    auto* core_cmd = app.add_subcommand("core", "s-core of a partition");
    s_opt(core_cmd);
    core_cmd->add_option("partition", a.partition, "Parts, comma separated")->required();
    core_cmd->callback([&] { handler = cmd_core; });

    auto* qset_cmd = app.add_subcommand("qset", "s-set Q of an s-core");
    s_opt(qset_cmd);
    qset_cmd->add_option("partition", a.partition, "Parts, comma separated")->required();
    qset_cmd->callback([&] { handler = cmd_qset; });

    auto* act_cmd = app.add_subcommand("act", "Apply a generator word to an s-point");
    act_cmd->add_option("action", a.action, "psi or chi")->required()->check(CLI::IsMember({"psi", "chi"}));
    s_opt(act_cmd);
    t_opt(act_cmd);
    act_cmd->add_option("--word", a.word, "Space-separated generator indices");
    act_cmd->add_option("point", a.point, "s-point, e.g. (0,1,2)")->required();
    act_cmd->callback([&] { handler = cmd_act; });

    auto* kappa_cmd = app.add_subcommand("kappa", "Largest (s,t)-core");
    s_opt(kappa_cmd);
    t_opt(kappa_cmd);
    kappa_cmd->callback([&] { handler = cmd_kappa; });

    auto* count_cmd = app.add_subcommand("count", "Number of (s,t)-cores");
    s_opt(count_cmd);
    t_opt(count_cmd);
    count_cmd->callback([&] { handler = cmd_count; });

    auto* enum_cmd = app.add_subcommand("enumerate", "List all (s,t)-cores");
    s_opt(enum_cmd);
    t_opt(enum_cmd);
    enum_cmd->callback([&] { handler = cmd_enumerate; });

    auto* orbit_cmd = app.add_subcommand("orbit-min", "Descend a level-t orbit to its t-core");
    s_opt(orbit_cmd);
    t_opt(orbit_cmd);
    orbit_cmd->add_option("partition", a.partition, "An s-core")->required();
    orbit_cmd->callback([&] { handler = cmd_orbit_min; });

    auto* chain_cmd = app.add_subcommand("chain", "Containment chain from a rhomboid point to the tip");
    s_opt(chain_cmd);
    t_opt(chain_cmd);
    chain_cmd->add_option("point", a.point, "s-point folding into the rhomboid")->required();
    chain_cmd->callback([&] { handler = cmd_chain; });

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", a.suite, "core-oracle, actions, olsson, vandehey or all")
        ->check(CLI::IsMember({"core-oracle", "actions", "olsson", "vandehey", "all"}));
    verify_cmd->add_option("--s-max", a.verify.s_max)->check(CLI::Range(2, 12));
    verify_cmd->add_option("--t-max", a.verify.t_max)->check(CLI::Range(2, 12));
    verify_cmd->add_option("--seed", a.verify.seed);
    verify_cmd->add_option("--trials", a.verify.trials)->check(CLI::PositiveNumber);
    verify_cmd->callback([&] { handler = cmd_verify; });

    auto* diagram_cmd = app.add_subcommand("diagram", "SVG of dominant alcoves of P^3 labelled by cores");
    s_opt(diagram_cmd);
    diagram_cmd->add_option("--t", a.t, "Level for tcores mode");
    diagram_cmd->add_option("--depth", a.depth, "Alcove rows from the fundamental alcove");
    diagram_cmd->add_option("--mode", a.mode)->check(CLI::IsMember({"cores", "tcores"}));
    diagram_cmd->add_option("-o,--output", a.output, "Write the SVG here instead of stdout");
    diagram_cmd->callback([&] { handler = cmd_diagram; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (diagram_cmd->parsed() && a.mode == "tcores" && a.t == 0)
            throw DomainError("tcores mode requires --t");
        return handler(a);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
}
