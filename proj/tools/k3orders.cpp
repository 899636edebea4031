// Command-line front end: classification of finite automorphism orders of
// K3 surfaces, certificate inspection, scripted lemma replays and the
// example-surface verifier. Deterministic output; no timestamps.

#include "k3o/errors.hpp"
#include "k3o/serialize.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <set>

namespace {

using namespace k3o;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string status_line(const ReplayAssertion& a) {
    std::string s = a.status == AssertStatus::Pass ? "pass"
                    : a.status == AssertStatus::Fail ? "FAIL"
                                                     : "geometry";
    return "  [" + s + "] " + a.claim + "  -- " + a.computed;
}

int cmd_classify(const Options& opt, Int characteristic, Int order) {
    auto one_order = [&](Int n) -> json {
        if (characteristic == 0 || n % characteristic != 0) {
            OrderVerdict v = classify_order(n, characteristic);
            return to_json(v);
        }
        // characteristic divides the order: the wild module answers.
        if (characteristic == 5 || characteristic == 7 ||
            characteristic == 11) {
            auto cls = classify_wild(characteristic);
            Int cofactor = n / characteristic;
            auto it = cls.find(cofactor);
            json j{{"order", n}, {"characteristic", characteristic}};
            if (n % (characteristic * characteristic) == 0 &&
                it == cls.end()) {
                // higher p-power orders fall outside the cofactor map only
                // when p^2 * cofactor leaves the candidate universe
                j["verdict"] = "infeasible";
                j["wild"] = {{"status", "SpectrallyInfeasible"}};
                return j;
            }
            if (it == cls.end()) {
                j["verdict"] = "infeasible";
                j["wild"] = {{"status", "SpectrallyInfeasible"},
                             {"note", "outside the candidate universe"}};
                return j;
            }
            j["verdict"] = it->second.status == WildStatus::Realized
                               ? "feasible"
                               : "infeasible";
            j["wild"] = to_json(it->second);
            return j;
        }
        json j{{"order", n}, {"characteristic", characteristic}};
        if (characteristic == 2 || characteristic == 3) {
            j["verdict"] = "unknown";
            j["note"] = "wild case in characteristic 2 and 3 is out of scope";
        } else {
            j["verdict"] = "infeasible";
            j["note"] = "no wild automorphisms exist in characteristic > 11";
        }
        return j;
    };

    if (order > 0) {
        json j = one_order(order);
        if (opt.json()) {
            emit(j);
        } else {
            std::cout << "order " << order << " in characteristic "
                      << characteristic << ": "
                      << j.at("verdict").get<std::string>() << "\n";
            if (j.contains("shapes")) {
                for (const auto& s : j.at("shapes")) {
                    std::cout << "  shape " << s.at("m").get<Int>() << "."
                              << s.at("n").get<Int>() << ": "
                              << s.at("verdict").get<std::string>() << "\n";
                    for (const auto& w : s.at("witnesses"))
                        std::cout << "    witness "
                                  << w.at("bracket").get<std::string>() << "\n";
                    for (const auto& c : s.at("certificates"))
                        std::cout << "    certificate "
                                  << c.at("rule").get<std::string>()
                                  << " (divisor "
                                  << c.at("divisor").get<Int>() << ", value "
                                  << c.at("value").get<Int>() << ")\n";
                }
            }
            if (j.contains("wild")) {
                const json& w = j.at("wild");
                std::cout << "  wild status: "
                          << w.at("status").get<std::string>() << "\n";
                if (w.contains("example"))
                    std::cout << "  example: "
                              << w.at("example").get<std::string>() << "\n";
                if (w.contains("flags"))
                    for (const auto& f : w.at("flags"))
                        std::cout << "  geometry flag: "
                                  << f.get<std::string>() << "\n";
            }
            if (j.contains("note"))
                std::cout << "  note: " << j.at("note").get<std::string>()
                          << "\n";
        }
        return 0;
    }

    // Full classification over the candidate universe.
    json all = json::array();
    std::set<Int> feasible;
    for (Int n : candidate_orders()) {
        json j = one_order(n);
        if (j.at("verdict") == "feasible") feasible.insert(n);
        all.push_back(json{{"order", n}, {"verdict", j.at("verdict")}});
    }
    if (opt.json()) {
        emit(json{{"characteristic", characteristic},
                  {"orders", all},
                  {"feasible", std::vector<Int>(feasible.begin(),
                                                feasible.end())}});
    } else {
        std::cout << "feasible orders in characteristic " << characteristic
                  << ":";
        for (Int n : feasible) std::cout << ' ' << n;
        std::cout << "\nmaximum: " << *feasible.rbegin() << "\n";
    }
    return 0;
}

int cmd_shape(const Options& opt, Int m, Int n, Int characteristic) {
    ShapeVerdict v = classify_shape({m, n}, characteristic);
    if (opt.json()) {
        emit(to_json(v));
    } else {
        std::cout << "shape " << m << "." << n << " (order " << m * n
                  << "): " << (v.feasible ? "feasible" : "infeasible") << "\n";
        for (const auto& w : v.witnesses)
            std::cout << "  witness " << format_bracket(w) << "\n";
        for (const auto& c : v.certificates) {
            std::cout << "  certificate " << rule_name(c.rule);
            if (c.profile) std::cout << " on " << format_bracket(*c.profile);
            std::cout << " (divisor " << c.divisor << ", value " << c.value
                      << ") " << c.note << "\n";
        }
    }
    return 0;
}

int cmd_sets(const Options& opt, Int characteristic) {
    json j = sets_json(characteristic);
    if (opt.json()) {
        emit(j);
        return 0;
    }
    auto print_set = [&](const char* name, const json& arr) {
        std::cout << name << ":";
        for (const auto& v : arr) std::cout << ' ' << v.get<Int>();
        std::cout << "\n";
    };
    print_set("Ord", j.at("ord"));
    std::cout << "max Ord: " << j.at("ord_max").get<Int>() << "\n";
    if (j.contains("tv")) {
        print_set("TV", j.at("tv"));
        std::cout << "max TV: " << j.at("tv_max").get<Int>() << "\n";
        print_set("B", j.at("b"));
        std::cout << "beta: " << j.at("beta").get<Int>() << "\n";
    }
    if (j.contains("tame_only"))
        std::cout << "(tame orders only: the wild case in characteristic "
                  << characteristic << " is out of scope)\n";
    return 0;
}

int cmd_table1(const Options& opt) {
    if (opt.json()) {
        emit(table1_json());
        return 0;
    }
    auto t = table1();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        std::cout << "phi = " << it->first << ":";
        for (Int n : it->second) std::cout << ' ' << n;
        std::cout << "\n";
    }
    return 0;
}

int cmd_replay(const Options& opt, const std::string& id, bool all) {
    std::vector<std::string> ids;
    if (all)
        ids = replay_catalog();
    else
        ids.push_back(id);

    bool ok = true;
    json out = json::array();
    for (const auto& lid : ids) {
        ReplayReport r = replay_lemma(lid);
        ok = ok && r.all_ok();
        if (opt.json()) {
            out.push_back(to_json(r));
        } else {
            std::cout << r.lemma << ": " << r.title << "\n";
            for (const auto& a : r.assertions)
                std::cout << status_line(a) << "\n";
            std::cout << (r.all_ok() ? "  => all assertions pass"
                                     : "  => FAILURES present")
                      << "\n";
        }
    }
    if (opt.json()) emit(out);
    return ok ? 0 : 1;
}

int cmd_verify(const Options& opt, Int characteristic, const std::string& id) {
    bool ok = true;
    if (!id.empty()) {
        VerificationReport r = verify_entry(id, characteristic);
        ok = r.all_pass();
        if (opt.json()) {
            emit(to_json(r));
        } else {
            std::cout << r.id << " in characteristic " << characteristic
                      << ":\n";
            for (const auto& c : r.checks)
                std::cout << "  " << c.name << ": "
                          << (c.skipped ? "skipped"
                                        : (c.passed ? "pass" : "FAIL"))
                          << " (" << c.detail << ")\n";
        }
        return ok ? 0 : 1;
    }
    VerifySummary s = verify_all(characteristic);
    ok = s.passed == s.entries;
    if (opt.json()) {
        emit(to_json(s));
    } else {
        std::cout << "characteristic " << characteristic << ": " << s.passed
                  << "/" << s.entries << " entries pass\n";
        for (const auto& r : s.reports) {
            std::cout << "  " << r.id << ": "
                      << (r.all_pass() ? "pass" : "FAIL") << "\n";
            if (!r.all_pass())
                for (const auto& c : r.checks)
                    if (!c.skipped && !c.passed)
                        std::cout << "    " << c.name << ": " << c.detail
                                  << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_bounds(const Options& opt, Int p) {
    json j = bounds_json(p);
    if (opt.json()) {
        emit(j);
        return 0;
    }
    std::cout << "characteristic " << p << ", beta = " << j.at("beta").get<Int>()
              << "\n";
    if (j.contains("m22_bound"))
        std::cout << "group order bound: " << j.at("m22_bound").get<Int>()
                  << " = beta * " << kM22Order << "\n";
    else
        std::cout << "exceptional bound: " << j.at("exceptional").get<Int>()
                  << " = beta * " << kM21Order
                  << "\nnon-exceptional bound: "
                  << j.at("non_exceptional").get<Int>() << " = 66 * "
                  << kM20Order << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of finite automorphism orders of K3 "
                 "surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    Int cls_char = 0, cls_order = 0;
    auto* classify = app.add_subcommand(
        "classify", "classify all candidate orders or one order");
    classify->add_option("--char", cls_char, "characteristic (0 or a prime)");
    classify->add_option("--order", cls_order, "single order to classify");

    Int sh_m = 1, sh_n = 1, sh_char = 0;
    auto* shape =
        app.add_subcommand("shape", "classify one order shape m.n");
    shape->add_option("--m", sh_m, "symplectic kernel order")->required();
    shape->add_option("--n", sh_n, "non-symplectic image order")->required();
    shape->add_option("--char", sh_char, "characteristic");

    Int sets_char = 0;
    auto* sets = app.add_subcommand("sets", "order sets, TV, B and beta");
    sets->add_option("--char", sets_char, "characteristic")->required();

    auto* table = app.add_subcommand("table1", "totient classes up to 21");

    std::string lemma_id;
    bool replay_all = false;
    auto* replay = app.add_subcommand("replay", "scripted lemma replays");
    replay->add_option("--lemma", lemma_id, "replay id (see --all)");
    replay->add_flag("--all", replay_all, "run the whole catalog");

    Int ver_char = 0;
    std::string ver_id;
    auto* verify =
        app.add_subcommand("verify", "verify the example-surface catalog");
    verify->add_option("--char", ver_char, "characteristic")->required();
    verify->add_option("--id", ver_id, "verify a single entry");

    Int bounds_p = 0;
    auto* bounds =
        app.add_subcommand("bounds", "finite group order bounds");
    bounds->add_option("--char", bounds_p, "characteristic (>= 11)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) return cmd_classify(opt, cls_char, cls_order);
        if (*shape) return cmd_shape(opt, sh_m, sh_n, sh_char);
        if (*sets) return cmd_sets(opt, sets_char);
        if (*table) return cmd_table1(opt);
        if (*replay) {
            if (!replay_all && lemma_id.empty()) {
                std::cerr << "replay needs --lemma or --all\n";
                return 2;
            }
            return cmd_replay(opt, lemma_id, replay_all);
        }
        if (*verify) return cmd_verify(opt, ver_char, ver_id);
        if (*bounds) return cmd_bounds(opt, bounds_p);
    } catch (const UnknownLemma& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownEntry& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CharacteristicNotAdmissible& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const WildOrder& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
