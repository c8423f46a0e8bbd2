// Command-line frontend: prime sets, overlap enumeration, classification
// verification, triple/quadruple overlap search, and design reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <nearring/classification.hpp>
#include <nearring/designs.hpp>
#include <nearring/primes.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace nearring;

namespace {

enum class Format { Text, Json, Csv };

struct CommonOpts {
    bool as_json = false;
    bool as_csv = false;
    Format format() const { return as_json ? Format::Json : as_csv ? Format::Csv : Format::Text; }
};

void add_format_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--json", o.as_json, "emit JSON");
    cmd->add_flag("--csv", o.as_csv, "emit CSV");
}

struct FieldOpts {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::string modulus;
    int generator = -1;      // index into elements_of_order
    bool all_generators = false;
};

void add_field_flags(CLI::App* cmd, FieldOpts& f, bool required) {
    auto* po = cmd->add_option("--p", f.p, "field characteristic (prime)");
    if (required) po->required();
    cmd->add_option("--m", f.m, "extension degree (default 1)");
    cmd->add_option("--modulus", f.modulus,
                    "field modulus as comma-separated coefficients, constant term first");
    cmd->add_option("--generator", f.generator,
                    "index of the order-k generator among elements_of_order (default 0)");
    cmd->add_flag("--all-generators", f.all_generators, "union of overlaps over all generators");
}

Coeffs parse_coeffs(const std::string& s) {
    Coeffs out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return out;
}

Field make_field(const FieldOpts& f) {
    std::optional<Coeffs> mod;
    if (!f.modulus.empty()) mod = parse_coeffs(f.modulus);
    return Field(f.p, f.m, mod);
}

json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json quad_json(const Quad& q) { return json::array({q.i, q.j, q.s, q.t}); }

json class_json(const OverlapClass& c) {
    json j;
    j["i"] = c.canonical.i;
    j["j"] = c.canonical.j;
    j["s"] = c.canonical.s;
    j["t"] = c.canonical.t;
    j["witnesses"] = c.witnesses;
    j["family"] = family_name(c.family);
    return j;
}

void emit_prime_report(const PrimeSetReport& rep, const CommonOpts& fmt, bool provenance) {
    switch (fmt.format()) {
        case Format::Json: {
            json j;
            j["k"] = rep.k;
            j["primes"] = json::array();
            for (const auto& p : rep.primes) j["primes"].push_back(mpz_json(p));
            if (provenance) {
                json prov = json::object();
                for (const auto& p : rep.primes) {
                    std::string key = p.get_str();
                    auto it = rep.provenance.find(p);
                    json entries = json::array();
                    if (rep.from_k.count(p)) entries.push_back("divides k");
                    if (it != rep.provenance.end())
                        for (const auto& w : it->second) {
                            json e;
                            e["quad"] = quad_json(w.quad);
                            e["omega"] = w.omega;
                            e["norm"] = mpz_json(w.norm_value);
                            entries.push_back(e);
                        }
                    prov[key] = entries;
                }
                j["provenance"] = prov;
            }
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "k,prime\n";
            for (const auto& p : rep.primes) std::cout << rep.k << "," << p.get_str() << "\n";
            break;
        }
        case Format::Text: {
            std::cout << "k = " << rep.k << " (" << rep.primes.size() << " primes)\n";
            for (const auto& p : rep.primes) {
                std::cout << "  " << p.get_str();
                if (rep.from_k.count(p)) std::cout << "  [divides k]";
                if (provenance) {
                    auto it = rep.provenance.find(p);
                    if (it != rep.provenance.end() && !it->second.empty()) {
                        const auto& w = it->second.front();
                        std::cout << "  e.g. " << w.quad.to_string() << " w=" << w.omega
                                  << " N=" << w.norm_value.get_str();
                    }
                }
                std::cout << "\n";
            }
            break;
        }
    }
}

void emit_classes(unsigned k, const std::string& context, const std::vector<OverlapClass>& cl,
                  const CommonOpts& fmt) {
    switch (fmt.format()) {
        case Format::Json: {
            json j;
            j["k"] = k;
            j["context"] = context;
            j["classes"] = json::array();
            for (const auto& c : cl) j["classes"].push_back(class_json(c));
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "k,i,j,s,t,witnesses,family\n";
            for (const auto& c : cl) {
                std::cout << k << "," << c.canonical.i << "," << c.canonical.j << ","
                          << c.canonical.s << "," << c.canonical.t << ",";
                for (std::size_t x = 0; x < c.witnesses.size(); ++x)
                    std::cout << (x ? ";" : "") << c.witnesses[x];
                std::cout << "," << family_name(c.family) << "\n";
            }
            break;
        }
        case Format::Text: {
            std::cout << "k = " << k << ", " << context << ": " << cl.size()
                      << " nontrivial overlap class" << (cl.size() == 1 ? "" : "es") << "\n";
            for (const auto& c : cl) {
                std::cout << "  " << c.canonical.to_string() << "  omega";
                for (unsigned w : c.witnesses) std::cout << " " << w;
                std::cout << "  [" << family_name(c.family) << "]\n";
            }
            break;
        }
    }
}

std::vector<OverlapClass> field_overlaps(const Field& field, unsigned k, const FieldOpts& fo) {
    auto gens = elements_of_order(field, k);
    std::vector<OverlapClass> out;
    auto merge = [&](const std::vector<OverlapClass>& cl) {
        for (const auto& c : cl) {
            bool seen = false;
            for (const auto& e : out)
                if (e.canonical == c.canonical) { seen = true; break; }
            if (!seen) out.push_back(c);
        }
    };
    if (fo.all_generators) {
        for (const auto& g : gens) merge(enumerate_overlaps(FieldContext{&field, g, k}));
    } else {
        unsigned ix = fo.generator < 0 ? 0 : static_cast<unsigned>(fo.generator);
        if (ix >= gens.size()) throw NoSuchOrder("generator index out of range");
        merge(enumerate_overlaps(FieldContext{&field, gens[ix], k}));
    }
    std::sort(out.begin(), out.end(), [](const OverlapClass& a, const OverlapClass& b) {
        return a.canonical < b.canonical;
    });
    label_families(out, k);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"circular planar nearring computations: exceptional primes, overlap\n"
                 "enumeration and classification, triple overlaps, block designs"};
    app.require_subcommand(1);

    unsigned k = 0;
    CommonOpts fmt;
    FieldOpts fo;
    PrimeSearchOptions popt;
    bool provenance = false;

    auto add_work_flags = [&](CLI::App* cmd) {
        cmd->add_option("--threads", popt.threads, "worker thread cap (0 = hardware)");
        cmd->add_option("--max-work", popt.max_work,
                        "work guard override (also via NEARRING_MAX_WORK)");
        cmd->add_flag("--dedupe", popt.dedupe, "process one quadruple per orbit");
    };

    auto* qk = app.add_subcommand("qk", "exceptional primes Q_k");
    qk->add_option("--k", k, "subgroup order")->required();
    add_format_flags(qk, fmt);
    add_work_flags(qk);
    qk->add_flag("--provenance", provenance, "include witness norms per prime");

    auto* pk = app.add_subcommand("pk", "circularity primes P_k");
    pk->add_option("--k", k, "subgroup order")->required();
    add_format_flags(pk, fmt);
    add_work_flags(pk);
    pk->add_flag("--provenance", provenance, "include witness norms per prime");

    auto* ov = app.add_subcommand("overlaps", "nontrivial overlap classes");
    ov->add_option("--k", k, "subgroup order")->required();
    add_format_flags(ov, fmt);
    add_field_flags(ov, fo, false);

    auto* cls = app.add_subcommand("classify", "verify enumeration against the classified sets");
    cls->add_option("--k", k, "subgroup order")->required();
    add_format_flags(cls, fmt);

    auto* tri = app.add_subcommand("triples", "normalized triple overlaps");
    tri->add_option("--k", k, "subgroup order")->required();
    add_format_flags(tri, fmt);

    auto* qd = app.add_subcommand("quads", "quadruple overlaps (4-cliques)");
    qd->add_option("--k", k, "subgroup order")->required();
    add_format_flags(qd, fmt);

    auto* de = app.add_subcommand("design", "circle, edge sequence and basic-graph report");
    de->add_option("--k", k, "subgroup order")->required();
    add_field_flags(de, fo, true);
    std::uint64_t r_ix = 1, c_ix = 1;
    de->add_option("--r", r_ix, "radius, as field-element enumeration index");
    de->add_option("--c", c_ix, "center, as field-element enumeration index");
    bool dot = false;
    de->add_flag("--dot", dot, "emit the edge graph in DOT format");
    add_format_flags(de, fmt);

    auto* no = app.add_subcommand("norms", "Galois norms of the overlap polynomials of a quadruple");
    no->add_option("--k", k, "subgroup order")->required();
    std::string quad_str;
    no->add_option("--quad", quad_str, "quadruple i,j,s,t")->required();
    int omega_opt = -1;
    no->add_option("--omega", omega_opt, "single omega (default: all 0..k-1)");
    add_format_flags(no, fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (qk->parsed() || pk->parsed()) {
            auto rep = qk->parsed() ? exceptional_primes(k, popt) : circularity_primes(k, popt);
            emit_prime_report(rep, fmt, provenance);
        } else if (ov->parsed()) {
            if (fo.p) {
                Field field = make_field(fo);
                auto cl = field_overlaps(field, k, fo);
                emit_classes(k, "GF(" + std::to_string(field.order()) + ")", cl, fmt);
            } else {
                auto cl = enumerate_overlaps(ComplexContext{k});
                label_families(cl, k);
                emit_classes(k, "complex", cl, fmt);
            }
        } else if (cls->parsed()) {
            auto rep = verify_classification(k);
            if (fmt.format() == Format::Json) {
                json j;
                j["k"] = k;
                j["verdict"] = rep.pass ? "pass" : "fail";
                j["predicted"] = json::array();
                for (const auto& pc : rep.predicted.classes) {
                    json e;
                    e["quad"] = quad_json(pc.canonical);
                    json fams = json::array();
                    for (Family f : pc.families) fams.push_back(family_name(f));
                    e["families"] = fams;
                    j["predicted"].push_back(e);
                }
                j["found"] = json::array();
                for (const auto& c : rep.found) j["found"].push_back(class_json(c));
                j["missing"] = json::array();
                for (const auto& q : rep.missing) j["missing"].push_back(quad_json(q));
                j["extra"] = json::array();
                for (const auto& q : rep.extra) j["extra"].push_back(quad_json(q));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "k = " << k << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
                          << rep.found.size() << " classes, " << rep.predicted.classes.size()
                          << " predicted)\n";
                for (const auto& q : rep.missing) std::cout << "  missing " << q.to_string() << "\n";
                for (const auto& q : rep.extra) std::cout << "  extra " << q.to_string() << "\n";
            }
            return rep.pass ? 0 : 1;
        } else if (tri->parsed() || qd->parsed()) {
            auto cl = enumerate_overlaps(ComplexContext{k});
            if (tri->parsed()) {
                auto triples = find_triples(cl, k);
                if (fmt.format() == Format::Json) {
                    json j;
                    j["k"] = k;
                    j["triples"] = json::array();
                    for (const auto& t : triples) {
                        json e;
                        e["q1"] = json::array({t.a.s, t.a.t});
                        e["q2"] = json::array({t.b.s, t.b.t});
                        e["q3"] = json::array({t.c.s, t.c.t});
                        e["label"] = t.label ? json("T" + std::to_string(*t.label)) : json(nullptr);
                        j["triples"].push_back(e);
                    }
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "k = " << k << ": " << triples.size() << " normalized triple overlap"
                              << (triples.size() == 1 ? "" : "s") << "\n";
                    for (const auto& t : triples) {
                        std::cout << "  (" << t.a.s << "," << t.a.t << " | " << t.b.s << ","
                                  << t.b.t << " | " << t.c.s << "," << t.c.t << ")";
                        if (t.label) std::cout << "  T" << *t.label;
                        std::cout << "\n";
                    }
                }
            } else {
                auto quads = find_quadruple_overlaps(cl, k);
                if (fmt.format() == Format::Json) {
                    json j;
                    j["k"] = k;
                    j["quadruples"] = json::array();
                    for (const auto& qq : quads) {
                        json e = json::array();
                        for (const auto& pr : qq) e.push_back(json::array({pr.s, pr.t}));
                        j["quadruples"].push_back(e);
                    }
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "k = " << k << ": " << quads.size() << " quadruple overlaps\n";
                }
            }
        } else if (de->parsed()) {
            Field field = make_field(fo);
            SubgroupK sub = fo.generator < 0
                                ? subgroup_k(field, k)
                                : subgroup_k(field, k,
                                             elements_of_order(field, k).at(
                                                 static_cast<unsigned>(fo.generator)));
            FieldElem r = field.element_at(r_ix), c = field.element_at(c_ix);
            auto e = edge_sequence(field, sub, r, c);
            auto graphs = decompose(e);
            auto gp = gamma_pi(field, sub, r);
            if (dot) {
                std::cout << dot_graph(e);
            } else if (fmt.format() == Format::Json) {
                json j;
                j["q"] = field.order();
                j["k"] = k;
                j["r"] = r_ix;
                j["c"] = c_ix;
                j["edge_sequence"] = e.eps;
                j["basic_graphs"] = json::array();
                for (const auto& g : graphs) {
                    json bg;
                    bg["index"] = g.index;
                    bg["parity"] = g.parity == Parity::Odd ? "odd" : "even";
                    j["basic_graphs"].push_back(bg);
                }
                j["gamma"] = gp.gamma;
                j["pi"] = gp.pi;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "GF(" << field.order() << "), k = " << k << ", r = " << r_ix
                          << ", c = " << c_ix << "\n  edge sequence:";
                for (unsigned v : e.eps) std::cout << " " << v;
                std::cout << "\n  basic graphs:";
                for (const auto& g : graphs)
                    std::cout << " " << (g.parity == Parity::Odd ? "G" : "P") << g.index;
                std::cout << "\n  gamma:";
                for (unsigned v : gp.gamma) std::cout << " " << v;
                std::cout << "\n  pi:   ";
                for (unsigned v : gp.pi) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (no->parsed()) {
            Coeffs qv = parse_coeffs(quad_str);
            if (qv.size() != 4) throw Error("--quad needs four entries i,j,s,t");
            Quad q{qv[0], qv[1], qv[2], qv[3], k};
            std::vector<std::pair<unsigned, mpz_class>> rows;
            if (omega_opt >= 0)
                rows.emplace_back(omega_opt, quad_norm(q, static_cast<unsigned>(omega_opt)));
            else
                for (unsigned w = 0; w < k; ++w) rows.emplace_back(w, quad_norm(q, w));
            if (fmt.format() == Format::Json) {
                json j;
                j["k"] = k;
                j["quad"] = quad_json(q);
                j["norms"] = json::array();
                for (const auto& [w, n] : rows) {
                    json e;
                    e["omega"] = w;
                    e["norm"] = mpz_json(n);
                    j["norms"].push_back(e);
                }
                std::cout << j.dump() << "\n";
            } else if (fmt.format() == Format::Csv) {
                std::cout << "k,i,j,s,t,omega,norm\n";
                for (const auto& [w, n] : rows)
                    std::cout << k << "," << q.i << "," << q.j << "," << q.s << "," << q.t << ","
                              << w << "," << n.get_str() << "\n";
            } else {
                std::cout << q.to_string() << ", k = " << k << "\n";
                for (const auto& [w, n] : rows)
                    std::cout << "  omega " << w << ": " << n.get_str() << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
