#include "liftobs/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liftobs/cech.hpp"
#include "liftobs/error.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct Errs {
    std::vector<std::string> v;
    void add(const std::string& path, const std::string& msg) { v.push_back(path + ": " + msg); }
    [[noreturn]] void raise() const {
        std::string msg = "scenario rejected:";
        for (const auto& s : v) msg += "\n  - " + s;
        throw input_error(msg);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require_input(bool(in), "cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// One scalar: exact JSON integer, or a quoted decimal string for big values.
std::optional<Int> int_of(const json& j, const std::string& path, Errs& errs) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            errs.add(path, "not a decimal integer string");
            return std::nullopt;
        }
    }
    if (j.is_number()) {
        errs.add(path, "non-integer number; quote big integers as decimal strings");
        return std::nullopt;
    }
    errs.add(path, "expected an integer or a decimal string");
    return std::nullopt;
}

std::optional<FgAbGroup> group_of(const json& j, const std::string& path, Errs& errs) {
    if (!j.is_string()) {
        errs.add(path, "expected a group spec string like \"Z\", \"Z/4\", \"Z^2 x Z/2\", \"0\"");
        return std::nullopt;
    }
    try {
        return parse_group_spec(j.get<std::string>());
    } catch (const Error& e) {
        errs.add(path, e.what());
        return std::nullopt;
    }
}

// Homomorphism given by its matrix (rows = target generators).
std::optional<AbHom> hom_of(const json& j, const std::string& path, const FgAbGroup& src,
                            const FgAbGroup& tgt, Errs& errs) {
    if (!j.is_array()) {
        errs.add(path, "expected a matrix (array of rows)");
        return std::nullopt;
    }
    if (int(j.size()) != tgt.gens()) {
        errs.add(path, "need " + std::to_string(tgt.gens()) + " rows (target generators), got " +
                           std::to_string(j.size()));
        return std::nullopt;
    }
    IntMatrix m(tgt.gens(), src.gens());
    bool ok = true;
    for (int r = 0; r < tgt.gens(); ++r) {
        const json& row = j[size_t(r)];
        std::string rpath = path + "/" + std::to_string(r);
        if (!row.is_array() || int(row.size()) != src.gens()) {
            errs.add(rpath, "need " + std::to_string(src.gens()) + " entries (source generators)");
            ok = false;
            continue;
        }
        for (int c = 0; c < src.gens(); ++c) {
            auto e = int_of(row[size_t(c)], rpath + "/" + std::to_string(c), errs);
            if (e)
                m.at(r, c) = *e;
            else
                ok = false;
        }
    }
    if (!ok) return std::nullopt;
    try {
        return AbHom(src, tgt, std::move(m));
    } catch (const Error& e) {
        errs.add(path, e.what());
        return std::nullopt;
    }
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed,
                Errs& errs) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) errs.add(path + "/" + it.key(), "unknown field");
    }
}

std::optional<Rat> rat_of(const json& j, const std::string& path, Errs& errs) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const Error& e) {
            errs.add(path, e.what());
            return std::nullopt;
        } catch (const std::invalid_argument&) {
            errs.add(path, "not a rational string");
            return std::nullopt;
        }
    }
    errs.add(path, "expected an integer or a rational string like \"1/2\"");
    return std::nullopt;
}

} // namespace

ScenarioConfig parse_scenario(const std::string& path) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_scenario_text(read_file(path), dir.empty() ? "." : dir);
}

ScenarioConfig parse_scenario_text(const std::string& text, const std::string& base_dir) {
    Errs errs;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("scenario must be a JSON object");
    check_keys(doc, "", {"extension", "bundle", "options"}, errs);

    ScenarioOptions opts;
    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object()) {
            errs.add("/options", "expected an object");
        } else {
            check_keys(o, "/options", {"sign_ledger", "verbose"}, errs);
            for (const char* key : {"sign_ledger", "verbose"}) {
                if (!o.contains(key)) continue;
                if (!o[key].is_boolean())
                    errs.add(std::string("/options/") + key, "expected a boolean");
                else
                    (std::string(key) == "sign_ledger" ? opts.sign_ledger : opts.verbose) =
                        o[key].get<bool>();
            }
        }
    }

    if (!doc.contains("extension")) errs.add("/extension", "missing");
    if (!doc.contains("bundle")) errs.add("/bundle", "missing");
    if (!errs.v.empty()) errs.raise();

    const json& je = doc["extension"];
    const json& jb = doc["bundle"];
    if (!je.is_object()) errs.add("/extension", "expected an object");
    if (!jb.is_object()) errs.add("/bundle", "expected an object");
    if (!errs.v.empty()) errs.raise();

    check_keys(je, "/extension", {"pi1K", "pi2K", "D", "gamma_rank", "d1", "d2", "fund_ext"}, errs);
    check_keys(jb, "/bundle",
               {"pi2X", "pi3X", "H2X", "H3X", "h2", "d2P", "d3P", "pi1X", "covering",
                "pi1P_class"},
               errs);

    auto req = [&errs](const json& j, const char* obj, const char* key) -> const json* {
        if (!j.contains(key)) {
            errs.add(std::string("/") + obj + "/" + key, "missing");
            return nullptr;
        }
        return &j[key];
    };

    // extension fields
    const json* jpi1K = req(je, "extension", "pi1K");
    const json* jpi2K = req(je, "extension", "pi2K");
    const json* jD = req(je, "extension", "D");
    const json* jrank = req(je, "extension", "gamma_rank");
    const json* jd1 = req(je, "extension", "d1");
    const json* jd2 = req(je, "extension", "d2");

    auto pi1K = jpi1K ? group_of(*jpi1K, "/extension/pi1K", errs) : std::nullopt;
    auto pi2K = jpi2K ? group_of(*jpi2K, "/extension/pi2K", errs) : std::nullopt;
    auto D = jD ? group_of(*jD, "/extension/D", errs) : std::nullopt;
    std::optional<int> rank;
    if (jrank) {
        auto r = int_of(*jrank, "/extension/gamma_rank", errs);
        if (r) {
            if (*r < 0 || *r > 64)
                errs.add("/extension/gamma_rank", "must be between 0 and 64");
            else
                rank = int(r->get_si());
        }
    }
    std::optional<AbHom> d1, d2;
    if (jd1 && pi1K && D) d1 = hom_of(*jd1, "/extension/d1", *pi1K, *D, errs);
    if (jd2 && pi2K && rank)
        d2 = hom_of(*jd2, "/extension/d2", *pi2K, FgAbGroup::free_group(*rank), errs);

    std::optional<ExtClass> fund;
    if (je.contains("fund_ext") && pi1K && rank) {
        const json& jf = je["fund_ext"];
        if (d2 && !d2->is_zero())
            errs.add("/extension/fund_ext", "only applies when d2 = 0");
        else if (!jf.is_array() || jf.size() != pi1K->torsion.size()) {
            errs.add("/extension/fund_ext",
                     "need one row per torsion generator of pi1K (" +
                         std::to_string(pi1K->torsion.size()) + ")");
        } else {
            std::vector<std::vector<Int>> comps;
            bool ok = true;
            for (size_t i = 0; i < jf.size(); ++i) {
                const json& row = jf[i];
                std::string rpath = "/extension/fund_ext/" + std::to_string(i);
                if (!row.is_array() || int(row.size()) != *rank) {
                    errs.add(rpath, "need gamma_rank entries");
                    ok = false;
                    continue;
                }
                std::vector<Int> c;
                for (size_t k = 0; k < row.size(); ++k) {
                    auto e = int_of(row[k], rpath + "/" + std::to_string(k), errs);
                    if (e)
                        c.push_back(*e);
                    else
                        ok = false;
                }
                comps.push_back(std::move(c));
            }
            if (ok) fund = ExtClass(*pi1K, FgAbGroup::free_group(*rank), std::move(comps));
        }
    }

    // bundle fields
    const json* jpi2X = req(jb, "bundle", "pi2X");
    const json* jpi3X = req(jb, "bundle", "pi3X");
    const json* jH2X = req(jb, "bundle", "H2X");
    const json* jH3X = req(jb, "bundle", "H3X");
    const json* jh2 = req(jb, "bundle", "h2");
    const json* jd2P = req(jb, "bundle", "d2P");
    const json* jd3P = req(jb, "bundle", "d3P");

    auto pi2X = jpi2X ? group_of(*jpi2X, "/bundle/pi2X", errs) : std::nullopt;
    auto pi3X = jpi3X ? group_of(*jpi3X, "/bundle/pi3X", errs) : std::nullopt;
    auto H2X = jH2X ? group_of(*jH2X, "/bundle/H2X", errs) : std::nullopt;
    auto H3X = jH3X ? group_of(*jH3X, "/bundle/H3X", errs) : std::nullopt;
    std::optional<AbHom> h2, d2P, d3P;
    if (jh2 && pi2X && H2X) h2 = hom_of(*jh2, "/bundle/h2", *pi2X, *H2X, errs);
    if (jd2P && pi2X && pi1K) d2P = hom_of(*jd2P, "/bundle/d2P", *pi2X, *pi1K, errs);
    if (jd3P && pi3X && pi2K) d3P = hom_of(*jd3P, "/bundle/d3P", *pi3X, *pi2K, errs);

    std::optional<FiniteGroup> pi1X;
    std::shared_ptr<const FiniteGroup> pi1X_ptr;
    if (jb.contains("pi1X")) {
        const json& jp = jb["pi1X"];
        try {
            if (jp.is_string()) {
                pi1X = FiniteGroup::from_spec(jp.get<std::string>());
            } else if (jp.is_object()) {
                check_keys(jp, "/bundle/pi1X", {"file"}, errs);
                if (!jp.contains("file") || !jp["file"].is_string())
                    errs.add("/bundle/pi1X", "object form needs a \"file\" string");
                else
                    pi1X = FiniteGroup::parse_table_text(read_file(
                        (std::filesystem::path(base_dir) / jp["file"].get<std::string>())
                            .string()));
            } else {
                errs.add("/bundle/pi1X", "expected a group name or {\"file\": path}");
            }
        } catch (const Error& e) {
            errs.add("/bundle/pi1X", e.what());
        }
        if (pi1X) pi1X_ptr = std::make_shared<const FiniteGroup>(*pi1X);
    }

    std::optional<CoveringData> covering;
    if (jb.contains("covering")) {
        const json& jc = jb["covering"];
        if (!pi1X) {
            errs.add("/bundle/covering", "requires pi1X");
        } else if (!jc.is_object()) {
            errs.add("/bundle/covering", "expected {\"nerve\": path, \"cocycle\": path}");
        } else {
            check_keys(jc, "/bundle/covering", {"nerve", "cocycle"}, errs);
            bool shape_ok = jc.contains("nerve") && jc["nerve"].is_string() &&
                            jc.contains("cocycle") && jc["cocycle"].is_string();
            if (!shape_ok) {
                errs.add("/bundle/covering", "need \"nerve\" and \"cocycle\" file paths");
            } else {
                try {
                    auto np = std::make_shared<const Nerve>(Nerve::parse_text(read_file(
                        (std::filesystem::path(base_dir) / jc["nerve"].get<std::string>())
                            .string())));
                    KCochain g = parse_kcochain(
                        read_file((std::filesystem::path(base_dir) /
                                   jc["cocycle"].get<std::string>())
                                      .string()),
                        np, 1, pi1X_ptr);
                    covering = CoveringData{np, std::move(g)};
                } catch (const Error& e) {
                    errs.add("/bundle/covering", e.what());
                }
            }
        }
    }

    std::optional<GroupCochain> pi1P_class;
    if (jb.contains("pi1P_class")) {
        const json& jp = jb["pi1P_class"];
        if (!pi1X) {
            errs.add("/bundle/pi1P_class", "requires pi1X");
        } else if (d2P) {
            CoeffModule coeff = CoeffModule::of_group(kernel_cokernel(*d2P).cokernel);
            long n = long(pi1X->order()) * pi1X->order();
            if (!jp.is_array() || long(jp.size()) != n) {
                errs.add("/bundle/pi1P_class",
                         "need |pi1X|^2 = " + std::to_string(n) +
                             " value rows (tuple index g1 + |G|*g2)");
            } else {
                std::vector<std::vector<Rat>> table;
                bool ok = true;
                for (long i = 0; i < n; ++i) {
                    const json& row = jp[size_t(i)];
                    std::string rpath = "/bundle/pi1P_class/" + std::to_string(i);
                    if (!row.is_array() || int(row.size()) != coeff.dim()) {
                        errs.add(rpath, "need " + std::to_string(coeff.dim()) +
                                            " coordinates (coker(d2P) generators)");
                        ok = false;
                        continue;
                    }
                    std::vector<Rat> vals;
                    for (size_t k = 0; k < row.size(); ++k) {
                        auto q = rat_of(row[k], rpath + "/" + std::to_string(k), errs);
                        if (q)
                            vals.push_back(*q);
                        else
                            ok = false;
                    }
                    table.push_back(std::move(vals));
                }
                if (ok) {
                    try {
                        pi1P_class = normalize_2cocycle(pi1X_ptr, coeff, table).cochain;
                    } catch (const Error& e) {
                        errs.add("/bundle/pi1P_class", e.what());
                    }
                }
            }
        }
    }

    if (!errs.v.empty()) errs.raise();

    CentralExtData ext = [&] {
        try {
            return CentralExtData(*pi1K, *pi2K, *D, *rank, *d1, *d2, std::move(fund));
        } catch (const Error& e) {
            errs.add("/extension", e.what());
            errs.raise();
        }
    }();
    BundleData bundle{*pi2X,          *pi3X,    *H2X, *H3X, *h2, *d2P, *d3P,
                      std::move(pi1X), std::move(covering), std::move(pi1P_class)};
    try {
        check_shapes(ext, bundle);
    } catch (const Error& e) {
        throw input_error(std::string("scenario rejected:\n  - ") + e.what());
    }
    return ScenarioConfig{std::move(ext), std::move(bundle), opts};
}

ObstructionReport run_compute(const ScenarioConfig& cfg) {
    return compute_report(cfg.extension, cfg.bundle);
}

namespace {

ojson hom_json(const AbHom& f) {
    ojson rows = ojson::array();
    for (int r = 0; r < f.matrix.rows(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < f.matrix.cols(); ++c) row.push_back(f.matrix.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return ojson{{"source", f.source.to_string()}, {"target", f.target.to_string()},
                 {"matrix", std::move(rows)}};
}

ojson coeff_json(const CoeffModule& c) {
    const char* kind = c.kind == CoeffModule::Kind::Group     ? "group"
                       : c.kind == CoeffModule::Kind::QmodZ   ? "qmodz"
                                                              : "rational";
    return ojson{{"kind", kind}, {"group", c.group.to_string()}, {"m", c.m}};
}

std::string hom_text(const AbHom& f) {
    std::ostringstream os;
    os << f.source.to_string() << " -> " << f.target.to_string();
    if (f.is_zero()) {
        os << ", zero";
        return os.str();
    }
    os << ", matrix [";
    for (int r = 0; r < f.matrix.rows(); ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < f.matrix.cols(); ++c)
            os << (c ? " " : "") << f.matrix.at(r, c).get_str();
    }
    os << "]";
    return os.str();
}

} // namespace

std::string emit_report(const ObstructionReport& r, ReportFormat f, bool with_sign_ledger) {
    if (f == ReportFormat::Text) {
        std::ostringstream os;
        os << "verdict: " << verdict_name(r.verdict) << "\n";
        os << "pi2_hom: " << hom_text(r.pi2_hom) << "\n";
        os << "pi3_hom: " << hom_text(r.pi3_hom) << "\n";
        if (r.flat_ext) {
            os << "flat_ext: base " << r.flat_ext->base.to_string() << ", coeff "
               << r.flat_ext->coeff.to_string();
            if (r.flat_ext->is_zero()) {
                os << ", zero class\n";
            } else {
                os << ", comp [";
                for (size_t i = 0; i < r.flat_ext->comp.size(); ++i) {
                    os << (i ? "; " : "");
                    for (size_t j = 0; j < r.flat_ext->comp[i].size(); ++j)
                        os << (j ? " " : "") << r.flat_ext->comp[i][j].get_str();
                }
                os << "]\n";
            }
        } else {
            os << "flat_ext: none\n";
        }
        if (r.cech_class) {
            os << "cech_class: degree-" << r.cech_class->degree() << " cochain, coefficients "
               << r.cech_class->coeff().to_string() << "\n";
            std::istringstream lines(format_cochain(*r.cech_class));
            for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
        } else {
            os << "cech_class: none\n";
        }
        os << "provenance:\n";
        for (const auto& s : r.provenance) os << "  " << s << "\n";
        if (with_sign_ledger) os << sign_ledger_text();
        return os.str();
    }

    ojson out;
    out["format"] = "liftobs-report-1";
    out["verdict"] = verdict_name(r.verdict);
    out["pi2_hom"] = hom_json(r.pi2_hom);
    out["pi3_hom"] = hom_json(r.pi3_hom);
    if (r.flat_ext) {
        ojson comps = ojson::array();
        for (const auto& row : r.flat_ext->comp) {
            ojson jr = ojson::array();
            for (const auto& x : row) jr.push_back(x.get_str());
            comps.push_back(std::move(jr));
        }
        out["flat_ext"] = ojson{{"base", r.flat_ext->base.to_string()},
                                {"coeff", r.flat_ext->coeff.to_string()},
                                {"comp", std::move(comps)}};
    } else {
        out["flat_ext"] = nullptr;
    }
    if (r.cech_class) {
        const Nerve& nv = r.cech_class->nerve();
        ojson facets = ojson::array();
        for (const auto& fc : nv.facets()) {
            ojson jf = ojson::array();
            for (int v : fc) jf.push_back(v);
            facets.push_back(std::move(jf));
        }
        int deg = r.cech_class->degree();
        ojson values = ojson::array();
        for (int i = 0; i < nv.simplex_count(deg); ++i) {
            ojson row = ojson::array();
            for (const Rat& q : r.cech_class->value(i)) row.push_back(format_rat(q));
            values.push_back(std::move(row));
        }
        out["cech_class"] = ojson{{"nerve", ojson{{"vertices", nv.vertices()},
                                                  {"facets", std::move(facets)}}},
                                  {"degree", deg},
                                  {"coeff", coeff_json(r.cech_class->coeff())},
                                  {"values", std::move(values)}};
    } else {
        out["cech_class"] = nullptr;
    }
    if (with_sign_ledger) out["sign_ledger"] = sign_ledger_text();
    out["provenance"] = r.provenance;
    return out.dump(2) + "\n";
}

namespace {

AbHom hom_of_json(const json& j) {
    require_input(j.is_object() && j.contains("source") && j.contains("target") &&
                      j.contains("matrix"),
                  "report: malformed homomorphism object");
    FgAbGroup src = parse_group_spec(j["source"].get<std::string>());
    FgAbGroup tgt = parse_group_spec(j["target"].get<std::string>());
    IntMatrix m(tgt.gens(), src.gens());
    const json& rows = j["matrix"];
    require_input(int(rows.size()) == tgt.gens(), "report: homomorphism row count mismatch");
    for (int r = 0; r < tgt.gens(); ++r) {
        const json& row = rows[size_t(r)];
        require_input(int(row.size()) == src.gens(), "report: homomorphism column count mismatch");
        for (int c = 0; c < src.gens(); ++c) m.at(r, c) = Int(row[size_t(c)].get<std::string>());
    }
    return AbHom(std::move(src), std::move(tgt), std::move(m));
}

} // namespace

ObstructionReport parse_machine_report(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("report is not valid JSON: ") + e.what());
    }
    require_input(doc.is_object() && doc.value("format", "") == "liftobs-report-1",
                  "report: missing or unknown format tag");
    ObstructionReport r{hom_of_json(doc.at("pi2_hom")), hom_of_json(doc.at("pi3_hom")),
                        std::nullopt, std::nullopt, parse_verdict(doc.at("verdict").get<std::string>()),
                        {}};
    if (!doc.at("flat_ext").is_null()) {
        const json& je = doc["flat_ext"];
        FgAbGroup base = parse_group_spec(je.at("base").get<std::string>());
        FgAbGroup coeff = parse_group_spec(je.at("coeff").get<std::string>());
        std::vector<std::vector<Int>> comps;
        for (const json& row : je.at("comp")) {
            std::vector<Int> c;
            for (const json& x : row) c.push_back(Int(x.get<std::string>()));
            comps.push_back(std::move(c));
        }
        r.flat_ext = ExtClass(std::move(base), std::move(coeff), std::move(comps));
    }
    if (!doc.at("cech_class").is_null()) {
        const json& jc = doc["cech_class"];
        const json& jn = jc.at("nerve");
        std::vector<Simplex> facets;
        for (const json& jf : jn.at("facets")) {
            Simplex s;
            for (const json& v : jf) s.push_back(v.get<int>());
            facets.push_back(std::move(s));
        }
        auto nerve = std::make_shared<const Nerve>(jn.at("vertices").get<int>(),
                                                   std::move(facets));
        const json& jco = jc.at("coeff");
        std::string kind = jco.at("kind").get<std::string>();
        CoeffModule coeff =
            kind == "group"
                ? CoeffModule::of_group(parse_group_spec(jco.at("group").get<std::string>()))
                : kind == "qmodz" ? CoeffModule::qmodz(jco.at("m").get<int>())
                                  : CoeffModule::rational(jco.at("m").get<int>());
        int deg = jc.at("degree").get<int>();
        CechCochain c(nerve, deg, coeff);
        const json& values = jc.at("values");
        require_input(int(values.size()) == nerve->simplex_count(deg),
                      "report: cech value count mismatch");
        for (int i = 0; i < nerve->simplex_count(deg); ++i) {
            std::vector<Rat> v;
            for (const json& q : values[size_t(i)]) v.push_back(parse_rat(q.get<std::string>()));
            c.set_value(i, std::move(v));
        }
        r.cech_class = std::move(c);
    }
    for (const json& p : doc.at("provenance")) r.provenance.push_back(p.get<std::string>());
    return r;
}

} // namespace liftobs
