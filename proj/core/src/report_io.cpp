#include "isoell/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace isoell {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw Error("unknown field \"" + it.key() + "\" in " + where);
    }
}

u64 get_u64(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw Error("missing field \"" + std::string(key) + "\" in " + where);
    const json& v = obj.at(key);
    if (!v.is_number_unsigned())
        throw Error("field \"" + std::string(key) + "\" in " + where +
                    " must be a non-negative integer");
    return v.get<u64>();
}

Atom parse_atom(const json& j, const std::string& where) {
    if (!j.is_object()) throw Error("group atoms must be objects in " + where);
    std::string kind = j.value("kind", "");
    if (kind == "mu") {
        reject_unknown(j, {"kind", "n"}, where);
        return Atom::mu(get_u64(j, "n", where));
    }
    if (kind == "constant") {
        reject_unknown(j, {"kind", "n"}, where);
        return Atom::constant(get_u64(j, "n", where));
    }
    if (kind == "alpha") {
        reject_unknown(j, {"kind", "r"}, where);
        return Atom::alpha(static_cast<unsigned>(get_u64(j, "r", where)));
    }
    if (kind == "ss_e2") {
        reject_unknown(j, {"kind"}, where);
        return Atom::ss_e2();
    }
    throw Error("unknown group atom kind \"" + kind + "\" in " + where);
}

json atom_to_json(const Atom& a) {
    switch (a.kind) {
        case AtomKind::mu: return json{{"kind", "mu"}, {"n", a.n}};
        case AtomKind::constant_cyclic: return json{{"kind", "constant"}, {"n", a.n}};
        case AtomKind::alpha: return json{{"kind", "alpha"}, {"r", a.r}};
        case AtomKind::ss_e2: return json{{"kind", "ss_e2"}};
    }
    return {};
}

XHint parse_hint(const std::string& s) {
    if (s == "unknown") return XHint::unknown;
    if (s == "rational_smooth") return XHint::rational_smooth;
    if (s == "rational_cuspidal") return XHint::rational_cuspidal;
    if (s == "elliptic_translations") return XHint::elliptic_translations;
    if (s == "elliptic_other") return XHint::elliptic_other;
    if (s == "higher") return XHint::higher;
    throw Error("unknown x_hint \"" + s + "\"");
}

}  // namespace

SurfaceData parse_surface_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw Error("surface description must be a JSON object");
    reject_unknown(j, {"schema", "p", "group", "gY", "e_type", "orbits", "x_hint", "hom_rank"},
                   "surface");
    if (get_u64(j, "schema", "surface") != 1)
        throw Error("unsupported schema version (expected 1)");

    SurfaceData d;
    d.p = static_cast<u32>(get_u64(j, "p", "surface"));
    if (!j.contains("group") || !j.at("group").is_array())
        throw Error("field \"group\" must be a list of atoms");
    d.group.p = d.p;
    for (const json& a : j.at("group")) d.group.factors.push_back(parse_atom(a, "group"));
    d.base_genus = get_u64(j, "gY", "surface");
    std::string et = j.value("e_type", "ordinary");
    if (et == "ordinary")
        d.e_type = EType::ordinary;
    else if (et == "supersingular")
        d.e_type = EType::supersingular;
    else
        throw Error("unknown e_type \"" + et + "\"");
    if (j.contains("orbits")) {
        if (!j.at("orbits").is_array()) throw Error("field \"orbits\" must be a list");
        size_t idx = 0;
        for (const json& o : j.at("orbits")) {
            reject_unknown(o, {"n", "weight", "label"}, "orbit");
            OrbitDatum od;
            od.stab_order = get_u64(o, "n", "orbit");
            od.label = o.value("label", "orbit" + std::to_string(idx));
            if (o.contains("weight")) {
                if (!o.at("weight").is_array())
                    throw Error("orbit weight must be a list of residues");
                Character w;
                for (const json& r : o.at("weight")) {
                    if (!r.is_number_unsigned())
                        throw Error("weight residues must be non-negative integers");
                    w.residues.push_back(r.get<u64>());
                }
                od.weight = std::move(w);
            }
            d.orbits.push_back(std::move(od));
            ++idx;
        }
    }
    d.x_hint = parse_hint(j.value("x_hint", "unknown"));
    d.hom_rank = j.contains("hom_rank") ? get_u64(j, "hom_rank", "surface") : 0;
    validate(d);
    return d;
}

std::string surface_to_json(const SurfaceData& d) {
    json j;
    j["schema"] = 1;
    j["p"] = d.p;
    json group = json::array();
    for (const Atom& a : d.group.factors) group.push_back(atom_to_json(a));
    j["group"] = group;
    j["gY"] = d.base_genus;
    j["e_type"] = e_type_str(d.e_type);
    json orbits = json::array();
    for (const OrbitDatum& o : d.orbits) {
        json jo;
        jo["n"] = o.stab_order;
        if (o.weight) jo["weight"] = o.weight->residues;
        if (!o.label.empty()) jo["label"] = o.label;
        orbits.push_back(jo);
    }
    j["orbits"] = orbits;
    j["x_hint"] = x_hint_str(d.x_hint);
    j["hom_rank"] = d.hom_rank;
    return j.dump(2);
}

std::string report_to_json(const InvariantReport& rep) {
    json j;
    j["schema"] = 1;
    j["kappa"] = kappa_str(rep.kappa);
    j["class_row"] = rep.class_row;
    j["x_class"] = rep.x_class;
    j["aut0"] = rep.aut0;
    j["gY"] = rep.base_genus;
    j["deg_omega_X"] = rep.deg_omega;
    j["p_a_X"] = rep.p_a;
    j["betti"] = rep.betti;
    j["euler"] = rep.euler;
    if (rep.chi_q) {
        j["chi"] = rep.chi_q->chi;
        j["q"] = rep.chi_q->q;
        j["h0_omega"] = rep.chi_q->h0_omega;
        j["pic_reduced"] = rep.chi_q->pic_reduced;
    } else {
        j["chi"] = nullptr;
        j["q"] = nullptr;
        j["h0_omega"] = nullptr;
        j["pic_reduced"] = nullptr;
    }
    j["rho"] = rep.rho;
    json fibers = json::array();
    for (const FiberInfo& f : rep.fibers)
        fibers.push_back(json{{"m", f.multiplicity}, {"tame", f.tame}, {"pic0", f.pic0}});
    j["fibers"] = fibers;
    j["flags"] = rep.flags;
    return j.dump(2);
}

std::string report_to_table(const InvariantReport& rep) {
    std::ostringstream os;
    auto pad = [](std::string s, size_t w) {
        if (s.size() < w) s += std::string(w - s.size(), ' ');
        return s;
    };
    const size_t wk = 6, ws = 38, wx = 34, wg = 5, wb = 4;
    os << pad("kappa", wk) << " | " << pad("S", ws) << " | " << pad("X", wx) << " | "
       << pad("g(Y)", wg) << " | " << pad("b1", wb) << " | " << pad("b2", wb) << "\n";
    os << std::string(wk, '-') << "-+-" << std::string(ws, '-') << "-+-" << std::string(wx, '-')
       << "-+-" << std::string(wg, '-') << "-+-" << std::string(wb, '-') << "-+-"
       << std::string(wb, '-') << "\n";
    os << pad(kappa_str(rep.kappa), wk) << " | " << pad(rep.class_row, ws) << " | "
       << pad(rep.x_class, wx) << " | " << pad(std::to_string(rep.base_genus), wg) << " | "
       << pad(std::to_string(rep.betti[1]), wb) << " | " << pad(std::to_string(rep.betti[2]), wb)
       << "\n\n";

    os << "deg omega_X : " << rep.deg_omega << "\n";
    os << "p_a(X)      : " << rep.p_a << "\n";
    os << "betti       : " << rep.betti[0] << " " << rep.betti[1] << " " << rep.betti[2] << " "
       << rep.betti[3] << " " << rep.betti[4] << "  (euler = " << rep.euler << ")\n";
    if (rep.chi_q) {
        os << "chi(O_S)    : " << rep.chi_q->chi << "\n";
        os << "q(S)        : " << rep.chi_q->q << "\n";
        os << "h0(omega_S) : " << rep.chi_q->h0_omega << "\n";
        os << "Pic reduced : " << (rep.chi_q->pic_reduced ? "yes" : "no") << "\n";
    } else {
        os << "chi(O_S)    : unknown\n";
        os << "q(S)        : unknown\n";
        os << "h0(omega_S) : unknown\n";
        os << "Pic reduced : unknown\n";
    }
    os << "rho         : " << rep.rho << "\n";
    os << "aut0        : " << rep.aut0 << "\n";
    if (rep.fibers.empty()) {
        os << "fibers      : none (the quotient is a torsor)\n";
    } else {
        os << "fibers      :";
        for (const FiberInfo& f : rep.fibers)
            os << " (m=" << f.multiplicity << "," << (f.tame ? "tame" : "wild")
               << ",Pic0=" << f.pic0 << ")";
        os << "\n";
    }
    for (const std::string& fl : rep.flags) os << "note        : " << fl << "\n";
    return os.str();
}

}  // namespace isoell
