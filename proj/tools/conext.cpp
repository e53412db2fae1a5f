// conext: command-line front end for the cone extendibility library.
//
// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 usage or parse
// error, 3 semantic error (improper cone, bad functional, shape mismatch).

#include "conext/cone.hpp"
#include "conext/extendibility.hpp"
#include "conext/io.hpp"
#include "conext/polytope.hpp"
#include "conext/quantum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using namespace conext;
using json = nlohmann::ordered_json;

namespace {

enum Exit { affirmative = 0, negative = 1, usage = 2, semantic = 3 };

class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A report is a list of records; each record is a list of key/value fields.
// Text mode prints "key: value" lines, multi-line values (serialized files)
// indented under their key. json-lines prints one object per record.
class Report {
public:
    explicit Report(bool json_lines) : json_(json_lines) { records_.emplace_back(); }

    Report& field(const std::string& key, json value) {
        records_.back().emplace_back(key, std::move(value));
        return *this;
    }
    void next_record() { records_.emplace_back(); }
    bool json_lines() const { return json_; }
    /// Text printed verbatim in text mode.
    void raw(std::string text) { raw_ += std::move(text); }

    void print(std::ostream& out) const {
        out << raw_;
        for (const auto& rec : records_) {
            if (rec.empty()) continue;
            if (json_) {
                json obj = json::object();
                for (const auto& [k, v] : rec) obj[k] = v;
                out << obj.dump() << '\n';
                continue;
            }
            for (const auto& [k, v] : rec) {
                const std::string text = render(v);
                out << k << ':' << (!text.empty() && text.front() == '\n' ? "" : " ") << text << '\n';
            }
        }
    }

private:
    static std::string render(const json& v) {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s.find('\n') == std::string::npos) return s;
            std::string out;
            std::istringstream lines(s);
            for (std::string line; std::getline(lines, line);) out += "\n  " + line;
            return out;
        }
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        if (v.is_array()) {
            std::string out = "[";
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + render(v[i]);
            return out + "]";
        }
        return v.dump();
    }

    bool json_;
    std::string raw_;
    std::vector<std::vector<std::pair<std::string, json>>> records_;
};

json rationals(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::string one_based(const FacetSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it + 1);
    return out + "}";
}

struct Options {
    std::string cone_a, cone_b, phi, point, file, report = "text";
    std::size_t k = 1;
};

Cone load_cone(const std::string& path) {
    const io::ConeFile f = io::read_cone(path);
    return make_cone(f.generators);
}

BasedCone load_based(const std::string& path, const std::string& phi_override) {
    const io::ConeFile f = io::read_cone(path);
    const Cone c = make_cone(f.generators);
    RationalVector phi;
    if (!phi_override.empty()) phi = io::parse_vector(phi_override);
    else if (f.phi) phi = *f.phi;
    else throw SemanticError(path + ": no phi given (add a 'phi' line or pass --phi)");
    if (phi.size() != c.dim()) throw SemanticError("phi has " + std::to_string(phi.size()) + " entries, cone dimension is " + std::to_string(c.dim()));
    return make_based(c, phi);
}

Tensor load_point(const std::string& path, std::size_t na, std::size_t nb) {
    const io::TensorFile f = io::read_tensor(path);
    if (f.shape != std::vector<std::size_t>{na, nb}) {
        throw SemanticError(path + ": expected shape " + std::to_string(na) + " " + std::to_string(nb));
    }
    return f.tensor();
}

// Polytope from a polytope file or from the base of a cone file.
Polytope load_polytope(const std::string& path, const std::string& phi_override, std::string& name) {
    const io::GeometryFile g = io::read_geometry(path);
    if (const auto* p = std::get_if<io::PolytopeFile>(&g)) {
        name = p->name;
        return polytope_from_points(p->vertices);
    }
    const auto& c = std::get<io::ConeFile>(g);
    name = c.name;
    const Cone cone = make_cone(c.generators);
    RationalVector phi;
    if (!phi_override.empty()) phi = io::parse_vector(phi_override);
    else if (c.phi) phi = *c.phi;
    else phi = interior_point(dualize(cone));
    return base_polytope(cone, phi);
}

int cmd_dualize(const Options& o, Report& r) {
    const io::ConeFile f = io::read_cone(o.file);
    const Cone dual = dualize(make_cone(f.generators));
    const std::string text = io::serialize(io::to_file(dual, f.name + "-dual"));
    if (!r.json_lines()) {
        r.raw(text);
        return affirmative;
    }
    r.field("cone", f.name).field("rays", static_cast<int>(dual.rays().size())).field("dual", text);
    return affirmative;
}

int cmd_factor(const Options& o, Report& r) {
    std::string name;
    const Polytope p = load_polytope(o.file, o.phi, name);
    r.field("polytope", name).field("dimension", static_cast<int>(p.dim));
    r.field("vertices", static_cast<int>(p.vertex_count())).field("facets", static_cast<int>(p.facet_count()));
    const FactorizationResult f = factor_as_simplices(p);
    if (const auto* s = std::get_if<SimplexFactorization>(&f)) {
        r.field("product of simplices", true).field("factors", s->sorted_dims());
        return affirmative;
    }
    r.field("product of simplices", false).field("reason", std::get<FactorizationFailure>(f).reason);
    return negative;
}

int cmd_theorem3(const Options& o, Report& r) {
    std::string name;
    const Polytope p = load_polytope(o.file, o.phi, name);
    r.field("polytope", name);
    const auto violation = affine_hull_violation(p);
    const bool product = std::holds_alternative<SimplexFactorization>(factor_as_simplices(p));
    const bool simple = is_simple(p), two_level = is_two_level(p);
    r.field("affine hulls commute", !violation);
    if (violation) {
        r.field("violated", std::string(p.dim == 2 ? "edges " : "facets ") + one_based(violation->facets));
        r.field("face hull dimension", to_string(violation->dims.face_hull));
        r.field("hull intersection dimension", to_string(violation->dims.hull_intersection));
    }
    r.field("product of simplices", product).field("simple", simple).field("2-level", two_level);
    if (product != !violation || product != (simple && two_level)) {
        throw ConsistencyError("characterizations disagree on " + name);
    }
    return violation ? negative : affirmative;
}

int cmd_eb_check(const Options& o, Report& r) {
    const BasedCone b = load_based(o.cone_b, o.phi);
    const EbVerdict v = is_entanglement_breaking(b, o.k);
    r.field("k", static_cast<int>(o.k)).field("entanglement breaking", v.entanglement_breaking);
    r.field("combinatorial", v.combinatorial).field("linear program", v.linear_program);
    if (v.factorization) r.field("factors", v.factorization->sorted_dims());
    if (v.entanglement_breaking) r.field("terms", static_cast<int>(v.decomposition.terms.size()));
    else r.field("separator", rationals(v.separator));
    return v.entanglement_breaking ? affirmative : negative;
}

int cmd_ext_check(const Options& o, Report& r) {
    const Cone a = load_cone(o.cone_a);
    const BasedCone b = load_based(o.cone_b, o.phi);
    const Tensor x = load_point(o.point, a.dim(), b.cone.dim());
    const ExtkVerdict v = ext_k_membership(x, a, b, o.k);
    if (!verify_ext_verdict(v, x, a, b, o.k)) throw ConsistencyError("verdict failed independent verification");
    r.field("k", static_cast<int>(o.k)).field("verdict", v.member ? "MEMBER" : "NON-MEMBER").field("verified", true);
    if (v.member) r.field("extension", io::serialize(io::to_file(v.extension, "extension")));
    else r.field("witness", io::serialize(io::to_file(v.witness, "witness")));
    return v.member ? affirmative : negative;
}

int cmd_min_check(const Options& o, Report& r) {
    const Cone a = load_cone(o.cone_a);
    const Cone b = load_cone(o.cone_b);
    const Tensor x = load_point(o.point, a.dim(), b.dim());
    const RationalVector flat(x.entries().begin(), x.entries().end());
    const auto gens = min_tensor_generators(a, b);
    const ConicOutcome out = conic_membership(flat, gens);
    const bool ok = out.member ? verify_decomposition(flat, gens, out.weights) : verify_separator(flat, gens, out.separator);
    if (!ok) throw ConsistencyError("min-membership certificate failed verification");
    r.field("verdict", out.member ? "MEMBER" : "NON-MEMBER").field("verified", true);
    if (out.member) {
        r.field("weights", rationals(out.weights));
    } else {
        const Tensor sep({{a.dim(), Variance::dual}, {b.dim(), Variance::dual}}, out.separator);
        r.field("separator", io::serialize(io::to_file(sep, "separator")));
    }
    return out.member ? affirmative : negative;
}

int cmd_gap_search(const Options& o, Report& r) {
    const Cone a = load_cone(o.cone_a);
    const BasedCone b = load_based(o.cone_b, o.phi);
    const auto gap = search_gap_point(a, b, o.k);
    r.field("k", static_cast<int>(o.k)).field("gap found", gap.has_value());
    if (gap) r.field("point", io::serialize(io::to_file(*gap, "gap-k" + std::to_string(o.k))));
    return gap ? affirmative : negative;
}

int cmd_quantum_demo(Report& r) {
    quantum::AppendixReport rep;
    try {
        rep = quantum::verify_appendix();
    } catch (const quantum::AppendixFailure& e) {
        r.field("all claims", "FAIL").field("error", e.what());
        return negative;
    }
    for (const auto& c : rep.claims) {
        r.field("claim", c.label).field("verdict", c.verdict ? "PASS" : "FAIL");
        for (const auto& [k, v] : c.values) r.field(k, v);
        r.next_record();
    }
    r.field("reduction scale", rep.reduction_scale.str()).field("all claims", rep.all_pass() ? "PASS" : "FAIL");
    return rep.all_pass() ? affirmative : negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with tensor products of polyhedral cones"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--report", o.report, "Output format")->check(CLI::IsMember({"text", "json-lines"}));

    const auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "Cone or polytope file")->required(); };
    const auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "Level k >= 1")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64})); };
    const auto add_phi = [&](CLI::App* c) { c->add_option("--phi", o.phi, "Inline functional, e.g. 1,1/5,0"); };

    auto* dual = app.add_subcommand("dualize", "Print the dual cone");
    add_file(dual);
    auto* factor = app.add_subcommand("factor", "Recognize a product of simplices");
    add_file(factor);
    add_phi(factor);
    auto* thm3 = app.add_subcommand("theorem3", "Check that affine hulls commute with facet intersections");
    add_file(thm3);
    add_phi(thm3);
    auto* eb = app.add_subcommand("eb-check", "Decide whether the k-th reduction map is entanglement breaking");
    eb->add_option("--cone-b", o.cone_b)->required();
    add_phi(eb);
    add_k(eb);
    auto* ext = app.add_subcommand("ext-check", "Decide membership of a point in the k-th extendibility level");
    auto* gap = app.add_subcommand("gap-search", "Search for a k-extendible point outside the min product");
    for (auto* c : {ext, gap}) {
        c->add_option("--cone-a", o.cone_a)->required();
        c->add_option("--cone-b", o.cone_b)->required();
        add_phi(c);
        add_k(c);
    }
    ext->add_option("--point", o.point, "Tensor file of shape dim(A) dim(B)")->required();
    auto* minc = app.add_subcommand("min-check", "Decide membership in the min tensor product");
    minc->add_option("--cone-a", o.cone_a)->required();
    minc->add_option("--cone-b", o.cone_b)->required();
    minc->add_option("--point", o.point)->required();
    auto* qd = app.add_subcommand("quantum-demo", "Verify the exact Q(sqrt 2) operator identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    Report report(o.report == "json-lines");
    int code = usage;
    try {
        if (*dual) code = cmd_dualize(o, report);
        else if (*factor) code = cmd_factor(o, report);
        else if (*thm3) code = cmd_theorem3(o, report);
        else if (*eb) code = cmd_eb_check(o, report);
        else if (*ext) code = cmd_ext_check(o, report);
        else if (*gap) code = cmd_gap_search(o, report);
        else if (*minc) code = cmd_min_check(o, report);
        else if (*qd) code = cmd_quantum_demo(report);
    } catch (const io::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return semantic;
    }
    report.print(std::cout);
    return code;
}
