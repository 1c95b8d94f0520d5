#include "tp3/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "tp3/derivations.hpp"
#include "tp3/errors.hpp"
#include "tp3/io.hpp"

namespace tp3 {

using json = nlohmann::json;

namespace {

const char* const kFundamentalIdentity = "[[x,y,z],u,v] = [[x,u,v],y,z] + [[y,u,v],z,x] + [[z,u,v],x,y]";
const char* const kTransposedLeibniz = "3u.[x,y,z] = [u.x,y,z] + [x,u.y,z] + [x,y,u.z]";
const char* const kAssociativity = "(x.y).z = x.(y.z)";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::string basis_tuple(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ",e" : "e") + std::to_string(w[i]);
    return s + ")";
}

json violations_json(const CheckReport& r) {
    json a = json::array();
    for (const auto& v : r.violations)
        a.push_back({{"tuple", v.witness}, {"left", vector_json(v.left)}, {"right", vector_json(v.right)}});
    return a;
}

void print_check(std::ostream& out, const std::string& title, const char* identity, const CheckReport& r,
                 const std::string& note = "") {
    out << title << " " << identity << ": " << (r.passed ? "pass" : "FAIL") << note;
    if (!r.passed) out << " (" << r.violations.size() << " violation" << (r.violations.size() == 1 ? "" : "s") << ")";
    out << "\n";
    for (const auto& v : r.violations)
        out << "  at " << basis_tuple(v.witness) << ": left " << v.left << ", right " << v.right << "\n";
}

json product_rows(const CommProduct& p) {
    json rows = json::array();
    for (const auto& [key, val] : p.table()) {
        json value = json::object();
        for (std::size_t k = 0; k < val.size(); ++k)
            if (!val[k].is_zero()) value[std::to_string(k + 1)] = val[k].str();
        rows.push_back({{"args", {key[0], key[1]}}, {"value", value}});
    }
    return rows;
}

void print_product(std::ostream& out, const CommProduct& p, const std::string& indent) {
    if (p.is_zero()) out << indent << "(zero product)\n";
    for (const auto& [key, val] : p.table()) out << indent << "e" << key[0] << ".e" << key[1] << " = " << val << "\n";
}

struct Context {
    bool as_json = false;
    std::ostream& out;
    void emit(const json& j) const { out << j.dump() << "\n"; }
};

int cmd_check(const Context& cx, const std::string& file) {
    const Document doc = parse_document(read_file(file));
    const CheckReport fi = check_fundamental_identity(doc.bracket);
    std::optional<CheckReport> leibniz;
    std::optional<CommAssocReport> assoc;
    if (doc.product) {
        leibniz = check_transposed_leibniz(doc.bracket, *doc.product);
        assoc = check_commutative_associative(*doc.product);
    }
    const bool passed = fi.passed && (!leibniz || leibniz->passed);
    if (cx.as_json) {
        json data = {{"skew_symmetry", true}, {"fundamental_identity", fi.passed}};
        json wit = {{"fundamental_identity", violations_json(fi)}};
        if (leibniz) {
            data["transposed_leibniz"] = leibniz->passed;
            data["commutative"] = assoc->commutative;
            data["associative"] = assoc->associative.passed;
            wit["transposed_leibniz"] = violations_json(*leibniz);
            wit["associativity"] = violations_json(assoc->associative);
        }
        cx.emit({{"op", "check"}, {"passed", passed}, {"data", data}, {"witnesses", wit}});
    } else {
        cx.out << "skew-symmetry: pass (stored in sorted form)\n";
        print_check(cx.out, "fundamental identity", kFundamentalIdentity, fi);
        if (leibniz) {
            print_check(cx.out, "transposed Leibniz rule", kTransposedLeibniz, *leibniz);
            cx.out << "commutativity: pass (stored in sorted form)\n";
            print_check(cx.out, "associativity", kAssociativity, assoc->associative, " [informational]");
        }
        cx.out << (passed ? "result: pass\n" : "result: FAIL\n");
    }
    return passed ? kOk : kCheckFailed;
}

int cmd_derivations(const Context& cx, const std::string& file, const std::string& delta_text) {
    const Document doc = parse_document(read_file(file));
    const Rational delta = Rational::parse(delta_text);
    if (delta.is_zero()) throw ParseError("--delta must be nonzero");
    const DerivationSpace space = delta_derivations({doc.bracket, delta});
    if (cx.as_json) {
        json basis = json::array();
        for (const auto& m : space.basis) basis.push_back(json::parse(serialize_matrix(m)));
        cx.emit({{"op", "derivations"}, {"result", "ok"}, {"data", {{"delta", delta.str()}, {"dim", space.dim}, {"basis", basis}}}});
    } else {
        cx.out << "delta-derivations with delta = " << delta << ": dimension " << space.dim << "\n";
        for (std::size_t i = 0; i < space.basis.size(); ++i) cx.out << "  D" << i + 1 << " = " << space.basis[i] << "\n";
    }
    return kOk;
}

int cmd_tp_space(const Context& cx, const std::string& file) {
    const Document doc = parse_document(read_file(file));
    const ProductSpace space = tp_product_space(doc.bracket);
    if (cx.as_json) {
        json basis = json::array();
        for (const auto& p : space.basis) basis.push_back(product_rows(p));
        cx.emit({{"op", "tp-space"},
                 {"result", "ok"},
                 {"data", {{"dim", space.dim}, {"free_coordinates", space.free_coordinates}, {"basis", basis}}}});
    } else {
        cx.out << "compatible commutative products: dimension " << space.dim << "\n";
        cx.out << "free coordinates (beta^i_jk = e_k-coefficient of e_i.e_j):";
        for (const auto& s : space.free_coordinates) cx.out << " " << s;
        cx.out << "\n";
        for (std::size_t i = 0; i < space.basis.size(); ++i) {
            cx.out << "  basis element " << i + 1 << " (" << space.free_coordinates[i] << " = 1):\n";
            print_product(cx.out, space.basis[i], "    ");
        }
    }
    return kOk;
}

int cmd_transport(const Context& cx, const std::string& file, const std::string& matrix_file) {
    const Document doc = parse_document(read_file(file));
    const Matrix m = parse_matrix(read_file(matrix_file));
    if (m.rows() != static_cast<std::size_t>(doc.bracket.dim()))
        throw ParseError("matrix size does not match the document dimension");
    if (determinant(m).is_zero()) throw ParseError("matrix is singular");
    Document moved{transport_bracket(doc.bracket, m), std::nullopt, doc.meta};
    if (doc.product) moved.product = transport_product(*doc.product, m);
    const std::string text = serialize_document(moved);
    if (cx.as_json)
        cx.emit({{"op", "transport"}, {"result", "ok"}, {"data", json::parse(text)}});
    else
        cx.out << text << "\n";
    return kOk;
}

int cmd_classify(const Context& cx, const std::string& file) {
    const Document doc = parse_document(read_file(file));
    const CommProduct p = doc.product.value_or(CommProduct(doc.bracket.dim()));
    const ClassifyResult r = classify(doc.bracket, p);
    if (auto* c = std::get_if<Certificate>(&r)) {
        if (cx.as_json) {
            cx.emit({{"op", "classify"}, {"result", "certificate"}, {"data", json::parse(serialize_certificate(*c))}});
        } else {
            cx.out << "isomorphic to " << c->family.name();
            for (const auto& [k, v] : c->family.params) cx.out << " " << k << "=" << v;
            cx.out << "\nwitness (transport of the input by it equals the family table): " << c->witness << "\n";
        }
        return kOk;
    }
    if (auto* n = std::get_if<NotTransposedPoisson>(&r)) {
        if (cx.as_json)
            cx.emit({{"op", "classify"}, {"result", "not-transposed-poisson"}, {"passed", false}, {"witnesses", violations_json(n->report)}});
        else
            print_check(cx.out, "not a transposed Poisson structure; transposed Leibniz rule", kTransposedLeibniz, n->report);
        return kCheckFailed;
    }
    json data;
    std::string result, text;
    if (auto* e = std::get_if<NeedsExtension>(&r)) {
        result = "needs-extension";
        data = {{"radicand", e->radicand.str()}, {"degree", e->degree}, {"detail", e->detail}};
        text = "needs extension: adjoin the degree-" + std::to_string(e->degree) + " root of " + e->radicand.str() +
               " (" + e->detail + ")";
    } else if (auto* u = std::get_if<Unclassified>(&r)) {
        result = "unclassified";
        data = {{"reason", u->reason}};
        text = "unclassified: " + u->reason;
    } else {
        result = "unsupported";
        data = {{"reason", std::get<Unsupported>(r).reason}};
        text = "unsupported: " + std::get<Unsupported>(r).reason;
    }
    if (cx.as_json)
        cx.emit({{"op", "classify"}, {"result", result}, {"data", data}});
    else
        cx.out << text << "\n";
    return kNotClassified;
}

int cmd_verify(const Context& cx, const std::string& case_text, std::uint64_t seed) {
    std::vector<CaseId> cases;
    if (case_text.empty()) {
        for (int id = 1; id <= 16; ++id) cases.push_back(CaseId::of_family(id));
    } else {
        auto c = CaseId::parse(case_text);
        if (!c) throw ParseError("unknown case id \"" + case_text + "\" (expected 1-a .. 4-d)");
        cases.push_back(*c);
    }
    static const char* const checks[] = {"", "automorphism", "transposed Leibniz rule", "fixed point",
                                         "eleven equations", "case detection"};
    bool all = true;
    json results = json::array();
    for (const CaseId& c : cases) {
        const CheckReport r = verify_paper_case(c, seed);
        all = all && r.passed;
        const std::string fam = "T" + std::to_string(c.family());
        if (cx.as_json) {
            json wit = json::array();
            for (const auto& v : r.violations) wit.push_back({{"check", checks[v.witness[0]]}, {"draw", v.witness[1]}});
            results.push_back({{"case", c.str()}, {"family", fam}, {"passed", r.passed},
                               {"automorphism", json::parse(serialize_matrix(case_automorphism(c.family())))},
                               {"failures", wit}});
        } else {
            cx.out << "case " << c.str() << " (" << fam << ", automorphism " << case_automorphism(c.family())
                   << "): " << (r.passed ? "pass" : "FAIL") << "\n";
            for (const auto& v : r.violations)
                cx.out << "  " << checks[v.witness[0]] << " failed on draw " << v.witness[1] << "\n";
        }
    }
    if (cx.as_json)
        cx.emit({{"op", "verify-paper"}, {"passed", all}, {"data", {{"seed", seed}}}, {"witnesses", results}});
    return all ? kOk : kCheckFailed;
}

int cmd_fingerprint(const Context& cx, const std::vector<std::string>& files) {
    std::vector<std::vector<int>> prints;
    for (const auto& f : files) {
        const Document doc = parse_document(read_file(f));
        prints.push_back(fingerprint(doc.bracket, doc.product.value_or(CommProduct(doc.bracket.dim()))));
    }
    const bool same = prints.size() == 2 && prints[0] == prints[1];
    if (cx.as_json) {
        json data = {{"fingerprints", prints}};
        if (prints.size() == 2) data["indistinguishable"] = same;
        cx.emit({{"op", "fingerprint"}, {"result", "ok"}, {"data", data}});
    } else {
        for (std::size_t i = 0; i < prints.size(); ++i) {
            cx.out << files[i] << ": (";
            for (std::size_t k = 0; k < prints[i].size(); ++k) cx.out << (k ? ", " : "") << prints[i][k];
            cx.out << ")\n";
        }
        if (prints.size() == 2) cx.out << (same ? "indistinguishable by fingerprint\n" : "fingerprints differ: not isomorphic\n");
    }
    return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for transposed Poisson 3-Lie algebras", "tp3"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file, file2, matrix_file, delta = "1/3", case_text;
    std::uint64_t seed = 1;
    auto* check = app.add_subcommand("check", "Verify the defining identities of a document");
    check->add_option("file", file, "Algebra document")->required();
    auto* der = app.add_subcommand("derivations", "Basis of the delta-derivations of the bracket");
    der->add_option("file", file, "Algebra document")->required();
    der->add_option("--delta", delta, "Rational delta, default 1/3");
    auto* space = app.add_subcommand("tp-space", "Commutative products compatible with the bracket");
    space->add_option("file", file, "Algebra document")->required();
    auto* tr = app.add_subcommand("transport", "Push the document forward along an invertible map");
    tr->add_option("file", file, "Algebra document")->required();
    tr->add_option("--matrix", matrix_file, "Matrix file, rows are images of basis vectors")->required();
    auto* cls = app.add_subcommand("classify", "Certificate of isomorphism onto one of T1..T16");
    cls->add_option("file", file, "Algebra document")->required();
    auto* ver = app.add_subcommand("verify-paper", "Check the sixteen subcase automorphisms and families");
    ver->add_option("--case", case_text, "Subcase id such as 1-a");
    ver->add_option("--seed", seed, "Seed for the random parameter draws");
    auto* fp = app.add_subcommand("fingerprint", "Isomorphism invariants; with two files, compare them");
    fp->add_option("file", file, "Algebra document")->required();
    fp->add_option("other", file2, "Second algebra document");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    const Context cx{format == "json", out};
    try {
        if (check->parsed()) return cmd_check(cx, file);
        if (der->parsed()) return cmd_derivations(cx, file, delta);
        if (space->parsed()) return cmd_tp_space(cx, file);
        if (tr->parsed()) return cmd_transport(cx, file, matrix_file);
        if (cls->parsed()) return cmd_classify(cx, file);
        if (ver->parsed()) return cmd_verify(cx, case_text, seed);
        if (fp->parsed()) return cmd_fingerprint(cx, file2.empty() ? std::vector{file} : std::vector{file, file2});
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace tp3
