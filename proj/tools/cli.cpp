#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chtg/analysis.hpp"
#include "chtg/arithmetic.hpp"
#include "chtg/classify.hpp"
#include "chtg/errors.hpp"
#include "chtg/traces.hpp"
#include "chtg/triangle.hpp"

namespace chtg::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for malformed flags; mapped to kUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> p;
    std::vector<double> ell;
    std::vector<double> r;
    std::optional<std::string> alpha;
    std::optional<std::string> cos_alpha;
    std::optional<double> t;
    std::optional<std::string> n;

    std::string word;
    std::string method = "all";
    bool poly = false;
    std::size_t max_len = 8;
    bool all_words = false;
    bool exclude_alternations = false;
    std::vector<double> mostow;

    bool json = false;
    bool csv = false;
    std::optional<double> tol;
    unsigned jobs = 1;
};

Json jnum(double x)
{
    if (std::isnan(x))
        return nullptr;
    if (std::isinf(x))
        return x > 0 ? "+inf" : "-inf";
    return x;
}

Json jcomplex(Complex z)
{
    return Json{{"re", jnum(z.real())}, {"im", jnum(z.imag())}};
}

Json jorder(const Order& o)
{
    return o.is_infinite() ? Json("inf") : Json(o.value());
}

double parse_number(const std::string& text)
{
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: \"" + text + "\"");
    }
    if (pos != text.size())
        throw UsageError("not a number: \"" + text + "\"");
    return v;
}

// "61/64", "0.95" and the like.
double parse_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return parse_number(text);
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0)
        throw UsageError("zero denominator in \"" + text + "\"");
    return parse_number(text.substr(0, slash)) / den;
}

// Radians, optionally as multiples of pi: "pi", "π", "-pi/2", "2pi/3", "2*pi".
double parse_angle(std::string text)
{
    for (auto pos = text.find("\xCF\x80"); pos != std::string::npos; pos = text.find("\xCF\x80"))
        text.replace(pos, 2, "pi");
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string::npos)
        return parse_number(text);

    std::string coeff = text.substr(0, pi_pos);
    if (!coeff.empty() && coeff.back() == '*')
        coeff.pop_back();
    double factor = 1.0;
    if (coeff == "-")
        factor = -1.0;
    else if (!coeff.empty() && coeff != "+")
        factor = parse_number(coeff);

    const std::string rest = text.substr(pi_pos + 2);
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/')
            throw UsageError("cannot parse angle \"" + text + "\"");
        den = parse_number(rest.substr(1));
    }
    return factor * std::numbers::pi / den;
}

Order parse_order(const std::string& text)
{
    try {
        return Order::parse(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

double default_tol(const RunConfig& cfg)
{
    if (cfg.tol)
        return *cfg.tol;
    if (const char* env = std::getenv("CHTG_TOL"))
        return parse_number(env);
    return kDefaultClassifyTol;
}

TriangleParams build_params(const RunConfig& cfg, bool need_angle)
{
    const int sources = int(!cfg.p.empty()) + int(!cfg.ell.empty()) + int(!cfg.r.empty());
    if (sources != 1)
        throw UsageError("give exactly one of --p, --ell, --r");
    const int angles = int(cfg.alpha.has_value()) + int(cfg.cos_alpha.has_value()) + int(cfg.t.has_value())
                     + int(cfg.n.has_value());
    if (angles > 1)
        throw UsageError("give at most one of --alpha, --cos-alpha, --t, --n");
    if (need_angle && angles == 0)
        throw UsageError("this command needs one of --alpha, --cos-alpha, --t, --n");

    if (cfg.n) {
        if (cfg.p.empty())
            throw UsageError("--n needs a signature (--p)");
        return group_with_rotation(parse_order(cfg.p[0]), parse_order(cfg.p[1]), parse_order(cfg.p[2]),
                                   parse_order(*cfg.n))
            .params;
    }

    TriangleParams p;
    try {
        if (!cfg.p.empty())
            p = from_signature(parse_order(cfg.p[0]), parse_order(cfg.p[1]), parse_order(cfg.p[2]));
        else if (!cfg.ell.empty())
            p = from_lengths(cfg.ell[0], cfg.ell[1], cfg.ell[2]);
        else
            p = from_radii(cfg.r[0], cfg.r[1], cfg.r[2]);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }

    if (cfg.alpha)
        p = p.with_alpha(parse_angle(*cfg.alpha));
    else if (cfg.cos_alpha) {
        const double c = parse_fraction(*cfg.cos_alpha);
        if (!(c >= -1 && c <= 1))
            throw UsageError("--cos-alpha must lie in [-1, 1]");
        p = p.with_cos_alpha(c);
    } else if (cfg.t)
        p = p.with_t(*cfg.t);
    return p;
}

Json params_json(const TriangleParams& p, bool with_angle)
{
    Json j;
    j["r1"] = jnum(p.r[0]);
    j["r2"] = jnum(p.r[1]);
    j["r3"] = jnum(p.r[2]);
    if (with_angle) {
        j["alpha"] = jnum(p.alpha);
        j["t"] = jnum(p.t());
    }
    if (p.signature) {
        Json arr = Json::array();
        for (const auto& o : *p.signature)
            arr.push_back(jorder(o));
        j["p"] = arr;
    }
    if (p.lengths)
        j["ell"] = Json::array({(*p.lengths)[0], (*p.lengths)[1], (*p.lengths)[2]});
    if (p.rotation_order)
        j["n"] = jorder(*p.rotation_order);
    return j;
}

bool has_angle(const RunConfig& cfg)
{
    return cfg.alpha || cfg.cos_alpha || cfg.t || cfg.n;
}

// Scalar rendering shared by the csv and human formats.
std::string cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_array()) {
        std::string s;
        for (const auto& v : j)
            s += (s.empty() ? "" : " ") + cell(v);
        out.emplace_back(prefix, s);
    } else {
        out.emplace_back(prefix, cell(j));
    }
}

void emit(const RunConfig& cfg, const Json& doc, std::ostream& out)
{
    if (cfg.json) {
        out << doc.dump(2) << '\n';
        return;
    }
    const bool has_rows = doc.contains("rows") && doc["rows"].is_array();
    if (cfg.csv) {
        if (has_rows) {
            const Json& rows = doc["rows"];
            if (rows.empty())
                return;
            std::string header;
            for (const auto& [k, v] : rows.front().items())
                header += (header.empty() ? "" : ",") + k;
            out << header << '\n';
            for (const auto& row : rows) {
                std::string line;
                bool first = true;
                for (const auto& [k, v] : row.items()) {
                    line += (first ? "" : ",") + cell(v);
                    first = false;
                }
                out << line << '\n';
            }
            return;
        }
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(doc, "", kv);
        out << "key,value\n";
        for (const auto& [k, v] : kv)
            out << k << ',' << v << '\n';
        return;
    }

    Json head = doc;
    if (has_rows)
        head.erase("rows");
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(head, "", kv);
    std::size_t width = 0;
    for (const auto& [k, v] : kv)
        width = std::max(width, k.size());
    for (const auto& [k, v] : kv)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    if (has_rows && !doc["rows"].empty()) {
        out << '\n';
        std::string line;
        for (const auto& [k, v] : doc["rows"].front().items())
            line += (line.empty() ? "" : "\t") + k;
        out << line << '\n';
        for (const auto& row : doc["rows"]) {
            line.clear();
            bool first = true;
            for (const auto& [k, v] : row.items()) {
                line += (first ? "" : "\t") + cell(v);
                first = false;
            }
            out << line << '\n';
        }
    }
}

Word parse_word(const std::string& text)
{
    try {
        return Word::parse(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Word w = parse_word(cfg.word);
    const TriangleParams p = build_params(cfg, true);
    const double tol = default_tol(cfg);

    std::vector<std::string> methods;
    if (cfg.method == "all") {
        methods.push_back("oracle");
        if (w.size() <= kCombinatorialCap)
            methods.push_back("combinatorial");
        if (std::ranges::all_of(p.r, [](double r) { return r > 0; }))
            methods.push_back("recursive");
    } else {
        methods.push_back(cfg.method);
    }

    std::vector<TraceValue> values;
    for (const auto& m : methods) {
        if (m == "oracle")
            values.push_back(trace_oracle(w, realize(p)));
        else if (m == "combinatorial")
            values.push_back(trace_combinatorial(w, p));
        else if (m == "recursive")
            values.push_back(trace_recursive(w, p));
        else
            throw UsageError("unknown method \"" + m + "\"");
    }

    const TraceValue& primary = values.front();
    const IsometryClass cls = classify(primary.tau, true, tol);
    Json doc;
    doc["word"] = w.str();
    doc["tau"] = jcomplex(primary.tau);
    doc["method"] = std::string(to_string(primary.method));
    doc["rho"] = jnum(cls.rho);
    doc["verdict"] = std::string(to_string(cls.verdict));
    doc["params"] = params_json(p, true);

    double max_delta = 0;
    Json others = Json::array();
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = std::abs(values[i].tau - primary.tau);
        max_delta = std::max(max_delta, d);
        others.push_back({{"method", std::string(to_string(values[i].method))},
                          {"tau", jcomplex(values[i].tau)},
                          {"delta", jnum(d)}});
    }
    if (!others.empty()) {
        doc["cross_checks"] = others;
        doc["max_delta"] = jnum(max_delta);
    }

    if (cfg.poly) {
        const ExactTracePolynomial poly = trace_polynomial_exact(w);
        Json coeffs = Json::array();
        for (const auto& [wn, P] : poly.coeffs)
            coeffs.push_back({{"w", wn}, {"poly", P.str()}});
        doc["polynomial"] = {{"n", poly.length}, {"coeffs", coeffs}};
    }

    emit(cfg, doc, out);
    if (max_delta > 1e-6) {
        err << "chtg: trace methods disagree by " << max_delta << '\n';
        return kDomain;
    }
    return kOk;
}

Json thresholds_json(const TriangleParams& p)
{
    const Thresholds th = thresholds(p);
    Json doc;
    doc["R"] = jnum(th.R);
    doc["c_inf"] = jnum(th.c_inf);
    doc["t_inf"] = jnum(th.t_inf);
    doc["c_A"] = jnum(th.c_A);
    doc["t_A"] = jnum(th.t_A);
    doc["in_family"] = th.in_family;
    if (th.in_family) {
        doc["type"] = std::string(to_string(family_type(p)));
        const FamilyQuartic& q = *th.quartic;
        doc["fB_over_1024R"] = {{"t4", jnum(q.a4)}, {"t2", jnum(q.a2)}, {"t0", jnum(q.a0)}};
        doc["t_B_minus"] = q.t_minus ? jnum(*q.t_minus) : Json(nullptr);
        doc["t_B_plus"] = q.t_plus ? jnum(*q.t_plus) : Json(nullptr);
        if (const auto chk = printed_family_c_A(p))
            doc["family_c_A"] = {{"printed", jnum(chk->printed)},
                                 {"general", jnum(chk->general)},
                                 {"agrees", chk->agrees}};
    }
    return doc;
}

int cmd_thresholds(const RunConfig& cfg, std::ostream& out)
{
    const bool angle = has_angle(cfg);
    const TriangleParams p = build_params(cfg, false);
    Json doc;
    doc["params"] = params_json(p, angle);
    doc.update(thresholds_json(p));

    bool certificate = false;
    if (angle) {
        const auto cert = non_discreteness_certificate(p);
        certificate = cert.has_value();
        doc["certificate"] = cert ? Json{{"word", cert->word.str()},
                                         {"tau", jcomplex(cert->tau)},
                                         {"rho", jnum(cert->rho)},
                                         {"t", jnum(cert->t)},
                                         {"t_A", jnum(cert->t_A)}}
                                  : Json(nullptr);
    }
    emit(cfg, doc, out);
    return certificate ? kHit : kOk;
}

int cmd_family(const RunConfig& cfg, std::ostream& out)
{
    const TriangleParams p = build_params(cfg, false);
    Json doc;
    doc["params"] = params_json(p, false);
    doc["in_family"] = family_membership(p);
    doc["R"] = jnum(p.product());
    doc["type_b_bound"] = jnum(type_b_bound());
    if (family_membership(p)) {
        const Json th = thresholds_json(p);
        for (const char* key : {"type", "fB_over_1024R", "t_B_minus", "t_B_plus", "family_c_A"})
            if (th.contains(key))
                doc[key] = th[key];
    }
    emit(cfg, doc, out);
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out)
{
    const TriangleParams p = build_params(cfg, true);
    ScanFilters filters;
    filters.cyclically_reduced = !cfg.all_words;
    filters.exclude_alternations = cfg.exclude_alternations;
    const ScanReport rep = scan_elliptic(p, cfg.max_len, filters, cfg.jobs, default_tol(cfg));

    Json doc;
    doc["params"] = params_json(p, true);
    doc["max_len"] = cfg.max_len;
    doc["words"] = rep.entries.size();
    doc["hits"] = rep.hits();
    Json rows = Json::array();
    for (const auto& e : rep.entries)
        rows.push_back({{"word", e.word.str()},
                        {"re_tau", jnum(e.cls.tau.real())},
                        {"im_tau", jnum(e.cls.tau.imag())},
                        {"rho", jnum(e.cls.rho)},
                        {"verdict", std::string(to_string(e.cls.verdict))}});
    doc["rows"] = rows;
    emit(cfg, doc, out);
    return rep.hits() ? kHit : kOk;
}

int cmd_ring_mostow(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.mostow.size() != 2)
        throw UsageError("--mostow takes p and rho");
    const MostowGroup g = mostow_group(static_cast<int>(cfg.mostow[0]), cfg.mostow[1]);
    Json doc;
    doc["mostow"] = {{"p", g.p},
                     {"rho", jnum(g.rho)},
                     {"alpha", jnum(g.alpha)},
                     {"r", jnum(g.r)},
                     {"realizable", g.realizable},
                     {"identity_residual", jnum(mostow_identity_residual(g))}};
    doc["experimental"] = false;
    std::size_t failures = 0;
    Json rows = Json::array();
    for_each_word(1, std::min(cfg.max_len, kExactCap), !cfg.all_words, [&](const Word& w) {
        const MostowFieldVerdict v = mostow_trace_field_check(w, g);
        failures += v.passed ? 0 : 1;
        rows.push_back({{"word", w.str()},
                        {"re_tau", jnum(v.tau.real())},
                        {"im_tau", jnum(v.tau.imag())},
                        {"residual", jnum(v.residual)},
                        {"passed", v.passed}});
    });
    doc["failures"] = failures;
    doc["rows"] = rows;
    emit(cfg, doc, out);
    return failures ? kHit : kOk;
}

int cmd_ring_check(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.mostow.empty())
        return cmd_ring_mostow(cfg, out);
    if (cfg.p.empty() || !cfg.n)
        throw UsageError("ring-check needs --p and --n (or --mostow)");
    const GroupWithRotation g = group_with_rotation(parse_order(cfg.p[0]), parse_order(cfg.p[1]),
                                                    parse_order(cfg.p[2]), parse_order(*cfg.n));
    const double tol = cfg.tol.value_or(1e-7);

    std::vector<int> irrational;
    for (const Order& o : {(*g.params.signature)[0], (*g.params.signature)[1], (*g.params.signature)[2], g.n}) {
        if (o.is_infinite())
            continue;
        const int v = o.value();
        if (v != 2 && v != 3 && v != 4 && v != 6)
            irrational.push_back(v);
    }
    std::ranges::sort(irrational);
    const auto [first, last] = std::ranges::unique(irrational);
    irrational.erase(first, last);
    if (irrational.size() > 1)
        throw InvalidArgument("ring membership over several cyclotomic generators is not supported");

    Json doc;
    doc["params"] = params_json(g.params, true);
    std::size_t failures = 0;
    Json rows = Json::array();
    if (irrational.empty()) {
        doc["ring"] = "Z";
        doc["experimental"] = false;
        const TriangleRealization tri = realize(g.params);
        for_each_word(1, cfg.max_len, !cfg.all_words, [&](const Word& w) {
            const IntegerRingVerdict v = integer_ring_check(trace_oracle(w, tri).tau, tol);
            failures += v.passed ? 0 : 1;
            rows.push_back({{"word", w.str()},
                            {"two_re", jnum(v.two_re)},
                            {"abs2", jnum(v.abs2)},
                            {"residual", jnum(std::max(v.residual_two_re, v.residual_abs2))},
                            {"passed", v.passed}});
        });
    } else {
        const int q = irrational.front();
        doc["ring"] = "Z[2cos(2pi/" + std::to_string(q) + ")]";
        doc["experimental"] = true;
        for_each_word(1, std::min(cfg.max_len, kExactCap), !cfg.all_words, [&](const Word& w) {
            const ConjugateQuantities cq = conjugate_ring_quantities(w, g, q);
            const BasisVerdict re = basis_ring_check(cq.two_re, q, tol);
            const BasisVerdict ab = basis_ring_check(cq.abs2, q, tol);
            const bool passed = re.passed && ab.passed;
            failures += passed ? 0 : 1;
            rows.push_back({{"word", w.str()},
                            {"two_re", Json(re.coeffs)},
                            {"abs2", Json(ab.coeffs)},
                            {"residual", jnum(std::max(re.residual, ab.residual))},
                            {"passed", passed}});
        });
    }
    doc["failures"] = failures;
    doc["rows"] = rows;
    emit(cfg, doc, out);
    return failures ? kHit : kOk;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out)
{
    const TriangleParams p = build_params(cfg, true);
    Json doc;
    doc["params"] = params_json(p, true);
    doc["canonical_alpha"] = jnum(p.canonical_alpha());
    doc["gram_determinant"] = jnum(gram_determinant(p));
    const bool exists = satisfies_existence(p);
    doc["exists"] = exists;
    if (exists) {
        const TriangleRealization tri = realize(p);
        try {
            doc["cartan"] = jnum(cartan_invariant(tri));
        } catch (const Error&) {
            doc["cartan"] = nullptr;
        }
        try {
            doc["sigma"] = jnum(brehm_sigma(tri));
            doc["sigma_closed_form"] = jnum(brehm_sigma_closed_form(p));
        } catch (const IdealVertexDegenerate&) {
            doc["sigma"] = nullptr;
        }
        try {
            doc["eta"] = jcomplex(hakim_sandler_eta(tri));
            doc["eta_closed_form"] = jcomplex(hakim_sandler_eta_closed_form(p));
        } catch (const IdealVertexDegenerate&) {
            doc["eta"] = nullptr;
        }
    }
    emit(cfg, doc, out);
    return kOk;
}

void add_params(CLI::App* sub, RunConfig& cfg, bool with_angle)
{
    sub->add_option("--p", cfg.p, "vertex orders p1 p2 p3 (integers >= 2 or inf)")->expected(3);
    sub->add_option("--ell", cfg.ell, "ultra-parallel distances l1 l2 l3")->expected(3);
    sub->add_option("--r", cfg.r, "raw r1 r2 r3")->expected(3);
    if (!with_angle)
        return;
    sub->add_option("--alpha", cfg.alpha, "angular invariant in radians (pi, 2pi/3 accepted)");
    sub->add_option("--cos-alpha", cfg.cos_alpha, "cos(alpha), e.g. 61/64");
    sub->add_option("--t", cfg.t, "t = cot(alpha/2)");
    sub->add_option("--n", cfg.n, "order of (3,1,3,2); fixes alpha");
}

void add_output(CLI::App* sub, RunConfig& cfg)
{
    auto* json = sub->add_flag("--json", cfg.json, "one JSON object");
    sub->add_flag("--csv", cfg.csv, "CSV")->excludes(json);
    sub->add_option("--tol", cfg.tol, "classification tolerance (env CHTG_TOL)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Complex hyperbolic triangle groups: traces, thresholds and arithmetic", "chtg"};
    app.require_subcommand(1);

    auto* trace = app.add_subcommand("trace", "trace of a word by oracle, subset sum and recursion");
    add_params(trace, cfg, true);
    add_output(trace, cfg);
    trace->add_option("--word", cfg.word, "word over {1,2,3}; e is the empty word")->required();
    trace->add_option("--method", cfg.method, "oracle, combinatorial, recursive or all")
        ->check(CLI::IsMember({"oracle", "combinatorial", "recursive", "all"}));
    trace->add_flag("--poly", cfg.poly, "also print the exact trace polynomial");

    auto* thr = app.add_subcommand("thresholds", "c_inf, c_A, t-thresholds and the family quartic");
    add_params(thr, cfg, true);
    add_output(thr, cfg);

    auto* fam = app.add_subcommand("family", "membership and type on r1^2+r2^2+r3^2 = 1+2r1r2r3");
    add_params(fam, cfg, false);
    add_output(fam, cfg);

    auto* scan = app.add_subcommand("scan", "classify every word class up to a length");
    add_params(scan, cfg, true);
    add_output(scan, cfg);
    scan->add_option("--max-len", cfg.max_len, "longest word")->check(CLI::Range(1, int(kScanMaxLen)));
    scan->add_flag("--all-words", cfg.all_words, "include words with cyclically adjacent repeats");
    scan->add_flag("--exclude-alternations", cfg.exclude_alternations, "skip two-letter words");
    scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* ring = app.add_subcommand("ring-check", "integrality of 2Re(tau) and |tau|^2");
    add_params(ring, cfg, true);
    add_output(ring, cfg);
    ring->add_option("--max-len", cfg.max_len, "longest word")->check(CLI::Range(1, 24));
    ring->add_flag("--all-words", cfg.all_words, "include words with cyclically adjacent repeats");
    ring->add_option("--mostow", cfg.mostow, "Mostow group p rho (field check)")->expected(2);

    auto* inv = app.add_subcommand("invariants", "alpha, t, Cartan, Brehm and Hakim-Sandler invariants");
    add_params(inv, cfg, true);
    add_output(inv, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "chtg: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (trace->parsed())
            return cmd_trace(cfg, out, err);
        if (thr->parsed())
            return cmd_thresholds(cfg, out);
        if (fam->parsed())
            return cmd_family(cfg, out);
        if (scan->parsed())
            return cmd_scan(cfg, out);
        if (ring->parsed())
            return cmd_ring_check(cfg, out);
        if (inv->parsed())
            return cmd_invariants(cfg, out);
    } catch (const UsageError& e) {
        err << "chtg: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "chtg: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

} // namespace chtg::cli
