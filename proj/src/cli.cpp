#include "qcantor/cli.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

namespace qcantor {

using nlohmann::json;

CertificateDocument make_document(const CertifiedReduction& c) {
    const auto& r = c.reduction;
    const auto& fam = r.family;
    CertificateDocument d;
    d.schema_version = schema_version;
    d.series = name(r.series);
    d.point = r.pt.str();
    d.reduction.prefix = r.prefix.str();
    d.reduction.factor = r.factor.str();
    d.reduction.a_form = coeff_text(fam.a);
    d.reduction.b_form = coeff_text(fam.b);
    d.reduction.a_display = fam.a_display;
    d.reduction.b_display = fam.b_display;
    d.reduction.n_start = fam.n_start;
    for (long n = fam.n_start; n < fam.n_start + 8; ++n) {
        d.reduction.a_values.push_back(coeff_eval(fam.a, r.pt.q(), n).get_str());
        d.reduction.b_values.push_back(coeff_eval(fam.b, r.pt.q(), n).get_str());
    }
    d.criterion = to_string(c.certificate.criterion);
    for (const auto& h : c.certificate.hypotheses)
        d.hypotheses.push_back({h.name, to_string(h.status), h.crossover, h.prefix_depth, h.evidence});
    d.verdict = to_string(c.certificate.verdict);
    d.residual_width = sci_text(c.residual.width());
    d.notes = c.certificate.notes;
    return d;
}

void to_json(json& j, const ReductionRecord& r) {
    j = json{{"prefix", r.prefix},       {"factor", r.factor},       {"a_form", r.a_form},
             {"b_form", r.b_form},       {"a_display", r.a_display}, {"b_display", r.b_display},
             {"n_start", r.n_start},     {"a_values", r.a_values},   {"b_values", r.b_values}};
}

void from_json(const json& j, ReductionRecord& r) {
    j.at("prefix").get_to(r.prefix);
    j.at("factor").get_to(r.factor);
    j.at("a_form").get_to(r.a_form);
    j.at("b_form").get_to(r.b_form);
    j.at("a_display").get_to(r.a_display);
    j.at("b_display").get_to(r.b_display);
    j.at("n_start").get_to(r.n_start);
    j.at("a_values").get_to(r.a_values);
    j.at("b_values").get_to(r.b_values);
}

void to_json(json& j, const HypothesisRecord& h) {
    j = json{{"name", h.name},
             {"status", h.status},
             {"crossover", h.crossover ? json(*h.crossover) : json(nullptr)},
             {"prefix_depth", h.prefix_depth},
             {"evidence", h.evidence}};
}

void from_json(const json& j, HypothesisRecord& h) {
    j.at("name").get_to(h.name);
    j.at("status").get_to(h.status);
    const auto& c = j.at("crossover");
    h.crossover = c.is_null() ? std::nullopt : std::optional<long>(c.get<long>());
    j.at("prefix_depth").get_to(h.prefix_depth);
    j.at("evidence").get_to(h.evidence);
}

void to_json(json& j, const CertificateDocument& d) {
    j = json{{"schema_version", d.schema_version},
             {"series", d.series},
             {"point", d.point},
             {"reduction", d.reduction},
             {"criterion", d.criterion},
             {"hypotheses", d.hypotheses},
             {"verdict", d.verdict},
             {"residual_width", d.residual_width},
             {"notes", d.notes}};
}

void from_json(const json& j, CertificateDocument& d) {
    j.at("schema_version").get_to(d.schema_version);
    j.at("series").get_to(d.series);
    j.at("point").get_to(d.point);
    j.at("reduction").get_to(d.reduction);
    j.at("criterion").get_to(d.criterion);
    j.at("hypotheses").get_to(d.hypotheses);
    j.at("verdict").get_to(d.verdict);
    j.at("residual_width").get_to(d.residual_width);
    j.at("notes").get_to(d.notes);
}

Rational parse_eps(const std::string& text) {
    Rational eps;
    if (text.rfind("1e-", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw DomainError("bad eps '" + text + "'");
        eps = pow10_neg(std::stoul(digits));
    } else {
        eps = Rational::parse(text);
    }
    if (eps.sign() <= 0) throw DomainError("eps must be positive");
    return eps;
}

namespace {

// Largest k with 10^-k >= eps, at least 1.
unsigned render_digits(const Rational& eps) {
    unsigned k = 0;
    while (pow10_neg(k + 1) >= eps) ++k;
    return std::max(k, 1u);
}

SeriesId require_series(const std::string& text) {
    if (auto id = parse_series(text)) return *id;
    throw DomainError("unknown series '" + text + "'");
}

int verdict_exit(Verdict v) { return v == Verdict::irrational ? exit_code::ok : exit_code::not_irrational; }

void print_certificate(std::ostream& out, const CertificateDocument& d) {
    out << d.series << "(" << d.point << "): " << d.verdict << " via " << d.criterion << "\n";
    out << "  S = " << d.reduction.prefix << " + " << d.reduction.factor << " * sum b_n/(a_" << d.reduction.n_start
        << "...a_n)\n";
    out << "  a_n = " << d.reduction.a_display << "\n";
    out << "  b_n = " << d.reduction.b_display << "\n";
    out << "  n >= " << d.reduction.n_start << ", residual width " << d.residual_width << "\n";
    for (const auto& h : d.hypotheses) {
        out << "  [" << h.status << "] " << h.name;
        if (h.crossover) out << " (crossover " << *h.crossover << ")";
        out << ": " << h.evidence << "\n";
    }
    for (const auto& n : d.notes) out << "  note: " << n << "\n";
}

int cmd_eval(const std::string& target, const std::string& point, const std::string& eps_text, std::ostream& out) {
    const Rational eps = parse_eps(eps_text);
    Enclosure e;
    if (auto pid = parse_product(target)) {
        const Rational q = Rational::parse(point);
        if (!q.is_integer() || !q.num().fits_slong_p()) throw DomainError("products take an integer q >= 2");
        e = eval_product(*pid, q.num().get_si(), eps);
    } else {
        e = eval(require_series(target), Rational::parse(point), eps);
    }
    out << decimal_render(e, render_digits(eps)) << "\n";
    out << "lo = " << e.lo().str() << "\n";
    out << "hi = " << e.hi().str() << "\n";
    return exit_code::ok;
}

int cmd_reduce(const std::string& series, const std::string& point, std::ostream& out) {
    const auto r = reduce(require_series(series), RationalPoint::parse(point));
    out << name(r.series) << "(" << r.pt.str() << ") = " << r.prefix.str() << " + " << r.factor.str() << " * S\n";
    out << "a_n = " << r.family.a_display << "  [" << coeff_text(r.family.a) << "]\n";
    out << "b_n = " << r.family.b_display << "  [" << coeff_text(r.family.b) << "]\n";
    out << "n >= " << r.family.n_start << " (raw start " << r.raw_n_start << ")\n";
    for (const auto& t : r.trace) out << t << "\n";
    const auto res = verify_reduction(r, certify_gate_eps());
    out << "residual " << (res.contains(Rational(0)) ? "contains 0" : "EXCLUDES 0") << ", width "
        << sci_text(res.width()) << "\n";
    return res.contains(Rational(0)) ? exit_code::ok : exit_code::internal;
}

int cmd_certify(const std::string& series, const std::string& point, const std::string& criterion, bool as_json,
                std::ostream& out) {
    const SeriesId id = require_series(series);
    const RationalPoint pt = RationalPoint::parse(point);
    CertifiedReduction c;
    if (criterion == "auto") {
        c = certify(id, pt);
    } else {
        const auto crit = parse_criterion(criterion);
        if (!crit) throw DomainError("unknown criterion '" + criterion + "'");
        c = certify(id, pt, *crit);
    }
    const auto doc = make_document(c);
    if (as_json) out << json(doc).dump(2) << "\n";
    else print_certificate(out, doc);
    return verdict_exit(c.certificate.verdict);
}

struct Cell {
    SeriesId id;
    RationalPoint pt;
};

int cmd_certify_all(long qmax, bool as_json, unsigned jobs, std::ostream& out, std::ostream& err) {
    if (qmax < 2) throw DomainError("--qmax must be >= 2");
    std::vector<Cell> cells;
    for (auto id : all_series)
        for (int s : {1, -1})
            for (long q = 2; q <= qmax; ++q) cells.push_back({id, RationalPoint(s, q)});

    std::vector<std::optional<CertifiedReduction>> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    auto run = [&](std::size_t i) {
        try {
            results[i] = certify(cells[i].id, cells[i].pt);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    jobs = std::max(jobs, 1u);
    for (std::size_t lo = 0; lo < cells.size(); lo += jobs) {
        std::vector<std::future<void>> batch;
        for (std::size_t i = lo; i < std::min(cells.size(), lo + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run, i));
        for (auto& f : batch) f.get();
    }

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!errors[i]) continue;
        const std::string cell = name(cells[i].id) + " " + cells[i].pt.str();
        try {
            std::rethrow_exception(errors[i]);
        } catch (const InternalInconsistency& e) {
            err << "internal inconsistency at " << cell << ": " << e.what() << "\n";
            return exit_code::internal;
        } catch (const std::exception& e) {
            err << "error at " << cell << ": " << e.what() << "\n";
            return exit_code::usage;
        }
    }

    bool all = true;
    json docs = json::array();
    if (!as_json) out << std::left << std::setw(7) << "series" << std::setw(7) << "point" << std::setw(14)
                      << "verdict" << std::setw(12) << "criterion" << std::setw(9) << "n_start" << "residual\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto doc = make_document(*results[i]);
        all = all && doc.verdict == "irrational";
        if (as_json) {
            docs.push_back(doc);
            continue;
        }
        out << std::left << std::setw(7) << doc.series << std::setw(7) << doc.point << std::setw(14) << doc.verdict
            << std::setw(12) << doc.criterion << std::setw(9) << doc.reduction.n_start << doc.residual_width << "\n";
    }
    if (as_json) out << docs.dump(2) << "\n";
    else out << (all ? "all " : "not all ") << cells.size() << " cells irrational\n";
    return all ? exit_code::ok : exit_code::not_irrational;
}

int cmd_rr_check(long qmax, std::ostream& out) {
    if (qmax < 2) throw DomainError("--qmax must be >= 2");
    const Rational eps = pow10_neg(25);
    bool all = true;
    out << std::left << std::setw(8) << "series" << std::setw(7) << "point" << std::setw(9) << "product"
        << std::setw(10) << "contains0" << "width\n";
    for (int which : {1, 2})
        for (int s : {1, -1})
            for (long q = 2; q <= qmax; ++q) {
                const RationalPoint pt(s, q);
                const auto res = rr_identity_residual(which, pt, eps);
                const bool ok = res.contains(Rational(0)) && res.width() <= eps;
                all = all && ok;
                out << std::left << std::setw(8) << ("r" + std::to_string(which)) << std::setw(7) << pt.str()
                    << std::setw(9) << name(rr_pairing(which, s)) << std::setw(10)
                    << (res.contains(Rational(0)) ? "yes" : "NO") << sci_text(res.width()) << "\n";
            }
    return all ? exit_code::ok : exit_code::internal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact evaluation and irrationality certificates for mock theta and Rogers-Ramanujan series"};
    app.require_subcommand(1);

    std::string target, point, eps_text = "1e-20", criterion = "auto";
    bool as_json = false;
    long qmax = 5;
    unsigned jobs = 1;

    auto* ev = app.add_subcommand("eval", "Enclose a series at a rational point, or a product at integer q");
    ev->add_option("name", target, "series (f, phi, ...) or product (P1..P4)")->required();
    ev->add_option("point", point, "p/q or integer")->required();
    ev->add_option("--eps", eps_text, "width bound: 1e-N or p/q")->capture_default_str();

    auto* rd = app.add_subcommand("reduce", "Show the Cantor-series reduction at +-1/q");
    rd->add_option("series", target)->required();
    rd->add_option("point", point, "+1/q or -1/q")->required();

    auto* ce = app.add_subcommand("certify", "Certify irrationality at +-1/q");
    ce->add_option("series", target)->required();
    ce->add_option("point", point, "+1/q or -1/q")->required();
    ce->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"auto", "oppenheim4", "oppenheim8", "ht", "cantor1869"}))
        ->capture_default_str();
    ce->add_flag("--json", as_json);

    auto* ca = app.add_subcommand("certify-all", "Certify every series at +-1/q for q = 2..qmax");
    ca->add_option("--qmax", qmax)->capture_default_str();
    ca->add_option("--jobs", jobs)->capture_default_str();
    ca->add_flag("--json", as_json);

    auto* rr = app.add_subcommand("rr-check", "Check the Rogers-Ramanujan product identities");
    rr->add_option("--qmax", qmax)->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*ev) return cmd_eval(target, point, eps_text, out);
        if (*rd) return cmd_reduce(target, point, out);
        if (*ce) return cmd_certify(target, point, criterion, as_json, out);
        if (*ca) return cmd_certify_all(qmax, as_json, jobs, out, err);
        if (*rr) return cmd_rr_check(qmax, out);
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return exit_code::internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    return exit_code::usage;
}

}  // namespace qcantor
