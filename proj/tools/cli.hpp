#pragma once

// Command-line front end. run() parses argv, dispatches one subcommand and
// writes json, csv or pretty output.

#include "logmax/contour.hpp"
#include "logmax/error.hpp"
#include "logmax/extremes.hpp"
#include "logmax/jacobi.hpp"
#include "logmax/mc/fbm0.hpp"
#include "logmax/mc/gue.hpp"
#include "logmax/mc/jacobi.hpp"
#include "logmax/replica.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace logmax::cli {

using json = nlohmann::ordered_json;

enum class Format { json, csv, pretty };

/// Output of one subcommand.
struct Report {
    std::string command;
    json config = json::object();
    json fields = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::string rows_key = "rows";
    std::vector<std::string> notes;
};

struct GlobalOptions {
    std::string format = "json";
    std::string output;
    int decimal = 0;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

/// Rounded decimal expansion of r with d digits after the point.
inline std::string decimal_of(const Rational& r, int d) {
    mpz_class num = r.numerator(), den = r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(d));
    mpz_class q = (2 * num * p10 + den) / (2 * den);
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= d) s = std::string(static_cast<std::size_t>(d + 1) - s.size(), '0') + s;
    if (d > 0) s.insert(s.size() - static_cast<std::size_t>(d), ".");
    bool zero = q == 0;
    return (neg && !zero ? "-" : "") + s;
}

namespace detail {

inline Rational rat(const std::string& s, const char* name) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string("--") + name, "expected a rational p or p/q, got '" + s + "'");
    }
}

inline double to_double(const std::string& s) { return Rational::parse(s).to_double(); }

inline std::string csv_cell(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>(), o = "\"";
        for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
        return o + "\"";
    }
    if (v.is_null()) return "";
    return v.dump();
}

inline std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

/// Adds name (and name_decimal when requested) for an exact value.
inline void put(json& obj, const std::string& name, const Rational& v, int decimal) {
    obj[name] = v.str();
    if (decimal > 0) obj[name + "_decimal"] = decimal_of(v, decimal);
}

inline void write_report(const Report& r, Format f, std::ostream& out, std::ostream& err) {
    if (f == Format::json) {
        json j;
        j["command"] = r.command;
        j["config"] = r.config;
        for (auto it = r.fields.begin(); it != r.fields.end(); ++it) j[it.key()] = it.value();
        if (!r.columns.empty()) {
            json rows = json::array();
            for (const auto& row : r.rows) {
                json o;
                for (std::size_t i = 0; i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
                rows.push_back(o);
            }
            j[r.rows_key] = rows;
        }
        if (!r.notes.empty()) j["notes"] = r.notes;
        out << j.dump(2) << "\n";
        return;
    }
    if (f == Format::csv) {
        for (auto it = r.config.begin(); it != r.config.end(); ++it)
            err << "# " << it.key() << "=" << detail::plain(it.value()) << "\n";
        for (const auto& n : r.notes) err << "# note: " << n << "\n";
        if (!r.columns.empty()) {
            for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
            out << "\n";
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
                out << "\n";
            }
        } else {
            out << "key,value\n";
            for (auto it = r.fields.begin(); it != r.fields.end(); ++it)
                out << it.key() << "," << detail::csv_cell(it.value()) << "\n";
        }
        return;
    }
    out << r.command << "\n";
    for (auto it = r.config.begin(); it != r.config.end(); ++it)
        out << "  " << it.key() << " = " << detail::plain(it.value()) << "\n";
    for (auto it = r.fields.begin(); it != r.fields.end(); ++it)
        out << it.key() << ": " << detail::plain(it.value()) << "\n";
    if (!r.columns.empty()) {
        std::vector<std::size_t> w(r.columns.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = r.columns[i].size();
            for (const auto& row : r.rows) w[i] = std::max(w[i], detail::plain(row[i]).size());
        }
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(w[i])) << r.columns[i];
        out << "\n";
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < w.size(); ++i)
                out << (i ? "  " : "") << std::setw(static_cast<int>(w[i])) << detail::plain(row[i]);
            out << "\n";
        }
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct MomentArgs {
    std::string kappa = "1", a = "0", b = "0", n = "1";
    int k = 1;
    std::string method = "partition";
    int l = 0;
    bool per_partition = false;
};

inline Report cmd_moment(const MomentArgs& o, const GlobalOptions& g) {
    Report r{"moment"};
    MomentQuery q{detail::rat(o.kappa, "kappa"), detail::rat(o.a, "a"), detail::rat(o.b, "b"), detail::rat(o.n, "n"), o.k};
    r.config = {{"kappa", q.kappa.str()}, {"a", q.a.str()}, {"b", q.b.str()}, {"n", q.n.str()}, {"k", o.k},
                {"method", o.method}};
    if (o.method == "lshift") r.config["l"] = o.l;
    Rational v;
    if (o.method == "partition") v = moment_partition_sum(q);
    else if (o.method == "geometric") v = moment_geometric(q);
    else if (o.method == "lshift") v = moment_negative_lshift(q, o.l);
    else if (o.method == "laguerre") v = laguerre_moment(q);
    else throw std::invalid_argument("unknown method '" + o.method + "' (partition, geometric, lshift, laguerre)");
    put(r.fields, "value", v, g.decimal);
    if (o.per_partition) {
        r.rows_key = "per_partition";
        r.columns = {"partition", "contribution"};
        for (const auto& c : moment_per_partition(q))
            r.rows.push_back({c.partition.str(), c.value ? json(c.value->str()) : json("singular")});
        r.notes.push_back("single terms may be singular where the sum is finite");
    }
    return r;
}

struct SelbergArgs {
    std::string kappa = "1", a = "0", b = "0";
    int n = 1;
};

inline Report cmd_selberg(const SelbergArgs& o, const GlobalOptions&) {
    Report r{"selberg"};
    Rational ka = detail::rat(o.kappa, "kappa"), a = detail::rat(o.a, "a"), b = detail::rat(o.b, "b");
    r.config = {{"kappa", ka.str()}, {"a", a.str()}, {"b", b.str()}, {"n", o.n}};
    auto s = selberg(ka, a, b, o.n);
    r.fields["value"] = s.str();
    r.fields["rational"] = s.is_rational();
    std::ostringstream os;
    os << std::setprecision(17) << s.to_double();
    r.fields["approx"] = os.str();
    return r;
}

struct ContourArgs {
    std::string kind = "positive-finite-n", beta2 = "1/2", a = "1", b = "1", n = "2";
    int k = 1;
    bool strict = false;
    bool tree = false;
};

inline Report cmd_contour(const ContourArgs& o, const GlobalOptions& g) {
    Report r{"contour"};
    ContourSpec s;
    s.kind = parse_contour_kind(o.kind);
    s.beta2 = detail::rat(o.beta2, "beta2");
    s.a = detail::rat(o.a, "a");
    s.b = detail::rat(o.b, "b");
    s.n = detail::rat(o.n, "n");
    s.k = o.k;
    r.config = {{"kind", to_string(s.kind)}, {"beta2", s.beta2.str()}, {"a", s.a.str()}, {"b", s.b.str()},
                {"n", s.n.str()}, {"k", s.k}, {"strict", o.strict}};
    auto res = evaluate_nested(s, 1000000, o.tree, o.strict);
    put(r.fields, "value", res.value, g.decimal);
    r.fields["max_terms"] = res.max_terms;
    if (o.tree) {
        r.columns = {"variable", "pole", "terms_in", "terms_out"};
        for (const auto& e : res.tree)
            r.rows.push_back({"u" + std::to_string(e.variable), e.pole.str(), e.terms_in, e.terms_out});
    }
    return r;
}

struct CrosscheckArgs {
    std::string kappa = "-1/3", a = "1", b = "1", n = "2";
    int k = 1;
    bool frozen = false;
};

inline Report cmd_crosscheck(const CrosscheckArgs& o, const GlobalOptions&) {
    Report r{"crosscheck"};
    MomentQuery q{detail::rat(o.kappa, "kappa"), detail::rat(o.a, "a"), detail::rat(o.b, "b"), detail::rat(o.n, "n"), o.k};
    r.config = {{"kappa", q.kappa.str()}, {"a", q.a.str()}, {"b", q.b.str()}, {"n", q.n.str()}, {"k", o.k},
                {"frozen", o.frozen}};
    auto c = crosscheck(q, o.frozen);
    if (c.skipped) {
        r.fields["skipped"] = true;
        r.fields["reason"] = c.reason;
        return r;
    }
    r.fields["contour"] = c.contour_value.str();
    r.fields["partition"] = c.partition_value.str();
    r.fields["equal"] = c.equal;
    if (!c.equal) throw InvariantViolation("engines disagree: contour " + c.contour_value.str() + " vs partition " +
                                           c.partition_value.str());
    return r;
}

struct ModelArgs {
    std::string model = "gue", abar = "0", bbar = "0", q = "1";

    ModelSpec spec() const {
        ModelSpec m;
        m.model = parse_model(model);
        m.abar = detail::rat(abar, "abar");
        m.bbar = detail::rat(bbar, "bbar");
        m.q = detail::rat(q, "q");
        return m;
    }
    void echo(json& cfg, const ModelSpec& m) const {
        cfg["model"] = to_string(m.model);
        if (m.model == Model::lcgp || m.model == Model::laguerre || m.model == Model::gaussian)
            cfg["abar"] = m.abar.str();
        if (m.model == Model::lcgp) cfg["bbar"] = m.bbar.str();
        if (m.model == Model::gue) cfg["q"] = m.q.str();
    }
};

struct PredictArgs {
    ModelArgs model;
    std::optional<int> k;
    int kmax = 4;
    bool symbolic = false;
    bool per_partition = false;
    std::string beta = "1";
};

inline void gaussian_report(Report& r, int pmax, const Rational& beta, int decimal) {
    auto cum = gaussian_cumulants(pmax);
    r.columns = {"order", "cumulant", "cumulant_of_beta"};
    for (int p = 2; p <= pmax; p += 2) {
        Rational v = cum[static_cast<std::size_t>(p)](beta);
        std::vector<json> row{p, v.str(), cum[static_cast<std::size_t>(p)].str()};
        if (decimal > 0) row.push_back(decimal_of(v, decimal));
        r.rows.push_back(row);
    }
    if (decimal > 0) r.columns.push_back("cumulant_decimal");
    r.notes.push_back("odd cumulants vanish by symmetry");
}

inline Report cmd_predict(const PredictArgs& o, const GlobalOptions& g) {
    Report r{"predict"};
    ModelSpec m = o.model.spec();
    o.model.echo(r.config, m);
    const std::string var = position_variable(m.model);
    if (m.model == Model::gaussian) {
        Rational beta = detail::rat(o.beta, "beta");
        r.config["beta"] = beta.str();
        r.config["max_order"] = o.kmax;
        gaussian_report(r, o.kmax, beta, g.decimal);
        return r;
    }
    if (o.k) {
        const int k = *o.k;
        r.config["k"] = k;
        r.fields["variable"] = var;
        Rational y = freeze(m, k);
        put(r.fields, m.model == Model::laguerre ? "z_moment" : "y_moment", y, g.decimal);
        if (m.model == Model::gue) {
            if (k > 0) put(r.fields, "x_moment", observable_moments(m, k)[static_cast<std::size_t>(k)], g.decimal);
            else if (k == -1) put(r.fields, "one_minus_x_inverse_moment", y / Rational(2), g.decimal);
        }
        if (o.symbolic) r.fields["disorder_average"] = disorder_moment(m, k).str();
        if (o.per_partition) {
            r.columns = {"partition", "frozen_contribution"};
            for (const auto& c : frozen_per_partition(m, k))
                r.rows.push_back({c.partition.str(), c.value ? json(c.value->str()) : json("singular")});
        }
        return r;
    }
    r.config["kmax"] = o.kmax;
    r.fields["variable"] = var;
    auto y = frozen_moments(m, o.kmax);
    auto obs = observable_moments(m, o.kmax);
    r.columns = {"k", m.model == Model::laguerre ? "z_moment" : "y_moment"};
    if (m.model == Model::gue) r.columns.push_back("x_moment");
    if (o.symbolic) r.columns.push_back("disorder_average");
    for (int k = 1; k <= o.kmax; ++k) {
        std::vector<json> row{k, y[static_cast<std::size_t>(k)].str()};
        if (m.model == Model::gue) row.push_back(obs[static_cast<std::size_t>(k)].str());
        if (o.symbolic) row.push_back(disorder_moment(m, k).str());
        r.rows.push_back(row);
    }
    if (o.kmax >= 4) {
        auto st = shape_stats(obs);
        put(r.fields, "mean", st.mean, g.decimal);
        put(r.fields, "variance", st.variance, g.decimal);
        put(r.fields, "skewness_squared", st.skewness_squared, g.decimal);
        r.fields["skewness_sign"] = st.third_cumulant.sign();
        put(r.fields, "kurtosis", st.kurtosis, g.decimal);
    }
    if (m.model == Model::gue) {
        Rational inv = freeze(m, -1);
        put(r.fields, "y_inverse_moment", inv, g.decimal);
        put(r.fields, "one_minus_x_inverse_moment", inv / Rational(2), g.decimal);
        try {
            freeze(m, -2);
            r.fields["y_second_inverse_moment"] = "finite";
        } catch (const Divergence&) {
            r.fields["y_second_inverse_moment"] = "divergent";
        }
    }
    return r;
}

struct CumulantArgs {
    ModelArgs model;
    int max_order = 6;
    bool symbolic = false;
    std::string beta = "1";
};

template <class F>
void cumulant_rows(Report& r, const std::vector<F>& raw) {
    auto c = moments_to_cumulants(raw);
    r.columns = {"order", "moment", "cumulant"};
    for (std::size_t p = 1; p < raw.size(); ++p) r.rows.push_back({static_cast<int>(p), raw[p].str(), c[p].str()});
    if (raw.size() >= 5) {
        auto st = shape_stats(raw);
        r.fields["skewness_squared"] = st.skewness_squared.str();
        r.fields["kurtosis"] = st.kurtosis.str();
    }
}

inline Report cmd_cumulants(const CumulantArgs& o, const GlobalOptions& g) {
    Report r{"cumulants"};
    ModelSpec m = o.model.spec();
    o.model.echo(r.config, m);
    r.config["max_order"] = o.max_order;
    r.config["symbolic"] = o.symbolic;
    r.fields["variable"] = position_variable(m.model);
    if (m.model == Model::gaussian) {
        Rational beta = detail::rat(o.beta, "beta");
        r.config["beta"] = beta.str();
        gaussian_report(r, o.max_order, beta, g.decimal);
        return r;
    }
    if (!o.symbolic) {
        cumulant_rows(r, observable_moments(m, o.max_order));
        return r;
    }
    using Q = RationalFunctionQ;
    if (m.model == Model::laguerre) {
        std::vector<Q> raw{Q(1L)};
        for (int k = 1; k <= o.max_order; ++k) raw.push_back(laguerre_frozen(Q::variable("abar"), k));
        cumulant_rows(r, raw);
        return r;
    }
    if (m.model == Model::lcgp) {
        using AB = RationalFunction<Q>;
        ModelSpecT<AB> s;
        s.model = Model::lcgp;
        s.abar = AB(Q::variable("abar"));
        s.bbar = AB::variable("bbar");
        cumulant_rows(r, frozen_moments(s, o.max_order));
        return r;
    }
    throw std::invalid_argument("--symbolic is available for lcgp and laguerre");
}

struct VminArgs {
    ModelArgs model;
    int p_max = 4;
    int digits = 50;
    std::optional<std::string> laplace;
};

inline Report cmd_vmin(const VminArgs& o, const GlobalOptions&) {
    Report r{"vmin"};
    ModelSpec m = o.model.spec();
    o.model.echo(r.config, m);
    r.config["p_max"] = o.p_max;
    r.config["digits"] = o.digits;
    VmSpec s = vm_spec_for(m, o.digits);
    r.config["a"] = s.a.str();
    r.config["b"] = s.b.str();
    r.columns = {"p", "cumulant"};
    for (int p = 1; p <= o.p_max; ++p) r.rows.push_back({p, vm_cumulant_decimal(s, p)});
    if (o.laplace) {
        Rational n = detail::rat(*o.laplace, "laplace");
        r.config["laplace_n"] = n.str();
        r.fields["laplace"] = vm_laplace_decimal(s, n);
    }
    return r;
}

struct CorrArgs {
    ModelArgs model;
    int k = 1;
    std::vector<int> p{1, 2};
};

inline Report cmd_corr(const CorrArgs& o, const GlobalOptions& g) {
    Report r{"corr"};
    ModelSpec m = o.model.spec();
    o.model.echo(r.config, m);
    r.config["k"] = o.k;
    r.config["p"] = o.p;
    r.fields["variable"] = position_variable(m.model);
    r.fields["mbar"] = mbar_observable(m, o.k).str();
    for (int p : o.p) put(r.fields, "correlation_p" + std::to_string(p), position_value_correlation(m, o.k, p), g.decimal);
    if (m.model == Model::gue) {
        auto c = taylor_at_zero(mbar_function(m, o.k), 2);
        for (int p : o.p) {
            Rational v = c[static_cast<std::size_t>(p)] * factorial(p);
            put(r.fields, "y_correlation_p" + std::to_string(p), p % 2 ? -v : v, g.decimal);
        }
    }
    if (m.model == Model::fbm0) r.notes.push_back("paper-flagged caveat: fbm0 value statistics need a more careful study");
    return r;
}

struct TableArgs {
    std::string name = "appendix-c";
    std::string model = "fbm0";
};

inline Report cmd_table(const TableArgs& o, const GlobalOptions&) {
    Report r{"table"};
    if (o.name != "appendix-c") throw std::invalid_argument("unknown table '" + o.name + "' (appendix-c)");
    ModelSpec m;
    m.model = parse_model(o.model);
    if (m.model != Model::fbm0 && m.model != Model::gue) throw std::invalid_argument("appendix-c covers fbm0 and gue");
    r.config = {{"table", o.name}, {"model", o.model}};
    auto y = frozen_moments(m, 14);
    auto c = moments_to_cumulants(y);
    r.columns = {"quantity", "k", "value"};
    for (int k = 6; k <= 14; k += 2) r.rows.push_back({"moment", k, y[static_cast<std::size_t>(k)].str()});
    for (int k = 4; k <= 12; k += 2) r.rows.push_back({"cumulant", k, c[static_cast<std::size_t>(k)].str()});
    return r;
}

struct ConjectureArgs {
    std::string ensemble = "circular", kappa = "1", mu = "1", rho = "2", n = "2";
    int k = 1;
};

inline Report cmd_conjecture(const ConjectureArgs& o, const GlobalOptions& g) {
    Report r{"conjecture"};
    Rational ka = detail::rat(o.kappa, "kappa"), n = detail::rat(o.n, "n");
    r.config = {{"ensemble", o.ensemble}, {"kappa", ka.str()}, {"n", n.str()}, {"k", o.k}};
    Rational v;
    if (o.ensemble == "circular") {
        Rational mu = detail::rat(o.mu, "mu");
        r.config["mu"] = mu.str();
        v = circular_conjecture_eval(ka, mu, n, o.k);
        r.fields["observable"] = "<cos(k theta)>";
    } else if (o.ensemble == "cauchy") {
        Rational rho = detail::rat(o.rho, "rho");
        r.config["rho"] = rho.str();
        v = cauchy_conjecture_eval(ka, rho, n, o.k);
        r.fields["observable"] = "<Re((i-z)/(i+z))^k>";
    } else {
        throw std::invalid_argument("unknown ensemble '" + o.ensemble + "' (circular, cauchy)");
    }
    put(r.fields, "value", v, g.decimal);
    r.fields["status"] = "CONJECTURE";
    r.notes.push_back("CONJECTURE: mapping to Jacobi moments is conjectured, not proven");
    return r;
}

// Monte Carlo ----------------------------------------------------------------

inline void mc_columns(Report& r, bool exact) {
    r.columns = {"observable", "size", "estimate", "stderr", "samples", "seed"};
    if (exact) {
        r.columns.push_back("exact");
        r.columns.push_back("z");
    }
}

inline void mc_row(Report& r, const mc::McEstimate& e, int size, const std::optional<Rational>& exact) {
    std::vector<json> row{e.observable, size, e.mean, e.stderr_, e.samples, std::to_string(e.seed)};
    if (r.columns.size() > 6) {
        if (exact) {
            row.push_back(exact->str());
            row.push_back(e.z_score(exact->to_double()));
        } else {
            row.push_back(nullptr);
            row.push_back(nullptr);
        }
    }
    r.rows.push_back(row);
}

struct ChainArgs {
    long sweeps = 1000000, burn_in = 10000, thin = 1, batch = 1000;
    std::optional<std::uint64_t> seed;

    mc::ChainConfig config() const {
        mc::ChainConfig c;
        c.sweeps = sweeps;
        c.burn_in = burn_in;
        c.thin = thin;
        c.batch = batch;
        c.seed = seed ? *seed : mc::seed_from_env();
        return c;
    }
    void echo(json& cfg, const mc::ChainConfig& c) const {
        cfg["sweeps"] = c.sweeps;
        cfg["burn_in"] = c.burn_in;
        cfg["thin"] = c.thin;
        cfg["batch"] = c.batch;
        cfg["seed"] = std::to_string(c.seed);
    }
};

struct McJacobiArgs {
    std::string kappa = "1/2", a = "1", b = "2";
    int n = 5;
    std::vector<int> k{1, 2, -1};
    ChainArgs chain;
    bool against_exact = false;
};

inline Report cmd_mc_jacobi(const McJacobiArgs& o, const GlobalOptions&) {
    Report r{"mc-jacobi"};
    Rational ka = detail::rat(o.kappa, "kappa"), a = detail::rat(o.a, "a"), b = detail::rat(o.b, "b");
    auto cfg = o.chain.config();
    r.config = {{"kappa", ka.str()}, {"a", a.str()}, {"b", b.str()}, {"n", o.n}, {"k", o.k}};
    o.chain.echo(r.config, cfg);
    auto res = mc::sample_jacobi(cfg, ka.to_double(), a.to_double(), b.to_double(), o.n, o.k);
    r.fields["acceptance"] = res.acceptance;
    mc_columns(r, o.against_exact);
    for (std::size_t i = 0; i < o.k.size(); ++i) {
        std::optional<Rational> ex;
        if (o.against_exact) ex = moment_partition_sum({ka, a, b, Rational(o.n), o.k[i]});
        mc_row(r, res.estimates[i], o.n, ex);
    }
    return r;
}

struct McCircularArgs {
    std::string kappa = "1", mu = "1";
    int n = 2;
    std::vector<int> k{1};
    ChainArgs chain;
    bool against_exact = false;
};

inline Report cmd_mc_circular(const McCircularArgs& o, const GlobalOptions&) {
    Report r{"mc-circular"};
    Rational ka = detail::rat(o.kappa, "kappa"), mu = detail::rat(o.mu, "mu");
    auto cfg = o.chain.config();
    r.config = {{"kappa", ka.str()}, {"mu", mu.str()}, {"n", o.n}, {"k", o.k}};
    o.chain.echo(r.config, cfg);
    auto res = mc::sample_circular(cfg, ka.to_double(), mu.to_double(), o.n, o.k);
    r.fields["acceptance"] = res.acceptance;
    mc_columns(r, o.against_exact);
    for (std::size_t i = 0; i < o.k.size(); ++i) {
        std::optional<Rational> ex;
        if (o.against_exact) ex = circular_conjecture_eval(ka, mu, Rational(o.n), o.k[i]);
        mc_row(r, res.estimates[i], o.n, ex);
    }
    if (o.against_exact) r.notes.push_back("CONJECTURE: exact column is the conjectured circular mapping");
    return r;
}

struct McGueArgs {
    std::vector<int> N{200, 500, 1000};
    long realizations = 2000;
    int grid = 8192;
    int spectrum_every = 10;
    std::optional<std::uint64_t> seed;
    bool against_exact = false;
};

inline Report cmd_mc_gue(const McGueArgs& o, const GlobalOptions& g) {
    Report r{"mc-gue"};
    std::uint64_t seed = o.seed ? *o.seed : mc::seed_from_env();
    r.config = {{"N", o.N},           {"realizations", o.realizations}, {"grid", o.grid},
                {"spectrum_every", o.spectrum_every}, {"seed", std::to_string(seed)}, {"jobs", g.jobs}};
    mc_columns(r, o.against_exact);
    r.columns.push_back("finite_size_axis");
    json kurt = json::object();
    for (int N : o.N) {
        mc::GueConfig c;
        c.N = N;
        c.realizations = o.realizations;
        c.grid = o.grid;
        c.spectrum_every = o.spectrum_every;
        c.jobs = g.jobs;
        c.seed = seed;
        auto res = mc::sample_gue_argmax(c);
        auto ex = [&](Rational v) { return o.against_exact ? std::optional<Rational>(v) : std::nullopt; };
        const std::size_t before = r.rows.size();
        mc_row(r, res.x_mean, N, ex(Rational(0)));
        mc_row(r, res.x2, N, ex(Rational(13, 49)));
        mc_row(r, res.x4, N, ex(Rational(20, 147)));
        mc_row(r, res.inv_one_minus_x, N, ex(Rational(2)));
        mc_row(r, res.spectrum_m2, N, ex(Rational(1, 4)));
        for (std::size_t i = before; i < r.rows.size(); ++i) r.rows[i].push_back(res.finite_size_axis);
        kurt[std::to_string(N)] = res.kurtosis;
        if (res.discarded) r.notes.push_back("N=" + std::to_string(N) + ": " + std::to_string(res.discarded) + " realizations discarded");
    }
    r.fields["kurtosis"] = kurt;
    r.notes.push_back("finite_size_axis = 1/(10 (ln N)^3); no extrapolation is fitted");
    return r;
}

struct McFbm0Args {
    int grid = 4096;
    std::string L = "1";
    std::string eta = "1/1024";
    long realizations = 5000;
    std::optional<std::uint64_t> seed;
    bool against_exact = false;
};

inline Report cmd_mc_fbm0(const McFbm0Args& o, const GlobalOptions&) {
    Report r{"mc-fbm0"};
    mc::Fbm0Config c;
    c.grid = o.grid;
    c.L = detail::to_double(o.L);
    c.eta = detail::to_double(o.eta) * c.L;
    c.realizations = o.realizations;
    c.seed = o.seed ? *o.seed : mc::seed_from_env();
    r.config = {{"grid", c.grid}, {"L", o.L}, {"eta_over_L", o.eta}, {"realizations", c.realizations},
                {"seed", std::to_string(c.seed)}};
    auto res = mc::sample_fbm0_argmin(c);
    r.fields["jitter"] = res.jitter;
    mc_columns(r, o.against_exact);
    auto ex = [&](Rational v) { return o.against_exact ? std::optional<Rational>(v) : std::nullopt; };
    mc_row(r, res.centered, c.grid, ex(Rational(0)));
    mc_row(r, res.y2, c.grid, ex(Rational(17, 50)));
    mc_row(r, res.y4, c.grid, ex(Rational(311, 1470)));
    r.notes.push_back("exact values are eta -> 0 limits; convergence in eta is slow");
    return r;
}

// ---------------------------------------------------------------------------

/// Parses argv and runs one subcommand. Returns 0 on success, 1 on divergent or
/// invalid input, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"logmax: exact moments of beta-Jacobi ensembles and extrema of log-correlated processes"};
    app.fallthrough();
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
    app.add_option("--output,-o", g.output, "output file (default: standard output)");
    app.add_option("--decimal", g.decimal, "also print exact values as decimals with this many digits")->check(CLI::Range(0, 1000));
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::function<Report()> action;

    MomentArgs ma;
    auto* sm = app.add_subcommand("moment", "integer moment <(1/n) sum y^k> of the beta-Jacobi ensemble");
    sm->add_option("--kappa", ma.kappa)->capture_default_str();
    sm->add_option("--a", ma.a)->capture_default_str();
    sm->add_option("--b", ma.b)->capture_default_str();
    sm->add_option("--n", ma.n)->capture_default_str();
    sm->add_option("--k", ma.k)->capture_default_str();
    sm->add_option("--method", ma.method)->check(CLI::IsMember({"partition", "geometric", "lshift", "laguerre"}))->capture_default_str();
    sm->add_option("--l", ma.l, "shift for --method lshift")->capture_default_str();
    sm->add_flag("--per-partition", ma.per_partition);
    sm->callback([&] { action = [&] { return cmd_moment(ma, g); }; });

    SelbergArgs sa;
    auto* ss = app.add_subcommand("selberg", "Selberg integral as an exact Gamma product");
    ss->add_option("--kappa", sa.kappa)->capture_default_str();
    ss->add_option("--a", sa.a)->capture_default_str();
    ss->add_option("--b", sa.b)->capture_default_str();
    ss->add_option("--n", sa.n)->capture_default_str();
    ss->callback([&] { action = [&] { return cmd_selberg(sa, g); }; });

    ContourArgs ca;
    auto* sc = app.add_subcommand("contour", "nested-residue evaluation of a contour formula");
    sc->add_option("--kind", ca.kind)
        ->check(CLI::IsMember({"positive-finite-n", "negative-finite-n", "positive-n0", "negative-n0", "positive-frozen",
                               "negative-frozen"}))
        ->capture_default_str();
    sc->add_option("--beta2", ca.beta2)->capture_default_str();
    sc->add_option("--a", ca.a)->capture_default_str();
    sc->add_option("--b", ca.b)->capture_default_str();
    sc->add_option("--n", ca.n)->capture_default_str();
    sc->add_option("--k", ca.k, "number of integration variables")->capture_default_str();
    sc->add_flag("--strict", ca.strict, "fail on higher-order poles");
    sc->add_flag("--tree", ca.tree, "print the pole tree");
    sc->callback([&] { action = [&] { return cmd_contour(ca, g); }; });

    CrosscheckArgs xa;
    auto* sx = app.add_subcommand("crosscheck", "compare the contour and partition-sum engines");
    sx->add_option("--kappa", xa.kappa)->capture_default_str();
    sx->add_option("--a", xa.a)->capture_default_str();
    sx->add_option("--b", xa.b)->capture_default_str();
    sx->add_option("--n", xa.n)->capture_default_str();
    sx->add_option("--k", xa.k)->capture_default_str();
    sx->add_flag("--frozen", xa.frozen, "use the frozen contour formulas at kappa = -1, n = 0");
    sx->callback([&] { action = [&] { return cmd_crosscheck(xa, g); }; });

    auto model_opts = [](CLI::App* s, ModelArgs& m) {
        s->add_option("--model", m.model)->check(CLI::IsMember({"gue", "lcgp", "fbm0", "laguerre", "gaussian"}))->capture_default_str();
        s->add_option("--abar", m.abar, "edge charge at y=0 (lcgp, laguerre)")->capture_default_str();
        s->add_option("--bbar", m.bbar, "edge charge at y=1 (lcgp)")->capture_default_str();
        s->add_option("--q", m.q, "GUE weight exponent")->capture_default_str();
    };

    PredictArgs pa;
    auto* sp = app.add_subcommand("predict", "frozen moments of the position of the global minimum");
    model_opts(sp, pa.model);
    sp->add_option("--k", pa.k, "single moment order");
    sp->add_option("--kmax", pa.kmax, "highest order in the summary")->check(CLI::Range(1, 30))->capture_default_str();
    sp->add_option("--beta", pa.beta, "inverse temperature (gaussian)")->capture_default_str();
    sp->add_flag("--symbolic", pa.symbolic, "also print the disorder average as a function of beta");
    sp->add_flag("--per-partition", pa.per_partition);
    sp->callback([&] { action = [&] { return cmd_predict(pa, g); }; });

    CumulantArgs cu;
    auto* scu = app.add_subcommand("cumulants", "frozen cumulants, skewness and kurtosis");
    model_opts(scu, cu.model);
    scu->add_option("--max-order", cu.max_order)->check(CLI::Range(1, 30))->capture_default_str();
    scu->add_option("--beta", cu.beta, "inverse temperature (gaussian)")->capture_default_str();
    scu->add_flag("--symbolic", cu.symbolic, "symbolic edge charges (lcgp, laguerre)");
    scu->callback([&] { action = [&] { return cmd_cumulants(cu, g); }; });

    VminArgs va;
    auto* sv = app.add_subcommand("vmin", "cumulants and Laplace transform of the minimum value");
    model_opts(sv, va.model);
    sv->add_option("--p-max", va.p_max)->check(CLI::Range(1, 20))->capture_default_str();
    sv->add_option("--digits", va.digits)->check(CLI::Range(5, 95))->capture_default_str();
    sv->add_option("--laplace", va.laplace, "evaluate E exp(-n V_m) at this n < 1");
    sv->callback([&] { action = [&] { return cmd_vmin(va, g); }; });

    CorrArgs co;
    auto* sco = app.add_subcommand("corr", "joint position-value correlations");
    model_opts(sco, co.model);
    sco->add_option("--k", co.k)->capture_default_str();
    sco->add_option("--p", co.p, "derivative orders (1, 2)")->check(CLI::Range(1, 2));
    sco->callback([&] { action = [&] { return cmd_corr(co, g); }; });

    TableArgs ta;
    auto* st = app.add_subcommand("table", "reproduce a table of exact values");
    st->add_option("name", ta.name)->check(CLI::IsMember({"appendix-c"}))->required();
    st->add_option("--model", ta.model)->check(CLI::IsMember({"fbm0", "gue"}))->capture_default_str();
    st->callback([&] { action = [&] { return cmd_table(ta, g); }; });

    ConjectureArgs cj;
    auto* scj = app.add_subcommand("conjecture", "circular and Cauchy ensembles through the conjectured Jacobi mapping");
    scj->add_option("--ensemble", cj.ensemble)->check(CLI::IsMember({"circular", "cauchy"}))->capture_default_str();
    scj->add_option("--kappa", cj.kappa)->capture_default_str();
    scj->add_option("--mu", cj.mu)->capture_default_str();
    scj->add_option("--rho", cj.rho)->capture_default_str();
    scj->add_option("--n", cj.n)->capture_default_str();
    scj->add_option("--k", cj.k)->capture_default_str();
    scj->callback([&] { action = [&] { return cmd_conjecture(cj, g); }; });

    auto chain_opts = [](CLI::App* s, ChainArgs& c) {
        s->add_option("--sweeps", c.sweeps)->check(CLI::PositiveNumber)->capture_default_str();
        s->add_option("--burn-in", c.burn_in)->capture_default_str();
        s->add_option("--thin", c.thin)->check(CLI::PositiveNumber)->capture_default_str();
        s->add_option("--batch", c.batch, "recorded sweeps per batch mean")->check(CLI::PositiveNumber)->capture_default_str();
        s->add_option("--seed", c.seed, "overrides LOGMAX_SEED");
    };

    McJacobiArgs mj;
    auto* smj = app.add_subcommand("mc-jacobi", "Metropolis sampler for the beta-Jacobi gas");
    smj->add_option("--kappa", mj.kappa)->capture_default_str();
    smj->add_option("--a", mj.a)->capture_default_str();
    smj->add_option("--b", mj.b)->capture_default_str();
    smj->add_option("--n", mj.n)->check(CLI::PositiveNumber)->capture_default_str();
    smj->add_option("--k", mj.k)->capture_default_str();
    chain_opts(smj, mj.chain);
    smj->add_flag("--against-exact", mj.against_exact);
    smj->callback([&] { action = [&] { return cmd_mc_jacobi(mj, g); }; });

    McCircularArgs mcir;
    auto* smc = app.add_subcommand("mc-circular", "Metropolis sampler for the circular gas");
    smc->add_option("--kappa", mcir.kappa)->capture_default_str();
    smc->add_option("--mu", mcir.mu)->capture_default_str();
    smc->add_option("--n", mcir.n)->check(CLI::PositiveNumber)->capture_default_str();
    smc->add_option("--k", mcir.k)->capture_default_str();
    chain_opts(smc, mcir.chain);
    smc->add_flag("--against-exact", mcir.against_exact);
    smc->callback([&] { action = [&] { return cmd_mc_circular(mcir, g); }; });

    McGueArgs mg;
    auto* smg = app.add_subcommand("mc-gue", "argmax of GUE characteristic polynomials");
    smg->add_option("--N", mg.N)->capture_default_str();
    smg->add_option("--realizations", mg.realizations)->check(CLI::PositiveNumber)->capture_default_str();
    smg->add_option("--grid", mg.grid)->check(CLI::Range(256, 1 << 24))->capture_default_str();
    smg->add_option("--spectrum-every", mg.spectrum_every)->capture_default_str();
    smg->add_option("--seed", mg.seed, "overrides LOGMAX_SEED");
    smg->add_flag("--against-exact", mg.against_exact);
    smg->callback([&] { action = [&] { return cmd_mc_gue(mg, g); }; });

    McFbm0Args mf;
    auto* smf = app.add_subcommand("mc-fbm0", "argmin of fBm0 on [0, L]");
    smf->add_option("--grid", mf.grid)->check(CLI::Range(256, 1 << 16))->capture_default_str();
    smf->add_option("--L", mf.L)->capture_default_str();
    smf->add_option("--eta", mf.eta, "regularization scale in units of L")->capture_default_str();
    smf->add_option("--realizations", mf.realizations)->check(CLI::PositiveNumber)->capture_default_str();
    smf->add_option("--seed", mf.seed, "overrides LOGMAX_SEED");
    smf->add_flag("--against-exact", mf.against_exact);
    smf->callback([&] { action = [&] { return cmd_mc_fbm0(mf, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    Format f = g.format == "csv" ? Format::csv : g.format == "pretty" ? Format::pretty : Format::json;
    std::ofstream file;
    std::ostream* os = &out;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) {
            err << "error: cannot open " << g.output << "\n";
            return 2;
        }
        os = &file;
    }

    auto fail = [&](const std::string& type, const std::string& msg, const json& extra, int code) {
        if (f == Format::json) {
            json e{{"type", type}, {"message", msg}};
            for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
            *os << json{{"error", e}}.dump(2) << "\n";
        }
        err << "error (" << type << "): " << msg << "\n";
        return code;
    };
    try {
        Report r = action();
        write_report(r, f, *os, err);
        return 0;
    } catch (const CLI::ValidationError& e) {
        return fail("usage", e.what(), json::object(), 2);
    } catch (const Divergence& e) {
        return fail("divergence", e.what(), json{{"factor", e.factor()}, {"origin", e.origin()}}, 1);
    } catch (const PoleCollision& e) {
        return fail("pole-collision", e.what(), json::object(), 1);
    } catch (const BlockedQuantity& e) {
        return fail("blocked", e.what(), json::object(), 1);
    } catch (const InvariantViolation& e) {
        return fail("invariant-violation", e.what(), json::object(), 1);
    } catch (const std::invalid_argument& e) {
        return fail("invalid", e.what(), json::object(), 1);
    } catch (const std::domain_error& e) {
        return fail("invalid", e.what(), json::object(), 1);
    } catch (const std::exception& e) {
        return fail("error", e.what(), json::object(), 1);
    }
}

}  // namespace logmax::cli
