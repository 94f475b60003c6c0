/// specalg: command-line front end for the ladder-operator spectrum library.
///
/// Subcommands: classify | spectrum | wavefunction | potential | verify | sweep.
/// JSON commands emit one envelope {schema_version, command, params, payload,
/// warnings} with stable key order; CSV commands emit a header row plus data
/// rows with 17 significant digits.  Exit codes: 0 success, 2 invalid input,
/// 3 verification failure.  Identical invocations produce byte-identical
/// output; run metadata is added only under --verbose.

#include <specalg/specalg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace specalg;

constexpr const char* tool_version = "specalg 1.0.0";
constexpr double fallback_tol = 1e-3;

// ---------------------------------------------------------------------------
// Formatting and parsing helpers
// ---------------------------------------------------------------------------

std::string fmt17(double v)
{
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// JSON value for a double; non-finite values map to null.
ordered_json jnum(double v)
{
    if (!std::isfinite(v)) {
        return nullptr;
    }
    if (v == 0.0) {
        v = 0.0;
    }
    return v;
}

ordered_json jnum_opt(const std::optional<double>& v)
{
    return v ? jnum(*v) : ordered_json(nullptr);
}

double parse_double_strict(const std::string& s, const std::string& what)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw invalid_input_error(what + ": expected a finite number, got \"" + s + "\"");
}

long long parse_int_strict(const std::string& s, const std::string& what)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos == s.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw invalid_input_error(what + ": expected an integer, got \"" + s + "\"");
}

/// A ladder label: exact half-integer when the text is one ("3/2", "1.5"),
/// otherwise a plain double ("1.7", admitted only in extended mode).
struct Label {
    double value = 0.0;
    std::optional<HalfInteger> exact;
};

Label parse_label(const std::string& s, const std::string& what)
{
    if (const auto h = HalfInteger::parse(s)) {
        return {h->value(), *h};
    }
    return {parse_double_strict(s, what), std::nullopt};
}

Family parse_family(const std::string& s)
{
    if (const auto f = family_from_name(s)) {
        return *f;
    }
    throw invalid_input_error("unknown family \"" + s +
                              "\"; expected flat|spherical|hyperbolic|rosen-morse");
}

SpectrumMode parse_mode(const std::string& s)
{
    if (s == "strict") {
        return SpectrumMode::strict;
    }
    if (s == "extended") {
        return SpectrumMode::extended;
    }
    throw invalid_input_error("unknown --mode \"" + s + "\"; expected strict|extended");
}

ModelParams make_params(Family f, const Label& j, double g)
{
    if (j.exact) {
        return ModelParams(f, *j.exact, g);
    }
    return ModelParams(f, j.value, g);
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (const char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct GridSpec {
    double a = 0.0;
    double b = 1.0;
    long long n = 0;
};

/// Parse "a,b,n" with finite a < b; the admissible n depends on the consumer
/// (oracle grids need >= 16 interior points, sample grids >= 5 samples).
GridSpec parse_grid_spec(const std::string& s)
{
    const auto parts = split_commas(s);
    if (parts.size() != 3) {
        throw invalid_input_error("--grid expects \"a,b,n\", got \"" + s + "\"");
    }
    GridSpec g;
    g.a = parse_double_strict(parts[0], "--grid a");
    g.b = parse_double_strict(parts[1], "--grid b");
    g.n = parse_int_strict(parts[2], "--grid n");
    if (!(g.a < g.b)) {
        throw invalid_input_error("--grid expects a < b");
    }
    return g;
}

struct RangeSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;
};

RangeSpec parse_range_spec(const std::string& s, const std::string& what)
{
    const auto parts = split_commas(s);
    if (parts.size() != 3) {
        throw invalid_input_error(what + " expects \"lo,hi,step\", got \"" + s + "\"");
    }
    RangeSpec r;
    r.lo = parse_double_strict(parts[0], what + " lo");
    r.hi = parse_double_strict(parts[1], what + " hi");
    r.step = parse_double_strict(parts[2], what + " step");
    if (!(r.step > 0.0)) {
        throw invalid_input_error(what + ": step must be > 0");
    }
    return r;
}

/// lo, lo+step, ... up to hi (with a small tolerance for floating-point
/// shortfall at the endpoint).  lo > hi yields an empty list.
std::vector<double> range_points(const RangeSpec& r)
{
    std::vector<double> xs;
    const double limit = r.hi + 1e-9 * r.step;
    for (long long k = 0;; ++k) {
        const double x = r.lo + static_cast<double>(k) * r.step;
        if (x > limit) {
            break;
        }
        if (k >= 2000000) {
            throw invalid_input_error("range produces too many points");
        }
        xs.push_back(x);
    }
    return xs;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

struct OutputOpts {
    std::string out_path;  ///< empty: write to stdout
    bool verbose = false;
};

void emit(const OutputOpts& o, const std::string& text)
{
    if (o.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        throw invalid_input_error("cannot open output file \"" + o.out_path + "\"");
    }
    f << text;
    if (!f) {
        throw invalid_input_error("failed while writing \"" + o.out_path + "\"");
    }
}

void emit_envelope(const OutputOpts& o, const std::string& command, ordered_json params,
                   ordered_json payload, const std::vector<std::string>& warnings)
{
    ordered_json env;
    env["schema_version"] = "1";
    env["command"] = command;
    env["params"] = std::move(params);
    env["payload"] = std::move(payload);
    env["warnings"] = warnings;
    if (o.verbose) {
        ordered_json run;
        run["tool"] = tool_version;
        env["run"] = std::move(run);
    }
    emit(o, env.dump(2) + "\n");
}

/// Default tolerance: 1e-3, overridable through SPECALG_DEFAULT_TOL.  A
/// malformed value is reported in the envelope warnings and ignored.
double resolve_default_tol(std::vector<std::string>& warnings)
{
    const char* raw = std::getenv("SPECALG_DEFAULT_TOL");
    if (raw == nullptr || *raw == '\0') {
        return fallback_tol;
    }
    try {
        std::size_t pos = 0;
        const std::string text(raw);
        const double v = std::stod(text, &pos);
        if (pos == text.size() && std::isfinite(v) && v > 0.0) {
            return v;
        }
    } catch (const std::exception&) {
    }
    warnings.push_back(std::string("ignoring malformed SPECALG_DEFAULT_TOL=\"") + raw +
                       "\"; using 0.001");
    return fallback_tol;
}

ordered_json rep_to_json(const RepClass& r)
{
    ordered_json o;
    o["nu"] = jnum(r.nu);
    o["nu_exact"] = r.nu_exact ? ordered_json(r.nu_exact->str()) : ordered_json(nullptr);
    o["kind"] = std::string(rep_kind_name(r.kind));
    o["dim"] = r.dim ? ordered_json(*r.dim) : ordered_json(nullptr);
    ordered_json orbit = ordered_json::array();
    for (const double v : r.orbit) {
        orbit.push_back(jnum(v));
    }
    o["orbit"] = std::move(orbit);
    o["orbit_unbounded_below"] = r.orbit_unbounded_below;
    o["orbit_unbounded_above"] = r.orbit_unbounded_above;
    o["energy"] = jnum_opt(r.energy);
    o["note"] = r.note;
    return o;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyArgs {
    std::string family;
    double g = 0.0;
    std::string nu;            ///< single-label mode when present
    std::string nu_max = "4";  ///< scan half-width otherwise
    std::string format = "json";
};

int run_classify(const ClassifyArgs& a, const OutputOpts& o)
{
    if (a.format != "json") {
        throw invalid_input_error("classify emits JSON only; --format csv is not supported");
    }
    const Family fam = parse_family(a.family);
    // classify() reads the family and coupling; the j slot of the parameter
    // pack is inert here.
    const ModelParams p(fam, 0.5, a.g);

    ordered_json params;
    params["family"] = std::string(family_name(fam));
    params["g"] = a.g;

    if (!a.nu.empty()) {
        const Label nu = parse_label(a.nu, "--nu");
        params["nu"] = nu.value;
        ordered_json payload;
        payload["representation"] = rep_to_json(classify(p, nu.value));
        emit_envelope(o, "classify", std::move(params), std::move(payload), {});
        return 0;
    }

    const auto numax = HalfInteger::parse(a.nu_max);
    if (!numax) {
        throw invalid_input_error("--nu-max must be a half-integer (e.g. 4 or 7/2); got \"" +
                                  a.nu_max + "\"");
    }
    if (numax->twice() < 0) {
        throw invalid_input_error("--nu-max must be >= 0");
    }
    params["nu_max"] = numax->value();

    ordered_json scan = ordered_json::array();
    ordered_json towers = ordered_json::array();
    for (std::int64_t t = -numax->twice(); t <= numax->twice(); ++t) {
        const double nu = HalfInteger::from_twice(t).value();
        const RepClass r = classify(p, nu);
        scan.push_back(rep_to_json(r));
        if (r.kind == RepKind::finite_dim) {
            ordered_json tower;
            tower["nu"] = nu;
            tower["dim"] = *r.dim;
            tower["energy"] = jnum_opt(r.energy);
            towers.push_back(std::move(tower));
        }
    }

    ordered_json payload;
    const bool banded = fam == Family::hyperbolic_kepler || fam == Family::rosen_morse;
    if (banded) {
        const double s = std::sqrt(a.g);
        payload["sqrt_g"] = jnum(s);
        payload["finite_towers"] = std::move(towers);
        ordered_json bands = ordered_json::array();
        bands.push_back(ordered_json::array({jnum(-s), jnum(1.0 - s)}));
        bands.push_back(ordered_json::array({jnum(s), jnum(1.0 + s)}));
        payload["excluded_bands"] = std::move(bands);
        const auto js = one_dim_special_j(a.g);
        payload["special"] = js ? rep_to_json(classify(p, *js)) : ordered_json(nullptr);
    } else {
        payload["sqrt_g"] = nullptr;
        payload["finite_towers"] = std::move(towers);
        payload["excluded_bands"] = nullptr;
        payload["special"] = nullptr;
    }
    payload["scan"] = std::move(scan);

    emit_envelope(o, "classify", std::move(params), std::move(payload), {});
    return 0;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumArgs {
    std::string family;
    std::string j;
    double g = 0.0;
    std::optional<int> n_max;
    std::string mode = "strict";
    std::string format = "json";
};

int run_spectrum(const SpectrumArgs& a, const OutputOpts& o)
{
    const Family fam = parse_family(a.family);
    const Label j = parse_label(a.j, "--j");
    const ModelParams p = make_params(fam, j, a.g);
    const SpectrumMode mode = parse_mode(a.mode);
    const SpectrumReport rep = spectrum(p, a.n_max, mode);

    if (a.format == "csv") {
        std::string csv = "n,energy,j_end\n";
        for (const SpectrumLine& l : rep.lines) {
            csv += std::to_string(l.n) + "," + fmt17(l.energy) + "," + fmt17(l.j_top_or_base) +
                   "\n";
        }
        emit(o, csv);
        return 0;
    }

    ordered_json params;
    params["family"] = std::string(family_name(fam));
    params["j"] = p.j;
    params["g"] = a.g;
    params["n_max"] = a.n_max ? ordered_json(*a.n_max) : ordered_json(nullptr);
    params["mode"] = std::string(spectrum_mode_name(mode));

    ordered_json lines = ordered_json::array();
    for (const SpectrumLine& l : rep.lines) {
        ordered_json line;
        line["n"] = l.n;
        line["energy"] = jnum(l.energy);
        line["j_end"] = jnum(l.j_top_or_base);
        lines.push_back(std::move(line));
    }
    ordered_json payload;
    payload["mode"] = std::string(spectrum_mode_name(rep.mode));
    payload["natural_cutoff"] =
        rep.natural_cutoff ? ordered_json(*rep.natural_cutoff) : ordered_json(nullptr);
    payload["capped_by_caller"] = rep.capped_by_caller;
    payload["continuum_threshold"] = jnum(continuum_threshold(p));
    payload["lines"] = std::move(lines);

    emit_envelope(o, "spectrum", std::move(params), std::move(payload), {});
    return 0;
}

// ---------------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------------

struct WavefunctionArgs {
    std::string family;
    std::string j;
    double g = 0.0;
    int n = 0;
    std::string grid;  ///< "a,b,count"; empty: family default window, 801 samples
    bool normalize = false;
    std::string format = "json";
};

int run_wavefunction(const WavefunctionArgs& a, const OutputOpts& o)
{
    const Family fam = parse_family(a.family);
    const Label j = parse_label(a.j, "--j");
    const ModelParams p = make_params(fam, j, a.g);
    if (a.n < 0) {
        throw invalid_input_error("--n must be >= 0");
    }

    WaveFunction psi = rodrigues_chain(p, a.n);

    double wa = 0.0;
    double wb = 0.0;
    long long count = 801;
    if (!a.grid.empty()) {
        const GridSpec gs = parse_grid_spec(a.grid);
        wa = gs.a;
        wb = gs.b;
        count = gs.n;
    } else {
        const Grid d = default_grid(p, a.n);
        wa = d.a;
        wb = d.b;
    }
    if (count < 5) {
        throw invalid_input_error("wavefunction needs at least 5 samples");
    }
    if (a.normalize && count % 2 == 0) {
        throw invalid_input_error("--normalize needs an odd sample count (Simpson rule)");
    }

    // Samples sit strictly inside (a, b): the window endpoints may touch the
    // open domain boundary (x = 0, x = pi) where the potential is singular.
    const double step = (wb - wa) / static_cast<double>(count + 1);
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (long long i = 1; i <= count; ++i) {
        xs[static_cast<std::size_t>(i - 1)] = wa + static_cast<double>(i) * step;
    }

    std::optional<double> pre_norm;
    if (a.normalize) {
        NormalizeResult nr = normalize(psi, xs.front(), xs.back(), static_cast<int>(count));
        psi = std::move(nr.psi);
        pre_norm = nr.norm;
    }

    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ys[i] = psi(xs[i]);
    }

    if (a.format == "csv") {
        std::string csv = "x,psi\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            csv += fmt17(xs[i]) + "," + fmt17(ys[i]) + "\n";
        }
        emit(o, csv);
        return 0;
    }

    // The level's energy, admitting non-half-integer labels the same way the
    // chain construction does: strict first, then the extended fallback.
    double energy = 0.0;
    try {
        energy = spectrum(p, a.n, SpectrumMode::strict).lines.at(a.n).energy;
    } catch (const quantization_error&) {
        energy = spectrum(p, a.n, SpectrumMode::extended).lines.at(a.n).energy;
    }

    ordered_json params;
    params["family"] = std::string(family_name(fam));
    params["j"] = p.j;
    params["g"] = a.g;
    params["n"] = a.n;
    params["normalize"] = a.normalize;

    ordered_json grid;
    grid["a"] = jnum(wa);
    grid["b"] = jnum(wb);
    grid["count"] = count;

    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        samples.push_back(ordered_json::array({jnum(xs[i]), jnum(ys[i])}));
    }

    ordered_json payload;
    payload["grid"] = std::move(grid);
    payload["energy"] = jnum(energy);
    payload["pre_normalization_norm"] = jnum_opt(pre_norm);
    payload["samples"] = std::move(samples);

    emit_envelope(o, "wavefunction", std::move(params), std::move(payload), {});
    return 0;
}

// ---------------------------------------------------------------------------
// potential
// ---------------------------------------------------------------------------

struct PotentialArgs {
    std::string family;
    std::string j;
    double g = 0.0;
    std::string grid;
    std::string format = "csv";
};

int run_potential(const PotentialArgs& a, const OutputOpts& o)
{
    if (a.format != "csv") {
        throw invalid_input_error("potential emits CSV only; --format json is not supported");
    }
    const Family fam = parse_family(a.family);
    const Label j = parse_label(a.j, "--j");
    const ModelParams p = make_params(fam, j, a.g);

    double wa = 0.0;
    double wb = 0.0;
    long long count = 801;
    if (!a.grid.empty()) {
        const GridSpec gs = parse_grid_spec(a.grid);
        wa = gs.a;
        wb = gs.b;
        count = gs.n;
        if (count < 5) {
            throw invalid_input_error("potential needs at least 5 samples");
        }
    } else {
        // Window sized to the ground-state well when one exists; the
        // potential is defined regardless, so fall back to fixed spans.
        try {
            const Grid d = default_grid(p, 0);
            wa = d.a;
            wb = d.b;
        } catch (const error&) {
            switch (fam) {
                case Family::flat_kepler: wb = 40.0; break;
                case Family::spherical_kepler: wb = pi_v; break;
                case Family::hyperbolic_kepler: wb = 40.0; break;
                case Family::rosen_morse:
                    wa = -30.0;
                    wb = 30.0;
                    break;
            }
        }
    }

    const double step = (wb - wa) / static_cast<double>(count + 1);
    std::string csv = "kind,x,n,value\n";
    for (long long i = 1; i <= count; ++i) {
        const double x = wa + static_cast<double>(i) * step;
        csv += "potential," + fmt17(x) + ",," + fmt17(potential(p, x)) + "\n";
    }

    // Discrete levels drawn over the well: the natural truncation for the
    // terminating families, the first four levels for the infinite towers.
    // Labels outside every bound-state window yield potential rows only.
    std::vector<SpectrumLine> lines;
    try {
        std::optional<int> nmax;
        if (fam == Family::flat_kepler || fam == Family::spherical_kepler) {
            nmax = 3;
        }
        try {
            lines = spectrum(p, nmax, SpectrumMode::strict).lines;
        } catch (const quantization_error&) {
            lines = spectrum(p, nmax, SpectrumMode::extended).lines;
        }
    } catch (const error&) {
        lines.clear();
    }
    for (const SpectrumLine& l : lines) {
        csv += "level,," + std::to_string(l.n) + "," + fmt17(l.energy) + "\n";
    }

    emit(o, csv);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string family;
    std::string j;
    double g = 0.0;
    int levels = 3;
    double tol_rel = fallback_tol;
    std::string mode = "strict";
    std::string grid;
    bool probe_excluded = false;
    std::string format = "json";
};

int run_verify(const VerifyArgs& a, const OutputOpts& o, const std::vector<std::string>& warnings)
{
    if (a.format != "json") {
        throw invalid_input_error("verify emits JSON only; --format csv is not supported");
    }
    const Family fam = parse_family(a.family);
    const Label j = parse_label(a.j, "--j");
    const ModelParams p = make_params(fam, j, a.g);

    VerifyOptions opt;
    opt.tol_rel = a.tol_rel;
    if (!std::isfinite(opt.tol_rel) || !(opt.tol_rel > 0.0)) {
        throw invalid_input_error("--tol-rel must be a positive number");
    }
    opt.mode = parse_mode(a.mode);
    opt.probe_excluded = a.probe_excluded;
    if (!a.grid.empty()) {
        const GridSpec gs = parse_grid_spec(a.grid);
        if (gs.n > std::numeric_limits<int>::max()) {
            throw invalid_input_error("--grid n is too large");
        }
        opt.grid = Grid::make(gs.a, gs.b, static_cast<int>(gs.n));
    }

    const VerificationReport r = verify(p, a.levels, opt);

    ordered_json params;
    params["family"] = std::string(family_name(fam));
    params["j"] = p.j;
    params["g"] = a.g;
    params["levels"] = a.levels;
    params["tol_rel"] = a.tol_rel;
    params["mode"] = std::string(spectrum_mode_name(opt.mode));
    params["probe_excluded"] = a.probe_excluded;
    params["grid"] = a.grid.empty() ? ordered_json(nullptr) : ordered_json(a.grid);

    ordered_json grid;
    grid["a"] = jnum(r.grid.a);
    grid["b"] = jnum(r.grid.b);
    grid["n"] = r.grid.n;

    ordered_json levels = ordered_json::array();
    for (const LevelCheck& lc : r.levels) {
        ordered_json l;
        l["n"] = lc.n;
        l["e_algebraic"] = jnum(lc.e_algebraic);
        l["e_numeric"] = jnum_opt(lc.e_numeric);
        l["abs_delta"] = jnum_opt(lc.abs_delta);
        l["rel_delta"] = jnum_opt(lc.rel_delta);
        l["pass"] = lc.pass;
        levels.push_back(std::move(l));
    }

    ordered_json rich;
    rich["assessed"] = r.richardson.assessed;
    rich["pass"] = r.richardson.pass;
    rich["ratio"] = jnum(r.richardson.ratio);
    rich["expected_ratio"] = jnum(r.richardson.expected_ratio);
    rich["coarse_delta"] = jnum(r.richardson.coarse_delta);
    rich["fine_delta"] = jnum(r.richardson.fine_delta);

    ordered_json payload;
    payload["pass"] = r.pass;
    payload["mode"] = std::string(spectrum_mode_name(r.mode_used));
    payload["probe"] = r.probe;
    payload["special_representation"] = r.special_representation;
    payload["grid"] = std::move(grid);
    payload["continuum_threshold"] = jnum(r.threshold);
    payload["levels"] = std::move(levels);
    payload["algebraic_count"] =
        r.algebraic_count ? ordered_json(*r.algebraic_count) : ordered_json(nullptr);
    payload["numeric_count"] =
        r.numeric_count ? ordered_json(*r.numeric_count) : ordered_json(nullptr);
    payload["count_pass"] = r.count_pass ? ordered_json(*r.count_pass) : ordered_json(nullptr);
    payload["richardson"] = std::move(rich);
    payload["note"] = r.note;

    emit_envelope(o, "verify", std::move(params), std::move(payload), warnings);
    return r.pass ? 0 : 3;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string family;
    std::optional<double> g;  ///< fixed coupling, required with --j-range
    std::string j_range;
    std::string g_range;
    std::string format = "csv";
};

int run_sweep(const SweepArgs& a, const OutputOpts& o)
{
    if (a.format != "csv") {
        throw invalid_input_error("sweep emits CSV only; --format json is not supported");
    }
    const Family fam = parse_family(a.family);
    const bool has_j = !a.j_range.empty();
    const bool has_g = !a.g_range.empty();
    if (has_j == has_g) {
        throw invalid_input_error("sweep needs exactly one of --j-range or --g-range");
    }

    if (has_j) {
        if (!a.g) {
            throw invalid_input_error("--j-range sweeps need --g");
        }
        const ModelParams p(fam, 0.5, *a.g);
        const RangeSpec r = parse_range_spec(a.j_range, "--j-range");
        std::string csv = "family,g,nu,kind,dim,energy\n";
        for (const double nu : range_points(r)) {
            const RepClass rc = classify(p, nu);
            csv += std::string(family_name(fam)) + "," + fmt17(*a.g) + "," + fmt17(nu) + "," +
                   std::string(rep_kind_name(rc.kind)) + "," +
                   (rc.dim ? std::to_string(*rc.dim) : std::string()) + "," +
                   (rc.energy ? fmt17(*rc.energy) : std::string()) + "\n";
        }
        emit(o, csv);
        return 0;
    }

    if (fam != Family::hyperbolic_kepler && fam != Family::rosen_morse) {
        throw invalid_input_error(
            "--g-range sweeps describe the hyperbolic/rosen-morse band structure; use "
            "--j-range for the " +
            std::string(family_name(fam)) + " family");
    }
    const RangeSpec r = parse_range_spec(a.g_range, "--g-range");
    std::string csv =
        "family,g,sqrt_g,nu_max,special_j,special_energy,band1_lo,band1_hi,band2_lo,band2_hi\n";
    for (const double g : range_points(r)) {
        if (!(g > 0.0)) {
            throw invalid_input_error("--g-range values must be > 0");
        }
        const ModelParams pg(fam, 0.5, g);
        const double s = std::sqrt(g);
        const auto numax = nu_max_below_sqrt_g(g);
        std::string special_j;
        std::string special_e;
        if (const auto js = one_dim_special_j(g)) {
            const RepClass rc = classify(pg, *js);
            special_j = fmt17(rc.nu);
            special_e = rc.energy ? fmt17(*rc.energy) : std::string();
        }
        csv += std::string(family_name(fam)) + "," + fmt17(g) + "," + fmt17(s) + "," +
               (numax ? fmt17(numax->value()) : std::string()) + "," + special_j + "," +
               special_e + "," + fmt17(-s) + "," + fmt17(1.0 - s) + "," + fmt17(s) + "," +
               fmt17(1.0 + s) + "\n";
    }
    emit(o, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> warnings;
    const double default_tol = resolve_default_tol(warnings);

    CLI::App app{"Ladder spectra, representation maps, and numeric cross-checks for four "
                 "shape-invariant Kepler-type potentials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    OutputOpts out;
    const auto add_output_opts = [&out](CLI::App* cmd) {
        cmd->add_option("--out", out.out_path, "Write output to this file instead of stdout");
        cmd->add_flag("--verbose", out.verbose, "Append run metadata to the JSON envelope");
    };
    const auto family_opt = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--family", target, "flat|spherical|hyperbolic|rosen-morse")
            ->required()
            ->check(CLI::IsMember({"flat", "spherical", "hyperbolic", "rosen-morse"}));
    };

    ClassifyArgs ca;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Map J3 labels to representation types");
    family_opt(classify_cmd, ca.family);
    classify_cmd->add_option("--g", ca.g, "Coupling strength (> 0)")->required();
    classify_cmd->add_option("--nu", ca.nu, "Classify a single label (half-integers as p/2)");
    classify_cmd->add_option("--nu-max", ca.nu_max,
                             "Scan labels -nu-max..nu-max in half steps (default 4)");
    classify_cmd->add_option("--format", ca.format, "json");
    add_output_opts(classify_cmd);

    SpectrumArgs sa;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "Closed-form bound-state energies for one (family, j, g)");
    family_opt(spectrum_cmd, sa.family);
    spectrum_cmd->add_option("--j", sa.j, "Ladder label (accepts p/2)")->required();
    spectrum_cmd->add_option("--g", sa.g, "Coupling strength (> 0)")->required();
    spectrum_cmd->add_option("--n-max", sa.n_max,
                             "Highest level index (required for flat/spherical)");
    spectrum_cmd->add_option("--mode", sa.mode, "strict|extended")
        ->check(CLI::IsMember({"strict", "extended"}));
    spectrum_cmd->add_option("--format", sa.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_output_opts(spectrum_cmd);

    WavefunctionArgs wfa;
    CLI::App* wavefunction_cmd =
        app.add_subcommand("wavefunction", "Sample one chain-built eigenfunction");
    family_opt(wavefunction_cmd, wfa.family);
    wavefunction_cmd->add_option("--j", wfa.j, "Ladder label (accepts p/2)")->required();
    wavefunction_cmd->add_option("--g", wfa.g, "Coupling strength (> 0)")->required();
    wavefunction_cmd->add_option("--n", wfa.n, "Level index (default 0)");
    wavefunction_cmd->add_option(
        "--grid", wfa.grid, "a,b,count sample window (default: family window, 801 samples)");
    wavefunction_cmd->add_flag("--normalize", wfa.normalize,
                               "Scale to unit L2 norm over the sampled window (odd count)");
    wavefunction_cmd->add_option("--format", wfa.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_output_opts(wavefunction_cmd);

    PotentialArgs pa;
    CLI::App* potential_cmd =
        app.add_subcommand("potential", "Sample the potential curve plus its level lines (CSV)");
    family_opt(potential_cmd, pa.family);
    potential_cmd->add_option("--j", pa.j, "Ladder label (accepts p/2)")->required();
    potential_cmd->add_option("--g", pa.g, "Coupling strength")->required();
    potential_cmd->add_option("--grid", pa.grid,
                              "a,b,count sample window (default: family window, 801 samples)");
    potential_cmd->add_option("--format", pa.format, "csv");
    add_output_opts(potential_cmd);

    VerifyArgs va;
    va.tol_rel = default_tol;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check closed-form levels against an independent matrix oracle");
    family_opt(verify_cmd, va.family);
    verify_cmd->add_option("--j", va.j, "Ladder label (accepts p/2)")->required();
    verify_cmd->add_option("--g", va.g, "Coupling strength (> 0)")->required();
    verify_cmd->add_option("--levels", va.levels, "Number of levels to check (default 3)");
    verify_cmd->add_option("--tol-rel", va.tol_rel,
                           "Relative tolerance (default 1e-3 or SPECALG_DEFAULT_TOL)");
    verify_cmd->add_option("--mode", va.mode, "strict|extended")
        ->check(CLI::IsMember({"strict", "extended"}));
    verify_cmd->add_option("--grid", va.grid, "a,b,n override for the oracle grid");
    verify_cmd->add_flag("--probe-excluded", va.probe_excluded,
                         "Assert that no bound state exists instead of matching levels");
    verify_cmd->add_option("--format", va.format, "json");
    add_output_opts(verify_cmd);

    SweepArgs swa;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Batch classification over a j range or a g range (CSV)");
    family_opt(sweep_cmd, swa.family);
    sweep_cmd->add_option("--g", swa.g, "Fixed coupling for --j-range sweeps");
    sweep_cmd->add_option("--j-range", swa.j_range, "lo,hi,step over the J3 label");
    sweep_cmd->add_option("--g-range", swa.g_range,
                          "lo,hi,step over the coupling (hyperbolic|rosen-morse)");
    sweep_cmd->add_option("--format", swa.format, "csv");
    add_output_opts(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) {
            return run_classify(ca, out);
        }
        if (spectrum_cmd->parsed()) {
            return run_spectrum(sa, out);
        }
        if (wavefunction_cmd->parsed()) {
            return run_wavefunction(wfa, out);
        }
        if (potential_cmd->parsed()) {
            return run_potential(pa, out);
        }
        if (verify_cmd->parsed()) {
            return run_verify(va, out, warnings);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(swa, out);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
