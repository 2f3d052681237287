// symker: normal forms, map evaluation and exactness certificates.
//
// Exit codes: 0 pass, 1 mathematical check failure, 2 usage error,
// 3 size-cap refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "symker/certify.hpp"
#include "symker/json_io.hpp"
#include "symker/m_bimodule.hpp"
#include "symker/parse.hpp"
#include "symker/sprime.hpp"

namespace {

using namespace symker;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "2", "2..4", "2,3,5" or mixtures like "1,3..4".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            const auto dots = part.find("..");
            if (dots == std::string::npos) {
                std::size_t used = 0;
                out.push_back(std::stoi(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } else {
                const int lo = std::stoi(part.substr(0, dots));
                const int hi = std::stoi(part.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument(part);
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::exception&) {
            throw UsageError("invalid integer list '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    for (int v : out)
        if (v < 0) throw UsageError("negative value in '" + text + "'");
    return out;
}

std::vector<FieldSpec> parse_fields(const std::string& text) {
    std::vector<FieldSpec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(FieldSpec::parse(part));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) throw UsageError("no field given");
    return out;
}

std::size_t default_size_cap() {
    if (const char* env = std::getenv("SYMKER_SIZE_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw UsageError(std::string("invalid SYMKER_SIZE_CAP '") + env + "'");
        }
    }
    return kDefaultSizeCap;
}

void emit(const Json& j, bool pretty, const std::string& out_path) {
    const std::string text = pretty ? j.dump(2) : j.dump();
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text << '\n';
}

struct Options {
    std::string field = "q";
    std::string m_list;
    std::string n_list;
    int m = -1;
    int n_max = 2;
    std::size_t cap = 0;
    bool cap_given = false;
    std::string out;
    bool json = false;
    bool pretty = false;
    bool timing = true;
    unsigned jobs = 0;
    std::string sequence;
    std::string target;
    std::string word;
    std::string elem;
    int n = 4;
    int samples = 200;
    std::uint64_t seed = 1;
};

std::size_t size_cap(const Options& o) { return o.cap_given ? o.cap : default_size_cap(); }

// --- dims ---------------------------------------------------------------------

int cmd_dims(const Options& o) {
    if (o.m < 0) throw UsageError("--m is required");
    const FieldSpec field = parse_fields(o.field).front();
    const Space space(o.m, field);
    Json rows = Json::array();
    for (int n = 2; n <= o.n_max; ++n) {
        const MQuotientContext ctx = build_context(space, n, size_cap(o));
        rows.push_back({{"n", n},
                        {"T", dim_T(o.m, n)},
                        {"S", dim_S(o.m, n)},
                        {"Lambda", dim_Lambda(o.m, n)},
                        {"ambient", ambient_dim(o.m, n)},
                        {"wm_rank", ctx.wm_rank()},
                        {"M", ctx.m_dim()},
                        {"Sprime", dim_Sprime(o.m, n)}});
    }
    if (o.json) {
        emit(Json{{"m", o.m}, {"field", field.name()}, {"rows", rows}}, o.pretty, o.out);
        return kExitPass;
    }
    std::ostringstream table;
    table << "n\tT\tS\tLambda\tambient\twm_rank\tM\tSprime\n";
    for (const auto& r : rows)
        table << r["n"] << '\t' << r["T"] << '\t' << r["S"] << '\t' << r["Lambda"] << '\t' << r["ambient"] << '\t'
              << r["wm_rank"] << '\t' << r["M"] << '\t' << r["Sprime"] << '\n';
    std::cout << table.str();
    return kExitPass;
}

// --- check --------------------------------------------------------------------

int cmd_check(const Options& o) {
    CheckGrid grid{parse_int_list(o.m_list), {}, parse_fields(o.field), size_cap(o)};
    std::vector<Certificate> certs;
    if (o.sequence == "degree2") {
        for (int m : grid.m_values)
            for (const auto& f : grid.fields) {
                certs.push_back(check_exact_degree2(Space(m, f)));
                certs.push_back(degree2_coincidence(Space(m, f)));
            }
    } else {
        if (o.n_list.empty()) throw UsageError("--n is required");
        grid.n_values = parse_int_list(o.n_list);
        const Sequence which = o.sequence == "m"        ? Sequence::M
                               : o.sequence == "sprime" ? Sequence::Sprime
                                                        : Sequence::Both;
        certs = run_grid(grid, which, o.jobs);
    }
    emit(to_json(certs, o.timing), o.pretty, o.out);

    bool cap_tripped = false, failed = false;
    for (const auto& c : certs) {
        cap_tripped = cap_tripped || c.cap_exceeded;
        failed = failed || !c.pass();
    }
    if (cap_tripped) return kExitSizeCap;
    return failed ? kExitFailure : kExitPass;
}

// --- nf -----------------------------------------------------------------------

int max_letter(const std::string& text) {
    int best = 0, current = 0;
    bool in_number = false;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            current = in_number ? current * 10 + (ch - '0') : ch - '0';
            in_number = true;
        } else {
            if (in_number && ch != '/' && ch != '*') best = std::max(best, current);
            in_number = false;
        }
    }
    if (in_number) best = std::max(best, current);
    return best;
}

int cmd_nf(const Options& o) {
    if (o.word.empty() == o.elem.empty()) throw UsageError("give exactly one of --word or --elem");
    const FieldSpec field = parse_fields(o.field).front();
    const std::string input = o.word.empty() ? o.elem : o.word;
    const int m = o.m >= 0 ? o.m : max_letter(input);
    const Space space(m, field);

    if (o.target == "sprime") {
        if (!o.word.empty()) {
            const Word w = parse_word(o.word);
            TensorTraits::validate(space, w, static_cast<int>(w.size()));
            const SPrimeBasisElem e = sprime_normal_form(w);
            if (o.json) emit(to_json(SPrimeElement::basis(space, e)), o.pretty, o.out);
            else std::cout << format_sprime_basis(e) << '\n';
            return kExitPass;
        }
        const SPrimeElement a = parse_sprime(space, o.elem);
        if (o.json) emit(to_json(a), o.pretty, o.out);
        else std::cout << format(a) << '\n';
        return kExitPass;
    }

    // target m: wedge terms like 1,2(1^3)2; --word w is read as f_1(w).
    MElementRaw x = o.word.empty() ? parse_m(space, o.elem) : f_i(tensor_word(space, parse_word(o.word)), 1);
    const MQuotientContext ctx = build_context(space, x.degree(), size_cap(o));
    const MElementRaw nf = ctx.from_coordinates(ctx.normal_form(x));
    if (o.json)
        emit(Json{{"m", m}, {"n", x.degree()}, {"field", field.name()}, {"normal_form", to_json(nf)}}, o.pretty, o.out);
    else
        std::cout << format(nf) << '\n';
    return kExitPass;
}

// --- cocycle ------------------------------------------------------------------

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Perm(images);
}

Word random_word(int m, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> letter(1, m);
    Word w(static_cast<std::size_t>(n));
    for (auto& x : w) x = letter(rng);
    return w;
}

int cmd_cocycle(const Options& o) {
    if (o.m < 1) throw UsageError("--m must be at least 1");
    if (o.n < 2) throw UsageError("--n must be at least 2");
    if (o.samples < 0) throw UsageError("--samples must be non-negative");
    const FieldSpec field = parse_fields(o.field).front();
    const Space space(o.m, field);
    const MQuotientContext ctx = build_context(space, o.n, size_cap(o));
    std::mt19937_64 rng(o.seed);

    int cocycle_ok = 0, rho_ok = 0, padded_ok = 0;
    std::ostringstream failures;
    for (int s = 0; s < o.samples; ++s) {
        const Perm sigma = random_perm(o.n, rng);
        const Perm tau = random_perm(o.n, rng);
        const Word w = random_word(o.m, o.n, rng);
        const TensorElement a = tensor_word(space, w);

        const Vector lhs = h_tau(ctx, sigma * tau, a);
        Vector rhs = h_tau(ctx, tau, a);
        const Vector tail = h_tau(ctx, sigma, perm_action(tau, a));
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += tail[i];
        if (lhs == rhs) ++cocycle_ok;
        else failures << "cocycle: sigma=" << sigma.to_string() << " tau=" << tau.to_string()
                      << " word=" << format_word(w) << '\n';

        const Vector h = h_tau(ctx, tau, a);
        if (rho_M_T(ctx.from_coordinates(h)) == a - perm_action(tau, a)) ++rho_ok;
        else failures << "rho h_tau: tau=" << tau.to_string() << " word=" << format_word(w) << '\n';

        std::vector<int> padded = perm_word(tau);
        std::uniform_int_distribution<int> gen(1, o.n - 1);
        std::uniform_int_distribution<std::size_t> where(0, padded.size());
        const int i = gen(rng);
        padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(where(rng)), {i, i});
        if (h_tau(ctx, tau, a, padded) == h) ++padded_ok;
        else failures << "padded word: tau=" << tau.to_string() << " word=" << format_word(w) << '\n';
    }

    const bool pass = cocycle_ok == o.samples && rho_ok == o.samples && padded_ok == o.samples;
    if (o.json) {
        emit(Json{{"m", o.m}, {"n", o.n}, {"field", field.name()}, {"seed", o.seed}, {"samples", o.samples},
                  {"cocycle_pass", cocycle_ok}, {"rho_pass", rho_ok}, {"padded_word_pass", padded_ok},
                  {"pass", pass}},
             o.pretty, o.out);
    } else {
        std::cout << "cocycle h_{st} = h_t + h_s t: " << cocycle_ok << "/" << o.samples << " pass\n"
                  << "rho h_t = 1 - t:               " << rho_ok << "/" << o.samples << " pass\n"
                  << "non-reduced word agreement:    " << padded_ok << "/" << o.samples << " pass\n";
    }
    if (!pass) std::cerr << failures.str();
    return pass ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for 0 -> M(V) -> T(V) -> S(V) -> 0 and 0 -> Lambda(V) -> S'(V) -> S(V) -> 0"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", o.field, "Coefficient field(s): q, f2, f3, ... (comma-separated for check)");
        cmd->add_option("--cap", o.cap, "Maximum ambient column count (default 20000 or $SYMKER_SIZE_CAP)")
            ->each([&](const std::string&) { o.cap_given = true; });
        cmd->add_option("--out", o.out, "Write JSON to this path instead of stdout");
        cmd->add_flag("--pretty", o.pretty, "Indent JSON output");
    };

    auto* dims = app.add_subcommand("dims", "Dimensions of T^n, S^n, Lambda^n, M^n, S'^n");
    add_common(dims);
    dims->add_option("--m", o.m, "dim V")->required();
    dims->add_option("--n-max", o.n_max, "Largest degree (rows 2..n-max)");
    dims->add_flag("--json", o.json, "JSON output");

    auto* check = app.add_subcommand("check", "Certify exact sequences over a grid");
    add_common(check);
    check->add_option("sequence", o.sequence, "m | sprime | both | degree2")
        ->required()
        ->check(CLI::IsMember({"m", "sprime", "both", "degree2"}));
    check->add_option("--m", o.m_list, "dim V values, e.g. 2..3")->required();
    check->add_option("--n", o.n_list, "degrees, e.g. 2..4");
    check->add_option("--jobs", o.jobs, "Worker threads (0 = hardware)");
    check->add_flag("--no-timing{false}", o.timing, "Omit timing fields");

    auto* nf = app.add_subcommand("nf", "Normal forms in S' or M");
    add_common(nf);
    nf->add_option("target", o.target, "sprime | m")->required()->check(CLI::IsMember({"sprime", "m"}));
    nf->add_option("--m", o.m, "dim V (default: largest letter)");
    nf->add_option("--word", o.word, "Word, e.g. 2,1,3");
    nf->add_option("--elem", o.elem, "Linear combination, e.g. '2*1,2 - 2,1' or '1(2^3) - (2^3)1'");
    nf->add_flag("--json", o.json, "JSON output");

    auto* cocycle = app.add_subcommand("cocycle", "Sample h_{sigma tau} = h_tau + h_sigma tau and rho h_tau = 1 - tau");
    add_common(cocycle);
    cocycle->add_option("--m", o.m, "dim V")->required();
    cocycle->add_option("--n", o.n, "Degree");
    cocycle->add_option("--samples", o.samples, "Random (sigma, tau, word) triples");
    cocycle->add_option("--seed", o.seed, "RNG seed");
    cocycle->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*dims) return cmd_dims(o);
        if (*check) return cmd_check(o);
        if (*nf) return cmd_nf(o);
        if (*cocycle) return cmd_cocycle(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return kExitSizeCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
