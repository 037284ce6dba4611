#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "germfile.hpp"
#include "json_out.hpp"

namespace vfindex {

namespace cli {

constexpr int kExitOk = 0;
constexpr int kExitMathError = 1;   // non-isolated, non-tangent, ...
constexpr int kExitParseError = 2;  // bad file or bad arguments
constexpr int kExitBudget = 3;      // --max-spairs exhausted

inline const char* kUsage =
    "usage: vfindex <command> <input.germ> [--json] [--trace] [--max-spairs N] [--eps a,b,...]\n"
    "       vfindex report --all <dir> [--json] [--trace] [--max-spairs N]\n"
    "\n"
    "commands:\n"
    "  milnor     Milnor number of the hypersurface germ (k = 1)\n"
    "  ph-index   Poincaré-Hopf index dim O/(v1..vN) of the field\n"
    "  tangent    check v(f_i) in (f_1..f_k); exit 1 when not tangent\n"
    "  hom-index  homological index (Euler characteristic of the contraction complex)\n"
    "  gsv        GSV index (k <= 1; computed through the homological index)\n"
    "  schwartz   Schwartz index ind_GSV - (-1)^n mu\n"
    "  virtual    virtual index (= GSV for k <= 1; homological value for k >= 2)\n"
    "  report     full index report\n"
    "  conserve   conservation-of-number harness over v + eps*w\n";

struct Options {
    std::string command;
    std::string input;
    bool json = false;
    bool trace = false;
    bool all = false;
    long max_spairs = -1;
    std::vector<Rat> eps_override;
};

inline bool parse_args(const std::vector<std::string>& args, Options& opt, std::string& error) {
    std::size_t positional = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            opt.json = true;
        } else if (a == "--trace") {
            opt.trace = true;
        } else if (a == "--all") {
            opt.all = true;
        } else if (a == "--max-spairs") {
            if (i + 1 >= args.size()) {
                error = "--max-spairs needs a value";
                return false;
            }
            try {
                opt.max_spairs = std::stol(args[++i]);
            } catch (...) {
                error = "--max-spairs needs an integer";
                return false;
            }
        } else if (a == "--eps") {
            if (i + 1 >= args.size()) {
                error = "--eps needs a comma-separated list";
                return false;
            }
            std::stringstream ss(args[++i]);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) opt.eps_override.push_back(rat_from_string(tok));
        } else if (!a.empty() && a[0] == '-') {
            error = "unknown flag '" + a + "'";
            return false;
        } else if (positional == 0) {
            opt.command = a;
            ++positional;
        } else if (positional == 1) {
            opt.input = a;
            ++positional;
        } else {
            error = "unexpected argument '" + a + "'";
            return false;
        }
    }
    if (opt.command.empty()) {
        error = "missing command";
        return false;
    }
    if (opt.input.empty()) {
        error = "missing input path";
        return false;
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string report_text(const IndexReport& r) {
    std::ostringstream out;
    auto line = [&](const char* key, const std::string& v) { out << key << " = " << v << "\n"; };
    if (r.ind_ph) line("ind_ph", std::to_string(*r.ind_ph));
    if (r.ind_hom) line("ind_hom", std::to_string(*r.ind_hom));
    if (r.ind_gsv) line("ind_gsv", std::to_string(*r.ind_gsv));
    if (r.ind_sch) line("ind_sch", std::to_string(*r.ind_sch));
    if (r.ind_virtual) line("ind_virtual", std::to_string(*r.ind_virtual));
    if (r.mu) line("mu", std::to_string(*r.mu));
    if (!r.homology.empty()) {
        std::string h;
        for (std::size_t i = 0; i < r.homology.size(); ++i)
            h += (i ? " " : "") + std::to_string(r.homology[i]);
        line("h", h);
    }
    line("n", std::to_string(r.dim));
    line("N", std::to_string(r.ambient_dim));
    line("k", std::to_string(r.codim));
    line("gsv_equality_asserted", r.gsv_equality_asserted ? "true" : "false");
    return out.str();
}

inline int run_one(const Options& opt, const std::string& path, std::ostream& out,
                   std::ostream& err) {
    ComputeControl ctl;
    ctl.max_spairs = opt.max_spairs;
    if (opt.trace) ctl.trace_out = &err;

    const GermInput in = parse_germ_file(read_file(path));
    const GermVariety V = in.variety();

    if (opt.command == "milnor") {
        if (V.codim() != 1) {
            err << "error: milnor requires exactly one defining equation (k = 1)\n";
            return kExitMathError;
        }
        const unsigned long long mu = milnor_number(V.defining()[0], &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("mu", mu);
            out << o.str() << "\n";
        } else {
            out << "mu = " << mu << "\n";
        }
        return kExitOk;
    }

    if (opt.command == "ph-index") {
        const unsigned long long ind = poincare_hopf_index(in.field(), &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("ind_ph", ind);
            out << o.str() << "\n";
        } else {
            out << "ind_ph = " << ind << "\n";
        }
        return kExitOk;
    }

    if (opt.command == "tangent") {
        const bool t = is_tangent(in.field(), V, &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("tangent", t);
            out << o.str() << "\n";
        } else {
            out << (t ? "tangent" : "v(f) not in (f)") << "\n";
        }
        return t ? kExitOk : kExitMathError;
    }

    if (opt.command == "hom-index") {
        HomologyResult hom;
        const long long ind = homological_index(in.field(), V, &ctl, &hom);
        if (opt.json) {
            detail::JsonObject o;
            o.field("ind_hom", ind);
            o.raw_field("h", detail::json_int_array(hom.dims));
            out << o.str() << "\n";
        } else {
            out << "ind_hom = " << ind << "\n";
        }
        return kExitOk;
    }

    if (opt.command == "gsv") {
        const long long ind = gsv_index(in.field(), V, &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("ind_gsv", ind);
            out << o.str() << "\n";
        } else {
            out << "ind_gsv = " << ind << "\n";
        }
        return kExitOk;
    }

    if (opt.command == "schwartz") {
        const long long ind = schwartz_index(in.field(), V, &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("ind_sch", ind);
            out << o.str() << "\n";
        } else {
            out << "ind_sch = " << ind << "\n";
        }
        return kExitOk;
    }

    if (opt.command == "virtual") {
        const long long ind = virtual_index(in.field(), V, &ctl);
        if (opt.json) {
            detail::JsonObject o;
            o.field("ind_virtual", ind);
            o.field("gsv_equality_asserted", V.codim() <= 1);
            out << o.str() << "\n";
        } else {
            out << "ind_virtual = " << ind << "\n";
            if (V.codim() >= 2)
                out << "note: reported as homological; GSV/virtual equality not asserted for k >= 2\n";
        }
        return kExitOk;
    }

    if (opt.command == "report") {
        const IndexReport r = full_report(in.field(), V, &ctl);
        out << (opt.json ? emit_json(r) + "\n" : report_text(r));
        return kExitOk;
    }

    if (opt.command == "conserve") {
        std::vector<Rat> eps = opt.eps_override;
        if (eps.empty()) eps = in.epsilons;
        if (eps.empty())
            eps = {Rat(1, 5), Rat(-1, 5), Rat(1, 3), Rat(-1, 3), Rat(1)};
        const ConservationReport rep =
            conservation_check(in.field(), in.perturbation(), V, eps, &ctl);
        if (opt.json) {
            out << emit_json(rep) << "\n";
        } else {
            out << "base ind_hom = " << rep.base_index << "\n";
            for (const auto& c : rep.cases) {
                out << "eps = " << rat_to_string(c.epsilon) << ": ";
                if (c.conserved)
                    out << "conserved (ind_hom = " << *c.index << ")\n";
                else
                    out << c.note << "\n";
            }
        }
        return kExitOk;
    }

    err << "error: unknown command '" << opt.command << "'\n" << kUsage;
    return kExitParseError;
}

} // namespace cli

/// Dispatches one CLI invocation; returns the process exit code.
/// 0 success, 1 mathematical error, 2 parse error, 3 budget exceeded.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    cli::Options opt;
    std::string arg_error;
    if (!cli::parse_args(args, opt, arg_error)) {
        err << "error: " << arg_error << "\n" << cli::kUsage;
        return cli::kExitParseError;
    }

    try {
        if (opt.all) {
            if (opt.command != "report") {
                err << "error: --all is only supported with 'report'\n";
                return cli::kExitParseError;
            }
            std::vector<std::string> files;
            for (const auto& entry : std::filesystem::directory_iterator(opt.input))
                if (entry.path().extension() == ".germ") files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());
            int worst = cli::kExitOk;
            for (const auto& f : files) {
                try {
                    if (opt.json) {
                        // one JSON object per line, prefixed with the file
                        cli::Options one = opt;
                        std::ostringstream buf;
                        const int rc = cli::run_one(one, f, buf, err);
                        std::string body = buf.str();
                        if (!body.empty() && body.back() == '\n') body.pop_back();
                        out << "{\"file\":\"" << detail::json_escape(f) << "\",\"report\":"
                            << (body.empty() ? "null" : body) << "}\n";
                        worst = std::max(worst, rc);
                    } else {
                        out << "== " << f << "\n";
                        worst = std::max(worst, cli::run_one(opt, f, out, err));
                    }
                } catch (const Error& e) {
                    err << f << ": error: " << e.what() << "\n";
                    worst = std::max(worst, cli::kExitMathError);
                }
            }
            return worst;
        }
        return cli::run_one(opt, opt.input, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return cli::kExitParseError;
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return cli::kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli::kExitMathError;
    }
}

} // namespace vfindex
