// Command line front end.  Every number that leaves this program is an
// exact dyadic string, and every JSON artifact is accepted back by the
// readers in json_io (eval --marking takes the files gen and construct
// emit).  Exit codes: 0 success, 1 a verification or hypothesis failed,
// 2 bad usage or unparseable input, 3 a resource cap stopped the run.

#include "thf/dyadic.hpp"
#include "thf/errors.hpp"
#include "thf/families.hpp"
#include "thf/girth.hpp"
#include "thf/json_io.hpp"
#include "thf/marking.hpp"
#include "thf/normal_form.hpp"
#include "thf/plmap.hpp"
#include "thf/witness.hpp"
#include "thf/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace thf;

long long parse_int(const std::string& text) {
    long long v = 0;
    const char* b = text.data();
    const char* e = b + text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw ParseError("bad integer: '" + text + "'");
    return v;
}

// "LO..HI" or a single value; LO <= HI required.
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = static_cast<int>(parse_int(text));
        return {v, v};
    }
    int lo = static_cast<int>(parse_int(text.substr(0, dots)));
    int hi = static_cast<int>(parse_int(text.substr(dots + 2)));
    if (lo > hi) throw ParseError("empty range '" + text + "'");
    return {lo, hi};
}

ordered_json interval_list_json(const std::vector<std::pair<Dyadic, Dyadic>>& ivs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : ivs) arr.push_back(ordered_json::array({a.str(), b.str()}));
    return arr;
}

std::string interval_list_str(const std::vector<std::pair<Dyadic, Dyadic>>& ivs) {
    if (ivs.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (i) out += ", ";
        out += "[" + ivs[i].first.str() + ", " + ivs[i].second.str() + "]";
    }
    return out;
}

ordered_json map_report(const PLMap& f) {
    ordered_json j = plmap_to_json(f);
    j["support"] = interval_list_json(f.support());
    j["is_identity"] = f.is_identity();
    j["slope_exponent_at_0"] = f.slope_exponent_at(PLMap::Endpoint::Zero);
    j["slope_exponent_at_1"] = f.slope_exponent_at(PLMap::Endpoint::One);
    return j;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void csv_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_field(fields[i]);
    }
    std::cout << '\n';
}

// --marking takes a JSON file (an array of maps, or an object carrying a
// "marking" key as construct writes, or a single map object), "-" for the
// same JSON on stdin, or one of the literal forms std:K | xn:N | small:N
// | power:N ("std" alone means std:2).
Marking load_marking(const std::string& ref) {
    auto colon = ref.find(':');
    std::string head = ref.substr(0, colon);
    if (ref == "std") return Marking::standard(2);
    if (colon != std::string::npos &&
        (head == "std" || head == "xn" || head == "small" || head == "power")) {
        int idx = static_cast<int>(parse_int(ref.substr(colon + 1)));
        if (head == "std") return Marking::standard(idx);
        return family_by_name(head).at(idx);
    }
    std::stringstream ss;
    if (ref == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(ref);
        if (!in) throw ParseError("cannot open marking file '" + ref + "'");
        ss << in.rdbuf();
    }
    nlohmann::json j = parse_json(ss.str());
    if (j.is_object() && j.contains("marking")) return marking_from_json(j["marking"]);
    if (j.is_object() && j.contains("breakpoints")) return Marking({plmap_from_json(j)});
    return marking_from_json(j);
}

// ---- gen ----------------------------------------------------------------

struct GenOpts {
    std::string kind;
    int index = 0;
    std::string format = "json";
};

void emit_marking(const Marking& m, const std::string& format) {
    if (format == "json") {
        emit_json(marking_to_json(m));
    } else if (format == "text") {
        for (std::size_t g = 0; g < m.rank(); ++g) {
            std::cout << "g" << g << ": " << m.image(static_cast<int>(g)).str()
                      << "  support " << interval_list_str(m.image(static_cast<int>(g)).support())
                      << '\n';
        }
    } else {
        csv_row({"generator", "x", "y"});
        for (std::size_t g = 0; g < m.rank(); ++g)
            for (const PLPoint& p : m.image(static_cast<int>(g)).breakpoints())
                csv_row({std::to_string(g), p.x.str(), p.y.str()});
    }
}

int run_gen(const GenOpts& o) {
    if (o.kind == "x") {
        if (o.index < 0) throw ParseError("generator index must be >= 0");
        PLMap f = generator(o.index);
        if (o.format == "json") {
            emit_json(map_report(f));
        } else if (o.format == "text") {
            std::cout << "x_" << o.index << ": " << f.str() << '\n'
                      << "support: " << interval_list_str(f.support()) << '\n';
        } else {
            csv_row({"x", "y"});
            for (const PLPoint& p : f.breakpoints()) csv_row({p.x.str(), p.y.str()});
        }
        return 0;
    }
    if (o.kind == "std") {
        if (o.index < 1) throw ParseError("rank must be >= 1");
        emit_marking(Marking::standard(o.index), o.format);
        return 0;
    }
    if (o.index < 1) throw ParseError("family members start at n = 1");
    emit_marking(family_by_name(o.kind).at(o.index), o.format);
    return 0;
}

// ---- eval / support / nf ------------------------------------------------

struct EvalOpts {
    std::string marking = "std";
    std::string word;
    std::string format = "json";
};

int run_eval(const EvalOpts& o) {
    Marking m = load_marking(o.marking);
    Word w = Word::parse(o.word);
    PLMap f = m.evaluate(w);
    if (o.format == "json") {
        ordered_json j;
        j["word"] = w.str();
        j["is_identity"] = f.is_identity();
        j["normal_form"] = normal_form_of(f).str();
        ordered_json mr = map_report(f);
        j["breakpoints"] = mr["breakpoints"];
        j["support"] = mr["support"];
        j["slope_exponent_at_0"] = mr["slope_exponent_at_0"];
        j["slope_exponent_at_1"] = mr["slope_exponent_at_1"];
        emit_json(j);
    } else if (o.format == "text") {
        std::cout << "word: " << w.str() << '\n'
                  << "is_identity: " << (f.is_identity() ? "true" : "false") << '\n'
                  << "normal_form: " << normal_form_of(f).str() << '\n'
                  << "breakpoints: " << f.str() << '\n'
                  << "support: " << interval_list_str(f.support()) << '\n';
    } else {
        csv_row({"x", "y"});
        for (const PLPoint& p : f.breakpoints()) csv_row({p.x.str(), p.y.str()});
    }
    return 0;
}

int run_support(const EvalOpts& o) {
    Marking m = load_marking(o.marking);
    Word w = Word::parse(o.word);
    PLMap f = m.evaluate(w);
    if (o.format == "json") {
        ordered_json j;
        j["word"] = w.str();
        j["is_identity"] = f.is_identity();
        j["support"] = interval_list_json(f.support());
        emit_json(j);
    } else if (o.format == "csv") {
        csv_row({"lo", "hi"});
        for (const auto& [a, b] : f.support()) csv_row({a.str(), b.str()});
    } else {
        std::cout << interval_list_str(f.support()) << '\n';
    }
    return 0;
}

struct NfOpts {
    std::string word;
    std::string format = "text";
};

int run_nf(const NfOpts& o) {
    Word w = Word::parse(o.word);
    NormalForm nf = word_to_normal_form(w);
    Word spelled = normal_form_to_word(nf);
    PLMap direct = w.empty() ? PLMap() : Marking::standard(w.max_generator() + 1).evaluate(w);
    THF_CHECK(evaluate_normal_form(nf) == direct);
    if (o.format == "json") {
        ordered_json j;
        j["word"] = w.str();
        j["normal_form"] = nf.str();
        j["weight"] = nf.weight();
        j["spelled"] = spelled.str();
        j["is_identity"] = nf.is_identity();
        emit_json(j);
    } else if (o.format == "csv") {
        csv_row({"word", "normal_form", "weight", "spelled"});
        csv_row({w.str(), nf.str(), std::to_string(nf.weight()), spelled.str()});
    } else {
        std::cout << "normal_form: " << nf.str() << '\n'
                  << "weight: " << nf.weight() << '\n'
                  << "spelled: " << spelled.str() << '\n';
    }
    return 0;
}

// ---- girth --------------------------------------------------------------

struct GirthOpts {
    std::string marking;
    int max = 0;
    std::string format = "text";
};

int run_girth(const GirthOpts& o) {
    Marking m = load_marking(o.marking);
    std::optional<Word> r = shortest_relator(m, o.max);
    if (o.format == "json") {
        ordered_json j;
        j["max"] = o.max;
        j["found"] = r.has_value();
        j["relator"] = r ? ordered_json(r->str()) : ordered_json(nullptr);
        j["length"] = r ? ordered_json(r->length()) : ordered_json(nullptr);
        if (!r) j["girth_exceeds"] = o.max;
        emit_json(j);
    } else if (o.format == "csv") {
        csv_row({"max", "found", "relator", "length"});
        csv_row({std::to_string(o.max), r ? "yes" : "no", r ? r->str() : "",
                 r ? std::to_string(r->length()) : ""});
    } else {
        if (r)
            std::cout << "shortest relator: " << r->str() << " (length " << r->length() << ")\n";
        else
            std::cout << "no relator of length <= " << o.max << "; girth > " << o.max << '\n';
    }
    return 0;
}

// ---- construct ----------------------------------------------------------

struct ConstructOpts {
    std::vector<std::string> words;
    std::string epsilon = "1/8";
    int rank = 0;            // 0 = inferred from the words
    std::int64_t depth = 0;  // 0 = default (longest word)
    int l = 3;
    int m = 0;               // girth-set mode when set
    std::string mode = "targeted";
    std::uint64_t cap_words = WitnessCaps{}.max_words;
    std::uint64_t cap_breakpoints = WitnessCaps{}.max_breakpoints;
    std::string format = "json";
};

int run_construct(const ConstructOpts& o) {
    WitnessCaps caps{static_cast<std::size_t>(o.cap_words),
                     static_cast<std::size_t>(o.cap_breakpoints)};
    if (o.m > 0) {
        GirthMode gm = o.mode == "faithful" ? GirthMode::Faithful : GirthMode::Targeted;
        GirthResult gr = girth_marking(o.l, o.m, gm, caps, true);
        bool ok = !gr.relator.has_value();
        if (o.format == "json") {
            ordered_json j;
            j["mode"] = "girth-set";
            j["l"] = o.l;
            j["m"] = o.m;
            j["construction"] = o.mode;
            j["corpus_words"] = gr.corpus.size();
            j["epsilon"] = gr.epsilon.str();
            j["depth"] = gr.depth;
            j["certified"] = gr.certified;
            j["relator"] = gr.relator ? ordered_json(gr.relator->str()) : ordered_json(nullptr);
            if (ok) j["girth_exceeds"] = o.m;
            j["marking"] = marking_to_json(gr.marking);
            emit_json(j);
        } else if (o.format == "csv") {
            csv_row({"l", "m", "construction", "corpus_words", "certified", "verdict", "relator"});
            csv_row({std::to_string(o.l), std::to_string(o.m), o.mode,
                     std::to_string(gr.corpus.size()), gr.certified ? "yes" : "no",
                     ok ? "PASS" : "FAIL", gr.relator ? gr.relator->str() : ""});
        } else {
            std::cout << "tuple of " << o.l << " maps, mode " << o.mode << ", corpus "
                      << gr.corpus.size() << " words, epsilon " << gr.epsilon.str() << '\n';
            if (ok)
                std::cout << "PASS: no relator of length <= " << o.m << '\n';
            else
                std::cout << "FAIL: relator " << gr.relator->str() << '\n';
        }
        return ok ? 0 : 1;
    }
    if (o.words.empty()) throw ParseError("construct needs --word (or --m for a girth set)");
    std::vector<Word> words;
    words.reserve(o.words.size());
    int maxgen = -1;
    for (const std::string& s : o.words) {
        words.push_back(Word::parse(s));
        maxgen = std::max(maxgen, words.back().max_generator());
    }
    int rank = o.rank > 0 ? o.rank : maxgen + 1;
    Dyadic eps = Dyadic::parse(o.epsilon);
    std::optional<std::int64_t> depth;
    if (o.depth > 0) depth = o.depth;
    WitnessSet ws = construct_witnesses(words, eps, rank, depth, caps);
    if (o.format == "json") {
        ordered_json j;
        j["mode"] = "witness";
        j["epsilon"] = eps.str();
        j["epsilon_hat"] = ws.epsilon_hat.str();
        j["depth"] = ws.depth;
        ordered_json wl = ordered_json::array();
        for (const Word& w : words) wl.push_back(w.str());
        j["words"] = wl;
        ordered_json cert = ordered_json::array();
        for (const WitnessPoint& p : ws.points) {
            ordered_json e;
            e["word"] = p.word.str();
            e["base"] = p.base.str();
            e["moved"] = p.moved.str();
            cert.push_back(e);
        }
        j["certificate"] = cert;
        j["marking"] = marking_to_json(ws.marking());
        emit_json(j);
    } else if (o.format == "csv") {
        csv_row({"word", "base", "moved"});
        for (const WitnessPoint& p : ws.points) csv_row({p.word.str(), p.base.str(), p.moved.str()});
    } else {
        std::cout << "epsilon " << eps.str() << " (snapped to " << ws.epsilon_hat.str()
                  << "), depth " << ws.depth << ", rank " << rank << '\n';
        for (const WitnessPoint& p : ws.points)
            std::cout << p.word.str() << ": moves " << p.base.str() << " -> " << p.moved.str()
                      << '\n';
    }
    return 0;
}

// ---- converge -----------------------------------------------------------

struct ConvergeOpts {
    std::string family;
    int R = 0;
    std::string range;
    int jobs = 1;
    std::string format = "csv";
};

std::optional<Word> first_difference(const std::vector<Word>& a, const std::vector<Word>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            return a[i];
        } else {
            return b[j];
        }
    }
    if (i < a.size()) return a[i];
    if (j < b.size()) return b[j];
    return std::nullopt;
}

std::string pattern_str(const Stabilization& st) {
    std::string s;
    for (bool t : st.pattern) s += t ? 'T' : 'N';
    return s;
}

int run_converge(const ConvergeOpts& o) {
    auto [lo, hi] = parse_range(o.range);
    if (lo < 1) throw ParseError("window must start at n >= 1");
    MarkingFamily fam = family_by_name(o.family);
    ConvergenceReport rep = verify_limit_convergence(fam, {}, o.R, lo, hi, o.jobs);
    std::vector<Stabilization> stabs;
    stabs.reserve(rep.relators.size());
    for (const RelatorRow& r : rep.relators)
        stabs.push_back(stabilization_check(r.word, fam, lo, hi));

    if (o.format == "json") {
        ordered_json j;
        j["family"] = rep.family;
        j["R"] = rep.R;
        j["n_lo"] = rep.n_lo;
        j["n_hi"] = rep.n_hi;
        ordered_json rl = ordered_json::array();
        for (std::size_t i = 0; i < rep.relators.size(); ++i) {
            const RelatorRow& r = rep.relators[i];
            ordered_json e;
            e["label"] = r.label;
            e["word"] = r.word.str();
            e["predicted_threshold"] =
                r.predicted_threshold ? ordered_json(*r.predicted_threshold) : ordered_json(nullptr);
            e["observed_stable_from"] =
                r.observed_stable_from ? ordered_json(*r.observed_stable_from) : ordered_json(nullptr);
            e["sharp"] = r.sharp ? ordered_json(*r.sharp) : ordered_json(nullptr);
            e["pattern"] = pattern_str(stabs[i]);
            e["pass"] = r.pass;
            rl.push_back(e);
        }
        j["relators"] = rl;
        ordered_json bl = ordered_json::array();
        for (const BallRow& b : rep.balls) {
            ordered_json e;
            e["n"] = b.n;
            ordered_json ws = ordered_json::array();
            for (const Word& w : b.ball) ws.push_back(w.str());
            e["classes"] = ws;
            bl.push_back(e);
        }
        j["balls"] = bl;
        j["stable_tail_start"] = rep.stable_tail_start;
        ordered_json un = ordered_json::array();
        for (const Word& w : rep.unstable) un.push_back(w.str());
        j["unstable"] = un;
        j["classes_total"] = rep.classes.size();
        ordered_json fl = ordered_json::array();
        for (const ClassRow& c : rep.classes) {
            if (c.stab.flips.empty()) continue;
            ordered_json e;
            e["rep"] = c.rep.str();
            e["flips"] = c.stab.flips;
            fl.push_back(e);
        }
        j["flipped_classes"] = fl;
        j["stabilized_radius"] = rep.stabilized_radius;
        j["all_pass"] = rep.all_pass;
        emit_json(j);
    } else if (o.format == "csv") {
        csv_row({"check", "n", "label", "result", "witness"});
        for (std::size_t i = 0; i < rep.relators.size(); ++i) {
            const RelatorRow& r = rep.relators[i];
            for (int n = lo; n <= hi; ++n) {
                bool triv = stabs[i].pattern[static_cast<std::size_t>(n - lo)];
                bool expect = r.predicted_threshold && n >= *r.predicted_threshold;
                bool fail = expect && !triv;
                std::string wit = triv ? "trivial" : "nontrivial";
                if (fail) wit += " (" + r.word.str() + ")";
                csv_row({"relator", std::to_string(n), r.label, fail ? "FAIL" : "PASS", wit});
            }
        }
        for (const BallRow& b : rep.balls) {
            bool matches = b.ball == rep.balls.back().ball;
            std::optional<Word> d =
                matches ? std::nullopt : first_difference(b.ball, rep.balls.back().ball);
            csv_row({"ball", std::to_string(b.n), "classes=" + std::to_string(b.ball.size()),
                     matches ? "PASS" : "CHURN", d ? d->str() : ""});
        }
        for (const ClassRow& c : rep.classes) {
            if (c.stab.flips.empty()) continue;
            std::string flips;
            for (std::size_t k = 0; k < c.stab.flips.size(); ++k) {
                if (k) flips += ';';
                flips += std::to_string(c.stab.flips[k]);
            }
            csv_row({"class", "", c.rep.str(), c.stab.flips.size() <= 1 ? "PASS" : "FLIPS", flips});
        }
        csv_row({"summary", "", "relator_rows", rep.all_pass ? "PASS" : "FAIL", ""});
        csv_row({"summary", "", "stable_tail_start", "", std::to_string(rep.stable_tail_start)});
        csv_row({"summary", "", "stabilized_radius", "", std::to_string(rep.stabilized_radius)});
        csv_row({"summary", "", "unstable_classes", "", std::to_string(rep.unstable.size())});
    } else {
        std::cout << "family " << rep.family << "  R=" << rep.R << "  n=" << lo << ".." << hi
                  << '\n';
        std::cout << "relators:\n";
        for (std::size_t i = 0; i < rep.relators.size(); ++i) {
            const RelatorRow& r = rep.relators[i];
            std::cout << "  " << r.label << "  [" << r.word.str() << "]  predicted ";
            if (r.predicted_threshold) std::cout << *r.predicted_threshold;
            else std::cout << "-";
            std::cout << "  observed ";
            if (r.observed_stable_from) std::cout << *r.observed_stable_from;
            else std::cout << "-";
            std::cout << "  pattern " << pattern_str(stabs[i]) << "  "
                      << (r.pass ? "PASS" : "FAIL") << '\n';
        }
        std::cout << "balls:\n";
        for (const BallRow& b : rep.balls)
            std::cout << "  n=" << b.n << ": " << b.ball.size() << " classes"
                      << (b.ball == rep.balls.back().ball ? " (= final)" : "") << '\n';
        std::cout << "stable tail from n=" << rep.stable_tail_start << ", stabilized radius R*="
                  << rep.stabilized_radius << ", unstable classes " << rep.unstable.size() << '\n';
        std::cout << (rep.all_pass ? "PASS" : "FAIL") << '\n';
    }
    return rep.all_pass ? 0 : 1;
}

// ---- distance -----------------------------------------------------------

struct DistanceOpts {
    std::string marking;
    std::string marking2;
    std::string family;
    std::string range;
    int R = 0;
    std::string format = "csv";
};

std::string distance_str(const BallComparison& bc, int R) {
    if (bc.separating) return "e^-" + std::to_string(bc.agree_radius);
    return "<= e^-" + std::to_string(R);
}

void emit_comparison(const std::string& label, const BallComparison& bc, int R,
                     const std::string& format, bool header) {
    if (format == "json") {
        ordered_json j;
        j["pair"] = label;
        j["R"] = R;
        j["agree_radius"] = bc.agree_radius;
        j["distance"] = distance_str(bc, R);
        j["separating"] = bc.separating ? ordered_json(bc.separating->str()) : ordered_json(nullptr);
        emit_json(j);
    } else if (format == "csv") {
        if (header) csv_row({"n", "R_star", "distance", "witness"});
        csv_row({label, std::to_string(bc.agree_radius), distance_str(bc, R),
                 bc.separating ? bc.separating->str() : ""});
    } else {
        std::cout << label << ": agree through radius " << bc.agree_radius << ", distance "
                  << distance_str(bc, R);
        if (bc.separating) std::cout << ", separated by " << bc.separating->str();
        std::cout << '\n';
    }
}

int run_distance(const DistanceOpts& o) {
    if (!o.family.empty()) {
        if (o.range.empty()) throw ParseError("--family needs --n LO..HI");
        auto [lo, hi] = parse_range(o.range);
        if (lo < 1) throw ParseError("family members start at n = 1");
        MarkingFamily fam = family_by_name(o.family);
        if (o.format == "json") {
            ordered_json arr = ordered_json::array();
            for (int n = lo; n <= hi; ++n) {
                BallComparison bc = marked_distance_bound(fam.at(n), fam.at(n + 1), o.R);
                ordered_json e;
                e["n"] = n;
                e["agree_radius"] = bc.agree_radius;
                e["distance"] = distance_str(bc, o.R);
                e["separating"] =
                    bc.separating ? ordered_json(bc.separating->str()) : ordered_json(nullptr);
                arr.push_back(e);
            }
            emit_json(arr);
        } else {
            bool header = o.format == "csv";
            for (int n = lo; n <= hi; ++n) {
                BallComparison bc = marked_distance_bound(fam.at(n), fam.at(n + 1), o.R);
                emit_comparison(std::to_string(n), bc, o.R, o.format, header && n == lo);
            }
        }
        return 0;
    }
    if (o.marking.empty()) throw ParseError("distance needs --marking or --family");
    Marking a = load_marking(o.marking);
    if (!o.marking2.empty()) {
        BallComparison bc = marked_distance_bound(a, load_marking(o.marking2), o.R);
        emit_comparison("pair", bc, o.R, o.format, true);
    } else {
        BallComparison bc = distance_to_free(a, o.R);
        emit_comparison("free", bc, o.R, o.format, true);
    }
    return 0;
}

// ---- fact ---------------------------------------------------------------

struct FactOpts {
    int max = 0;
    std::string format = "text";
};

int run_fact(const FactOpts& o) {
    bool all = true;
    std::vector<FactCheck> rows;
    rows.reserve(static_cast<std::size_t>(o.max));
    for (int m = 1; m <= o.max; ++m) {
        rows.push_back(verify_substitution_fact(m));
        all = all && rows.back().holds;
    }
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int m = 1; m <= o.max; ++m) {
            const FactCheck& fc = rows[static_cast<std::size_t>(m - 1)];
            ordered_json e;
            e["m"] = m;
            e["words_checked"] = fc.words_checked;
            e["holds"] = fc.holds;
            e["counterexample"] =
                fc.counterexample ? ordered_json(fc.counterexample->str()) : ordered_json(nullptr);
            arr.push_back(e);
        }
        emit_json(arr);
    } else if (o.format == "csv") {
        csv_row({"m", "words_checked", "result", "counterexample"});
        for (int m = 1; m <= o.max; ++m) {
            const FactCheck& fc = rows[static_cast<std::size_t>(m - 1)];
            csv_row({std::to_string(m), std::to_string(fc.words_checked),
                     fc.holds ? "PASS" : "FAIL",
                     fc.counterexample ? fc.counterexample->str() : ""});
        }
    } else {
        for (int m = 1; m <= o.max; ++m) {
            const FactCheck& fc = rows[static_cast<std::size_t>(m - 1)];
            std::cout << "m=" << m << ": " << (fc.holds ? "PASS" : "FAIL") << " ("
                      << fc.words_checked << " words";
            if (fc.counterexample) std::cout << ", killed " << fc.counterexample->str();
            std::cout << ")\n";
        }
    }
    return all ? 0 : 1;
}

void add_format(CLI::App* sub, std::string& slot) {
    sub->add_option("--format", slot, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact piecewise-linear realizations of Thompson's group F"};
    app.require_subcommand(1);

    GenOpts go;
    CLI::App* gen = app.add_subcommand("gen", "Emit a generator or a marking");
    gen->add_option("kind", go.kind, "x | std | xn | small | power")
        ->required()
        ->check(CLI::IsMember({"x", "std", "xn", "small", "power"}));
    gen->add_option("index", go.index, "generator index, rank, or family member")->required();
    add_format(gen, go.format);

    EvalOpts eo;
    CLI::App* ev = app.add_subcommand("eval", "Evaluate a word against a marking");
    ev->add_option("--marking", eo.marking, "JSON file, or std:K | xn:N | small:N | power:N");
    ev->add_option("--word", eo.word, "word over a..z, uppercase = inverse")->required();
    add_format(ev, eo.format);

    EvalOpts so;
    so.format = "text";
    CLI::App* sup = app.add_subcommand("support", "Support of a word under a marking");
    sup->add_option("--marking", so.marking, "JSON file or literal form");
    sup->add_option("--word", so.word, "word to evaluate")->required();
    add_format(sup, so.format);

    NfOpts no;
    CLI::App* nf = app.add_subcommand("nf", "Normal form of a word");
    nf->add_option("--word", no.word, "word over a..z")->required();
    add_format(nf, no.format);

    GirthOpts gro;
    CLI::App* gi = app.add_subcommand("girth", "Shortest relator of a marking");
    gi->add_option("--marking", gro.marking, "JSON file or literal form")->required();
    gi->add_option("--max", gro.max, "search relators up to this length")
        ->required()
        ->check(CLI::Range(1, 32));
    add_format(gi, gro.format);

    ConstructOpts co;
    CLI::App* cs = app.add_subcommand("construct",
                                      "Build witness maps for words, or a certified girth tuple");
    CLI::Option* cw = cs->add_option("--word", co.words, "word to witness (repeatable)");
    cs->add_option("--epsilon", co.epsilon, "support bound, dyadic in (0, 1/2)");
    cs->add_option("--rank", co.rank, "alphabet size (default: inferred)")->check(CLI::Range(1, 26));
    cs->add_option("--depth", co.depth, "translation depth (default: longest word)")
        ->check(CLI::PositiveNumber);
    CLI::Option* cm =
        cs->add_option("--m", co.m, "girth-set mode: certify no relator of length <= m")
            ->check(CLI::Range(1, 6));
    cs->add_option("--l", co.l, "girth-set mode: tuple size")->check(CLI::Range(3, 12));
    cs->add_option("--mode", co.mode, "faithful | targeted")
        ->check(CLI::IsMember({"faithful", "targeted"}));
    cs->add_option("--cap-words", co.cap_words, "abort past this many corpus words");
    cs->add_option("--cap-breakpoints", co.cap_breakpoints, "abort past this many breakpoints");
    cm->excludes(cw);
    add_format(cs, co.format);

    ConvergeOpts vo;
    CLI::App* cv = app.add_subcommand("converge", "Family convergence report");
    cv->add_option("--family", vo.family, "xn | small | power")
        ->required()
        ->check(CLI::IsMember({"xn", "small", "power"}));
    cv->add_option("--R", vo.R, "relation-ball radius")->required()->check(CLI::Range(1, 12));
    cv->add_option("--n", vo.range, "window LO..HI")->required();
    cv->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::Range(1, 64));
    add_format(cv, vo.format);

    DistanceOpts dobj;
    CLI::App* di = app.add_subcommand("distance", "Marked-ball distance bounds");
    di->add_option("--marking", dobj.marking, "first marking");
    di->add_option("--marking2", dobj.marking2, "second marking (default: the free pattern)");
    di->add_option("--family", dobj.family, "scan consecutive members of xn | small | power")
        ->check(CLI::IsMember({"xn", "small", "power"}));
    di->add_option("--n", dobj.range, "scan window LO..HI (pairs n, n+1)");
    di->add_option("--R", dobj.R, "comparison radius")->required()->check(CLI::Range(1, 12));
    add_format(di, dobj.format);

    FactOpts fo;
    CLI::App* fa = app.add_subcommand("fact", "Check the substitution fact for m = 1..max");
    fa->add_option("--max", fo.max, "largest m to check")->required()->check(CLI::Range(1, 8));
    add_format(fa, fo.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(go);
        if (ev->parsed()) return run_eval(eo);
        if (sup->parsed()) return run_support(so);
        if (nf->parsed()) return run_nf(no);
        if (gi->parsed()) return run_girth(gro);
        if (cs->parsed()) return run_construct(co);
        if (cv->parsed()) return run_converge(vo);
        if (di->parsed()) return run_distance(dobj);
        if (fa->parsed()) return run_fact(fo);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const PoolExhausted& e) {
        std::cerr << "pool exhausted: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failed: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
