#include "beq/cumulants.hpp"
#include "beq/definetti.hpp"
#include "beq/haar.hpp"
#include "beq/partition.hpp"
#include "beq/poset.hpp"
#include "beq/representations.hpp"
#include "beq/verify.hpp"
#include "beq/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace beq;
using nlohmann::json;

namespace {

constexpr int kMaxK = 6;
constexpr int kMaxN = 8;

std::size_t max_cells() {
    if (const char* env = std::getenv("BW_MAX_CELLS")) return std::strtoull(env, nullptr, 10);
    return 65536;
}

json partition_json(const SetPartition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    return blocks;
}

SetPartition partition_from_json(const json& j, int k) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : j) blocks.push_back(block.get<std::vector<int>>());
    return SetPartition(k, std::move(blocks));
}

json rat_json(const Rat& r) { return rat_to_string(r); }

json scalar_json(const ExactScalar& s) {
    if (s.is_rational()) return rat_to_string(s.rational_part());
    return json{{"rat", rat_to_string(s.rational_part())},
                {"rad", rat_to_string(s.radical_part())},
                {"sqrt", s.radicand()}};
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix_csv(const ExactMatrix& m, const std::vector<SetPartition>& labels) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::cout << labels[r].str();
        for (std::size_t c = 0; c < m.cols(); ++c) std::cout << "," << m.at(r, c).str();
        std::cout << "\n";
    }
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_caps(int k, int n) {
    if (k < 1 || k > kMaxK) throw UsageError("k must be in [1, " + std::to_string(kMaxK) + "]");
    if (n < 1 || n > kMaxN) throw UsageError("n must be in [1, " + std::to_string(kMaxN) + "]");
    std::size_t cells = 1;
    for (int m = 0; m < k; ++m) cells *= static_cast<std::size_t>(n);
    if (cells > max_cells())
        throw UsageError("n^k exceeds the cell cap (override with BW_MAX_CELLS)");
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (out.empty()) throw UsageError("empty index list");
    return out;
}

std::map<int, Rat> parse_kappa(const std::string& text) {
    std::map<int, Rat> kappa;
    std::string cur;
    for (char ch : text + ",") {
        if (ch != ',') {
            cur += ch;
            continue;
        }
        auto colon = cur.find(':');
        if (colon == std::string::npos) throw UsageError("kappa entries look like m:value");
        kappa[std::stoi(cur.substr(0, colon))] = rat_from_string(cur.substr(colon + 1));
        cur.clear();
    }
    return kappa;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of Boolean easy quantum semigroups"};
    app.require_subcommand(1);

    std::string category = "s", word, format = "json", kappa_text, moments_text, n_range = "4",
                moments_file, i_text, j_text;
    int k = 2, n = 4, upto = 8, criterion = 0, max_k = 0, max_n = 0, n0 = 1;
    std::uint64_t seed = 2026;
    bool cross_verify = false, all = false, threshold_only = false;

    auto add_cat = [&](CLI::App* cmd) {
        cmd->add_option("--category,-x", category, "category tag: s, o, h, or b");
    };

    auto* c_enum = app.add_subcommand("enumerate", "list the partitions of a category");
    add_cat(c_enum);
    c_enum->add_option("--k", k)->required();

    auto* c_mob = app.add_subcommand("mobius", "Moebius matrix of a partition poset");
    add_cat(c_mob);
    c_mob->add_option("--k", k)->required();

    auto* c_gram = app.add_subcommand("gram", "Gram matrix over the category");
    add_cat(c_gram);
    c_gram->add_option("--k", k)->required();
    c_gram->add_option("--n", n)->required();
    c_gram->add_option("--format", format, "json or csv");

    auto* c_wein = app.add_subcommand("weingarten", "Weingarten matrix (Gram inverse)");
    add_cat(c_wein);
    c_wein->add_option("--k", k)->required();
    c_wein->add_option("--n", n);
    c_wein->add_option("--format", format, "json or csv");
    c_wein->add_flag("--threshold", threshold_only, "report the invertibility threshold only");

    auto* c_proj = app.add_subcommand("projection", "projection entries or the full matrix");
    add_cat(c_proj);
    c_proj->add_option("--k", k)->required();
    c_proj->add_option("--n", n)->required();
    c_proj->add_option("--i", i_text, "row multi-index, comma separated");
    c_proj->add_option("--j", j_text, "column multi-index, comma separated");
    c_proj->add_flag("--verify", cross_verify, "cross-check against the Gram-system oracle");

    auto* c_res = app.add_subcommand("wein-residual", "Weingarten estimate residuals");
    add_cat(c_res);
    c_res->add_option("--k", k)->required();
    c_res->add_option("--n", n)->required();

    auto* c_haar = app.add_subcommand("haar", "Haar value of a generator word");
    add_cat(c_haar);
    c_haar->add_option("--n", n)->required();
    c_haar->add_option("--word", word, "e.g. \"p;11,22;p\"")->required();
    c_haar->add_flag("--verify", cross_verify, "cross-check closed form vs Weingarten path");

    auto* c_rep = app.add_subcommand("rep-check", "verify representation relations");
    add_cat(c_rep);
    c_rep->add_option("--k", k)->required();
    c_rep->add_option("--n", n)->required();

    auto* c_cum = app.add_subcommand("cumulants", "cumulants from a moment sequence");
    add_cat(c_cum);
    c_cum->add_option("--moments", moments_text, "comma-separated rationals m_1,m_2,...")
        ->required();

    auto* c_ber = app.add_subcommand("bernoulli", "moments of the shifted Bernoulli law");
    c_ber->add_option("--mu", kappa_text)->required();
    c_ber->add_option("--var", moments_text)->required();
    c_ber->add_option("--upto", upto);

    auto* c_fin = app.add_subcommand("definetti", "forward invariance residuals per n");
    add_cat(c_fin);
    c_fin->add_option("--kappa", kappa_text, "e.g. 1:1,2:1/2")->required();
    c_fin->add_option("--k", k)->required();
    c_fin->add_option("--n", n_range, "single value or range a..b");
    c_fin->add_option("--n0", n0, "truncation start for the residual sweep");

    auto* c_rec = app.add_subcommand("definetti-recover", "recover cumulants from moment vectors");
    add_cat(c_rec);
    c_rec->add_option("--moments", moments_file, "JSON file with degree-indexed vectors")
        ->required();

    auto* c_ver = app.add_subcommand("verify", "run the verification suite");
    c_ver->add_flag("--all", all);
    c_ver->add_option("--criterion", criterion, "run a single criterion 1..11");
    c_ver->add_option("--max-k", max_k);
    c_ver->add_option("--max-n", max_n);
    c_ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CategoryId x = category_from_name(category);

        if (c_enum->parsed()) {
            check_caps(k, 1);
            json out = json::array();
            for (const auto& p : enumerate_category(x, k)) out.push_back(partition_json(p));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (c_mob->parsed()) {
            check_caps(k, 1);
            PartitionPoset poset = PartitionPoset::category(x, k);
            json labels = json::array(), rows = json::array();
            for (const auto& p : poset.elements()) labels.push_back(partition_json(p));
            for (const auto& p1 : poset.elements()) {
                json row = json::array();
                for (const auto& p2 : poset.elements()) row.push_back(rat_json(poset.mobius(p1, p2)));
                rows.push_back(row);
            }
            std::cout << json{{"elements", labels}, {"mobius", rows}}.dump() << "\n";
            return 0;
        }

        if (c_gram->parsed() || c_wein->parsed() || c_res->parsed()) {
            check_caps(k, n);
            if (c_wein->parsed() && threshold_only) {
                std::cout << json{{"category", category},
                                  {"k", k},
                                  {"threshold", invertibility_threshold(x, k, kMaxN)}}
                                 .dump()
                          << "\n";
                return 0;
            }
            auto elements = enumerate_category(x, k);
            ExactMatrix m;
            if (c_gram->parsed()) {
                m = gram_matrix(x, k, n);
            } else {
                const auto& t = weingarten_table(x, k, n);
                if (c_res->parsed()) {
                    json labels = json::array(), rows = json::array();
                    for (const auto& p : elements) labels.push_back(partition_json(p));
                    for (const auto& p1 : elements) {
                        json row = json::array();
                        for (const auto& p2 : elements)
                            row.push_back(rat_json(weingarten_estimate_residual(t, p1, p2)));
                        rows.push_back(row);
                    }
                    std::cout << json{{"elements", labels}, {"residual", rows}}.dump() << "\n";
                    return 0;
                }
                m = t.wein;
            }
            if (format == "csv") {
                print_matrix_csv(m, elements);
            } else {
                json labels = json::array();
                for (const auto& p : elements) labels.push_back(partition_json(p));
                std::cout << json{{"elements", labels}, {"matrix", matrix_json(m)}}.dump() << "\n";
            }
            return 0;
        }

        if (c_proj->parsed()) {
            check_caps(k, n);
            const auto& t = weingarten_table(x, k, n);
            if (!i_text.empty() != !j_text.empty()) throw UsageError("--i and --j go together");
            if (!i_text.empty()) {
                MultiIndex i(parse_index_list(i_text), n), j(parse_index_list(j_text), n);
                if (i.length() != k || j.length() != k) throw UsageError("index length must be k");
                Rat entry = projection_entry(t, i, j);
                if (cross_verify && entry != projection_oracle(t, i, j)) {
                    std::cerr << "oracle mismatch\n";
                    return 1;
                }
                std::cout << json{{"value", rat_json(entry)}}.dump() << "\n";
                return 0;
            }
            auto H = projection_matrix(t, max_cells());
            json rows = json::array();
            for (const auto& row : H) {
                json r = json::array();
                for (const auto& v : row) r.push_back(rat_json(v));
                rows.push_back(r);
            }
            std::cout << json{{"matrix", rows}}.dump() << "\n";
            return 0;
        }

        if (c_haar->parsed()) {
            GeneratorWord w = parse_word(word, n);
            for (const auto& seg : w.segments) check_caps(std::max<int>(1, seg.size()), n);
            HaarRoute route = x == CategoryId::b ? HaarRoute::weingarten : HaarRoute::closed;
            Rat value = haar_value(x, w, route);
            if (cross_verify && value != haar_value(x, w, HaarRoute::weingarten)) {
                std::cerr << "route mismatch\n";
                return 1;
            }
            std::cout << json{{"value", rat_json(value)}}.dump() << "\n";
            return 0;
        }

        if (c_rep->parsed()) {
            check_caps(k, n);
            json report;
            bool pass = true;
            if (x == CategoryId::s) {
                bool liu = verify_liu_relations(n);
                report["rank1_relations"] = liu;
                pass = pass && liu;
            }
            bool rel = verify_semigroup_relations(x, n, k);
            bool ker = verify_kernel_class_relations(x, n, k);
            report["generator_relations"] = rel;
            report["kernel_class_relations"] = ker;
            pass = pass && rel && ker;
            report["pass"] = pass;
            std::cout << report.dump() << "\n";
            return pass ? 0 : 1;
        }

        if (c_cum->parsed()) {
            std::vector<Rat> moments;
            {
                std::string cur;
                for (char ch : moments_text + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) moments.push_back(rat_from_string(cur));
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
            }
            auto rec = cumulants_from_moments(moments, x);
            json kappa;
            for (const auto& [m, v] : rec.kappa) kappa[std::to_string(m)] = rat_json(v);
            std::cout << json{{"kappa", kappa}, {"violations", rec.violations}}.dump() << "\n";
            return 0;
        }

        if (c_ber->parsed()) {
            BernoulliParams params(rat_from_string(kappa_text), rat_from_string(moments_text));
            json moments = json::array();
            for (int m = 1; m <= upto; ++m) moments.push_back(rat_json(bernoulli_moment(params, m)));
            json out = {{"moments", moments}};
            Rat alpha, beta;
            if (bernoulli_roots(params, alpha, beta)) {
                out["alpha"] = rat_json(alpha);
                out["beta"] = rat_json(beta);
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (c_fin->parsed()) {
            auto [n_lo, n_hi] = parse_range(n_range);
            check_caps(k, n_hi);
            CumulantSpec spec{x, parse_kappa(kappa_text)};
            if (!spec.support_valid()) throw UsageError("kappa support outside the category");
            json table = json::array();
            for (int nn = n_lo; nn <= n_hi; ++nn) {
                json row = {{"n", nn},
                            {"forward_residual", rat_json(forward_invariance_check(spec, k, nn))}};
                std::vector<int> jv(k);
                for (int m = 0; m < k; ++m) jv[m] = std::min(m + 1, nn);
                row["id_residual"] = rat_json(
                    id_cumulant_residual_truncated(x, n0, nn, MultiIndex(jv, nn)));
                table.push_back(row);
            }
            std::cout << table.dump() << "\n";
            return 0;
        }

        if (c_rec->parsed()) {
            std::ifstream in(moments_file);
            if (!in) throw UsageError("cannot open " + moments_file);
            json doc = json::parse(in);
            std::vector<InvariantMomentVector> vecs;
            for (const auto& entry : doc.at("vectors")) {
                InvariantMomentVector v;
                v.x = x;
                v.k = entry.at("k").get<int>();
                v.n = entry.at("n").get<int>();
                for (const auto& item : entry.at("values"))
                    v.by_kernel[partition_from_json(item.at("kernel"), v.k)] =
                        rat_from_string(item.at("value").get<std::string>());
                vecs.push_back(std::move(v));
            }
            try {
                auto rec = recover_cumulants(vecs, x);
                json kappa;
                for (const auto& [m, v] : rec.spec.kappa) kappa[std::to_string(m)] = rat_json(v);
                std::cout << json{{"kappa", kappa}, {"violations", rec.violations}}.dump() << "\n";
                return 0;
            } catch (const InconsistentMomentsError& e) {
                std::cout << json{{"error", e.what()}}.dump() << "\n";
                return 1;
            }
        }

        if (c_ver->parsed()) {
            std::vector<CriterionResult> results;
            if (criterion > 0)
                results.push_back(run_criterion(criterion, max_k, max_n, seed));
            else
                results = run_all_criteria(max_k, max_n, seed);
            bool pass = true;
            json report = json::array();
            for (const auto& r : results) {
                report.push_back(
                    {{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                pass = pass && r.pass;
            }
            std::cout << report.dump(2) << "\n";
            return pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
