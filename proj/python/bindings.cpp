#include "mrarank/alpha.hpp"
#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/inference.hpp"
#include "mrarank/marginals.hpp"
#include "mrarank/regularization.hpp"
#include "mrarank/transform.hpp"
#include "mrarank/validation.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace mrarank;

namespace {

// Python side: words and subsets are tuples of ints, functions are dicts
// word -> float, coefficient sets are dicts subset -> {word: float}.

std::vector<Item> items_of(const py::handle& seq) {
    std::vector<Item> out;
    for (const auto& v : seq) out.push_back(v.cast<Item>());
    return out;
}

Word to_word(const py::handle& seq) { return Word(items_of(seq)); }
Subset to_subset(const py::handle& seq) { return Subset(items_of(seq)); }

py::tuple from_items(std::span<const Item> items) {
    py::tuple t(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) t[i] = py::int_(items[i]);
    return t;
}

RankingFunction to_function(const py::dict& d) {
    RankingFunction f;
    for (const auto& [k, v] : d) f.add(to_word(k), v.cast<double>());
    return f;
}

py::dict from_function(const RankingFunction& f) {
    py::dict d;
    for (const auto& [w, v] : f.entries()) d[from_items(w.items())] = v;
    return d;
}

WaveletCoefficients to_coefficients(const py::dict& d) {
    WaveletCoefficients x;
    for (const auto& [k, v] : d) {
        const Subset b = to_subset(k);
        x.block(b);
        for (const auto& [w, value] : v.cast<py::dict>()) x.add(b, to_word(w), value.cast<double>());
    }
    return x;
}

py::dict from_coefficients(const WaveletCoefficients& x) {
    py::dict d;
    for (const auto& [b, blk] : x.blocks()) {
        py::dict inner;
        const auto words = enumerate_rankings(b);
        for (std::size_t i = 0; i < words.size(); ++i) inner[from_items(words[i].items())] = blk[i];
        d[from_items(b.items())] = inner;
    }
    return d;
}

Dataset to_dataset(const py::iterable& rankings) {
    Dataset d;
    for (const auto& r : rankings) d.add(to_word(r));
    return d;
}

ObservationDesign to_design(const py::object& design) {
    if (py::isinstance<py::dict>(design)) {
        std::map<Subset, double> w;
        for (const auto& [k, v] : design.cast<py::dict>()) w[to_subset(k)] = v.cast<double>();
        return ObservationDesign(std::move(w));
    }
    std::set<Subset> s;
    for (const auto& a : design) s.insert(to_subset(a));
    return ObservationDesign(std::move(s));
}

py::list from_subsets(const std::set<Subset>& s) {
    py::list out;
    for (const auto& b : s) out.append(from_items(b.items()));
    return out;
}

py::list report_records(const AuditReport& r) {
    py::list out;
    for (const auto& c : r.checks) {
        py::dict rec;
        rec["suite"] = r.suite;
        rec["n"] = r.n;
        rec["check"] = c.name;
        rec["passed"] = c.passed;
        rec["detail"] = c.detail;
        out.append(rec);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multiresolution analysis of incomplete rankings";

    auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
    py::register_exception<AuditFailure>(m, "AuditFailure", error.ptr());

    py::class_<AlphaTable>(m, "AlphaTable")
        .def(py::init<std::size_t>(), py::arg("k_max") = kDefaultAlphaSize)
        .def_property_readonly("k_max", &AlphaTable::k_max)
        .def_property_readonly("construction_ops", &AlphaTable::construction_ops)
        .def(
            "alpha",
            [](const AlphaTable& t, const py::object& pi, const py::object& pi_prime) {
                const mpq_class q = t.alpha(to_word(pi), to_word(pi_prime));
                return py::make_tuple(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
            },
            py::arg("pi"), py::arg("pi_prime"), "Exact alpha coefficient as (numerator, denominator).");

    m.def("factorial", [](std::size_t n) { return mrarank::factorial(n); }, py::arg("n"));
    m.def("derangements", [](std::size_t k) { return mrarank::derangements(k); }, py::arg("k"));

    m.def(
        "marginal", [](const py::dict& f, const py::object& a) { return from_function(marginal(to_function(f), to_subset(a))); },
        py::arg("f"), py::arg("subset"));

    m.def(
        "fwt",
        [](const py::dict& f, const AlphaTable& t, unsigned workers) {
            RankingFunction g = to_function(f);
            OpCounter c;
            WaveletCoefficients x;
            {
                py::gil_scoped_release release;
                x = fwt(g, t, &c, workers);
            }
            return py::make_tuple(from_coefficients(x), c.total());
        },
        py::arg("f"), py::arg("table"), py::arg("workers") = 1,
        "Wavelet transform; returns (coefficients, filter operation count).");

    m.def(
        "synthesize",
        [](const py::dict& x, const py::object& a) { return from_function(synthesize(to_coefficients(x), to_subset(a))); },
        py::arg("coefficients"), py::arg("subset"));

    m.def(
        "feature_marginal",
        [](const py::dict& x, const py::object& a) { return from_coefficients(feature_marginal(to_coefficients(x), to_subset(a))); },
        py::arg("coefficients"), py::arg("subset"));

    m.def(
        "estimate",
        [](const py::iterable& rankings, const AlphaTable& t) {
            return from_coefficients(wavelet_empirical_estimator(to_dataset(rankings), t));
        },
        py::arg("rankings"), py::arg("table"), "Wavelet empirical estimator of a list of rankings.");

    m.def(
        "naive_marginal",
        [](const py::iterable& rankings, const py::object& a) {
            return from_function(naive_empirical_marginal(to_dataset(rankings), to_subset(a)));
        },
        py::arg("rankings"), py::arg("subset"));

    m.def(
        "identifiable_support",
        [](const py::object& design) {
            const auto s = identifiable_support(to_design(design));
            return py::make_tuple(from_subsets(s.blocks), s.dof);
        },
        py::arg("design"));

    m.def(
        "solution_space",
        [](const py::dict& f0, const py::object& a, const py::iterable& constraints, const AlphaTable& t) {
            std::set<Subset> s;
            for (const auto& c : constraints) s.insert(to_subset(c));
            const auto sol = solution_space(to_function(f0), to_subset(a), s, t);
            return py::make_tuple(from_function(sol.particular), from_subsets(sol.free_blocks), sol.dimension);
        },
        py::arg("f0"), py::arg("subset"), py::arg("constraints"), py::arg("table"));

    m.def(
        "generate",
        [](const py::dict& p, const py::object& design, std::size_t n, std::uint64_t seed) {
            const Dataset d = generate_dataset(to_function(p), to_design(design), n, seed);
            py::list out;
            for (const auto& o : d.observations()) out.append(from_items(o.ranking.items()));
            return out;
        },
        py::arg("model"), py::arg("design"), py::arg("n"), py::arg("seed"));

    m.def(
        "kernel_smooth",
        [](const py::dict& x, std::size_t h, const py::object& universe) {
            return from_coefficients(kernel_smooth(to_coefficients(x), h, to_subset(universe)));
        },
        py::arg("coefficients"), py::arg("h"), py::arg("universe"));

    m.def(
        "format_coefficients",
        [](const py::dict& x, std::size_t k_max, const py::object& universe) {
            return format_coefficients(CoefficientFile{to_coefficients(x), k_max, to_subset(universe)});
        },
        py::arg("coefficients"), py::arg("k_max"), py::arg("universe"));

    m.def(
        "parse_coefficients",
        [](const std::string& text) {
            const auto file = parse_coefficients(text);
            return py::make_tuple(from_coefficients(file.coefficients), file.k_max, from_items(file.universe.items()));
        },
        py::arg("text"));

    m.def(
        "validate",
        [](const std::string& suite, std::size_t n) {
            AuditReport r;
            if (suite == "mra") r = mra_audit(n, AlphaTable(std::max<std::size_t>(n, 2)));
            else if (suite == "shuffle") r = shuffle_audit(n);
            else if (suite == "h2") r = h2_audit(n);
            else if (suite == "syt") r = syt_dimension_audit(n);
            else if (suite == "embedding") r = embedding_audit(n);
            else throw DomainError("unknown suite '" + suite + "'");
            return report_records(r);
        },
        py::arg("suite"), py::arg("n"), "Structural audit; one record per check.");
}
