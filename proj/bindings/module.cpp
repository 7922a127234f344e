#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpfec/config.hpp"
#include "cpfec/sim.hpp"

namespace py = pybind11;
using namespace cpfec;

namespace {

BitVector to_bits(const std::vector<int>& v) {
    BitVector b(static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) b.set(static_cast<int>(i), true);
    return b;
}

std::vector<int> from_bits(const BitVector& b) {
    std::vector<int> v(b.size());
    for (int i = 0; i < b.size(); ++i) v[i] = b.get(i);
    return v;
}

SchemeConfig scheme_from_dict(const py::dict& d) {
    ConfigMap cfg;
    for (auto item : d)
        cfg[py::cast<std::string>(item.first)] = py::cast<std::string>(py::str(item.second));
    return scheme_from_config(cfg);
}

py::dict record_to_dict(const SweepRecord& r) {
    py::dict d;
    d["scheme"] = r.scheme_id;
    d["snr_db"] = r.snr_db;
    d["frames"] = r.frames;
    d["bits"] = r.bits;
    d["bit_errors"] = r.bit_errors;
    d["pre_outer_ber"] = r.pre_outer_ber;
    d["bypassed_bit_errors"] = r.bypassed_bit_errors;
    d["wall_seconds"] = r.wall_seconds;
    d["master_seed"] = r.master_seed;
    d["under_resolved"] = r.under_resolved;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "channel-polarized multilevel coding with iterative decoding";

    py::class_<ComponentCode>(m, "ComponentCode")
        .def_readonly("n", &ComponentCode::n_c)
        .def_readonly("k", &ComponentCode::k_c)
        .def_readonly("d_min", &ComponentCode::d_min)
        .def_readonly("name", &ComponentCode::name)
        .def("encode",
             [](const ComponentCode& c, const std::vector<int>& info) {
                 return from_bits(c.encode(to_bits(info)));
             })
        .def("is_codeword",
             [](const ComponentCode& c, const std::vector<int>& word) {
                 return c.is_codeword(to_bits(word));
             })
        .def("__repr__", [](const ComponentCode& c) { return "<ComponentCode " + c.name + ">"; });

    m.def("build_ebch", &build_ebch, py::arg("k"),
          "extended BCH code over GF(2^7), n = 128");
    m.def("build_ebch_field", &build_ebch_field, py::arg("m"), py::arg("k"));
    m.def("code_by_name", &code_by_name, py::arg("name"));

    m.def("boxplus", [](double a, double b) { return boxplus(a, b); });
    m.def("boxplus_reduce",
          [](const std::vector<double>& l) { return boxplus_reduce(l); });
    m.def("snr_to_sigma", &snr_to_sigma);
    m.def("q_func", &q_func);
    m.def("q_func_inv", &q_func_inv);
    m.def("uncoded_snr_db_at", &uncoded_snr_db_at);

    m.def("flipping_set_size",
          [](const std::string& spec, int k) { return flipping_set_size(parse_flipping_spec(spec), k); },
          py::arg("spec"), py::arg("k"));

    m.def("osd_decode",
          [](const ComponentCode& code, const std::vector<double>& llr, const std::string& spec) {
              OsdResult r = osd_decode(code, llr, parse_flipping_spec(spec));
              py::dict d;
              d["codeword"] = from_bits(r.codeword);
              d["info"] = from_bits(r.info);
              d["score"] = r.score;
              d["candidates_evaluated"] = r.candidates_evaluated;
              return d;
          },
          py::arg("code"), py::arg("llr"), py::arg("spec") = "t0+t1+t2(40,29)");

    m.def("build_interleaver",
          [](const std::string& spec, int n) { return build_interleaver(parse_interleaver_spec(spec), n); },
          py::arg("spec"), py::arg("n"));

    m.def("bsc_erasure_probabilities", &bsc_erasure_probabilities, py::arg("p"));

    m.def("message_schedule", [](int d, int iterations) {
        py::list out;
        for (const auto& e : message_schedule(d, iterations))
            out.append(py::make_tuple(e.iteration, e.lane, e.messages));
        return out;
    });

    py::class_<SchemeConfig>(m, "SchemeConfig")
        .def_property_readonly("kind", [](const SchemeConfig& c) { return to_string(c.kind); })
        .def_readonly("d", &SchemeConfig::d)
        .def_readonly("iterations", &SchemeConfig::iterations)
        .def_readonly("id", &SchemeConfig::id)
        .def_property_readonly("code", [](const SchemeConfig& c) { return c.code; })
        .def("__repr__", [](const SchemeConfig& c) { return "<SchemeConfig " + c.id + ">"; });

    m.def("make_scheme", &scheme_from_dict, py::arg("options"),
          "build a scheme from {'scheme.kind': ..., 'scheme.code': ..., ...}");

    m.def("scheme_overhead", &scheme_overhead);
    m.def("info_bit_count", &info_bit_count);
    m.def("sdd_count_per3", &sdd_count_per3);
    m.def("total_rate", &total_rate);

    m.def("scheme_encode",
          [](const SchemeConfig& cfg, const std::vector<int>& info) {
              Frame f = scheme_encode(cfg, to_bits(info));
              std::vector<std::vector<int>> lanes;
              for (const auto& lane : f.lanes) lanes.push_back(from_bits(lane));
              return lanes;
          });
    m.def("scheme_decode",
          [](const SchemeConfig& cfg, const std::vector<std::vector<double>>& lanes) {
              DecodeResult r = scheme_decode(cfg, lanes);
              py::dict d;
              d["info"] = from_bits(r.info);
              d["sdd_invocations"] = r.sdd_invocations;
              py::list trace;
              for (const auto& t : r.trace) trace.append(py::make_tuple(t.iteration, t.lane, t.flips));
              d["trace"] = trace;
              return d;
          });

    m.def("run_point",
          [](const SchemeConfig& scheme, double snr_db, uint64_t seed, int64_t min_errors,
             int64_t min_frames, int64_t max_frames, int workers) {
              ChannelConfig ch{ChannelConfig::Kind::awgn, snr_db, 0.0, seed};
              return record_to_dict(run_point(scheme, ch, {min_errors, min_frames, max_frames}, workers));
          },
          py::arg("scheme"), py::arg("snr_db"), py::arg("seed") = 1, py::arg("min_errors") = 100,
          py::arg("min_frames") = 10000, py::arg("max_frames") = 10000000, py::arg("workers") = 1);

    m.def("required_snr",
          [](const SchemeConfig& scheme, double target_ber, double lo, double hi, double tol,
             uint64_t seed, int64_t min_errors, int64_t min_frames, int64_t max_frames, int workers) {
              ThresholdResult t = required_snr(scheme, seed, target_ber, lo, hi, tol,
                                               {min_errors, min_frames, max_frames}, workers);
              py::dict d;
              d["snr_db"] = t.snr_db;
              d["under_resolved"] = t.under_resolved;
              py::list probes;
              for (const auto& p : t.probes) probes.append(record_to_dict(p));
              d["probes"] = probes;
              return d;
          },
          py::arg("scheme"), py::arg("target_ber") = 2.2e-4, py::arg("bracket_lo") = 2.0,
          py::arg("bracket_hi") = 6.5, py::arg("tol_db") = 0.01, py::arg("seed") = 1,
          py::arg("min_errors") = 100, py::arg("min_frames") = 10000,
          py::arg("max_frames") = 10000000, py::arg("workers") = 1);

    m.def("ncg",
          [](const SchemeConfig& scheme, double lo, double hi, double tol, uint64_t seed,
             int64_t min_errors, int64_t min_frames, int64_t max_frames, int workers) {
              NcgResult r = ncg(scheme, seed, lo, hi, tol, {min_errors, min_frames, max_frames}, workers);
              py::dict d;
              d["ncg_db"] = r.ncg_db;
              d["rate_total"] = r.rate_total;
              d["required_snr_db"] = r.threshold.snr_db;
              d["under_resolved"] = r.threshold.under_resolved;
              return d;
          },
          py::arg("scheme"), py::arg("bracket_lo") = 2.0, py::arg("bracket_hi") = 6.5,
          py::arg("tol_db") = 0.01, py::arg("seed") = 1, py::arg("min_errors") = 100,
          py::arg("min_frames") = 10000, py::arg("max_frames") = 10000000, py::arg("workers") = 1);

    m.attr("KP4_THRESHOLD_BER") = OuterCodeModel{}.threshold_ber;
    m.attr("KP4_RATE") = OuterCodeModel{}.rate;
    m.attr("LLR_MAX") = kLlrMax;
    m.attr("RNG_ALGORITHM") = kRngAlgorithm;
    m.def("outer_success", &outer_success);
}
