#include "maxplus/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace maxplus::io {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw SpecError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw SpecError(std::string("field \"") + name + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::int64_t int_value(const Json& v, const char* what) {
    if (!v.is_number_integer()) throw SpecError(std::string(what) + " must be an integer");
    return v.get<std::int64_t>();
}

IntervalEntry interval_entry_from_json(const Json& v) {
    if (v.is_null()) return IntervalEntry::eps();
    if (v.is_number_integer()) return IntervalEntry::fixed(v.get<std::int64_t>());
    if (v.is_array() && v.size() == 2) {
        return IntervalEntry::interval(int_value(v[0], "interval bound"),
                                       int_value(v[1], "interval bound"));
    }
    throw SpecError("holding time must be an integer or [a, b]");
}

Json interval_entry_to_json(const IntervalEntry& e) {
    switch (e.kind) {
        case IntervalEntry::Kind::Eps:
            return nullptr;
        case IntervalEntry::Kind::Fixed:
            return e.lo;
        case IntervalEntry::Kind::Interval:
            return Json::array({e.lo, e.hi});
    }
    return nullptr;
}

std::vector<std::string> string_list(const Json& v, const char* name) {
    if (!v.is_array()) throw SpecError(std::string("\"") + name + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) throw SpecError(std::string("\"") + name + "\" must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::string csv_cell(Scalar s) {
    if (s.is_eps()) return "-inf";
    if (s.is_top()) return "+inf";
    return std::to_string(s.value());
}

}  // namespace

Json scalar_to_json(Scalar s) {
    if (s.is_eps()) return nullptr;
    if (s.is_top()) return "+inf";
    return s.value();
}

Scalar scalar_from_json(const Json& j, bool allow_top) {
    if (j.is_null()) return Scalar::eps();
    if (j.is_number_integer()) return Scalar::finite(j.get<std::int64_t>());
    if (j.is_string() && j.get<std::string>() == "+inf") {
        if (!allow_top) throw SpecError("+inf is only allowed in residual outputs");
        return Scalar::top();
    }
    throw SpecError("matrix entry must be null, an integer or \"+inf\"");
}

Json to_json(const Matrix& m) {
    Json data = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j, bool allow_top) {
    const std::size_t rows = size_field(j, "rows");
    const std::size_t cols = size_field(j, "cols");
    const Json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows) {
        throw DimensionError("\"data\" must hold " + std::to_string(rows) + " rows");
    }
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (const auto& row : data) {
        if (!row.is_array() || row.size() != cols) {
            throw DimensionError("every row must hold " + std::to_string(cols) + " entries");
        }
        for (const auto& v : row) entries.push_back(scalar_from_json(v, allow_top));
    }
    return Matrix::with_top(rows, cols, std::move(entries));
}

Json to_json(const Semimodule& x) {
    Json j = to_json(x.matrix());
    j["dim"] = x.dim();
    return j;
}

Semimodule semimodule_from_json(const Json& j) {
    const std::size_t dim = size_field(j, "dim");
    const Matrix gens = matrix_from_json(j);
    if (gens.rows() != dim) {
        throw DimensionError("generator matrix has " + std::to_string(gens.rows()) +
                             " rows, dim is " + std::to_string(dim));
    }
    return gens.cols() == 0 ? Semimodule(dim) : Semimodule(gens);
}

Json to_json(const Congruence& w) {
    return Json{{"dim", w.dim()}, {"kernel", to_json(w.kernel())}};
}

Congruence congruence_from_json(const Json& j) {
    const std::size_t dim = size_field(j, "dim");
    Matrix kernel = matrix_from_json(field(j, "kernel"));
    if (kernel.cols() != dim) {
        throw DimensionError("kernel has " + std::to_string(kernel.cols()) +
                             " columns, dim is " + std::to_string(dim));
    }
    return Congruence::from_kernel(std::move(kernel));
}

Json to_json(const FixpointReport& r) {
    Json chain = Json::array();
    for (const auto& x : r.chain) chain.push_back(to_json(x));
    Json j{{"converged", r.converged},
           {"iterations", r.iterations},
           {"result", to_json(r.result)},
           {"chain", std::move(chain)}};
    j["limit"] = r.limit ? to_json(*r.limit) : Json(nullptr);
    return j;
}

FixpointReport fixpoint_report_from_json(const Json& j) {
    FixpointReport r;
    const Json& conv = field(j, "converged");
    if (!conv.is_boolean()) throw SpecError("\"converged\" must be a boolean");
    r.converged = conv.get<bool>();
    r.iterations = size_field(j, "iterations");
    r.result = semimodule_from_json(field(j, "result"));
    if (j.contains("chain")) {
        for (const auto& x : field(j, "chain")) r.chain.push_back(semimodule_from_json(x));
    }
    if (j.contains("limit") && !j.at("limit").is_null()) {
        r.limit = semimodule_from_json(j.at("limit"));
    }
    return r;
}

Json to_json(const VolumeResult& v) {
    const char* kind = v.kind == VolumeResult::Kind::Finite     ? "Finite"
                       : v.kind == VolumeResult::Kind::Infinite ? "Infinite"
                                                                : "Unknown";
    return Json{{"kind", kind}, {"count", v.count}, {"box_bound", v.box_bound}};
}

VolumeResult volume_result_from_json(const Json& j) {
    VolumeResult v;
    const Json& kind = field(j, "kind");
    const std::string k = kind.is_string() ? kind.get<std::string>() : "";
    if (k == "Finite") {
        v.kind = VolumeResult::Kind::Finite;
    } else if (k == "Infinite") {
        v.kind = VolumeResult::Kind::Infinite;
    } else if (k == "Unknown") {
        v.kind = VolumeResult::Kind::Unknown;
    } else {
        throw SpecError("unknown volume kind");
    }
    v.count = size_field(j, "count");
    v.box_bound = int_value(field(j, "box_bound"), "box_bound");
    return v;
}

Json to_json(const ObserverMatrices& o) {
    return Json{{"F", to_json(o.f)}, {"U", to_json(o.u)}, {"V", to_json(o.v)}};
}

ObserverMatrices observer_from_json(const Json& j) {
    return {matrix_from_json(field(j, "F")), matrix_from_json(field(j, "U")),
            matrix_from_json(field(j, "V"))};
}

Json to_json(const TegSpec& spec) {
    Json arcs = Json::array();
    for (const auto& a : spec.arcs) {
        arcs.push_back(Json{{"from", a.from}, {"to", a.to}, {"time", interval_entry_to_json(a.time)}});
    }
    return Json{{"transitions", spec.transitions}, {"arcs", std::move(arcs)},
                {"observed", spec.observed}};
}

TegSpec teg_spec_from_json(const Json& j) {
    TegSpec spec;
    spec.transitions = string_list(field(j, "transitions"), "transitions");
    spec.observed = j.contains("observed") ? string_list(j.at("observed"), "observed")
                                           : std::vector<std::string>{};
    const Json& arcs = field(j, "arcs");
    if (!arcs.is_array()) throw SpecError("\"arcs\" must be an array");
    for (const auto& a : arcs) {
        const Json& from = field(a, "from");
        const Json& to = field(a, "to");
        if (!from.is_string() || !to.is_string()) throw SpecError("arc endpoints must be names");
        const IntervalEntry time = interval_entry_from_json(field(a, "time"));
        if (time.kind == IntervalEntry::Kind::Eps) throw SpecError("arc needs a holding time");
        spec.arcs.push_back({from.get<std::string>(), to.get<std::string>(), time});
    }
    return spec;
}

Json to_json(const CompiledTeg& teg) {
    const std::size_t n = teg.abar.size();
    Json entries = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < n; ++jj) row.push_back(interval_entry_to_json(teg.abar.at(i, jj)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", n}, {"entries", std::move(entries)}, {"C", to_json(teg.c)}};
}

CompiledTeg compiled_teg_from_json(const Json& j) {
    const std::size_t n = size_field(j, "n");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != n) throw DimensionError("\"entries\" must be n x n");
    CompiledTeg out{IntervalMatrix(n), matrix_from_json(field(j, "C"))};
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries[i].is_array() || entries[i].size() != n) {
            throw DimensionError("\"entries\" must be n x n");
        }
        for (std::size_t jj = 0; jj < n; ++jj) out.abar.set(i, jj, interval_entry_from_json(entries[i][jj]));
    }
    if (out.c.cols() != n) throw DimensionError("C width differs from n");
    return out;
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    } catch (const std::ios_base::failure& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << dump(j);
    if (!out) throw IoError("write failed: " + path);
}

void write_trajectory_csv(std::ostream& os, const std::vector<Vector>& states,
                          const std::vector<Vector>& outputs,
                          const std::vector<Vector>& observer) {
    if (outputs.size() != states.size() || (!observer.empty() && observer.size() != states.size())) {
        throw DimensionError("trajectory columns have different lengths");
    }
    if (states.empty()) return;
    std::ostringstream line;
    line << 'k';
    for (std::size_t i = 1; i <= states[0].size(); ++i) line << ",x" << i;
    for (std::size_t i = 1; i <= outputs[0].size(); ++i) line << ",y" << i;
    if (!observer.empty())
        for (std::size_t i = 1; i <= observer[0].size(); ++i) line << ",z" << i;
    os << line.str() << '\n';
    for (std::size_t k = 0; k < states.size(); ++k) {
        os << k;
        for (Scalar s : states[k]) os << ',' << csv_cell(s);
        for (Scalar s : outputs[k]) os << ',' << csv_cell(s);
        if (!observer.empty())
            for (Scalar s : observer[k]) os << ',' << csv_cell(s);
        os << '\n';
    }
}

}  // namespace maxplus::io
