#include "algch/io.hpp"

#include <fstream>
#include <sstream>

namespace algch::io {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what)
{
    throw Error("field '" + path + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object())
        field_error(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::size_t size_from_json(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        field_error(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    if (!j.is_array() || j.size() != rows)
        field_error(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto rp = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols)
            field_error(rp, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

std::vector<Matrix> matrix_list(const json& j, std::size_t count, std::size_t rows, std::size_t cols,
                                const std::string& path)
{
    if (!j.is_array() || j.size() != count)
        field_error(path, "expected a list of " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(matrix_from_json(j[i], rows, cols, path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string location(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

} // namespace

Scalar scalar_from_json(const json& j, const std::string& path)
{
    try {
        if (j.is_string())
            return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_number_integer())
            return Scalar(Rational(j.get<long>()));
        if (j.is_object()) {
            const auto re = j.contains("re") ? scalar_from_json(j.at("re"), path + ".re") : Scalar();
            const auto im = j.contains("im") ? scalar_from_json(j.at("im"), path + ".im") : Scalar();
            if (!re.is_real() || !im.is_real())
                field_error(path, "re and im must be rationals");
            for (const auto& [key, _] : j.items())
                if (key != "re" && key != "im")
                    field_error(path, "unexpected key '" + key + "'");
            return {re.re(), im.re()};
        }
    } catch (const Error& e) {
        const std::string msg = e.what();
        if (msg.rfind("field '", 0) == 0)
            throw;
        field_error(path, msg);
    }
    field_error(path, "expected a rational string like \"3/2\" or {\"re\":..,\"im\":..}; floats are not accepted");
}

json scalar_to_json(const Scalar& s)
{
    if (s.is_real())
        return to_string(s.re());
    return json{{"re", to_string(s.re())}, {"im", to_string(s.im())}};
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Document parse_document(const std::string& text, const std::string& source)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(source + ":" + location(text, e.byte) + ": parse error: " + e.what());
    }
    const std::size_t n = size_from_json(member(root, "base_dim", ""), "base_dim");
    const std::size_t r = size_from_json(member(root, "rank", ""), "rank");
    if (r > max_frame)
        field_error("rank", "rank above " + std::to_string(max_frame) + " is not supported");

    Matrix anchor(n, r);
    if (root.contains("anchor")) {
        const auto& an = root["anchor"];
        if (!an.is_array() || an.size() != n * r)
            field_error("anchor", "expected " + std::to_string(n * r) + " row-major entries");
        for (std::size_t k = 0; k < n * r; ++k)
            anchor(k / r, k % r) = scalar_from_json(an[k], "anchor[" + std::to_string(k) + "]");
    } else if (n * r != 0) {
        field_error("anchor", "missing");
    }

    std::vector<Scalar> c(r * r * r);
    std::vector<char> given(r * r, 0);
    if (root.contains("brackets")) {
        const auto& br = root["brackets"];
        if (!br.is_array())
            field_error("brackets", "expected a list");
        for (std::size_t e = 0; e < br.size(); ++e) {
            const auto p = "brackets[" + std::to_string(e) + "]";
            const std::size_t i = size_from_json(member(br[e], "i", p), p + ".i");
            const std::size_t j = size_from_json(member(br[e], "j", p), p + ".j");
            if (i < 1 || i > r || j < 1 || j > r)
                field_error(p, "indices are 1-based and must lie in 1..rank");
            const auto& co = member(br[e], "coeffs", p);
            if (!co.is_array() || co.size() != r)
                field_error(p + ".coeffs", "expected " + std::to_string(r) + " entries");
            if (given[(i - 1) * r + (j - 1)])
                field_error(p, "bracket listed twice");
            given[(i - 1) * r + (j - 1)] = 1;
            for (std::size_t k = 0; k < r; ++k)
                c[((i - 1) * r + (j - 1)) * r + k] = scalar_from_json(co[k], p + ".coeffs[" + std::to_string(k) + "]");
        }
        // An unlisted [e_j, e_i] is the negative of a listed [e_i, e_j].
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (given[i * r + j] && !given[j * r + i] && i != j)
                    for (std::size_t k = 0; k < r; ++k)
                        c[(j * r + i) * r + k] = -c[(i * r + j) * r + k];
    }
    Document doc{ConstantAlgebroid(std::move(anchor), std::move(c)), std::nullopt, std::nullopt, std::nullopt};

    if (root.contains("connection")) {
        const auto& tm = member(root["connection"], "tm", "connection");
        doc.tm = TangentConnection{matrix_list(tm, n, r, r, "connection.tm")};
    }
    if (root.contains("metric")) {
        const auto& m = root["metric"];
        const Matrix gA = matrix_from_json(member(m, "A", "metric"), r, r, "metric.A");
        const Matrix gM = n ? matrix_from_json(member(m, "M", "metric"), n, n, "metric.M") : Matrix(0, 0);
        try {
            doc.metric = HermitianMetric(gA, gM);
        } catch (const Error& e) {
            field_error("metric", e.what());
        }
    }
    if (root.contains("representation")) {
        const auto& rep = root["representation"];
        const std::size_t ev = size_from_json(member(rep, "even", "representation"), "representation.even");
        const std::size_t od = size_from_json(member(rep, "odd", "representation"), "representation.odd");
        const std::size_t N = ev + od;
        GradedBundle bundle(ev, od);
        if (rep.contains("boundary")) {
            try {
                bundle = GradedBundle::from_boundary(ev, od, matrix_from_json(rep["boundary"], N, N, "representation.boundary"));
            } catch (const Error& e) {
                const std::string msg = e.what();
                if (msg.rfind("field '", 0) == 0)
                    throw;
                field_error("representation.boundary", msg);
            }
        }
        RepresentationDoc rd{bundle, {}, std::nullopt};
        const auto& conns = member(rep, "connections", "representation");
        if (!conns.is_array() || conns.empty())
            field_error("representation.connections", "expected a non-empty list");
        for (std::size_t m = 0; m < conns.size(); ++m) {
            const auto p = "representation.connections[" + std::to_string(m) + "]";
            try {
                rd.connections.emplace_back(doc.algebroid, bundle, matrix_list(conns[m], r, N, N, p));
            } catch (const Error& e) {
                const std::string msg = e.what();
                if (msg.rfind("field '", 0) == 0)
                    throw;
                field_error(p, msg);
            }
        }
        if (rep.contains("metric")) {
            const auto& m = rep["metric"];
            try {
                rd.metric = HermitianMetric(matrix_from_json(member(m, "even", "representation.metric"), ev, ev,
                                                             "representation.metric.even"),
                                            matrix_from_json(member(m, "odd", "representation.metric"), od, od,
                                                             "representation.metric.odd"));
            } catch (const Error& e) {
                const std::string msg = e.what();
                if (msg.rfind("field '", 0) == 0)
                    throw;
                field_error("representation.metric", msg);
            }
        }
        doc.representation = std::move(rd);
    }
    return doc;
}

Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

json algebroid_to_json(const ConstantAlgebroid& a)
{
    const std::size_t n = a.base_dim(), r = a.rank();
    json j;
    j["base_dim"] = n;
    j["rank"] = r;
    json anchor = json::array();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < r; ++i)
            anchor.push_back(scalar_to_json(a.anchor()(x, i)));
    j["anchor"] = std::move(anchor);
    json br = json::array();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = i + 1; k < r; ++k) {
            json co = json::array();
            bool nonzero = false;
            for (std::size_t l = 0; l < r; ++l) {
                co.push_back(scalar_to_json(a.c(i, k, l)));
                nonzero = nonzero || !a.c(i, k, l).is_zero();
            }
            if (nonzero)
                br.push_back(json{{"i", i + 1}, {"j", k + 1}, {"coeffs", std::move(co)}});
        }
    j["brackets"] = std::move(br);
    return j;
}

json document_to_json(const Document& d)
{
    json j = algebroid_to_json(d.algebroid);
    if (d.tm) {
        json tm = json::array();
        for (const auto& g : d.tm->gamma)
            tm.push_back(matrix_to_json(g));
        j["connection"] = json{{"tm", std::move(tm)}};
    }
    if (d.metric) {
        j["metric"]["A"] = matrix_to_json(d.metric->even_block());
        if (d.algebroid.base_dim())
            j["metric"]["M"] = matrix_to_json(d.metric->odd_block());
    }
    if (d.representation) {
        const auto& rep = *d.representation;
        json r;
        r["even"] = rep.bundle.even();
        r["odd"] = rep.bundle.odd();
        if (!rep.bundle.boundary().is_zero())
            r["boundary"] = matrix_to_json(rep.bundle.boundary());
        json conns = json::array();
        for (const auto& c : rep.connections) {
            json om = json::array();
            for (const auto& m : c.omegas())
                om.push_back(matrix_to_json(m));
            conns.push_back(std::move(om));
        }
        r["connections"] = std::move(conns);
        if (rep.metric)
            r["metric"] = json{{"even", matrix_to_json(rep.metric->even_block())},
                               {"odd", matrix_to_json(rep.metric->odd_block())}};
        j["representation"] = std::move(r);
    }
    return j;
}

json form_to_json(const ScalarForm& f)
{
    json terms = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.value_at(i).is_zero())
            continue;
        json idx = json::array();
        for (std::size_t b = 0; b < f.frame(); ++b)
            if (f.mask_at(i) & (Mask(1) << b))
                idx.push_back(b + 1);
        terms.push_back(json{{"indices", std::move(idx)}, {"value", scalar_to_json(f.value_at(i))}});
    }
    return json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

std::string form_to_string(const ScalarForm& f)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Scalar& v = f.value_at(i);
        if (v.is_zero())
            continue;
        std::string coeff = to_string(v);
        if (!v.is_real() && sgn(v.re()) != 0)
            coeff = "(" + coeff + ")";
        if (!first)
            os << (coeff.front() == '-' ? " - " : " + ");
        else if (coeff.front() == '-')
            os << "-";
        if (coeff.front() == '-')
            coeff.erase(0, 1);
        first = false;
        std::string basis;
        for (std::size_t b = 0; b < f.frame(); ++b)
            if (f.mask_at(i) & (Mask(1) << b))
                basis += (basis.empty() ? "e" : "^e") + std::to_string(b + 1);
        if (basis.empty())
            os << coeff;
        else if (coeff == "1")
            os << basis;
        else
            os << coeff << "*" << basis;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace algch::io
