#include "mtc/category.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace mtc {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx read_complex(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw CategoryError(CategoryError::Kind::Schema,
                            where + ": complex values must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string fkey_str(const CategoryData& cat, const FKey& k) {
    std::ostringstream os;
    os << "F(" << cat.label(k[0]) << "," << cat.label(k[1]) << ","
       << cat.label(k[2]) << ";" << cat.label(k[3]) << ")[" << cat.label(k[4])
       << "," << cat.label(k[5]) << ";" << k[6] << k[7] << k[8] << k[9] << "]";
    return os.str();
}

}  // namespace

namespace {

void copy_fields(CategoryData& dst, const CategoryData& src) {
    dst.name = src.name;
    dst.labels = src.labels;
    dst.unit = src.unit;
    dst.dual = src.dual;
    dst.fusion = src.fusion;
    dst.F = src.F;
    dst.R = src.R;
    dst.dims = src.dims;
    dst.twists = src.twists;
    dst.fs = src.fs;
    dst.cmod8 = src.cmod8;
    dst.cmod24 = src.cmod24;
}

}  // namespace

CategoryData::CategoryData(const CategoryData& o) { copy_fields(*this, o); }

CategoryData& CategoryData::operator=(const CategoryData& o) {
    if (this != &o) {
        copy_fields(*this, o);
        std::lock_guard<std::mutex> lock(fcache_mx_);
        fcache_.clear();
    }
    return *this;
}

CategoryData::CategoryData(CategoryData&& o) noexcept {
    copy_fields(*this, o);
}

CategoryData& CategoryData::operator=(CategoryData&& o) noexcept {
    if (this != &o) {
        copy_fields(*this, o);
        std::lock_guard<std::mutex> lock(fcache_mx_);
        fcache_.clear();
    }
    return *this;
}

int CategoryData::label_index(const std::string& s) const {
    for (int i = 0; i < n(); ++i)
        if (labels[i] == s) return i;
    return -1;
}

cplx CategoryData::Fv(int a, int b, int c, int d, int e, int f, int i, int j,
                      int k, int l) const {
    auto it = F.find(FKey{a, b, c, d, e, f, i, j, k, l});
    return it == F.end() ? cplx(0.0) : it->second;
}

cplx CategoryData::Rv(int a, int b, int c, int i, int j) const {
    auto it = R.find(RKey{a, b, c, i, j});
    return it == R.end() ? cplx(0.0) : it->second;
}

std::vector<std::array<int, 3>> CategoryData::fblock_left_basis(int a, int b,
                                                                int c,
                                                                int d) const {
    std::vector<std::array<int, 3>> out;
    for (int e = 0; e < n(); ++e)
        for (int i = 0; i < N(a, b, e); ++i)
            for (int j = 0; j < N(e, c, d); ++j) out.push_back({e, i, j});
    return out;
}

std::vector<std::array<int, 3>> CategoryData::fblock_right_basis(int a, int b,
                                                                 int c,
                                                                 int d) const {
    std::vector<std::array<int, 3>> out;
    for (int f = 0; f < n(); ++f)
        for (int k = 0; k < N(b, c, f); ++k)
            for (int l = 0; l < N(a, f, d); ++l) out.push_back({f, k, l});
    return out;
}

const Mat& CategoryData::Fblock(int a, int b, int c, int d) const {
    std::lock_guard<std::mutex> lock(fcache_mx_);
    auto key = std::array<int, 4>{a, b, c, d};
    auto it = fcache_.find(key);
    if (it != fcache_.end()) return it->second.first;

    auto left = fblock_left_basis(a, b, c, d);
    auto right = fblock_right_basis(a, b, c, d);
    Mat m = Mat::Zero(long(left.size()), long(right.size()));
    for (size_t r = 0; r < left.size(); ++r)
        for (size_t s = 0; s < right.size(); ++s)
            m(long(r), long(s)) = Fv(a, b, c, d, left[r][0], right[s][0],
                                     left[r][1], left[r][2], right[s][1],
                                     right[s][2]);
    Mat inv;
    if (m.rows() == m.cols() && m.rows() > 0)
        inv = m.inverse();
    else
        inv = Mat::Zero(m.cols(), m.rows());
    auto [pos, ok] = fcache_.emplace(key, std::make_pair(std::move(m), std::move(inv)));
    (void)ok;
    return pos->second.first;
}

const Mat& CategoryData::Fblock_inv(int a, int b, int c, int d) const {
    Fblock(a, b, c, d);
    std::lock_guard<std::mutex> lock(fcache_mx_);
    return fcache_.at(std::array<int, 4>{a, b, c, d}).second;
}

Mat CategoryData::Rblock(int a, int b, int c) const {
    int rows = N(b, a, c), cols = N(a, b, c);
    Mat m = Mat::Zero(rows, cols);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) m(j, i) = Rv(a, b, c, i, j);
    return m;
}

cplx CategoryData::p_plus() const {
    cplx s = 0.0;
    for (int a = 0; a < n(); ++a) s += dims[a] * dims[a] / twists[a];
    return s;
}

cplx CategoryData::p_minus() const {
    cplx s = 0.0;
    for (int a = 0; a < n(); ++a) s += dims[a] * dims[a] * twists[a];
    return s;
}

cplx CategoryData::Dscalar() const {
    return p_minus() * std::exp(cplx(0.0, -2.0 * kPi * cmod8 / 8.0));
}

CategoryData parse_category_json(const std::string& text,
                                 const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CategoryError(CategoryError::Kind::Parse,
                            origin + ": " + e.what());
    }
    auto need = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": missing field '" + field + "'");
        return j.at(field);
    };

    CategoryData cat;
    cat.name = need("name").get<std::string>();
    for (const auto& l : need("labels")) cat.labels.push_back(l.get<std::string>());
    int n = cat.n();
    if (n == 0)
        throw CategoryError(CategoryError::Kind::Schema, origin + ": no labels");
    {
        std::vector<std::string> sorted = cat.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": duplicate label");
    }
    auto idx = [&](const nlohmann::json& v, const std::string& where) {
        int i = cat.label_index(v.get<std::string>());
        if (i < 0)
            throw CategoryError(
                CategoryError::Kind::Schema,
                origin + ": " + where + ": unknown label '" +
                    v.get<std::string>() + "'");
        return i;
    };

    cat.unit = idx(need("unit"), "unit");
    cat.dual.assign(n, -1);
    for (const auto& [k, v] : need("dual").items()) {
        int a = cat.label_index(k);
        if (a < 0)
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": dual: unknown label '" + k + "'");
        cat.dual[a] = idx(v, "dual");
    }
    for (int a = 0; a < n; ++a)
        if (cat.dual[a] < 0)
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": dual: missing entry for '" +
                                    cat.labels[a] + "'");
    for (int a = 0; a < n; ++a)
        if (cat.dual[cat.dual[a]] != a)
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": dual is not an involution at '" +
                                    cat.labels[a] + "'");
    if (cat.dual[cat.unit] != cat.unit)
        throw CategoryError(CategoryError::Kind::Schema,
                            origin + ": unit must be self dual");

    cat.fusion = FusionTable(n);
    for (const auto& row : need("fusion")) {
        if (!row.is_array() || row.size() != 4)
            throw CategoryError(CategoryError::Kind::Schema,
                                origin + ": fusion rows are [a,b,c,N]");
        int a = idx(row[0], "fusion"), b = idx(row[1], "fusion"),
            c = idx(row[2], "fusion");
        int m = row[3].get<int>();
        if (m < 0)
            throw CategoryError(CategoryError::Kind::Value,
                                origin + ": negative fusion multiplicity");
        cat.fusion.at(a, b, c) = m;
    }

    cat.dims.assign(n, 0.0);
    for (const auto& [k, v] : need("dims").items())
        cat.dims[size_t(idx(nlohmann::json(k), "dims"))] = v.get<double>();
    for (int a = 0; a < n; ++a)
        if (!(cat.dims[a] > 0.0))
            throw CategoryError(CategoryError::Kind::Value,
                                origin + ": dim '" + cat.labels[a] +
                                    "' must be positive");

    cat.twists.assign(n, cplx(0.0));
    for (const auto& [k, v] : need("twists").items())
        cat.twists[size_t(idx(nlohmann::json(k), "twists"))] =
            read_complex(v, origin + ": twists");
    for (int a = 0; a < n; ++a)
        if (std::abs(std::abs(cat.twists[a]) - 1.0) > 1e-9)
            throw CategoryError(CategoryError::Kind::Value,
                                origin + ": twist '" + cat.labels[a] +
                                    "' is not unit modulus");

    cat.fs.assign(n, 1);
    for (const auto& [k, v] : need("fs").items()) {
        int s = v.get<int>();
        if (s != 1 && s != -1)
            throw CategoryError(CategoryError::Kind::Value,
                                origin + ": fs entries are +1 or -1");
        cat.fs[size_t(idx(nlohmann::json(k), "fs"))] = s;
    }

    cat.cmod8 = need("cmod8").get<double>();
    if (j.contains("cmod24")) cat.cmod24 = j.at("cmod24").get<double>();

    if (j.contains("F"))
        for (const auto& e : j.at("F")) {
            FKey key{idx(e.at("a"), "F"), idx(e.at("b"), "F"),
                     idx(e.at("c"), "F"), idx(e.at("d"), "F"),
                     idx(e.at("e"), "F"), idx(e.at("f"), "F"),
                     e.value("i", 0),     e.value("j", 0),
                     e.value("k", 0),     e.value("l", 0)};
            cat.F[key] = read_complex(e.at("v"), origin + ": F");
        }
    if (j.contains("R"))
        for (const auto& e : j.at("R")) {
            RKey key{idx(e.at("a"), "R"), idx(e.at("b"), "R"),
                     idx(e.at("c"), "R"), e.value("i", 0), e.value("j", 0)};
            cat.R[key] = read_complex(e.at("v"), origin + ": R");
        }
    return cat;
}

CategoryData load_category(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CategoryError(CategoryError::Kind::Parse,
                            path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_category_json(buf.str(), path);
}

std::string save_category(const CategoryData& cat) {
    nlohmann::json j;
    j["name"] = cat.name;
    j["labels"] = cat.labels;
    j["unit"] = cat.label(cat.unit);
    nlohmann::json dual;
    for (int a = 0; a < cat.n(); ++a)
        dual[cat.label(a)] = cat.label(cat.dual[a]);
    j["dual"] = std::move(dual);
    nlohmann::json fusion = nlohmann::json::array();
    for (int a = 0; a < cat.n(); ++a)
        for (int b = 0; b < cat.n(); ++b)
            for (int c = 0; c < cat.n(); ++c)
                if (cat.N(a, b, c) > 0)
                    fusion.push_back({cat.label(a), cat.label(b), cat.label(c),
                                      cat.N(a, b, c)});
    j["fusion"] = std::move(fusion);
    nlohmann::json dims, twists, fs;
    for (int a = 0; a < cat.n(); ++a) {
        dims[cat.label(a)] = cat.dims[a];
        twists[cat.label(a)] = {cat.twists[a].real(), cat.twists[a].imag()};
        fs[cat.label(a)] = cat.fs[a];
    }
    j["dims"] = std::move(dims);
    j["twists"] = std::move(twists);
    j["fs"] = std::move(fs);
    j["cmod8"] = cat.cmod8;
    if (cat.cmod24) j["cmod24"] = *cat.cmod24;
    nlohmann::json fent = nlohmann::json::array();
    for (const auto& [k, v] : cat.F) {
        nlohmann::json e;
        e["a"] = cat.label(k[0]);
        e["b"] = cat.label(k[1]);
        e["c"] = cat.label(k[2]);
        e["d"] = cat.label(k[3]);
        e["e"] = cat.label(k[4]);
        e["f"] = cat.label(k[5]);
        e["i"] = k[6];
        e["j"] = k[7];
        e["k"] = k[8];
        e["l"] = k[9];
        e["v"] = {v.real(), v.imag()};
        fent.push_back(std::move(e));
    }
    j["F"] = std::move(fent);
    nlohmann::json rent = nlohmann::json::array();
    for (const auto& [k, v] : cat.R) {
        nlohmann::json e;
        e["a"] = cat.label(k[0]);
        e["b"] = cat.label(k[1]);
        e["c"] = cat.label(k[2]);
        e["i"] = k[3];
        e["j"] = k[4];
        e["v"] = {v.real(), v.imag()};
        rent.push_back(std::move(e));
    }
    j["R"] = std::move(rent);
    return j.dump(2);
}

namespace {

struct Worst {
    double residual = 0.0;
    std::string witness;
    void update(double r, const std::string& w) {
        if (r > residual) {
            residual = r;
            witness = w;
        }
    }
    void update(const Worst& o) { update(o.residual, o.witness); }
};

// Pentagon on the word (a,b,c,d) -> t: equality of the two reassociation
// routes from the fully left tree basis (x,i1,y,i2,i3) to the fully right
// tree basis (z,k1,w,k2,k3).
Worst pentagon_tuple(const CategoryData& cat, int a, int b, int c, int d,
                     int t) {
    Worst worst;
    const int n = cat.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int n1 = cat.N(a, b, x), n2 = cat.N(x, c, y), n3 = cat.N(y, d, t);
            if (!n1 || !n2 || !n3) continue;
            for (int i1 = 0; i1 < n1; ++i1)
                for (int i2 = 0; i2 < n2; ++i2)
                    for (int i3 = 0; i3 < n3; ++i3)
                        for (int z = 0; z < n; ++z)
                            for (int w = 0; w < n; ++w) {
                                int m1 = cat.N(c, d, z), m2 = cat.N(b, z, w),
                                    m3 = cat.N(a, w, t);
                                if (!m1 || !m2 || !m3) continue;
                                for (int k1 = 0; k1 < m1; ++k1)
                                    for (int k2 = 0; k2 < m2; ++k2)
                                        for (int k3 = 0; k3 < m3; ++k3) {
                                            cplx lhs = 0.0;
                                            for (int l = 0; l < cat.N(x, z, t); ++l)
                                                lhs += cat.Fv(x, c, d, t, y, z, i2, i3, k1, l) *
                                                       cat.Fv(a, b, z, t, x, w, i1, l, k2, k3);
                                            cplx rhs = 0.0;
                                            for (int u = 0; u < n; ++u)
                                                for (int p1 = 0; p1 < cat.N(b, c, u); ++p1)
                                                    for (int p2 = 0; p2 < cat.N(a, u, y); ++p2)
                                                        for (int p3 = 0; p3 < cat.N(u, d, w); ++p3)
                                                            rhs += cat.Fv(a, b, c, y, x, u, i1, i2, p1, p2) *
                                                                   cat.Fv(a, u, d, t, y, w, p2, i3, p3, k3) *
                                                                   cat.Fv(b, c, d, w, u, z, p1, p3, k1, k2);
                                            double r = std::abs(lhs - rhs);
                                            if (r > worst.residual) {
                                                std::ostringstream os;
                                                os << "(" << cat.label(a) << cat.label(b)
                                                   << cat.label(c) << cat.label(d) << "->"
                                                   << cat.label(t) << ")";
                                                worst.update(r, os.str());
                                            }
                                        }
                            }
        }
    return worst;
}

long basis_pos(const std::vector<std::array<int, 3>>& basis, int a, int b,
               int c) {
    for (size_t s = 0; s < basis.size(); ++s)
        if (basis[s] == std::array<int, 3>{a, b, c}) return long(s);
    return -1;
}

// Hexagon on (a,b,c) -> d: braiding a across the fused pair b@c in one step
// equals the F-conjugated composite of the two adjacent braids. sign +1 uses
// the stored braiding, sign -1 its inverse.
Worst hexagon_tuple(const CategoryData& cat, int a, int b, int c, int d,
                    int sign) {
    Worst worst;
    auto rmat = [&](int p, int q, int r) -> Mat {
        if (sign > 0) return cat.Rblock(p, q, r);
        Mat mi = cat.Rblock(q, p, r);
        return mi.rows() ? Mat(mi.inverse()) : mi;
    };

    auto rb1 = cat.fblock_right_basis(b, c, a, d);  // (h, p:(c,a)->h, q)
    auto rb2 = cat.fblock_right_basis(b, a, c, d);  // (h, p':(a,c)->h, q)
    auto lb2 = cat.fblock_left_basis(b, a, c, d);   // (x, i':(b,a)->x, j)
    auto lb3 = cat.fblock_left_basis(a, b, c, d);   // (x, i:(a,b)->x, j)
    auto lb1 = cat.fblock_left_basis(b, c, a, d);   // (g, k, m:(g,a)->d)
    auto rb3 = cat.fblock_right_basis(a, b, c, d);  // (f, k', l:(a,f)->d)
    if (lb1.empty() || rb3.empty()) return worst;

    Mat braid_mid = Mat::Zero(long(rb1.size()), long(rb2.size()));
    for (size_t r = 0; r < rb1.size(); ++r) {
        auto [h, p, q] = rb1[r];
        Mat blk = rmat(a, c, h);
        for (int pp = 0; pp < cat.N(a, c, h); ++pp) {
            long col = basis_pos(rb2, h, pp, q);
            if (col >= 0) braid_mid(long(r), col) = blk(p, pp);
        }
    }
    Mat braid_first = Mat::Zero(long(lb2.size()), long(lb3.size()));
    for (size_t r = 0; r < lb2.size(); ++r) {
        auto [x, ip, j] = lb2[r];
        Mat blk = rmat(a, b, x);
        for (int i = 0; i < cat.N(a, b, x); ++i) {
            long col = basis_pos(lb3, x, i, j);
            if (col >= 0) braid_first(long(r), col) = blk(ip, i);
        }
    }
    Mat one = cat.Fblock(b, c, a, d) * braid_mid * cat.Fblock_inv(b, a, c, d) *
              braid_first * cat.Fblock(a, b, c, d);

    Mat two = Mat::Zero(long(lb1.size()), long(rb3.size()));
    for (size_t r = 0; r < lb1.size(); ++r) {
        auto [g, k, m] = lb1[r];
        Mat blk = rmat(a, g, d);
        for (int l = 0; l < cat.N(a, g, d); ++l) {
            long col = basis_pos(rb3, g, k, l);
            if (col >= 0) two(long(r), col) = blk(m, l);
        }
    }
    double res = (one - two).cwiseAbs().maxCoeff();
    std::ostringstream os;
    os << (sign > 0 ? "hex+(" : "hex-(") << cat.label(a) << ","
       << cat.label(b) << "," << cat.label(c) << "->" << cat.label(d) << ")";
    worst.update(res, os.str());
    return worst;
}

}  // namespace

CheckReport validate_category(const CategoryData& cat, double tol,
                              int threads) {
    CheckReport rep;
    const int n = cat.n();
    const int e = cat.unit;

    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                w.update(std::abs(cat.N(e, a, b) - (a == b ? 1 : 0)),
                         "N(e," + cat.label(a) + ";" + cat.label(b) + ")");
                w.update(std::abs(cat.N(a, e, b) - (a == b ? 1 : 0)),
                         "N(" + cat.label(a) + ",e;" + cat.label(b) + ")");
            }
        rep.add("fusion-unit", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int base = cat.N(a, b, c);
                    w.update(std::abs(base - cat.N(b, a, c)), "commutativity");
                    w.update(std::abs(base - cat.N(cat.dual[b], cat.dual[a],
                                                   cat.dual[c])),
                             "dual symmetry");
                    if (c == e)
                        w.update(std::abs(base - (b == cat.dual[a] ? 1 : 0)),
                                 "dual pairing " + cat.label(a));
                }
        rep.add("fusion-symmetry", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a) {
            Eigen::MatrixXd Na(n, n);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) Na(b, c) = cat.N(a, b, c);
            Eigen::EigenSolver<Eigen::MatrixXd> es(Na);
            double lead = 0.0;
            for (int i = 0; i < n; ++i)
                lead = std::max(lead, es.eigenvalues()[i].real());
            w.update(std::abs(lead - cat.dims[a]), "dim " + cat.label(a));
        }
        rep.add("dims-perron", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double s = 0.0;
                for (int c = 0; c < n; ++c) s += cat.N(a, b, c) * cat.dims[c];
                w.update(std::abs(cat.dims[a] * cat.dims[b] - s),
                         "dim(" + cat.label(a) + ")dim(" + cat.label(b) + ")");
            }
        rep.add("dim-equation", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        w.update(std::abs(cat.twists[e] - cplx(1.0)), "twist of unit");
        w.update(std::abs(cat.dims[e] - 1.0), "dim of unit");
        for (int a = 0; a < n; ++a) {
            w.update(std::abs(cat.twists[a] - cat.twists[cat.dual[a]]),
                     "twist dual " + cat.label(a));
            w.update(std::abs(cat.dims[a] - cat.dims[cat.dual[a]]),
                     "dim dual " + cat.label(a));
            w.update(std::abs(cat.fs[a] - cat.fs[cat.dual[a]]),
                     "fs dual " + cat.label(a));
        }
        rep.add("unit-dual-scalars", w.residual, tol, w.witness,
                sw.elapsed_ms());
    }
    {
        // Unit-label F blocks must be the identity in the tree bases.
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (a != e && b != e && c != e) continue;
                        auto lb = cat.fblock_left_basis(a, b, c, d);
                        auto rb = cat.fblock_right_basis(a, b, c, d);
                        if (lb.empty()) continue;
                        const Mat& m = cat.Fblock(a, b, c, d);
                        for (size_t r = 0; r < lb.size(); ++r)
                            for (size_t s = 0; s < rb.size(); ++s) {
                                // With a unit label the two bases match 1:1 in
                                // enumeration order.
                                double want = (r == s) ? 1.0 : 0.0;
                                w.update(std::abs(m(long(r), long(s)) - want),
                                         fkey_str(cat, FKey{a, b, c, d, lb[r][0],
                                                            rb[s][0], lb[r][1],
                                                            lb[r][2], rb[s][1],
                                                            rb[s][2]}));
                            }
                    }
        rep.add("unit-F-identity", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        auto lb = cat.fblock_left_basis(a, b, c, d);
                        auto rb = cat.fblock_right_basis(a, b, c, d);
                        if (lb.size() != rb.size())
                            w.update(1.0, "F block not square " +
                                              fkey_str(cat, FKey{a, b, c, d, 0,
                                                                 0, 0, 0, 0, 0}));
                        if (lb.empty()) continue;
                        const Mat& m = cat.Fblock(a, b, c, d);
                        const Mat& mi = cat.Fblock_inv(a, b, c, d);
                        Mat idm = m * mi;
                        w.update((idm - Mat::Identity(idm.rows(), idm.cols()))
                                     .cwiseAbs()
                                     .maxCoeff(),
                                 "F inverse (" + cat.label(a) + cat.label(b) +
                                     cat.label(c) + ";" + cat.label(d) + ")");
                    }
        rep.add("F-invertibility", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        // Monodromy in each channel is the scalar theta_c/(theta_a theta_b).
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (!cat.admissible(a, b, c)) continue;
                    Mat m = cat.Rblock(b, a, c) * cat.Rblock(a, b, c);
                    cplx want = cat.twists[c] / (cat.twists[a] * cat.twists[b]);
                    Mat diff = m - want * Mat::Identity(m.rows(), m.cols());
                    w.update(diff.cwiseAbs().maxCoeff(),
                             "monodromy (" + cat.label(a) + "," + cat.label(b) +
                                 "->" + cat.label(c) + ")");
                }
        rep.add("ribbon-balancing", w.residual, tol, w.witness,
                sw.elapsed_ms());
    }
    {
        // theta_a R^{aa}_e = kappa_a, gauge invariant for self-dual labels.
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a) {
            if (cat.dual[a] != a) continue;
            cplx v = cat.twists[a] * cat.Rv(a, a, e, 0, 0);
            w.update(std::abs(v - cplx(double(cat.fs[a]))),
                     "fs " + cat.label(a));
        }
        rep.add("pivotal-selfdual", w.residual, tol, w.witness,
                sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        cplx pp = cat.p_plus(), pm = cat.p_minus();
        cplx phase = std::exp(cplx(0.0, -2.0 * kPi * cat.cmod8 / 8.0));
        cplx D = pm * phase;
        double dsq = 0.0;
        for (int a = 0; a < n; ++a) dsq += cat.dims[a] * cat.dims[a];
        Worst w;
        w.update(std::abs(pm * phase - pp / phase), "p- vs p+ at cmod8");
        w.update(std::abs(D * D - cplx(dsq)), "D^2 vs sum of dim^2");
        w.update(std::abs(pp * pm - cplx(dsq)), "p+ p- vs D^2");
        rep.add("charge-D-relation", w.residual, tol, w.witness,
                sw.elapsed_ms());
    }

    // Pentagon and hexagons, optionally split across workers by tuple index.
    {
        Stopwatch sw;
        std::vector<std::array<int, 5>> tuples;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int t = 0; t < n; ++t)
                            tuples.push_back({a, b, c, d, t});
        int nw = std::max(1, threads);
        std::vector<std::future<Worst>> futs;
        for (int wkr = 0; wkr < nw; ++wkr)
            futs.push_back(std::async(
                nw == 1 ? std::launch::deferred : std::launch::async,
                [&, wkr]() {
                    Worst local;
                    for (size_t i = wkr; i < tuples.size(); i += size_t(nw)) {
                        auto& t = tuples[i];
                        local.update(pentagon_tuple(cat, t[0], t[1], t[2],
                                                    t[3], t[4]));
                    }
                    return local;
                }));
        Worst w;
        for (auto& f : futs) w.update(f.get());
        rep.add("pentagon", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    for (int sign : {+1, -1}) {
        Stopwatch sw;
        std::vector<std::array<int, 4>> tuples;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) tuples.push_back({a, b, c, d});
        int nw = std::max(1, threads);
        std::vector<std::future<Worst>> futs;
        for (int wkr = 0; wkr < nw; ++wkr)
            futs.push_back(std::async(
                nw == 1 ? std::launch::deferred : std::launch::async,
                [&, wkr]() {
                    Worst local;
                    for (size_t i = wkr; i < tuples.size(); i += size_t(nw)) {
                        auto& t = tuples[i];
                        local.update(
                            hexagon_tuple(cat, t[0], t[1], t[2], t[3], sign));
                    }
                    return local;
                }));
        Worst w;
        for (auto& f : futs) w.update(f.get());
        rep.add(sign > 0 ? "hexagon-plus" : "hexagon-minus", w.residual, tol,
                w.witness, sw.elapsed_ms());
    }
    return rep;
}

MirrorCharge mirror_charge_hint(const CategoryData& cat) {
    MirrorCharge out;
    cplx pm = cat.p_minus();
    if (std::abs(pm) < 1e-12) {
        out.value = 0.0;
        out.degenerate = true;
        out.note = "p_minus vanishes";
        return out;
    }
    double c = 4.0 * std::arg(pm) / kPi;  // in (-4, 4]
    // Rationalize with a small denominator when the value is within 1e-6.
    for (int den = 1; den <= 64; ++den) {
        double num = std::round(c * den);
        if (std::abs(c - num / den) < 1e-6) {
            c = num / den;
            break;
        }
    }
    if (c <= -4.0) c += 8.0;
    if (c > 4.0) c -= 8.0;
    out.value = c;
    return out;
}

}  // namespace mtc
