#include "singlip/verify.hpp"

#include "singlip/tower.hpp"

#include <algorithm>

namespace singlip {

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

namespace {

void laufer_checks(const DualGraph& g, VerifyReport& rep) {
    for (const auto& n : g.function_names())
        for (std::size_t j = 0; j < g.size(); ++j) {
            long r = g.laufer_residual(static_cast<int>(j), n);
            rep.checks.push_back({"laufer[" + n + "] " + g.vertices[j].id, r == 0, std::to_string(r)});
        }
}

}  // namespace

VerifyReport verify_graph(const DualGraph& g) {
    VerifyReport rep;
    rep.checks.push_back({"connected", g.connected(), ""});
    auto m = g.intersection_matrix();
    bool nd = negative_definite(m);
    rep.checks.push_back({"negative-definite", nd, ""});
    laufer_checks(g, rep);
    if (g.base == GraphBase::Plane) {
        Rational det = determinant(m);
        bool unimodular = det == Rational(1) || det == Rational(-1);
        rep.checks.push_back({"unimodular", unimodular, "det " + det.str()});
        auto t = verify_tower(g);
        bool rates_ok = true;
        std::string detail;
        for (const auto& v : t.violations)
            if (v.find("laufer") == std::string::npos && v.find("det") == std::string::npos) {
                rates_ok = false;
                detail += (detail.empty() ? "" : "; ") + v;
            }
        rep.checks.push_back({"tower-shape-and-rates", rates_ok, detail});
    }
    return rep;
}

VerifyReport verify_curve(const Curve& c) {
    VerifyReport rep;
    auto q = contact_matrix(c);
    std::size_t j = 0, k = 0, l = 0;
    bool um = q.is_ultrametric(&j, &k, &l);
    rep.checks.push_back({"ultrametric", um,
                          um ? "" : "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")"});
    auto t = resolve_curve(c);
    for (auto& ch : verify_graph(t.tree).checks) {
        ch.name = "resolution " + ch.name;
        rep.checks.push_back(ch);
    }
    return rep;
}

}  // namespace singlip
